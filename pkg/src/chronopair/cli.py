"""Scenario runner: preset catalog access, configuration parsing,
pipeline orchestration and CSV export.

Subcommands: run, sweep, presets, dump-dispersion, gauss.
Exit codes: 0 success, 2 usage error, 3 physics-domain error,
4 numerical error.

All numeric inputs take SI values with optional unit suffixes
(nm, um, mm, fs, ps, fs2, deg, THz).  Note that "THz" follows the
source catalog's usage and denotes Trad/s (angular frequency), not
cyclic terahertz: the catalog's bandwidth columns satisfy
d_omega = 2*pi*c*d_lambda/lambda^2.
"""
import argparse
import hashlib
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .dispersion import (CrystalSpec, Interaction, Material, Polarization,
                         SELLMEIER, gvm_params)
from .errors import NumericalError, PhysicsDomainError
from .gaussmodel import (GaussParams, analytic_summary,
                         duration_bandwidth_check, chirp_param)
from .presets import PRESETS, get_preset
from .singlephoton import (antidiagonal_width, fwhm, purity_schmidt,
                           purity_trace, reduce_density, spectral_intensity,
                           temporal_intensity, to_diagonal_view,
                           wigner_from_density)
from .twophoton import (FilterTarget, PumpSpec, apply_filter, build_jsa,
                        default_grid, gaussian_grid, gaussian_jsa,
                        ridge_curvature)
from .units import parse_quantity

FMT = "%.15g"


class UsageError(ValueError):
    pass


@dataclass
class RunConfig:
    """Fully resolved inputs of one pipeline run."""
    crystal: CrystalSpec
    pump: PumpSpec
    heralded_polarization: Polarization
    preset_name: str = ""
    grid_size: int = 512
    filter_fwhm: float = None
    filter_which: FilterTarget = FilterTarget.BOTH
    filter_center: float = None
    output_dir: Path = None
    emit: tuple = ("scalars",)

    def config_lines(self):
        # %.17g keeps doubles exact across a dump/parse round trip
        lines = [
            f"material={self.crystal.material.value}",
            f"interaction={self.crystal.interaction.value}",
            f"cut_angle={self.crystal.cut_angle:.17g}rad",
            f"length={self.crystal.length:.17g}",
            f"pump_wavelength={self.pump.center_wavelength:.17g}",
            f"pump_bandwidth={self.pump.intensity_fwhm_bandwidth:.17g}",
            f"beta={self.pump.chirp:.17g}",
            f"heralded_polarization={self.heralded_polarization.value}",
            f"grid={self.grid_size}",
            f"emit={','.join(self.emit)}",
        ]
        if self.preset_name:
            lines.insert(0, f"preset={self.preset_name}")
        if self.filter_fwhm is not None:
            center = "" if self.filter_center is None else f":{self.filter_center:.17g}"
            lines.append(f"filter={self.filter_fwhm:.17g}:"
                         f"{self.filter_which.value}{center}")
        return lines


@dataclass
class RunReport:
    scalars: dict
    files: dict = field(default_factory=dict)  # name -> sha256
    wall_time: float = 0.0


EMIT_CHOICES = ("jsa", "density", "wigner", "scalars", "gauss")


def _parse_bandwidth(text, wavelength):
    """Pump bandwidth: wavelength suffixes are FWHM in wavelength and
    get converted at the pump wavelength; THz/rad/s/bare are angular."""
    t = str(text).strip().lower()
    value = parse_quantity(text)
    if t.endswith(("nm", "um")) or (t.endswith("m") and not t.endswith(("nm", "um"))):
        return 2.0 * np.pi * 299792458.0 * value / wavelength**2
    return value


def _read_config_file(path):
    pairs = {}
    for raw in Path(path).read_text().splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise UsageError(f"malformed config line {raw!r} (expected key=value)")
        key, value = line.split("=", 1)
        pairs[key.strip()] = value.strip()
    return pairs


def _positive(name, value):
    if value <= 0:
        raise UsageError(f"{name} must be > 0, got {value}")
    return value


def load_config(args):
    """Resolve a RunConfig from parsed argparse flags (+ optional
    key=value config file).  Precedence: flags > config file > preset."""
    pairs = _read_config_file(args.config) if args.config else {}

    def pick(flag_value, key):
        return flag_value if flag_value is not None else pairs.get(key)

    preset_name = pick(args.preset, "preset")
    preset = get_preset(preset_name) if preset_name else None
    if preset is None:
        required = ("material", "interaction", "cut_angle", "length",
                    "pump_wavelength", "pump_bandwidth")
        got = {
            "material": pick(args.material, "material"),
            "interaction": pick(args.interaction, "interaction"),
            "cut_angle": pick(args.cut_angle, "cut_angle"),
            "length": pick(args.length, "length"),
            "pump_wavelength": pick(args.pump_wavelength, "pump_wavelength"),
            "pump_bandwidth": pick(args.pump_bandwidth, "pump_bandwidth"),
        }
        missing = [k for k in required if got[k] is None]
        if missing:
            raise UsageError(
                "no preset given and explicit source incomplete; missing: "
                + ", ".join(missing))
        material = Material(str(got["material"]).lower())
        interaction = Interaction(str(got["interaction"]).lower())
        wavelength = _positive("pump_wavelength", parse_quantity(got["pump_wavelength"]))
        crystal = CrystalSpec(material, interaction,
                              parse_quantity(got["cut_angle"]),
                              _positive("length", parse_quantity(got["length"])))
        bandwidth = _positive("pump_bandwidth",
                              _parse_bandwidth(got["pump_bandwidth"], wavelength))
        pump = PumpSpec(wavelength, bandwidth)
        heralded = None
    else:
        crystal, pump = preset.crystal, preset.pump
        heralded = preset.heralded_polarization

    beta_text = pick(args.beta, "beta")
    if beta_text is not None:
        pump = pump.with_chirp(parse_quantity(beta_text))
    pol_text = pick(args.heralded_pol, "heralded_polarization")
    if pol_text is not None:
        heralded = Polarization(str(pol_text).lower())
    if heralded is None:
        heralded = (Polarization.ORDINARY)

    grid_text = pick(args.grid, "grid")
    grid_size = int(grid_text) if grid_text is not None else 512
    if grid_size < 128 or grid_size > 4096 or grid_size & (grid_size - 1):
        raise UsageError(f"grid must be a power of two in [128, 4096], got {grid_size}")

    filter_fwhm = filter_center = None
    filter_which = FilterTarget.BOTH
    filter_parts = args.filter if args.filter else (
        pairs["filter"].split(":") if "filter" in pairs else None)
    if filter_parts:
        if len(filter_parts) not in (2, 3):
            raise UsageError("--filter takes WIDTH WHICH [CENTER]")
        width_text = filter_parts[0]
        w = parse_quantity(width_text)
        if str(width_text).strip().lower().endswith(("nm", "um")):
            # width given in wavelength at the degenerate daughter
            lam_d = 2.0 * pump.center_wavelength
            w = 2.0 * np.pi * 299792458.0 * w / lam_d**2
        filter_fwhm = _positive("filter width", w)
        try:
            filter_which = FilterTarget(str(filter_parts[1]).lower())
        except ValueError:
            raise UsageError(f"filter target must be one of "
                             f"{[t.value for t in FilterTarget]}") from None
        if len(filter_parts) == 3:
            filter_center = parse_quantity(filter_parts[2])

    emit_text = pick(args.emit, "emit")
    emit = tuple(s.strip() for s in emit_text.split(",")) if emit_text else ("scalars",)
    for e in emit:
        if e not in EMIT_CHOICES:
            raise UsageError(f"unknown emit target {e!r}; choices: {EMIT_CHOICES}")

    out_text = pick(args.out, "out")
    return RunConfig(crystal=crystal, pump=pump, heralded_polarization=heralded,
                     preset_name=preset_name or "", grid_size=grid_size,
                     filter_fwhm=filter_fwhm, filter_which=filter_which,
                     filter_center=filter_center,
                     output_dir=Path(out_text) if out_text else None,
                     emit=emit)


def _write(path, text, files):
    path.write_text(text)
    files[path.name] = hashlib.sha256(text.encode()).hexdigest()


def _csv_rows(header, rows, comment=None):
    lines = []
    if comment:
        lines.append(comment)
    lines.append(header)
    lines.extend(rows)
    return "\n".join(lines) + "\n"


def export_jsa_csv(jsa):
    g = jsa.grid
    comment = (f"# axis: signal rad/s n={g.signal_axis.size} "
               f"start={FMT % g.signal_axis[0]} step={FMT % g.signal_step}; "
               f"idler rad/s n={g.idler_axis.size} "
               f"start={FMT % g.idler_axis[0]} step={FMT % g.idler_step}")
    ws, wi = g.mesh()
    f = jsa.amplitude
    rows = [
        ",".join(FMT % v for v in vals)
        for vals in zip(ws.ravel(), wi.ravel(), f.real.ravel(), f.imag.ravel(),
                        (np.abs(f) ** 2).ravel())
    ]
    return _csv_rows("omega_s,omega_i,re,im,abs2", rows, comment)


def export_density_csv(dm):
    w1, w2 = np.meshgrid(dm.axis, dm.axis, indexing="ij")
    r = dm.rho
    rows = [
        ",".join(FMT % v for v in vals)
        for vals in zip(w1.ravel(), w2.ravel(), r.real.ravel(), r.imag.ravel(),
                        np.abs(r).ravel())
    ]
    return _csv_rows("omega1,omega2,re,im,abs", rows)


def export_wigner_csv(wg):
    w, t = np.meshgrid(wg.omega_axis, wg.time_axis, indexing="ij")
    rows = [
        ",".join(FMT % v for v in vals)
        for vals in zip(w.ravel(), t.ravel(), wg.w.ravel())
    ]
    return _csv_rows("omega,t,w", rows)


def _scalar_csv(scalars):
    return _csv_rows("key,value",
                     [f"{k},{FMT % v if isinstance(v, float) else v}"
                      for k, v in scalars.items()])


def run(config):
    """Execute the pipeline for one configuration and write requested
    exports.  Returns a RunReport."""
    t_start = time.perf_counter()
    stage = "grid construction"
    try:
        grid = default_grid(config.crystal, config.pump, n=config.grid_size,
                            signal_polarization=config.heralded_polarization)
        stage = "joint spectral amplitude"
        jsa = build_jsa(config.crystal, config.pump, grid,
                        signal_polarization=config.heralded_polarization)
        efficiency = 1.0
        if config.filter_fwhm is not None:
            stage = "spectral filter"
            center = (config.filter_center if config.filter_center is not None
                      else config.pump.center_frequency / 2.0)
            res = apply_filter(jsa, center, config.filter_fwhm, config.filter_which)
            jsa, efficiency = res.jsa, res.heralding_efficiency
        stage = "density reduction"
        dm = reduce_density(jsa)
        p_trace = purity_trace(dm)
        schmidt = purity_schmidt(jsa)
        stage = "diagonal rotation"
        dv = to_diagonal_view(dm)
        sigma_prime = antidiagonal_width(dv)
        stage = "Wigner transform"
        wg = wigner_from_density(dv)
        i_w = spectral_intensity(dm)
        t_axis, i_t = temporal_intensity(dv)
        stage = "Gaussian model"
        gvm = gvm_params(config.crystal, config.pump.center_frequency,
                         signal_polarization=config.heralded_polarization)
        gp = GaussParams(sigma=config.pump.amplitude_sigma, beta=config.pump.chirp,
                         tau_s=gvm.tau_s, tau_i=gvm.tau_i)
        chirp_analytic = chirp_param(gp)
    except (PhysicsDomainError, NumericalError) as exc:
        exc.args = (f"[stage: {stage}] {exc}",)
        raise

    scalars = {
        "preset": config.preset_name or "custom",
        "beta": float(config.pump.chirp),
        "grid_n": float(config.grid_size),
        "purity_trace": p_trace,
        "purity_schmidt": schmidt.purity,
        "schmidt_number": schmidt.schmidt_number,
        "sigma_prime": sigma_prime,
        "spectral_intensity_fwhm": fwhm(dm.axis, i_w),
        "temporal_intensity_fwhm": fwhm(t_axis, i_t),
        "chirp_analytic": chirp_analytic,
        "heralding_efficiency": efficiency,
        "tau_s": gvm.tau_s,
        "tau_i": gvm.tau_i,
        "ridge_curvature": ridge_curvature(jsa),
    }

    files = {}
    if config.output_dir is not None:
        out = config.output_dir
        out.mkdir(parents=True, exist_ok=True)
        _write(out / "config.txt", "\n".join(config.config_lines()) + "\n", files)
        if "scalars" in config.emit:
            _write(out / "scalars.csv", _scalar_csv(scalars), files)
        if "jsa" in config.emit:
            _write(out / "jsa.csv", export_jsa_csv(jsa), files)
        if "density" in config.emit:
            _write(out / "density.csv", export_density_csv(dm), files)
        if "wigner" in config.emit:
            _write(out / "wigner.csv", export_wigner_csv(wg), files)
        if "gauss" in config.emit:
            _write(out / "gauss.csv", _scalar_csv(_gauss_scalars(gp)), files)
        manifest = _csv_rows("file,sha256",
                             [f"{name},{digest}" for name, digest in sorted(files.items())])
        (out / "manifest.csv").write_text(manifest)

    return RunReport(scalars=scalars, files=files,
                     wall_time=time.perf_counter() - t_start)


def sweep(config, beta_values):
    """One pipeline run per beta; returns the sweep CSV text with
    monotonicity diagnostics appended as comments."""
    rows = []
    purities = []
    for beta in beta_values:
        cfg = RunConfig(crystal=config.crystal,
                        pump=config.pump.with_chirp(beta),
                        heralded_polarization=config.heralded_polarization,
                        preset_name=config.preset_name,
                        grid_size=config.grid_size,
                        filter_fwhm=config.filter_fwhm,
                        filter_which=config.filter_which,
                        filter_center=config.filter_center,
                        output_dir=None, emit=())
        rep = run(cfg)
        s = rep.scalars
        purities.append(s["purity_trace"])
        rows.append(",".join(FMT % v for v in (
            beta, s["purity_trace"], s["schmidt_number"],
            s["temporal_intensity_fwhm"], s["chirp_analytic"])))
    mono = all(purities[i + 1] <= purities[i] + 1e-12 for i in range(len(purities) - 1))
    text = _csv_rows("beta,purity,schmidt_number,temporal_fwhm,chirp_analytic", rows)
    text += f"# purity_nonincreasing,{str(mono).lower()}\n"
    return text


def _gauss_scalars(params, numeric_purity=None):
    summary = analytic_summary(params)
    out = {
        "sigma": params.sigma,
        "beta": params.beta,
        "tau_s": params.tau_s,
        "tau_i": params.tau_i,
        "delta_omega": summary.delta_omega,
        "delta_t": summary.delta_t,
        "chirp": summary.chirp,
        "anticorrelated_limit": str(summary.anticorrelated_limit).lower(),
    }
    if numeric_purity is not None:
        residual = duration_bandwidth_check(params, numeric_purity)
        out["numeric_purity"] = numeric_purity
        out["duration_bandwidth_residual"] = (
            "skipped" if residual is None else residual)
    return out


def cmd_presets(args):
    if args.name:
        preset = get_preset(args.name)
        if args.as_config:
            cfg = RunConfig(crystal=preset.crystal, pump=preset.pump,
                            heralded_polarization=preset.heralded_polarization,
                            preset_name="")
            print("\n".join(cfg.config_lines()))
            return 0
        items = [preset]
    else:
        items = [PRESETS[k] for k in sorted(PRESETS)]
    print("name,material,interaction,length,cut_angle_deg,pump_wavelength,"
          "pump_bandwidth,pump_duration,heralded_polarization")
    for p in items:
        print(",".join([
            p.name, p.crystal.material.value, p.crystal.interaction.value,
            FMT % p.crystal.length, FMT % np.degrees(p.crystal.cut_angle),
            FMT % p.pump.center_wavelength, FMT % p.pump.intensity_fwhm_bandwidth,
            FMT % p.pump.transform_limited_duration, p.heralded_polarization.value,
        ]))
    return 0


def cmd_dump_dispersion(args):
    del args
    print("material,polarization,coefficient_name,value")
    for (material, pol), coeffs in SELLMEIER.items():
        for name in ("a", "b", "c", "d", "e"):
            print(f"{material.value},{pol.value},{name},{FMT % getattr(coeffs, name)}")
        print(f"{material.value},{pol.value},window_min_m,{FMT % coeffs.window[0]}")
        print(f"{material.value},{pol.value},window_max_m,{FMT % coeffs.window[1]}")
    return 0


def cmd_run(args):
    config = load_config(args)
    report = run(config)
    for key, value in report.scalars.items():
        print(f"{key},{FMT % value if isinstance(value, float) else value}")
    print(f"wall_time_s,{report.wall_time:.3f}")
    for name, digest in sorted(report.files.items()):
        print(f"file,{name},{digest}")
    return 0


def cmd_sweep(args):
    config = load_config(args)
    betas = [parse_quantity(b) for b in args.betas.split(",")]
    text = sweep(config, betas)
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        (out / "sweep.csv").write_text(text)
    print(text, end="")
    return 0


def cmd_gauss(args):
    if args.preset:
        preset = get_preset(args.preset)
        beta = parse_quantity(args.beta) if args.beta is not None else 0.0
        params = preset.gauss_params(beta=beta)
    else:
        missing = [n for n, v in (("--sigma", args.sigma), ("--tau-s", args.tau_s),
                                  ("--tau-i", args.tau_i)) if v is None]
        if missing:
            raise UsageError("gauss needs --preset or explicit parameters; "
                             f"missing: {', '.join(missing)}")
        params = GaussParams(
            sigma=parse_quantity(args.sigma),
            beta=parse_quantity(args.beta) if args.beta is not None else 0.0,
            tau_s=parse_quantity(args.tau_s),
            tau_i=parse_quantity(args.tau_i),
            gamma=float(args.gamma))
    numeric_purity = None
    if not params.is_anticorrelated_limit():
        grid = gaussian_grid(params, n=min(args.grid or 512, 1024))
        numeric_purity = purity_schmidt(gaussian_jsa(params, grid)).purity
    for key, value in _gauss_scalars(params, numeric_purity).items():
        print(f"{key},{FMT % value if isinstance(value, float) else value}")
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="chronopair",
        description="Chronocyclic simulation of heralded SPDC photons")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_source_flags(p):
        p.add_argument("--preset", help="named source preset")
        p.add_argument("--config", help="key=value config file")
        p.add_argument("--material", help="bbo or kdp")
        p.add_argument("--interaction", help="type-i or type-ii")
        p.add_argument("--cut-angle", dest="cut_angle", help="e.g. 29.2deg")
        p.add_argument("--length", help="e.g. 2mm")
        p.add_argument("--pump-wavelength", dest="pump_wavelength", help="e.g. 400nm")
        p.add_argument("--pump-bandwidth", dest="pump_bandwidth",
                       help="FWHM, e.g. 5nm or 58.9THz (Trad/s)")
        p.add_argument("--heralded-pol", dest="heralded_pol", help="o or e")
        p.add_argument("--beta", help="quadratic pump chirp, e.g. 8e-26 or 80000fs2")
        p.add_argument("--grid", help="grid points per axis (power of two)")
        p.add_argument("--filter", nargs="+",
                       help="WIDTH WHICH [CENTER], e.g. 100nm both")
        p.add_argument("--out", help="output directory")
        p.add_argument("--emit", help=f"comma list of {','.join(EMIT_CHOICES)}")

    p_run = sub.add_parser("run", help="run one scenario and export CSVs")
    add_source_flags(p_run)
    p_run.set_defaults(func=cmd_run)

    p_sweep = sub.add_parser("sweep", help="run a pump-chirp sweep")
    add_source_flags(p_sweep)
    p_sweep.add_argument("--betas", required=True,
                         help="comma list of chirps, e.g. 0,2e-26,4e-26,8e-26")
    p_sweep.set_defaults(func=cmd_sweep)

    p_presets = sub.add_parser("presets", help="list the source catalog")
    p_presets.add_argument("--name")
    p_presets.add_argument("--as-config", action="store_true")
    p_presets.set_defaults(func=cmd_presets)

    p_dump = sub.add_parser("dump-dispersion",
                            help="dump the Sellmeier coefficient tables as CSV")
    p_dump.set_defaults(func=cmd_dump_dispersion)

    p_gauss = sub.add_parser("gauss", help="closed-form Gaussian-model summary")
    p_gauss.add_argument("--preset")
    p_gauss.add_argument("--sigma", help="pump amplitude width, rad/s")
    p_gauss.add_argument("--tau-s", dest="tau_s")
    p_gauss.add_argument("--tau-i", dest="tau_i")
    p_gauss.add_argument("--beta")
    p_gauss.add_argument("--gamma", default="0.193")
    p_gauss.add_argument("--grid", type=int)
    p_gauss.set_defaults(func=cmd_gauss)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else 0
    try:
        return args.func(args)
    except PhysicsDomainError as exc:
        print(f"physics-domain error: {exc}", file=sys.stderr)
        return 3
    except NumericalError as exc:
        print(f"numerical error: {exc}", file=sys.stderr)
        return 4
    except (UsageError, ValueError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
