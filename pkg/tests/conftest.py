"""Shared fixtures: a lazy, session-wide cache of preset pipelines so
the many tests that need (jsa -> density -> rotated view -> Wigner) for
the same configuration compute it once."""
import numpy as np
import pytest

from chronopair.presets import get_preset, preset_jsa
from chronopair.singlephoton import (reduce_density, to_diagonal_view,
                                     wigner_from_density)


class Pipeline:
    """Lazily evaluated stages of one preset configuration."""

    def __init__(self, name, beta=0.0, n=256, filter_spec=None):
        self.preset = get_preset(name)
        self.beta = beta
        self.n = n
        self.filter_spec = filter_spec
        self._stages = {}

    def _get(self, key, build):
        if key not in self._stages:
            self._stages[key] = build()
        return self._stages[key]

    @property
    def jsa(self):
        def build():
            jsa, eff = preset_jsa(self.preset, beta=self.beta, n=self.n,
                                  filter_spec=self.filter_spec)
            self._stages["efficiency"] = eff
            return jsa
        return self._get("jsa", build)

    @property
    def heralding_efficiency(self):
        self.jsa
        return self._stages["efficiency"]

    @property
    def dm(self):
        return self._get("dm", lambda: reduce_density(self.jsa))

    @property
    def dv(self):
        return self._get("dv", lambda: to_diagonal_view(self.dm))

    @property
    def wigner(self):
        return self._get("wigner", lambda: wigner_from_density(self.dv))

    def gauss_params(self):
        return self.preset.gauss_params(beta=self.beta)


@pytest.fixture(scope="session")
def pipelines():
    cache = {}

    def get(name, beta=0.0, n=256, filter_spec=None):
        key = (name, float(beta), int(n), filter_spec)
        if key not in cache:
            cache[key] = Pipeline(name, beta, n, filter_spec)
        return cache[key]

    return get


@pytest.fixture(scope="session")
def rng():
    return np.random.default_rng(20240817)


PRESET_NAMES = ("horizontal", "vertical", "positive", "negative", "circular")
