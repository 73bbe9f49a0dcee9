"""Continuous Fourier transforms on uniform grids, done with FFTs plus
explicit phase bookkeeping so that axis offsets and the transform
conventions of the physics (signs, 1/2pi factors) survive round trips.

``cft(values, x, sign=s, scale=a)`` approximates

    G(y_m) = a * sum_k values_k * exp(s * 1j * x_k * y_m) * dx

on the conjugate axis y of x, which has M = len(x) points, spacing
dy = 2*pi/(M*dx) and is centered on zero.  Forward/backward pairs with
scales (1/2pi, 1) and opposite signs invert each other exactly on-grid.
"""
import numpy as np


def axis_step(x):
    x = np.asarray(x)
    dx = np.diff(x)
    if x.size < 2 or np.any(dx <= 0) or not np.allclose(dx, dx[0], rtol=1e-9, atol=0.0):
        raise ValueError("axis must be uniform and strictly increasing")
    return (x[-1] - x[0]) / (x.size - 1)


def conjugate_axis(x):
    """Centered axis conjugate to x under the cft conventions."""
    x = np.asarray(x)
    m = x.size
    dy = 2.0 * np.pi / (m * axis_step(x))
    return (np.arange(m) - m // 2) * dy


def cft(values, x, sign=-1, scale=1.0, axis=-1):
    """Quadrature Fourier transform of samples on the uniform axis x.

    Returns (y, G) with y = conjugate_axis(x).  ``sign`` is the sign of
    the exponent i*x*y, ``scale`` a constant prefactor (e.g. 1/2pi).
    Works along ``axis`` of an ndarray.
    """
    if sign not in (-1, +1):
        raise ValueError("sign must be -1 or +1")
    x = np.asarray(x, dtype=float)
    values = np.asarray(values)
    m = x.size
    if values.shape[axis] != m:
        raise ValueError("values length does not match axis")
    dx = axis_step(x)
    y = conjugate_axis(x)

    shape = [1] * values.ndim
    shape[axis] = m
    k = np.arange(m).reshape(shape)
    pre = np.exp(sign * 1j * k * dx * y[0])
    if sign == -1:
        f = np.fft.fft(values * pre, axis=axis)
    else:
        f = m * np.fft.ifft(values * pre, axis=axis)
    post = np.exp(sign * 1j * x[0] * y).reshape(shape)
    return y, scale * dx * post * f


def dft_at(values, x, y, sign=-1, scale=1.0):
    """Direct quadrature sum(values * exp(sign*1j*x*y_m)) * dx * scale at
    arbitrary output points y.  O(len(x)*len(y)); test oracle and small
    transforms only.  Operates on the last axis of ``values``."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    dx = axis_step(x)
    kernel = np.exp(sign * 1j * np.outer(y, x))
    return scale * dx * np.tensordot(np.asarray(values), kernel, axes=([-1], [1]))
