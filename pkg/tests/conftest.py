"""Shared fixtures and independent oracles for the test suite.

The quadrature oracles evaluate the defining phase-space integrals on a
dense auxiliary grid with plain Riemann/trapezoid summation, completely
independent of the FFT pipeline under test.
"""

import numpy as np
import pytest

from weylkit.grid import Signal1, gaussian, make_grid


def smooth_random_signal(grid, rng, terms=4, spread=1.0):
    """Concentrated Schwartz-type test signal: random Gabor superposition."""
    t = grid.points
    samples = np.zeros(grid.n_points, dtype=np.complex128)
    for _ in range(terms):
        amp = rng.uniform(0.3, 1.0) * np.exp(2j * np.pi * rng.uniform())
        x0 = rng.uniform(-spread, spread)
        xi0 = rng.uniform(-spread, spread)
        samples += amp * np.exp(-np.pi * (t - x0) ** 2) * np.exp(2j * np.pi * xi0 * t)
    return Signal1(grid, samples)


def noise_signal(grid, rng):
    samples = rng.standard_normal(grid.n_points) + 1j * rng.standard_normal(
        grid.n_points
    )
    return Signal1(grid, samples)


def stft_quadrature(f_func, g_func, x, xi, lim=6.0, points=4001):
    """Dense-trapezoid oracle for the windowed Fourier integral.

    V_g f(x, xi) = int f(y) conj(g(y - x)) e^{-2 pi i y xi} dy.
    """
    y = np.linspace(-lim, lim, points)
    integrand = f_func(y) * np.conj(g_func(y - x)) * np.exp(-2j * np.pi * y * xi)
    return np.trapezoid(integrand, y)


def wigner_quadrature(f_func, g_func, x, omega, lim=6.0, points=4001):
    """Dense-trapezoid oracle for the half-shift product integral.

    W(f, g)(x, w) = int f(x + y/2) conj(g(x - y/2)) e^{-2 pi i y w} dy.
    """
    y = np.linspace(-lim, lim, points)
    integrand = (
        f_func(x + y / 2) * np.conj(g_func(x - y / 2)) * np.exp(-2j * np.pi * y * omega)
    )
    return np.trapezoid(integrand, y)


def gauss_func(t):
    return 2**0.25 * np.exp(-np.pi * t**2)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def grid16():
    return make_grid(16)


@pytest.fixture
def grid32():
    return make_grid(32)


@pytest.fixture
def grid64():
    return make_grid(64)


@pytest.fixture
def phi64(grid64):
    return gaussian(grid64)
