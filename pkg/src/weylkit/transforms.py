"""Short-time Fourier, Wigner, and tau-Wigner transforms.

All transforms use circular shifts and the centered unitary DFT of
:mod:`weylkit.grid`.  Half-shifts in the Wigner distribution are realized by
factor-2 spectral oversampling, which is exact for band-limited content.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .grid import (
    MAX_SYMBOL_POINTS,
    Field2,
    SampleGrid,
    Signal1,
    AXES_POSITION_FREQUENCY,
    _cfft,
    _cfft2,
    _cifft2,
    _oversample2_array,
)


def _require_same_grid(a, b) -> SampleGrid:
    if a.grid != b.grid:
        raise ValueError(
            f"grid mismatch: {a.grid.n_points} points vs {b.grid.n_points} points"
        )
    return a.grid


def _require_nonzero(g, name: str = "window") -> None:
    if not np.any(g.samples):
        raise ValueError(f"{name} is identically zero")


def stft1(f: Signal1, g: Signal1) -> Field2:
    """Short-time Fourier transform V_g f on the position x frequency grid.

    V_g f(x_n, xi_k) = spacing * sum_y f(y) conj(g(y - x_n)) e^{-2 pi i y xi_k}
    with circular translation of the window.
    """
    grid = _require_same_grid(f, g)
    _require_nonzero(g)
    n = grid.n_points
    # row n uses the window translated by x_n, i.e. rolled by n - N/2
    shifts = np.arange(n) - n // 2
    idx = (np.arange(n)[None, :] - shifts[:, None]) % n
    windows = g.samples[idx]
    v = grid.spacing * _cfft(f.samples[None, :] * np.conj(windows), axis=1)
    return Field2(grid, v, axes=AXES_POSITION_FREQUENCY)


def ambiguity(f: Signal1, g: Signal1) -> Field2:
    """Cross-ambiguity function A(f, g)(x, w) = e^{pi i x w} V_g f(x, w)."""
    v = stft1(f, g)
    pts = v.grid.points
    chirp = np.exp(1j * np.pi * np.outer(pts, pts))
    return Field2(v.grid, chirp * v.samples, axes=AXES_POSITION_FREQUENCY)


def wigner(f: Signal1, g: Signal1) -> Field2:
    """Cross-Wigner distribution W(f, g) on the position x frequency grid.

    W(x, w) = int f(x + y/2) conj(g(x - y/2)) e^{-2 pi i y w} dy, computed as
    the symplectic Fourier transform of the cross-ambiguity function.  Every
    step (STFT, unimodular chirp, 2-D DFT, index permutation) is an exact
    isometry for the spacing-weighted norms, so the Moyal identity holds to
    machine precision for arbitrary inputs.
    """
    grid = _require_same_grid(f, g)
    n = grid.n_points
    amb = ambiguity(f, g)
    ahat = grid.spacing**2 * _cfft2(amb.samples)
    # symplectic FT: W(x_n, w_k) = Ahat[k, index of -x_n]
    w = ahat[np.ix_(np.arange(n), (-np.arange(n)) % n)].T
    return Field2(grid, w, axes=AXES_POSITION_FREQUENCY)


def _chirp_multiply(samples: np.ndarray, grid: SampleGrid, alpha: float) -> np.ndarray:
    """Apply the Fourier-domain multiplier e^{-2 pi i alpha z1 z2} to a field."""
    pts = grid.points
    mult = np.exp(-2j * np.pi * alpha * np.outer(pts, pts))
    return _cifft2(mult * _cfft2(samples))


def tau_wigner(f: Signal1, g: Signal1, tau: float) -> Field2:
    """Cross tau-Wigner distribution W_tau(f, g).

    W_tau(x, w) = int f(x + tau y) conj(g(x - (1 - tau) y)) e^{-2 pi i y w} dy.
    Computed from the tau = 1/2 case through the exact Fourier-domain chirp
    relation between the members of the family; tau = 1/2 reduces to
    :func:`wigner` identically.
    """
    if not 0.0 <= tau <= 1.0:
        raise ValueError(f"tau must lie in [0, 1], got {tau}")
    w = wigner(f, g)
    if tau == 0.5:
        return w
    samples = _chirp_multiply(w.samples, w.grid, tau - 0.5)
    return Field2(w.grid, samples, axes=AXES_POSITION_FREQUENCY)


@dataclass(frozen=True)
class Stft2Result:
    """2-D STFT of a phase-space field: values[z1, z2, zeta1, zeta2]."""

    base_grid: SampleGrid
    values: np.ndarray

    def __post_init__(self) -> None:
        n = self.base_grid.n_points
        arr = np.asarray(self.values, dtype=np.complex128)
        if arr.shape != (n, n, n, n):
            raise ValueError(f"values have shape {arr.shape}, expected {(n,) * 4}")
        if not np.all(np.isfinite(arr.real)) or not np.all(np.isfinite(arr.imag)):
            raise ValueError("values contain NaN or Inf")


def stft2(a: Field2, window: Field2) -> Stft2Result:
    """2-D short-time Fourier transform V_W a(z, zeta) of a symbol.

    For each lattice translation z the windowed field is Fourier transformed
    in both axes, with the spacing^2 Riemann factor applied.
    """
    grid = _require_same_grid(a, window)
    _require_nonzero(window)
    n = grid.n_points
    if n > MAX_SYMBOL_POINTS:
        raise ValueError(
            f"symbol-side operations are capped at {MAX_SYMBOL_POINTS} points, got {n}"
        )
    shifts = np.arange(n) - n // 2
    idx = (np.arange(n)[None, :] - shifts[:, None]) % n  # idx[s] rolls by shift s
    win = window.samples
    out = np.empty((n, n, n, n), dtype=np.complex128)
    for i in range(n):
        # all second-axis translations for the fixed first-axis translation i
        translated = win[idx[i]][:, idx].transpose(1, 0, 2)  # (z2, rows, cols)
        prod = a.samples[None, :, :] * np.conj(translated)
        out[i] = grid.spacing**2 * _cfft2_batch(prod)
    return Stft2Result(grid, out)


def _cfft2_batch(a: np.ndarray) -> np.ndarray:
    """Centered 2-D FFT over the last two axes of a batch."""
    shifted = np.fft.ifftshift(a, axes=(-2, -1))
    return np.fft.fftshift(np.fft.fft2(shifted, axes=(-2, -1)), axes=(-2, -1))


def stft1_fine(f: Signal1, g: Signal1) -> np.ndarray:
    """STFT on the half-spacing lattice over a doubled interval.

    Returns a 4N x 4N array V[p, q] = V_g f(p_c * spacing/2, q_c * spacing/2)
    with centered indices p_c, q_c in [-2N, 2N).  The signals are
    band-limited interpolated onto the half-spacing grid and zero-extended
    to the doubled interval, so window translations do not wrap; this is
    the discretization of the transform on the line (not the circle) and
    supplies the half-integer lattice evaluations of the Wigner
    factorization identity.
    """
    grid = _require_same_grid(f, g)
    _require_nonzero(g)
    n = grid.n_points
    half = grid.spacing / 2
    # embed the oversampled signals in a doubled interval (4N half-spaced points)
    big = np.zeros(4 * n, dtype=np.complex128)
    big[n : 3 * n] = _oversample2_array(f.samples)
    wbig = np.zeros(4 * n, dtype=np.complex128)
    wbig[n : 3 * n] = _oversample2_array(g.samples)

    m = 4 * n
    shifts = np.arange(m) - m // 2
    idx = (np.arange(m)[None, :] - shifts[:, None]) % m
    return half * _cfft(big[None, :] * np.conj(wbig[idx]), axis=1)


def wigner_fine(f: Signal1, g: Signal1) -> np.ndarray:
    """Cross-Wigner distribution on the half-spacing 2N x 2N symbol plane.

    Built from the zero-extended ambiguity data on the doubled frequency
    band, so the full spectrum of the distribution (which reaches twice the
    base Nyquist band) is retained.  Returns raw samples at spacing/2 in
    both axes, centered; entry [i, j] sits at ((i - N) * spacing/2,
    (j - N) * spacing/2).  This is the representation in which the Wigner
    factorization identity holds to spectral accuracy; the coarse
    :func:`wigner` is its band-limited circular counterpart.
    """
    grid = _require_same_grid(f, g)
    n = grid.n_points
    m = 2 * n
    d = grid.spacing
    v = stft1_fine(f, g)
    # ambiguity samples on the spacing-d lattice over the doubled range
    pc = np.arange(m) - n
    vsub = v[np.ix_(2 * pc + 2 * n, 2 * pc + 2 * n)]
    amb = np.exp(1j * np.pi * np.outer(pc * d, pc * d)) * vsub
    # spectrum of the Wigner distribution: What(w1, w2) = A(-w2, w1)
    idx = np.arange(m)
    what = amb[np.ix_((-idx) % m, idx)].T
    return _cifft2(what) / (d / 2) ** 2


def stft2_wigner_fine(f: Signal1, g: Signal1, window: Signal1) -> Stft2Result:
    """2-D STFT of W(g, f) against the window W(window, window), fine route.

    Both Wigner distributions are represented on the half-spacing plane of
    :func:`wigner_fine` and paired there, which keeps the full ambiguity
    spectrum; the result is reported on the usual coarse (z, zeta) lattice.
    Direct side of the factorization identity.
    """
    grid = _require_same_grid(f, g)
    _require_nonzero(window)
    n = grid.n_points
    if n > MAX_SYMBOL_POINTS:
        raise ValueError(
            f"symbol-side operations are capped at {MAX_SYMBOL_POINTS} points, got {n}"
        )
    m = 2 * n
    d = grid.spacing
    w_fine = wigner_fine(g, f)
    phi_fine = wigner_fine(window, window)
    out = np.empty((n, n, n, n), dtype=np.complex128)
    sl = slice(m // 2 - n // 2, m // 2 + n // 2)
    for a in range(n):
        rolled_a = np.roll(phi_fine, 2 * (a - n // 2), axis=0)
        for b in range(n):
            shifted = np.roll(rolled_a, 2 * (b - n // 2), axis=1)
            prod = w_fine * np.conj(shifted)
            out[a, b] = (d / 2) ** 2 * _cfft2(prod)[sl, sl]
    return Stft2Result(grid, out)


def wigner_factorization_sides(
    f: Signal1, g: Signal1, window: Signal1
) -> tuple[np.ndarray, np.ndarray]:
    """Both sides of the Wigner-of-STFT factorization, as magnitude tensors.

    Direct side: |V_Phi W(g, f)(z, zeta)| with Phi the Wigner distribution
    of the window, via :func:`stft2_wigner_fine`.  Factorized side:
    |V_phi f(z + J zeta / 2)| * |V_phi g(z - J zeta / 2)| with
    J(z1, z2) = (z2, -z1), read off the half-spacing STFT lattice.
    """
    grid = _require_same_grid(f, g)
    n = grid.n_points
    direct = np.abs(stft2_wigner_fine(f, g, window).values)
    vf = np.abs(stft1_fine(f, window))
    vg = np.abs(stft1_fine(g, window))
    c = np.arange(n) - n // 2
    a = c[:, None, None, None]
    b = c[None, :, None, None]
    z1 = c[None, None, :, None]
    z2 = c[None, None, None, :]
    off = 2 * n
    factored = (
        vf[2 * a + z2 + off, 2 * b - z1 + off]
        * vg[2 * a - z2 + off, 2 * b + z1 + off]
    )
    return direct, factored
