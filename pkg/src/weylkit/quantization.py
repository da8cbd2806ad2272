"""Weyl, tau, and Kohn-Nirenberg operators built from phase-space symbols.

The fast route assembles the kernel as the exact adjoint of the discrete
Wigner map, so the weak definition <Op(a) f, g> = <a, W(g, f)> holds to
machine precision for all inputs.  The weak route computes the same object
entry by entry, pairing the symbol against cross-Wigner distributions of
basis spikes, and serves as an independent cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .grid import (
    MAX_SYMBOL_POINTS,
    Field2,
    SampleGrid,
    Signal1,
    _cifft,
    _cifft2,
    spike,
)
from .transforms import _chirp_multiply, wigner


@dataclass(frozen=True)
class OperatorMatrix:
    """Dense N x N kernel acting with the grid measure: (Af)_n = spacing * sum_m K[n,m] f_m."""

    grid: SampleGrid
    entries: np.ndarray

    def __post_init__(self) -> None:
        n = self.grid.n_points
        arr = np.asarray(self.entries, dtype=np.complex128)
        if arr.shape != (n, n):
            raise ValueError(f"entries have shape {arr.shape}, expected {(n, n)}")
        if not np.all(np.isfinite(arr.real)) or not np.all(np.isfinite(arr.imag)):
            raise ValueError("entries contain NaN or Inf")
        arr = arr.copy()
        arr.flags.writeable = False
        object.__setattr__(self, "entries", arr)


def _check_symbol(a: Field2) -> SampleGrid:
    if a.grid.n_points > MAX_SYMBOL_POINTS:
        raise ValueError(
            f"symbol-side operations are capped at {MAX_SYMBOL_POINTS} points, "
            f"got {a.grid.n_points}"
        )
    return a.grid


def _check_tau(tau: float) -> float:
    if not 0.0 <= tau <= 1.0:
        raise ValueError(f"tau must lie in [0, 1], got {tau}")
    return float(tau)


def weyl_matrix(a: Field2) -> OperatorMatrix:
    """Weyl operator of a symbol via the weak definition, assembled in one pass.

    Pulls the symbol back through the inverse of the Wigner pipeline
    (symplectic DFT, chirp, STFT), which yields the kernel satisfying
    <Op(a) f, g> = <a, W(g, f)> exactly for every pair of signals.
    """
    grid = _check_symbol(a)
    n = grid.n_points
    idx = np.arange(n)
    refl = (-idx) % n
    # invert the symplectic-FT index permutation of the Wigner map
    ahat = a.samples[np.ix_(refl, idx)].T
    pts = grid.points
    chirp = np.exp(1j * np.pi * np.outer(pts, pts))
    amb = np.conj(chirp) * _cifft2(ahat) / grid.spacing**2
    # S[s, m] = sum_b amb[s, b] e^{2 pi i m_c b_c / N}
    s_table = n * _cifft(amb, axis=1)
    rows = idx[:, None]
    cols = idx[None, :]
    kernel = grid.spacing * s_table[(rows - cols + n // 2) % n, rows]
    return OperatorMatrix(grid, kernel)


def weyl_matrix_weak(a: Field2) -> OperatorMatrix:
    """Weyl operator via the weak definition <Op(a) f, g> = <a, W(g, f)>.

    Entry (n, m) pairs the symbol against the cross-Wigner distribution of
    basis spikes.  Quadratically slower than :func:`weyl_matrix`; intended as
    an independent cross-check route.
    """
    grid = _check_symbol(a)
    n = grid.n_points
    kernel = np.empty((n, n), dtype=np.complex128)
    basis = [spike(grid, i) for i in range(n)]
    for i in range(n):
        for m in range(n):
            w = wigner(basis[i], basis[m]).samples
            kernel[i, m] = np.sum(a.samples * np.conj(w))
    return OperatorMatrix(grid, kernel)


def convert_symbol(a: Field2, tau_from: float, tau_to: float) -> Field2:
    """Symbol conversion between quantizations, exact in the Fourier domain.

    The converted symbol satisfies Op_{tau_to}(result) = Op_{tau_from}(a):
    its spectrum is the input spectrum times e^{-2 pi i (tau_to - tau_from)
    xi1 xi2}.
    """
    t1 = _check_tau(tau_from)
    t2 = _check_tau(tau_to)
    if t1 == t2:
        return a
    samples = _chirp_multiply(a.samples, a.grid, t2 - t1)
    return Field2(a.grid, samples, axes=a.axes)


def tau_matrix(a: Field2, tau: float) -> OperatorMatrix:
    """tau-pseudodifferential operator Op_tau(a).

    Converts the symbol to its Weyl-equivalent form (an exact unimodular
    Fourier multiplier) and assembles the midpoint kernel; tau = 1/2 is
    :func:`weyl_matrix` verbatim.
    """
    t = _check_tau(tau)
    return weyl_matrix(convert_symbol(a, t, 0.5))


def weyl_from_kn(a_kn: Field2) -> Field2:
    """Weyl symbol of the operator with Kohn-Nirenberg symbol a_kn.

    Applies the chirp map F^{-1} N_C F with N_C f(z) = e^{-pi i z1 z2} f(z);
    identical to convert_symbol(a_kn, 0, 1/2).
    """
    return convert_symbol(a_kn, 0.0, 0.5)


def kn_from_weyl(a_weyl: Field2) -> Field2:
    """Kohn-Nirenberg symbol of the operator with Weyl symbol a_weyl (inverse chirp map)."""
    return convert_symbol(a_weyl, 0.5, 0.0)


def apply(op: OperatorMatrix, f: Signal1) -> Signal1:
    """Apply the operator to a signal with the grid measure."""
    if op.grid != f.grid:
        raise ValueError("grid mismatch between operator and signal")
    return Signal1(f.grid, f.grid.spacing * (op.entries @ f.samples))


def frobenius(op: OperatorMatrix) -> float:
    return float(np.linalg.norm(op.entries))
