"""Centered sampling grids, signals, and the unitary discrete Fourier transform.

Everything downstream is built on one discretization convention: an even
number N of samples with spacing 1/sqrt(N), centered on the origin.  With
this balanced choice the discrete Fourier transform maps a signal onto the
*same* grid and the transform kernel is exactly unitary with respect to the
spacing-weighted 2-norm.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

MAX_SIGNAL_POINTS = 4096
MAX_SYMBOL_POINTS = 64

# tolerance for deciding whether a requested shift lies on the grid
_GRID_ALIGN_TOL = 1e-9


@dataclass(frozen=True)
class SampleGrid:
    """Uniform centered grid x_n = (n - N/2) * spacing, n = 0..N-1."""

    n_points: int
    spacing: float

    @property
    def points(self) -> np.ndarray:
        return (np.arange(self.n_points) - self.n_points // 2) * self.spacing

    @property
    def length(self) -> float:
        """Total covered interval length N * spacing."""
        return self.n_points * self.spacing

    def refined(self) -> "SampleGrid":
        """Grid with twice the points and half the spacing on the same interval."""
        return SampleGrid(2 * self.n_points, self.spacing / 2)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SampleGrid):
            return NotImplemented
        return self.n_points == other.n_points and abs(
            self.spacing - other.spacing
        ) <= _GRID_ALIGN_TOL * max(self.spacing, other.spacing)

    def __hash__(self) -> int:
        return hash(self.n_points)


def make_grid(n_points: int, max_points: int = MAX_SIGNAL_POINTS) -> SampleGrid:
    """Canonical grid with spacing 1/sqrt(N), covering [-sqrt(N)/2, sqrt(N)/2)."""
    if n_points % 2 != 0:
        raise ValueError(f"n_points must be even, got {n_points}")
    if n_points < 8:
        raise ValueError(f"n_points must be >= 8, got {n_points}")
    if n_points > max_points:
        raise ValueError(f"n_points must be <= {max_points}, got {n_points}")
    return SampleGrid(n_points, 1.0 / np.sqrt(n_points))


def _as_samples(values: np.ndarray, shape: tuple[int, ...]) -> np.ndarray:
    arr = np.asarray(values, dtype=np.complex128)
    if arr.shape != shape:
        raise ValueError(f"samples have shape {arr.shape}, expected {shape}")
    if not np.all(np.isfinite(arr.real)) or not np.all(np.isfinite(arr.imag)):
        raise ValueError("samples contain NaN or Inf")
    arr = arr.copy()
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True)
class Signal1:
    """Complex samples of a function of one real variable on a centered grid."""

    grid: SampleGrid
    samples: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "samples", _as_samples(self.samples, (self.grid.n_points,))
        )

    def norm2(self) -> float:
        """Spacing-weighted 2-norm (discrete L^2 norm)."""
        return float(np.sqrt(self.grid.spacing * np.sum(np.abs(self.samples) ** 2)))


# axis-semantics tags for 2-D fields
AXES_POSITION_FREQUENCY = "position_frequency"
AXES_POSITION_POSITION = "position_position"
AXES_FREQUENCY_FREQUENCY = "frequency_frequency"

_VALID_AXES = (
    AXES_POSITION_FREQUENCY,
    AXES_POSITION_POSITION,
    AXES_FREQUENCY_FREQUENCY,
)


@dataclass(frozen=True)
class Field2:
    """Complex samples of a phase-space function on an N x N centered grid."""

    grid: SampleGrid
    samples: np.ndarray
    axes: str = AXES_POSITION_FREQUENCY

    def __post_init__(self) -> None:
        n = self.grid.n_points
        object.__setattr__(self, "samples", _as_samples(self.samples, (n, n)))
        if self.axes not in _VALID_AXES:
            raise ValueError(f"unknown axes tag {self.axes!r}")

    def norm2(self) -> float:
        """Spacing^2-weighted Frobenius norm (discrete L^2 norm on the plane)."""
        return float(
            np.sqrt(self.grid.spacing**2 * np.sum(np.abs(self.samples) ** 2))
        )


def gaussian(grid: SampleGrid) -> Signal1:
    """The L^2-normalized Gaussian 2^(1/4) exp(-pi t^2) sampled on the grid."""
    t = grid.points
    return Signal1(grid, 2**0.25 * np.exp(-np.pi * t**2).astype(np.complex128))


def gaussian_field(grid: SampleGrid) -> Field2:
    """Tensor product of two 1-D Gaussians, the default 2-D window."""
    g = gaussian(grid).samples
    return Field2(grid, np.outer(g, g))


# -- centered FFT helpers ----------------------------------------------------
#
# _cfft computes sum_m a[m] exp(-2 pi i m_c k_c / N) with both indices
# centered (m_c = m - N/2), which is the kernel of the grid-family DFT.


def _cfft(a: np.ndarray, axis: int = -1) -> np.ndarray:
    return np.fft.fftshift(
        np.fft.fft(np.fft.ifftshift(a, axes=axis), axis=axis), axes=axis
    )


def _cifft(a: np.ndarray, axis: int = -1) -> np.ndarray:
    return np.fft.fftshift(
        np.fft.ifft(np.fft.ifftshift(a, axes=axis), axis=axis), axes=axis
    )


def _cfft2(a: np.ndarray) -> np.ndarray:
    return _cfft(_cfft(a, axis=0), axis=1)


def _cifft2(a: np.ndarray) -> np.ndarray:
    return _cifft(_cifft(a, axis=0), axis=1)


def dft(f: Signal1) -> Signal1:
    """Discrete Fourier transform Ff(xi_k) = spacing * sum_n f(x_n) e^{-2 pi i x_n xi_k}.

    The output lives on the same grid; the map is exactly unitary for the
    spacing-weighted 2-norm.
    """
    return Signal1(f.grid, f.grid.spacing * _cfft(f.samples))


def idft(f: Signal1) -> Signal1:
    """Inverse of :func:`dft`, exact to machine precision."""
    return Signal1(f.grid, _cifft(f.samples) / f.grid.spacing)


def dft2(a: Field2, axes: str = AXES_FREQUENCY_FREQUENCY) -> Field2:
    """2-D discrete Fourier transform with the spacing^2 Riemann factor."""
    return Field2(a.grid, a.grid.spacing**2 * _cfft2(a.samples), axes=axes)


def idft2(a: Field2, axes: str = AXES_POSITION_FREQUENCY) -> Field2:
    return Field2(a.grid, _cifft2(a.samples) / a.grid.spacing**2, axes=axes)


def _oversample2_array(samples: np.ndarray, axis: int = -1) -> np.ndarray:
    """Band-limited interpolation onto the half-spacing grid along one axis.

    Zero-pads the centered spectrum from N to 2N coefficients, splitting the
    Nyquist coefficient symmetrically so that values at the original nodes
    are reproduced exactly.
    """
    samples = np.moveaxis(np.asarray(samples, dtype=np.complex128), axis, -1)
    n = samples.shape[-1]
    c = _cfft(samples)
    padded = np.zeros(samples.shape[:-1] + (2 * n,), dtype=np.complex128)
    padded[..., n // 2 : n // 2 + n] = c
    padded[..., n // 2] *= 0.5
    padded[..., n // 2 + n] = padded[..., n // 2]
    out = 2.0 * _cifft(padded)
    return np.moveaxis(out, -1, axis)


def oversample2(f: Signal1) -> Signal1:
    """Signal on the 2N-point half-spacing grid covering the same interval."""
    return Signal1(f.grid.refined(), _oversample2_array(f.samples))


def subsample2(f: Signal1) -> Signal1:
    """Inverse of :func:`oversample2` on grid nodes (even-index subsampling)."""
    n2 = f.grid.n_points
    if n2 % 4 != 0:
        raise ValueError("subsample2 requires a point count divisible by 4")
    coarse = SampleGrid(n2 // 2, f.grid.spacing * 2)
    return Signal1(coarse, f.samples[::2])


def _aligned_steps(value: float, spacing: float, what: str) -> int:
    steps = value / spacing
    rounded = round(steps)
    if abs(steps - rounded) > _GRID_ALIGN_TOL * max(1.0, abs(steps)):
        raise ValueError(f"{what} {value} is not an integer multiple of {spacing}")
    return int(rounded)


def translate(f: Signal1, x0: float) -> Signal1:
    """Circular translation by a grid-aligned shift: (T_x0 f)(x) = f(x - x0)."""
    steps = _aligned_steps(x0, f.grid.spacing, "shift")
    return Signal1(f.grid, np.roll(f.samples, steps))


def modulate(f: Signal1, xi0: float) -> Signal1:
    """Pointwise multiplication by e^{2 pi i xi0 x} for a grid-aligned xi0."""
    _aligned_steps(xi0, f.grid.spacing, "frequency shift")
    phase = np.exp(2j * np.pi * xi0 * f.grid.points)
    return Signal1(f.grid, f.samples * phase)


def reflect(f: Signal1) -> Signal1:
    """Circular reflection x -> -x on the centered grid."""
    idx = (-np.arange(f.grid.n_points)) % f.grid.n_points
    return Signal1(f.grid, f.samples[idx])


def spike(grid: SampleGrid, index: int) -> Signal1:
    """Unit sample at grid index (a discrete delta)."""
    s = np.zeros(grid.n_points, dtype=np.complex128)
    s[index] = 1.0
    return Signal1(grid, s)
