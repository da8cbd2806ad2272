"""Grid construction, unitary transforms, and shift operators."""

import numpy as np
import pytest

from weylkit.grid import (
    Field2,
    SampleGrid,
    Signal1,
    dft,
    dft2,
    gaussian,
    idft,
    idft2,
    make_grid,
    modulate,
    oversample2,
    reflect,
    spike,
    subsample2,
    translate,
)

from conftest import noise_signal, smooth_random_signal


class TestMakeGrid:
    def test_canonical_spacing(self):
        grid = make_grid(64)
        assert grid.n_points == 64
        assert grid.spacing == pytest.approx(1 / 8)
        assert grid.length == pytest.approx(8.0)

    def test_points_centered(self):
        grid = make_grid(16)
        pts = grid.points
        assert pts[8] == 0.0
        assert pts[0] == pytest.approx(-2.0)
        np.testing.assert_allclose(np.diff(pts), grid.spacing)

    def test_odd_rejected(self):
        with pytest.raises(ValueError):
            make_grid(15)

    def test_too_small_rejected(self):
        with pytest.raises(ValueError):
            make_grid(4)

    def test_cap_enforced(self):
        with pytest.raises(ValueError):
            make_grid(8192)
        with pytest.raises(ValueError):
            make_grid(128, max_points=64)


class TestSignalValidation:
    def test_shape_mismatch(self, grid16):
        with pytest.raises(ValueError):
            Signal1(grid16, np.zeros(8))

    def test_nan_rejected(self, grid16):
        bad = np.zeros(16, dtype=complex)
        bad[3] = np.nan
        with pytest.raises(ValueError):
            Signal1(grid16, bad)

    def test_samples_read_only(self, grid16):
        f = gaussian(grid16)
        with pytest.raises(ValueError):
            f.samples[0] = 1.0

    def test_field_shape(self, grid16):
        with pytest.raises(ValueError):
            Field2(grid16, np.zeros((16, 8)))


class TestDft:
    def test_unitary(self, grid64, rng):
        f = noise_signal(grid64, rng)
        assert dft(f).norm2() == pytest.approx(f.norm2(), rel=1e-12)

    def test_roundtrip(self, grid64, rng):
        f = noise_signal(grid64, rng)
        back = idft(dft(f))
        np.testing.assert_allclose(back.samples, f.samples, atol=1e-12)

    def test_gaussian_fixed_point(self, grid64):
        # the standard Gaussian is its own Fourier transform
        phi = gaussian(grid64)
        np.testing.assert_allclose(dft(phi).samples, phi.samples, atol=1e-12)

    def test_double_transform_is_reflection(self, grid64, rng):
        f = noise_signal(grid64, rng)
        twice = dft(dft(f))
        np.testing.assert_allclose(twice.samples, reflect(f).samples, atol=1e-10)

    def test_translation_modulation_exchange(self, grid64):
        # F(T_a f) = M_{-a} F(f), exact on the self-dual grid
        f = gaussian(grid64)
        a = 5 * grid64.spacing
        lhs = dft(translate(f, a))
        rhs = modulate(dft(f), -a)
        np.testing.assert_allclose(lhs.samples, rhs.samples, atol=1e-12)

    def test_dft2_roundtrip(self, grid16, rng):
        a = Field2(grid16, rng.standard_normal((16, 16)) + 1j * rng.standard_normal((16, 16)))
        back = idft2(dft2(a))
        np.testing.assert_allclose(back.samples, a.samples, atol=1e-12)


class TestShifts:
    def test_translate_requires_aligned_shift(self, grid16):
        f = gaussian(grid16)
        with pytest.raises(ValueError):
            translate(f, 0.3 * grid16.spacing)

    def test_translate_roundtrip(self, grid16, rng):
        f = noise_signal(grid16, rng)
        back = translate(translate(f, 3 * grid16.spacing), -3 * grid16.spacing)
        np.testing.assert_allclose(back.samples, f.samples)

    def test_modulate_magnitude_preserved(self, grid16, rng):
        f = noise_signal(grid16, rng)
        g = modulate(f, 2 * grid16.spacing)
        np.testing.assert_allclose(np.abs(g.samples), np.abs(f.samples))

    def test_reflect_involution(self, grid16, rng):
        f = noise_signal(grid16, rng)
        np.testing.assert_allclose(reflect(reflect(f)).samples, f.samples)

    def test_spike(self, grid16):
        s = spike(grid16, 3)
        assert s.samples[3] == 1.0
        assert np.count_nonzero(s.samples) == 1


class TestOversample:
    def test_nodes_reproduced(self, grid32, rng):
        f = noise_signal(grid32, rng)
        fine = oversample2(f)
        np.testing.assert_allclose(fine.samples[::2], f.samples, atol=1e-12)

    def test_roundtrip(self, grid32, rng):
        f = noise_signal(grid32, rng)
        back = subsample2(oversample2(f))
        assert back.grid == f.grid
        np.testing.assert_allclose(back.samples, f.samples, atol=1e-12)

    def test_band_limited_midpoints(self, grid64):
        # the Gaussian's spectrum is negligible at the Nyquist edge, so the
        # interpolated midpoints must match the continuous values
        phi = gaussian(grid64)
        fine = oversample2(phi)
        t = fine.grid.points
        exact = 2**0.25 * np.exp(-np.pi * t**2)
        np.testing.assert_allclose(fine.samples.real, exact, atol=1e-10)
        np.testing.assert_allclose(fine.samples.imag, 0.0, atol=1e-10)

    def test_grid_equality_tolerance(self):
        a = SampleGrid(16, 0.25)
        b = SampleGrid(16, 0.25 * (1 + 1e-12))
        assert a == b
        assert a != SampleGrid(16, 0.3)
