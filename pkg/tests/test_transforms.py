"""Phase-space transforms against quadrature and direct-sum oracles."""

import numpy as np
import pytest

from weylkit.grid import (
    Field2,
    Signal1,
    dft,
    gaussian,
    gaussian_field,
    make_grid,
    modulate,
    translate,
)
from weylkit.transforms import (
    ambiguity,
    stft1,
    stft1_fine,
    stft2,
    tau_wigner,
    wigner,
    wigner_factorization_sides,
    wigner_fine,
)

from conftest import (
    gauss_func,
    noise_signal,
    smooth_random_signal,
    stft_quadrature,
    wigner_quadrature,
)


class TestStft1:
    def test_gaussian_closed_form(self, grid64, phi64):
        # |V_phi phi|(x, xi) = e^{-pi (x^2 + xi^2) / 2}; the constant is
        # fixed by the quadrature oracle in test_matches_quadrature
        v = stft1(phi64, phi64)
        pts = grid64.points
        expected = np.exp(-np.pi * (pts[:, None] ** 2 + pts[None, :] ** 2) / 2)
        assert np.max(np.abs(np.abs(v.samples) - expected)) < 1e-6

    def test_matches_quadrature(self, grid64, phi64):
        v = stft1(phi64, phi64)
        pts = grid64.points
        for i, k in [(32, 32), (36, 30), (28, 40), (32, 20)]:
            oracle = stft_quadrature(gauss_func, gauss_func, pts[i], pts[k])
            assert v.samples[i, k] == pytest.approx(oracle, abs=1e-8)

    def test_parseval(self, grid64, rng):
        f = noise_signal(grid64, rng)
        g = noise_signal(grid64, rng)
        v = stft1(f, g)
        total = grid64.spacing**2 * np.sum(np.abs(v.samples) ** 2)
        assert total == pytest.approx(f.norm2() ** 2 * g.norm2() ** 2, rel=1e-10)

    def test_zero_signal(self, grid16):
        f = Signal1(grid16, np.zeros(16))
        v = stft1(f, gaussian(grid16))
        assert np.all(v.samples == 0)

    def test_zero_window_rejected(self, grid16):
        f = gaussian(grid16)
        with pytest.raises(ValueError):
            stft1(f, Signal1(grid16, np.zeros(16)))

    def test_grid_mismatch(self):
        with pytest.raises(ValueError):
            stft1(gaussian(make_grid(16)), gaussian(make_grid(32)))

    def test_covariance(self, grid64, phi64):
        # translating the signal translates the STFT in position and adds
        # a pure phase: magnitudes shift
        x0 = 4 * grid64.spacing
        v0 = np.abs(stft1(phi64, phi64).samples)
        v1 = np.abs(stft1(translate(phi64, x0), phi64).samples)
        np.testing.assert_allclose(v1, np.roll(v0, 4, axis=0), atol=1e-12)

    def test_fundamental_identity(self, grid64, rng):
        # |V_g f(x, xi)| = |V_{Fg} Ff(xi, -x)|, exact on the self-dual grid
        n = grid64.n_points
        for _ in range(5):
            f = smooth_random_signal(grid64, rng)
            g = smooth_random_signal(grid64, rng)
            lhs = np.abs(stft1(f, g).samples)
            vhat = np.abs(stft1(dft(f), dft(g)).samples)
            refl = (-np.arange(n)) % n
            rhs = vhat[:, refl].T
            assert np.max(np.abs(lhs - rhs)) < 1e-10


class TestWigner:
    def test_gaussian_closed_form(self, grid64, phi64):
        w = wigner(phi64, phi64)
        pts = grid64.points
        expected = 2 * np.exp(-2 * np.pi * (pts[:, None] ** 2 + pts[None, :] ** 2))
        assert np.max(np.abs(w.samples - expected)) < 1e-6

    def test_matches_quadrature_shifted(self, grid64, phi64):
        f = translate(modulate(phi64, 0.25), 0.625)
        w = wigner(f, f).samples
        pts = grid64.points

        def f_func(t):
            return gauss_func(t - 0.625) * np.exp(2j * np.pi * 0.25 * (t - 0.625))

        for i, k in [(37, 34), (32, 32), (40, 36)]:
            oracle = wigner_quadrature(f_func, f_func, pts[i], pts[k])
            assert w[i, k] == pytest.approx(oracle, abs=1e-8)

    def test_moyal_identity_noise(self, grid64, rng):
        for _ in range(5):
            f = noise_signal(grid64, rng)
            g = noise_signal(grid64, rng)
            w = wigner(f, g)
            lhs = grid64.spacing**2 * np.sum(np.abs(w.samples) ** 2)
            rhs = f.norm2() ** 2 * g.norm2() ** 2
            assert lhs == pytest.approx(rhs, rel=1e-12)

    def test_marginal(self, grid64, phi64):
        w = wigner(phi64, phi64)
        marg = grid64.spacing * np.sum(w.samples, axis=1)
        assert np.max(np.abs(marg - np.abs(phi64.samples) ** 2)) < 1e-6

    def test_real_for_symmetric_diagonal(self, grid64, phi64):
        # real even signal: centered Gaussian mixture
        t = grid64.points
        f = Signal1(grid64, phi64.samples + 0.5 * np.exp(-2 * np.pi * t**2))
        w = wigner(f, f)
        assert np.max(np.abs(w.samples.imag)) < 1e-10 * np.max(np.abs(w.samples))

    def test_conjugate_symmetry_smooth(self, grid64, rng):
        # holds up to the half-integer chirp boundary defect, which decays
        # spectrally in N; exact Hermitian symmetry is unattainable for the
        # even-size circular Wigner transform
        f = smooth_random_signal(grid64, rng)
        g = smooth_random_signal(grid64, rng)
        lhs = wigner(f, g).samples
        rhs = np.conj(wigner(g, f).samples)
        assert np.max(np.abs(lhs - rhs)) < 1e-4 * np.max(np.abs(lhs))

    def test_sesquilinearity(self, grid32, rng):
        f = noise_signal(grid32, rng)
        g = noise_signal(grid32, rng)
        a, b = 1.7 - 0.3j, -0.8 + 2.1j
        fa = Signal1(grid32, a * f.samples)
        gb = Signal1(grid32, b * g.samples)
        np.testing.assert_allclose(
            wigner(fa, gb).samples,
            a * np.conj(b) * wigner(f, g).samples,
            atol=1e-10,
        )

    def test_ambiguity_origin_is_inner_product(self, grid64, rng):
        f = smooth_random_signal(grid64, rng)
        g = smooth_random_signal(grid64, rng)
        n = grid64.n_points
        inner = grid64.spacing * np.sum(f.samples * np.conj(g.samples))
        assert ambiguity(f, g).samples[n // 2, n // 2] == pytest.approx(
            inner, rel=1e-10
        )


class TestTauWigner:
    def test_half_equals_wigner(self, grid64, rng):
        f = noise_signal(grid64, rng)
        g = noise_signal(grid64, rng)
        np.testing.assert_allclose(
            tau_wigner(f, g, 0.5).samples, wigner(f, g).samples
        )

    def test_tau_zero_rihaczek(self, grid64, phi64):
        # W_0(f, g)(x, w) = f(x) conj(Fg(w)) e^{-2 pi i x w}
        f = translate(phi64, 0.25)
        g = phi64
        w0 = tau_wigner(f, g, 0.0)
        pts = grid64.points
        ghat = dft(g).samples
        expected = (
            f.samples[:, None]
            * np.conj(ghat)[None, :]
            * np.exp(-2j * np.pi * pts[:, None] * pts[None, :])
        )
        assert np.max(np.abs(w0.samples - expected)) < 1e-6

    def test_unitarity_all_tau(self, grid64, phi64):
        for tau in (0.0, 0.3, 0.5, 0.7, 1.0):
            w = tau_wigner(phi64, phi64, tau)
            total = grid64.spacing**2 * np.sum(np.abs(w.samples) ** 2)
            assert total == pytest.approx(1.0, abs=1e-6)

    def test_tau_out_of_range(self, grid16):
        phi = gaussian(grid16)
        with pytest.raises(ValueError):
            tau_wigner(phi, phi, 1.5)


class TestStft2:
    def test_parseval(self, grid16, rng):
        a = Field2(
            grid16,
            rng.standard_normal((16, 16)) + 1j * rng.standard_normal((16, 16)),
        )
        w = gaussian_field(grid16)
        v = stft2(a, w)
        lhs = grid16.spacing**4 * np.sum(np.abs(v.values) ** 2)
        assert lhs == pytest.approx(a.norm2() ** 2 * w.norm2() ** 2, rel=1e-10)

    def test_tensorization(self, grid16, rng):
        # a separable symbol against a separable window factorizes into
        # 1-D transforms, an independent route through stft1
        u = noise_signal(grid16, rng)
        v = noise_signal(grid16, rng)
        g = gaussian(grid16)
        a = Field2(grid16, np.outer(u.samples, v.samples))
        w = Field2(grid16, np.outer(g.samples, g.samples))
        got = stft2(a, w).values
        vu = stft1(u, g).samples
        vv = stft1(v, g).samples
        expected = vu[:, None, :, None] * vv[None, :, None, :]
        np.testing.assert_allclose(got, expected, atol=1e-12)

    def test_zero_field(self, grid16):
        a = Field2(grid16, np.zeros((16, 16)))
        v = stft2(a, gaussian_field(grid16))
        assert np.all(v.values == 0)

    def test_symbol_cap(self):
        grid = make_grid(128)
        a = Field2(grid, np.zeros((128, 128)))
        with pytest.raises(ValueError):
            stft2(a, Field2(grid, np.ones((128, 128))))


class TestFineLattice:
    def test_fine_matches_coarse_nodes(self, grid32):
        # even-index fine lattice points of the zero-extended transform
        # reproduce the circular transform wherever the signal content is
        # concentrated away from the boundary
        phi = gaussian(grid32)
        f = translate(modulate(phi, 2 * grid32.spacing), 2 * grid32.spacing)
        coarse = stft1(f, phi).samples
        fine = stft1_fine(f, phi)
        n = grid32.n_points
        c = np.arange(n) - n // 2
        sub = fine[np.ix_(2 * c + 2 * n, 2 * c + 2 * n)]
        assert np.max(np.abs(sub - coarse)) < 1e-4

    def test_wigner_fine_subsample(self, grid32):
        phi = gaussian(grid32)
        f = translate(phi, 2 * grid32.spacing)
        g = modulate(phi, 3 * grid32.spacing)
        n = grid32.n_points
        fine = wigner_fine(f, g)
        coarse = wigner(f, g).samples
        c = np.arange(n) - n // 2
        sub = fine[np.ix_(2 * c + n, 2 * c + n)]
        scale = np.max(np.abs(coarse))
        assert np.max(np.abs(sub - coarse)) < 1e-4 * scale

    def test_factorization_identity(self, grid32, rng):
        phi = gaussian(grid32)
        for _ in range(3):
            f = smooth_random_signal(grid32, rng)
            g = smooth_random_signal(grid32, rng)
            lhs, rhs = wigner_factorization_sides(f, g, phi)
            mask = (lhs > 1e-12) | (rhs > 1e-12)
            assert np.max(np.abs(lhs - rhs)[mask]) < 1e-6
