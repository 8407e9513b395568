import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from optapprox.errors import NotPositiveDefinite, SingularM
from optapprox.gram import NormalSystem, build_normal_system
from optapprox.linalg import cholesky_factor, cholesky_solve, cramer_solve
from optapprox.series import Poly
from optapprox.space import weight_sequence

from strategies import alphas, coeff_arrays, cplx, kinds


def banded_hpd(rng, N, h):
    """Random Hermitian positive definite band (diagonally dominant)."""
    band = np.zeros((h + 1, N), dtype=complex)
    for d in range(1, h + 1):
        band[d, : N - d] = rng.normal(size=N - d) + 1j * rng.normal(size=N - d)
    band[0] = 2.0 * (h + 1) * 3 + rng.random(N)
    return band


class TestCholesky:
    def test_diagonal(self):
        w = np.array([1.0, 2.0, 4.0])
        sys_ = NormalSystem(w[None, :].astype(complex), np.array([3, 4, 8], dtype=complex), 2)
        np.testing.assert_allclose(cholesky_solve(sys_), [3, 2, 2])

    def test_m1(self):
        w = weight_sequence("integral", 1.0, 2)
        c = cholesky_solve(build_normal_system(Poly([1, -1]), 1, w))
        assert c[1] / c[0] == pytest.approx(1 / 3, abs=1e-12)

    @pytest.mark.parametrize("N,h", [(1, 0), (5, 1), (40, 3), (100, 6)])
    def test_manufactured_solution(self, rng, N, h):
        band = banded_hpd(rng, N, h)
        G = NormalSystem(band, np.zeros(N, dtype=complex), N - 1).to_dense()
        c = rng.normal(size=N) + 1j * rng.normal(size=N)
        sys_ = NormalSystem(band, G @ c, N - 1)
        np.testing.assert_allclose(cholesky_solve(sys_), c, rtol=0, atol=1e-10)

    @given(coeff_arrays(max_size=5), st.integers(0, 40), alphas, kinds)
    def test_reconstruction(self, a, n, alpha, kind):
        f = Poly(a)
        sys_ = build_normal_system(f, n, weight_sequence(kind, alpha, n + f.degree))
        L = cholesky_factor(sys_)
        Ld = L.to_dense()
        G = sys_.to_dense()
        assert np.max(np.abs(Ld @ Ld.conj().T - G)) <= 1e-10 * np.max(np.abs(G))
        assert np.all(L.band[0].imag == 0) and np.all(L.band[0].real > 0)

    @given(coeff_arrays(max_size=4, nonzero_head=True), st.integers(0, 20), cplx)
    def test_linear_in_rhs(self, a, n, s):
        f = Poly(a)
        sys_ = build_normal_system(f, n, weight_sequence("integral", 0.0, n + f.degree))
        scaled = NormalSystem(sys_.band.copy(), sys_.rhs * s, n)
        c = cholesky_solve(sys_)
        np.testing.assert_allclose(cholesky_solve(scaled), c * s, rtol=1e-12,
                                   atol=1e-12 * max(1.0, np.max(np.abs(c * s))))

    def test_indefinite_rejected(self):
        band = np.array([[1.0, 1.0], [2.0, 0.0]], dtype=complex)
        with pytest.raises(NotPositiveDefinite):
            cholesky_factor(NormalSystem(band, np.zeros(2, dtype=complex), 1))


class TestCramer:
    def test_p3(self):
        w = weight_sequence("integral", 1.0, 4)
        r = cramer_solve(build_normal_system(Poly([1, -1]), 3, w))
        np.testing.assert_allclose(r, np.array([13, 7, 3]) / 25, rtol=0, atol=1e-12)

    def test_order_one_scalar_division(self):
        w = weight_sequence("coeff", 0.0, 3)
        sys_ = build_normal_system(Poly([2, 1, 0.5]), 1, w)
        G = sys_.to_dense()
        assert cramer_solve(sys_)[0] == pytest.approx(-G[1, 0] / G[1, 1], abs=1e-14)

    def test_order_zero(self):
        sys_ = build_normal_system(Poly([1, -1]), 0, weight_sequence("coeff", 0.0, 1))
        assert cramer_solve(sys_).size == 0

    def test_order_limit(self):
        sys_ = build_normal_system(Poly([1, -1]), 65, weight_sequence("coeff", 0.0, 66))
        with pytest.raises(ValueError):
            cramer_solve(sys_)

    def test_singular(self):
        band = np.array([[1.0, 0.0, 1.0]], dtype=complex)
        sys_ = NormalSystem(band, np.array([1, 0, 0], dtype=complex), 2)
        with pytest.raises(SingularM):
            cramer_solve(sys_)

    @given(coeff_arrays(max_size=5, nonzero_head=True), st.integers(1, 12), alphas, kinds)
    def test_agrees_with_cholesky(self, a, n, alpha, kind):
        f = Poly(a)
        sys_ = build_normal_system(f, n, weight_sequence(kind, alpha, n + f.degree))
        c = cholesky_solve(sys_)
        np.testing.assert_allclose(cramer_solve(sys_), c[1:] / c[0], rtol=0, atol=1e-9)
