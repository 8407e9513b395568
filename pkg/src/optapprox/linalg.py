"""Solvers for the banded Hermitian normal equations.

Two independent routes are provided:

* :func:`cholesky_solve` -- banded Cholesky ``G = L L*`` in ``O(n h^2)``;
* :func:`cramer_solve` -- ratios ``det M^(k) / det M`` on the reduced system
  that fixes ``c_0 = 1``, with determinants from LU factorisation.

The second is an oracle for the first and is only meant for small orders.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NotPositiveDefinite, SingularM
from .gram import NormalSystem

PIVOT_RTOL = 1e-14
SINGULAR_RTOL = 1e-12
CRAMER_MAX_ORDER = 64


@dataclass(frozen=True, eq=False)
class BandedCholesky:
    """Lower factor ``L`` in the same band layout as :class:`NormalSystem`.

    ``band[d, k] = L[k + d, k]``.
    """

    band: np.ndarray

    @property
    def half_bandwidth(self) -> int:
        return self.band.shape[0] - 1

    @property
    def size(self) -> int:
        return self.band.shape[1]

    def to_dense(self) -> np.ndarray:
        N, h = self.size, self.half_bandwidth
        L = np.zeros((N, N), dtype=complex)
        for d in range(h + 1):
            idx = np.arange(N - d)
            L[idx + d, idx] = self.band[d, : N - d]
        return L

    def solve(self, rhs) -> np.ndarray:
        """Forward then backward substitution."""
        N, h = self.size, self.half_bandwidth
        L = self.band
        y = np.array(rhs, dtype=complex)
        for i in range(N):
            lo = max(0, i - h)
            # L[i, k] = band[i - k, k]
            s = y[i]
            for k in range(lo, i):
                s -= L[i - k, k] * y[k]
            y[i] = s / L[0, i].real
        x = y
        for i in range(N - 1, -1, -1):
            hi = min(N - 1, i + h)
            s = x[i]
            for k in range(i + 1, hi + 1):
                # (L*)[i, k] = conj(L[k, i]) = conj(band[k - i, i])
                s -= np.conj(L[k - i, i]) * x[k]
            x[i] = s / L[0, i].real
        return x


def cholesky_factor(sys: NormalSystem) -> BandedCholesky:
    """Banded Cholesky factorisation of a Hermitian positive definite system.

    Raises
    ------
    NotPositiveDefinite
        If a squared pivot drops to ``<= 1e-14 * max(diag G)``.
    """
    G = sys.band
    h = sys.half_bandwidth
    N = sys.size
    tol = PIVOT_RTOL * float(np.max(G[0].real))
    L = np.zeros_like(G)
    for j in range(N):
        lo = max(0, j - h)
        # row j of L restricted to the band: L[j, k] = L[j - k, k]
        d = L[j - np.arange(lo, j), np.arange(lo, j)]
        piv = G[0, j].real - float(np.sum(np.abs(d) ** 2))
        if not piv > tol:
            raise NotPositiveDefinite(
                f"pivot {piv:.3e} at index {j} is not positive (threshold {tol:.3e})"
            )
        ljj = np.sqrt(piv)
        L[0, j] = ljj
        for i in range(j + 1, min(N, j + h + 1)):
            s = G[i - j, j]
            for k in range(max(0, i - h), j):
                s -= L[i - k, k] * np.conj(L[j - k, k])
            L[i - j, j] = s / ljj
    return BandedCholesky(L)


def cholesky_solve(sys: NormalSystem) -> np.ndarray:
    """Solve ``G c = rhs`` for the full coefficient vector ``c_0..c_n``."""
    return cholesky_factor(sys).solve(sys.rhs)


def _logdet(A: np.ndarray):
    sign, logabs = np.linalg.slogdet(A)
    return sign, logabs


def cramer_solve(sys: NormalSystem) -> np.ndarray:
    """Ratios ``c_k / c_0`` for ``k = 1..n`` by Cramer's rule.

    ``M`` is the block ``G[1:, 1:]`` and the replacement column is
    ``-G[1:, 0]``, i.e. the inner products of ``-f'`` with ``(z^j f)'``:
    for ``j >= 1`` neither involves the constant-term weight.

    Raises
    ------
    SingularM
        If ``|det M|`` is below ``1e-12`` times the Hadamard bound of ``M``.
    """
    if sys.n < 1:
        return np.zeros(0, dtype=complex)
    if sys.n > CRAMER_MAX_ORDER:
        raise ValueError(f"Cramer oracle limited to n <= {CRAMER_MAX_ORDER}")
    G = sys.to_dense()
    M = G[1:, 1:]
    col = -G[1:, 0]
    norms = np.linalg.norm(M, axis=0)
    if np.any(norms == 0):
        raise SingularM("reduced normal matrix has a zero column")
    sign, logdet = _logdet(M)
    # Hadamard: |det M| <= prod of column norms
    log_scale = float(np.sum(np.log(norms)))
    if sign == 0 or logdet < np.log(SINGULAR_RTOL) + log_scale:
        raise SingularM("reduced normal matrix is numerically singular")
    n = sys.n
    ratios = np.empty(n, dtype=complex)
    for k in range(n):
        Mk = M.copy()
        Mk[:, k] = col
        sk, lk = _logdet(Mk)
        ratios[k] = 0.0 if sk == 0 else sk / sign * np.exp(lk - logdet)
    return ratios
