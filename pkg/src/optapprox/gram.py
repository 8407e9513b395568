"""Normal equations for projecting 1 onto ``f * Pol_n``.

For a diagonal inner product the Gram entries of the spanning set
``{z^k f : 0 <= k <= n}`` are

    G[j, k] = <z^k f, z^j f> = sum_m w_m a_{m-k} conj(a_{m-j}),

which vanish whenever ``|j - k| > deg f``. Only the lower band is stored.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ZeroFunction
from .series import as_poly
from .space import Weights


@dataclass(frozen=True, eq=False)
class NormalSystem:
    """Banded Hermitian system ``G c = rhs`` of size ``n + 1``.

    ``band[d, k]`` holds ``G[k + d, k]`` for ``0 <= d <= h`` (entries with
    ``k + d > n`` are zero padding). The upper triangle is the conjugate
    mirror of the stored lower band.
    """

    band: np.ndarray
    rhs: np.ndarray
    n: int

    def __post_init__(self):
        self.band.setflags(write=False)
        self.rhs.setflags(write=False)

    @property
    def half_bandwidth(self) -> int:
        return self.band.shape[0] - 1

    @property
    def bandwidth(self) -> int:
        return 2 * self.half_bandwidth + 1

    @property
    def size(self) -> int:
        return self.n + 1

    def to_dense(self) -> np.ndarray:
        N = self.size
        G = np.zeros((N, N), dtype=complex)
        for d in range(self.half_bandwidth + 1):
            idx = np.arange(N - d)
            G[idx + d, idx] = self.band[d, : N - d]
            if d:
                G[idx, idx + d] = np.conj(self.band[d, : N - d])
        return G

    def entry(self, j: int, k: int) -> complex:
        d = j - k
        if abs(d) > self.half_bandwidth:
            return 0j
        if d >= 0:
            return complex(self.band[d, k])
        return complex(np.conj(self.band[-d, j]))


def build_normal_system(f, n: int, w: Weights) -> NormalSystem:
    """Assemble the normal equations for the best approximation of 1 by ``p f``.

    Parameters
    ----------
    f : Poly or array_like
        Target function (polynomial or truncated series), ``f != 0``.
    n : int
        Degree bound of the approximant.
    w : Weights
        Diagonal weights; extended automatically to index ``n + deg f``.

    Returns
    -------
    NormalSystem
        Half-bandwidth ``min(deg f, n)``; ``rhs = (w_0 conj(a_0), 0, ..., 0)``.
    """
    f = as_poly(f)
    if f.is_zero():
        raise ZeroFunction("cannot project onto multiples of the zero function")
    n = int(n)
    if n < 0:
        raise ValueError("degree bound must be nonnegative")
    a = f.coeffs
    t = f.degree
    h = min(t, n)
    ww = w.covering(n + t)
    N = n + 1
    band = np.zeros((h + 1, N), dtype=complex)
    k = np.arange(N)
    for d in range(h + 1):
        # G[k+d, k] = sum_i w_{k+i} a_i conj(a_{i-d}),  d <= i <= t
        for i in range(d, t + 1):
            band[d, :] += ww[k + i] * (a[i] * np.conj(a[i - d]))
        band[d, N - d :] = 0.0
    # diagonal of a Hermitian matrix is real
    band[0, :] = band[0, :].real
    rhs = np.zeros(N, dtype=complex)
    rhs[0] = ww[0] * np.conj(a[0])
    return NormalSystem(band, rhs, n)


def assert_bandwidth(sys: NormalSystem, t: int) -> bool:
    """True iff every entry with ``|j - k| > t`` is exactly zero."""
    G = sys.to_dense()
    j, k = np.indices(G.shape)
    return bool(np.all(G[np.abs(j - k) > t] == 0))
