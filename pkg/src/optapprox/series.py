"""Complex polynomials and truncated power series in the monomial basis.

A :class:`Poly` stores coefficients ``a_0, ..., a_t`` with index equal to the
power of ``z``. The same container doubles as a truncated power series, e.g.
the first terms of ``1/f``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import ZeroConstantTerm

# Trailing coefficients with modulus <= TRIM_RTOL * max|coeff| are dropped.
TRIM_RTOL = 1e-14


def _trim(c: np.ndarray) -> np.ndarray:
    if c.size == 0:
        return np.zeros(1, dtype=complex)
    scale = np.max(np.abs(c))
    if scale == 0.0:
        return np.zeros(1, dtype=complex)
    keep = np.nonzero(np.abs(c) > TRIM_RTOL * scale)[0]
    return c[: keep[-1] + 1]


def _leja_order(z: np.ndarray) -> np.ndarray:
    """Greedy ordering maximising the product of distances to earlier points."""
    if z.size <= 2:
        return z
    out = np.empty_like(z)
    rest = z.copy()
    i = int(np.argmax(np.abs(rest)))
    logd = np.zeros(z.size)
    for k in range(z.size):
        out[k] = rest[i]
        rest = np.delete(rest, i)
        logd = np.delete(logd, i)
        if not rest.size:
            break
        with np.errstate(divide="ignore"):
            logd = logd + np.log(np.abs(rest - out[k]))
        i = int(np.argmax(logd))
    return out


class Poly:
    """Immutable complex polynomial ``sum_k coeffs[k] * z**k``.

    Parameters
    ----------
    coeffs : array_like
        Coefficients in increasing powers. Trailing coefficients that are
        negligible relative to the largest one are trimmed; the zero
        polynomial is stored as ``[0]``.

    Examples
    --------
    >>> p = Poly([1, -1])
    >>> p.degree
    1
    >>> (p * Poly([1, 1, 1])).coeffs.real
    array([ 1.,  0.,  0., -1.])
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[complex] | np.ndarray | "Poly"):
        if isinstance(coeffs, Poly):
            c = coeffs._c
        else:
            c = np.atleast_1d(np.asarray(coeffs, dtype=complex)).ravel()
            if not np.all(np.isfinite(c)):
                raise ValueError("polynomial coefficients must be finite")
            c = _trim(c.copy())
        c.setflags(write=False)
        self._c = c

    @classmethod
    def monomial(cls, k: int, coef: complex = 1.0) -> "Poly":
        c = np.zeros(k + 1, dtype=complex)
        c[k] = coef
        return cls(c)

    @classmethod
    def from_roots(cls, roots: Sequence[complex], leading: complex = 1.0) -> "Poly":
        """Expand ``leading * prod(z - r)``.

        Roots are multiplied in Leja order, which keeps intermediate
        coefficients small when the roots cluster in angle.
        """
        c = np.array([leading], dtype=complex)
        for r in _leja_order(np.asarray(roots, dtype=complex).ravel()):
            c = np.convolve(c, np.array([-r, 1.0], dtype=complex))
        return cls(c)

    @property
    def coeffs(self) -> np.ndarray:
        return self._c

    @property
    def degree(self) -> int:
        return self._c.size - 1

    def is_zero(self) -> bool:
        return self._c.size == 1 and self._c[0] == 0

    def padded(self, length: int) -> np.ndarray:
        """Coefficient vector zero-padded (or truncated) to ``length``."""
        out = np.zeros(length, dtype=complex)
        m = min(length, self._c.size)
        out[:m] = self._c[:m]
        return out

    def truncate(self, degree: int) -> "Poly":
        return Poly(self._c[: degree + 1])

    def __call__(self, z):
        return evaluate(self, z)

    def __len__(self) -> int:
        return self._c.size

    def __getitem__(self, k: int) -> complex:
        return complex(self._c[k]) if 0 <= k < self._c.size else 0j

    def __mul__(self, other):
        if isinstance(other, Poly):
            return poly_mul(self, other)
        return Poly(self._c * complex(other))

    __rmul__ = __mul__

    def __truediv__(self, s) -> "Poly":
        return Poly(self._c / complex(s))

    def __add__(self, other) -> "Poly":
        other = other if isinstance(other, Poly) else Poly([other])
        n = max(len(self), len(other))
        return Poly(self.padded(n) + other.padded(n))

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(-self._c)

    def __sub__(self, other) -> "Poly":
        other = other if isinstance(other, Poly) else Poly([other])
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return (-self) + other

    def __pow__(self, k: int) -> "Poly":
        out = Poly([1.0])
        for _ in range(int(k)):
            out = poly_mul(out, self)
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self._c.shape == other._c.shape and bool(np.all(self._c == other._c))

    def __hash__(self) -> int:
        return hash(self._c.tobytes())

    def __repr__(self) -> str:
        return f"Poly({np.array2string(self._c, precision=6, separator=', ')})"


@dataclass(frozen=True)
class FactoredPoly:
    """``leading * prod_i (z - roots[i]) ** mults[i]`` with distinct roots."""

    roots: tuple
    mults: tuple
    leading: complex = 1.0

    def __post_init__(self):
        roots = tuple(complex(r) for r in self.roots)
        mults = tuple(int(m) for m in self.mults)
        if len(roots) != len(mults):
            raise ValueError("roots and multiplicities differ in length")
        if any(m < 1 for m in mults):
            raise ValueError("multiplicities must be positive")
        if complex(self.leading) == 0:
            raise ValueError("leading constant must be nonzero")
        object.__setattr__(self, "roots", roots)
        object.__setattr__(self, "mults", mults)
        object.__setattr__(self, "leading", complex(self.leading))

    @property
    def degree(self) -> int:
        return sum(self.mults)

    def expand(self) -> Poly:
        flat = [r for r, m in zip(self.roots, self.mults) for _ in range(m)]
        return Poly.from_roots(flat, self.leading)


def as_poly(f) -> Poly:
    if isinstance(f, Poly):
        return f
    if isinstance(f, FactoredPoly):
        return f.expand()
    return Poly(f)


def poly_mul(p: Poly, q: Poly) -> Poly:
    """Cauchy product of two coefficient sequences."""
    return Poly(np.convolve(p.coeffs, q.coeffs))


def derivative(p: Poly) -> Poly:
    if p.degree == 0:
        return Poly([0.0])
    k = np.arange(1, p.degree + 1)
    return Poly(p.coeffs[1:] * k)


def evaluate(p: Poly, z):
    """Horner evaluation; ``z`` may be a scalar or an array."""
    z = np.asarray(z, dtype=complex)
    acc = np.zeros_like(z)
    for c in p.coeffs[::-1]:
        acc = acc * z + c
    return acc[()] if acc.ndim == 0 else acc


def reciprocal_coeffs(f, N: int) -> np.ndarray:
    """First ``N + 1`` Taylor coefficients of ``1/f``.

    Solves ``sum_{j=0}^k b_j a_{k-j} = 0`` for ``k >= 1`` with ``b_0 = 1/a_0``.
    The series is formal: zeros of ``f`` on the unit circle are allowed.

    Raises
    ------
    ZeroConstantTerm
        If ``f(0) == 0``.
    """
    a = as_poly(f).coeffs
    if a[0] == 0:
        raise ZeroConstantTerm("reciprocal series requires f(0) != 0")
    N = int(N)
    b = np.zeros(N + 1, dtype=complex)
    b[0] = 1.0 / a[0]
    t = a.size - 1
    for k in range(1, N + 1):
        lo = max(0, k - t)
        # a_{k-j} for j = lo..k-1
        b[k] = -np.dot(b[lo:k], a[k - lo : 0 : -1]) / a[0]
    return b
