"""Polynomial approximants ``p`` to ``1/f`` and their residuals ``||p f - 1||^2``.

The optimal approximant comes from the normal equations; the remaining
constructors are explicit families (Taylor sections, summability means,
rate-weighted sections, and two compositions for harder targets).

Closed forms specific to ``f = 1 - z`` return *shape* polynomials with
constant term 1. :func:`scale_to_projection` recovers the best multiple of a
shape when a residual is needed.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, RootInsideDisk, UnsupportedAlpha, ZeroConstantTerm
from .gram import build_normal_system
from .linalg import cholesky_solve
from .series import FactoredPoly, Poly, as_poly, poly_mul, reciprocal_coeffs
from .space import (
    WeightKind,
    Weights,
    harmonic_numbers,
    phi_alpha,
    weight_sequence,
    weighted_inner,
    weighted_norm_sq,
)

ON_CIRCLE_TOL = 1e-12


class Family(str, enum.Enum):
    OPTIMAL = "optimal"
    CLOSED_FORM = "closedform"
    RIESZ_MEAN = "rieszmean"
    TAYLOR = "taylor"
    CESARO = "cesaro"
    RIESZ_TYPE = "riesz"
    PHI_WEIGHTED = "phi"
    POWER_LIFT = "powerlift"
    PRODUCT = "product"

    @classmethod
    def parse(cls, value) -> "Family":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(f"unknown family {value!r}") from None


@dataclass(frozen=True, eq=False)
class Approximant:
    """A polynomial ``p`` together with its residual ``||p f - 1||^2``."""

    p: Poly
    family: Family
    n: int
    alpha: float
    kind: WeightKind
    residual_norm_sq: float
    meta: dict = field(default_factory=dict)

    @property
    def ratios(self) -> np.ndarray:
        """``c_k / c_0`` for ``k = 1..n`` (zero-padded to length ``n``)."""
        c = self.p.padded(self.p.degree + 1)
        out = np.zeros(max(self.n, self.p.degree), dtype=complex)
        out[: c.size - 1] = c[1:] / c[0]
        return out

    @property
    def shape(self) -> Poly:
        return self.p / self.p.coeffs[0]


def residual(p, f, w: Weights) -> float:
    """``||p f - 1||^2`` under the weights ``w``."""
    return weighted_norm_sq(poly_mul(as_poly(p), as_poly(f)) - 1.0, w)


def pythagoras_residual(p, f, w: Weights) -> float:
    """``||1||^2 - ||p f||^2``; equals :func:`residual` only for projections."""
    pf = poly_mul(as_poly(p), as_poly(f))
    ww = w.covering(pf.degree)
    return math.fsum(np.concatenate(([ww[0]], -ww * np.abs(pf.coeffs) ** 2)))


def scale_to_projection(shape, f, w: Weights) -> Poly:
    """Best multiple ``lambda * shape`` minimising ``||lambda shape f - 1||``."""
    sf = poly_mul(as_poly(shape), as_poly(f))
    lam = weighted_inner(Poly([1.0]), sf, w) / weighted_norm_sq(sf, w)
    return as_poly(shape) * lam


def _weights(alpha, kind, degree) -> Weights:
    return weight_sequence(kind, alpha, max(int(degree), 1))


def _pack(p, f, family, n, alpha, kind, w=None, **meta) -> Approximant:
    kind = WeightKind.parse(kind)
    p = as_poly(p)
    f = as_poly(f)
    if w is None:
        w = _weights(alpha, kind, p.degree + f.degree)
    return Approximant(p, Family.parse(family), int(n), float(alpha), kind,
                       residual(p, f, w), dict(meta))


# -- optimal -----------------------------------------------------------------

def optimal_approximant(f, n: int, alpha: float, kind="integral",
                        weights: Weights | None = None) -> Approximant:
    """Minimiser of ``||p f - 1||`` over polynomials of degree ``<= n``."""
    f = as_poly(f)
    kind = WeightKind.parse(kind)
    w = weights if weights is not None else _weights(alpha, kind, n + f.degree)
    sys = build_normal_system(f, n, w)
    c = cholesky_solve(sys)
    return _pack(Poly(c), f, Family.OPTIMAL, n, alpha, kind, w)


# -- closed forms for f = 1 - z ---------------------------------------------

def closed_form_one_minus_z(n: int, beta: float) -> Poly:
    """Shape of the optimal approximant to ``1/(1 - z)`` for ``beta = 1 - alpha``.

    ``c_k = S_{k+1} / S_1`` with ``S_k = sum_{j=k}^{n+1} (1/j) prod_{l=2}^j (1 + beta/l)``.
    """
    if beta <= -1:
        raise DomainError(f"closed form requires beta > -1, got {beta}")
    if n < 1:
        raise DomainError("closed form requires n >= 1")
    j = np.arange(1, n + 2, dtype=float)
    growth = np.ones(n + 1)
    growth[1:] = np.cumprod(1.0 + beta / j[1:])
    t = growth / j
    tail = np.cumsum(t[::-1])[::-1]  # tail[i] = sum_{j >= i+1} t_j
    c = np.empty(n + 1)
    c[0] = 1.0
    c[1:] = tail[1:] / tail[0]
    return Poly(c)


def riesz_family(n: int, alpha: int) -> Poly:
    """Harmonic-number closed forms at ``alpha`` in ``{1, 0, -1}`` (shape)."""
    if n < 1:
        raise DomainError("n must be >= 1")
    H = harmonic_numbers(n + 1)
    k = np.arange(n + 1, dtype=float)
    Hk, Hn1 = H[: n + 1], H[n + 1]
    if alpha == 1:
        c = 1.0 - Hk / Hn1
    elif alpha == 0:
        c = 1.0 - (k + Hk) / (n + 1 + Hn1)
    elif alpha == -1:
        c = 1.0 - (k * (k + 7) + 4 * Hk) / ((n + 1) * (n + 8) + 4 * Hn1)
    else:
        raise UnsupportedAlpha(f"no harmonic closed form for alpha={alpha}")
    return Poly(c)


# -- sections of 1/f -----------------------------------------------------------

def _check_len(b, n):
    b = np.asarray(b, dtype=complex)
    if b.size < n + 1:
        raise ValueError(f"need at least {n + 1} reciprocal coefficients, got {b.size}")
    return b[: n + 1]


def taylor_section(b, n: int) -> Poly:
    return Poly(_check_len(b, n))


def cesaro_section(b, n: int) -> Poly:
    """(C,1) mean ``sum_k (1 - k/(n+1)) b_k z^k``."""
    b = _check_len(b, n)
    return Poly(b * (1.0 - np.arange(n + 1) / (n + 1)))


def riesz_type(b, n: int) -> Poly:
    """``sum_k (1 - H_k / H_{n+1}) b_k z^k``."""
    b = _check_len(b, n)
    H = harmonic_numbers(n + 1)
    return Poly(b * (1.0 - H[: n + 1] / H[n + 1]))


def phi_weighted(f, n: int, alpha: float) -> Poly:
    """Section of ``1/f`` damped by ``1 - phi(k)/phi(n+1)``, with ``c_0 = 1/a_0``.

    The constant term makes ``(p f)(0) = 1``.
    """
    f = as_poly(f)
    if f.coeffs[0] == 0:
        raise ZeroConstantTerm("phi-weighted section requires f(0) != 0")
    if alpha > 1:
        raise DomainError(f"phi-weighted section requires alpha <= 1, got {alpha}")
    if n < 1:
        raise DomainError("phi-weighted section requires n >= 1")
    b = reciprocal_coeffs(f, n)
    k = np.arange(n + 1, dtype=float)
    c = (1.0 - phi_alpha(k, alpha) / phi_alpha(n + 1.0, alpha)) * b
    c[0] = 1.0 / f.coeffs[0]
    return Poly(c)


# -- compositions -------------------------------------------------------------

def lift_factors(fp: FactoredPoly):
    """Radical ``g``, cofactor ``h`` and power ``gamma`` with ``f h = g**gamma``."""
    gamma = max(fp.mults)
    g = Poly.from_roots(fp.roots)
    cof = [r for r, m in zip(fp.roots, fp.mults) for _ in range(gamma - m)]
    h = Poly.from_roots(cof, 1.0 / fp.leading)
    return g, h, gamma


def power_lift(fp: FactoredPoly, n: int, alpha: float, kind="integral",
               radical: str = "optimal") -> Approximant:
    """``q_n**gamma * h`` where ``q_n`` approximates ``1/g`` for the radical ``g``.

    Parameters
    ----------
    fp : FactoredPoly
        Target with all roots in ``|z| >= 1``.
    radical : {"optimal", "phi"}
        Which approximant to use for the radical.
    """
    for r in fp.roots:
        if abs(r) < 1.0 - ON_CIRCLE_TOL:
            raise RootInsideDisk(f"root {r} lies inside the unit disk")
    s = len(fp.roots)
    if n <= s:
        raise DomainError(f"power lift requires n > number of distinct roots ({s})")
    g, h, gamma = lift_factors(fp)
    if radical == "optimal":
        q = optimal_approximant(g, n, alpha, kind).p
    elif radical == "phi":
        q = phi_weighted(g, n, alpha)
    else:
        raise ValueError(f"unknown radical approximant {radical!r}")
    p = poly_mul(q ** gamma, h)
    return _pack(p, fp.expand(), Family.POWER_LIFT, n, alpha, kind,
                 gamma=gamma, radical=radical)


def product_approximant(h, g_recip, m: int, alpha: float, kind="integral",
                        guard: int | None = None, g=None) -> Approximant:
    """``q_m * T_m(1/g)`` for ``f = h g``.

    ``q_m`` is the optimal approximant to ``1/h`` and ``T_m(1/g)`` the Taylor
    section of the supplied reciprocal series. Entries of ``g_recip`` beyond
    its length are taken as zero. Unless ``g`` is given, it is rebuilt from
    ``g_recip`` up to degree ``m + deg h + guard`` (``guard`` defaults to ``m``).
    """
    h = as_poly(h)
    if m < 1:
        raise DomainError("product construction requires m >= 1")
    b = np.asarray(g_recip, dtype=complex).ravel()
    if b.size < m + 1:
        b = np.concatenate([b, np.zeros(m + 1 - b.size, dtype=complex)])
    if g is None:
        guard = m if guard is None else int(guard)
        L = min(b.size - 1, m + h.degree + guard)
        g = Poly(reciprocal_coeffs(Poly(b[: L + 1]), L))
    else:
        g = as_poly(g)
    q = optimal_approximant(h, m, alpha, kind).p
    p = poly_mul(q, taylor_section(b, m))
    return _pack(p, poly_mul(h, g), Family.PRODUCT, m, alpha, kind)


# -- dispatch -----------------------------------------------------------------

def _one_minus_z_scale(f: Poly) -> complex:
    """``s`` with ``f = s (1 - z)``, or raise."""
    c = f.coeffs
    if f.degree != 1 or not np.isclose(c[1], -c[0], rtol=1e-12, atol=0):
        raise DomainError("closed forms are only available for multiples of 1 - z")
    return complex(c[0])


def split_on_circle(fp: FactoredPoly, tol: float = 1e-9):
    """Split ``f`` into a unit-circle factor ``h`` and a zero-free factor ``g``."""
    on, off = [], []
    for r, m in zip(fp.roots, fp.mults):
        (on if abs(abs(r) - 1.0) <= tol else off).extend([r] * m)
    for r in off:
        if abs(r) < 1.0:
            raise RootInsideDisk(f"root {r} lies inside the unit disk")
    h = Poly.from_roots(on)
    g = Poly.from_roots(off, fp.leading)
    return h, g


def build_approximant(f, family, n: int, alpha: float, kind="integral") -> Approximant:
    """Construct any family at order ``n`` and report its residual.

    ``f`` may be a :class:`Poly`, a coefficient sequence or a
    :class:`FactoredPoly`; the power-lift and product families need a
    factorisation and compute one numerically when given coefficients.
    """
    family = Family.parse(family)
    kind = WeightKind.parse(kind)
    fp = f if isinstance(f, FactoredPoly) else None
    fpoly = as_poly(f)

    if family is Family.OPTIMAL:
        return optimal_approximant(fpoly, n, alpha, kind)
    if family in (Family.CLOSED_FORM, Family.RIESZ_MEAN):
        s = _one_minus_z_scale(fpoly)
        if family is Family.CLOSED_FORM:
            shape = closed_form_one_minus_z(n, 1.0 - alpha)
        else:
            shape = riesz_family(n, alpha)
        shape = shape / s
        w = _weights(alpha, kind, n + 1)
        return _pack(scale_to_projection(shape, fpoly, w), fpoly, family, n, alpha, kind, w)
    if family in (Family.TAYLOR, Family.CESARO, Family.RIESZ_TYPE):
        b = reciprocal_coeffs(fpoly, n)
        maker = {Family.TAYLOR: taylor_section, Family.CESARO: cesaro_section,
                 Family.RIESZ_TYPE: riesz_type}[family]
        meta = {"mean": "(C,1)"} if family is Family.CESARO else {}
        return _pack(maker(b, n), fpoly, family, n, alpha, kind, **meta)
    if family is Family.PHI_WEIGHTED:
        return _pack(phi_weighted(fpoly, n, alpha), fpoly, family, n, alpha, kind)

    if fp is None:
        from .roots import factor_poly
        fp = factor_poly(fpoly)
    if family is Family.POWER_LIFT:
        return power_lift(fp, n, alpha, kind)
    h, g = split_on_circle(fp)
    b = reciprocal_coeffs(g, n)
    return product_approximant(h, b, n, alpha, kind, g=g)
