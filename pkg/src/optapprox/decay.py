"""Decay of approximation residuals against the rate ``1/phi_alpha(n+1)``."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .approx import Family, build_approximant, optimal_approximant, pythagoras_residual
from .errors import DomainError, InsufficientData, ZeroConstantTerm
from .roots import find_roots
from .series import Poly, as_poly, reciprocal_coeffs
from .space import WeightKind, phi_alpha, weight_sequence

# Residuals of the optimal family are cross-checked directly up to this order.
DIRECT_CHECK_MAX_N = 512


@dataclass(frozen=True)
class DecayRecord:
    n: int
    dist_sq: float
    scaled: float
    family: str
    alpha: float
    kind: str

    @property
    def degenerate(self) -> bool:
        """``phi_alpha(n+1) == 0`` (only ``alpha = 1, n = 0``)."""
        return self.alpha == 1 and self.n == 0

    def as_row(self) -> dict:
        return {"family": self.family, "alpha": self.alpha, "kind": self.kind,
                "n": self.n, "dist_sq": self.dist_sq, "scaled": self.scaled}


def decay_table(f, family, alpha: float, kind="integral", ns=(), *,
                method: str = "pythagoras") -> list[DecayRecord]:
    """Residual ``||p_n f - 1||^2`` and ``dist_sq * phi_alpha(n+1)`` for each order.

    For the optimal family the residual is ``||1||^2 - ||p f||^2`` (summed
    with compensation) unless ``method="direct"``.
    """
    family = Family.parse(family)
    kind = WeightKind.parse(kind)
    ns = [int(n) for n in ns]
    if any(b <= a for a, b in zip(ns, ns[1:])):
        raise DomainError("orders must be strictly increasing")
    if alpha > 1:
        raise DomainError("phi scaling requires alpha <= 1")
    fpoly = as_poly(f)
    out = []
    for n in ns:
        if family is Family.OPTIMAL and method == "pythagoras":
            w = weight_sequence(kind, alpha, n + fpoly.degree)
            ap = optimal_approximant(fpoly, n, alpha, kind, weights=w)
            d = max(pythagoras_residual(ap.p, fpoly, w), 0.0)
        else:
            d = build_approximant(f, family, n, alpha, kind).residual_norm_sq
        out.append(DecayRecord(n, d, d * phi_alpha(n + 1.0, alpha),
                               family.value, float(alpha), kind.value))
    return out


def comparability_stats(records, tail_start: int = 0) -> dict:
    """Min, max and max/min of the scaled residuals with ``n >= tail_start``."""
    tail = [r.scaled for r in records if r.n >= tail_start and not r.degenerate]
    if len(tail) < 3:
        raise InsufficientData(f"need >= 3 records in the tail, got {len(tail)}")
    lo, hi = min(tail), max(tail)
    return {"min_scaled": lo, "max_scaled": hi,
            "ratio": hi / lo if lo > 0 else math.inf}


def control_sums(f, alpha: float, K: int) -> list[tuple[int, float]]:
    """``(k, |S_k| (k+1)**alpha)`` for ``t < k <= K``.

    ``S_k = sum_{i=0}^k phi_alpha(i) b_i a_{k-i}`` where ``b`` are the
    reciprocal coefficients of ``f``; bounded normalised values indicate the
    cancellation that makes rate-weighted sections work.
    """
    f = as_poly(f)
    if f.coeffs[0] == 0:
        raise ZeroConstantTerm("control sums need f(0) != 0")
    t = f.degree
    b = reciprocal_coeffs(f, K)
    phib = phi_alpha(np.arange(K + 1, dtype=float), alpha) * b
    a = f.coeffs
    out = []
    for k in range(t + 1, K + 1):
        # terms i = k-t..k only, since a_{k-i} = 0 otherwise
        terms = phib[k - t : k + 1] * a[::-1]
        s = complex(math.fsum(terms.real), math.fsum(terms.imag))
        out.append((k, abs(s) * (k + 1) ** alpha))
    return out


control_lemma_check = control_sums


def wiener_norm(p) -> float:
    """Sum of coefficient moduli (norm of the positive Wiener algebra)."""
    return math.fsum(np.abs(as_poly(p).coeffs))


def taylor_tail_norm_sq(g, n: int, alpha: float, kind="coeff") -> float:
    """``||g - T_n(g)||^2`` for a series ``g`` given by its leading coefficients.

    Pass a plain array to keep tiny tail coefficients that :class:`Poly`
    would trim.
    """
    c = g.coeffs if isinstance(g, Poly) else np.asarray(g, dtype=complex).ravel()
    if c.size <= n + 1:
        return 0.0
    w = weight_sequence(kind, alpha, c.size - 1)
    return math.fsum(w.w[n + 1 :] * np.abs(c[n + 1 :]) ** 2)


def strong_invertibility_report(f, K: int = 512) -> dict:
    """Empirical ``sup (j+1)^3 |a_j|`` and ``sup (k+1) |b_k|`` over truncations.

    A diagnostic only: bounded-looking values on a truncation are no proof.
    """
    f = as_poly(f)
    a = f.coeffs
    b = reciprocal_coeffs(f, K)
    ja = np.arange(a.size) + 1.0
    kb = np.arange(K + 1) + 1.0
    half = (K + 1) // 2
    return {
        "coeff_decay": float(np.max(ja ** 3 * np.abs(a))),
        "recip_decay": float(np.max(kb * np.abs(b))),
        "recip_decay_first_half": float(np.max(kb[:half] * np.abs(b[:half]))),
        "zero_in_disk": bool(f.degree and np.any(find_roots(f).moduli < 1.0)),
    }
