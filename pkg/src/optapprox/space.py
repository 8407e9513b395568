"""Diagonal norms on coefficient space for the Dirichlet-type scale ``D_alpha``.

Two weight kinds are supported, both diagonal in the monomial basis:

``coeff``
    ``w_m = (m + 1) ** alpha``, the coefficient-sequence norm.
``integral``
    ``w_0 = 1`` and ``w_m = Lambda_beta(m)`` for ``m >= 1`` with
    ``beta = 1 - alpha``, i.e. ``|g(0)|^2`` plus the weighted area integral of
    ``|g'|^2`` against ``(1 - |z|^2)^(1 - alpha)``. Valid for ``alpha < 2``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .series import Poly, as_poly

# Above this index Lambda_beta is accumulated in log space.
_LOG_SWITCH = 512


class WeightKind(str, enum.Enum):
    COEFFICIENT = "coeff"
    INTEGRAL = "integral"

    @classmethod
    def parse(cls, value) -> "WeightKind":
        if isinstance(value, cls):
            return value
        aliases = {"coeff": cls.COEFFICIENT, "coefficient": cls.COEFFICIENT,
                   "integral": cls.INTEGRAL, "paper": cls.INTEGRAL}
        try:
            return aliases[str(value).lower()]
        except KeyError:
            raise ValueError(f"unknown weight kind {value!r}") from None


def _lambda_table(M: int, beta: float) -> np.ndarray:
    """``Lambda_beta(k)`` for ``k = 1..M`` (index 0 of the result is k=1)."""
    if beta <= -1:
        raise DomainError(f"Lambda_beta requires beta > -1, got {beta}")
    k = np.arange(1, M + 1, dtype=float)
    out = np.empty(M)
    head = min(M, _LOG_SWITCH)
    prod = np.cumprod(k[:head] / (k[:head] + beta))
    out[:head] = k[:head] * prod
    if M > head:
        log_tail = math.log(prod[-1]) - np.cumsum(np.log1p(beta / k[head:]))
        out[head:] = k[head:] * np.exp(log_tail)
    return out


def lambda_beta(k: int, beta: float) -> float:
    """Moment kernel ``k * prod_{l=1}^k l / (l + beta)``."""
    if k < 1:
        raise DomainError("Lambda_beta is defined for k >= 1")
    return float(_lambda_table(int(k), float(beta))[-1])


def phi_alpha(s, alpha: float):
    """Rate function: ``s**(1 - alpha)`` for ``alpha < 1``, ``log+(s)`` at 1."""
    if alpha > 1:
        raise DomainError(f"phi_alpha is defined for alpha <= 1, got {alpha}")
    s = np.asarray(s, dtype=float)
    if np.any(s < 0):
        raise DomainError("phi_alpha requires s >= 0")
    if alpha == 1:
        with np.errstate(divide="ignore"):
            out = np.maximum(np.log(np.where(s > 0, s, 1.0)), 0.0)
    else:
        out = np.power(s, 1.0 - alpha)
    return float(out) if out.ndim == 0 else out


def harmonic(n: int) -> float:
    """Harmonic number ``H_n`` with ``H_0 = 0``."""
    return float(harmonic_numbers(n)[-1])


def harmonic_numbers(n: int) -> np.ndarray:
    """Array ``[H_0, H_1, ..., H_n]``."""
    if n < 0:
        raise DomainError("harmonic numbers need n >= 0")
    out = np.zeros(n + 1)
    if n:
        out[1:] = np.cumsum(1.0 / np.arange(1, n + 1))
    return out


@dataclass(frozen=True, eq=False)
class Weights:
    """Weight sequence ``w_0..w_M`` defining a diagonal inner product.

    Instances are immutable; :meth:`extended` returns a longer copy.
    """

    alpha: float
    kind: WeightKind
    w: np.ndarray

    def __post_init__(self):
        self.w.setflags(write=False)

    def __len__(self) -> int:
        return self.w.size

    def extended(self, M: int) -> "Weights":
        if M + 1 <= self.w.size:
            return self
        return weight_sequence(self.kind, self.alpha, M)

    def covering(self, degree: int) -> np.ndarray:
        """Weights for indices ``0..degree``, extending when necessary."""
        return self.extended(degree).w[: degree + 1]


def weight_sequence(kind, alpha: float, M: int) -> Weights:
    """Build ``w_0..w_M`` for the given kind and ``alpha``."""
    kind = WeightKind.parse(kind)
    alpha = float(alpha)
    M = int(M)
    if M < 0:
        raise DomainError("weight length must be nonnegative")
    if kind is WeightKind.COEFFICIENT:
        w = np.power(np.arange(1, M + 2, dtype=float), alpha)
    else:
        if alpha >= 2:
            raise DomainError(f"integral norm requires alpha < 2, got {alpha}")
        w = np.empty(M + 1)
        w[0] = 1.0
        if M:
            w[1:] = _lambda_table(M, 1.0 - alpha)
    return Weights(alpha, kind, w)


def weighted_inner(g, h, w: Weights) -> complex:
    """``sum_m w_m g_m conj(h_m)``."""
    g, h = as_poly(g), as_poly(h)
    m = min(len(g), len(h))
    ww = w.covering(m - 1)
    terms = ww * g.coeffs[:m] * np.conj(h.coeffs[:m])
    return complex(math.fsum(terms.real), math.fsum(terms.imag))


def weighted_norm_sq(g, w: Weights) -> float:
    """``sum_m w_m |g_m|^2`` with compensated summation."""
    g = as_poly(g)
    ww = w.covering(g.degree)
    return math.fsum(ww * np.abs(g.coeffs) ** 2)
