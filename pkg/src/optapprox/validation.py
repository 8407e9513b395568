"""Input checks shared by the estimators and the command line."""

from __future__ import annotations

import numbers

import numpy as np

from .errors import DomainError, ZeroFunction
from .series import FactoredPoly, Poly


def check_target(f):
    """Coerce ``f`` to a :class:`Poly` unless it is already factored.

    Accepts a :class:`Poly`, a :class:`FactoredPoly` or a 1-D array-like of
    (complex) coefficients in increasing powers.
    """
    if isinstance(f, FactoredPoly):
        return f
    if isinstance(f, Poly):
        p = f
    else:
        arr = np.asarray(f)
        if arr.ndim == 2 and 1 in arr.shape:
            arr = arr.ravel()
        if arr.ndim != 1:
            raise ValueError(f"expected a 1-D coefficient array, got shape {arr.shape}")
        if arr.size == 0:
            raise ValueError("empty coefficient array")
        if not np.issubdtype(arr.dtype, np.number):
            raise ValueError(f"coefficients must be numeric, got dtype {arr.dtype}")
        p = Poly(arr.astype(complex))
    if p.is_zero():
        raise ZeroFunction("target function is identically zero")
    return p


def check_order(n, name: str = "n", minimum: int = 0) -> int:
    if isinstance(n, bool) or not isinstance(n, numbers.Integral):
        raise ValueError(f"{name} must be an integer, got {n!r}")
    if n < minimum:
        raise DomainError(f"{name} must be >= {minimum}, got {n}")
    return int(n)


def check_orders(ns, minimum: int = 0) -> list[int]:
    ns = [check_order(n, "order", minimum) for n in ns]
    if not ns:
        raise ValueError("empty order range")
    if any(b <= a for a, b in zip(ns, ns[1:])):
        raise DomainError("orders must be strictly increasing")
    return ns


def check_alpha(alpha, upper: float | None = None) -> float:
    if isinstance(alpha, bool) or not isinstance(alpha, numbers.Real):
        raise ValueError(f"alpha must be a real number, got {alpha!r}")
    alpha = float(alpha)
    if not np.isfinite(alpha):
        raise ValueError("alpha must be finite")
    if upper is not None and alpha > upper:
        raise DomainError(f"alpha must be <= {upper}, got {alpha}")
    return alpha
