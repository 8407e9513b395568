"""Zero sets of approximating polynomials.

Roots are found with the Aberth-Ehrlich simultaneous iteration: every
estimate ``z_k`` takes the Newton step ``w = p/p'`` corrected by the
repulsion of the other estimates,

    z_k <- z_k - w_k / (1 - w_k * sum_{j != k} 1/(z_k - z_j)).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceFailure, DomainError
from .series import FactoredPoly, Poly, as_poly, derivative, evaluate

MAX_ITER = 500
MAX_RESTARTS = 3
STEP_TOL = 1e-13
RESIDUAL_TOL = 1e-8


@dataclass(frozen=True, eq=False)
class RootSet:
    n: int
    family: str
    roots: np.ndarray
    max_residual: float

    @property
    def moduli(self) -> np.ndarray:
        return np.abs(self.roots)


def _scaled_residuals(p: Poly, z: np.ndarray) -> np.ndarray:
    scale = np.max(np.abs(p.coeffs)) * np.maximum(1.0, np.abs(z)) ** p.degree
    return np.abs(evaluate(p, z)) / scale


def _sort_roots(z: np.ndarray) -> np.ndarray:
    order = np.lexsort((np.round(np.abs(z), 12), np.round(np.angle(z), 12)))
    return z[order]


def _aberth(p: Poly, dp: Poly, z0: np.ndarray):
    z = z0.copy()
    n = z.size
    active = np.ones(n, dtype=bool)
    eye = np.eye(n, dtype=bool)
    for it in range(MAX_ITER):
        pz = evaluate(p, z[active])
        dpz = evaluate(dp, z[active])
        with np.errstate(divide="ignore", invalid="ignore"):
            diff = z[active, None] - z[None, :]
            diff[eye[active]] = np.inf
            if np.any(diff == 0):
                return z, False
            rep = np.sum(1.0 / diff, axis=1)
            newton = pz / dpz
            step = newton / (1.0 - newton * rep)
        if not np.all(np.isfinite(step)):
            return z, False
        z[active] -= step
        small = np.abs(step) <= STEP_TOL * np.maximum(1.0, np.abs(z[active]))
        idx = np.flatnonzero(active)
        active[idx[small]] = False
        if not active.any():
            return z, True
    return z, False


def find_roots(p, family: str = "", n: int | None = None) -> RootSet:
    """All roots of ``p`` by Aberth-Ehrlich iteration.

    Initial guesses are equally spaced on the circle of the Cauchy radius
    ``1 + max|a_i / a_t|``, rotated by 0.3 rad. Up to three restarts use the
    geometric-mean radius ``|a_0/a_t|**(1/t)`` with fresh angular offsets.

    Raises
    ------
    ConvergenceFailure
        If no attempt converges to the residual tolerance.
    """
    p = as_poly(p)
    t = p.degree
    if t < 1:
        raise DomainError("root finding requires degree >= 1")
    a = p.coeffs
    dp = derivative(p)
    cauchy = 1.0 + float(np.max(np.abs(a[:-1] / a[-1])))
    nz = a[a != 0]
    geo = float(np.abs(nz[0] / a[-1]) ** (1.0 / t)) if a[0] != 0 else 1.0
    attempts = [(cauchy, 0.3)] + [(max(geo, 1e-3), 0.3 + 0.7 * r)
                                  for r in range(1, MAX_RESTARTS + 1)]
    ang = 2 * np.pi * np.arange(t) / t
    best = None
    for radius, offset in attempts:
        z, ok = _aberth(p, dp, radius * np.exp(1j * (ang + offset)))
        res = float(np.max(_scaled_residuals(p, z)))
        if best is None or res < best[1]:
            best = (z, res)
        if ok and res <= RESIDUAL_TOL:
            break
    z, res = best
    if not res <= RESIDUAL_TOL:
        raise ConvergenceFailure(f"root iteration failed (residual {res:.2e}, degree {t})")
    return RootSet(n if n is not None else t, family, _sort_roots(z), res)


def factor_poly(f, tol: float = 1e-5) -> FactoredPoly:
    """Cluster numerically computed roots into distinct roots with multiplicities."""
    f = as_poly(f)
    if f.degree < 1:
        return FactoredPoly((), (), f.coeffs[0])
    z = list(find_roots(f).roots)
    roots, mults = [], []
    while z:
        r = z.pop(0)
        group = [r] + [s for s in z if abs(s - r) <= tol * max(1.0, abs(r))]
        z = [s for s in z if abs(s - r) > tol * max(1.0, abs(r))]
        roots.append(complex(np.mean(group)))
        mults.append(len(group))
    return FactoredPoly(tuple(roots), tuple(mults), complex(f.coeffs[-1]))


def zero_set_sweep(f, family, alpha: float, kind, ns) -> list[RootSet]:
    """Zero sets of the family's approximants for each order in ``ns``.

    Zeros are scale invariant, so the shape of each approximant is used.
    """
    from .approx import build_approximant

    out = []
    for n in ns:
        ap = build_approximant(f, family, int(n), alpha, kind)
        rs = find_roots(ap.p, ap.family.value, int(n))
        out.append(rs)
    return out


def clustering_stats(sets, arc_count: int = 8) -> np.ndarray:
    """Distance from each arc midpoint of the unit circle to the nearest pooled root."""
    sets = list(sets)
    if not sets:
        raise DomainError("need at least one root set")
    pooled = np.concatenate([s.roots for s in sets])
    mid = np.exp(2j * np.pi * (np.arange(arc_count) + 0.5) / arc_count)
    return np.min(np.abs(pooled[None, :] - mid[:, None]), axis=1)

