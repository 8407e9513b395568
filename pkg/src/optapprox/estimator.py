"""Estimator-style front end.

The "training data" of these estimators is the target function ``f`` itself,
given as coefficients (or a :class:`~optapprox.series.FactoredPoly`).
Parameters follow scikit-learn conventions so the objects work with
``get_params``/``set_params``/``clone``.

>>> est = PolynomialApproximant(n=2, alpha=1.0).fit([1, -1])
>>> est.ratios_.real.round(6)
array([0.454545, 0.181818])
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.exceptions import NotFittedError
from sklearn.utils.validation import check_is_fitted

from .approx import Family, build_approximant, residual
from .decay import comparability_stats, decay_table
from .series import as_poly, evaluate
from .space import WeightKind, weight_sequence
from .validation import check_alpha, check_order, check_orders, check_target


class PolynomialApproximant(BaseEstimator):
    """Polynomial ``p`` of degree ``<= n`` with ``p f ~ 1`` in ``D_alpha``.

    Parameters
    ----------
    n : int, default=4
        Degree bound.
    alpha : float, default=1.0
        Space parameter (1 Dirichlet, 0 Hardy, -1 Bergman).
    kind : {"integral", "coeff"}, default="integral"
        Which diagonal norm to use.
    family : str, default="optimal"
        Constructor; see :class:`~optapprox.approx.Family`.

    Attributes
    ----------
    coef_ : ndarray of complex
        Coefficients of ``p``.
    ratios_ : ndarray of complex
        ``coef_[k] / coef_[0]`` for ``k >= 1``.
    residual_norm_sq_ : float
        ``||p f - 1||^2``.
    approximant_ : Approximant
    """

    def __init__(self, n=4, alpha=1.0, kind="integral", family="optimal"):
        self.n = n
        self.alpha = alpha
        self.kind = kind
        self.family = family

    def _validate_params(self):
        n = check_order(self.n)
        alpha = check_alpha(self.alpha)
        kind = WeightKind.parse(self.kind)
        family = Family.parse(self.family)
        return n, alpha, kind, family

    def fit(self, f, y=None):
        n, alpha, kind, family = self._validate_params()
        f = check_target(f)
        ap = build_approximant(f, family, n, alpha, kind)
        self.target_ = as_poly(f)
        self.approximant_ = ap
        self.coef_ = ap.p.coeffs.copy()
        self.ratios_ = ap.ratios
        self.residual_norm_sq_ = ap.residual_norm_sq
        return self

    def predict(self, z):
        """Evaluate ``p`` at the points ``z``."""
        check_is_fitted(self, "approximant_")
        return evaluate(self.approximant_.p, np.asarray(z, dtype=complex))

    def transform(self, z):
        """Pointwise remainder ``p(z) f(z) - 1``."""
        check_is_fitted(self, "approximant_")
        z = np.asarray(z, dtype=complex)
        return self.predict(z) * evaluate(self.target_, z) - 1.0

    def score(self, f=None, y=None):
        """Negative residual ``-||p f - 1||^2`` (the fitted target by default)."""
        check_is_fitted(self, "approximant_")
        if f is None:
            return -self.residual_norm_sq_
        f = as_poly(check_target(f))
        w = weight_sequence(self.approximant_.kind, self.approximant_.alpha,
                            self.approximant_.p.degree + f.degree)
        return -residual(self.approximant_.p, f, w)


class DecayProfile(BaseEstimator):
    """Residual decay of a family over a range of orders.

    Attributes
    ----------
    records_ : list of DecayRecord
    stats_ : dict
        ``comparability_stats`` over orders ``>= tail_start``.
    """

    def __init__(self, ns=(32, 64, 128, 256, 512, 1024), alpha=1.0,
                 kind="integral", family="optimal", tail_start=0):
        self.ns = ns
        self.alpha = alpha
        self.kind = kind
        self.family = family
        self.tail_start = tail_start

    def fit(self, f, y=None):
        ns = check_orders(self.ns)
        alpha = check_alpha(self.alpha, upper=1.0)
        f = check_target(f)
        self.records_ = decay_table(f, Family.parse(self.family), alpha,
                                    WeightKind.parse(self.kind), ns)
        self.stats_ = comparability_stats(self.records_, self.tail_start)
        return self

    def transform(self, X=None):
        """Array of ``(n, dist_sq, scaled)`` rows."""
        if not hasattr(self, "records_"):
            raise NotFittedError("DecayProfile is not fitted yet")
        return np.array([[r.n, r.dist_sq, r.scaled] for r in self.records_])
