import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from optapprox import DecayProfile, PolynomialApproximant
from optapprox.errors import DomainError, ZeroFunction
from optapprox.series import FactoredPoly


class TestPolynomialApproximant:
    def test_params_round_trip(self):
        est = PolynomialApproximant(n=3, alpha=0.0, kind="coeff", family="cesaro")
        assert est.get_params() == {"n": 3, "alpha": 0.0, "kind": "coeff", "family": "cesaro"}
        est.set_params(n=5)
        assert clone(est).n == 5

    def test_fit_golden(self):
        est = PolynomialApproximant(n=3, alpha=1.0).fit([1, -1])
        np.testing.assert_allclose(est.ratios_, np.array([13, 7, 3]) / 25, atol=1e-12)
        assert est.coef_.shape == (4,)
        assert est.score() == -est.residual_norm_sq_

    def test_predict_and_transform(self):
        est = PolynomialApproximant(n=6).fit([1, -1])
        z = np.array([0.0, 0.5, -0.3j])
        p = est.predict(z)
        np.testing.assert_allclose(est.transform(z), p * (1 - z) - 1)

    def test_score_other_target(self):
        est = PolynomialApproximant(n=4).fit([1, -1])
        assert est.score([1, -1]) == pytest.approx(est.score())
        assert est.score([1, -1, 1]) < 0

    def test_accepts_column_vector_and_factored(self):
        a = PolynomialApproximant(n=4).fit(np.array([[1], [-1]]))
        b = PolynomialApproximant(n=4).fit(FactoredPoly((1.0,), (1,), -1.0))
        np.testing.assert_allclose(a.coef_, b.coef_, atol=1e-12)

    def test_not_fitted(self):
        with pytest.raises(NotFittedError):
            PolynomialApproximant().predict([0.1])

    @pytest.mark.parametrize("kwargs,target,err", [
        ({"n": -1}, [1, -1], DomainError),
        ({"n": 2.5}, [1, -1], ValueError),
        ({"alpha": "one"}, [1, -1], ValueError),
        ({"kind": "sobolev"}, [1, -1], ValueError),
        ({"family": "best"}, [1, -1], ValueError),
        ({}, [0, 0], ZeroFunction),
        ({}, [], ValueError),
        ({}, [["a"]], ValueError),
        ({}, np.ones((2, 2)), ValueError),
    ])
    def test_validation(self, kwargs, target, err):
        with pytest.raises(err):
            PolynomialApproximant(**kwargs).fit(target)


class TestDecayProfile:
    def test_fit_transform(self):
        prof = DecayProfile(ns=[16, 32, 64], alpha=0.0).fit([1, -1])
        X = prof.transform()
        assert X.shape == (3, 3)
        assert prof.stats_["ratio"] <= 4
        np.testing.assert_array_equal(X[:, 0], [16, 32, 64])

    def test_validation(self):
        with pytest.raises(DomainError):
            DecayProfile(ns=[4, 2, 8]).fit([1, -1])
        with pytest.raises(DomainError):
            DecayProfile(alpha=1.5).fit([1, -1])

    def test_not_fitted(self):
        with pytest.raises(NotFittedError):
            DecayProfile().transform()

    def test_clone(self):
        prof = DecayProfile(ns=(8, 16, 32), family="phi")
        assert clone(prof).get_params()["family"] == "phi"
