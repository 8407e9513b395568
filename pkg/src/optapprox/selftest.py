"""Golden checks runnable from the command line (``optapprox selftest``).

Each item returns plain data so the report can be serialised byte-for-byte
reproducibly. Expected values are exact rationals and integers.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .approx import (
    closed_form_one_minus_z,
    optimal_approximant,
    residual,
    riesz_family,
    taylor_section,
)
from .gram import assert_bandwidth, build_normal_system
from .linalg import cholesky_solve, cramer_solve
from .roots import find_roots, zero_set_sweep
from .series import Poly, reciprocal_coeffs
from .space import harmonic, weight_sequence, weighted_norm_sq

ONE_MINUS_Z = Poly([1.0, -1.0])

GOLDEN_RATIOS = {
    1: [Fraction(1, 3)],
    2: [Fraction(5, 11), Fraction(2, 11)],
    3: [Fraction(13, 25), Fraction(7, 25), Fraction(3, 25)],
    4: [Fraction(77, 137), Fraction(47, 137), Fraction(27, 137), Fraction(12, 137)],
}

GOLDEN_MATRICES = {
    1: [[3]],
    2: [[3, -2], [-2, 5]],
    3: [[3, -2, 0], [-2, 5, -3], [0, -3, 7]],
    4: [[3, -2, 0, 0], [-2, 5, -3, 0], [0, -3, 7, -4], [0, 0, -4, 9]],
}


def _dirichlet_system(n):
    return build_normal_system(ONE_MINUS_Z, n, weight_sequence("integral", 1.0, n + 1))


def check_ratios():
    worst = 0.0
    for n, want in GOLDEN_RATIOS.items():
        got = optimal_approximant(ONE_MINUS_Z, n, 1.0, "integral").ratios
        worst = max(worst, float(np.max(np.abs(got - np.array([float(q) for q in want])))))
    return worst <= 1e-12, {"max_abs_error": worst}


def check_matrices():
    ok = True
    for n, want in GOLDEN_MATRICES.items():
        G = _dirichlet_system(n).to_dense()[1:, 1:]
        ok &= bool(np.array_equal(G, np.array(want, dtype=complex)))
    return ok, {}


def check_cholesky_m1():
    sys = _dirichlet_system(1)
    c = cholesky_solve(sys)
    err = abs(c[1] / c[0] - 1 / 3)
    return err <= 1e-12, {"abs_error": float(err)}


def check_cramer_p3():
    r = cramer_solve(_dirichlet_system(3))
    err = float(np.max(np.abs(r - np.array([13, 7, 3]) / 25)))
    return err <= 1e-12, {"max_abs_error": err}


def check_taylor_failure():
    bad = []
    for n in range(0, 101):
        w = weight_sequence("coeff", 1.0, n + 2)
        b = reciprocal_coeffs(ONE_MINUS_Z, n)
        if residual(taylor_section(b, n), ONE_MINUS_Z, w) != n + 2:
            bad.append(n)
        if weighted_norm_sq(Poly.monomial(n + 1), w) != n + 2:
            bad.append(n)
    return not bad, {"failures": bad}


def check_harmonic_zero():
    return harmonic(0) == 0.0 and abs(harmonic(4) - 25 / 12) <= 1e-15, {}


def check_closed_families():
    worst = 0.0
    for alpha in (1, 0, -1):
        for n in range(1, 21):
            a = riesz_family(n, alpha).coeffs
            b = closed_form_one_minus_z(n, 1 - alpha).coeffs
            s = optimal_approximant(ONE_MINUS_Z, n, alpha, "integral").shape.coeffs
            worst = max(worst, float(np.max(np.abs(a - b))), float(np.max(np.abs(a - s))))
    return worst <= 1e-9, {"max_abs_error": worst}


def check_bandwidth():
    sys = build_normal_system(ONE_MINUS_Z, 10, weight_sequence("integral", 1.0, 11))
    return assert_bandwidth(sys, 1) and sys.bandwidth == 3, {}


def check_taylor_zeros():
    worst = 0.0
    for rs in zero_set_sweep(ONE_MINUS_Z, "taylor", 1.0, "integral", range(1, 51)):
        n = rs.n
        want = np.exp(2j * np.pi * np.arange(1, n + 1) / (n + 1))
        d = np.abs(rs.roots[:, None] - want[None, :])
        worst = max(worst, float(np.max(np.min(d, axis=1))), float(np.max(np.min(d, axis=0))))
    return worst <= 1e-8, {"max_distance": worst}


def check_p1_root():
    r = find_roots(Poly([1.0, 1 / 3])).roots
    return abs(r[0] + 3) <= 1e-12, {"root": [float(r[0].real), float(r[0].imag)]}


def check_outside_disk():
    low = np.inf
    for fam in ("cesaro", "riesz"):
        for rs in zero_set_sweep(ONE_MINUS_Z, fam, 1.0, "integral", range(1, 51)):
            low = min(low, float(np.min(rs.moduli)))
    return low >= 1 - 1e-6, {"min_modulus": low}


def check_oracle(seed: int):
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(40):
        t = int(rng.integers(1, 5))
        a = rng.normal(size=t + 1) + 1j * rng.normal(size=t + 1)
        a[0] = 1.0 + abs(a[0])
        n = int(rng.integers(1, 13))
        alpha = float(rng.choice([-1.0, 0.0, 1.0]))
        kind = str(rng.choice(["coeff", "integral"]))
        sys = build_normal_system(Poly(a), n, weight_sequence(kind, alpha, n + t))
        c = cholesky_solve(sys)
        worst = max(worst, float(np.max(np.abs(c[1:] / c[0] - cramer_solve(sys)))))
    return worst <= 1e-9, {"max_abs_error": worst}


GOLDEN = [
    ("optimal ratios p1..p4 for 1-z, Dirichlet", check_ratios),
    ("normal matrices M1..M4 for 1-z, Dirichlet", check_matrices),
    ("M1 solve gives 1/3", check_cholesky_m1),
    ("Cramer ratios p3 = (13,7,3)/25", check_cramer_p3),
    ("Taylor residual for 1-z equals n+2", check_taylor_failure),
    ("H_0 = 0, H_4 = 25/12", check_harmonic_zero),
    ("harmonic closed forms match solver", check_closed_families),
    ("bandwidth 2t+1 for t=1", check_bandwidth),
    ("Taylor zeros of 1/(1-z) are roots of unity minus 1", check_taylor_zeros),
    ("root of 1 + z/3 is -3", check_p1_root),
    ("Cesaro/Riesz zeros for 1-z outside disk (empirical)", check_outside_disk),
]


def run_selftest(seed: int = 0) -> list[dict]:
    items = [(name, fn) for name, fn in GOLDEN]
    items.append((f"Cramer vs Cholesky on random instances (seed {seed})",
                  lambda: check_oracle(seed)))
    report = []
    for name, fn in items:
        try:
            ok, detail = fn()
        except Exception as exc:  # report, do not abort the suite
            ok, detail = False, {"error": f"{type(exc).__name__}: {exc}"}
        report.append({"name": name, "passed": bool(ok), "detail": detail})
    return report
