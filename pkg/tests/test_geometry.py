from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qcurv.algebra.laurent import LaurentPoly
from qcurv.errors import ValidationError
from qcurv.geometry import (
    CurvaturePackage,
    SubmersionData,
    curvature_package,
    einstein_q,
    pointwise_q,
    validate,
)

# Fibre S^3 over S^4, round total space S^7 at t = 1.
ROUND_7 = SubmersionData(7, 3, Fraction(3), Fraction(4), Fraction(2), Fraction(12))
# Fibre S^7 over S^8(1/2), round total space S^15 at t = 1.
ROUND_15 = SubmersionData(15, 7, Fraction(7), Fraction(8), Fraction(6), Fraction(28))
# Circle fibre over CP^2, round total space S^5 at t = 1.
ROUND_5 = SubmersionData(5, 1, Fraction(1), Fraction(4), Fraction(0), Fraction(6))


def _valid_data(draw) -> SubmersionData:
    n = draw(st.integers(min_value=5, max_value=15))
    l = draw(st.integers(min_value=1, max_value=n - 1))
    zeta = draw(st.fractions(min_value=0, max_value=10, max_denominator=6))
    eta = zeta * (n - l) / l
    lam_f = Fraction(0) if l == 1 else draw(st.fractions(min_value=0, max_value=12, max_denominator=6))
    lam_b = draw(st.fractions(min_value=-10, max_value=30, max_denominator=6))
    return SubmersionData(n, l, zeta, eta, lam_f, lam_b)


valid_data = st.composite(_valid_data)()
positive_t = st.fractions(min_value=Fraction(1, 12), max_value=12, max_denominator=20)


def test_validate_flags_each_violation() -> None:
    assert validate(ROUND_7) == []
    assert any("n=4" in p for p in validate(SubmersionData(4, 1, 0, 0, 0, 1)))
    assert any("l=7" in p for p in validate(SubmersionData(7, 7, 0, 0, 1, 1)))
    assert any("zeta" in p for p in validate(SubmersionData(7, 3, -1, Fraction(-4, 3), 2, 12)))
    assert any("eta*l" in p for p in validate(SubmersionData(7, 3, 3, 5, 2, 12)))
    assert any("lambda_f" in p for p in validate(SubmersionData(7, 1, 1, 6, 3, 12)))


def test_curvature_package_rejects_invalid_data() -> None:
    with pytest.raises(ValidationError) as info:
        curvature_package(SubmersionData(7, 3, 3, 5, 2, 12))
    assert info.value.violations


def test_worked_example_polynomials() -> None:
    pkg = curvature_package(ROUND_7)
    assert pkg.scal == LaurentPoly({-1: 6, 0: 48, 1: -12})
    assert pkg.kappa == LaurentPoly({0: 12, 1: -6})
    assert pkg.alpha == LaurentPoly({-1: Fraction(29, 20), 0: Fraction(34, 5), 1: Fraction(-1, 2)})
    assert pkg.ric_vertical == LaurentPoly({-1: 2, 1: 4})
    assert pkg.ric_vertical_reference == LaurentPoly({0: 2, 2: 4})
    assert pkg.alpha.evaluate(1) == Fraction(31, 4)
    assert pkg.q_curv.evaluate(1) == Fraction(315, 8)


@pytest.mark.parametrize("data", [ROUND_5, ROUND_7, ROUND_15])
def test_round_sphere_identities_at_reference_scale(data: SubmersionData) -> None:
    n = data.n
    pkg = curvature_package(data)
    at = pkg.evaluate_at(1)
    assert at["scal"] == n * (n - 1)
    assert at["q_curv"] == Fraction(n * (n**2 - 4), 8)
    assert at["q_curv"] == einstein_q(n, n - 1)
    assert at["ric_vertical"] == n - 1
    assert at["ric_horizontal"] == n - 1
    assert at["ric_norm_sq"] == n * (n - 1) ** 2
    # Degenerate direction of the quadratic at the round metric: lambda = n.
    lam = Fraction(n)
    assert lam**2 / 2 + at["alpha"] * lam + at["beta"] == 0


def test_pointwise_and_einstein_q_values() -> None:
    assert pointwise_q(5, 20, 80) == Fraction(105, 8)
    assert einstein_q(7, 6) == Fraction(315, 8)
    assert einstein_q(5, 4) == Fraction(105, 8)
    # The Laplacian term enters with coefficient 1/(2(n-1)).
    assert pointwise_q(5, 20, 80, 8) == Fraction(105, 8) + 1
    assert einstein_q(6, 0) == 0


@settings(max_examples=80, deadline=None)
@given(valid_data)
def test_exponent_windows(data: SubmersionData) -> None:
    pkg = curvature_package(data)
    assert set(pkg.scal.exponents()) <= {-1, 0, 1}
    assert set(pkg.alpha.exponents()) <= {-1, 0, 1}
    assert set(pkg.kappa.exponents()) <= {0, 1}
    assert set(pkg.q_curv.exponents()) <= {-2, -1, 0, 1, 2}
    if data.l == 1:
        # One-dimensional fibres are flat, so nothing blows up as t -> 0.
        for name in CurvaturePackage._FIELDS:
            poly = getattr(pkg, name)
            assert poly.is_zero or poly.min_exp >= 0


@settings(max_examples=80, deadline=None)
@given(valid_data)
def test_structural_identities(data: SubmersionData) -> None:
    n, l = data.n, data.l
    pkg = curvature_package(data)
    t = LaurentPoly.t_power(1)
    assert pkg.beta == -2 * pkg.q_curv
    assert pkg.ric_horizontal == pkg.kappa
    assert pkg.scal == l * pkg.ric_vertical + (n - l) * pkg.ric_horizontal
    assert pkg.ric_norm_sq == l * pkg.ric_vertical**2 + (n - l) * pkg.ric_horizontal**2
    assert pkg.ric_vertical_reference == t * pkg.ric_vertical
    # Q assembled from |Ric|^2 and scal agrees with the direct formula.
    c = Fraction(n**3 - 4 * n**2 + 16 * n - 16, 8 * (n - 1) ** 2 * (n - 2) ** 2)
    assert pkg.q_curv == c * pkg.scal**2 - 2 * pkg.ric_norm_sq / (n - 2) ** 2


@settings(max_examples=60, deadline=None)
@given(valid_data, positive_t)
def test_pointwise_evaluation_consistency(data: SubmersionData, t: Fraction) -> None:
    pkg = curvature_package(data)
    at = pkg.evaluate_at(t)
    assert at["q_curv"] == pointwise_q(data.n, at["scal"], at["ric_norm_sq"])
    assert at["beta"] == -2 * at["q_curv"]
    assert at["ric_norm_sq"] >= 0
    # Cauchy-Schwarz between the eigenvalue vector and the all-ones vector.
    assert data.n * at["ric_norm_sq"] >= at["scal"] ** 2


def test_evaluate_at_reports_every_field() -> None:
    pkg = curvature_package(ROUND_7)
    at = pkg.evaluate_at(Fraction(1, 2))
    assert set(at) == set(CurvaturePackage._FIELDS)
    assert at["scal"] == 6 * 2 + 48 - 12 * Fraction(1, 2)


def test_json_shapes() -> None:
    assert ROUND_7.to_json() == {
        "n": "7",
        "l": "3",
        "zeta": "3",
        "eta": "4",
        "lambda_f": "2",
        "lambda_b": "12",
    }
    blob = curvature_package(ROUND_7).to_json()
    assert set(blob) == set(CurvaturePackage._FIELDS)
    assert blob["kappa"] == {"0": "12", "1": "-6"}
