from __future__ import annotations

from itertools import islice
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qcurv.algebra.laurent import LaurentPoly
from qcurv.algebra.quadext import QuadExtValue
from qcurv.bifurcation import (
    Spectrum,
    discriminant,
    enumerate_instants,
    find_instants,
    jacobi_residual,
    scalar_coincidence_poly,
)
from qcurv.errors import DomainError
from qcurv.geometry import SubmersionData, curvature_package

ROUND_7 = SubmersionData(7, 3, Fraction(3), Fraction(4), Fraction(2), Fraction(12))
SPECTRUM_7 = Spectrum("first quaternionic projective line", lambda k: 4 * k * (k + 3))


def test_jacobi_residual_worked_example() -> None:
    residual = jacobi_residual(ROUND_7, 16)
    assert residual == LaurentPoly(
        {
            -2: Fraction(-51, 100),
            -1: Fraction(-392, 25),
            0: Fraction(4771, 25),
            1: Fraction(-112, 5),
            2: 21,
        }
    )
    cleared, shift = residual.clear_denominators()
    assert cleared == (-51, -1568, 19084, -2240, 2100)
    assert shift == 2


def test_jacobi_residual_at_lambda_zero_is_beta() -> None:
    assert jacobi_residual(ROUND_7, 0) == curvature_package(ROUND_7).beta


def test_discriminant_value_at_reference_scale() -> None:
    disc = discriminant(ROUND_7)
    assert disc == curvature_package(ROUND_7).alpha ** 2 - 2 * curvature_package(ROUND_7).beta
    assert disc.evaluate(1) == Fraction(3481, 16)  # (59/4)**2


def test_scalar_coincidence_poly() -> None:
    assert scalar_coincidence_poly(ROUND_7, 16) == LaurentPoly({2: 12, 1: 48, 0: -6})
    # lambda = scal(1)/(n-1) = 7 makes t = 1 a coincidence point.
    assert scalar_coincidence_poly(ROUND_7, 7).evaluate(1) == 0


def test_find_instants_for_lambda_16() -> None:
    reports = find_instants(ROUND_7, 16)
    assert len(reports) == 1
    r = reports[0]
    assert r.lam == 16
    assert r.root.compare_to_rational(Fraction(1, 10)) == 1
    assert r.root.compare_to_rational(Fraction(1, 5)) == -1
    assert r.transversal and r.scalar_distinct
    blob = r.to_json()
    assert blob["lambda"] == "16"
    assert blob["transversal"] is True and blob["scalar_distinct"] is True


def test_find_instants_for_lambda_7_hits_reference_scale() -> None:
    # At t = 1 the round S^7 has scal/(n-1) = 7, so this branch carries
    # constant scalar curvature and is flagged as not scalar-distinct.
    reports = find_instants(ROUND_7, 7)
    coincident = [r for r in reports if r.root.compare_to_rational(1) == 0]
    assert len(coincident) == 1
    r = coincident[0]
    assert r.transversal
    assert not r.scalar_distinct
    assert r.root.refine(Fraction(1, 2**20)).is_exact


def test_residual_vanishes_on_refined_boxes() -> None:
    for lam in (16, 7, 40):
        for r in find_instants(ROUND_7, lam):
            box = r.root.refine(Fraction(1, 10**10))
            # A point inside the refined box where the residual is tiny.
            point = box.refine(Fraction(1, 10**18)).midpoint()
            assert box.lo <= point <= box.hi
            assert abs(r.jacobi_poly.evaluate(point)) < Fraction(1, 10**6)


def test_transversality_matches_derivative_sign() -> None:
    pkg = curvature_package(ROUND_7)
    for lam in (7, 16, 40, 96):
        dres = pkg.alpha.derivative() * lam + pkg.beta.derivative()
        for r in find_instants(ROUND_7, lam):
            box = r.root.refine(Fraction(1, 10**20))
            if box.is_exact:
                assert (dres.evaluate(box.lo) != 0) == r.transversal
            else:
                lo, hi = dres.evaluate(box.lo), dres.evaluate(box.hi)
                if r.transversal:
                    assert lo * hi > 0
                else:
                    assert lo * hi <= 0


def test_nonpositive_lambda_rejected() -> None:
    with pytest.raises(DomainError):
        find_instants(ROUND_7, 0)
    with pytest.raises(DomainError):
        find_instants(ROUND_7, Fraction(-3, 2))


def test_spectrum_protocol() -> None:
    assert SPECTRUM_7.eigenvalue(1) == 16
    assert SPECTRUM_7.first(3) == [16, 40, 72]
    assert list(islice(SPECTRUM_7, 3)) == [16, 40, 72]
    with pytest.raises(DomainError):
        SPECTRUM_7.eigenvalue(0)


def test_enumerate_instants_window_filtering() -> None:
    everything = enumerate_instants(ROUND_7, SPECTRUM_7, max_eigs=6)
    assert everything
    inside = enumerate_instants(ROUND_7, SPECTRUM_7, (Fraction(1, 10), Fraction(1, 5)), 6)
    assert all(
        r.root.compare_to_rational(Fraction(1, 10)) > 0
        and r.root.compare_to_rational(Fraction(1, 5)) < 0
        for r in inside
    )
    assert any(r.lam == 16 for r in inside)
    assert enumerate_instants(ROUND_7, SPECTRUM_7, (Fraction(1), Fraction(1)), 6) == []
    # Every windowed report also appears in the unrestricted run.
    assert len(inside) <= len(everything)


def test_enumerate_instants_sorted_by_root_then_eigenvalue() -> None:
    reports = enumerate_instants(ROUND_7, SPECTRUM_7, max_eigs=8)
    for a, b in zip(reports, reports[1:]):
        c = a.root.compare(b.root)
        assert c <= 0
        if c == 0:
            assert a.lam < b.lam


def test_smallest_instants_decrease_with_eigenvalue() -> None:
    # Large eigenvalues degenerate ever closer to the collapsed limit.
    smallest = []
    for k in range(3, 13):
        reports = find_instants(ROUND_7, SPECTRUM_7.eigenvalue(k))
        assert reports
        smallest.append(reports[0].root)
    for a, b in zip(smallest, smallest[1:]):
        assert b.compare(a) == -1


datas = st.builds(
    lambda n, l, zeta, lam_f, lam_b: SubmersionData(
        n, min(l, n - 1), zeta, zeta * (n - min(l, n - 1)) / min(l, n - 1),
        lam_f if min(l, n - 1) > 1 else Fraction(0), lam_b,
    ),
    st.integers(min_value=5, max_value=12),
    st.integers(min_value=1, max_value=11),
    st.fractions(min_value=0, max_value=8, max_denominator=4),
    st.fractions(min_value=0, max_value=10, max_denominator=4),
    st.fractions(min_value=-8, max_value=24, max_denominator=4),
)
ts = st.fractions(min_value=Fraction(1, 10), max_value=10, max_denominator=12)


@settings(max_examples=60, deadline=None)
@given(datas, ts)
def test_eigenbranch_sum_and_product(data: SubmersionData, t: Fraction) -> None:
    # Roots of the lambda-quadratic at fixed t obey the usual symmetric
    # function identities, exercised in the quadratic extension.
    pkg = curvature_package(data)
    a, b = pkg.alpha.evaluate(t), pkg.beta.evaluate(t)
    d = a * a - 2 * b
    if d < 0:
        return
    plus = QuadExtValue(-a, 1, d)
    minus = QuadExtValue(-a, -1, d)
    assert plus + minus == -2 * a
    assert plus * minus == 2 * b
    for branch in (plus, minus):
        # (1/2) x^2 + a x + b evaluated in Q(sqrt(d)) must vanish.
        value = branch * branch * Fraction(1, 2) + branch * a + b
        assert value.sign() == 0
