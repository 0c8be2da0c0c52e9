"""Detection and classification of bifurcation instants.

For a fixed eigenvalue lambda of the base Laplacian, degenerate
instants of the canonical variation are the positive roots of the
Jacobi quadratic

    (1/2) lambda^2 + alpha_t lambda + beta_t,

a Laurent polynomial in t.  A root t_* is a genuine bifurcation instant
when it is transversal, i.e. the derivative alpha_t' lambda + beta_t'
does not vanish at t_*; equivalently t_* is a simple root of the
cleared-denominator integer polynomial.  An instant additionally
produces solutions with nonconstant scalar curvature when lambda
differs from scal_{t_*}/(n-1); that coincidence is itself a polynomial
condition, decided exactly via a gcd.

Everything is exact: roots are held in isolating boxes, and both the
transversality and the scalar-coincidence decisions are algebraic,
never numerical.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from typing import Callable, Iterator, Union

from .algebra.intpoly import trim
from .algebra.laurent import LaurentPoly
from .algebra.roots import RootBox, isolate_positive_roots, root_is_simple
from .errors import DomainError
from .geometry import SubmersionData, curvature_package

Scalar = Union[int, Fraction]
Window = tuple[Fraction, Union[Fraction, None]]


@dataclass(frozen=True)
class Spectrum:
    """Strictly increasing positive Laplacian eigenvalues of a closed manifold.

    ``eigenvalue(k)`` is the k-th distinct nonzero eigenvalue, k >= 1;
    constants are excluded.
    """

    description: str
    eigenvalue_fn: Callable[[int], Fraction]

    def eigenvalue(self, k: int) -> Fraction:
        if k < 1:
            raise DomainError("eigenvalue index starts at 1")
        return Fraction(self.eigenvalue_fn(k))

    def first(self, count: int) -> list[Fraction]:
        return [self.eigenvalue(k) for k in range(1, count + 1)]

    def __iter__(self) -> Iterator[Fraction]:
        k = 1
        while True:
            yield self.eigenvalue(k)
            k += 1


@dataclass(frozen=True)
class InstantReport:
    """One isolated degenerate instant for one eigenvalue."""

    lam: Fraction
    root: RootBox
    transversal: bool
    scalar_distinct: bool
    jacobi_poly: LaurentPoly

    def to_json(self) -> dict[str, object]:
        return {
            "lambda": str(self.lam),
            "interval": self.root.to_json(),
            "poly": [int(c) for c in self.root.poly],
            "transversal": self.transversal,
            "scalar_distinct": self.scalar_distinct,
        }


def jacobi_residual(data: SubmersionData, lam: Scalar) -> LaurentPoly:
    """The Jacobi quadratic (1/2) lambda^2 + alpha_t lambda + beta_t."""
    lam = Fraction(lam)
    pkg = curvature_package(data)
    return Fraction(1, 2) * lam**2 + lam * pkg.alpha + pkg.beta


def discriminant(data: SubmersionData) -> LaurentPoly:
    """alpha_t^2 - 2 beta_t, whose nonnegativity admits real eigenbranches."""
    pkg = curvature_package(data)
    return pkg.alpha * pkg.alpha - 2 * pkg.beta


def scalar_coincidence_poly(data: SubmersionData, lam: Scalar) -> LaurentPoly:
    """Vanishes exactly where lambda equals scal_t/(n-1).

    Multiplying the coincidence equation by t gives the quadratic
    eta*l*t^2 + (lambda(n-1) - lambda_B(n-l))*t - l*lambda_F.
    """
    lam = Fraction(lam)
    n, l = data.n, data.l
    return LaurentPoly(
        {
            2: data.eta * l,
            1: lam * (n - 1) - data.lambda_b * (n - l),
            0: -l * data.lambda_f,
        }
    )


def find_instants(data: SubmersionData, lam: Scalar) -> list[InstantReport]:
    """All positive degenerate instants for one eigenvalue, ascending.

    Transversality is decided through root simplicity of the cleared
    polynomial; scalar-curvature distinctness through the absence of a
    common root with the coincidence quadratic inside the box.
    """
    lam = Fraction(lam)
    if lam <= 0:
        raise DomainError("eigenvalues of the base Laplacian are positive")
    residual = jacobi_residual(data, lam)
    if residual.is_zero:
        raise DomainError("Jacobi quadratic vanishes identically")
    cleared, _shift = residual.clear_denominators()
    coincidence, _ = scalar_coincidence_poly(data, lam).clear_denominators()
    reports = []
    for box in isolate_positive_roots(cleared):
        reports.append(
            InstantReport(
                lam=lam,
                root=box,
                transversal=root_is_simple(box),
                scalar_distinct=not box.vanishes_at_root(trim(coincidence)),
                jacobi_poly=residual,
            )
        )
    return reports


def enumerate_instants(
    data: SubmersionData,
    spectrum: Spectrum,
    window: Window = (Fraction(0), None),
    max_eigs: int = 10,
) -> list[InstantReport]:
    """Instants for the first max_eigs eigenvalues, filtered to a window.

    The window is an open interval (lo, hi) with hi = None meaning
    +infinity; membership of each algebraic root is decided exactly.
    Results are sorted by instant (exact comparison of roots), then by
    eigenvalue.  No attempt is made to certify which instants belong to
    an accumulating sequence; the asymptotic classifiers answer that.
    """
    lo, hi = window
    lo = Fraction(lo)
    if hi is not None:
        hi = Fraction(hi)
        if hi <= lo:
            return []
    collected = []
    for k in range(1, max_eigs + 1):
        for report in find_instants(data, spectrum.eigenvalue(k)):
            if report.root.compare_to_rational(lo) <= 0:
                continue
            if hi is not None and report.root.compare_to_rational(hi) >= 0:
                continue
            collected.append(report)

    def order(r1: InstantReport, r2: InstantReport) -> int:
        by_root = r1.root.compare(r2.root)
        if by_root:
            return by_root
        return (r1.lam > r2.lam) - (r1.lam < r2.lam)

    collected.sort(key=cmp_to_key(order))
    return collected
