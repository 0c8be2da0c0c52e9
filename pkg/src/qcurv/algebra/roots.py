"""Exact isolation of positive real roots of integer polynomials.

Isolation uses Descartes' rule of signs on Moebius-transformed
polynomials with dyadic bisection: a candidate interval is accepted once
the sign-variation count of (x+1)^n p(1/(x+1)) drops to 0 or 1.  The
input polynomial is replaced by its squarefree part for the search, so
roots of any multiplicity are isolated; the original polynomial is kept
on the box because multiplicity questions (simplicity, common roots
with another polynomial) are asked about it, not about the radical.

Boxes are immutable.  Refinement returns a new, narrower box; a
bisection point that happens to hit the root exactly collapses the box
to width zero.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from ..errors import DomainError
from .intpoly import (
    Coeff,
    cauchy_root_bound_pow2,
    count_roots_halfopen,
    degree,
    derivative,
    divexact_x_minus_1,
    evaluate,
    monomial_substitute,
    poly_gcd,
    primitive,
    reverse,
    sign_variations,
    squarefree_part,
    strip_low_zeros,
    taylor_shift_1,
    trim,
)


def _sign(x: Coeff) -> int:
    return (x > 0) - (x < 0)


class RootBox:
    """An interval (lo, hi) containing exactly one real root of ``poly``.

    Width zero means the root is the rational number lo == hi.  For a
    box of positive width the squarefree part of ``poly`` changes sign
    across the interval and neither endpoint is a root.
    """

    __slots__ = ("poly", "lo", "hi", "_sqfree", "_sign_lo")

    def __init__(
        self,
        poly: Sequence[int],
        lo: Fraction,
        hi: Fraction,
        _sqfree: tuple[int, ...] | None = None,
    ):
        self.poly = trim(poly)
        self.lo = Fraction(lo)
        self.hi = Fraction(hi)
        if not self.poly:
            raise DomainError("root box needs a nonzero polynomial")
        if self.lo > self.hi:
            raise DomainError("root box interval is reversed")
        self._sqfree = _sqfree if _sqfree is not None else squarefree_part(self.poly)
        if self.lo == self.hi:
            if evaluate(self.poly, self.lo):
                raise DomainError("exact root box endpoint is not a root")
            self._sign_lo = 0
        else:
            s_lo = _sign(evaluate(self._sqfree, self.lo))
            s_hi = _sign(evaluate(self._sqfree, self.hi))
            if s_lo * s_hi >= 0:
                raise DomainError("root box does not bracket a sign change")
            self._sign_lo = s_lo

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def refine(self, width: Fraction | int | str) -> "RootBox":
        """Shrink the box to at most the requested width by bisection."""
        target = Fraction(width)
        if target <= 0:
            raise DomainError("refinement width must be positive")
        if self.is_exact:
            return self
        lo, hi = self.lo, self.hi
        while hi - lo > target:
            mid = (lo + hi) / 2
            v = evaluate(self._sqfree, mid)
            if not v:
                return RootBox(self.poly, mid, mid, self._sqfree)
            if _sign(v) == self._sign_lo:
                lo = mid
            else:
                hi = mid
        return RootBox(self.poly, lo, hi, self._sqfree)

    def compare_to_rational(self, x: Fraction | int) -> int:
        """Sign of (root - x), decided exactly."""
        x = Fraction(x)
        if self.is_exact:
            return _sign(self.lo - x)
        if x <= self.lo:
            return 1
        if x >= self.hi:
            return -1
        v = evaluate(self._sqfree, x)
        if not v:
            return 0
        return 1 if _sign(v) == self._sign_lo else -1

    def compare(self, other: "RootBox") -> int:
        """Total order on the isolated roots (0 when they coincide)."""
        if self.is_exact and other.is_exact:
            return _sign(self.lo - other.lo)
        if self.is_exact:
            return -other.compare_to_rational(self.lo)
        if other.is_exact:
            return self.compare_to_rational(other.lo)
        common = poly_gcd(self.poly, other.poly)
        a, b = self, other
        first = True
        while True:
            if a.hi <= b.lo:
                return -1
            if b.hi <= a.lo:
                return 1
            if first and degree(common) >= 1:
                ilo, ihi = max(a.lo, b.lo), min(a.hi, b.hi)
                if count_roots_halfopen(common, ilo, ihi):
                    return 0
            first = False
            a = a.refine(a.width / 4)
            b = b.refine(b.width / 4)
            if a.is_exact or b.is_exact:
                return a.compare(b)

    def vanishes_at_root(self, g: Sequence[Coeff]) -> bool:
        """Whether the polynomial g has a zero at this box's root."""
        g = trim(g)
        if not g:
            return True
        if self.is_exact:
            return not evaluate(g, self.lo)
        h = poly_gcd(self.poly, g)
        if degree(h) < 1:
            return False
        return count_roots_halfopen(h, self.lo, self.hi) > 0

    def to_json(self) -> list[str]:
        return [str(self.lo), str(self.hi)]

    def __repr__(self) -> str:
        if self.is_exact:
            return f"RootBox(root={self.lo})"
        return f"RootBox(({self.lo}, {self.hi}))"


def root_is_simple(box: RootBox) -> bool:
    """True when the isolated root is a simple root of box.poly."""
    return not box.vanishes_at_root(derivative(box.poly))


def isolate_positive_roots(coeffs: Sequence[int]) -> list[RootBox]:
    """Disjoint isolating boxes for every positive real root, ascending."""
    p = trim(coeffs)
    if not p:
        raise DomainError("cannot isolate roots of the zero polynomial")
    stripped, _ = strip_low_zeros(p)
    if degree(stripped) < 1:
        return []
    sf = squarefree_part(stripped)
    bound = cauchy_root_bound_pow2(sf)
    scaled = primitive([int(c) for c in monomial_substitute(sf, bound)])
    intervals: list[tuple[Fraction, Fraction]] = []
    _descartes_split(scaled, Fraction(0), Fraction(1), intervals)
    # Attach sf, not squarefree_part(p): a factor t**k in p would make the
    # whole-polynomial radical vanish at a box endpoint lo == 0.
    boxes = []
    for lo, hi in intervals:
        glo, ghi = lo * bound, hi * bound
        if glo != ghi:
            glo, ghi = _settle_endpoints(sf, glo, ghi)
        boxes.append(RootBox(p, glo, ghi, sf))
    return boxes


def _settle_endpoints(
    sf: tuple[int, ...], lo: Fraction, hi: Fraction
) -> tuple[Fraction, Fraction]:
    """Shrink (lo, hi) until neither endpoint is a root of sf.

    The splitter guarantees exactly one root of sf strictly inside, but a
    sibling interval's exactly-hit root can sit on an endpoint.  Halving
    toward the interior root removes it while keeping the bracket.
    """
    while not (evaluate(sf, lo) and evaluate(sf, hi)):
        mid = (lo + hi) / 2
        if not evaluate(sf, mid):
            return mid, mid
        if count_roots_halfopen(sf, lo, mid):
            hi = mid
        else:
            lo = mid
    return lo, hi


def _descartes_split(
    r: tuple[int, ...],
    lo: Fraction,
    hi: Fraction,
    out: list[tuple[Fraction, Fraction]],
) -> None:
    """Recursive Descartes test for a squarefree r on local coordinates (0,1).

    Maintains r(0) != 0 and r(1) != 0, recording bisection points that
    are roots as exact (width zero) intervals.
    """
    variations = sign_variations(taylor_shift_1(reverse(r)))
    if variations == 0:
        return
    if variations == 1:
        out.append((lo, hi))
        return
    n = degree(r)
    mid = (lo + hi) / 2
    left = primitive([int(c) << (n - k) for k, c in enumerate(r)])
    right = taylor_shift_1(left)
    exact_mid = bool(right) and right[0] == 0
    if exact_mid:
        right, _ = strip_low_zeros(right)
        while not evaluate(left, 1):
            left = divexact_x_minus_1(left)
    _descartes_split(left, lo, mid, out)
    if exact_mid:
        out.append((mid, mid))
    _descartes_split(right, mid, hi, out)
