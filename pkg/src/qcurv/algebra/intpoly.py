"""Dense univariate polynomial utilities over the integers and rationals.

Coefficients are stored ascending (index k holds the t**k coefficient)
with no trailing zeros, so the zero polynomial is the empty tuple.  The
integer-only routines (Taylor shift, dyadic scaling, content) back the
root isolation code; the Fraction-based ones (Euclidean gcd, Sturm
chains) back the exact decision procedures.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence, Union

Coeff = Union[int, Fraction]
Poly = tuple[Coeff, ...]


def trim(coeffs: Sequence[Coeff]) -> Poly:
    """Drop trailing zero coefficients so the leading term is genuine."""
    last = len(coeffs)
    while last > 0 and not coeffs[last - 1]:
        last -= 1
    return tuple(coeffs[:last])


def degree(p: Sequence[Coeff]) -> int:
    """Degree of a trimmed polynomial; -1 for the zero polynomial."""
    return len(p) - 1


def evaluate(p: Sequence[Coeff], x: Coeff) -> Coeff:
    acc: Coeff = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def derivative(p: Sequence[Coeff]) -> Poly:
    return tuple(k * p[k] for k in range(1, len(p)))


def scale(p: Sequence[Coeff], factor: Coeff) -> Poly:
    return trim([c * factor for c in p])


def monomial_substitute(p: Sequence[Coeff], factor: Coeff) -> Poly:
    """p(factor * x), exact when factor is an integer."""
    return trim([c * factor**k for k, c in enumerate(p)])


def taylor_shift_1(p: Sequence[Coeff]) -> Poly:
    """p(x + 1) by repeated synthetic addition; integer in, integer out."""
    out = list(p)
    n = len(out)
    for i in range(1, n):
        for j in range(n - 1, i - 1, -1):
            out[j - 1] += out[j]
    return trim(out)


def reverse(p: Sequence[Coeff]) -> Poly:
    """x**deg(p) * p(1/x); requires a trimmed nonzero polynomial."""
    return trim(tuple(reversed(p)))


def strip_low_zeros(p: Sequence[Coeff]) -> tuple[Poly, int]:
    """Factor out the largest power of x, returning (quotient, power)."""
    k = 0
    while k < len(p) and not p[k]:
        k += 1
    return tuple(p[k:]), k


def divexact_x_minus_1(p: Sequence[Coeff]) -> Poly:
    """Exact quotient of p by (x - 1); requires p(1) == 0."""
    out: list[Coeff] = [0] * (len(p) - 1)
    carry: Coeff = 0
    for k in range(len(p) - 1, 0, -1):
        carry = carry + p[k]
        out[k - 1] = carry
    return trim(out)


def content(p: Sequence[int]) -> int:
    g = 0
    for c in p:
        g = gcd(g, abs(c))
    return g


def primitive(p: Sequence[int]) -> Poly:
    g = content(p)
    if g <= 1:
        return tuple(p)
    return tuple(c // g for c in p)


def to_integer(p: Sequence[Coeff]) -> Poly:
    """Clear denominators and divide out the content, keeping the sign."""
    q = trim(p)
    if not q:
        return q
    m = lcm(*(Fraction(c).denominator for c in q))
    ints = [int(Fraction(c) * m) for c in q]
    return primitive(ints)


def sign_variations(values: Sequence[Coeff]) -> int:
    """Count strict sign changes in a sequence, skipping zeros."""
    count = 0
    prev = 0
    for v in values:
        s = (v > 0) - (v < 0)
        if s and prev and s != prev:
            count += 1
        if s:
            prev = s
    return count


def poly_gcd(p: Sequence[Coeff], q: Sequence[Coeff]) -> Poly:
    """Primitive integer gcd of two polynomials (Euclid over Q)."""
    a = tuple(Fraction(c) for c in trim(p))
    b = tuple(Fraction(c) for c in trim(q))
    while b:
        a, b = b, _rem(a, b)
    return to_integer(a)


def _rem(a: tuple[Fraction, ...], b: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
    rem = list(a)
    lead = b[-1]
    while len(rem) >= len(b):
        if not rem[-1]:
            rem.pop()
            continue
        factor = rem[-1] / lead
        offset = len(rem) - len(b)
        for i, c in enumerate(b):
            rem[offset + i] -= factor * c
        rem.pop()
    return trim(rem)


def squarefree_part(p: Sequence[int]) -> Poly:
    """The product of the distinct irreducible factors of p."""
    q = trim(p)
    if degree(q) < 1:
        return q
    g = poly_gcd(q, derivative(q))
    if degree(g) < 1:
        return q
    quot, rem = divmod_frac(q, g)
    assert not rem, "gcd must divide exactly"
    return to_integer(quot)


def divmod_frac(p: Sequence[Coeff], d: Sequence[Coeff]) -> tuple[Poly, Poly]:
    """Quotient and remainder over Q."""
    rem = [Fraction(c) for c in trim(p)]
    den = trim(d)
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    lead = Fraction(den[-1])
    quot = [Fraction(0)] * max(len(rem) - len(den) + 1, 0)
    while len(rem) >= len(den):
        factor = rem[-1] / lead
        offset = len(rem) - len(den)
        quot[offset] = factor
        for i, c in enumerate(den):
            rem[offset + i] -= factor * Fraction(c)
        rem.pop()
        while rem and not rem[-1]:
            rem.pop()
    return trim(quot), trim(rem)


def sturm_chain(p: Sequence[Coeff]) -> list[Poly]:
    """Canonical Sturm chain p, p', then negated Euclidean remainders."""
    chain: list[Poly] = []
    a = tuple(Fraction(c) for c in trim(p))
    if not a:
        return chain
    chain.append(a)
    b = trim(derivative(a))
    while b:
        chain.append(b)
        a, b = b, tuple(-c for c in _rem(a, b))
    return chain


def sturm_count(chain: Sequence[Poly], lo: Coeff, hi: Coeff) -> int:
    """Number of distinct real roots in the half-open interval (lo, hi]."""
    at_lo = sign_variations([evaluate(q, lo) for q in chain])
    at_hi = sign_variations([evaluate(q, hi) for q in chain])
    return at_lo - at_hi


def count_roots_halfopen(p: Sequence[Coeff], lo: Coeff, hi: Coeff) -> int:
    """Distinct real roots of p in (lo, hi], multiplicities ignored.

    The squarefree part is taken first: zero-skipping sign variations
    give the half-open count for a squarefree chain even when an
    endpoint is itself a root, which a degenerate chain would miscount.
    """
    q = trim(p)
    if degree(q) < 1:
        return 0
    return sturm_count(sturm_chain(squarefree_part(q)), lo, hi)


def cauchy_root_bound_pow2(p: Sequence[Coeff]) -> int:
    """A power of two strictly exceeding every real root of p."""
    q = trim(p)
    if degree(q) < 1:
        return 1
    lead = abs(Fraction(q[-1]))
    bound = 1 + max(abs(Fraction(c)) for c in q[:-1]) / lead
    b = 1
    while b < bound:
        b <<= 1
    return b
