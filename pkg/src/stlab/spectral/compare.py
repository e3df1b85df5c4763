"""Certified ordering of largest polynomial roots.

Two isolating intervals are bisected until they are disjoint. Equality is
certified instead when the polynomials share a factor with a root in both
intervals. Nothing here touches floating point.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from stlab.families import FamilySpec
from stlab.spectral.poly import (
    Poly,
    RootInterval,
    _frac_str,
    isolates_largest,
    largest_root,
    poly_gcd,
    roots_above,
    roots_between,
    sign_at,
    squarefree,
    sturm_sequence,
)

MAX_BITS = 4000


class Order(enum.Enum):
    LESS = "Less"
    GREATER = "Greater"
    EQUAL = "Equal"


class Undecided(RuntimeError):
    """Intervals still overlap after the maximum refinement depth."""


def _separation(a: RootInterval, b: RootInterval) -> Order | None:
    # strict gaps only, so the reported margin is a positive separation
    if a.hi < b.lo:
        return Order.LESS
    if b.hi < a.lo:
        return Order.GREATER
    return None


def _shared_root(a: RootInterval, b: RootInterval) -> bool:
    g = poly_gcd(a.poly, b.poly)
    if len(g) < 2:
        return False
    if a.exact or b.exact:
        x = a.lo if a.exact else b.lo
        return a.contains(x) and b.contains(x) and sign_at(g, x) == 0
    lo, hi = max(a.lo, b.lo), min(a.hi, b.hi)
    return lo < hi and roots_between(sturm_sequence(squarefree(g)), lo, hi) >= 1


@dataclass(frozen=True)
class Certificate:
    order: Order
    a: RootInterval
    b: RootInterval

    @property
    def margin(self) -> Fraction:
        """Rational lower bound on the gap between the two roots."""
        if self.order is Order.LESS:
            return self.b.lo - self.a.hi
        if self.order is Order.GREATER:
            return self.a.lo - self.b.hi
        return Fraction(0)

    def check(self) -> bool:
        """Re-verify from the stored data alone."""
        if not (isolates_largest(self.a) and isolates_largest(self.b)):
            return False
        if self.order is Order.EQUAL:
            return _shared_root(self.a, self.b)
        return _separation(self.a, self.b) is self.order

    def to_json(self) -> dict:
        m = self.margin
        return {
            "order": self.order.value,
            "a": self.a.to_json(),
            "b": self.b.to_json(),
            "margin": _frac_str(m),
            "margin_approx": float(m),
        }


def compare_roots(pa: Poly, pb: Poly, max_bits: int = MAX_BITS) -> Certificate:
    a = largest_root(pa, Fraction(1))
    b = largest_root(pb, Fraction(1))
    share = len(poly_gcd(a.poly, b.poly)) >= 2
    for _ in range(max_bits):
        order = _separation(a, b)
        if order is not None:
            return Certificate(order, a, b)
        if share and _shared_root(a, b):
            return Certificate(Order.EQUAL, a, b)
        if a.width >= b.width and a.width > 0:
            a = a.refine(a.width / 2)
        elif b.width > 0:
            b = b.refine(b.width / 2)
        else:
            break
    raise Undecided(f"roots not separated after {max_bits} refinements")


def certified_compare(a: FamilySpec, b: FamilySpec, max_bits: int = MAX_BITS) -> Certificate:
    """Order ``q(a)`` against ``q(b)`` exactly via their quotient polynomials."""
    from stlab.spectral.quotient import q_exact

    return compare_roots(q_exact(a).poly, q_exact(b).poly, max_bits)


def compare_root_to_rational(p: Poly, x) -> Order:
    """Order the largest real root of ``p`` against the rational ``x``."""
    x = Fraction(x)
    sf = squarefree(p)
    if roots_above(sturm_sequence(sf), x) >= 1:
        return Order.GREATER
    return Order.EQUAL if sign_at(sf, x) == 0 else Order.LESS
