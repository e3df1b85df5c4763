"""Exact univariate polynomials and real-root isolation.

Polynomials are tuples of coefficients, lowest degree first, with ``int`` or
``Fraction`` entries and no trailing zeros (the zero polynomial is ``()``).
Roots are isolated with a Sturm sequence and bisection at dyadic rationals,
so every sign decision is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

Poly = tuple


def trim(p) -> Poly:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def from_high(coeffs) -> Poly:
    """Build from coefficients listed highest degree first."""
    return trim(reversed(list(coeffs)))


def to_high(p: Poly) -> list:
    return list(reversed(p))


def degree(p: Poly) -> int:
    return len(p) - 1


def evaluate(p: Poly, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def sign_at(p: Poly, x: Fraction) -> int:
    """Exact sign of ``p(x)``; integer arithmetic only."""
    num, den = x.numerator, x.denominator
    d = len(p) - 1
    acc = 0
    scale = 1
    # sum c_i num^i den^(d-i), all integers when p has integer coefficients
    if all(isinstance(c, int) for c in p):
        for i in range(d, -1, -1):
            acc = acc * num + p[i] * scale
            scale *= den
        return (acc > 0) - (acc < 0)
    v = evaluate(p, x)
    return (v > 0) - (v < 0)


def mul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return trim(out)


def add(a: Poly, b: Poly) -> Poly:
    m = max(len(a), len(b))
    return trim((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(m))


def derivative(p: Poly) -> Poly:
    return trim(i * p[i] for i in range(1, len(p)))


def divmod_poly(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = [Fraction(c) for c in a]
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = Fraction(b[-1])
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        f = a[-1] / lead
        q[shift] = f
        for i, c in enumerate(b):
            a[shift + i] -= f * c
        a = list(trim(a))
    return trim(q), trim(a)


def _positive_scale(p: Poly) -> Poly:
    """Integer coefficients with content 1, scaled by a positive factor only."""
    if not p:
        return ()
    fr = [Fraction(c) for c in p]
    den = 1
    for c in fr:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in fr]
    g = 0
    for c in ints:
        g = gcd(g, c)
    return tuple(c // g for c in ints)


def primitive(p: Poly) -> Poly:
    """Scale to integer coefficients with content 1 and positive leading term."""
    q = _positive_scale(p)
    if q and q[-1] < 0:
        q = tuple(-c for c in q)
    return q


def poly_gcd(a: Poly, b: Poly) -> Poly:
    a, b = trim(a), trim(b)
    while b:
        _, r = divmod_poly(a, b)
        a, b = b, primitive(r)
    return primitive(a)


def squarefree(p: Poly) -> Poly:
    """``p`` divided by ``gcd(p, p')``: same roots, all simple."""
    p = primitive(p)
    g = poly_gcd(p, derivative(p))
    if len(g) <= 1:
        return p
    q, r = divmod_poly(p, g)
    assert not r
    return primitive(q)


def sturm_sequence(p: Poly) -> list[Poly]:
    # members may only be rescaled by positive constants, or sign counts break
    seq = [_positive_scale(p), _positive_scale(derivative(p))]
    while len(seq[-1]) > 1:
        _, r = divmod_poly(seq[-2], seq[-1])
        if not r:
            break
        seq.append(_positive_scale(tuple(-c for c in r)))
    return [s for s in seq if s]


def _variations(signs) -> int:
    v = 0
    last = 0
    for s in signs:
        if s == 0:
            continue
        if last and s != last:
            v += 1
        last = s
    return v


def _variations_at(seq: list[Poly], x: Fraction) -> int:
    return _variations(sign_at(s, x) for s in seq)


def _variations_at_inf(seq: list[Poly]) -> int:
    return _variations((1 if s[-1] > 0 else -1) for s in seq)


def cauchy_bound(p: Poly) -> Fraction:
    """Every root has absolute value strictly below this."""
    lead = abs(Fraction(p[-1]))
    return 1 + max((abs(Fraction(c)) / lead for c in p[:-1]), default=Fraction(0))


def charpoly(matrix) -> Poly:
    """Characteristic polynomial ``det(xI - M)`` of an integer matrix (Faddeev-LeVerrier)."""
    n = len(matrix)
    a = [[int(x) for x in row] for row in matrix]
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    m = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{n-k+1} I, with M_0 = 0
        if k == 1:
            m = [[int(i == j) for j in range(n)] for i in range(n)]
        else:
            am = [[sum(a[i][t] * m[t][j] for t in range(n) if a[i][t]) for j in range(n)] for i in range(n)]
            c = coeffs[n - k + 1]
            for i in range(n):
                am[i][i] += c
            m = am
        tr = sum(sum(a[i][t] * m[t][i] for t in range(n) if a[i][t]) for i in range(n))
        if tr % k:
            raise ArithmeticError("non-integral trace step; matrix is not integral")
        coeffs[n - k] = -tr // k
    return tuple(coeffs)


def _frac_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class RootInterval:
    """The largest real root of ``poly`` lies in ``(lo, hi]``, and is the only root there.

    With ``lo == hi`` the root is exactly that rational.
    """

    poly: Poly
    lo: Fraction
    hi: Fraction

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> float:
        return float((self.lo + self.hi) / 2)

    def contains(self, x) -> bool:
        x = Fraction(x)
        return x == self.hi if self.exact else self.lo < x <= self.hi

    def refine(self, width: Fraction) -> RootInterval:
        return _bisect(self.poly, sturm_sequence(self.poly), self.lo, self.hi, Fraction(width))

    def to_json(self) -> dict:
        return {
            "poly": [int(c) for c in to_high(self.poly)],
            "interval": [_frac_str(self.lo), _frac_str(self.hi)],
            "approx": self.midpoint,
        }


def _bisect(p: Poly, seq: list[Poly], lo: Fraction, hi: Fraction, width: Fraction) -> RootInterval:
    inf_v = _variations_at_inf(seq)
    while lo != hi and (hi - lo > width or _variations_at(seq, lo) - inf_v != 1):
        mid = (lo + hi) / 2
        above = _variations_at(seq, mid) - inf_v
        if above >= 1:
            lo = mid
        elif sign_at(p, mid) == 0:
            lo = hi = mid
        else:
            hi = mid
    return RootInterval(p, lo, hi)


def largest_root(p: Poly, width=Fraction(1, 2**40)) -> RootInterval:
    """Isolate the largest real root of ``p``; ValueError if it has none."""
    sf = squarefree(trim(p))
    if len(sf) < 2:
        raise ValueError("constant polynomial has no roots")
    seq = sturm_sequence(sf)
    b = cauchy_bound(sf)
    b = Fraction(2 ** max(0, (int(b) + 1).bit_length()))
    if _variations_at(seq, -b) - _variations_at_inf(seq) == 0:
        raise ValueError("polynomial has no real roots")
    return _bisect(sf, seq, -b, b, Fraction(width))


def root_exceeds(p: Poly, x) -> bool:
    """Exact test: is the largest real root of ``p`` strictly greater than ``x``?"""
    sf = squarefree(p)
    seq = sturm_sequence(sf)
    return _variations_at(seq, Fraction(x)) - _variations_at_inf(seq) >= 1


def format_poly(p: Poly, var: str = "x") -> str:
    terms = []
    for i in range(len(p) - 1, -1, -1):
        c = p[i]
        if c == 0:
            continue
        mag = abs(c)
        body = "" if (mag == 1 and i > 0) else _frac_str(Fraction(mag))
        if i >= 1:
            body += var + (f"^{i}" if i > 1 else "")
        sign = "-" if c < 0 else "+"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def roots_above(seq: list[Poly], x) -> int:
    """Distinct real roots greater than ``x``, given a Sturm sequence."""
    return _variations_at(seq, Fraction(x)) - _variations_at_inf(seq)


def roots_between(seq: list[Poly], lo, hi) -> int:
    """Distinct real roots in ``(lo, hi]``."""
    return _variations_at(seq, Fraction(lo)) - _variations_at(seq, Fraction(hi))


def isolates_largest(iv: RootInterval) -> bool:
    """Independent re-check that ``iv`` isolates the largest root of its polynomial."""
    if iv.exact:
        seq = sturm_sequence(iv.poly)
        return sign_at(iv.poly, iv.lo) == 0 and roots_above(seq, iv.lo) == 0
    seq = sturm_sequence(iv.poly)
    return roots_between(seq, iv.lo, iv.hi) == 1 and roots_above(seq, iv.hi) == 0
