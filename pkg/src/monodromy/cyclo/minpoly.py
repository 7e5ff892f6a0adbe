from __future__ import annotations

from fractions import Fraction

from .field import CycElem, CyclotomicError, units
from .poly import RationalPoly
from .quadratic import ExtElem


def _polymul(a: list, b: list) -> list:
    out = [None] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            term = x * y
            out[i + j] = term if out[i + j] is None else out[i + j] + term
    return out


def _product(factors: list[list]) -> list:
    # balanced product tree keeps intermediate degrees low
    while len(factors) > 1:
        nxt = [_polymul(factors[i], factors[i + 1]) for i in range(0, len(factors) - 1, 2)]
        if len(factors) % 2:
            nxt.append(factors[-1])
        factors = nxt
    return factors[0]


def _rationalize(coeffs: list[CycElem]) -> RationalPoly:
    out = []
    for c in coeffs:
        if not c.is_rational():
            raise CyclotomicError("Galois-stable product has irrational coefficient")
        out.append(c.to_fraction())
    return RationalPoly(out)


def galois_orbit(x: CycElem) -> list[CycElem]:
    """Distinct conjugates of x, in order of first appearance over ascending k."""
    seen = {}
    for k in units(x.conductor):
        y = x.galois(k)
        seen.setdefault(y.key(), y)
    return list(seen.values())


def minimal_polynomial(x) -> RationalPoly:
    """Monic minimal polynomial over Q of a CycElem or ExtElem."""
    if isinstance(x, ExtElem) and not x.v:
        x = x.u
    if isinstance(x, CycElem):
        if x.is_rational():
            return RationalPoly([-x.to_fraction(), 1])
        one = CycElem.rational(x.conductor, 1)
        return _rationalize(_product([[-y, one] for y in galois_orbit(x)]))

    # (X - u^s)^2 - (v^s)^2 a^s over the distinct images of (u, v^2 a)
    w = x.v * x.v * x.radicand
    pairs = {}
    for k in units(x.conductor):
        uk, wk = x.u.galois(k), w.galois(k)
        pairs.setdefault((uk.key(), wk.key()), (uk, wk))
    one = CycElem.rational(x.conductor, 1)
    quads = [[uk * uk - wk, -2 * uk, one] for uk, wk in pairs.values()]
    full = _rationalize(_product(quads))
    rad = full.squarefree_part()
    if rad(x):
        raise CyclotomicError("radical of the norm polynomial does not vanish at x")
    return rad


def minpoly_check(x, p: RationalPoly) -> bool:
    """True when p(x) == 0 exactly."""
    val = p(x)
    return not val
