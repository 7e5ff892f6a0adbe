"""JSON encoding of field and algebra elements.

Rationals are written as "p/q" (or "p") decimal strings so that arbitrarily
large numerators survive a round trip.
"""

from __future__ import annotations

from fractions import Fraction

from .field import CycElem
from .quadratic import ExtElem


def _frac(s: str) -> Fraction:
    return Fraction(s)


def to_json(x) -> dict:
    if isinstance(x, CycElem):
        return {"conductor": x.conductor, "coeffs": [str(c) for c in x.coeffs]}
    out = {"conductor": x.conductor, "coeffs": [str(c) for c in x.u.coeffs]}
    if x.v:
        out["t_coeffs"] = [str(c) for c in x.v.coeffs]
        out["radicand"] = to_json(x.radicand)
    return out


def from_json(d: dict):
    n = int(d["conductor"])
    u = CycElem(n, [_frac(c) for c in d["coeffs"]])
    if "t_coeffs" not in d:
        return u
    v = CycElem(n, [_frac(c) for c in d["t_coeffs"]])
    return ExtElem(u, v, from_json(d["radicand"]))
