"""Certified numerics for cyclotomic and quadratic-algebra elements.

Boxes are computed with arb ball arithmetic and exported with exact
rational endpoints.  The square root t of the radicand is always the
principal branch (argument in (-pi, pi]).
"""

from __future__ import annotations

import cmath
import enum
from dataclasses import dataclass
from fractions import Fraction

from flint import acb, arb, ctx, fmpq

from .field import CycElem

MAX_SIGN_BITS = 4096


class NotRealError(ValueError):
    pass


class Sign(enum.Enum):
    LT = -1
    EQ = 0
    GT = 1


def _arb_bounds(x: arb) -> tuple[Fraction, Fraction]:
    lo_m, lo_e = x.lower().man_exp()
    hi_m, hi_e = x.upper().man_exp()
    lo = Fraction(int(lo_m)) * Fraction(2) ** int(lo_e)
    hi = Fraction(int(hi_m)) * Fraction(2) ** int(hi_e)
    return lo, hi


@dataclass(frozen=True)
class ComplexInterval:
    re_lo: Fraction
    re_hi: Fraction
    im_lo: Fraction
    im_hi: Fraction
    precision: int

    @classmethod
    def from_acb(cls, z: acb, precision: int) -> "ComplexInterval":
        rl, rh = _arb_bounds(z.real)
        il, ih = _arb_bounds(z.imag)
        return cls(rl, rh, il, ih, precision)

    @property
    def width(self) -> Fraction:
        return max(self.re_hi - self.re_lo, self.im_hi - self.im_lo)

    def contains(self, z: complex | "ComplexInterval") -> bool:
        if isinstance(z, ComplexInterval):
            return (self.re_lo <= z.re_lo and z.re_hi <= self.re_hi
                    and self.im_lo <= z.im_lo and z.im_hi <= self.im_hi)
        re, im = Fraction(z.real), Fraction(z.imag)
        return self.re_lo <= re <= self.re_hi and self.im_lo <= im <= self.im_hi

    def dilate(self, eps: Fraction) -> "ComplexInterval":
        return ComplexInterval(self.re_lo - eps, self.re_hi + eps,
                               self.im_lo - eps, self.im_hi + eps, self.precision)

    def midpoint(self) -> complex:
        return complex(float((self.re_lo + self.re_hi) / 2), float((self.im_lo + self.im_hi) / 2))

    def as_strings(self, digits: int = 20) -> dict:
        def fmt(f: Fraction) -> str:
            return f"{float(f):.{digits}g}" if digits <= 17 else _decimal(f, digits)

        return {"re": [fmt(self.re_lo), fmt(self.re_hi)], "im": [fmt(self.im_lo), fmt(self.im_hi)]}

    def to_json(self) -> dict:
        """Exact dyadic endpoints as "p/q" strings, plus a readable midpoint."""
        mid = self.midpoint()
        return {
            "tag": "interval",
            "re": [str(self.re_lo), str(self.re_hi)],
            "im": [str(self.im_lo), str(self.im_hi)],
            "precision": self.precision,
            "approx": f"{mid.real:.15g}{mid.imag:+.15g}j",
        }

    @classmethod
    def from_json(cls, d: dict) -> "ComplexInterval":
        (rl, rh), (il, ih) = d["re"], d["im"]
        return cls(Fraction(rl), Fraction(rh), Fraction(il), Fraction(ih), int(d["precision"]))


def _decimal(f: Fraction, digits: int) -> str:
    from decimal import Decimal, localcontext

    with localcontext() as c:
        c.prec = digits
        return str(Decimal(f.numerator) / Decimal(f.denominator))


def _acb_cyc(x: CycElem) -> acb:
    n = x.conductor
    total = acb(0)
    for j, c in enumerate(x.coeffs):
        if not c:
            continue
        w = fmpq(2 * j, n)
        total += acb(arb.cos_pi_fmpq(w), arb.sin_pi_fmpq(w)) * arb(fmpq(c.numerator, c.denominator))
    return total


def _acb_sqrt_principal(a: CycElem, av: acb) -> acb:
    if a.is_real():
        # exact real radicand: avoid straddling the branch cut
        re = av.real
        if re > 0:
            return acb(re.sqrt(), 0)
        if re < 0:
            return acb(0, (-re).sqrt())
        if a.is_zero():
            return acb(0)
        raise ArithmeticError("radicand sign unresolved at this precision")
    if av.imag.contains(0) and not (av.real > 0):
        raise ArithmeticError("radicand box straddles the branch cut")
    return av.sqrt()


def _acb_value(x, bits: int) -> acb:
    if isinstance(x, CycElem):
        return _acb_cyc(x)
    val = _acb_cyc(x.u)
    if x.v:
        val += _acb_cyc(x.v) * _acb_sqrt_principal(x.radicand, _acb_cyc(x.radicand))
    return val


def numeric_interval(x, bits: int = 64) -> ComplexInterval:
    """A box certified to contain the value of ``x`` (CycElem or ExtElem)."""
    old = ctx.prec
    try:
        work = bits
        while True:
            ctx.prec = work + 16
            try:
                val = _acb_value(x, work)
                break
            except ArithmeticError:
                if work > 4 * MAX_SIGN_BITS:
                    raise
                work *= 2
        return ComplexInterval.from_acb(val, bits)
    finally:
        ctx.prec = old


def principal_sqrt_complex(a: CycElem) -> complex:
    old = ctx.prec
    try:
        ctx.prec = 96
        return complex(_acb_sqrt_principal(a, _acb_cyc(a)).mid())
    finally:
        ctx.prec = old


def double_value(x) -> complex:
    """Plain double-precision recomputation, independent of arb."""
    if isinstance(x, CycElem):
        return complex(x)
    if not x.v:
        return complex(x.u)
    a = x.radicand
    av = complex(a)
    if a.is_real():
        r = av.real
        root = complex(r ** 0.5, 0) if r >= 0 else complex(0, (-r) ** 0.5)
    else:
        root = cmath.sqrt(av)
    return complex(x.u) + complex(x.v) * root


def double_error_bound(x) -> Fraction:
    """A crude but safe bound on |double_value(x) - x|."""
    def l1(c: CycElem) -> Fraction:
        return sum((abs(f) for f in c.coeffs), Fraction(0))

    eps = Fraction(1, 2 ** 44)
    if isinstance(x, CycElem):
        return eps * (1 + l1(x)) * x.degree
    bound = (1 + l1(x.u)) * x.u.degree
    if x.v:
        bound += (1 + l1(x.v)) * x.v.degree * (2 + l1(x.radicand))
    return eps * bound


def _is_real(x) -> bool:
    if isinstance(x, CycElem):
        return x.is_real()
    return x == x.conj()


def sign_decide(x, threshold=0) -> Sign:
    """Exact comparison of a real element against a rational threshold."""
    if not _is_real(x):
        raise NotRealError("sign_decide needs a real element")
    d = x - threshold
    if not d:
        return Sign.EQ
    bits = 64
    while bits <= MAX_SIGN_BITS:
        box = numeric_interval(d, bits)
        if box.re_lo > 0:
            return Sign.GT
        if box.re_hi < 0:
            return Sign.LT
        bits *= 2
    # d is a nonzero algebraic number; failing to separate it from 0 here
    # means its magnitude is below 2^-4096
    raise ArithmeticError("sign not resolved within the precision cap")


def to_acb(x, bits: int) -> acb:
    """Ball enclosure of x at the given working precision (for callers doing their own arb algebra)."""
    with ctx.workprec(bits + 16):
        return _acb_value(x, bits)
