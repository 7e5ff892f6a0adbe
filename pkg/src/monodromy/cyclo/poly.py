"""Dense univariate polynomials over Q and Sturm-sequence root counting."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from flint import fmpz_poly


def _trim(cs):
    cs = list(cs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


@dataclass(frozen=True)
class RationalPoly:
    """Coefficients low-to-high; the zero polynomial has no coefficients."""

    coefficients: tuple[Fraction, ...]

    def __init__(self, coefficients=()):
        object.__setattr__(self, "coefficients", _trim(Fraction(c) for c in coefficients))

    @classmethod
    def monomial(cls, k: int, c=1) -> "RationalPoly":
        return cls([0] * k + [c])

    @classmethod
    def from_roots_product(cls, factors) -> "RationalPoly":
        out = cls([1])
        for f in factors:
            out = out * f
        return out

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def lead(self) -> Fraction:
        return self.coefficients[-1] if self.coefficients else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coefficients

    def is_monic_integer(self) -> bool:
        return self.lead == 1 and all(c.denominator == 1 for c in self.coefficients)

    def monic(self) -> "RationalPoly":
        lc = self.lead
        return RationalPoly(c / lc for c in self.coefficients)

    def __call__(self, x):
        acc = 0 * x if not isinstance(x, (int, Fraction)) else Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __add__(self, other: "RationalPoly") -> "RationalPoly":
        a, b = self.coefficients, other.coefficients
        n = max(len(a), len(b))
        return RationalPoly((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n))

    def __neg__(self):
        return RationalPoly(-c for c in self.coefficients)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, RationalPoly):
            return RationalPoly(c * other for c in self.coefficients)
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return RationalPoly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return RationalPoly(out)

    __rmul__ = __mul__

    def __divmod__(self, other: "RationalPoly"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coefficients)
        db, lb = other.degree, other.lead
        quot = [Fraction(0)] * max(len(rem) - db, 0)
        for k in range(len(rem) - 1 - db, -1, -1):
            c = rem[k + db] / lb
            quot[k] = c
            if c:
                for j, y in enumerate(other.coefficients):
                    rem[k + j] -= c * y
        return RationalPoly(quot), RationalPoly(rem[:db] if db > 0 else [])

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def derivative(self) -> "RationalPoly":
        return RationalPoly(i * c for i, c in enumerate(self.coefficients) if i)

    def gcd(self, other: "RationalPoly") -> "RationalPoly":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic() if not a.is_zero() else a

    def squarefree_part(self) -> "RationalPoly":
        g = self.gcd(self.derivative())
        return (self // g).monic()

    def sturm_sequence(self) -> list["RationalPoly"]:
        seq = [self, self.derivative()]
        while not seq[-1].is_zero():
            r = seq[-2] % seq[-1]
            if r.is_zero():
                break
            seq.append(-r)
        return seq

    def count_roots(self, lo, hi) -> int:
        """Number of distinct real roots in the half-open interval (lo, hi]."""
        if self.is_zero():
            raise ValueError("the zero polynomial has infinitely many roots")
        seq = self.sturm_sequence()
        return _variations(seq, Fraction(lo)) - _variations(seq, Fraction(hi))

    def count_roots_closed(self, lo, hi) -> int:
        n = self.count_roots(lo, hi)
        return n + (1 if self(Fraction(lo)) == 0 else 0)

    def to_flint(self) -> fmpz_poly:
        den = 1
        for c in self.coefficients:
            den = den * c.denominator // _gcd(den, c.denominator)
        return fmpz_poly([int(c * den) for c in self.coefficients])

    def __repr__(self):
        if not self.coefficients:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coefficients[k]
            if not c:
                continue
            mono = "" if k == 0 else ("X" if k == 1 else f"X^{k}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}{'*' + mono if mono else ''}")
        return " + ".join(terms).replace("+ -", "- ")


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _variations(seq, x: Fraction) -> int:
    signs = [s for s in (p(x) for p in seq) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if (a > 0) != (b > 0))


@lru_cache(maxsize=None)
def cyclotomic_rational(n: int) -> RationalPoly:
    return RationalPoly(int(c) for c in fmpz_poly.cyclotomic(n).coeffs())


def cyclotomic_index(p: RationalPoly) -> int | None:
    """m with p == Phi_m, or None.  Candidates are all m with phi(m) = deg p."""
    from .field import totient

    d = p.degree
    if d < 1 or not p.is_monic_integer():
        return None
    # phi(m) >= sqrt(m/2) bounds the search
    for m in range(1, 2 * d * d + 3):
        if totient(m) == d and cyclotomic_rational(m) == p:
            return m
    return None
