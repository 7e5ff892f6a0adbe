"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Elements are stored on the power basis 1, z, ..., z^(phi(N)-1) after
reduction modulo the N-th cyclotomic polynomial, so equal elements of the
same conductor have identical coefficient vectors.  The polynomial kernel is
FLINT's ``fmpq_poly``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational

from flint import fmpq, fmpq_poly, fmpz_poly


class CyclotomicError(ArithmeticError):
    pass


@lru_cache(maxsize=None)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1
    if n > 1:
        out.append((n, 1))
    return tuple(out)


@lru_cache(maxsize=None)
def totient(n: int) -> int:
    r = n
    for p, _ in factorize(n):
        r = r // p * (p - 1)
    return r


def mobius(n: int) -> int:
    fs = factorize(n)
    if any(e > 1 for _, e in fs):
        return 0
    return -1 if len(fs) % 2 else 1


@lru_cache(maxsize=None)
def units(n: int) -> tuple[int, ...]:
    """Residues k in [1, n] coprime to n, ascending."""
    return tuple(k for k in range(1, n + 1) if gcd(k, n) == 1)


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> fmpq_poly:
    return fmpq_poly(fmpz_poly.cyclotomic(n))


@lru_cache(maxsize=None)
def _monomial(n: int, k: int) -> fmpq_poly:
    k %= n
    deg = totient(n)
    coeffs = [0] * (k + 1)
    coeffs[k] = 1
    p = fmpq_poly(coeffs)
    if k >= deg:
        p = p % cyclotomic_poly(n)
    return p


def _as_fmpq(x) -> fmpq:
    if isinstance(x, fmpq):
        return x
    if isinstance(x, int):
        return fmpq(x)
    if isinstance(x, Rational):
        return fmpq(int(x.numerator), int(x.denominator))
    raise TypeError(f"cannot coerce {type(x).__name__} to a rational")


class CycElem:
    """An element of Q(zeta_N) in canonical reduced form.

    Instances are immutable.  Mixed-conductor operands are lifted to the
    lcm of the two conductors.
    """

    __slots__ = ("conductor", "_poly")

    def __init__(self, conductor: int, coeffs=()):
        if conductor < 1:
            raise ValueError("conductor must be positive")
        self.conductor = conductor
        p = fmpq_poly([_as_fmpq(c) for c in coeffs]) if coeffs else fmpq_poly()
        if p.degree() >= totient(conductor):
            p = p % cyclotomic_poly(conductor)
        self._poly = p

    @classmethod
    def _wrap(cls, conductor: int, poly: fmpq_poly) -> "CycElem":
        obj = cls.__new__(cls)
        obj.conductor = conductor
        obj._poly = poly
        return obj

    @classmethod
    def rational(cls, conductor: int, value) -> "CycElem":
        return cls._wrap(conductor, fmpq_poly([_as_fmpq(value)]))

    # -- views ---------------------------------------------------------

    @property
    def degree(self) -> int:
        return totient(self.conductor)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        raw = self._poly.coeffs()
        out = [Fraction(int(c.p), int(c.q)) for c in raw]
        out.extend([Fraction(0)] * (self.degree - len(out)))
        return tuple(out)

    def key(self) -> tuple:
        """Hashable canonical form, valid for comparisons at a fixed conductor."""
        p = self._poly
        return (self.conductor, str(p))

    def denominator(self) -> int:
        return int(self._poly.denom())

    def is_zero(self) -> bool:
        return self._poly.is_zero()

    def is_one(self) -> bool:
        return self._poly.is_one()

    def is_rational(self) -> bool:
        return self._poly.degree() <= 0

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise CyclotomicError("element is not rational")
        if self._poly.is_zero():
            return Fraction(0)
        c = self._poly.coeffs()[0]
        return Fraction(int(c.p), int(c.q))

    # -- conductor handling --------------------------------------------

    def lift(self, conductor: int) -> "CycElem":
        """Re-express in Q(zeta_M) for a multiple M of the conductor."""
        if conductor == self.conductor:
            return self
        if conductor % self.conductor:
            raise CyclotomicError(f"{conductor} is not a multiple of {self.conductor}")
        step = conductor // self.conductor
        coeffs = self._poly.coeffs()
        if not coeffs:
            return CycElem._wrap(conductor, fmpq_poly())
        spread = [0] * ((len(coeffs) - 1) * step + 1)
        for j, c in enumerate(coeffs):
            spread[j * step] = c
        p = fmpq_poly(spread)
        if p.degree() >= totient(conductor):
            p = p % cyclotomic_poly(conductor)
        return CycElem._wrap(conductor, p)

    def _coerce(self, other):
        if isinstance(other, CycElem):
            if other.conductor == self.conductor:
                return self, other
            n = self.conductor * other.conductor // gcd(self.conductor, other.conductor)
            return self.lift(n), other.lift(n)
        try:
            return self, CycElem._wrap(self.conductor, fmpq_poly([_as_fmpq(other)]))
        except TypeError:
            return None

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return CycElem._wrap(a.conductor, a._poly + b._poly)

    __radd__ = __add__

    def __neg__(self):
        return CycElem._wrap(self.conductor, -self._poly)

    def __sub__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return CycElem._wrap(a.conductor, a._poly - b._poly)

    def __rsub__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return CycElem._wrap(a.conductor, b._poly - a._poly)

    def __mul__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        n = a.conductor
        if a._poly.degree() <= 0 or b._poly.degree() <= 0:
            return CycElem._wrap(n, a._poly * b._poly)
        return CycElem._wrap(n, (a._poly * b._poly) % cyclotomic_poly(n))

    __rmul__ = __mul__

    def inverse(self) -> "CycElem":
        if self._poly.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        if self._poly.degree() == 0:
            return CycElem._wrap(self.conductor, fmpq_poly([1 / self._poly.coeffs()[0]]))
        g, s, _ = self._poly.xgcd(cyclotomic_poly(self.conductor))
        # g is a nonzero constant since Phi_N is irreducible
        return CycElem._wrap(self.conductor, s / g.coeffs()[0])

    def __truediv__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a * b.inverse()

    def __rtruediv__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return b * a.inverse()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        base = self if e >= 0 else self.inverse()
        e = abs(e)
        result = CycElem.rational(self.conductor, 1)
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # -- Galois action -------------------------------------------------

    def galois(self, k: int) -> "CycElem":
        """Image under the automorphism zeta_N -> zeta_N^k (k coprime to N)."""
        n = self.conductor
        if gcd(k, n) != 1:
            raise CyclotomicError(f"{k} is not a unit modulo {n}")
        k %= n
        if k == 1 or self._poly.degree() <= 0:
            return self
        coeffs = self._poly.coeffs()
        spread = [0] * n
        for j, c in enumerate(coeffs):
            if c:
                spread[(j * k) % n] += c
        p = fmpq_poly(spread) % cyclotomic_poly(n)
        return CycElem._wrap(n, p)

    def conj(self) -> "CycElem":
        """Complex conjugate, i.e. zeta -> zeta^-1."""
        return self.galois(self.conductor - 1) if self.conductor > 2 else self

    def is_real(self) -> bool:
        return self == self.conj()

    def normalized_trace(self) -> Fraction:
        """Tr(x)/[Q(zeta_N):Q]; invariant under conductor lifting."""
        n = self.conductor
        total = Fraction(0)
        for j, c in enumerate(self.coeffs):
            if c:
                m = n // gcd(j, n)
                total += c * Fraction(mobius(m), totient(m))
        return total

    # -- comparisons ---------------------------------------------------

    def __eq__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a._poly == b._poly

    def __hash__(self):
        return hash(self.normalized_trace())

    def __bool__(self):
        return not self._poly.is_zero()

    def __complex__(self):
        import cmath

        n = self.conductor
        return sum(
            (complex(float(c)) * cmath.exp(2j * cmath.pi * j / n) for j, c in enumerate(self.coeffs) if c),
            0j,
        )

    def __repr__(self):
        terms = []
        for j, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if j == 0 else f"{c}*z{self.conductor}^{j}")
        return " + ".join(terms) if terms else "0"


def cyc_make(N: int, k: int) -> CycElem:
    """zeta_N^k in canonical form."""
    if N < 1:
        raise ValueError("conductor must be positive")
    return CycElem._wrap(N, _monomial(N, k))


def cyc_arith(op: str, x: CycElem, y: CycElem | None = None) -> CycElem:
    if op == "inv":
        return x.inverse()
    if y is None:
        raise TypeError(f"{op} needs two operands")
    if isinstance(y, CycElem) and x.conductor != y.conductor:
        raise CyclotomicError("operands must share a conductor; lift one first")
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    raise ValueError(f"unknown operation {op!r}")


def galois_conjugates(x: CycElem) -> list[tuple[int, CycElem]]:
    return [(k, x.galois(k)) for k in units(x.conductor)]
