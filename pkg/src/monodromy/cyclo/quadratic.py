"""The quadratic algebra Q(zeta_N)[t]/(t^2 - a)."""

from __future__ import annotations

from .field import CycElem, CyclotomicError, cyc_make


class ExtElem:
    """u + v*t with t^2 = radicand.

    ``radicand`` may be None for elements known to have v == 0; such
    elements combine with any algebra.  Invertibility is decided by the
    norm u^2 - a v^2, so the class works whether or not the algebra is a
    field.
    """

    __slots__ = ("u", "v", "radicand")

    def __init__(self, u: CycElem, v: CycElem | None = None, radicand: CycElem | None = None):
        if v is None:
            v = CycElem.rational(u.conductor, 0)
        n = u.conductor
        if v.conductor != n:
            u, v = u._coerce(v)
            n = u.conductor
        if radicand is not None and radicand.conductor != n:
            m = n * radicand.conductor // _gcd(n, radicand.conductor)
            u, v, radicand = u.lift(m), v.lift(m), radicand.lift(m)
        if radicand is None and v:
            raise CyclotomicError("an element with a t-part needs a radicand")
        self.u = u
        self.v = v
        self.radicand = radicand

    @classmethod
    def gen(cls, radicand: CycElem) -> "ExtElem":
        """The adjoined square root t itself."""
        n = radicand.conductor
        return cls(CycElem.rational(n, 0), CycElem.rational(n, 1), radicand)

    @property
    def conductor(self) -> int:
        return self.u.conductor

    def in_base(self) -> bool:
        return not self.v

    def _coerce(self, other):
        if isinstance(other, ExtElem):
            a, b = self, other
        elif isinstance(other, CycElem):
            a, b = self, ExtElem(other)
        else:
            try:
                b = ExtElem(CycElem.rational(self.conductor, 0) + other)
            except TypeError:
                return None
            a = self
        rad = a.radicand if a.radicand is not None else b.radicand
        if a.radicand is not None and b.radicand is not None and a.radicand is not b.radicand:
            if a.radicand != b.radicand:
                raise CyclotomicError("operands live in different quadratic algebras")
        if a.conductor != b.conductor:
            u1, u2 = a.u._coerce(b.u)
            n = u1.conductor
            a = ExtElem(u1, a.v.lift(n), rad.lift(n) if rad is not None else None)
            b = ExtElem(u2, b.v.lift(n), rad.lift(n) if rad is not None else None)
            rad = a.radicand
        return a, b, rad

    def __add__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        a, b, rad = c
        return ExtElem(a.u + b.u, a.v + b.v, rad)

    __radd__ = __add__

    def __neg__(self):
        return ExtElem(-self.u, -self.v, self.radicand)

    def __sub__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        a, b, rad = c
        return ExtElem(a.u - b.u, a.v - b.v, rad)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        a, b, rad = c
        if not a.v:
            return ExtElem(a.u * b.u, a.u * b.v, rad)
        if not b.v:
            return ExtElem(a.u * b.u, a.v * b.u, rad)
        u = a.u * b.u + a.v * b.v * rad
        v = a.u * b.v + a.v * b.u
        return ExtElem(u, v, rad)

    __rmul__ = __mul__

    def norm(self) -> CycElem:
        """u^2 - a v^2, the norm down to Q(zeta_N)."""
        if not self.v:
            return self.u * self.u
        return self.u * self.u - self.v * self.v * self.radicand

    def bar(self) -> "ExtElem":
        """The algebra involution t -> -t."""
        return ExtElem(self.u, -self.v, self.radicand)

    def inverse(self) -> "ExtElem":
        nrm = self.norm()
        if not nrm:
            raise ZeroDivisionError("element of the quadratic algebra is not invertible")
        if not self.v:
            return ExtElem(self.u.inverse(), None, self.radicand)
        inv = nrm.inverse()
        return ExtElem(self.u * inv, -self.v * inv, self.radicand)

    def __truediv__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        a, b, _ = c
        return a * b.inverse()

    def __rtruediv__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        a, b, _ = c
        return b * a.inverse()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        base = self if e >= 0 else self.inverse()
        e = abs(e)
        result = ExtElem(CycElem.rational(self.conductor, 1), None, self.radicand)
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def galois(self, k: int) -> "ExtElem":
        """Apply zeta -> zeta^k to u, v and the radicand (t is kept as t)."""
        rad = self.radicand.galois(k) if self.radicand is not None else None
        return ExtElem(self.u.galois(k), self.v.galois(k), rad)

    def conj(self) -> "ExtElem":
        """Complex conjugate of the numeric value.

        Needs conj(t) = c*t for a root of unity c in the field; this holds
        for the braid-representation radicand.  Raises otherwise.
        """
        if not self.v:
            return ExtElem(self.u.conj(), None, self.radicand)
        c = conj_factor(self.radicand)
        return ExtElem(self.u.conj(), self.v.conj() * c, self.radicand)

    def is_zero(self) -> bool:
        return not self.u and not self.v

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        a, b, _ = c
        return a.u == b.u and a.v == b.v

    def __hash__(self):
        return hash((self.u, self.v))

    def key(self) -> tuple:
        return (self.u.key(), self.v.key())

    def __complex__(self):
        from .numeric import principal_sqrt_complex

        if not self.v:
            return complex(self.u)
        return complex(self.u) + complex(self.v) * principal_sqrt_complex(self.radicand)

    def __repr__(self):
        if not self.v:
            return repr(self.u)
        return f"({self.u!r}) + ({self.v!r})*t"


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


_CONJ_CACHE: dict = {}


def conj_factor(radicand: CycElem) -> CycElem:
    """The root of unity c with conj(t) = c*t, where t is the principal root."""
    key = radicand.key()
    if key in _CONJ_CACHE:
        return _CONJ_CACHE[key]
    from .numeric import principal_sqrt_complex

    n = radicand.conductor
    ratio = radicand.conj() / radicand
    for j in range(n):
        if cyc_make(n, j) == ratio:
            break
    else:
        raise CyclotomicError("conj(a)/a is not a root of unity; complex conjugation not available")
    if j % 2:
        raise CyclotomicError("conj(t)/t lies outside the field")
    tv = principal_sqrt_complex(radicand)
    c = cyc_make(n, j // 2)
    # the two candidates are c and -c; pick the one matching the principal branch
    if abs(complex(c) * tv - tv.conjugate()) > abs(complex(c) * tv + tv.conjugate()):
        c = -c
    _CONJ_CACHE[key] = c
    return c
