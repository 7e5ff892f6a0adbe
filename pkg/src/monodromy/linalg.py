"""Small dense matrices over exact rings (CycElem / ExtElem entries)."""

from __future__ import annotations


class SingularMatrixError(ArithmeticError):
    pass


class SquareMatrix:
    __slots__ = ("rows", "n")

    def __init__(self, rows):
        self.rows = tuple(tuple(r) for r in rows)
        self.n = len(self.rows)
        if any(len(r) != self.n for r in self.rows):
            raise ValueError("matrix must be square")

    @classmethod
    def identity(cls, n: int, one):
        zero = one - one
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, entries):
        entries = list(entries)
        zero = entries[0] - entries[0]
        n = len(entries)
        return cls([[entries[i] if i == j else zero for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def entries(self):
        for r in self.rows:
            yield from r

    def one(self):
        x = self.rows[0][0]
        return x - x + 1

    def __mul__(self, other):
        if isinstance(other, SquareMatrix):
            cols = list(zip(*other.rows))
            out = []
            for r in self.rows:
                row = []
                for c in cols:
                    acc = None
                    for x, y in zip(r, c):
                        if x and y:
                            acc = x * y if acc is None else acc + x * y
                    row.append(acc if acc is not None else r[0] - r[0])
                out.append(row)
            return type(self)(out)
        return type(self)([[x * other for x in r] for r in self.rows])

    def __rmul__(self, scalar):
        return type(self)([[scalar * x for x in r] for r in self.rows])

    def __add__(self, other):
        return type(self)([[x + y for x, y in zip(a, b)] for a, b in zip(self.rows, other.rows)])

    def __sub__(self, other):
        return type(self)([[x - y for x, y in zip(a, b)] for a, b in zip(self.rows, other.rows)])

    def __neg__(self):
        return type(self)([[-x for x in r] for r in self.rows])

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = type(self).identity(self.n, self.one())
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def inverse(self):
        # Gauss-Jordan over the entry field
        n = self.n
        one = self.one()
        zero = one - one
        a = [list(r) + [one if i == j else zero for j in range(n)] for i, r in enumerate(self.rows)]
        for col in range(n):
            piv = next((r for r in range(col, n) if a[r][col]), None)
            if piv is None:
                raise SingularMatrixError("matrix is not invertible")
            a[col], a[piv] = a[piv], a[col]
            inv = a[col][col].inverse()
            a[col] = [x * inv for x in a[col]]
            for r in range(n):
                if r != col and a[r][col]:
                    f = a[r][col]
                    a[r] = [x - f * y for x, y in zip(a[r], a[col])]
        return type(self)([row[n:] for row in a])

    def transpose(self):
        return type(self)(list(zip(*self.rows)))

    def map(self, f):
        return type(self)([[f(x) for x in r] for r in self.rows])

    def trace(self):
        acc = self.rows[0][0]
        for i in range(1, self.n):
            acc = acc + self.rows[i][i]
        return acc

    def is_scalar(self) -> bool:
        d = self.rows[0][0]
        for i, r in enumerate(self.rows):
            for j, x in enumerate(r):
                if i == j:
                    if x != d:
                        return False
                elif x:
                    return False
        return True

    def is_identity(self) -> bool:
        return self.is_scalar() and self.rows[0][0] == 1

    def __eq__(self, other):
        if not isinstance(other, SquareMatrix) or other.n != self.n:
            return NotImplemented
        return all(x == y for x, y in zip(self.entries(), other.entries()))

    def __hash__(self):
        return hash(self.key())

    def key(self) -> tuple:
        return tuple(x.key() for x in self.entries())

    def pivot(self):
        for idx, x in enumerate(self.entries()):
            if x:
                return idx, x
        raise SingularMatrixError("zero matrix has no projective class")

    def projective_normal(self):
        """The representative whose first nonzero entry is 1 (field entries only)."""
        _, p = self.pivot()
        inv = p.inverse()
        return self.map(lambda x: x * inv)

    def projective_key(self) -> tuple:
        return self.projective_normal().key()

    def projectively_equal(self, other) -> bool:
        """M ~ N iff M_ij * N_p == M_p * N_ij at M's pivot p."""
        idx, p = self.pivot()
        a, b = list(self.entries()), list(other.entries())
        q = b[idx]
        if not q:
            return False
        return all(x * q == p * y for x, y in zip(a, b))

    def __repr__(self):
        body = ",\n ".join("[" + ", ".join(repr(x) for x in r) + "]" for r in self.rows)
        return f"{type(self).__name__}([{body}])"


class Mat2(SquareMatrix):
    __slots__ = ()

    def __init__(self, rows):
        super().__init__(rows)
        if self.n != 2:
            raise ValueError("Mat2 must be 2x2")

    @classmethod
    def of(cls, a, b, c, d):
        return cls([[a, b], [c, d]])

    def det(self):
        (a, b), (c, d) = self.rows
        return a * d - b * c

    def inverse(self):
        det = self.det()
        if not det:
            raise SingularMatrixError("matrix is not invertible")
        inv = det.inverse()
        (a, b), (c, d) = self.rows
        return Mat2([[d * inv, -b * inv], [-c * inv, a * inv]])

    def charpoly(self):
        """(trace, det): the characteristic polynomial is X^2 - trace X + det."""
        return self.trace(), self.det()
