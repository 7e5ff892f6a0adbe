"""Finite versus infinite order in PGL(2) and GL(2), and the finite image groups.

The projective test uses beta = tr^2/det - 2, the sum lambda + 1/lambda of
the eigenvalue ratio.  The matrix has finite projective order iff beta is
2cos(2 pi r); by Kronecker's theorem that happens iff beta is an algebraic
integer all of whose conjugates are real and lie in [-2, 2], which the
Sturm sequence of its minimal polynomial decides exactly.
"""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass, field

from .braidrep import as_level, eval_braid, level_context, psi_map, tk_generator
from .cyclo import (CycElem, ExtElem, Sign, cyc_make, cyclotomic_index, minimal_polynomial,
                    numeric_interval, sign_decide, units)
from .linalg import Mat2, SingularMatrixError, SquareMatrix
from .words import Word

DEFAULT_CLOSURE_CAP = int(os.environ.get("MONODROMY_CLOSURE_CAP", 20000))
DEFAULT_POWER_CAP = int(os.environ.get("MONODROMY_POWER_CAP", 10000))
DEFAULT_PRECISION_BITS = int(os.environ.get("MONODROMY_PRECISION_BITS", 64))


class ConsistencyError(RuntimeError):
    """An internal cross-check failed; the result cannot be trusted."""


class CapExceeded(RuntimeError):
    def __init__(self, cap: int, partial: int):
        super().__init__(f"closure exceeded cap {cap} (partial size {partial})")
        self.cap = cap
        self.partial = partial


@dataclass(frozen=True)
class OrderVerdict:
    kind: str  # "finite", "infinite" or "undecided"
    order: int | None = None
    witness: dict | None = None
    cap: int | None = None

    @classmethod
    def finite(cls, n: int) -> "OrderVerdict":
        return cls("finite", order=n)

    @classmethod
    def infinite(cls, **witness) -> "OrderVerdict":
        return cls("infinite", witness=witness)

    @classmethod
    def undecided(cls, cap: int) -> "OrderVerdict":
        return cls("undecided", cap=cap)

    @property
    def is_finite(self) -> bool:
        return self.kind == "finite"

    @property
    def is_infinite(self) -> bool:
        return self.kind == "infinite"

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.order is not None:
            out["order"] = self.order
        if self.witness is not None:
            out["witness"] = self.witness
        if self.cap is not None:
            out["cap"] = self.cap
        return out

    @classmethod
    def from_json(cls, d: dict) -> "OrderVerdict":
        return cls(d["kind"], d.get("order"), d.get("witness"), d.get("cap"))


GROUP_ORDERS = {"Klein4": 4, "A4": 12, "S4": 24, "A5": 60}


@dataclass(frozen=True)
class GroupID:
    tag: str  # Cyclic, Klein4, Dihedral, A4, S4, A5, InfiniteOrCapExceeded, Unclassified
    n: int | None = None
    order: int | None = None
    details: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.tag in GROUP_ORDERS and self.order != GROUP_ORDERS[self.tag]:
            raise ValueError(f"{self.tag} must have order {GROUP_ORDERS[self.tag]}")
        if self.tag == "Cyclic" and self.order != self.n:
            raise ValueError("Cyclic(n) has order n")
        if self.tag == "Dihedral" and self.order != 2 * self.n:
            raise ValueError("Dihedral(n) has order 2n")

    def __str__(self):
        if self.tag in ("Cyclic", "Dihedral"):
            return f"{self.tag}({self.n})"
        return self.tag

    def to_json(self) -> dict:
        out = {"tag": self.tag, "name": str(self)}
        if self.order is not None:
            out["order"] = self.order
        if self.details:
            out["details"] = self.details
        return out


# -- projective equality -------------------------------------------------

def projective_equal(M: SquareMatrix, N: SquareMatrix) -> bool:
    """M == c N for a nonzero scalar c, by cross-multiplying entry pairs."""
    if isinstance(M, Mat2) and (not M.det() or not N.det()):
        raise SingularMatrixError("projective_equal needs invertible matrices")
    a, b = list(M.entries()), list(N.entries())
    n = len(a)
    for i in range(n):
        for j in range(i + 1, n):
            if a[i] * b[j] != a[j] * b[i]:
                return False
    return True


# -- the distinguished loop sigma = s1^-1 s2 -----------------------------

SIGMA = Word.parse("s1^-1 s2", "sigma")


def sigma_matrix(level) -> Mat2:
    return eval_braid(level, psi_map(SIGMA))


def sigma_trace_closed_form(level, k: int = 1) -> CycElem:
    """2 - q - 1/q + q^2 + 1/q^2 evaluated at q -> q^k."""
    m = as_level(level).m
    q = cyc_make(m, k)
    qi = cyc_make(m, -k)
    return 2 - q - qi + q * q + qi * qi


def trace_of_sigma(level) -> ExtElem:
    M = sigma_matrix(level)
    tr, det = M.trace(), M.det()
    if det != 1:
        raise ConsistencyError(f"det of rho(Psi(sigma)) is {det!r}, expected 1")
    if tr != sigma_trace_closed_form(level):
        raise ConsistencyError("trace of rho(Psi(sigma)) differs from 2 - q - 1/q + q^2 + 1/q^2")
    return tr


def _interval_json(x, bits=None) -> dict:
    return numeric_interval(x, bits or DEFAULT_PRECISION_BITS).to_json()


def masbaum_scan(level, bits: int | None = None) -> dict:
    """Look for a primitive (l+2)-th root q~ whose trace value leaves [-2, 2]."""
    lv = as_level(level)
    m = lv.m
    for k in units(m):
        if k == m:
            continue
        value = sigma_trace_closed_form(lv, k)
        hi, lo = sign_decide(value, 2), sign_decide(value, -2)
        if hi is Sign.GT or lo is Sign.LT:
            return {"kind": "violation", "k": k, "value_interval": _interval_json(value, bits)}
    return {"kind": "bounded"}


# -- order decisions -----------------------------------------------------

def _beta(M: Mat2) -> CycElem:
    tr, det = M.trace(), M.det()
    beta = tr * tr / det - 2
    if isinstance(beta, ExtElem):
        if beta.v:
            raise ConsistencyError("tr^2/det has a t-component")
        beta = beta.u
    return beta


def _outside_witness(beta: CycElem, bits: int | None = None) -> dict | None:
    """First Galois conjugate of beta that is non-real or outside [-2, 2]."""
    for k in units(beta.conductor):
        b = beta.galois(k)
        if not b.is_real():
            return {"galois_k": k, "conductor": beta.conductor, "reason": "non-real conjugate",
                    "value_interval": _interval_json(b, bits)}
        # cheap float pre-filter before the certified comparison
        approx = complex(b).real
        if -1.999 < approx < 1.999:
            continue
        if sign_decide(b, 2) is Sign.GT or sign_decide(b, -2) is Sign.LT:
            return {"galois_k": k, "conductor": beta.conductor, "reason": "conjugate outside [-2,2]",
                    "value_interval": _interval_json(b, bits)}
    return None


def _power_until_scalar(M: Mat2, cap: int):
    P = M
    for n in range(1, cap + 1):
        if P.is_scalar():
            return n, P[0, 0]
        P = P * M
    return None, None


def projective_order(M: Mat2, cap: int = DEFAULT_POWER_CAP, bits: int | None = None) -> OrderVerdict:
    if not M.det():
        raise SingularMatrixError("projective_order needs an invertible matrix")
    if M.is_scalar():
        return OrderVerdict.finite(1)
    tr, det = M.trace(), M.det()
    if tr * tr == 4 * det:
        return OrderVerdict.infinite(reason="parabolic")
    beta = _beta(M)
    f = minimal_polynomial(beta)
    if not f.is_monic_integer():
        return OrderVerdict.infinite(reason="not an algebraic integer", minpoly=repr(f))
    inside = f.count_roots_closed(-2, 2)
    if inside < f.degree:
        w = _outside_witness(beta, bits)
        if w is None:
            raise ConsistencyError("Sturm count found roots outside [-2,2] but no conjugate does")
        w["minpoly"] = repr(f)
        return OrderVerdict.infinite(**w)
    n, _ = _power_until_scalar(M, cap)
    if n is None:
        raise ConsistencyError(f"criterion certified finite order but powering exceeded cap {cap}")
    return OrderVerdict.finite(n)


def is_root_of_unity(x) -> int | None:
    """The multiplicative order of x if it is a root of unity, else None."""
    if isinstance(x, ExtElem):
        if x.v:
            return None
        x = x.u
    if not x:
        return None
    if x.is_rational():
        v = x.to_fraction()
        return 1 if v == 1 else (2 if v == -1 else None)
    return cyclotomic_index(minimal_polynomial(x))


def gl_order(M: Mat2, cap: int = DEFAULT_POWER_CAP, bits: int | None = None) -> OrderVerdict:
    proj = projective_order(M, cap, bits)
    if not proj.is_finite:
        return proj
    det_order = is_root_of_unity(M.det())
    if det_order is None:
        return OrderVerdict.infinite(reason="determinant is not a root of unity")
    P = M
    for n in range(1, cap + 1):
        if P.is_identity():
            return OrderVerdict.finite(n)
        P = P * M
    return OrderVerdict.undecided(cap)


def matrix_order(M: SquareMatrix, cap: int, projective: bool) -> int | None:
    P = M
    for n in range(1, cap + 1):
        if (P.is_scalar() if projective else P.is_identity()):
            return n
        P = P * M
    return None


# -- closures ------------------------------------------------------------

@dataclass
class Closure:
    elements: list
    generations: list[int]
    projective: bool

    def __len__(self):
        return len(self.elements)


def group_closure(generators, cap: int = DEFAULT_CLOSURE_CAP, projective: bool = True,
                  include_inverses: bool = True, check=None) -> Closure:
    """Breadth-first closure of a matrix group.

    Members are keyed by their projective normal form (or the matrix itself
    in linear mode); each hit is confirmed with projective_equal.  ``check``
    is called on every new element.  Ordering is deterministic: by
    generation, then by discovery order within a generation.
    """
    gens = list(generators)
    if include_inverses:
        gens = gens + [g.inverse() for g in gens]
    one = gens[0].one()
    ident = type(gens[0]).identity(gens[0].n, one)

    def key_of(M):
        return M.projective_key() if projective else M.key()

    seen = {key_of(ident): 0}
    elements = [ident]
    generations = [0]
    if check is not None:
        check(ident)
    frontier = [ident]
    gen_no = 0
    while frontier:
        gen_no += 1
        nxt = []
        for A in frontier:
            for g in gens:
                B = A * g
                k = key_of(B)
                hit = seen.get(k)
                if hit is not None:
                    if projective and not elements[hit].projectively_equal(B):
                        raise ConsistencyError("projective key collision")
                    continue
                seen[k] = len(elements)
                elements.append(B)
                generations.append(gen_no)
                if check is not None:
                    check(B)
                if len(elements) > cap:
                    raise CapExceeded(cap, len(elements))
                nxt.append(B)
        frontier = nxt
    return Closure(elements, generations, projective)


def classify_group(generators, cap: int = DEFAULT_CLOSURE_CAP) -> GroupID:
    """Identify a finite subgroup of PGL(2) up to isomorphism."""
    try:
        closure = group_closure(generators, cap)
    except CapExceeded as exc:
        return GroupID("InfiniteOrCapExceeded", details={"cap": exc.cap, "partial": exc.partial})
    elems = closure.elements
    size = len(elems)
    orders = [matrix_order(E, size, True) for E in elems]
    stats = dict(sorted(Counter(orders).items()))
    details = {"element_orders": {str(k): v for k, v in stats.items()}}
    max_order = max(orders)
    abelian = all(projective_equal(A * B, B * A) for A in elems for B in elems) if size <= 64 else False

    if max_order == size:
        return GroupID("Cyclic", n=size, order=size, details=details)
    if size == 4 and abelian and max_order == 2:
        return GroupID("Klein4", order=4, details=details)
    if size == 12 and set(orders) == {1, 2, 3}:
        a, b = _find_pair(elems, orders, 3, 2, 3)
        if a is None:
            raise ConsistencyError("no A4 presentation pair a^3 = b^2 = (ab)^3 = 1")
        details["presentation"] = "a^3 = b^2 = (ab)^3 = 1"
        return GroupID("A4", order=12, details=details)
    if size == 24 and max_order == 4:
        return GroupID("S4", order=24, details=details)
    if size == 60:
        a, b = _find_pair(elems, orders, 2, 3, 5)
        if a is None:
            raise ConsistencyError("no A5 presentation pair a^2 = b^3 = (ab)^5 = 1")
        details["presentation"] = "a^2 = b^3 = (ab)^5 = 1"
        return GroupID("A5", order=60, details=details)
    half = size // 2
    if size % 2 == 0 and half in orders and all(o in (1, 2) or half % o == 0 for o in orders):
        return GroupID("Dihedral", n=half, order=size, details=details)
    return GroupID("Unclassified", order=size, details=details)


def _find_pair(elems, orders, oa, ob, oab):
    """Generators a, b of the whole group with ord a, ord b, ord ab = oa, ob, oab."""
    size = len(elems)
    for i, A in enumerate(elems):
        if orders[i] != oa:
            continue
        for j, B in enumerate(elems):
            if orders[j] != ob:
                continue
            if matrix_order(A * B, oab, True) != oab:
                continue
            if len(group_closure([A, B], size + 1)) == size:
                return A, B
    return None, None


def m_generators(level) -> tuple[Mat2, Mat2]:
    """m1 = rho(Psi(s1)) and m2 = rho(Psi(s2))."""
    s1, s2 = Word.gen("sigma", 1), Word.gen("sigma", 2)
    return eval_braid(level, psi_map(s1)), eval_braid(level, psi_map(s2))


def braid_generators(level) -> tuple[Mat2, Mat2]:
    return tk_generator(level, 1), tk_generator(level, 2)
