"""Genus-one modular representation: S and T matrices for sl(2) at level l.

Indices run over j, k = 1..l+1 (shifted weights j = m + 1).  S is stored
without its scalar sqrt(2/(l+2)); the exponent of that scalar travels with
the representation.  Exact computations with the scalar removed are
projective; the scalar is only materialised for the discreteness
certificate, where it is an element of Q(zeta_{8(l+2)}).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from flint import arb, ctx

from .braidrep import Level, as_level
from .cyclo import CycElem, Sign, cyc_make, sign_decide
from .cyclo.numeric import to_acb
from .linalg import SquareMatrix
from .orderlab import DEFAULT_CLOSURE_CAP, CapExceeded, group_closure, matrix_order, projective_equal


@dataclass(frozen=True)
class ModularRep:
    level: Level
    S: SquareMatrix  # sin(pi j k/(l+2)), scalar removed
    T: SquareMatrix
    s_scalar_exponent: int = 1  # power of sqrt(2/(l+2)) multiplying S

    @property
    def rank(self) -> int:
        return self.S.n

    @property
    def conductor(self) -> int:
        return self.level.conductor


def _sin_pi(num: int, m: int, n: int) -> CycElem:
    """sin(pi num/m) in Q(zeta_n), n = 8m, as (z^a - z^-a)/(2i) with z = zeta_{2m}."""
    step = n // (2 * m)
    i = cyc_make(n, n // 4)
    return (cyc_make(n, step * num) - cyc_make(n, -step * num)) / (2 * i)


@lru_cache(maxsize=None)
def sine_matrix(level) -> SquareMatrix:
    lv = as_level(level)
    m, n = lv.m, lv.conductor
    size = lv.l + 1
    return SquareMatrix([[_sin_pi(j * k, m, n) for k in range(1, size + 1)] for j in range(1, size + 1)])


def t_matrix(level) -> SquareMatrix:
    lv = as_level(level)
    m, n = lv.m, lv.conductor
    # exp(i pi (j^2/(2m) - 1/4)) = zeta_{4m}^(j^2) * zeta_8^-1
    return SquareMatrix.diagonal([cyc_make(n, 2 * j * j - m) for j in range(1, lv.l + 2)])


def build_modular(level) -> ModularRep:
    lv = as_level(level)
    return ModularRep(lv, sine_matrix(lv), t_matrix(lv))


@lru_cache(maxsize=None)
def sqrt_rational_exact(m: int, n: int) -> CycElem:
    """The positive square root of m inside Q(zeta_n), via quadratic Gauss sums (needs 4m | n)."""
    if m == 1:
        return CycElem.rational(n, 1)
    if m % 4 == 2:
        root2 = cyc_make(n, n // 8) + cyc_make(n, -(n // 8))
        return root2 * sqrt_rational_exact(m // 2, n)
    g = CycElem.rational(n, 0)
    for k in range(m):
        g = g + cyc_make(n, (n // m) * (k * k % m))
    i = cyc_make(n, n // 4)
    if m % 4 == 1:
        root = g
    elif m % 4 == 3:
        root = g / i
    else:
        root = g / (1 + i)
    if root * root != m or sign_decide(root, 0) is not Sign.GT:
        raise ArithmeticError(f"Gauss sum did not produce sqrt({m})")
    return root


def s_scalar(level) -> CycElem:
    """sqrt(2/(l+2)) as an exact element of Q(zeta_{8(l+2)})."""
    lv = as_level(level)
    n = lv.conductor
    c = sqrt_rational_exact(2, n) / sqrt_rational_exact(lv.m, n)
    if c * c != Fraction(2, lv.m):
        raise ArithmeticError("scalar does not square to 2/(l+2)")
    return c


def normalized_s(level) -> SquareMatrix:
    return sine_matrix(level) * s_scalar(level)


def t_is_unit_diagonal(T: SquareMatrix) -> bool:
    n = T.n
    off = all(not T[i, j] for i in range(n) for j in range(n) if i != j)
    return off and all(T[j, j] * T[j, j].conj() == 1 for j in range(n))


def modular_relations_check(rep: ModularRep, T: SquareMatrix | None = None) -> dict:
    """Projective checks of S^2 ~ (ST)^3 and S^4 ~ 1; pass T to test a modified phase matrix."""
    S = rep.S
    T = rep.T if T is None else T
    S2 = S * S
    ST3 = (S * T) ** 3
    ident = SquareMatrix.identity(rep.rank, S.one())
    report = {
        "level": rep.level.l,
        "s_squared_scalar": S2.is_scalar(),
        "s_squared_vs_st_cubed": projective_equal(S2, ST3),
        "s_fourth_trivial": projective_equal(S2 * S2, ident),
        "s_symmetric": S == S.transpose(),
        "t_unit_diagonal": t_is_unit_diagonal(T),
    }
    report["relations_ok"] = report["s_squared_vs_st_cubed"] and report["s_fourth_trivial"]
    return report


def in_discrete_set(M: SquareMatrix, m: int) -> bool:
    """Entries lie in (1/(2m)) Z[zeta]: 2m times each coefficient vector is integral."""
    bound = 2 * m
    return all(bound % x.denominator() == 0 for x in M.entries())


@dataclass
class ImageReport:
    order: int | None
    certificate_ok: bool
    checked: int
    partial: int | None = None

    @property
    def cap_exceeded(self) -> bool:
        return self.order is None


def modular_image_finite(rep: ModularRep, cap: int = DEFAULT_CLOSURE_CAP) -> ImageReport:
    """Projective closure of <S, T> with the discreteness certificate on every element.

    Closure elements are products of the unitary generators c*S and T
    (c = sqrt(2/(l+2)) exactly), so their scalar is fixed up to a root of
    unity, which does not affect membership in the discrete set.
    """
    m = rep.level.m
    S_true = rep.S * s_scalar(rep.level)
    failures = []

    def check(M):
        if not in_discrete_set(M, m):
            failures.append(M)

    try:
        closure = group_closure([S_true, rep.T], cap, projective=True, check=check)
    except CapExceeded as exc:
        return ImageReport(None, not failures, exc.partial, exc.partial)
    return ImageReport(len(closure), not failures, len(closure))


def _arb_upper(x: arb) -> Fraction:
    man, exp = x.upper().mid().man_exp()
    man, exp = int(man), int(exp)
    return Fraction(man) * (Fraction(2) ** exp)


def unitarity_defect(rep: ModularRep, bits: int = 128) -> Fraction:
    """Certified upper bound on max |(S S*)_jk - delta_jk| with the true scalar applied numerically."""
    n = rep.rank
    worst = Fraction(0)
    with ctx.workprec(bits):
        S = [[to_acb(rep.S[j, k], bits) for k in range(n)] for j in range(n)]
        scale = arb(2) / rep.level.m
        for j in range(n):
            for k in range(n):
                acc = S[j][0] * S[k][0].conjugate()
                for r in range(1, n):
                    acc += S[j][r] * S[k][r].conjugate()
                d = abs(acc * scale - (1 if j == k else 0))
                worst = max(worst, _arb_upper(d))
    return worst


def st_projective_order(rep: ModularRep, cap: int = 10000) -> int | None:
    return matrix_order(rep.S * rep.T, cap, projective=True)
