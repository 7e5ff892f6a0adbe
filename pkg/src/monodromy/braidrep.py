"""Level-l Tsuchiya-Kanie representation of B_3 and the word maps into it.

All exact computations of a level live in Q(zeta_N) with N = 8(l+2), which
contains q = exp(2 pi i/(l+2)), q^(1/4) = zeta_{4(l+2)} and zeta_{8(l+2)}.
The square root t = sqrt(q(1+q+q^2)) is either adjoined formally or, when
it already lies in the field, substituted by its exact value.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import mpmath

from .cyclo import CycElem, CyclotomicError, ExtElem, Sign, cyc_make, sign_decide, totient, units
from .cyclo.numeric import principal_sqrt_complex
from .linalg import Mat2
from .words import Word, eliminate_s3, substitute


@dataclass(frozen=True)
class Level:
    l: int

    def __post_init__(self):
        if not isinstance(self.l, int) or self.l < 1:
            raise ValueError(f"level must be an integer >= 1, got {self.l!r}")

    @property
    def m(self) -> int:
        return self.l + 2

    @property
    def conductor(self) -> int:
        return 8 * (self.l + 2)


def as_level(level) -> Level:
    return level if isinstance(level, Level) else Level(int(level))


@dataclass(frozen=True)
class LevelContext:
    """Per-level constants shared read-only by every computation at that level."""

    level: Level
    q: CycElem
    q_quarter: CycElem
    radicand: CycElem
    t: ExtElem
    t_mode: str  # "adjoined", "in-field" or "zero"
    cache: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def conductor(self) -> int:
        return self.level.conductor

    def one(self) -> ExtElem:
        return self.scalar(1)

    def scalar(self, x) -> ExtElem:
        rad = self.radicand if self.t_mode == "adjoined" else None
        if isinstance(x, ExtElem):
            return x
        if not isinstance(x, CycElem):
            x = CycElem.rational(self.conductor, x)
        return ExtElem(x.lift(self.conductor), None, rad)

    def q_power(self, quarters: int) -> CycElem:
        """q^(quarters/4)."""
        return cyc_make(self.conductor, 2 * quarters)


def _sqrt_in_real_subfield(b: CycElem, n: int) -> CycElem | None:
    """A square root of the totally positive real element b inside Q(zeta_n)^+, if one is found.

    Candidates come from an integer relation search and are accepted only
    after the exact check w*w == b.
    """
    # 1, z^j + z^-j for j < phi(n)/2 is a basis of the real subfield
    half = totient(n) // 2
    basis = [cyc_make(n, j) + cyc_make(n, -j) if j else CycElem.rational(n, 1) for j in range(half)]
    with mpmath.workdps(120):
        # high-precision value of b from its coefficients
        z = [mpmath.expjpi(mpmath.mpf(2 * j) / n) for j in range(n)]
        bval = mpmath.fsum(mpmath.mpf(c.numerator) / c.denominator * z[j] for j, c in enumerate(b.coeffs) if c)
        target = mpmath.sqrt(mpmath.re(bval))
        vals = [target] + [2 * mpmath.cos(2 * mpmath.pi * j / n) if j else mpmath.mpf(1) for j in range(half)]
        rel = mpmath.pslq(vals, maxcoeff=10**6, maxsteps=10**5)
    if rel is None or rel[0] == 0:
        return None
    w = CycElem.rational(n, 0)
    for c, e in zip(rel[1:], basis):
        if c:
            w = w + e * (-c)
    w = w / rel[0]
    if w * w != b:
        return None
    if sign_decide(w, 0) is Sign.LT:
        w = -w
    return w


@lru_cache(maxsize=None)
def level_context(level) -> LevelContext:
    lv = as_level(level)
    n = lv.conductor
    q = cyc_make(n, 8)
    a = q * (1 + q + q * q)
    if not a:
        # l = 1: 1 + q + q^2 = 0, so t = 0 exactly
        zero = CycElem.rational(n, 0)
        return LevelContext(lv, q, cyc_make(n, 2), a, ExtElem(zero), "zero")
    # t = q * sqrt(b) with b = 1 + q + 1/q real and positive, and t lies in the
    # field iff sqrt(b) lies in its real subfield, which forces b totally positive
    b = 1 + q + q.inverse()
    totally_positive = all(sign_decide(b.galois(k), 0) is Sign.GT for k in units(n))
    if totally_positive:
        w = _sqrt_in_real_subfield(b, n)
        if w is None:
            raise CyclotomicError(f"could not decide whether t lies in Q(zeta_{n})")
        s = q * w
        tv = principal_sqrt_complex(a)
        if abs(complex(s) - tv) > abs(complex(s) + tv):
            s = -s
        return LevelContext(lv, q, cyc_make(n, 2), a, ExtElem(s), "in-field")
    return LevelContext(lv, q, cyc_make(n, 2), a, ExtElem.gen(a), "adjoined")


def tk_generator(level, which) -> Mat2:
    """The matrix of g1 or g2 in the Tsuchiya-Kanie basis."""
    ctx = level_context(level)
    key = ("gen", which)
    if key in ctx.cache:
        return ctx.cache[key]
    which = {"g1": 1, "g2": 2}.get(which, which)
    q = ctx.q
    pref = ctx.scalar(ctx.q_power(-3))
    if which == 1:
        mat = Mat2.of(pref * q, ctx.scalar(0), ctx.scalar(0), pref * (-1))
    elif which == 2:
        c = pref * ctx.scalar((q + 1).inverse())
        t = ctx.t
        mat = Mat2.of(c * (-1), c * t, c * t, c * ctx.scalar(q * q))
    else:
        raise ValueError(f"unknown braid generator {which!r}")
    ctx.cache[key] = mat
    return mat


def _generator_power(level, gen: int, exp: int) -> Mat2:
    ctx = level_context(level)
    key = ("pow", gen, exp)
    if key not in ctx.cache:
        ctx.cache[key] = tk_generator(level, gen) ** exp
    return ctx.cache[key]


def identity(level) -> Mat2:
    ctx = level_context(level)
    return Mat2.identity(2, ctx.one())


def eval_braid(level, w: Word) -> Mat2:
    if w.alphabet != "braid":
        raise ValueError("eval_braid expects a word in g1, g2; route loops through psi_map")
    out = identity(level)
    for g, e in w.letters:
        out = out * _generator_power(level, g, e)
    return out


_G1, _G2 = Word.gen("braid", 1), Word.gen("braid", 2)
PSI_IMAGES = {1: _G2 * _G1 ** 2 * _G2.inverse(), 2: _G2 ** 2}

_S1, _S2 = Word.gen("sigma", 1), Word.gen("sigma", 2)
PHI_IMAGES = {1: _S1 ** 2, 2: _S2 ** 2, 3: _S2.inverse() * _S1.inverse()}

# j(sigma_1) = T_23, j(sigma_2) = T_13, j(sigma_3) = T_12
DEHN_TO_SIGMA = {i: Word.gen("sigma", i) for i in (1, 2, 3)}


def psi_map(w: Word) -> Word:
    """pi_1(M_{0,4}) -> P_3 inside B_3."""
    if w.alphabet != "sigma":
        raise ValueError("psi_map expects a sigma-word")
    return substitute(eliminate_s3(w), PSI_IMAGES, "braid")


def phi_map(w: Word) -> Word:
    """Five-point loops xi_i -> loops in M_{0,4}."""
    if w.alphabet != "xi":
        raise ValueError("phi_map expects a xi-word")
    return substitute(w, PHI_IMAGES, "sigma")


def dehn_to_sigma(w: Word) -> Word:
    if w.alphabet != "dehn":
        raise ValueError("expects a word in T23, T13, T12")
    return substitute(w, DEHN_TO_SIGMA, "sigma")


def to_braid(w: Word) -> Word:
    """Route any supported word to B_3."""
    if w.alphabet == "braid":
        return w
    if w.alphabet == "sigma":
        return psi_map(w)
    if w.alphabet == "xi":
        return psi_map(phi_map(w))
    if w.alphabet == "dehn":
        return psi_map(dehn_to_sigma(w))
    raise ValueError(f"unsupported alphabet {w.alphabet}")


def eval_word(level, w: Word) -> Mat2:
    return eval_braid(level, to_braid(w))


def lantern_check(level, word: Word | None = None) -> dict:
    """Check that the lantern word T12 T13 T23 (= s3 s2 s1) acts trivially."""
    if word is None:
        word = Word.parse("T12 T13 T23", "dehn")
    sigma = dehn_to_sigma(word) if word.alphabet == "dehn" else word
    braid = psi_map(sigma)
    mat = eval_braid(level, braid)
    # also multiply the separately evaluated letters, so the check does not
    # rest on free reduction of the braid word alone
    product = identity(level)
    for g, e in sigma.letters:
        product = product * (eval_braid(level, psi_map(Word.gen("sigma", g))) ** e)
    ident = identity(level)
    return {
        "level": as_level(level).l,
        "sigma_word": str(sigma),
        "braid_word": str(braid),
        "residual": mat - ident,
        "letterwise_residual": product - ident,
        "is_identity": mat.is_identity() and product.is_identity(),
    }
