import cmath

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from monodromy.braidrep import (Level, eval_braid, eval_word, identity, lantern_check, level_context, phi_map,
                                psi_map, tk_generator, to_braid)
from monodromy.cyclo import double_value
from monodromy.words import Word, WordSyntaxError, eliminate_s3


def float_generators(l):
    """Independent float oracle for g1, g2 straight from the defining formulas."""
    q = cmath.exp(2j * cmath.pi / (l + 2))
    a = q * (1 + q + q * q)
    t = cmath.sqrt(a) if abs(a) > 1e-12 else 0  # l = 1: a vanishes, float noise would leak 1e-8
    pref = cmath.exp(-2j * cmath.pi * 3 / (4 * (l + 2)))
    g1 = pref * np.array([[q, 0], [0, -1]])
    g2 = pref / (q + 1) * np.array([[-1, t], [t, q * q]])
    return g1, g2


def as_complex(M):
    return np.array([[double_value(x) for x in row] for row in M.rows])


# -- words ---------------------------------------------------------------

def test_parse_and_print():
    w = Word.parse("s1^-1 s2", "sigma")
    assert w.letters == ((1, -1), (2, 1))
    assert str(w) == "s1^-1 s2"
    assert Word.parse("x3*x1", "x").alphabet == "xi"
    assert Word.parse("g1^{2} g2", "braid").letters == ((1, 2), (2, 1))


def test_free_reduction():
    assert Word.parse("x1 x1^-1", "xi").is_empty()
    assert Word.parse("g1 g2 g2^-1 g1", "braid").letters == ((1, 2),)


def test_parse_error_reports_position():
    with pytest.raises(WordSyntaxError) as exc:
        Word.parse("s1 s2 q7", "sigma")
    assert exc.value.position == 6
    with pytest.raises(WordSyntaxError) as exc:
        Word.parse("s1 ! s2", "sigma")
    assert exc.value.position == 3


words = st.lists(st.tuples(st.integers(1, 3), st.integers(-3, 3)), max_size=8).map(lambda ls: Word("sigma", tuple(ls)))


@settings(max_examples=50, deadline=None)
@given(words, words)
def test_word_group_laws(a, b):
    assert (a * a.inverse()).is_empty()
    assert (a * b).inverse() == b.inverse() * a.inverse()
    assert psi_map(a * b) == psi_map(a) * psi_map(b)


def test_psi_images():
    assert str(psi_map(Word.parse("s1", "sigma"))) == "g2 g1^2 g2^-1"
    assert str(psi_map(Word.parse("s2", "sigma"))) == "g2^2"


def test_phi_of_xi_loop():
    # xi3 xi1 -> s2^-1 s1^-1 s1^2 = s2^-1 s1
    assert phi_map(Word.parse("x3 x1", "xi")) == Word.parse("s2^-1 s1", "sigma")
    assert phi_map(Word.parse("x1", "xi")) == Word.parse("s1^2", "sigma")


def test_sigma3_elimination():
    assert eliminate_s3(Word.parse("s3 s2 s1", "sigma")).is_empty()


# -- the representation --------------------------------------------------

def test_level_validation():
    with pytest.raises(ValueError):
        Level(0)
    assert Level(6).conductor == 64


@pytest.mark.parametrize("l", [1, 2, 4, 8])
def test_t_modes(l):
    expected = {1: "zero", 2: "in-field", 4: "in-field", 8: "in-field"}[l]
    ctx = level_context(l)
    assert ctx.t_mode == expected
    assert ctx.t * ctx.t == ctx.scalar(ctx.radicand)


@pytest.mark.parametrize("l", [3, 5, 6, 7, 9, 10])
def test_t_adjoined_elsewhere(l):
    assert level_context(l).t_mode == "adjoined"


@pytest.mark.parametrize("l", list(range(1, 13)) + [20, 30])
def test_generators_match_float_oracle(l):
    f1, f2 = float_generators(l)
    assert np.allclose(as_complex(tk_generator(l, 1)), f1, atol=1e-12)
    assert np.allclose(as_complex(tk_generator(l, 2)), f2, atol=1e-12)


@pytest.mark.parametrize("l", list(range(1, 13)) + [30, 50])
def test_braid_relation_exact(l):
    g1, g2 = tk_generator(l, 1), tk_generator(l, 2)
    assert g1 * g2 * g1 == g2 * g1 * g2
    assert ((g1 * g2) ** 3).is_scalar()


@pytest.mark.parametrize("l", [1, 2, 3, 5, 8, 13])
def test_lantern_relation(l):
    rep = lantern_check(l)
    assert rep["sigma_word"] == "s3 s2 s1"
    assert rep["is_identity"]


@pytest.mark.parametrize("l", [3, 6])
def test_eval_word_routes(l):
    w = Word.parse("x3 x1", "xi")
    assert eval_word(l, w) == eval_braid(l, to_braid(w))
    assert eval_word(l, Word("sigma")) == identity(l)
    g1, g2 = float_generators(l)
    expected = np.linalg.inv(g2) @ g1 @ g1 @ np.linalg.inv(g2)
    assert np.allclose(as_complex(eval_word(l, w)), expected, atol=1e-10)


def test_dehn_words():
    w = Word.parse("T12 T13 T23", "dehn")
    assert lantern_check(4, w)["is_identity"]
    assert not lantern_check(4, Word.parse("T12", "dehn"))["is_identity"]
