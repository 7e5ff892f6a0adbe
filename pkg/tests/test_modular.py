import cmath
import math
from fractions import Fraction

import numpy as np
import pytest

from monodromy.cyclo import Sign, cyc_make, sign_decide
from monodromy.linalg import SquareMatrix
from monodromy.orderlab import projective_equal
from monodromy.modular import (build_modular, in_discrete_set, modular_image_finite, modular_relations_check,
                               normalized_s, s_scalar, sqrt_rational_exact, st_projective_order, t_matrix,
                               unitarity_defect)


def float_st(l):
    m = l + 2
    idx = range(1, l + 2)
    S = np.array([[math.sqrt(2 / m) * math.sin(math.pi * j * k / m) for k in idx] for j in idx])
    T = np.diag([cmath.exp(1j * math.pi * (j * j / (2 * m) - 0.25)) for j in idx])
    return S, T


def as_complex(M):
    return np.array([[complex(x) for x in row] for row in M.rows])


def float_projective_closure(gens, cap=5000):
    """Oracle: BFS in floats with a rounded projective key."""
    def key(M):
        flat = M.ravel()
        p = flat[np.argmax(np.abs(flat) > 1e-6)]
        return tuple(np.round(flat / p, 6).tolist())

    ident = np.eye(gens[0].shape[0], dtype=complex)
    seen = {key(ident)}
    frontier = [ident]
    while frontier:
        nxt = []
        for A in frontier:
            for g in gens:
                B = A @ g
                k = key(B)
                if k not in seen:
                    seen.add(k)
                    nxt.append(B)
        frontier = nxt
        assert len(seen) < cap
    return len(seen)


@pytest.mark.parametrize("l", range(1, 13))
def test_matrices_match_float_oracle(l):
    S, T = float_st(l)
    rep = build_modular(l)
    c = math.sqrt(2 / (l + 2))
    assert np.allclose(c * as_complex(rep.S), S, atol=1e-12)
    assert np.allclose(as_complex(rep.T), T, atol=1e-12)


def test_level_one_s_is_hadamard_projectively():
    rep = build_modular(1)
    h = SquareMatrix([[cyc_make(24, 0), cyc_make(24, 0)], [cyc_make(24, 0), -cyc_make(24, 0)]])
    assert projective_equal(rep.S, h)


@pytest.mark.parametrize("l", range(1, 13))
def test_structure_and_relations(l):
    rep = modular_relations_check(build_modular(l))
    assert rep["s_symmetric"] and rep["t_unit_diagonal"]
    assert rep["s_squared_scalar"]
    assert rep["relations_ok"]


@pytest.mark.parametrize("l", [1, 2, 5])
def test_relations_negative_control(l):
    rep = build_modular(l)
    diag = [rep.T[j, j] for j in range(rep.rank)]
    diag[0] = diag[0] * cyc_make(rep.conductor, 1)
    bad = SquareMatrix.diagonal(diag)
    assert not modular_relations_check(rep, bad)["s_squared_vs_st_cubed"]


@pytest.mark.parametrize("m", [3, 4, 5, 6, 7, 8, 12, 14])
def test_gauss_sum_square_roots(m):
    r = sqrt_rational_exact(m, 8 * m)
    assert r * r == m
    assert sign_decide(r, 0) is Sign.GT
    assert abs(complex(r) - math.sqrt(m)) < 1e-12


@pytest.mark.parametrize("l", [1, 2, 3, 4, 6])
def test_true_s_is_orthogonal_exactly(l):
    c = s_scalar(l)
    assert c * c == Fraction(2, l + 2)
    S = normalized_s(l)
    assert (S * S.transpose()).is_identity()


@pytest.mark.parametrize("l", [1, 2])
def test_image_order_matches_float_oracle(l):
    rep = build_modular(l)
    S, T = float_st(l)
    img = modular_image_finite(rep)
    assert img.certificate_ok
    assert img.order == float_projective_closure([S, T, S.T.conj(), T.conj()])


def test_discreteness_check_rejects_large_denominators():
    rep = build_modular(2)
    assert in_discrete_set(rep.T, 4)
    assert not in_discrete_set(rep.T * Fraction(1, 9), 4)


def test_cap_exceeded_reports_partial():
    img = modular_image_finite(build_modular(3), cap=100)
    assert img.cap_exceeded and img.partial > 100


@pytest.mark.parametrize("l", range(1, 13))
def test_unitarity_bound(l):
    assert unitarity_defect(build_modular(l), 128) <= Fraction(1, 2 ** 64)


@pytest.mark.parametrize("l", [1, 2, 3])
def test_st_projective_order_is_three(l):
    # (ST)^3 ~ S^2 ~ 1 projectively
    assert st_projective_order(build_modular(l)) == 3


def test_t_matrix_entries():
    T = t_matrix(2)
    # j = 1, m = 4: exp(i pi (1/8 - 1/4)) = zeta_16^-1
    assert T[0, 0] == cyc_make(16, -1)
