import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from monodromy.braidrep import Level
from monodromy.fusion import (BlockSpec, Weight, block_dimension, block_dimension_balanced, channel_vector,
                              dimension_report, factorization_rhs, fusion_matrix, fusion_product,
                              verlinde_dimension)


def float_verlinde(l, genus, weights):
    """Oracle: Verlinde sum in floats with the normalised S matrix."""
    m = l + 2
    S = np.array([[math.sqrt(2 / m) * math.sin(math.pi * j * k / m) for k in range(1, l + 2)]
                  for j in range(1, l + 2)])
    total = sum(S[0, j] ** (2 - 2 * genus - len(weights)) * np.prod([S[w, j] for w in weights])
                for j in range(l + 1))
    return round(total)


def ws(*ms):
    return frozenset(Weight(x) for x in ms)


def test_fusion_product_examples():
    assert fusion_product(1, 1, 1) == ws(0)
    for l in range(2, 8):
        assert fusion_product(1, 1, l) == ws(0, 2)
    for l in range(1, 6):
        for b in range(l + 1):
            assert fusion_product(0, b, l) == ws(b)


def test_fusion_product_rejects_out_of_range():
    with pytest.raises(ValueError):
        fusion_product(3, 1, 2)
    with pytest.raises(ValueError):
        Weight(-1)


def test_weights_are_self_dual():
    assert Weight(3).dual == Weight(3)


@pytest.mark.parametrize("l", range(1, 7))
def test_fusion_commutative_and_associative(l):
    for a, b in itertools.product(range(l + 1), repeat=2):
        assert fusion_product(a, b, l) == fusion_product(b, a, l)
    Ns = [np.array(fusion_matrix(x, l)) for x in range(l + 1)]
    for a, b in itertools.product(range(l + 1), repeat=2):
        assert (Ns[a] @ Ns[b] == Ns[b] @ Ns[a]).all()
    # bracketing: (a b) c == a (b c) as formal sums
    for a, b, c in itertools.product(range(l + 1), repeat=3):
        left = np.zeros(l + 1, dtype=int)
        for x in fusion_product(a, b, l):
            for y in fusion_product(x.m, c, l):
                left[y.m] += 1
        right = np.zeros(l + 1, dtype=int)
        for x in fusion_product(b, c, l):
            for y in fusion_product(a, x.m, l):
                right[y.m] += 1
        assert (left == right).all()


def test_block_dimension_examples():
    for l in range(1, 9):
        assert block_dimension(BlockSpec.of(l, 0, 1, 1)) == 1
        assert block_dimension(BlockSpec.of(l, 1, 0)) == l + 1
    for l in range(2, 9):
        assert block_dimension(BlockSpec.of(l, 0, 1, 1, 1, 1)) == 2
    assert block_dimension(BlockSpec.of(1, 0, 1, 1, 1, 1)) == 1


@pytest.mark.parametrize("g", [3, 4, 5])
def test_nonvanishing_with_varpi_insertions(g):
    for l in (1, 2, 3, 4):
        spec = BlockSpec.of(l, 0, 0, 0, *([1] * (2 * g - 4)))
        assert block_dimension(spec) > 0


def test_verlinde_examples():
    for l in range(1, 13):
        assert verlinde_dimension(BlockSpec.of(l, 1, 0)) == l + 1
        assert verlinde_dimension(BlockSpec.of(l, 0, 1, 1)) == 1
    assert verlinde_dimension(BlockSpec.of(1, 0, 1, 1, 1, 1)) == 1


@pytest.mark.parametrize("l", range(1, 5))
def test_verlinde_matches_float_oracle(l):
    for g in range(3):
        for n in range(5):
            for weights in itertools.combinations_with_replacement(range(l + 1), n):
                assert verlinde_dimension(BlockSpec(g, weights, Level(l))) == float_verlinde(l, g, weights)


specs = st.integers(1, 6).flatmap(lambda l: st.tuples(
    st.just(l), st.integers(0, 2), st.lists(st.integers(0, l), max_size=6)))


@settings(max_examples=80, deadline=None)
@given(specs)
def test_two_decompositions_and_verlinde_agree(spec):
    l, g, weights = spec
    s = BlockSpec(g, tuple(weights), Level(l))
    d = block_dimension(s)
    assert d == block_dimension_balanced(s) == verlinde_dimension(s)


@settings(max_examples=80, deadline=None)
@given(specs, st.randoms(use_true_random=False))
def test_order_of_points_is_irrelevant(spec, rnd):
    l, g, weights = spec
    shuffled = list(weights)
    rnd.shuffle(shuffled)
    assert block_dimension(BlockSpec(g, tuple(weights), Level(l))) == \
        block_dimension(BlockSpec(g, tuple(shuffled), Level(l)))


@pytest.mark.parametrize("l", range(1, 7))
def test_propagation_of_vacua(l):
    for g in range(3):
        for n in range(6):
            for weights in itertools.combinations_with_replacement(range(l + 1), n):
                s = BlockSpec(g, weights, Level(l))
                assert block_dimension(s) == block_dimension(s.with_weights(0))


@pytest.mark.parametrize("l", range(1, 7))
def test_factorization_identity(l):
    for g in (1, 2):
        for n in range(4):
            for weights in itertools.combinations_with_replacement(range(l + 1), n):
                s = BlockSpec(g, weights, Level(l))
                assert block_dimension(s) == factorization_rhs(s)


def test_channel_vector_counts_paths():
    # two varpi insertions at l = 3 reach channels 0 and 2 once each
    assert channel_vector([1, 1], 0, 3) == [1, 0, 1, 0]


def test_dimension_report_flags_level_one():
    r = dimension_report(BlockSpec.of(1, 0, 1, 1, 1, 1))
    assert r["dimension"] == 1 and "note" in r
    assert "note" not in dimension_report(BlockSpec.of(2, 0, 1, 1, 1, 1))
