import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from boolecode.boolfn import (
    BooleanFunction,
    anf_from_truth_table,
    dnf_from_truth_table,
    evaluate,
    input_index,
)
from conftest import make_example_dnf


def brute_force_anf(fn: BooleanFunction) -> set[frozenset[int]]:
    """Independent Moebius oracle: mu(S) = XOR of f over all subsets of S."""
    monomials = set()
    for s_idx in range(1 << fn.m):
        acc = 0
        t = s_idx
        while True:
            acc ^= fn.table[t]
            if t == 0:
                break
            t = (t - 1) & s_idx
        if acc:
            monomials.add(frozenset(j + 1 for j in range(fn.m) if s_idx & (1 << j)))
    return monomials


def test_and3_anf(and3):
    anf = anf_from_truth_table(and3)
    assert anf.monomials == frozenset({frozenset({1, 2, 3})})
    assert anf.sparsity == 1
    assert anf.degree == 3


def test_or2_anf_matches_bruteforce():
    or2 = BooleanFunction(2, (0, 1, 1, 1))
    anf = anf_from_truth_table(or2)
    expected = {frozenset({1}), frozenset({2}), frozenset({1, 2})}
    assert anf.monomials == frozenset(expected)
    assert anf.monomials == frozenset(brute_force_anf(or2))


def test_constant_zero_anf_and_dnf():
    zero = BooleanFunction(3, (0,) * 8)
    assert anf_from_truth_table(zero).sparsity == 0
    assert anf_from_truth_table(zero).degree == 0
    assert dnf_from_truth_table(zero).weight == 0


def test_and3_dnf(and3):
    supp = dnf_from_truth_table(and3)
    assert supp.support == ((1, 1, 1),)
    assert supp.weight == 1


def test_example_dnf_weight_and_sparsity(example_dnf4):
    assert dnf_from_truth_table(example_dnf4).weight == 2
    anf = anf_from_truth_table(example_dnf4)
    assert anf.sparsity == 2**4 - 1
    assert anf.degree == 4 - 1


def test_example_dnf_all_zeros_input(example_dnf4):
    anf = anf_from_truth_table(example_dnf4)
    assert anf.evaluate((0, 0, 0, 0)) == 1
    assert example_dnf4.evaluate((0, 0, 0, 0)) == 1


def test_evaluate(and3):
    assert evaluate(and3, (1, 1, 1)) == 1
    assert evaluate(and3, (1, 0, 1)) == 0
    with pytest.raises(ValueError):
        and3.evaluate((1, 1))


def test_support_order_ascending():
    fn = BooleanFunction(2, (1, 0, 1, 1))
    assert fn.support_vectors() == ((0, 0), (0, 1), (1, 1))
    assert [input_index(v) for v in fn.support_vectors()] == [0, 2, 3]


def test_hex_round_trip(and3):
    assert and3.to_hex() == "80"
    assert BooleanFunction.from_hex(3, "80") == and3
    rng = random.Random(5)
    for _ in range(20):
        m = rng.randint(1, 9)
        fn = BooleanFunction.random(m, rng)
        assert BooleanFunction.from_hex(m, fn.to_hex()) == fn


def test_from_anf_monomials_round_trip():
    rng = random.Random(11)
    for _ in range(20):
        m = rng.randint(1, 8)
        fn = BooleanFunction.random(m, rng)
        anf = anf_from_truth_table(fn)
        rebuilt = BooleanFunction.from_anf_monomials(m, anf.canonical_monomials())
        assert rebuilt == fn


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=1, max_value=10), st.randoms(use_true_random=False))
def test_anf_round_trip_property(m, rnd):
    fn = BooleanFunction.random(m, rnd)
    anf = anf_from_truth_table(fn)
    assert anf.to_function() == fn
    assert anf.degree <= m
    assert dnf_from_truth_table(fn).weight == fn.weight()


def test_single_all_ones_support_has_sparsity_one():
    for m in range(1, 7):
        fn = BooleanFunction.from_support(m, [(1,) * m])
        assert anf_from_truth_table(fn).sparsity == 1


def test_dnf_to_function_round_trip():
    rng = random.Random(3)
    for _ in range(15):
        m = rng.randint(1, 8)
        fn = BooleanFunction.random(m, rng)
        assert dnf_from_truth_table(fn).to_function() == fn


def test_example_dnf_matches_anf_definition():
    # (X1...Xm) XOR ((X1 xor 1)...(Xm xor 1)) should equal the two-support function
    m = 4
    fn = make_example_dnf(m)
    for idx in range(1 << m):
        x = tuple((idx >> j) & 1 for j in range(m))
        direct = (all(x) and 1 or 0) ^ (not any(x) and 1 or 0)
        assert fn.evaluate(x) == direct


def test_validation_errors():
    with pytest.raises(ValueError):
        BooleanFunction(0, ())
    with pytest.raises(ValueError):
        BooleanFunction(2, (0, 1, 0))
    with pytest.raises(ValueError):
        BooleanFunction(1, (0, 2))
    with pytest.raises(ValueError):
        BooleanFunction.from_anf_monomials(2, [(3,)])
