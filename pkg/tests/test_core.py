"""Encodings, characters, inner products, and the distance metric."""

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ucx.core import (
    BooleanFunction,
    CharacterSpec,
    DimensionError,
    SetFamily,
    bits_to_bool,
    bool_to_bits,
    dist,
    elements_from_mask,
    eval_character,
    family_to_function,
    function_to_family,
    inner_product,
    mask_from_elements,
    max_dimension,
)


def brute_distance(f: BooleanFunction, g_values) -> Fraction:
    disagreements = sum(1 for a, b in zip(f.values.tolist(), list(g_values)) if a != b)
    return Fraction(disagreements, 1 << f.n)


def test_mask_element_round_trip():
    assert mask_from_elements([1, 3], 3) == 0b101
    assert elements_from_mask(0b101) == (1, 3)
    assert mask_from_elements([], 3) == 0
    with pytest.raises(ValueError):
        mask_from_elements([4], 3)


def test_bitset_bool_round_trip():
    for bits in (0, 1, 0b1010, (1 << 16) - 1):
        assert bool_to_bits(bits_to_bool(bits, 4)) == bits


def test_family_basics():
    fam = SetFamily.from_sets(2, [[1], [2], [1, 2]])
    assert fam.size == 3
    assert fam.members() == (1, 2, 3)
    assert 0 not in fam and 3 in fam
    assert fam.complement().members() == (0,)
    assert fam.frequencies() == (2, 2)
    assert SetFamily.full(2).size == 4
    assert SetFamily.empty(2).size == 0


def test_family_to_function_sign_convention():
    # empty family is constant +1; full family constant -1
    assert family_to_function(SetFamily.empty(2)) == BooleanFunction.constant(2, 1)
    assert family_to_function(SetFamily.full(2)) == BooleanFunction.constant(2, -1)
    # the OR-of-two-coordinates membership function in point order 00,10,01,11
    f3 = family_to_function(SetFamily.from_sets(2, [[1], [2], [1, 2]]))
    assert f3.values.tolist() == [1, -1, -1, -1]


def test_function_family_round_trip_exhaustive():
    for n in (1, 2, 3):
        for bits in range(1 << (1 << n)):
            fam = SetFamily(n, bits)
            assert function_to_family(family_to_function(fam)) == fam


def test_function_to_family_dictator():
    f = BooleanFunction(1, CharacterSpec(1).values(1))
    assert function_to_family(f).members() == (1,)


def test_eval_character():
    chi_empty = CharacterSpec(0)
    assert all(eval_character(chi_empty, x) == 1 for x in range(8))
    chi_1 = CharacterSpec(1)
    assert eval_character(chi_1, 0b001) == -1
    assert eval_character(chi_1, 0b110) == 1
    assert eval_character(CharacterSpec(1, -1), 0b001) == 1


def test_character_orthonormality_exhaustive():
    for n in (1, 2, 3, 4):
        for s_mask in range(1 << n):
            f = BooleanFunction(n, CharacterSpec(s_mask).values(n))
            for t_mask in range(1 << n):
                expected = Fraction(1 if s_mask == t_mask else 0)
                assert inner_product(f, CharacterSpec(t_mask)) == expected


def test_inner_product_examples():
    chi1 = BooleanFunction(2, CharacterSpec(1).values(2))
    assert inner_product(chi1, CharacterSpec(1)) == 1
    assert inner_product(chi1, CharacterSpec(2)) == 0
    f3 = family_to_function(SetFamily.from_sets(2, [[1], [2], [1, 2]]))
    assert inner_product(f3, CharacterSpec(1)) == Fraction(1, 2)


def test_inner_product_dimension_mismatch():
    f = BooleanFunction.constant(2, 1)
    g = BooleanFunction.constant(3, 1)
    with pytest.raises(DimensionError):
        inner_product(f, g)
    with pytest.raises(DimensionError):
        inner_product(f, [1, 1])


def test_dist_examples():
    f3 = family_to_function(SetFamily.from_sets(2, [[1], [2], [1, 2]]))
    chi1 = BooleanFunction(2, CharacterSpec(1).values(2))
    assert dist(f3, f3) == 0
    assert dist(chi1, BooleanFunction(2, CharacterSpec(1, -1).values(2))) == 1
    assert dist(f3, CharacterSpec(1)) == Fraction(1, 4)
    assert dist(f3, chi1) == brute_distance(f3, chi1.values)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 8), st.data())
def test_dist_is_a_metric(n, data):
    size = 1 << n
    tables = [
        np.array(data.draw(st.lists(st.sampled_from([-1, 1]), min_size=size, max_size=size)), dtype=np.int8)
        for _ in range(3)
    ]
    f, g, h = (BooleanFunction(n, t) for t in tables)
    assert dist(f, f) == 0
    assert dist(f, g) == dist(g, f)
    assert dist(f, g) == brute_distance(f, g.values)
    assert dist(f, h) <= dist(f, g) + dist(g, h)


def test_dimension_cap_env(monkeypatch):
    monkeypatch.delenv("UCX_MAX_N", raising=False)
    assert max_dimension() == 20
    with pytest.raises(DimensionError):
        SetFamily.empty(21)
    monkeypatch.setenv("UCX_MAX_N", "22")
    assert max_dimension() == 22
    SetFamily.empty(21)  # now allowed
    monkeypatch.setenv("UCX_MAX_N", "40")
    with pytest.raises(DimensionError):
        max_dimension()
    monkeypatch.setenv("UCX_MAX_N", "zero")
    with pytest.raises(DimensionError):
        max_dimension()


def test_boolean_function_validation():
    with pytest.raises(ValueError):
        BooleanFunction(2, [1, 1, 0, 1])
    with pytest.raises(DimensionError):
        BooleanFunction(2, [1, 1, 1])
    f = BooleanFunction.constant(2, -1)
    assert f.minus_count() == 4
    with pytest.raises(ValueError):
        f.values[0] = 1  # table is read-only


def test_immutability():
    fam = SetFamily.empty(2)
    with pytest.raises(AttributeError):
        fam.bits = 3
    f = BooleanFunction.constant(1, 1)
    with pytest.raises(AttributeError):
        f.n = 2
