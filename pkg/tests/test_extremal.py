"""Named constructions, the quadratic rigid class, and nearest-dictator search."""

from fractions import Fraction

import numpy as np
import pytest

from ucx.core import BooleanFunction, CharacterSpec, SetFamily, family_to_function
from ucx.extremal import (
    KSClassMember,
    build,
    dictator,
    example_f3,
    half_cube_missing,
    ks_distance,
    ks_enumerate,
    nearest_dictator,
    or_family,
    or_family_stats,
    parity,
)
from ucx.families import is_simply_rooted, is_union_closed
from ucx.influence import profile
from ucx.spectral import transform


def test_or_family_examples():
    c1 = or_family(1, 3)
    assert c1.family.members() == tuple(m for m in range(8) if m & 1)
    assert c1.function == dictator(1, 3).function

    f3 = or_family(2, 2)
    assert f3.family == SetFamily.from_sets(2, [[1], [2], [1, 2]])
    assert example_f3(2).family == f3.family

    hc = half_cube_missing(1, 3)
    assert hc.family.members() == tuple(m for m in range(8) if not m & 1)


def test_build_dispatch():
    assert build("or_family", 3, m=2).family == or_family(2, 3).family
    assert build("half_cube_missing", 3, i=2).family == half_cube_missing(2, 3).family
    assert build("dictator", 2, i=1).function.values.tolist() == [1, -1, 1, -1]
    assert build("parity", 2, elements=(1, 2)).function.values.tolist() == [1, -1, -1, 1]
    assert build("example_f3", 2).function.values.tolist() == [1, -1, -1, -1]
    with pytest.raises(ValueError):
        build("nonesuch", 2)
    with pytest.raises(ValueError):
        or_family(4, 3)
    with pytest.raises(ValueError):
        half_cube_missing(0, 3)


def test_or_family_is_union_closed_and_simply_rooted():
    for n in range(1, 11):
        for m in range(1, n + 1):
            fam = or_family(m, n).family
            assert is_union_closed(fam)
            assert is_simply_rooted(fam)


def test_or_family_stats_match_brute_force():
    for n in range(1, 11):
        for m in range(1, n + 1):
            mean, positive, total = or_family_stats(m, n)
            f = or_family(m, n).function
            prof = profile(f)
            assert transform(f).coefficient(0) == mean
            assert prof.positive_influence() == positive
            assert prof.influence() == total


def test_or_family_stats_values():
    assert or_family_stats(1, 3) == (0, 1, 1)
    assert or_family_stats(2, 3) == (Fraction(-1, 2), 1, 1)
    assert or_family_stats(3, 3) == (Fraction(-3, 4), Fraction(3, 4), Fraction(3, 4))


def test_ks_members_are_plus_minus_one_valued():
    for n in (2, 4, 5, 6):
        for member in ks_enumerate(n):
            values = member.values(n)
            assert np.all(np.abs(values) == 1)


def test_ks_quadruple_identity_at_origin():
    member = KSClassMember(1, (1, 2, 3, 4))
    assert int(member.values(4)[0]) == 1  # (1 + 1 + 1 - 1) / 2


def test_ks_enumerate_counts():
    assert sum(1 for _ in ks_enumerate(3)) == 2 * 3
    assert sum(1 for _ in ks_enumerate(4)) == 2 * 6 + 2 * 24
    with pytest.raises(ValueError):
        ks_enumerate(1)


def test_ks_distance_examples():
    f2 = BooleanFunction(4, CharacterSpec(0b0011).values(4))
    member, d = ks_distance(f2)
    assert d == 0 and member.sign == 1 and member.indices == (1, 2)

    neg = BooleanFunction(4, CharacterSpec(0b0011, -1).values(4))
    member, d = ks_distance(neg)
    assert d == 0 and member.sign == -1 and member.indices == (1, 2)

    quad = KSClassMember(1, (1, 2, 3, 4)).function(4)
    member, d = ks_distance(quad)
    assert d == 0


def test_ks_distance_correlation_matches_direct():
    rng = np.random.default_rng(41)
    for _ in range(20):
        n = 4 + int(rng.integers(0, 2))
        f = BooleanFunction(n, (rng.integers(0, 2, size=1 << n, dtype=np.int8) << 1) - 1)
        spec = transform(f)
        for member in list(ks_enumerate(n))[:40]:
            direct = Fraction(
                int(np.dot(f.values.astype(np.int64), member.values(n).astype(np.int64))),
                1 << n,
            )
            assert member.correlation(spec) == direct


def test_nearest_dictator():
    chi1 = BooleanFunction(3, CharacterSpec(1).values(3))
    assert nearest_dictator(chi1) == (1, 1, 0)

    f3 = family_to_function(SetFamily.from_sets(2, [[1], [2], [1, 2]]))
    assert nearest_dictator(f3) == (1, 1, Fraction(1, 4))

    const = BooleanFunction.constant(2, 1)
    assert nearest_dictator(const) == (1, 1, Fraction(1, 2))

    anti = BooleanFunction(2, CharacterSpec(2, -1).values(2))
    assert nearest_dictator(anti) == (2, -1, 0)
