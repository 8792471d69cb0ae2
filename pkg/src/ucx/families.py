"""Set-family predicates and transforms: union-closure, rootedness, shadows.

A family is *union-closed* when the union of any two members is a member.
An element i of a member A is a *root* of A when every subset of A that
contains i is also a member; a family is *simply-rooted* when every member
has a root.  The empty set can never have a root, so a family containing it
is not simply-rooted, while the empty family is vacuously simply-rooted.

Complementation inside 2^[n] exchanges the two notions, with one subtlety
the bare definitions hide: a family F is simply-rooted if and only if its
complement G is union-closed AND contains the empty set.  (For union-closed
G without the empty set, the empty set lands in F rootless; every nonempty
member of F still has a root.)  ``duality_check`` verifies exactly this
corrected equivalence, which holds for every family without exception.

Root computation offers two routes with identical results: a per-interval
subset scan (the definition, kept as the small-n path and test oracle), and
a subset-union sweep over the whole lattice in O(n 2^n) that computes, for
every mask A, the union of all complement-members below A; the roots of A
are then the elements of A missing from that union.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .core import SetFamily, bool_to_bits, iter_bits
from .influence import pair_counts


class PreconditionError(ValueError):
    """An operation was called outside its stated domain."""


@dataclass(frozen=True)
class RootReport:
    """Roots of every member; members and root sets are parallel mask tuples."""

    n: int
    members: tuple[int, ...]
    root_sets: tuple[int, ...]

    @property
    def uniquely_rooted(self) -> tuple[int, ...]:
        return tuple(m for m, r in zip(self.members, self.root_sets) if r.bit_count() == 1)

    @property
    def unique_root_count(self) -> int:
        return sum(1 for r in self.root_sets if r.bit_count() == 1)

    def roots_of(self, member: int) -> int:
        try:
            return self.root_sets[self.members.index(member)]
        except ValueError:
            raise KeyError(f"mask {member} is not a member") from None


@dataclass(frozen=True)
class FamilyStats:
    """Size, per-element frequencies, abundance/rarity, and the size gap delta.

    Abundant and rare are both non-strict, so an element in exactly half the
    members is reported as both.  delta = (2^{n-1} - |F|) / 2^n is signed.
    """

    n: int
    size: int
    frequencies: tuple[int, ...]
    abundant: tuple[int, ...]
    rare: tuple[int, ...]
    delta: Fraction


def is_union_closed(family: SetFamily) -> bool:
    """True when every pairwise union of members is a member."""
    members = family.members()
    if len(members) <= 1:
        return True
    if len(members) > 64:
        return _is_union_closed_vector(family)
    bits = family.bits
    for idx, a in enumerate(members):
        for b in members[idx + 1 :]:
            if not (bits >> (a | b)) & 1:
                return False
    return True


def _is_union_closed_vector(family: SetFamily) -> bool:
    table = family.to_bool()
    arr = family.members_array()
    chunk = max(1, (1 << 20) // max(1, len(arr)))
    for start in range(0, len(arr), chunk):
        unions = arr[start : start + chunk, None] | arr[None, :]
        if not table[unions].all():
            return False
    return True


def _root_set_naive(family: SetFamily, member: int) -> int:
    """Roots of one member by scanning every subset interval (definition)."""
    roots = 0
    for i in iter_bits(member):
        bit = 1 << i
        rest = member ^ bit
        sub = rest
        ok = True
        while True:
            if (sub | bit) not in family:
                ok = False
                break
            if sub == 0:
                break
            sub = (sub - 1) & rest
        if ok:
            roots |= bit
    return roots


def _roots_naive(family: SetFamily) -> tuple[int, ...]:
    return tuple(_root_set_naive(family, m) for m in family.members())


def _cover_union_table(n: int, complement_table: np.ndarray) -> np.ndarray:
    """For every mask A: union of all complement-members contained in A."""
    masks = np.arange(1 << n, dtype=np.uint32)
    cover = np.where(complement_table, masks, np.uint32(0))
    for i in range(n):
        view = cover.reshape(-1, 2, 1 << i)
        view[:, 1, :] |= view[:, 0, :]
    return cover


def _roots_fast(family: SetFamily) -> tuple[int, ...]:
    cover = _cover_union_table(family.n, ~family.to_bool())
    members = family.members_array()
    return tuple(int(v) for v in members & ~cover[members])


def roots(family: SetFamily) -> RootReport:
    """Root sets for every member, in ascending member-mask order."""
    members = family.members()
    if family.n <= 6:
        root_sets = tuple(_root_set_naive(family, m) for m in members)
    else:
        root_sets = _roots_fast(family)
    return RootReport(family.n, members, root_sets)


def is_simply_rooted(family: SetFamily) -> bool:
    """True when every member has a root; the empty set member never does."""
    if family.size == 0:
        return True
    if 0 in family:
        return False
    if family.n <= 6:
        return all(_root_set_naive(family, m) != 0 for m in family.members())
    cover = _cover_union_table(family.n, ~family.to_bool())
    members = family.members_array()
    return bool(np.all(members & ~cover[members]))


def duality_check(family: SetFamily) -> bool:
    """Verify the complement duality on one family; true for every family.

    The exact equivalence is: family union-closed AND containing the empty
    set <=> complement simply-rooted.  Both sides are computed independently
    (pairwise union scan versus root search) and compared.
    """
    lhs = is_union_closed(family) and 0 in family
    rhs = is_simply_rooted(family.complement())
    return lhs == rhs


def upper_shadow(family: SetFamily) -> SetFamily:
    """All sets obtained by adding one element to some member."""
    table = family.to_bool()
    out = np.zeros_like(table)
    for i in range(family.n):
        src = table.reshape(-1, 2, 1 << i)
        dst = out.reshape(-1, 2, 1 << i)
        dst[:, 1, :] |= src[:, 0, :]
    return SetFamily(family.n, bool_to_bits(out))


def lower_shadow(family: SetFamily) -> SetFamily:
    """All sets obtained by removing one element from some member."""
    table = family.to_bool()
    out = np.zeros_like(table)
    for i in range(family.n):
        src = table.reshape(-1, 2, 1 << i)
        dst = out.reshape(-1, 2, 1 << i)
        dst[:, 0, :] |= src[:, 1, :]
    return SetFamily(family.n, bool_to_bits(out))


def missing_lower_covers(family: SetFamily, member: int) -> int:
    """Mask of elements i in the member with member - i outside the family."""
    out = 0
    for i in iter_bits(member):
        if (member ^ (1 << i)) not in family:
            out |= 1 << i
    return out


def shadow_lemma_check(family: SetFamily) -> bool:
    """For a simply-rooted family: each member's lower shadow misses the family
    in exactly one set (the unique root removed) when the member has a single
    root, and in no set otherwise.  Always true on the stated domain.
    """
    if not is_simply_rooted(family):
        raise PreconditionError("shadow dichotomy requires a simply-rooted family")
    report = roots(family)
    for member, root_set in zip(report.members, report.root_sets):
        missing = missing_lower_covers(family, member)
        if root_set.bit_count() == 1:
            if missing != root_set:
                return False
        elif missing != 0:
            return False
    return True


def thin_boundary_check(family: SetFamily) -> bool:
    """True when every member covers at most one set outside the family."""
    return all(missing_lower_covers(family, m).bit_count() <= 1 for m in family.members())


def theorem2_quantities(family: SetFamily) -> tuple[int, int]:
    """Upper-shadow deficiency and the complement's unique-root count.

    Requires a union-closed input.  The deficiency |upper_shadow(G) - G| never
    exceeds 2^{n-1}; when the empty set is a member the two returned numbers
    are equal (each singleton missing from an empty-set-free G is uniquely
    rooted in the complement without being reachable by adding one element).
    """
    if not is_union_closed(family):
        raise PreconditionError("upper-shadow deficiency requires a union-closed family")
    full = (1 << (1 << family.n)) - 1
    deficiency = (upper_shadow(family).bits & (full ^ family.bits)).bit_count()
    unique_count = roots(family.complement()).unique_root_count
    return deficiency, unique_count


def positive_influence_cap_check(family: SetFamily) -> bool:
    """For a simply-rooted family: I^+ = unique_root_count / 2^{n-1} and
    I^+ <= min(1, |F| / 2^{n-1}).
    """
    if not is_simply_rooted(family):
        raise PreconditionError("positive-influence cap requires a simply-rooted family")
    n = family.n
    enter, _ = pair_counts(family.to_bool(), n)
    total_enter = sum(enter)
    half = 1 << (n - 1)
    cap = min(Fraction(1), Fraction(family.size, half))
    return (
        Fraction(total_enter, half) <= cap
        and total_enter == roots(family).unique_root_count
    )


def stats(family: SetFamily) -> FamilyStats:
    """Exact frequency statistics with non-strict abundance and rarity."""
    freqs = family.frequencies()
    size = family.size
    abundant = tuple(i + 1 for i, c in enumerate(freqs) if 2 * c >= size)
    rare = tuple(i + 1 for i, c in enumerate(freqs) if 2 * c <= size)
    delta = Fraction((1 << (family.n - 1)) - size, 1 << family.n)
    return FamilyStats(family.n, size, freqs, abundant, rare, delta)
