"""Exhaustive and randomized property sweeps with deterministic reports.

Instance spaces
---------------
Exhaustive mode (n <= 4 only) walks every function or family on the cube:
the integer ``bits`` in [0, 2^{2^n}) is read both as a family bitset and as
the function that is -1 exactly on that family's members.  Random mode draws
each instance from its own RNG stream seeded by (seed, instance_index), so
the realized instances, violations, and summaries are identical no matter
how the index range is partitioned across workers.  Canonical report
serialization omits wall-clock time and the worker count for that reason.

Random family instances are built from union closures of uniformly drawn
generator sets.  Properties quantified over simply-rooted families use the
complement of a closure with the empty set adjoined, which is simply-rooted
by the complement duality; the upper-shadow property uses the closure with
the empty set adjoined directly, the exact domain on which its deficiency
equals the complement's unique-root count.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

import numpy as np

from . import familyfile
from .core import (
    CharacterSpec,
    SetFamily,
    check_dimension,
    iter_bits,
    popcount_table,
)
from .families import (
    PreconditionError,
    duality_check,
    is_simply_rooted,
    is_union_closed,
    roots,
    shadow_lemma_check,
    stats,
    thin_boundary_check,
    theorem2_quantities,
    _cover_union_table,
)
from .influence import pair_counts
from .spectral import fwht_rows

PROPERTY_NAMES = (
    "duality",
    "shadow-lemma",
    "parseval",
    "influence-identity",
    "corollary-lb",
    "theorem2",
    "frankl",
    "conjecture2",
    "partial-claim",
    "edge-iso",
    "kotlov",
    "fkn-zero",
    "ks-zero",
    "positive-cap",
    "thin-boundary",
)

_FUNCTION_PROPS = frozenset(
    {"parseval", "influence-identity", "corollary-lb", "edge-iso", "fkn-zero", "ks-zero"}
)

_CHUNK = 2048
EXHAUSTIVE_MAX_N = 4


# ---------------------------------------------------------------------------
# family generation primitives


def _closure_masks(masks: Iterable[int]) -> set[int]:
    """All unions of nonempty subsets of the given masks."""
    closed: set[int] = set()
    for g in masks:
        g = int(g)
        if g in closed:
            continue
        closed |= {g | s for s in closed}
        closed.add(g)
    return closed


def union_closure(generators: SetFamily) -> SetFamily:
    """Smallest union-closed superfamily; contains the empty set only if a
    generator is the empty set."""
    return SetFamily.from_members(generators.n, _closure_masks(generators.members()))


def enumerate_families(n: int, which: str = "all") -> Iterator[SetFamily]:
    """Every family on [n] exactly once, optionally filtered; n <= 4 only."""
    if not 1 <= n <= EXHAUSTIVE_MAX_N:
        raise ValueError(f"exhaustive enumeration capped at n = {EXHAUSTIVE_MAX_N}")
    if which not in ("all", "union_closed", "simply_rooted"):
        raise ValueError(f"unknown filter {which!r}")
    for bits in range(1 << (1 << n)):
        fam = SetFamily(n, bits)
        if which == "union_closed" and not is_union_closed(fam):
            continue
        if which == "simply_rooted" and not is_simply_rooted(fam):
            continue
        yield fam


def random_union_closed(n: int, generator_count: int, seed: int) -> SetFamily:
    """Union closure of ``generator_count`` uniform subsets; deterministic."""
    check_dimension(n)
    if generator_count < 0:
        raise ValueError("generator_count must be non-negative")
    rng = np.random.default_rng(seed)
    masks = rng.integers(0, 1 << n, size=generator_count, dtype=np.int64)
    return SetFamily.from_members(n, _closure_masks(masks))


def _instance_rng(seed: int, index: int) -> np.random.Generator:
    return np.random.default_rng((seed, index))


# ---------------------------------------------------------------------------
# single-instance checks exposed as API


def largest_threshold_k(n: int, size: int) -> int | None:
    """Largest k in [0, n-1] with mean coefficient <= -(1 - 2^{-k}),
    in terms of the family size; None when even k = 0 fails."""
    for k in range(n - 1, -1, -1):
        if 2 * size >= (1 << (n + 1)) - (1 << (n - k)):
            return k
    return None


def conjecture2_margin(family: SetFamily) -> tuple[int | None, Fraction | None]:
    """Slack of the positive-influence cap (k+1) 2^{-k} at the largest
    applicable threshold k.  A negative margin would be a counterexample.
    """
    if family.size == 0:
        raise PreconditionError("margin requires a nonempty family")
    if not is_simply_rooted(family):
        raise PreconditionError("margin requires a simply-rooted family")
    n = family.n
    k = largest_threshold_k(n, family.size)
    if k is None:
        return None, None
    enter, _ = pair_counts(family.to_bool(), n)
    margin = Fraction(k + 1, 1 << k) - Fraction(sum(enter), 1 << (n - 1))
    return k, margin


def _has_full_direction_component(n: int, masks: Iterable[int]) -> bool:
    index = {int(m): i for i, m in enumerate(masks)}
    parent = list(range(len(index)))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    dirs = [0] * len(index)
    for v, vi in index.items():
        for i in range(n):
            u = v ^ (1 << i)
            if u >= v:
                continue  # visit each cube edge from its upper endpoint
            ui = index.get(u)
            if ui is None:
                continue
            ra, rb = find(vi), find(ui)
            if ra != rb:
                parent[rb] = ra
                dirs[ra] |= dirs[rb]
            dirs[find(vi)] |= 1 << i
    full = (1 << n) - 1
    return any(dirs[find(i)] == full for i in range(len(parent)))


def kotlov_check(vertices: SetFamily) -> bool:
    """For a vertex set larger than half the cube: some connected component
    of the induced subgraph uses edges in all n directions."""
    if vertices.size <= 1 << (vertices.n - 1):
        raise PreconditionError("vertex set must exceed half the cube")
    return _has_full_direction_component(vertices.n, vertices.members())


# ---------------------------------------------------------------------------
# sweep plan and report


@dataclass(frozen=True)
class SweepPlan:
    property: str
    n: int
    mode: str
    samples: int | None = None
    seed: int = 0
    worker_count: int = 1
    witness_cap: int = 10

    def validate(self) -> None:
        if self.property not in PROPERTY_NAMES:
            raise ValueError(f"unknown property {self.property!r}")
        check_dimension(self.n)
        if self.mode not in ("exhaustive", "random"):
            raise ValueError(f"mode must be exhaustive or random, got {self.mode!r}")
        if self.mode == "exhaustive":
            if self.n > EXHAUSTIVE_MAX_N:
                raise ValueError(f"exhaustive sweeps capped at n = {EXHAUSTIVE_MAX_N}")
        else:
            if self.samples is None or self.samples < 1:
                raise ValueError("random mode needs samples >= 1")
        if not 0 <= self.seed < 1 << 64:
            raise ValueError("seed must be an unsigned 64-bit integer")
        if self.worker_count < 1:
            raise ValueError("worker_count must be >= 1")
        if self.witness_cap < 0:
            raise ValueError("witness_cap must be >= 0")
        if self.property == "ks-zero" and self.n < 2:
            raise ValueError("ks-zero needs n >= 2")


@dataclass(frozen=True)
class VerificationReport:
    property: str
    n: int
    mode: str
    samples: int | None
    seed: int
    worker_count: int
    enumerated: int
    checked: int
    violation_count: int
    violations: tuple[dict, ...]
    summary: dict
    passed: bool
    elapsed_ms: float

    def canonical_dict(self) -> dict:
        """Report content that must be identical across worker counts."""
        return _jsonable(
            {
                "property": self.property,
                "n": self.n,
                "mode": self.mode,
                "samples": self.samples,
                "seed": self.seed,
                "enumerated": self.enumerated,
                "checked": self.checked,
                "violation_count": self.violation_count,
                "passed": self.passed,
                "violations": list(self.violations),
                "summary": self.summary,
            }
        )

    def canonical_json(self) -> str:
        import json

        return json.dumps(self.canonical_dict(), sort_keys=True, indent=2) + "\n"


def _jsonable(value):
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, (np.bool_,)):
        return bool(value)
    return value


# ---------------------------------------------------------------------------
# violation payloads


def _family_witness(index: int, family: SetFamily, detail: dict) -> dict:
    return {
        "index": index,
        "kind": "family",
        "n": family.n,
        "family": familyfile.format_family(family),
        "detail": _jsonable(detail),
    }


def _function_witness(index: int, n: int, values: np.ndarray, detail: dict) -> dict:
    return {
        "index": index,
        "kind": "function",
        "n": n,
        "function": "".join("-" if v < 0 else "+" for v in values),
        "detail": _jsonable(detail),
    }


# ---------------------------------------------------------------------------
# function-space sweeps (vectorized over chunks)


def _function_chunks(plan: SweepPlan, lo: int, hi: int):
    size = 1 << plan.n
    if plan.mode == "exhaustive":
        cols = np.arange(size, dtype=np.uint32)
        for start in range(lo, hi, _CHUNK):
            stop = min(start + _CHUNK, hi)
            idx = np.arange(start, stop, dtype=np.uint64)
            bits = ((idx[:, None] >> cols[None, :]) & 1).astype(np.int8)
            yield start, (1 - 2 * bits).astype(np.int8)
    else:
        for start in range(lo, hi, _CHUNK):
            stop = min(start + _CHUNK, hi)
            rows = np.empty((stop - start, size), dtype=np.int8)
            for r, index in enumerate(range(start, stop)):
                rng = _instance_rng(plan.seed, index)
                rows[r] = (rng.integers(0, 2, size=size, dtype=np.int8) << 1) - 1
            yield start, rows


def _pivotal_totals(mat: np.ndarray, n: int) -> np.ndarray:
    rows = mat.shape[0]
    total = np.zeros(rows, dtype=np.int64)
    for i in range(n):
        view = mat.reshape(rows, -1, 2, 1 << i)
        total += np.count_nonzero(view[:, :, 0, :] != view[:, :, 1, :], axis=(1, 2))
    return total


def _level_sum_matrix(squares: np.ndarray, n: int) -> np.ndarray:
    """Per-row sums of squared coefficients grouped by level: rows x (n+1)."""
    pc = popcount_table(n)
    out = np.zeros((squares.shape[0], n + 1), dtype=np.int64)
    for k in range(n + 1):
        cols = np.nonzero(pc == k)[0]
        out[:, k] = squares[:, cols].sum(axis=1)
    return out


def _signed_dictator_rows(n: int) -> dict[bytes, tuple[int, int]]:
    rows: dict[bytes, tuple[int, int]] = {}
    for i in range(1, n + 1):
        vals = CharacterSpec(1 << (i - 1)).values(n)
        rows[vals.tobytes()] = (i, 1)
        rows[(-vals).astype(np.int8).tobytes()] = (i, -1)
    return rows


def _ks_distance_zero(n: int, spectrum_row: np.ndarray) -> bool:
    from .extremal import ks_enumerate
    from .spectral import Spectrum

    spec = Spectrum(n, spectrum_row)
    for member in ks_enumerate(n):
        if member.correlation(spec) == 1:
            return True
    return False


def _function_block(plan: SweepPlan, lo: int, hi: int) -> dict:
    n = plan.n
    prop = plan.property
    four_n = 1 << (2 * n)
    half = 1 << (n - 1)
    violations: list[dict] = []
    violation_count = 0
    summary: dict = {}
    checked = 0
    dictators = _signed_dictator_rows(n) if prop == "fkn-zero" else None

    for start, mat in _function_chunks(plan, lo, hi):
        rows = mat.shape[0]
        checked += rows
        spec_mat = mat.astype(np.int64)
        fwht_rows(spec_mat)
        squares = spec_mat * spec_mat
        bad_rows: dict[int, dict] = {}

        if prop == "parseval":
            sums = squares.sum(axis=1)
            for r in np.nonzero(sums != four_n)[0]:
                bad_rows[int(r)] = {"coefficient_square_sum": int(sums[r]), "expected": four_n}
        elif prop == "influence-identity":
            pivotal = _pivotal_totals(mat, n)
            weighted = squares @ popcount_table(n).astype(np.int64)
            for r in np.nonzero(weighted != pivotal << (n + 1))[0]:
                bad_rows[int(r)] = {
                    "pivotal_pairs": int(pivotal[r]),
                    "weighted_square_sum": int(weighted[r]),
                }
        elif prop == "corollary-lb":
            pivotal = _pivotal_totals(mat, n)
            levels = _level_sum_matrix(squares, n)
            lhs = pivotal << (n + 1)  # I(f) * 2 * 4^n / 2^n
            for k in range(1, n + 1):
                deficit = sum((k - i) * levels[:, i] for i in range(k))
                bound = k * four_n - deficit
                for r in np.nonzero(lhs < bound)[0]:
                    bad_rows.setdefault(int(r), {"k": k, "influence_scaled": int(lhs[r]), "bound_scaled": int(bound[r])})
        elif prop == "edge-iso":
            pivotal = _pivotal_totals(mat, n)
            s0 = spec_mat[:, 0]
            for k in range(0, n):
                lo_thresh = -((1 << n) - (1 << (n - k)))
                applicable = (s0 >= lo_thresh) & (s0 <= 0)
                ok = (pivotal << k) >= (k + 1) * half
                for r in np.nonzero(applicable & ~ok)[0]:
                    bad_rows.setdefault(int(r), {"k": k, "pivotal_pairs": int(pivotal[r]), "mean_scaled": int(s0[r])})
        elif prop == "fkn-zero":
            level1 = squares[:, np.nonzero(popcount_table(n) == 1)[0]].sum(axis=1)
            for r in np.nonzero(level1 == four_n)[0]:
                summary["num_qualifying"] = summary.get("num_qualifying", 0) + 1
                if mat[int(r)].tobytes() not in dictators:
                    bad_rows[int(r)] = {"reason": "full level-1 weight but not a signed dictator"}
        elif prop == "ks-zero":
            level2 = squares[:, np.nonzero(popcount_table(n) == 2)[0]].sum(axis=1)
            for r in np.nonzero(level2 == four_n)[0]:
                summary["num_qualifying"] = summary.get("num_qualifying", 0) + 1
                if not _ks_distance_zero(n, spec_mat[int(r)]):
                    bad_rows[int(r)] = {"reason": "full level-2 weight but outside the quadratic class"}
        else:  # pragma: no cover - guarded by plan validation
            raise ValueError(f"not a function property: {prop}")

        for r in sorted(bad_rows):
            violation_count += 1
            if len(violations) < plan.witness_cap:
                violations.append(_function_witness(start + r, n, mat[r], bad_rows[r]))

    return {
        "enumerated": hi - lo,
        "checked": checked,
        "violation_count": violation_count,
        "violations": violations,
        "summary": summary,
    }


# ---------------------------------------------------------------------------
# family-space sweeps


def _check_family(prop: str, fam: SetFamily):
    """Honest op-backed check of one family.  Returns
    (applicable, ok, detail, summary_update)."""
    n = fam.n
    half = 1 << (n - 1)
    if prop == "duality":
        ok = duality_check(fam)
        return True, ok, None if ok else {"reason": "duality mismatch"}, None
    if prop == "frankl":
        if fam.size == 0 or fam.bits == 1 or not is_union_closed(fam):
            return False, True, None, None
        st = stats(fam)
        excess = max(2 * c - st.size for c in st.frequencies)
        return True, excess >= 0, ({"frequencies": list(st.frequencies)} if excess < 0 else None), {
            "min_abundance_excess": excess
        }
    if prop == "theorem2":
        if 0 not in fam or not is_union_closed(fam):
            return False, True, None, None
        deficiency, unique_count = theorem2_quantities(fam)
        ok = deficiency == unique_count and deficiency <= half
        detail = None if ok else {"deficiency": deficiency, "unique_root_count": unique_count}
        return True, ok, detail, {"max_deficiency": deficiency}
    # remaining properties all quantify over simply-rooted families
    if not is_simply_rooted(fam):
        return False, True, None, None
    if prop == "shadow-lemma":
        ok = shadow_lemma_check(fam)
        return True, ok, None if ok else {"reason": "shadow dichotomy failed"}, None
    if prop == "thin-boundary":
        ok = thin_boundary_check(fam)
        return True, ok, None if ok else {"reason": "member covers two missing sets"}, None
    if prop == "positive-cap":
        enter, _ = pair_counts(fam.to_bool(), n)
        total_enter = sum(enter)
        unique_count = roots(fam).unique_root_count
        ok = total_enter == unique_count and total_enter <= min(half, fam.size)
        detail = None if ok else {"enter_pairs": total_enter, "unique_root_count": unique_count}
        return True, ok, detail, None
    if prop == "partial-claim":
        if 4 * fam.size <= 3 * (1 << n):
            return False, True, None, None
        enter, _ = pair_counts(fam.to_bool(), n)
        ok = sum(enter) < half
        return True, ok, None if ok else {"enter_pairs": sum(enter)}, {"num_applicable": 1}
    if prop == "conjecture2":
        if fam.size == 0:
            return False, True, None, None
        k, margin = conjecture2_margin(fam)
        if k is None:
            return True, True, None, None
        ok = margin >= 0
        detail = None if ok else {"k": k, "margin": margin}
        return True, ok, detail, {"num_applicable": 1, "min_margin": margin}
    raise ValueError(f"not a family property: {prop}")  # pragma: no cover


def _random_bits(rng: np.random.Generator, n: int) -> int:
    if n >= 3:
        return int.from_bytes(rng.bytes(1 << (n - 3)), "little")
    return int(rng.integers(0, 1 << (1 << n)))


def _random_generator_masks(rng: np.random.Generator, n: int) -> np.ndarray:
    count = 1 + int(rng.integers(0, 2 * n))
    return rng.integers(0, 1 << n, size=count, dtype=np.int64)


def _boundary_masks(members: np.ndarray, in_complement: np.ndarray, n: int) -> np.ndarray:
    """For each member mask, the elements whose removal lands outside the family."""
    out = np.zeros_like(members)
    for i in range(n):
        bit = np.uint32(1 << i)
        has = (members & bit) != 0
        low = (members ^ bit)[has]
        hits = np.zeros(len(members), dtype=bool)
        hits[has] = in_complement[low]
        out[hits] |= bit
    return out


def _random_family_check(prop: str, n: int, seed: int, index: int):
    """Fast-path randomized instance; mirrors ``_check_family`` semantics.

    Returns (applicable, ok, witness_family_or_None, detail, summary_update).
    """
    rng = _instance_rng(seed, index)
    half = 1 << (n - 1)
    size_cube = 1 << n

    if prop == "duality":
        fam = SetFamily(n, _random_bits(rng, n))
        ok = duality_check(fam)
        return True, ok, None if ok else fam, None if ok else {"reason": "duality mismatch"}, None

    closure = _closure_masks(_random_generator_masks(rng, n))

    if prop == "frankl":
        if not closure or closure == {0}:
            return False, True, None, None, None
        members = sorted(closure)
        size = len(members)
        freqs = [0] * n
        for m in members:
            for i in iter_bits(m):
                freqs[i] += 1
        excess = max(2 * c - size for c in freqs)
        ok = excess >= 0
        fam = None if ok else SetFamily.from_members(n, members)
        return True, ok, fam, None if ok else {"frequencies": freqs}, {"min_abundance_excess": excess}

    closure.add(0)
    in_g = np.zeros(size_cube, dtype=bool)
    in_g[list(closure)] = True

    if prop == "theorem2":
        shadow = np.zeros(size_cube, dtype=bool)
        for i in range(n):
            src = in_g.reshape(-1, 2, 1 << i)
            dst = shadow.reshape(-1, 2, 1 << i)
            dst[:, 1, :] |= src[:, 0, :]
        deficiency = int(np.count_nonzero(shadow & ~in_g))
        cover = _cover_union_table(n, in_g)
        members_f = np.nonzero(~in_g)[0].astype(np.uint32)
        root_masks = members_f & ~cover[members_f]
        unique_count = int(np.count_nonzero(popcount_table(n)[root_masks] == 1))
        ok = deficiency == unique_count and deficiency <= half
        fam = None if ok else SetFamily.from_members(n, closure)
        detail = None if ok else {"deficiency": deficiency, "unique_root_count": unique_count}
        return True, ok, fam, detail, {"max_deficiency": deficiency}

    # simply-rooted domain: the complement of the closure-with-empty-set
    f_size = size_cube - len(closure)
    members_f = np.nonzero(~in_g)[0].astype(np.uint32)

    if prop in ("shadow-lemma", "thin-boundary", "positive-cap"):
        cover = _cover_union_table(n, in_g)
        root_masks = members_f & ~cover[members_f]
        boundary = _boundary_masks(members_f, in_g, n)
        pc = popcount_table(n)
        if prop == "thin-boundary":
            ok = bool(np.all(pc[boundary] <= 1))
        elif prop == "shadow-lemma":
            unique = pc[root_masks] == 1
            ok = bool(np.all(np.where(unique, boundary == root_masks, boundary == 0)))
        else:
            enter, _ = pair_counts(~in_g, n)
            total_enter = sum(enter)
            unique_count = int(np.count_nonzero(pc[root_masks] == 1))
            ok = total_enter == unique_count and total_enter <= min(half, f_size)
        fam = None if ok else SetFamily.from_members(n, members_f.tolist())
        return True, ok, fam, None if ok else {"reason": f"{prop} failed"}, None

    if prop in ("conjecture2", "partial-claim"):
        if f_size == 0:
            return False, True, None, None, None
        enter, _ = pair_counts(~in_g, n)
        total_enter = sum(enter)
        if prop == "partial-claim":
            if 4 * f_size <= 3 * size_cube:
                return False, True, None, None, None
            ok = total_enter < half
            fam = None if ok else SetFamily.from_members(n, members_f.tolist())
            return True, ok, fam, None if ok else {"enter_pairs": total_enter}, {"num_applicable": 1}
        k = largest_threshold_k(n, f_size)
        if k is None:
            return True, True, None, None, None
        margin = Fraction(k + 1, 1 << k) - Fraction(total_enter, half)
        ok = margin >= 0
        fam = None if ok else SetFamily.from_members(n, members_f.tolist())
        detail = None if ok else {"k": k, "margin": margin}
        return True, ok, fam, detail, {"num_applicable": 1, "min_margin": margin}

    raise ValueError(f"not a family property: {prop}")  # pragma: no cover


def _family_block(plan: SweepPlan, lo: int, hi: int) -> dict:
    violations: list[dict] = []
    violation_count = 0
    summary: dict = {}
    checked = 0
    for index in range(lo, hi):
        if plan.mode == "exhaustive":
            fam = SetFamily(plan.n, index)
            applicable, ok, detail, upd = _check_family(plan.property, fam)
            witness_fam = fam if not ok else None
        else:
            applicable, ok, witness_fam, detail, upd = _random_family_check(
                plan.property, plan.n, plan.seed, index
            )
        if not applicable:
            continue
        checked += 1
        if upd:
            _merge_summary(summary, upd)
        if not ok:
            violation_count += 1
            if len(violations) < plan.witness_cap:
                violations.append(_family_witness(index, witness_fam, detail or {}))
    return {
        "enumerated": hi - lo,
        "checked": checked,
        "violation_count": violation_count,
        "violations": violations,
        "summary": summary,
    }


def _kotlov_block(plan: SweepPlan, lo: int, hi: int) -> dict:
    n = plan.n
    half = 1 << (n - 1)
    size_cube = 1 << n
    violations: list[dict] = []
    violation_count = 0
    checked = 0
    for index in range(lo, hi):
        if plan.mode == "exhaustive":
            if index.bit_count() <= half:
                continue
            masks = tuple(iter_bits(index))
        else:
            rng = _instance_rng(plan.seed, index)
            size = half + 1 + int(rng.integers(0, size_cube - half))
            masks = tuple(int(v) for v in rng.choice(size_cube, size=size, replace=False))
        checked += 1
        if not _has_full_direction_component(n, masks):
            violation_count += 1
            if len(violations) < plan.witness_cap:
                fam = SetFamily.from_members(n, masks)
                violations.append(
                    _family_witness(index, fam, {"reason": "no component spans all directions"})
                )
    return {
        "enumerated": hi - lo,
        "checked": checked,
        "violation_count": violation_count,
        "violations": violations,
        "summary": {},
    }


# ---------------------------------------------------------------------------
# the runner


def _merge_summary(acc: dict, upd: dict) -> None:
    for key, value in upd.items():
        if key.startswith("max_"):
            acc[key] = value if key not in acc else max(acc[key], value)
        elif key.startswith("min_"):
            acc[key] = value if key not in acc else min(acc[key], value)
        else:
            acc[key] = acc.get(key, 0) + value


def _sweep_block(plan: SweepPlan, lo: int, hi: int) -> dict:
    if plan.property in _FUNCTION_PROPS:
        return _function_block(plan, lo, hi)
    if plan.property == "kotlov":
        return _kotlov_block(plan, lo, hi)
    return _family_block(plan, lo, hi)


def _split(total: int, parts: int) -> list[tuple[int, int]]:
    parts = max(1, parts)
    base, rem = divmod(total, parts)
    ranges = []
    start = 0
    for p in range(parts):
        stop = start + base + (1 if p < rem else 0)
        ranges.append((start, stop))
        start = stop
    return [r for r in ranges if r[0] < r[1]]


def run_sweep(plan: SweepPlan) -> VerificationReport:
    """Execute a sweep; the canonical report depends only on (plan, seed)."""
    plan.validate()
    started = time.perf_counter()
    total = (1 << (1 << plan.n)) if plan.mode == "exhaustive" else int(plan.samples)
    blocks = _split(total, plan.worker_count)

    if plan.worker_count <= 1 or len(blocks) <= 1:
        partials = [_sweep_block(plan, lo, hi) for lo, hi in blocks]
    else:
        with ProcessPoolExecutor(max_workers=plan.worker_count) as pool:
            futures = [pool.submit(_sweep_block, plan, lo, hi) for lo, hi in blocks]
            partials = [f.result() for f in futures]

    enumerated = sum(p["enumerated"] for p in partials)
    checked = sum(p["checked"] for p in partials)
    violation_count = sum(p["violation_count"] for p in partials)
    violations: list[dict] = []
    summary: dict = {}
    for p in partials:
        violations.extend(p["violations"])
        _merge_summary(summary, p["summary"])
    violations = violations[: plan.witness_cap]
    elapsed_ms = (time.perf_counter() - started) * 1000.0

    return VerificationReport(
        property=plan.property,
        n=plan.n,
        mode=plan.mode,
        samples=plan.samples,
        seed=plan.seed,
        worker_count=plan.worker_count,
        enumerated=enumerated,
        checked=checked,
        violation_count=violation_count,
        violations=tuple(violations),
        summary=_jsonable(summary),
        passed=violation_count == 0,
        elapsed_ms=elapsed_ms,
    )
