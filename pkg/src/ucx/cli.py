"""Command-line front end.

Subcommands: ``analyze`` (full report for a family file), ``verify``
(property sweeps with exit code 0 = pass, 1 = violation, 2 = usage error),
``gen`` and ``closure`` (family generation), and ``scan`` (CSV margin /
deficiency scans over random instances).  All rationals in machine-readable
output are reduced ``p/q`` strings; no floating point appears anywhere.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction
from pathlib import Path

import numpy as np

from . import familyfile
from .core import DimensionError, SetFamily, family_to_function
from .extremal import nearest_dictator
from .families import (
    is_simply_rooted,
    is_union_closed,
    roots,
    stats,
    upper_shadow,
)
from .influence import profile
from .spectral import level_weights, transform
from .verify import (
    PROPERTY_NAMES,
    SweepPlan,
    conjecture2_margin,
    largest_threshold_k,
    random_union_closed,
    run_sweep,
    union_closure,
    _closure_masks,
    _instance_rng,
    _random_generator_masks,
)

USAGE_ERROR = 2


def _frac(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def analysis_report(family: SetFamily) -> dict:
    """The full exact report for one family, with a fixed key order."""
    n = family.n
    func = family_to_function(family)
    spec = transform(func)
    prof = profile(func)
    st = stats(family)
    union_closed = is_union_closed(family)
    simply_rooted = is_simply_rooted(family)
    report_roots = roots(family)
    dict_i, dict_sign, dict_dist = nearest_dictator(func)

    report = {
        "n": n,
        "size": family.size,
        "is_union_closed": union_closed,
        "is_simply_rooted": simply_rooted,
        "frequencies": list(st.frequencies),
        "abundant": list(st.abundant),
        "rare": list(st.rare),
        "delta": _frac(st.delta),
        "mean_coefficient": _frac(spec.coefficient(0)),
        "level_weights": [_frac(w) for w in level_weights(spec)],
        "influence": {
            "total": _frac(prof.influence()),
            "positive": _frac(prof.positive_influence()),
            "negative": _frac(prof.negative_influence()),
            "per_coordinate": [_frac(prof.influence(i)) for i in range(1, n + 1)],
        },
        "unique_root_count": report_roots.unique_root_count,
    }
    if union_closed:
        full = (1 << (1 << n)) - 1
        report["upper_shadow_deficiency"] = (
            upper_shadow(family).bits & (full ^ family.bits)
        ).bit_count()
    report["nearest_dictator"] = {"i": dict_i, "sign": dict_sign, "dist": _frac(dict_dist)}
    if simply_rooted and family.size > 0:
        k, margin = conjecture2_margin(family)
        if k is None:
            report["conjecture2"] = {"k": None, "bound": None, "margin": None}
        else:
            report["conjecture2"] = {
                "k": k,
                "bound": _frac(Fraction(k + 1, 1 << k)),
                "margin": _frac(margin),
            }
    return report


def _print_report(report: dict) -> None:
    def emit(key, value, indent=0):
        pad = " " * indent
        if isinstance(value, dict):
            print(f"{pad}{key}:")
            for k, v in value.items():
                emit(k, v, indent + 2)
        elif isinstance(value, list):
            print(f"{pad}{key}: {' '.join(str(v) for v in value)}")
        else:
            print(f"{pad}{key}: {value}")

    for key, value in report.items():
        emit(key, value)


def cmd_analyze(args) -> int:
    try:
        family = familyfile.load(args.path)
    except (familyfile.FamilyFileError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    report = analysis_report(family)
    _print_report(report)
    if args.json:
        Path(args.json).write_text(json.dumps(report, indent=2) + "\n", encoding="utf-8")
    return 0


def cmd_verify(args) -> int:
    mode = "exhaustive" if args.exhaustive else "random"
    plan = SweepPlan(
        property=args.property,
        n=args.n,
        mode=mode,
        samples=args.samples if mode == "random" else None,
        seed=args.seed,
        worker_count=args.workers,
        witness_cap=args.witness_cap,
    )
    try:
        plan.validate()
    except (ValueError, DimensionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    report = run_sweep(plan)
    print(
        f"checked={report.checked} violations={report.violation_count} "
        f"elapsed_ms={report.elapsed_ms:.0f}"
    )
    if report.violations and args.witness_dir:
        directory = Path(args.witness_dir)
        directory.mkdir(parents=True, exist_ok=True)
        for witness in report.violations:
            stem = f"witness_{report.property}_{witness['index']}"
            (directory / f"{stem}.json").write_text(
                json.dumps(witness, sort_keys=True, indent=2) + "\n", encoding="utf-8"
            )
            if witness.get("kind") == "family":
                (directory / f"{stem}.family").write_text(witness["family"], encoding="utf-8")
    return 0 if report.passed else 1


def cmd_gen(args) -> int:
    try:
        family = random_union_closed(args.n, args.generators, args.seed)
    except (ValueError, DimensionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    text = familyfile.format_family(family)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


def cmd_closure(args) -> int:
    try:
        family = familyfile.load(args.path)
    except (familyfile.FamilyFileError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    closed = union_closure(family)
    text = familyfile.format_family(closed)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


def _scan_rows(target: str, n: int, samples: int, seed: int):
    """Deterministic per-instance rows; mirrors the random sweep instances."""
    half = 1 << (n - 1)
    size_cube = 1 << n
    for index in range(samples):
        rng = _instance_rng(seed, index)
        closure = _closure_masks(_random_generator_masks(rng, n))
        closure.add(0)
        in_g = np.zeros(size_cube, dtype=bool)
        in_g[list(closure)] = True
        g_size = len(closure)
        if target == "theorem2-deficiency":
            shadow = np.zeros(size_cube, dtype=bool)
            for i in range(n):
                src = in_g.reshape(-1, 2, 1 << i)
                dst = shadow.reshape(-1, 2, 1 << i)
                dst[:, 1, :] |= src[:, 0, :]
            deficiency = int(np.count_nonzero(shadow & ~in_g))
            mean = Fraction(size_cube - 2 * g_size, size_cube)
            yield {
                "instance_index": index,
                "size": g_size,
                "mean_coefficient": _frac(mean),
                "quantity": deficiency,
                "bound": half,
                "margin": half - deficiency,
            }, half - deficiency >= 0, closure
        else:  # conjecture2
            f_size = size_cube - g_size
            mean = Fraction(size_cube - 2 * f_size, size_cube)
            if f_size == 0:
                yield {
                    "instance_index": index,
                    "size": 0,
                    "mean_coefficient": _frac(mean),
                    "quantity": "",
                    "bound": "",
                    "margin": "",
                }, True, None
                continue
            from .influence import pair_counts

            enter, _ = pair_counts(~in_g, n)
            total_enter = sum(enter)
            positive = Fraction(total_enter, half)
            k = largest_threshold_k(n, f_size)
            if k is None:
                yield {
                    "instance_index": index,
                    "size": f_size,
                    "mean_coefficient": _frac(mean),
                    "quantity": _frac(positive),
                    "bound": "",
                    "margin": "",
                }, True, None
                continue
            bound = Fraction(k + 1, 1 << k)
            margin = bound - positive
            members_f = [m for m in range(size_cube) if not in_g[m]]
            yield {
                "instance_index": index,
                "size": f_size,
                "mean_coefficient": _frac(mean),
                "quantity": _frac(positive),
                "bound": _frac(bound),
                "margin": _frac(margin),
            }, margin >= 0, members_f


def cmd_scan(args) -> int:
    out = open(args.csv, "w", newline="", encoding="utf-8") if args.csv else sys.stdout
    writer = csv.DictWriter(
        out,
        fieldnames=["instance_index", "size", "mean_coefficient", "quantity", "bound", "margin"],
    )
    writer.writeheader()
    failed = None
    try:
        for row, ok, witness in _scan_rows(args.target, args.n, args.samples, args.seed):
            writer.writerow(row)
            if not ok and failed is None:
                failed = (row, witness)
    finally:
        if args.csv:
            out.close()
    if failed:
        row, witness = failed
        payload = {"row": row}
        if witness is not None:
            payload["family"] = familyfile.format_family(
                SetFamily.from_members(args.n, witness)
            )
        print(f"violation: {json.dumps(payload, sort_keys=True)}", file=sys.stderr)
        return 1
    return 0


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _nonnegative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ucx",
        description="Exact toolkit for union-closed families and Boolean-cube analysis.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_analyze = sub.add_parser("analyze", help="full exact report for a family file")
    p_analyze.add_argument("path")
    p_analyze.add_argument("--json", metavar="OUT", help="also write the report as JSON")
    p_analyze.set_defaults(func=cmd_analyze)

    p_verify = sub.add_parser("verify", help="run a property sweep")
    p_verify.add_argument("property", choices=PROPERTY_NAMES)
    p_verify.add_argument("--n", type=_positive_int, required=True)
    mode = p_verify.add_mutually_exclusive_group(required=True)
    mode.add_argument("--exhaustive", action="store_true")
    mode.add_argument("--random", action="store_true")
    p_verify.add_argument("--samples", type=_positive_int, default=1000)
    p_verify.add_argument("--seed", type=_nonnegative_int, default=0)
    p_verify.add_argument("--workers", type=_positive_int, default=1)
    p_verify.add_argument("--witness-dir", metavar="D")
    p_verify.add_argument("--witness-cap", type=_nonnegative_int, default=10)
    p_verify.set_defaults(func=cmd_verify)

    p_gen = sub.add_parser("gen", help="generate a random union-closed family")
    p_gen.add_argument("--n", type=_positive_int, required=True)
    p_gen.add_argument("--generators", type=_nonnegative_int, required=True)
    p_gen.add_argument("--seed", type=_nonnegative_int, default=0)
    p_gen.add_argument("-o", "--output", metavar="PATH")
    p_gen.set_defaults(func=cmd_gen)

    p_closure = sub.add_parser("closure", help="union closure of a family file")
    p_closure.add_argument("path")
    p_closure.add_argument("-o", "--output", metavar="PATH")
    p_closure.set_defaults(func=cmd_closure)

    p_scan = sub.add_parser("scan", help="CSV scan over random instances")
    p_scan.add_argument("target", choices=["conjecture2", "theorem2-deficiency"])
    p_scan.add_argument("--n", type=_positive_int, required=True)
    p_scan.add_argument("--samples", type=_positive_int, required=True)
    p_scan.add_argument("--seed", type=_nonnegative_int, default=0)
    p_scan.add_argument("--csv", metavar="OUT")
    p_scan.set_defaults(func=cmd_scan)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on usage errors; normalize to our contract
        return int(exc.code) if exc.code else 0
    try:
        return args.func(args)
    except (ValueError, DimensionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
