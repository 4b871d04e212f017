"""Command-line interface.

Every subcommand prints a deterministic report, as text or as versioned JSON
with ``--json``; identical invocations produce byte-identical output.  The
exit code is 0 iff the command's checks all pass.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable

from . import homcheck
from .cosets import (
    DEFAULT_COSET_CAP,
    cyclic_cover_table,
    kernel_coset_table,
    orbit_transitive,
    todd_coxeter,
)
from .errors import KnotcoverError
from .homcheck import GenAssignment, check_relators, phi_tables, search_surjections
from .presentations import kj_presentation, kjss_presentation, trefoil_presentation
from .subgroups import (
    TREFOIL_LONGITUDE,
    abelianize,
    boundary_quotient,
    kernel_homology,
    reidemeister_schreier,
    schreier_rank_bound,
)
from .words import Word, parse_presentation, print_presentation, word

SCHEMA = "knotcover-report/1"

# Claim identifiers used in run-all reports.  Each names the mathematical
# statement being machine-checked, so a failure localizes immediately.
CLAIM_TABLES = "staged-tables-satisfy-relators"
CLAIM_SMALL_STAGE_ORDERS = "small-stage-image-orders-as-computed"
CLAIM_FRAGMENT_MISMATCH = "historical-fragment-evaluation-mismatch"
CLAIM_TREFOIL_SURJECTION = "trefoil-onto-a5"
CLAIM_COVER_H1 = "cyclic-cover-homology"
CLAIM_BOUNDARY_QUOTIENT = "two-fold-boundary-quotient-order-three"
CLAIM_BOUNDARY_TRANSITIVE = "boundary-words-transitive-on-covers"
CLAIM_KNOT_H1 = "staged-knot-groups-abelianize-to-z"
CLAIM_KERNEL_GROWTH = "kernel-homology-rank-growth"

EXPECTED_IMAGE_ORDERS = {1: 2, 2: 12}  # every higher stage count gives 60
SMALL_STAGE_NOTE = (
    "image order below 60 at stage counts 1 and 2; the blanket onto-A5 "
    "statement only holds from stage count 3 on, so these are reported as "
    "a deviation, not a failure"
)


def _load_text(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def load_assignment_file(path: str) -> GenAssignment:
    """Parse an assignment file: one ``name = cycle-notation`` line per
    generator, '#' comments allowed."""
    mapping: dict[str, str] = {}
    for lineno, raw in enumerate(_load_text(path).splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        name, eq, cycles = line.partition("=")
        if not eq:
            raise KnotcoverError(f"{path}:{lineno}: expected 'name = cycles'")
        mapping[name.strip()] = cycles.strip()
    return GenAssignment.from_names(mapping, label=path)


def load_words_file(path: str) -> list[Word]:
    """Parse one word per non-empty line, syllables separated by spaces."""
    out = []
    for raw in _load_text(path).splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append(word(line))
    return out


def _emit(report: dict, text_lines: list[str], as_json: bool) -> None:
    if as_json:
        print(json.dumps(report, sort_keys=True, indent=2))
    else:
        for line in text_lines:
            print(line)


def _violation_lines(violations) -> list[str]:
    return [
        f"  violated {v.name}: {v.relator} -> {v.value}" for v in violations
    ]


def _check_tables_at(j: int) -> tuple:
    """Verify the staged tables against both the identified and the plain
    link presentations for one stage count."""
    assignment = phi_tables(j)
    identified = check_relators(kjss_presentation(j), assignment)
    plain = check_relators(kj_presentation(j), assignment)
    expected_order = EXPECTED_IMAGE_ORDERS.get(j, 60)
    entry = {
        "j": j,
        "violations_identified": [v.name for v in identified.violations],
        "violations_plain": [v.name for v in plain.violations],
        "image_order": identified.image_order,
        "expected_image_order": expected_order,
        "surjective_onto_a5": identified.surjective_onto_a5,
        "ok": (
            identified.ok and plain.ok
            and identified.image_order == expected_order
        ),
    }
    if j in EXPECTED_IMAGE_ORDERS:
        entry["note"] = SMALL_STAGE_NOTE
    return entry, identified, plain


def cmd_presentation(args) -> tuple[dict, list[str], int]:
    if args.kind == "trefoil":
        p = trefoil_presentation()
    elif args.kind == "kj":
        p = kj_presentation(args.j)
    else:
        p = kjss_presentation(args.j)
    text = print_presentation(p)
    report = {
        "schema": SCHEMA,
        "command": "presentation",
        "kind": args.kind,
        "j": args.j,
        "generators": len(p.generators),
        "relators": len(p.relators),
        "dsl": text,
    }
    return report, [text.rstrip("\n")], 0


def cmd_verify_tables(args) -> tuple[dict, list[str], int]:
    entry, identified, plain = _check_tables_at(args.j)
    report = {"schema": SCHEMA, "command": "verify-tables", **entry}
    lines = [
        f"stage count {args.j}: image order {entry['image_order']}"
        f" (expected {entry['expected_image_order']}),"
        f" onto A5: {entry['surjective_onto_a5']}"
    ]
    lines += _violation_lines(identified.violations)
    lines += _violation_lines(plain.violations)
    if "note" in entry:
        lines.append("note: " + entry["note"])
    lines.append("ok" if entry["ok"] else "FAIL")
    return report, lines, 0 if entry["ok"] else 1


def cmd_check_hom(args) -> tuple[dict, list[str], int]:
    p = parse_presentation(_load_text(args.pres))
    assignment = load_assignment_file(args.assign)
    result = check_relators(p, assignment)
    report = {
        "schema": SCHEMA,
        "command": "check-hom",
        "violations": [v.name for v in result.violations],
        "image_order": result.image_order,
        "surjective_onto_a5": result.surjective_onto_a5,
        "ok": result.ok,
    }
    lines = [f"image order {result.image_order}, onto A5: {result.surjective_onto_a5}"]
    lines += _violation_lines(result.violations)
    lines.append("ok" if result.ok else "FAIL")
    return report, lines, 0 if result.ok else 1


def cmd_search_hom(args) -> tuple[dict, list[str], int]:
    p = parse_presentation(_load_text(args.pres))
    found = search_surjections(
        p, limit=args.limit, pool_order=args.seed_order
    )
    listed = [
        {g.name: str(a.value(g)) for g in p.generators} for a in found
    ]
    report = {
        "schema": SCHEMA,
        "command": "search-hom",
        "count": len(found),
        "assignments": listed,
    }
    lines = [f"found {len(found)} surjections (limit {args.limit})"]
    for item in listed:
        lines.append("  " + ", ".join(f"{k} -> {v}" for k, v in sorted(item.items())))
    return report, lines, 0


def cmd_reproduce_sternfeld_error(args) -> tuple[dict, list[str], int]:
    result = homcheck.sternfeld_error_repro()
    report = {
        "schema": SCHEMA,
        "command": "reproduce-sternfeld-error",
        "got": str(result.got),
        "expected": str(result.expected),
        "mismatch": result.mismatch,
    }
    lines = [
        f"sewing word evaluates to {result.got}",
        f"table requires          {result.expected}",
        "mismatch reproduced" if result.mismatch else "FAIL: no mismatch",
    ]
    return report, lines, 0 if result.mismatch else 1


def cmd_cosets(args) -> tuple[dict, list[str], int]:
    p = parse_presentation(_load_text(args.pres))
    if args.mode == "kernel":
        if not args.assign:
            raise KnotcoverError("--mode kernel requires --assign FILE")
        table = kernel_coset_table(p, load_assignment_file(args.assign))
    elif args.mode == "cyclic":
        if not args.k:
            raise KnotcoverError("--mode cyclic requires --k K")
        table = cyclic_cover_table(p, args.k)
    else:
        gens = load_words_file(args.subgroup) if args.subgroup else []
        table = todd_coxeter(p, gens, cap=args.cap)
    report = {"schema": SCHEMA, "command": "cosets", **table.to_json_dict()}
    lines = [f"index {table.index}"]
    for g, row in zip(table.gens, table.action):
        lines.append(f"  {g.name}: " + " ".join(str(x) for x in row))
    return report, lines, 0


def cmd_abelianize(args) -> tuple[dict, list[str], int]:
    p = parse_presentation(_load_text(args.pres))
    inv = abelianize(p)
    report = {"schema": SCHEMA, "command": "abelianize", **inv.to_json_dict()}
    return report, [str(inv)], 0


def cmd_cover_quotient(args) -> tuple[dict, list[str], int]:
    quotient = boundary_quotient(k=args.fold)
    table = todd_coxeter(quotient, [], cap=args.cap)
    inv = abelianize(quotient)
    order_from_abelianization = None
    if inv.free_rank == 0:
        order_from_abelianization = 1
        for d in inv.torsion:
            order_from_abelianization *= d
    routes_agree = order_from_abelianization == table.index
    report = {
        "schema": SCHEMA,
        "command": "cover-quotient",
        "fold": args.fold,
        "order": table.index,
        "abelianization": inv.to_json_dict(),
        "order_from_abelianization": order_from_abelianization,
        "routes_agree": routes_agree,
    }
    lines = [
        f"{args.fold}-fold cover modulo boundary: order {table.index} "
        f"by coset enumeration, abelianization {inv}",
        "routes agree" if routes_agree else "routes DISAGREE",
    ]
    return report, lines, 0 if routes_agree else 1


def cmd_kernel_homology(args) -> tuple[dict, list[str], int]:
    inv = kernel_homology(args.j, force=args.force)
    bound = schreier_rank_bound(inv.min_generators, 60)
    report = {
        "schema": SCHEMA,
        "command": "kernel-homology",
        "j": args.j,
        "homology": inv.to_json_dict(),
        "min_generators": inv.min_generators,
        "rank_bound": str(bound.value),
        "rank_bound_ceiling": bound.ceiling,
    }
    lines = [
        f"H1 of stage-{args.j} kernel: {inv} "
        f"(needs {inv.min_generators} generators; "
        f"rank bound {bound.value} -> {bound.ceiling})"
    ]
    return report, lines, 0


def cmd_rank_bound(args) -> tuple[dict, list[str], int]:
    bound = schreier_rank_bound(args.m, args.i)
    report = {
        "schema": SCHEMA,
        "command": "rank-bound",
        "m": args.m,
        "i": args.i,
        "value": str(bound.value),
        "ceiling": bound.ceiling,
    }
    return report, [f"rank >= {bound.value} (so at least {bound.ceiling})"], 0


def run_all(
    jmax: int = 5,
    kernel_jmax: int = 4,
    seed_order: str = "closure",
    cap: int = DEFAULT_COSET_CAP,
) -> dict:
    """Run the whole verification battery and return the report dict."""
    if jmax < 1:
        raise KnotcoverError(f"jmax must be at least 1, got {jmax}")
    failed: list[str] = []
    results: dict = {}

    tables = []
    for j in range(1, jmax + 1):
        entry, _, _ = _check_tables_at(j)
        tables.append(entry)
    results["tables"] = tables
    if any(t["violations_identified"] or t["violations_plain"] for t in tables):
        failed.append(CLAIM_TABLES)
    if not all(t["image_order"] == t["expected_image_order"] for t in tables):
        failed.append(CLAIM_SMALL_STAGE_ORDERS)

    repro = homcheck.sternfeld_error_repro()
    results["sternfeld"] = {
        "got": str(repro.got),
        "expected": str(repro.expected),
        "mismatch": repro.mismatch,
    }
    if not repro.mismatch:
        failed.append(CLAIM_FRAGMENT_MISMATCH)

    trefoil = trefoil_presentation()
    pinned = GenAssignment.from_names(
        {"a": "(1,3,5,4,2)", "b": "(1,2,3,4,5)"}, label="trefoil-a5"
    )
    pinned_report = check_relators(trefoil, pinned)
    found = search_surjections(trefoil, limit=1000, pool_order=seed_order)
    rediscovered = any(
        all(a.value(g) == pinned.value(g) for g in trefoil.generators)
        for a in found
    )
    results["trefoil_surjection"] = {
        "assignment": {g.name: str(pinned.value(g)) for g in trefoil.generators},
        "violations": [v.name for v in pinned_report.violations],
        "image_order": pinned_report.image_order,
        "search_found_pinned": rediscovered,
        "search_total": len(found),
    }
    if not (pinned_report.ok and pinned_report.image_order == 60 and rediscovered):
        failed.append(CLAIM_TREFOIL_SURJECTION)

    cover_expect = {2: (1, [3]), 3: (1, [2, 2])}
    covers = []
    covers_ok = True
    for k, (free, torsion) in sorted(cover_expect.items()):
        sub = reidemeister_schreier(trefoil, cyclic_cover_table(trefoil, k))
        inv = abelianize(sub.presentation)
        ok = inv.free_rank == free and list(inv.torsion) == torsion
        covers.append(
            {"fold": k, **inv.to_json_dict(),
             "expected": {"free_rank": free, "torsion": torsion}, "ok": ok}
        )
        covers_ok = covers_ok and ok
    results["cover_homology"] = covers
    if not covers_ok:
        failed.append(CLAIM_COVER_H1)

    quotients = []
    quotients_ok = True
    for k, expected_order in ((1, 1), (2, 3)):
        quotient = boundary_quotient(k=k)
        order = todd_coxeter(quotient, [], cap=cap).index
        inv = abelianize(quotient)
        finite = inv.free_rank == 0
        ab_order = 1 if finite else None
        if finite:
            for d in inv.torsion:
                ab_order *= d
        ok = order == expected_order and ab_order == expected_order
        quotients.append(
            {"fold": k, "order": order, "abelianization": inv.to_json_dict(),
             "expected_order": expected_order, "ok": ok}
        )
        quotients_ok = quotients_ok and ok
    results["boundary_quotient"] = quotients
    if not quotients_ok:
        failed.append(CLAIM_BOUNDARY_QUOTIENT)

    meridian = word("a")
    connectivity = []
    for k in range(1, 9):
        table = cyclic_cover_table(trefoil, k)
        connectivity.append(
            {"fold": k,
             "transitive": orbit_transitive(table, [meridian, TREFOIL_LONGITUDE])}
        )
    results["boundary_connectivity"] = connectivity
    if not all(c["transitive"] for c in connectivity):
        failed.append(CLAIM_BOUNDARY_TRANSITIVE)

    knot_h1 = []
    for j in range(1, min(jmax, 6) + 1):
        inv = abelianize(kj_presentation(j))
        knot_h1.append({"j": j, **inv.to_json_dict()})
    results["knot_group_h1"] = knot_h1
    if not all(
        e["free_rank"] == 1 and e["torsion"] == [] for e in knot_h1
    ):
        failed.append(CLAIM_KNOT_H1)

    kernel = []
    counts = []
    for j in range(1, min(jmax, kernel_jmax) + 1):
        inv = kernel_homology(j)
        bound = schreier_rank_bound(inv.min_generators, 60)
        kernel.append(
            {"j": j, "homology": inv.to_json_dict(),
             "min_generators": inv.min_generators,
             "rank_bound": str(bound.value),
             "rank_bound_ceiling": bound.ceiling}
        )
        counts.append(inv.min_generators)
    results["kernel_homology"] = kernel
    growth = [counts[i + 1] - counts[i] for i in range(len(counts) - 1)]
    strict = all(d > 0 for d in growth[1:]) if len(counts) > 2 else True
    # growth from stage 2 on is the claim; stage 1 is the trefoil baseline
    results["kernel_growth_strict_from_stage_2"] = strict
    if counts and not strict:
        failed.append(CLAIM_KERNEL_GROWTH)

    return {
        "schema": SCHEMA,
        "command": "run-all",
        "inputs": {
            "jmax": jmax,
            "kernel_jmax": kernel_jmax,
            "seed_order": seed_order,
            "cap": cap,
        },
        "results": results,
        "failed": sorted(failed),
        "status": "pass" if not failed else "fail",
    }


def _run_all_lines(report: dict) -> list[str]:
    lines = []
    results = report["results"]
    for t in results["tables"]:
        status = "ok" if t["ok"] else "FAIL"
        lines.append(
            f"{status} tables j={t['j']}: "
            f"{len(t['violations_identified']) + len(t['violations_plain'])}"
            f" violations, image order {t['image_order']}"
        )
        for name in t["violations_identified"] + t["violations_plain"]:
            lines.append(f"  violated {name}")
    s = results["sternfeld"]
    lines.append(
        ("ok" if s["mismatch"] else "FAIL")
        + f" historical fragment: {s['got']} != required {s['expected']}"
    )
    ts = results["trefoil_surjection"]
    lines.append(
        f"trefoil onto A5: image order {ts['image_order']}, "
        f"search found pinned assignment: {ts['search_found_pinned']} "
        f"({ts['search_total']} surjections total)"
    )
    for c in results["cover_homology"]:
        status = "ok" if c["ok"] else "FAIL"
        lines.append(
            f"{status} {c['fold']}-fold cover H1: free rank {c['free_rank']}, "
            f"torsion {c['torsion']}"
        )
    for q in results["boundary_quotient"]:
        status = "ok" if q["ok"] else "FAIL"
        lines.append(
            f"{status} {q['fold']}-fold cover mod boundary: order {q['order']}"
        )
    conn = results["boundary_connectivity"]
    lines.append(
        ("ok" if all(c["transitive"] for c in conn) else "FAIL")
        + f" boundary words transitive on covers 1..{len(conn)}"
    )
    lines.append(
        "ok knot group H1 = Z at every computed stage count"
        if CLAIM_KNOT_H1 not in report["failed"]
        else "FAIL knot group H1"
    )
    for k in results["kernel_homology"]:
        lines.append(
            f"kernel homology j={k['j']}: {k['min_generators']} generators "
            f"needed, rank bound {k['rank_bound']} -> {k['rank_bound_ceiling']}"
        )
    lines.append(f"status: {report['status']}")
    return lines


def cmd_run_all(args) -> tuple[dict, list[str], int]:
    report = run_all(
        jmax=args.jmax,
        kernel_jmax=args.kernel_jmax,
        seed_order=args.seed_order,
        cap=args.cap,
    )
    return report, _run_all_lines(report), 0 if report["status"] == "pass" else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="knotcover",
        description="verification toolkit for staged link groups and covers",
    )
    parser.add_argument(
        "--seed-order",
        choices=["closure", "lex"],
        default="closure",
        help="element order for search enumeration (default: closure)",
    )
    parser.add_argument(
        "--cap",
        type=int,
        default=DEFAULT_COSET_CAP,
        help=f"coset enumeration cap (default {DEFAULT_COSET_CAP})",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add(name: str, fn: Callable, **kwargs) -> argparse.ArgumentParser:
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(fn=fn)
        p.add_argument("--json", action="store_true", help="emit JSON")
        return p

    p = add("presentation", cmd_presentation, help="print a built-in presentation")
    p.add_argument("--kind", choices=["trefoil", "kj", "kjss"], required=True)
    p.add_argument("--j", type=int, default=1, help="stage count")

    p = add("verify-tables", cmd_verify_tables,
            help="check the staged tables at one stage count")
    p.add_argument("--j", type=int, required=True)

    p = add("check-hom", cmd_check_hom,
            help="check an assignment file against a presentation file")
    p.add_argument("--pres", required=True)
    p.add_argument("--assign", required=True)

    p = add("search-hom", cmd_search_hom,
            help="search surjections onto A5 (at most 3 generators)")
    p.add_argument("--pres", required=True)
    p.add_argument("--limit", type=int, default=100)

    add("reproduce-sternfeld-error", cmd_reproduce_sternfeld_error,
        help="replay the historical sewing-word evaluation")

    p = add("cosets", cmd_cosets, help="build a coset table")
    p.add_argument("--pres", required=True)
    p.add_argument("--mode", choices=["kernel", "cyclic", "subgroup"],
                   required=True)
    p.add_argument("--assign")
    p.add_argument("--k", type=int)
    p.add_argument("--subgroup")

    p = add("abelianize", cmd_abelianize,
            help="abelian invariants of a presentation file")
    p.add_argument("--pres", required=True)

    p = add("cover-quotient", cmd_cover_quotient,
            help="k-fold cyclic cover of the trefoil modulo its boundary")
    p.add_argument("--fold", type=int, required=True)

    p = add("kernel-homology", cmd_kernel_homology,
            help="H1 of the staged-assignment kernel")
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--force", action="store_true",
                   help="compute past the default stage limit")

    p = add("rank-bound", cmd_rank_bound, help="Schreier rank bound (m-1)/i + 1")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--i", type=int, required=True)

    p = add("run-all", cmd_run_all, help="run the full verification battery")
    p.add_argument("--jmax", type=int, default=5)
    p.add_argument("--kernel-jmax", type=int, default=4, dest="kernel_jmax")

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        report, lines, code = args.fn(args)
    except KnotcoverError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    _emit(report, lines, args.json)
    return code


if __name__ == "__main__":
    sys.exit(main())
