"""Command-line interface.

Subcommands: gen3, verify, reorder, orderings, develop, embed, genus,
search, generate.  Array output uses the plain-text array file format;
reports are canonical JSON (sorted keys, 2-space indent) so they are
deterministic and diffable.  Exit codes: 0 when every requested check
passed, 1 when a verification or search failed, 2 for usage or input
errors.  Every success path re-runs the relevant certifier; nothing is
reported as passing without having been checked in-process.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import __version__
from .arrayfile import parse_array, serialize_array
from .core import HeffterArray, reorder_columns, verify_heffter
from .embedding import (
    build_face_set,
    certify,
    develop_cycles,
    derive_rotations,
    exact_pair_coverage,
    genus_closed_form,
    is_translation_closed,
)
from .errors import BudgetExceededError, HeffterError
from .h3 import simple_h3
from .modmath import partial_sums
from .orderings import compatible_orderings
from .search import SearchConfig, brute_force_oracle, find_simple_column_permutation, generate_heffter


def _print_json(doc: dict) -> None:
    print(json.dumps(doc, indent=2, sort_keys=True))


def _array_meta(H: HeffterArray) -> dict:
    return {"m": H.m, "n": H.n, "v": H.modulus}


def _load_array(path: str) -> HeffterArray:
    with open(path, "r", encoding="ascii") as fh:
        return parse_array(fh.read())


def _verify_doc(H: HeffterArray) -> dict:
    v = H.modulus
    report = verify_heffter(H)
    return {
        "array": _array_meta(H),
        "row_sum_ok": list(report.row_sum_ok),
        "col_sum_ok": list(report.col_sum_ok),
        "half_set_ok": report.half_set_ok,
        "row_simple": list(report.row_simple),
        "col_simple": list(report.col_simple),
        "is_heffter": report.is_heffter,
        "is_simple": report.is_simple,
        "row_partial_sums": [partial_sums(H.row(i), v) for i in range(H.m)],
        "col_partial_sums": [partial_sums(H.column(j), v) for j in range(H.n)],
    }


def _cmd_gen3(args: argparse.Namespace) -> int:
    H = simple_h3(args.n)
    sys.stdout.write(serialize_array(H))
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    H = _load_array(args.file)
    doc = _verify_doc(H)
    _print_json(doc)
    return 0 if doc["is_heffter"] and doc["is_simple"] else 1


def _cmd_reorder(args: argparse.Namespace) -> int:
    H = _load_array(args.file)
    perm = tuple(int(t) for t in args.perm.replace(",", " ").split())
    sys.stdout.write(serialize_array(reorder_columns(H, perm)))
    return 0


def _cmd_orderings(args: argparse.Namespace) -> int:
    H = _load_array(args.file)
    pair = compatible_orderings(H)
    cycle = pair.composition_cycle
    doc = {
        "array": _array_meta(H),
        "row_parts": [[[i + 1, j + 1] for i, j in part] for part in pair.omega_r.parts],
        "col_parts": [[[i + 1, j + 1] for i, j in part] for part in pair.omega_c.parts],
        "composition_cycle": [[i + 1, j + 1] for i, j in cycle],
        "orbit_length": len(cycle),
        "single_cycle": len(cycle) == H.m * H.n,
    }
    _print_json(doc)
    return 0 if doc["single_cycle"] else 1


def _cmd_develop(args: argparse.Namespace) -> int:
    H = _load_array(args.file)
    v = H.modulus
    if args.rows:
        parts = [H.row(i) for i in range(H.m)]
        source = "rows"
    else:
        parts = [H.column(j) for j in range(H.n)]
        source = "cols"
    system = develop_cycles(parts, v)
    coverage = exact_pair_coverage(system)
    closed = is_translation_closed(system)
    doc = {
        "source": source,
        "v": system.v,
        "k": system.k,
        "cycle_count": len(system.cycles),
        "base_cycles": [list(c) for c in system.cycles[: len(parts)]],
        "developed": f"translates mod {v}",
        "pair_coverage_ok": coverage,
        "translation_closed": closed,
    }
    if args.expand:
        doc["cycles"] = [list(c) for c in system.cycles]
    _print_json(doc)
    return 0 if coverage and closed else 1


def _cmd_embed(args: argparse.Namespace) -> int:
    H = _load_array(args.file)
    pair = compatible_orderings(H)
    face_set = build_face_set(H, pair)
    derive_rotations(face_set)
    cert = certify(face_set)
    doc = {
        "array": _array_meta(H),
        "orientation": "columns-reversed" if face_set.column_reversed else "rows-reversed",
        "base_row_faces": [list(w) for w in face_set.row_bases],
        "base_col_faces": [list(w) for w in face_set.col_bases],
        "developed": f"translates mod {face_set.v}",
        "face_counts": {
            "row_color": cert.num_row_faces,
            "col_color": cert.num_col_faces,
            "total": cert.faces,
        },
        "V": cert.vertices,
        "E": cert.edges,
        "F": cert.faces,
        "euler_characteristic": cert.euler_characteristic,
        "genus": cert.genus,
        "checks": {
            "arc_coverage_ok": cert.arc_coverage_ok,
            "edge_bicolor_ok": cert.edge_bicolor_ok,
            "rotations_ok": cert.rotations_ok,
            "genus_matches_formula": cert.genus_matches_formula,
        },
    }
    if args.expand:
        doc["faces"] = {
            "row_color": [list(w) for w in face_set.row_faces()],
            "col_color": [list(w) for w in face_set.col_faces()],
        }
    _print_json(doc)
    return 0 if cert.all_ok else 1


def _cmd_genus(args: argparse.Namespace) -> int:
    print(genus_closed_form(args.n))
    return 0


def _cmd_search(args: argparse.Namespace) -> int:
    H = _load_array(args.file)
    cfg = SearchConfig(strategy=args.strategy, node_budget=args.budget)
    doc: dict = {"array": _array_meta(H), "strategy": args.strategy}
    try:
        outcome = find_simple_column_permutation(H, cfg)
    except BudgetExceededError:
        doc.update({"status": "budget_exceeded", "node_budget": args.budget})
        _print_json(doc)
        return 1
    if outcome.permutation is None:
        doc.update({"status": "none_exists", "nodes": outcome.nodes})
        _print_json(doc)
        return 1
    report = outcome.report
    doc.update(
        {
            "status": "found",
            "permutation": list(outcome.permutation),
            "nodes": outcome.nodes,
            "reordered_is_heffter": report.is_heffter if report else False,
            "reordered_is_simple": report.is_simple if report else False,
        }
    )
    if args.all:
        doc["all_permutations"] = [list(p) for p in brute_force_oracle(H)]
    _print_json(doc)
    return 0


def _cmd_generate(args: argparse.Namespace) -> int:
    cfg = SearchConfig(node_budget=args.budget, seed=args.seed)
    try:
        H = generate_heffter(args.m, args.n, cfg)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if H is None:
        print(f"error: no {args.m} x {args.n} Heffter array exists", file=sys.stderr)
        return 1
    sys.stdout.write(serialize_array(H))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="heffter",
        description="Construct, verify, and biembed Heffter arrays.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen3", help="emit a simple 3 x n Heffter array")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_gen3)

    p = sub.add_parser("verify", help="verify the Heffter axioms and simplicity of an array file")
    p.add_argument("--file", required=True)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("reorder", help="apply a column permutation to an array file")
    p.add_argument("--file", required=True)
    p.add_argument("--perm", required=True, help='e.g. "1,2,6,8,5,3,4,7"')
    p.set_defaults(func=_cmd_reorder)

    p = sub.add_parser("orderings", help="build compatible row/column orderings")
    p.add_argument("--file", required=True)
    p.set_defaults(func=_cmd_orderings)

    p = sub.add_parser("develop", help="develop the row or column cycle system mod v")
    p.add_argument("--file", required=True)
    direction = p.add_mutually_exclusive_group(required=True)
    direction.add_argument("--rows", action="store_true")
    direction.add_argument("--cols", action="store_true")
    p.add_argument("--expand", action="store_true", help="list every developed cycle")
    p.set_defaults(func=_cmd_develop)

    p = sub.add_parser("embed", help="assemble and certify the orientable biembedding")
    p.add_argument("--file", required=True)
    p.add_argument("--expand", action="store_true", help="list every face explicitly")
    p.set_defaults(func=_cmd_embed)

    p = sub.add_parser("genus", help="closed-form genus of the K_{6n+1} biembedding")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_genus)

    p = sub.add_parser("search", help="find a column permutation making every row simple")
    p.add_argument("--file", required=True)
    p.add_argument("--strategy", choices=("backtracking", "exhaustive"), default="backtracking")
    p.add_argument("--budget", type=int, default=5_000_000)
    p.add_argument("--all", action="store_true", help="also list every valid permutation (n <= 9)")
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("generate", help="generate an m x n Heffter array by backtracking")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--budget", type=int, default=5_000_000)
    p.set_defaults(func=_cmd_generate)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except HeffterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1 if _is_check_failure(exc) else 2


def _is_check_failure(exc: HeffterError) -> bool:
    """Distinguish failed mathematical checks (exit 1) from bad input (exit 2)."""
    return not isinstance(exc, ValueError)


if __name__ == "__main__":
    sys.exit(main())
