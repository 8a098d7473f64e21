"""Command-line front door: spec files in, CSV/JSON reports out.

Every subcommand prints a JSON report to stdout; `growth` and `scan`
additionally write their CSV artifact when --out is given.  Exit codes:
0 success, 1 verification failure, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from .bounds import (
    amalgam_bound,
    bcg_bound,
    free_product_bound,
    hnn_bound,
    make_bcg_table,
    osin_bound,
    scan_hyperbolic,
    solvable_bound,
    surface_bound,
    write_scan_csv,
)
from .cayley import growth_table, search_generating_sets, write_table_csv
from .errors import GroupGrowthError
from .groups import GroupSpec, MatrixZ2, make_group
from .manifold import ManifoldSpec, classify_growth, group_of_manifold, universal_constant
from .rates import estimate_rates, root_bounds

VERIFY_MARGIN = 1e-9


def _f12(x: float) -> float:
    return float("%.12g" % x)


def _parse_matrix(text: str) -> MatrixZ2:
    parts = text.split(",")
    if len(parts) != 4:
        raise ValueError(f"--matrix wants four comma-separated integers, got {text!r}")
    a, b, c, d = (int(p) for p in parts)
    return MatrixZ2(a, b, c, d)


def _parse_index(token: str):
    token = token.strip()
    if token in ("inf", "infinity", "oo"):
        return math.inf
    return int(token)


def _parse_window(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"--window wants kmin,kmax, got {text!r}")
    return int(parts[0]), int(parts[1])


def _load_json(path):
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _load_group_spec(path) -> GroupSpec:
    return GroupSpec.from_dict(_load_json(path))


def _load_bcg(path) -> dict:
    data = _load_json(path)
    if not isinstance(data, list):
        raise ValueError("BCG table file must be a JSON list of [n, a, c] triples")
    entries = {}
    for item in data:
        n, a, c = item
        entries[(n, a)] = c
    return make_bcg_table(entries)


def _emit(report: dict, out_path=None) -> None:
    text = json.dumps(report, indent=2) + "\n"
    if out_path:
        with open(out_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    sys.stdout.write(text)


def _gens_dict(gens) -> dict:
    return {
        "names": list(gens.names),
        "count": len(gens.elements),
        "symmetrized": gens.symmetrized,
    }


def _cmd_growth(args) -> int:
    spec = _load_group_spec(args.spec)
    handle = make_group(spec)
    gens = handle.default_generators()
    table = growth_table(
        handle, gens, args.kmax, max_elements=args.max_elements, max_seconds=args.max_seconds
    )
    window = _parse_window(args.window) if args.window else None
    rates = estimate_rates(table, window=window)
    if args.out:
        write_table_csv(table, args.out)
    report = {
        "spec": spec.to_dict(),
        "generators": _gens_dict(gens),
        "kmax": table.kmax,
        "complete": table.complete,
        "slow_path": table.slow_path,
        "gamma": list(table.gamma),
        "sigma": list(table.sigma),
        "rates": rates.to_dict(),
        "csv": args.out,
    }
    _emit(report)
    return 0


_THEOREM_BUILDERS = ("osin", "surface", "free_product", "amalgam", "hnn", "bcg", "solvable")


def _cmd_bound(args) -> int:
    name = args.theorem
    if name == "osin":
        if not args.matrix:
            raise ValueError("--theorem osin needs --matrix a,b,c,d")
        report = osin_bound(_parse_matrix(args.matrix))
    elif name == "surface":
        genus = args.genus
        if genus is None and args.spec:
            spec = _load_group_spec(args.spec)
            if spec.family == "surface":
                genus = spec.genus
            elif spec.family == "direct_product_with_Z" and spec.inner.family == "surface":
                genus = spec.inner.genus
        if genus is None:
            raise ValueError("--theorem surface needs --genus (or a surface group --spec)")
        report = surface_bound(genus, weak=args.weak)
    elif name == "free_product":
        if not args.spec:
            raise ValueError("--theorem free_product needs --spec of a free_product group")
        spec = _load_group_spec(args.spec)
        if spec.family != "free_product":
            raise ValueError(f"spec family is {spec.family}, expected free_product")
        report = free_product_bound(spec.factors)
    elif name in ("amalgam", "hnn"):
        if not args.indices:
            raise ValueError(f"--theorem {name} needs --indices i1,i2 (use 'inf' for infinite)")
        parts = args.indices.split(",")
        if len(parts) != 2:
            raise ValueError(f"--indices wants two values, got {args.indices!r}")
        i1, i2 = _parse_index(parts[0]), _parse_index(parts[1])
        report = amalgam_bound(i1, i2) if name == "amalgam" else hnn_bound(i1, i2)
    elif name == "bcg":
        table = _load_bcg(args.bcg) if args.bcg else {}
        report = bcg_bound(args.dim, args.pinching, table)
    elif name == "solvable":
        report = solvable_bound()
    else:
        raise ValueError(f"unknown theorem {name!r}; pick one of {', '.join(_THEOREM_BUILDERS)}")
    _emit(report.to_dict(), args.out)
    return 0


def _applicable_bound(spec: GroupSpec):
    if spec.family == "free_product":
        return free_product_bound(spec.factors)
    if spec.family == "torus_bundle":
        return osin_bound(spec.matrix)
    if spec.family == "surface":
        return surface_bound(spec.genus)
    if spec.family == "direct_product_with_Z" and spec.inner.family == "surface":
        return surface_bound(spec.inner.genus)
    return None


def _cmd_verify(args) -> int:
    spec = _load_group_spec(args.spec)
    handle = make_group(spec)
    gens = handle.default_generators()
    table = growth_table(
        handle, gens, args.kmax, max_elements=args.max_elements, max_seconds=args.max_seconds
    )
    roots = root_bounds(table)
    min_root = min(roots)
    bound = _applicable_bound(spec)
    report = {
        "spec": spec.to_dict(),
        "kmax": table.kmax,
        "complete": table.complete,
        "min_root_bound": _f12(min_root),
        "margin": VERIFY_MARGIN,
    }
    if bound is None or not bound.hypotheses_ok:
        report["applicable"] = False
        report["bound"] = None if bound is None else bound.to_dict()
        report["pass"] = True
        report["notes"] = "no applicable lower bound for this family; nothing to check"
        _emit(report, args.out)
        return 0
    ok = min_root >= bound.value - VERIFY_MARGIN
    report["applicable"] = True
    report["bound"] = bound.to_dict()
    report["pass"] = bool(ok)
    report["notes"] = (
        f"min_k gamma(k)^(1/k) = {min_root:.12g} vs bound {bound.value:.12g}"
    )
    _emit(report, args.out)
    return 0 if ok else 1


def _cmd_scan(args) -> int:
    report = scan_hyperbolic(args.entry_bound)
    if args.out:
        write_scan_csv(report, args.out)
    classes = []
    for summary in report.classes:
        classes.append(
            {
                "det": summary.det,
                "count": summary.count,
                "min_lambda_exact": None
                if summary.min_lambda is None
                else summary.min_lambda.exact_str(),
                "min_lambda": None
                if summary.min_lambda is None
                else _f12(float(summary.min_lambda)),
                "min_osin_bound": None if summary.min_osin is None else _f12(summary.min_osin),
                "lambda_le_2": summary.lambda_le_2,
                "witness": None if summary.witness is None else list(summary.witness),
                "note": summary.note,
            }
        )
    _emit(
        {
            "entry_bound": report.entry_bound,
            "hyperbolic_count": len(report.rows),
            "classes": classes,
            "csv": args.out,
        }
    )
    return 0


def _cmd_search(args) -> int:
    spec = _load_group_spec(args.spec)
    handle = make_group(spec)
    report = search_generating_sets(
        handle,
        candidate_radius=args.radius,
        set_size=args.set_size,
        k=args.k,
        max_candidates=args.max_candidates,
        max_seconds=args.max_seconds,
    )
    def _set_dict(gens, u_k):
        return {
            "names": list(gens.names),
            "elements": [handle.format_element(el) for el in gens.elements],
            "u_k": _f12(u_k),
        }

    out = {
        "spec": spec.to_dict(),
        "k": args.k,
        "candidate_radius": args.radius,
        "set_size": args.set_size,
        "candidates_tested": report.candidates_tested,
        "complete": report.complete,
        "best": None
        if report.best_set is None
        else _set_dict(report.best_set, report.best_root_bound),
        "per_candidate": [_set_dict(g, u) for g, u in report.per_candidate],
        "note": "minimum over tested sets only; an upper bound for the group's rate",
    }
    _emit(out, args.out)
    return 0


def _cmd_classify(args) -> int:
    manifold = ManifoldSpec.from_dict(_load_json(args.spec))
    growth_class = classify_growth(manifold)
    try:
        group = group_of_manifold(manifold).to_dict()
    except GroupGrowthError:
        group = None
    _emit(
        {
            "manifold": manifold.to_dict(),
            "group": group,
            "growth": growth_class.to_dict(),
        },
        args.out,
    )
    return 0


def _cmd_universal(args) -> int:
    table = _load_bcg(args.bcg) if args.bcg else None
    report = universal_constant(include_bcg=not args.no_bcg, bcg_table=table)
    _emit(report.to_dict(), args.out)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="groupgrowth",
        description="Exact Cayley-ball growth tables, rate estimates, and lower bounds",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, spec=False, budget=False, out=True):
        if spec:
            p.add_argument("--spec", required=True, help="path to a JSON spec file")
        if budget:
            p.add_argument("--max-elements", type=int, default=None)
            p.add_argument("--max-seconds", type=float, default=None)
        if out:
            p.add_argument("--out", default=None, help="write the report/artifact here")

    p = sub.add_parser("growth", help="enumerate a growth table and rate estimates")
    add_common(p, spec=True, budget=True)
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--window", default=None, help="kmin,kmax window for fits")
    p.set_defaults(func=_cmd_growth)

    p = sub.add_parser("bound", help="evaluate a named lower bound")
    p.add_argument("--theorem", required=True, help=", ".join(_THEOREM_BUILDERS))
    p.add_argument("--matrix", default=None, help="a,b,c,d entries")
    p.add_argument("--genus", type=int, default=None)
    p.add_argument("--weak", action="store_true", help="use the 2g-1 surface variant")
    p.add_argument("--indices", default=None, help="i1,i2 subgroup indices ('inf' allowed)")
    p.add_argument("--spec", default=None)
    p.add_argument("--bcg", default=None, help="path to a JSON list of [n, a, c] triples")
    p.add_argument("--dim", type=int, default=3)
    p.add_argument("--pinching", type=float, default=1)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_bound)

    p = sub.add_parser("verify", help="check min root bound against the applicable theorem")
    add_common(p, spec=True, budget=True)
    p.add_argument("--kmax", type=int, required=True)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("scan", help="scan integer matrices for hyperbolic spectra")
    p.add_argument("--entry-bound", type=int, required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("search", help="probe generating sets for low root bounds")
    add_common(p, spec=True)
    p.add_argument("--radius", type=int, default=1, help="candidate pool ball radius")
    p.add_argument("--set-size", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--max-candidates", type=int, default=None)
    p.add_argument("--max-seconds", type=float, default=None)
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("classify", help="growth class of a manifold spec")
    add_common(p, spec=True)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("universal", help="minimum known branch constant")
    p.add_argument("--bcg", default=None)
    p.add_argument("--no-bcg", action="store_true", help="ignore any supplied table")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_universal)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GroupGrowthError, ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
