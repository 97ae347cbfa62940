"""Command line front end.

Every computation in the library is reachable as a subcommand with JSON on
stdout (or a plain rendering with --format plain).  Exit codes: 0 when the
requested check holds or the computation succeeds, 1 when a verification
fails or no cohomology class matches, 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import braidings as br
from . import cocycles as co
from . import cohomology as coh
from .complexes import verify_chain_map
from .groups import Group


def _parse_orders(text: str) -> Group:
    try:
        orders = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise ValueError(f"orders must be comma-separated integers, got {text!r}")
    return Group(orders)


def parse_params_literal(group: Group, text: str) -> co.CocycleParams:
    """Read the "a_l;a_ij;a_rst" literal, comma-separated within each part.

    Trailing parts may be omitted or left empty; they default to zeros.
    """
    parts = text.split(";")
    if len(parts) > 3:
        raise ValueError(f"params literal has {len(parts)} sections, at most 3 allowed")
    while len(parts) < 3:
        parts.append("")
    groups = [[int(v) for v in part.split(",") if v.strip() != ""]
              for part in parts]
    n = group.rank
    expected = [n, len(co.pair_indices(n)), len(co.triple_indices(n))]
    filled = []
    for got, want, label in zip(groups, expected,
                                ("diagonal", "pair", "triple")):
        if not got:
            got = [0] * want
        if len(got) != want:
            raise ValueError(f"expected {want} {label} exponents, got {len(got)}")
        filled.append(tuple(got))
    return co.CocycleParams(group, *filled)


def params_literal(params: co.CocycleParams) -> str:
    return ";".join((",".join(str(v) for v in params.diag),
                     ",".join(str(v) for v in params.pairs),
                     ",".join(str(v) for v in params.triples)))


def _parse_element(group: Group, text: str):
    exps = tuple(int(p) for p in text.split(","))
    return group.element(exps)


def _load_table(path: str) -> co.CocycleTable:
    with open(path, "r", encoding="utf-8") as fh:
        return co.table_from_doc(json.load(fh))


def _emit(args, doc, plain: str):
    if args.format == "plain":
        print(plain)
    else:
        print(json.dumps(doc))


def _exps(x):
    return list(x.exps)


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="grcat",
        description="Exact computations with cocycles, cohomology classes and "
                    "braidings over finite abelian groups.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, params=False, table=False, max_cells=False):
        p.add_argument("--orders", required=not table,
                       help="comma-separated cyclic factor orders, e.g. 4,2")
        if params:
            p.add_argument("--params", default="",
                           help='cocycle parameters "a_l;a_ij;a_rst"')
        if table:
            p.add_argument("--table", help="path to a cocycle table JSON file")
        if max_cells:
            p.add_argument("--max-cells", type=int, default=10 ** 6,
                           help="override the table/grid size guard")
        p.add_argument("--format", choices=("json", "plain"), default="json")

    p = sub.add_parser("h3", help="order of the degree-3 cohomology group")
    add_common(p)

    cocycle = sub.add_parser("cocycle", help="canonical cocycles")
    csub = cocycle.add_subparsers(dest="subcommand", required=True)
    p = csub.add_parser("list", help="all parameter choices")
    add_common(p)
    p.add_argument("--count", action="store_true")
    p = csub.add_parser("eval", help="one cocycle value")
    add_common(p, params=True)
    p.add_argument("--x", required=True, help="exponents of the first argument")
    p.add_argument("--y", required=True)
    p.add_argument("--z", required=True)
    p = csub.add_parser("table", help="full table over the group cube")
    add_common(p, params=True, max_cells=True)

    verify = sub.add_parser("verify", help="exhaustive identity checks")
    vsub = verify.add_subparsers(dest="subcommand", required=True)
    for name, help_text in (("pentagon", "associativity coherence over G^4"),
                            ("normalized", "triviality on identity arguments"),
                            ("symmetry", "invariance under swapping the last "
                                         "two arguments")):
        p = vsub.add_parser(name, help=help_text)
        add_common(p, params=True, table=True, max_cells=True)
    p = vsub.add_parser("chain-map", help="commutation of the comparison maps "
                                          "with the differentials")
    add_common(p)

    p = sub.add_parser("classify", help="identify the cohomology class of a table")
    p.add_argument("--orders", help="optional cross-check of the table's orders")
    p.add_argument("--table", required=True)
    p.add_argument("--check-unique", action="store_true",
                   help="scan the whole parameter set to confirm uniqueness")
    p.add_argument("--format", choices=("json", "plain"), default="json")

    p = sub.add_parser("braidings", help="all braidings for a parameter choice")
    add_common(p, params=True)
    p.add_argument("--count", action="store_true")

    oracle = sub.add_parser("oracle", help="brute-force searches")
    osub = oracle.add_subparsers(dest="subcommand", required=True)
    p = osub.add_parser("braidings", help="search the candidate matrix grid")
    add_common(p, params=True, max_cells=True)
    p.add_argument("--count", action="store_true")
    p = osub.add_parser("full-space", help="search all functions G x G -> mu_N")
    add_common(p, params=True, max_cells=True)
    p.add_argument("--values-order", type=int, required=True,
                   help="order N of the value group mu_N")
    p.add_argument("--no-prune", action="store_true",
                   help="do not pin the identity row and column to 1")
    p.add_argument("--count", action="store_true")
    return parser


def _table_for_verify(args):
    if args.table is not None:
        table = _load_table(args.table)
        if args.orders is not None:
            if _parse_orders(args.orders) != table.group:
                raise ValueError("--orders does not match the table file")
        return table
    if args.orders is None:
        raise ValueError("either --orders with --params or --table is required")
    group = _parse_orders(args.orders)
    params = parse_params_literal(group, args.params)
    return co.build_table(params, max_cells=args.max_cells)


def _matrix_doc(qb):
    return [[str(v) for v in row] for row in qb.r]


def _run(args) -> int:
    if args.command == "h3":
        group = _parse_orders(args.orders)
        _emit(args, coh.h3_order(group), str(coh.h3_order(group)))
        return 0

    if args.command == "cocycle":
        group = _parse_orders(args.orders)
        if args.subcommand == "list":
            params = list(co.enumerate_params(group))
            if args.count:
                _emit(args, len(params), str(len(params)))
            else:
                _emit(args, [co.params_to_doc(p) for p in params],
                      "\n".join(params_literal(p) for p in params))
            return 0
        if args.subcommand == "eval":
            params = parse_params_literal(group, args.params)
            x = _parse_element(group, args.x)
            y = _parse_element(group, args.y)
            z = _parse_element(group, args.z)
            v = co.eval_cocycle(params, x, y, z)
            _emit(args, str(v), str(v))
            return 0
        params = parse_params_literal(group, args.params)
        table = co.build_table(params, max_cells=args.max_cells)
        doc = co.table_to_doc(table)
        plain = "\n".join(f"{e['x']} {e['y']} {e['z']} {e['w']}"
                          for e in doc["entries"]) or "(all values 1)"
        _emit(args, doc, plain)
        return 0

    if args.command == "verify":
        if args.subcommand == "chain-map":
            group = _parse_orders(args.orders)
            results = verify_chain_map(group)
            bad = {d: gen for d, gen in results.items() if gen is not None}
            if not bad:
                _emit(args, {"holds": True}, "holds")
                return 0
            degree, gen = sorted(bad.items())[0]
            doc = {"holds": False, "degree": degree,
                   "generator": [_exps(e) for e in gen.elems]}
            _emit(args, doc, f"fails in degree {degree} at {gen.elems}")
            return 1
        table = _table_for_verify(args)
        check = {"pentagon": co.verify_pentagon,
                 "normalized": co.verify_normalized,
                 "symmetry": co.verify_symmetry_last_two}[args.subcommand]
        witness = check(table)
        if witness is None:
            _emit(args, {"holds": True}, "holds")
            return 0
        labels = ("e", "f", "g", "h") if args.subcommand == "pentagon" \
            else ("x", "y", "z")
        doc = {"holds": False,
               "counterexample": {k: _exps(e) for k, e in zip(labels, witness)}}
        _emit(args, doc, "fails at " + " ".join(str(_exps(e)) for e in witness))
        return 1

    if args.command == "classify":
        table = _load_table(args.table)
        if args.orders is not None:
            if _parse_orders(args.orders) != table.group:
                raise ValueError("--orders does not match the table file")
        try:
            params = coh.classify(table, verify_unique=args.check_unique)
        except LookupError as exc:
            print(f"classify: {exc}", file=sys.stderr)
            return 1
        doc = co.params_to_doc(params)
        if args.check_unique:
            doc["unique"] = True
        _emit(args, doc, params_literal(params))
        return 0

    if args.command == "braidings":
        group = _parse_orders(args.orders)
        params = parse_params_literal(group, args.params)
        found = br.enumerate_braidings(params)
        if args.count:
            _emit(args, len(found), str(len(found)))
        else:
            _emit(args, [_matrix_doc(qb) for qb in found],
                  "\n".join("; ".join(" ".join(str(v) for v in row)
                                      for row in qb.r) for qb in found)
                  or "(none)")
        return 0

    if args.command == "oracle":
        group = _parse_orders(args.orders)
        params = parse_params_literal(group, args.params)
        if args.subcommand == "braidings":
            found = br.brute_force_braidings(params, max_candidates=args.max_cells)
            if args.count:
                _emit(args, len(found), str(len(found)))
            else:
                _emit(args, [_matrix_doc(qb) for qb in found],
                      "\n".join("; ".join(" ".join(str(v) for v in row)
                                          for row in qb.r) for qb in found)
                      or "(none)")
            return 0
        found = br.brute_force_full_function_space(
            params, args.values_order, max_candidates=args.max_cells,
            prune_identity=not args.no_prune)
        if args.count:
            _emit(args, len(found), str(len(found)))
            return 0
        docs = []
        for table in found:
            entries = [{"x": _exps(x), "y": _exps(y), "r": str(v)}
                       for (x, y), v in sorted(
                           table.items(),
                           key=lambda kv: (kv[0][0].exps, kv[0][1].exps))
                       if not v.is_one()]
            docs.append({"entries": entries})
        plain = "\n".join(json.dumps(d) for d in docs) or "(none)"
        _emit(args, docs, plain)
        return 0

    raise AssertionError(f"unhandled command {args.command!r}")


def main(argv=None) -> int:
    threads = os.environ.get("GRCAT_THREADS")
    if threads is not None:
        try:
            if int(threads) < 1:
                raise ValueError
        except ValueError:
            print(f"grcat: ignoring invalid GRCAT_THREADS={threads!r}",
                  file=sys.stderr)
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return _run(args)
    except (ValueError, OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"grcat: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
