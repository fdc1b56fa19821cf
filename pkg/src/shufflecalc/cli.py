"""Batch front end: table transforms, convolutions, partition dumps and the
verification suites.

All numeric output is exact-rational strings; identical configurations
produce byte-identical output.  Exit codes: 0 success, 1 verification
failure, 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import cumulants, partitions
from .cumulants import StatePair
from .errors import ShuffleCalcError, DomainError
from .functionals import CumulantTable, MomentTable
from .verify import VerifyConfig, check_names, run_checks

MAX_TRUNCATION = 12


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="shufflecalc",
        description="Exact cumulant calculus on the word Hopf algebra.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("transform", help="convert between moment and cumulant tables")
    p.add_argument("--input", required=True, help="input table JSON path ('-' for stdin)")
    p.add_argument("--output", default="-", help="output path (default stdout)")
    direction = p.add_mutually_exclusive_group(required=True)
    direction.add_argument("--to", choices=["free", "boolean", "monotone", "cfree"],
                           help="moments -> cumulants of this kind")
    direction.add_argument("--from", dest="from_", metavar="FROM",
                           choices=["free", "boolean", "monotone", "cfree"],
                           help="cumulants of this kind -> moments")

    p = sub.add_parser("convolve", help="convolve two states or state pairs")
    p.add_argument("--kind", required=True, choices=["free", "boolean", "monotone", "cfree"])
    p.add_argument("--input", required=True)
    p.add_argument("--input2", required=True)
    p.add_argument("--output", default="-")

    p = sub.add_parser("enumerate", help="dump partition families")
    p.add_argument("--family", required=True, choices=["nc", "boolean", "nc-irr"])
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--counts", action="store_true", help="print a JSON count summary only")
    p.add_argument("--details", action="store_true",
                   help="annotate each partition with block classes, nesting forest and tree factorial")
    p.add_argument("--output", default="-")

    p = sub.add_parser("verify", help="run the named identity suites")
    p.add_argument("--max-len", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--alphabet", default="a,b", help="comma-separated letter names")
    p.add_argument("--only", action="append", default=None,
                   help="run only these checks (repeatable or comma-separated); "
                        f"available: {', '.join(check_names())}")
    p.add_argument("--corrupt-oracle", action="store_true",
                   help="self-test: corrupt the free oracle so verification must fail")
    p.add_argument("--output", default="-")
    return parser


def _read_json(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise DomainError(f"cannot read {path}: {exc}") from exc


def _write_text(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def cmd_transform(args) -> int:
    obj = _read_json(args.input)
    if args.to == "cfree":
        result = cumulants.cfree_cumulants(StatePair.from_json(obj))
    elif args.to:
        table = MomentTable.from_json(obj)
        result = {
            "free": cumulants.free_cumulants,
            "boolean": cumulants.boolean_cumulants,
            "monotone": cumulants.monotone_cumulants,
        }[args.to](table)
    elif args.from_ == "cfree":
        try:
            r_obj, psi_obj = obj["cumulants"], obj["psi"]
        except (KeyError, TypeError):
            raise DomainError(
                "--from cfree expects JSON {\"cumulants\": <table>, \"psi\": <table>}"
            ) from None
        result = cumulants.moments_from_cfree(
            CumulantTable.from_json(r_obj), MomentTable.from_json(psi_obj)
        )
    else:
        table = CumulantTable.from_json(obj)
        result = {
            "free": cumulants.moments_from_free,
            "boolean": cumulants.moments_from_boolean,
            "monotone": cumulants.moments_from_monotone,
        }[args.from_](table)
    _check_truncation(result.max_len)
    _write_text(args.output, _dump_json(result.to_json()))
    return 0


def cmd_convolve(args) -> int:
    a = _read_json(args.input)
    b = _read_json(args.input2)
    if args.kind == "cfree":
        result = cumulants.convolve_cfree(StatePair.from_json(a), StatePair.from_json(b))
    else:
        op = {
            "free": cumulants.convolve_free,
            "boolean": cumulants.convolve_boolean,
            "monotone": cumulants.convolve_monotone,
        }[args.kind]
        result = op(MomentTable.from_json(a), MomentTable.from_json(b))
    _check_truncation(result.max_len)
    _write_text(args.output, _dump_json(result.to_json()))
    return 0


def cmd_enumerate(args) -> int:
    family = {
        "nc": partitions.enumerate_nc,
        "boolean": partitions.enumerate_boolean,
        "nc-irr": partitions.enumerate_nc_irreducible,
    }[args.family]
    members = family(args.n)
    if args.counts:
        _write_text(args.output, _dump_json({"family": args.family, "n": args.n,
                                             "count": len(members)}))
        return 0
    lines = []
    for p in members:
        if args.details:
            lines.append(json.dumps({
                "blocks": p.to_json(),
                "classes": partitions.classify_blocks(p),
                "parents": nesting_parents_json(p),
                "tree_factorial": partitions.tree_factorial(p),
            }, sort_keys=True))
        else:
            lines.append(json.dumps(p.to_json()))
    _write_text(args.output, "\n".join(lines) + "\n")
    return 0


def nesting_parents_json(p) -> list:
    return [-1 if parent is None else parent for parent in partitions.nesting_forest(p)]


def cmd_verify(args) -> int:
    alphabet = tuple(x for x in args.alphabet.split(",") if x)
    if not alphabet:
        raise DomainError("alphabet must contain at least one letter")
    _check_truncation(args.max_len)
    only = None
    if args.only:
        only = [name for chunk in args.only for name in chunk.split(",") if name]
    config = VerifyConfig(
        alphabet=alphabet, max_len=args.max_len, seed=args.seed,
        corrupt=args.corrupt_oracle,
    )
    results = run_checks(config, only=only)
    lines = []
    for result in results:
        if result.passed:
            lines.append(f"PASS {result.name}")
        else:
            lines.append(f"FAIL {result.name}: {result.detail}")
    _write_text(args.output, "\n".join(lines) + "\n")
    return 0 if all(r.passed for r in results) else 1


def _check_truncation(n: int) -> None:
    if not 1 <= n <= MAX_TRUNCATION:
        raise DomainError(f"truncation degree must be in [1, {MAX_TRUNCATION}], got {n}")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = {
        "transform": cmd_transform,
        "convolve": cmd_convolve,
        "enumerate": cmd_enumerate,
        "verify": cmd_verify,
    }[args.command]
    try:
        return handler(args)
    except ShuffleCalcError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
