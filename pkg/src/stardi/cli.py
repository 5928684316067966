"""Command-line front end.

Exit codes: 0 success, 1 failed verification or a FAIL row from reproduce,
2 malformed input or bad parameters, 3 a size cap was exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import lp, reproduce
from .colourings import (
    check_acyclic_kd,
    check_circular_kd,
    check_partition_k,
    check_tree_kd,
    parse_colouring,
)
from .families import build_family, family_names, random_orientation
from .graphs import CapExceeded, Digraph, Graph, ParseError, digirth, parse_digraph, serialize
from .solvers import (
    alpha,
    circular_dichromatic,
    circular_vertex_arboricity,
    dichromatic,
    exists_acyclic_kd,
    star_dichromatic,
    sweep_orientations,
)

_CHECKERS = {
    "acyclic": (check_acyclic_kd, Digraph),
    "circular": (check_circular_kd, Digraph),
    "partition": (check_partition_k, Digraph),
    "tree": (check_tree_kd, Graph),
}


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _read_input(path: str):
    return parse_digraph(_read_text(path))


def _expect(obj, kind, what: str):
    if not isinstance(obj, kind):
        header = "p dg" if kind is Digraph else "p ug"
        raise ValueError(f"{what} needs a {header!r} input")
    return obj


def _write_out(payload: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(payload)
    else:
        Path(out).write_text(payload)


def _value_json(value):
    if value is None:
        return None
    value = Fraction(value)
    return {"num": str(value.numerator), "den": str(value.denominator)}


def _witness_json(witness):
    if witness is None:
        return None
    return {"k": witness.k, "d": witness.d, "colours": list(witness.colours)}


def _cmd_compute(args) -> int:
    obj = _read_input(args.input)
    witness = None
    if args.param == "va":
        result = circular_vertex_arboricity(
            _expect(obj, Graph, "va"), args.cap, paranoid=args.paranoid
        )
        value, witness = result.value, result.witness
    else:
        D = _expect(obj, Digraph, args.param)
        if args.param == "star":
            result = star_dichromatic(D, paranoid=args.paranoid)
            value, witness = result.value, result.witness
        elif args.param == "circular":
            result = circular_dichromatic(D, paranoid=args.paranoid)
            value, witness = result.value, result.witness
        elif args.param == "fractional":
            cap = 16 if args.cap is None else args.cap
            value = lp.fractional_dichromatic(D, cap).value
        elif args.param == "dichromatic":
            chi = dichromatic(D)
            value, witness = Fraction(chi), exists_acyclic_kd(D, chi, 1)
        elif args.param == "alpha":
            value = Fraction(alpha(D))
        else:
            g = digirth(D)
            value = None if g is None else Fraction(g)
    if args.json:
        document = {
            "param": args.param,
            "value": _value_json(value),
            "witness": _witness_json(witness),
        }
        print(json.dumps(document))
    else:
        print(f"{args.param} {'inf' if value is None else value}")
    return 0


def _cmd_verify(args) -> int:
    checker, kind = _CHECKERS[args.kind]
    obj = _expect(_read_input(args.input), kind, f"{args.kind} verification")
    colouring = parse_colouring(_read_text(args.colouring), obj.n, args.k, args.d)
    violation = checker(obj, colouring)
    if violation is None:
        print("OK")
        return 0
    print(violation)
    return 1


def _cmd_generate(args) -> int:
    params = {"k": args.k, "d": args.d, "n": args.n, "g": args.g, "f": args.f}
    base = _read_input(args.input) if args.input else None
    obj = build_family(args.family, params, base)
    if args.orient_seed is not None:
        if not isinstance(obj, Graph):
            raise ValueError("--orient-seed applies to graph families only")
        obj = random_orientation(obj, args.orient_seed)
    _write_out(serialize(obj), args.out)
    return 0


def _cmd_sweep(args) -> int:
    G = _expect(_read_input(args.input), Graph, "sweep")
    value, best = sweep_orientations(
        G, args.param, edge_cap=args.cap, wheel_symmetry=args.wheel_symmetry
    )
    print(f"{args.param} {value}")
    if args.out is not None:
        _write_out(serialize(best), args.out)
    return 0


def _cmd_reproduce(args) -> int:
    rows = reproduce.run(args.only or None)
    for row in rows:
        print(row.render())
    failed = sum(1 for row in rows if not row.passed)
    print(f"{len(rows) - failed} of {len(rows)} rows pass")
    return 1 if failed else 0


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stardi",
        description="Exact circular colouring parameters of small digraphs.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    compute = sub.add_parser("compute", help="compute one parameter of an input")
    compute.add_argument(
        "--param",
        required=True,
        choices=("star", "circular", "fractional", "dichromatic", "alpha", "digirth", "va"),
    )
    compute.add_argument("--input", required=True, help="input file, '-' for stdin")
    compute.add_argument("--json", action="store_true", help="emit JSON with the witness")
    compute.add_argument(
        "--paranoid",
        action="store_true",
        help="scan the whole candidate ladder instead of binary search",
    )
    compute.add_argument(
        "--cap",
        type=int,
        help="size cap: enumeration cap for fractional, numerator cap for va",
    )
    compute.set_defaults(func=_cmd_compute)

    verify = sub.add_parser("verify", help="check a colouring file against an input")
    verify.add_argument("--kind", required=True, choices=tuple(_CHECKERS))
    verify.add_argument("--k", required=True, type=int)
    verify.add_argument("--d", required=True, type=int)
    verify.add_argument("--input", required=True)
    verify.add_argument("--colouring", required=True)
    verify.set_defaults(func=_cmd_verify)

    generate = sub.add_parser("generate", help="write a family member")
    generate.add_argument("--family", required=True, choices=family_names())
    generate.add_argument("--k", type=int)
    generate.add_argument("--d", type=int)
    generate.add_argument("--n", type=int)
    generate.add_argument("--g", type=int)
    generate.add_argument("--f", type=int)
    generate.add_argument("--input", help="base input for symmetric / add-source")
    generate.add_argument("--orient-seed", type=int, help="orient a graph family randomly")
    generate.add_argument("--out", help="output file (default stdout)")
    generate.set_defaults(func=_cmd_generate)

    sweep = sub.add_parser("sweep", help="maximise a parameter over all orientations")
    sweep.add_argument(
        "--param", required=True, choices=("star", "circular", "fractional", "dichromatic")
    )
    sweep.add_argument("--input", required=True, help="graph file, '-' for stdin")
    sweep.add_argument("--out", help="write the maximising orientation here")
    sweep.add_argument("--cap", type=int, default=18, help="edge-count cap")
    sweep.add_argument(
        "--wheel-symmetry",
        type=int,
        help="prune by the dihedral symmetry of a wheel with this rim size",
    )
    sweep.set_defaults(func=_cmd_sweep)

    rep = sub.add_parser("reproduce", help="recompute the published value tables")
    rep.add_argument(
        "--only",
        action="append",
        choices=reproduce.GROUPS,
        help="run one group (repeatable)",
    )
    rep.set_defaults(func=_cmd_reproduce)
    return parser


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        return args.func(args)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ParseError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
