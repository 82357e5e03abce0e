"""Command-line front end.

Exit codes: 0 success (or EQUAL), 1 NOT EQUAL, 2 usage/parse/boundary
error, 3 law failure.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from typing import Optional, Sequence

from . import cospan as cs
from . import ordinals
from .errors import CospanLinError
from .freeterm import ONE_CELL_TYPES, Signature, eval_one, eval_two, parse, signature_of
from .render import render
from .rewrite import equal_terms, normalize

EXIT_OK, EXIT_NOT_EQUAL, EXIT_USAGE, EXIT_LAW = 0, 1, 2, 3
DEFAULT_BOUND = 5


def default_bound() -> int:
    raw = os.environ.get("COSPAN_BOUND")
    if raw is None:
        return DEFAULT_BOUND
    try:
        return int(raw)
    except ValueError:
        raise SystemExit(f"error: COSPAN_BOUND must be an integer, got {raw!r}") from None


def _dump(data) -> str:
    return json.dumps(data, separators=(",", ":"))


def _compact_cell(t: cs.TwoCell) -> dict:
    return {"src": t.src.to_compact(), "tgt": t.tgt.to_compact(),
            "alpha": list(t.apex_map.images)}


def _evaluate(term):
    if isinstance(term, ONE_CELL_TYPES):
        return eval_one(term)
    return eval_two(term)


def cmd_eval(args) -> int:
    value = _evaluate(parse(args.term))
    if isinstance(value, cs.Cospan):
        print(_dump(value.to_json() if args.json else value.to_compact()))
    else:
        print(_dump(value.to_json() if args.json else _compact_cell(value)))
    return EXIT_OK


def _one_cell(text: str):
    term = parse(text)
    if not isinstance(term, ONE_CELL_TYPES):
        raise CospanLinError(f"expected a 1-cell term, got a 2-cell term: {text!r}")
    return term


def cmd_normalize(args) -> int:
    normal, trace = normalize(_one_cell(args.term))
    if args.json:
        out = {"normal": [s.to_json() for s in normal.slices]}
        if args.trace:
            out["trace"] = trace.to_json()
        print(_dump(out))
        return EXIT_OK
    print(f"normal: {normal}")
    print("slices: [" + ", ".join(repr(s) for s in normal.slices) + "]")
    if args.trace:
        print("trace: [" + ", ".join(trace.rules) + "]")
    return EXIT_OK


def cmd_equal(args) -> int:
    a, b = _one_cell(args.left), _one_cell(args.right)
    # a generator-free term such as id:0 fits either signature
    sa = signature_of(a, Signature.UNIT if signature_of(b) is Signature.UNIT else
                      Signature.SEMIALGEBRA)
    sb = signature_of(b, sa)
    if sa is not sb:
        raise CospanLinError("terms use different signatures")
    if sa is Signature.SEMIALGEBRA:
        same = equal_terms(a, b)
    else:
        ea, eb = eval_one(a, sa), eval_one(b, sb)
        if (ea.source, ea.target) != (eb.source, eb.target):
            raise CospanLinError(f"terms have boundaries {ea.source}->{ea.target} "
                                 f"and {eb.source}->{eb.target}")
        same = ea == eb
    if same:
        print("EQUAL")
        return EXIT_OK
    print("NOT EQUAL")
    print(_dump(eval_one(a, sa).to_compact()))
    print(_dump(eval_one(b, sb).to_compact()))
    return EXIT_NOT_EQUAL


def cmd_render(args) -> int:
    print(render(_one_cell(args.term)))
    return EXIT_OK


def cmd_laws(args) -> int:
    from .universal import run_suite

    bound = default_bound() if args.bound is None else args.bound
    report = run_suite(args.instance, bound)
    if args.json:
        print(_dump({"instance": args.instance, "bound": bound, **report.to_json()}))
    else:
        print(f"instance: {args.instance}  bound: {bound}")
        print(report.table())
        for r in report.failures():
            print(f"witness {r.law}: {_dump(r.witness)}")
    return EXIT_OK if report.ok else EXIT_LAW


def cmd_enumerate(args) -> int:
    cls = ordinals.MapClass(args.cls)
    maps = ordinals.enumerate_maps(args.m, args.n, cls)
    expected: Optional[int] = None
    if cls is ordinals.MapClass.SURJECTIVE and args.m >= 1 and args.n >= 1:
        expected = math.comb(args.m - 1, args.n - 1)
    if args.json:
        out = {"maps": [f.to_json() for f in maps], "count": len(maps)}
        if expected is not None:
            out["expected"] = expected
        print(_dump(out))
    else:
        for f in maps:
            print(_dump(list(f.images)))
        print(f"count: {len(maps)}")
        if expected is not None:
            print(f"binomial C({args.m - 1},{args.n - 1}) = {expected}")
    if expected is not None and expected != len(maps):
        print("error: count disagrees with the binomial formula", file=sys.stderr)
        return EXIT_LAW
    return EXIT_OK


def _natural(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a natural number, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    from .universal import INSTANCE_NAMES

    parser = argparse.ArgumentParser(
        prog="cospanlin",
        description="Cospans of finite ordinals: evaluate, normalize, compare and "
                    "draw terms, and run law suites.")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("eval", help="evaluate a 1-cell or 2-cell term")
    p.add_argument("term")
    p.add_argument("--json", action="store_true", help="full JSON schema")
    p.set_defaults(run=cmd_eval)

    p = sub.add_parser("normalize", help="rewrite a semialgebra term to normal form")
    p.add_argument("term")
    p.add_argument("--trace", action="store_true", help="print the rewrite steps")
    p.add_argument("--json", action="store_true")
    p.set_defaults(run=cmd_normalize)

    p = sub.add_parser("equal", help="decide equality of two 1-cell terms")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(run=cmd_equal)

    p = sub.add_parser("render", help="draw a 1-cell term as ASCII wires")
    p.add_argument("term")
    p.set_defaults(run=cmd_render)

    p = sub.add_parser("laws", help="run the law suite on an instance")
    p.add_argument("--instance", choices=INSTANCE_NAMES, default="cospan-slin")
    p.add_argument("--bound", type=_natural, default=None,
                   help=f"exhaustive bound (default $COSPAN_BOUND or {DEFAULT_BOUND})")
    p.add_argument("--json", action="store_true")
    p.set_defaults(run=cmd_laws)

    p = sub.add_parser("enumerate", help="list monotone maps m -> n")
    p.add_argument("m", type=_natural)
    p.add_argument("n", type=_natural)
    p.add_argument("--class", dest="cls", choices=[c.value for c in ordinals.MapClass],
                   default="all")
    p.add_argument("--json", action="store_true")
    p.set_defaults(run=cmd_enumerate)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.run(args)
    except CospanLinError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
