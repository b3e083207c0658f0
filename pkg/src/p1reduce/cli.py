"""Command-line interface.

All results go to stdout as a single JSON document; anything human-readable
(progress, warnings, error explanations) goes to stderr.  Exit codes:

    0  success
    2  bad command-line arguments
    3  malformed or invalid input cocycle
    4  hypothesis violated (the generic fiber is not semistable)
    5  precision or iteration budget exhausted
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .bundles import SplittingType, birkhoff_factorize, canonical_parabolic, splitting_type
from .deformation import check_reduction
from .docio import DocumentError, cocycle_to_json, entry_to_terms, parse_document
from .engine import semistable_reduce
from .errors import (
    InternalBoundError,
    InvalidTypeError,
    NonIntegralError,
    PrecisionError,
    UnstableGenericError,
)
from .rootdata import build_root_system, central_weight, char_bound, unipotent_filtration

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_BAD_COCYCLE = 3
EXIT_HYPOTHESIS = 4
EXIT_PRECISION = 5


def _say(msg):
    print(msg, file=sys.stderr)


def _emit(doc):
    json.dump(doc, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _load_input(path):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise DocumentError("cannot read input document: %s" % exc)


def _parse(path):
    coc, t_prec = parse_document(_load_input(path))
    try:
        coc.validate()
    except (NonIntegralError, ValueError) as exc:
        raise DocumentError("invalid cocycle: %s" % exc)
    return coc, t_prec


def cmd_rootdata(args):
    label = args.type
    rank = args.rank
    if rank is None:
        if len(label) > 1 and label[1:].isdigit():
            rank = int(label[1:])
            label = label[0]
        else:
            _say("rootdata: rank missing (pass e.g. B3 or --rank)")
            return EXIT_USAGE
    rs = build_root_system(label, rank)
    out = rs.to_json()
    out["char_bound"] = char_bound(rs.label, rs.rank)
    if args.beta is not None:
        levi = frozenset(range(rs.rank)) - {args.beta}
        pd = unipotent_filtration(rs, levi, args.beta)
        cw = central_weight(pd, args.form)
        out["beta"] = args.beta
        out["filtration_levels"] = pd.level_sizes()
        out["h"] = pd.h
        out["kernel_order"] = cw.kernel_order
        out["level_weights"] = list(cw.level_weights)
        out["required_N"] = cw.required_N
    _emit(out)
    return EXIT_OK


def cmd_hn(args):
    coc, t_prec = _parse(args.input)
    t_prec = args.t_precision or t_prec
    gen = splitting_type(coc.as_generic(), t_precision=t_prec)
    spc = splitting_type(coc.specialize(), t_precision=t_prec)
    canon = canonical_parabolic(spc)
    _emit({
        "generic": list(gen.exponents),
        "special": list(spc.exponents),
        "canonical_blocks": list(canon.block_sizes),
        "semistable": {
            "generic": gen.is_semistable(),
            "special": spc.is_semistable(),
        },
    })
    return EXIT_OK


def cmd_factor(args):
    coc, t_prec = _parse(args.input)
    t_prec = args.t_precision or t_prec
    if coc.base == "dvr":
        _say("factor: input lives over the DVR; factoring its special fiber")
        coc = coc.specialize()
    fac = birkhoff_factorize(coc, t_precision=t_prec)
    _emit({
        "exponents": list(fac.exponents()),
        "d_powers": list(fac.d_powers),
        "certified_precision": fac.certified_precision,
        "A": [[entry_to_terms(x) for x in row] for row in fac.A],
        "B": [[entry_to_terms(x) for x in row] for row in fac.B],
    })
    return EXIT_OK


def _run_reduce(args):
    coc, t_prec = _parse(args.input)
    t_prec = args.t_precision or t_prec
    if args.trace:
        _say("reduce: starting with rank %d over %s" % (coc.n, coc.base))
    result = semistable_reduce(coc, max_steps=args.max_steps, t_precision=t_prec)
    if args.trace:
        for k, s in enumerate(result.steps):
            _say("step %d: %s -> %s (cut %d, e* = %s, %d inner adjustments)"
                 % (k, s.before, s.after, s.cut, s.e_star, s.inner_adjustments))
    return result


def cmd_reduce(args):
    result = _run_reduce(args)
    out = result.to_json()
    out["cocycle"] = cocycle_to_json(result.cocycle)
    _emit(out)
    return EXIT_OK


def cmd_check_deformation(args):
    result = _run_reduce(args)
    report = check_reduction(result, t_precision=args.t_precision or None)
    report["reduction"] = result.to_json()
    _emit(report)
    return EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(
        prog="p1reduce",
        description="Bundle factorization and semistable reduction on the "
                    "projective line, in exact arithmetic.",
    )
    p.add_argument("--seed", type=int, default=None,
                   help="seed the process-wide RNG (for reproducible sampling)")
    sub = p.add_subparsers(dest="command", required=True)

    pr = sub.add_parser("rootdata", help="root system, filtration and weight data")
    pr.add_argument("type", help="simple type, e.g. A3, E7, G2")
    pr.add_argument("--rank", type=int, default=None)
    pr.add_argument("--beta", type=int, default=None,
                    help="simple-root index defining a maximal parabolic")
    pr.add_argument("--form", default="SL",
                    choices=["SL", "simply-connected", "adjoint", "GL"])
    pr.set_defaults(func=cmd_rootdata)

    def io_parser(name, help_text):
        q = sub.add_parser(name, help=help_text)
        q.add_argument("--input", required=True, help="JSON document path, or - for stdin")
        q.add_argument("--max-steps", type=int, default=64)
        q.add_argument("--t-precision", type=int, default=None,
                       help="override the document's t-precision")
        q.add_argument("--trace", action="store_true",
                       help="write per-step progress to stderr")
        return q

    io_parser("hn", "splitting types of generic and special fiber").set_defaults(func=cmd_hn)
    io_parser("factor", "Birkhoff factorization of a single fiber").set_defaults(func=cmd_factor)
    io_parser("reduce", "run the semistable reduction loop").set_defaults(func=cmd_reduce)
    io_parser("check-deformation",
              "reduce, then verify each step by its contraction family"
              ).set_defaults(func=cmd_check_deformation)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.seed is not None:
        random.seed(args.seed)
    try:
        return args.func(args)
    except (DocumentError, NonIntegralError, InvalidTypeError) as exc:
        _say("error: %s" % exc)
        return EXIT_BAD_COCYCLE
    except UnstableGenericError as exc:
        _say("hypothesis violated: %s" % exc)
        return EXIT_HYPOTHESIS
    except (PrecisionError, InternalBoundError) as exc:
        _say("budget exhausted: %s" % exc)
        return EXIT_PRECISION
    except ValueError as exc:
        _say("error: %s" % exc)
        return EXIT_BAD_COCYCLE


if __name__ == "__main__":
    sys.exit(main())
