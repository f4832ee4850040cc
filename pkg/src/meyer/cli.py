"""Command-line interface: ``meyer <command> [options]``.

Matrix arguments are JSON files in one of two shapes::

    {"g": 1, "matrix": [[1, 1], [0, 1]]}
    {"g": 2, "P": [[...]], "Q": [[...]], "S": [[...]]}

Exit status is 0 when everything passes, 1 when a verification check fails
and 2 on bad input.
"""

import argparse
import json
import os
import sys

from . import _backend
from .cocycle import tau
from .errors import MeyerError
from .exactlin import Matrix, format_matrix
from .functions import compare, format_rational, mu, phi_h
from .handlebody import mapping_torus_homology, phi_v
from .suites import SUITES, run_suite
from .symplectic import SpElement, UrSpElement
from .words import evaluate_handlebody_word, evaluate_word, parse_word


class InputError(MeyerError):
    """Malformed command-line input that is not a library precondition."""


def _int_array(value, shape, name):
    rows, cols = shape
    ok = (isinstance(value, list) and len(value) == rows
          and all(isinstance(r, list) and len(r) == cols for r in value))
    if not ok:
        raise InputError(f"{name} must be a {rows}x{cols} array")
    for r in value:
        for x in r:
            if isinstance(x, bool) or not isinstance(x, int):
                raise InputError(f"{name} must contain integers only")
    return Matrix(value)


def load_matrix_document(path):
    """Read a MatrixDocument; returns an SpElement or UrSpElement."""
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc.msg} at line {exc.lineno}") from None
    if not isinstance(doc, dict):
        raise InputError(f"{path}: expected a JSON object")
    g = doc.get("g")
    if isinstance(g, bool) or not isinstance(g, int) or g < 1:
        raise InputError(f"{path}: 'g' must be a positive integer")
    if "matrix" in doc:
        if any(k in doc for k in "PQS"):
            raise InputError(f"{path}: give either 'matrix' or 'P', 'Q', 'S', not both")
        return SpElement(g, _int_array(doc["matrix"], (2 * g, 2 * g), "matrix"))
    if all(k in doc for k in "PQS"):
        blocks = [_int_array(doc[k], (g, g), k) for k in "PQS"]
        return UrSpElement(g, *blocks)
    raise InputError(f"{path}: expected 'matrix' or all of 'P', 'Q', 'S'")


def _seed_default():
    raw = os.environ.get("MEYER_SEED")
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"MEYER_SEED must be an integer (got {raw!r})") from None


def _emit(args, text, data):
    if args.format == "json":
        print(json.dumps(data, sort_keys=True))
    else:
        print(text)


def _element_from_args(args, need_ursp):
    if args.matrix is not None:
        if args.word is not None:
            raise InputError("give either --matrix or --word, not both")
        return load_matrix_document(args.matrix)
    if args.word is None or args.g is None:
        raise InputError("need --matrix FILE or --word STRING with --g N")
    return (evaluate_handlebody_word if need_ursp else evaluate_word)(args.word, args.g)


def _require_genus(args):
    if args.g is None:
        raise InputError("--g is required")
    if args.g < 1:
        raise InputError("--g must be positive")


def cmd_tau(args):
    a, b = load_matrix_document(args.a), load_matrix_document(args.b)
    if args.g is not None and {a.genus, b.genus} != {args.g}:
        raise InputError(f"--g {args.g} does not match the documents' genus")
    value = tau(a, b)
    _emit(args, str(value), {"tau": value})
    return 0


def cmd_phi_v(args):
    value = phi_v(_element_from_args(args, True))
    _emit(args, str(value), {"phi_v": value})
    return 0


def cmd_phi_h(args):
    _require_genus(args)
    value = format_rational(phi_h(args.word, args.g))
    _emit(args, value, {"phi_h": value})
    return 0


def cmd_mu(args):
    _require_genus(args)
    value = format_rational(mu(args.word, args.g))
    _emit(args, value, {"mu": value})
    return 0


def cmd_diff(args):
    _require_genus(args)
    row = compare(args.word, args.g)
    _emit(args, format_rational(row.difference), row.as_dict())
    return 0


def cmd_torus(args):
    report = mapping_torus_homology(_element_from_args(args, True), args.h1_torsion)
    data = report.as_dict()
    lines = [f"genus: {report.genus}",
             f"h2_rank: {report.h2_rank}",
             "h2_basis: " + " ".join(str(list(v)) for v in report.h2_basis),
             f"h2rel_rank: {report.h2rel_rank}",
             f"h2rel_torsion: {list(report.h2rel_torsion)}",
             "d_matrix:", format_matrix(report.d_matrix),
             "intersection_gram:", format_matrix(report.intersection_gram),
             f"signature: {report.signature}"]
    if report.h1_torsion is not None:
        lines.append(f"h1_torsion: {list(report.h1_torsion)}")
    _emit(args, "\n".join(lines), data)
    return 0


def cmd_eval(args):
    _require_genus(args)
    m = evaluate_word(args.word, args.g).matrix
    _emit(args, format_matrix(m), {"g": args.g, "word": str(parse_word(args.word)),
                                   "matrix": m.tolist()})
    return 0


def cmd_verify(args):
    _require_genus(args)
    if args.cases < 0:
        raise InputError("--cases must be non-negative")
    results = run_suite(args.suite, args.g, args.seed, args.cases)
    ok = all(r.passed for r in results)
    if args.format == "json":
        print(json.dumps({"pass": ok, "seed": args.seed, "cases": args.cases,
                          "suites": [r.as_dict() for r in results]}, sort_keys=True))
    else:
        for r in results:
            print(r.summary())
            for c in r.failures():
                print(f"  FAIL {c.label}: {c.detail}")
    return 0 if ok else 1


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    # SUPPRESS lets flags placed after the subcommand override the top-level ones
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    common.add_argument("--cases", type=int, default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(prog="meyer", description=__doc__.splitlines()[0])
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--seed", type=int, default=None,
                        help="random seed (default: $MEYER_SEED or 0)")
    parser.add_argument("--cases", type=int, default=100)
    parser.add_argument("--version", action="version",
                        version=f"%(prog)s 0.1.0 ({_backend.BACKEND} kernels)")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        return p

    p = add("tau", cmd_tau, "Meyer cocycle of two matrices")
    p.add_argument("--g", type=int)
    p.add_argument("--a", required=True, metavar="FILE")
    p.add_argument("--b", required=True, metavar="FILE")

    for name, func, help_text in (("phi-v", cmd_phi_v, "handlebody Meyer function"),
                                  ("torus", cmd_torus, "mapping torus homology report")):
        p = add(name, func, help_text)
        p.add_argument("--matrix", metavar="FILE")
        p.add_argument("--word")
        p.add_argument("--g", type=int)
        if name == "torus":
            p.add_argument("--h1-torsion", action="store_true",
                           help="also report the torsion of coker(S - I)")

    for name, func, help_text in (("phi-h", cmd_phi_h, "hyperelliptic Meyer function"),
                                  ("mu", cmd_mu, "the homomorphism mu"),
                                  ("diff", cmd_diff, "phi_h - phi_v on a handlebody word"),
                                  ("eval", cmd_eval, "matrix of a word")):
        p = add(name, func, help_text)
        p.add_argument("--word", required=True)
        p.add_argument("--g", type=int, required=True)

    p = add("verify", cmd_verify, "run verification suites")
    p.add_argument("--suite", required=True, choices=(*SUITES, "all"))
    p.add_argument("--g", type=int, required=True)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse already printed its message; usage errors are input errors
        return 0 if exc.code == 0 else 2
    try:
        if args.seed is None:
            args.seed = _seed_default()
        return args.func(args)
    except MeyerError as exc:
        print(f"meyer: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
