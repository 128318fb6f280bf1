"""Command-line entry point: ``acgsb <command> ...``.

Exit status is 0 on success, 1 on a negative answer (``check-gsb`` finds a
non-trivial composition, ``decide`` answers DIFFERENT) and 2 on usage,
parse or file errors.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .gsb import complete, decide_equal, is_gsb
from .lie import hall_words, lie_bracket, lie_normal_form, witt_dimension
from .oracle import quotient_dimension
from .poly import make_monic, multiply
from .rewrite import RelationSet, format_position, normal_form
from .syntax import ParseError, parse_expression, parse_relations

__all__ = ["main", "run_command", "build_parser", "load_relations"]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if v <= 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {v}")
    return v


def load_relations(path: str, err=sys.stderr) -> RelationSet:
    """Read a relation file and monic-ize its members, warning on rescaling."""
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as e:
        raise UsageError(f"cannot read relations file {path}: {e.strerror or e}")
    try:
        polys = parse_relations(text)
    except ParseError as e:
        raise UsageError(f"{path}:{e.line}:{e.column}: {e.message}")
    for i, f in enumerate(polys, 1):
        if f and f.leading()[1] != 1:
            print(f"warning: relation {i} rescaled to {make_monic(f)}", file=err)
    return RelationSet.normalized(polys)


def _expr(text: str):
    try:
        return parse_expression(text)
    except ParseError as e:
        raise UsageError(f"cannot parse {text!r}: {e}")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="acgsb", description="Gröbner-Shirshov bases in free anti-commutative algebras")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("normalize", help="print an expression in canonical form")
    p.add_argument("expr")

    p = sub.add_parser("mul", help="product of two expressions")
    p.add_argument("left")
    p.add_argument("right")

    p = sub.add_parser("reduce", help="normal form modulo a relation file")
    p.add_argument("--relations", required=True)
    p.add_argument("expr")

    p = sub.add_parser("nf-lie", help="free Lie algebra normal form in the Hall basis")
    p.add_argument("expr")

    p = sub.add_parser("bracket", help="Lie bracket of two expressions in the Hall basis")
    p.add_argument("left")
    p.add_argument("right")

    p = sub.add_parser("hall", help="list Hall words")
    p.add_argument("--alphabet", type=_positive, required=True)
    p.add_argument("--max-degree", type=_positive, required=True)
    p.add_argument("--count-only", action="store_true")

    p = sub.add_parser("witt", help="free Lie algebra dimensions by degree")
    p.add_argument("--alphabet", type=_positive, required=True)
    p.add_argument("--max-degree", type=_positive, required=True)

    p = sub.add_parser("check-gsb", help="check that a relation file is a Gröbner-Shirshov basis")
    p.add_argument("--relations", required=True)

    p = sub.add_parser("complete", help="interreduce a relation file into a Gröbner-Shirshov basis")
    p.add_argument("--relations", required=True)

    p = sub.add_parser("decide", help="word problem: are two expressions equal modulo the relations")
    p.add_argument("--relations", required=True)
    p.add_argument("left")
    p.add_argument("right")

    p = sub.add_parser("dims", help="quotient dimensions per degree by linear algebra")
    p.add_argument("--relations", required=True)
    p.add_argument("--max-degree", type=_positive, required=True)
    p.add_argument("--alphabet", type=_positive)
    return ap


def run_command(argv: list[str], out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return _dispatch(args, out, err)
    except UsageError as e:
        print(str(e), file=err)
        return 2


def _dispatch(args, out, err) -> int:
    cmd = args.command
    if cmd == "normalize":
        print(_expr(args.expr), file=out)
    elif cmd == "mul":
        print(multiply(_expr(args.left), _expr(args.right)), file=out)
    elif cmd == "reduce":
        S = load_relations(args.relations, err)
        print(normal_form(_expr(args.expr), S), file=out)
    elif cmd == "nf-lie":
        print(lie_normal_form(_expr(args.expr)), file=out)
    elif cmd == "bracket":
        a = lie_normal_form(_expr(args.left))
        b = lie_normal_form(_expr(args.right))
        print(lie_bracket(a, b), file=out)
    elif cmd == "hall":
        k, n = args.alphabet, args.max_degree
        if args.count_only:
            print(" ".join(f"{d}:{len(hall_words(k, d))}" for d in range(1, n + 1)), file=out)
        else:
            for d in range(1, n + 1):
                for w in hall_words(k, d):
                    print(w, file=out)
    elif cmd == "witt":
        k, n = args.alphabet, args.max_degree
        print(" ".join(f"{d}:{witt_dimension(k, d)}" for d in range(1, n + 1)), file=out)
    elif cmd == "check-gsb":
        S = load_relations(args.relations, err)
        report = is_gsb(S)
        if report.ok:
            print("OK", file=out)
            return 0
        c = report.certificate
        print("NOT A GROEBNER-SHIRSHOV BASIS", file=out)
        print(f"relations: {c.f_index + 1} {c.g_index + 1}", file=out)
        print(f"word: {c.w}", file=out)
        print(f"position: {format_position(c.position)}", file=out)
        print(f"composition: {c.value}", file=out)
        print(f"normal form: {report.remainder}", file=out)
        return 1
    elif cmd == "complete":
        S = load_relations(args.relations, err)
        for r in complete(S):
            print(r, file=out)
    elif cmd == "decide":
        S = load_relations(args.relations, err)
        same = decide_equal(_expr(args.left), _expr(args.right), S)
        print("EQUAL" if same else "DIFFERENT", file=out)
        return 0 if same else 1
    elif cmd == "dims":
        S = load_relations(args.relations, err)
        k = args.alphabet
        if k is None:
            k = max(S.max_index(), 1)
        elif S.max_index() > k:
            raise UsageError("relations use generators beyond --alphabet")
        dims = quotient_dimension(S, args.max_degree, k)
        print(" ".join(f"{d}:{v}" for d, v in enumerate(dims, 1)), file=out)
    return 0


def main(argv=None) -> int:
    return run_command(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
