"""Command-line front end: ``p22 <subcommand> ...``.

Exit codes: 0 success or affirmative answer, 1 a P(2,2) witness was found,
2 the digraph is not extremal, 64 usage error, 65 input outside the supported
domain or malformed, 66 unreadable input file.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .audit import full_audit
from .constructions import (
    DomainError,
    Family,
    ParamsError,
    build_family,
    default_params,
    enumerate_params,
    ex_formula,
    remark_digraph,
)
from .detect import find_witness
from .digraph import Digraph, DigraphError
from .io import ParseError, decode_document, encode_dot, encode_json
from .recognizer import classify
from .search import (
    MAX_EXHAUSTIVE_ORDER,
    SearchConfig,
    max_free_branch_and_bound,
    max_free_exhaustive,
)

EXIT_OK = 0
EXIT_WITNESS = 1
EXIT_NOT_EXTREMAL = 2
EXIT_USAGE = 64
EXIT_DATA = 65
EXIT_NO_INPUT = 66


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}\n{self.format_usage()}")


def _parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="p22", description="Extremal P(2,2)-free digraphs.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("formula", help="print ex(n) for n >= 13")
    p.add_argument("n", type=int)

    p = sub.add_parser("build", help="emit a member of one of the families D1..D10")
    p.add_argument("family")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--c", type=int)
    p.add_argument("--v4", type=int)
    p.add_argument("--variant", choices=["a", "b"])
    p.add_argument("-o", "--output")
    p.add_argument("--format", choices=["json", "dot"], default="json")

    p = sub.add_parser("check", help="test a digraph for P(2,2)")
    p.add_argument("file")

    p = sub.add_parser("search", help="compute the maximum free size directly")
    p.add_argument("--n", type=int, required=True)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exhaustive", action="store_true")
    mode.add_argument("--bnb", action="store_true")
    p.add_argument("--seed-family", action="store_true")
    p.add_argument("--limit", type=int, help="node limit for branch-and-bound")

    p = sub.add_parser("recognize", help="decide membership in EX(n)")
    p.add_argument("file")

    p = sub.add_parser("audit", help="report the structural checks")
    p.add_argument("file")
    p.add_argument("--vertex", type=int, action="append")
    p.add_argument("--kv", action="store_true", help="key=value output")

    p = sub.add_parser("remark", help="emit the 12-arc free digraph of order 5")
    p.add_argument("-o", "--output")
    p.add_argument("--format", choices=["json", "dot"], default="json")
    return parser


def _read(path: str) -> tuple[Digraph, dict]:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise FileNotFoundError(f"{path}: {exc.strerror}") from None
    return decode_document(text)


def _emit(text: str, output: Optional[str]) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _render(D: Digraph, fmt: str, metadata: dict) -> str:
    return encode_dot(D) if fmt == "dot" else encode_json(D, metadata)


def _cmd_formula(args) -> int:
    print(ex_formula(args.n))
    return EXIT_OK


def _cmd_build(args) -> int:
    family = Family.parse(args.family)
    candidates = enumerate_params(family, args.n)
    if not candidates:
        raise DomainError(f"{family} has no members of order {args.n}")
    for key in ("c", "v4", "variant"):
        wanted = getattr(args, key)
        if wanted is not None:
            candidates = [p for p in candidates if getattr(p, key) == wanted]
    if not candidates:
        raise ParamsError(f"no {family} member of order {args.n} has those parameters")
    params = candidates[0]
    D = build_family(params)
    meta = {"family": str(family), "params": params.as_dict(), "provenance": "p22 build"}
    _emit(_render(D, args.format, meta), args.output)
    return EXIT_OK


def _cmd_check(args) -> int:
    D, _ = _read(args.file)
    witness = find_witness(D)
    if witness is None:
        print("FREE")
        return EXIT_OK
    print("P22 " + " ".join(map(str, witness)))
    return EXIT_WITNESS


def _cmd_search(args) -> int:
    exhaustive = args.exhaustive or (not args.bnb and args.n <= MAX_EXHAUSTIVE_ORDER)
    if exhaustive:
        if args.seed_family or args.limit is not None:
            raise UsageError("--seed-family and --limit apply to --bnb only")
        if not 1 <= args.n <= MAX_EXHAUSTIVE_ORDER:
            raise DomainError(f"exhaustive search supports 1 <= n <= {MAX_EXHAUSTIVE_ORDER}")
        result = max_free_exhaustive(args.n)
    else:
        seed = build_family(default_params(args.n)) if args.seed_family else None
        if args.limit is not None and args.limit <= 0:
            raise UsageError("--limit must be positive")
        result = max_free_branch_and_bound(
            SearchConfig(args.n, seed_digraph=seed, node_limit=args.limit)
        )
    print(result.summary())
    return EXIT_OK


def _cmd_recognize(args) -> int:
    D, _ = _read(args.file)
    verdict = classify(D)
    print(verdict)
    return EXIT_OK if verdict.is_member else EXIT_NOT_EXTREMAL


def _cmd_audit(args) -> int:
    D, _ = _read(args.file)
    for v in args.vertex or ():
        if not 0 <= v < D.n:
            raise DomainError(f"vertex {v} out of range for order {D.n}")
    report = full_audit(D, args.vertex)
    print(report.key_values() if args.kv else report.render())
    return EXIT_OK


def _cmd_remark(args) -> int:
    meta = {"provenance": "order-5 free digraph with 12 arcs"}
    _emit(_render(remark_digraph(), args.format, meta), args.output)
    return EXIT_OK


_COMMANDS = {
    "formula": _cmd_formula,
    "build": _cmd_build,
    "check": _cmd_check,
    "search": _cmd_search,
    "recognize": _cmd_recognize,
    "audit": _cmd_audit,
    "remark": _cmd_remark,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = _parser().parse_args(argv)
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        sys.stderr.write(str(exc) + ("" if str(exc).endswith("\n") else "\n"))
        return EXIT_USAGE
    except FileNotFoundError as exc:
        print(f"p22: {exc}", file=sys.stderr)
        return EXIT_NO_INPUT
    except (DomainError, ParamsError, ParseError, DigraphError, ValueError) as exc:
        print(f"p22: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
