"""Command line: ``tqa verify SUITE ...``, ``tqa algebra dump ...``, ``tqa nf ...``."""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .algebras import build
from .coeff_ring import ParseError
from .nc_engine import NonTermination, dump_element, parse_element, word_text
from .report import Report
from .suites import SUITES, Params, UsageError, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_NONTERM = 0, 1, 2, 3

SMOKE_PLAN = [
    ("defrel", dict(family="o")), ("defrel", dict(family="gl")), ("defrel", dict(family="sp", n=1)),
    ("confluence", {}), ("braid-o", {}), ("braid-gl", {}), ("symmetries", {}), ("sp-probes", {}),
    ("gamma2", {}), ("poisson", {}), ("poisson", dict(family="sp")), ("casimir", {}),
    ("casimir", dict(family="sp")), ("tensor", {}), ("tensor", dict(family="sp")), ("limit", {}),
]


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="tqa", description="Exact verification of twisted quantized enveloping algebras.")
    p.add_argument("--version", action="version", version=f"tqa {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    v = sub.add_parser("verify", help="run a verification suite and print a JSON report")
    v.add_argument("suite", choices=SUITES + ("all",))
    v.add_argument("--family", choices=("o", "sp", "gl"))
    v.add_argument("--n", type=int)
    v.add_argument("--set", dest="set_")
    v.add_argument("--suite", dest="part")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--out")
    v.add_argument("--budget", choices=("normal", "big"), default="normal")
    v.add_argument("--smoke", action="store_true")
    v.add_argument("--extend-2143", action="store_true")
    v.add_argument("--timing", action="store_true", help="record elapsed_ms per check")

    a = sub.add_parser("algebra", help="inspect an algebra")
    a.add_argument("action", choices=("dump",))
    a.add_argument("--family", choices=("o", "sp", "gl"), required=True)
    a.add_argument("--n", type=int, required=True)
    a.add_argument("--out")

    nf = sub.add_parser("nf", help="normal form of an expression")
    nf.add_argument("expression")
    nf.add_argument("--family", choices=("o", "sp", "gl"), required=True)
    nf.add_argument("--n", type=int, required=True)
    return p


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _verify(args) -> int:
    params = Params(family=args.family, n=args.n, set=args.set_, suite=args.part, seed=args.seed,
                    budget=args.budget, smoke=args.smoke, extend_2143=args.extend_2143, timing=args.timing)
    if args.suite == "all":
        if not args.smoke:
            raise UsageError("verify all requires --smoke")
        rep = Report("all", params={"smoke": True}, seed=args.seed, timing=args.timing)
        for name, over in SMOKE_PLAN:
            sub = Params(**{**params.__dict__, "family": None, "n": None, "set": None, "suite": None, **over})
            part = run_suite(name, sub)
            rep.extend(part, prefix=f"{name}:{part.family}{part.params.get('n', '')}:")
    else:
        rep = run_suite(args.suite, params)
    _emit(rep.to_json(__version__), args.out)
    return EXIT_OK if rep.ok else EXIT_FAIL


def _dump(args) -> int:
    alg = build(args.family, args.n)
    lines = [f"# {alg.name}", "# generators: " + " ".join(word_text((g,)) for g in alg.generators)]
    for left, right in alg.rule_table():
        lines.append(f"{word_text(left)} -> {dump_element(right) or '0'}")
    _emit("\n".join(lines), args.out)
    return EXIT_OK


def _nf(args) -> int:
    alg = build(args.family, args.n)
    e = parse_element(args.expression, alg)
    print(dump_element(e.normal_form()) or "0")
    return EXIT_OK


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            return _verify(args)
        if args.command == "algebra":
            return _dump(args)
        return _nf(args)
    except (UsageError, ParseError, ValueError) as exc:
        print(f"tqa: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NonTermination as exc:
        print(json.dumps({"error": "non-termination", "word": word_text(exc.word), "steps": exc.steps}),
              file=sys.stderr)
        return EXIT_NONTERM


if __name__ == "__main__":
    sys.exit(main())
