"""
Command-line front end.

Exit codes: 0 on success, 1 when a check fails, 2 on usage or parse errors.
With ``--json`` all machine output goes to stdout as JSON.
"""
from __future__ import annotations

import argparse
import dataclasses
import json
import logging
import sys
import time

from .braid import BraidWord, hecke_image
from .cache import load_cache, store_cache
from .expr import ExpressionError, evaluate
from .hecke import KLConsistencyError, KLTable, to_c_basis
from .kops import NonExactDivision, WeightLaurent, hecke_action, poincare, steinberg_summary
from .rootdata import CartanDatum, CartanError, build_cartan, generate_roots
from .suites import SUITES, Check, run_suites
from .weyl import all_elements, bruhat_leq, format_word, from_word, parse_word

log = logging.getLogger("heckebraid")


class UsageError(Exception):
    pass


@dataclasses.dataclass
class RunReport:
    command: str
    cartan: str
    checks: list[Check]
    timing_ms: float = 0.0
    seed: int | None = None

    @property
    def ok(self) -> bool:
        return all(ch.ok for ch in self.checks)

    def to_json(self) -> dict:
        return {
            "command": self.command,
            "cartan": self.cartan,
            "status": "pass" if self.ok else "fail",
            "seed": self.seed,
            "checks": [ch.to_json() for ch in sorted(self.checks, key=lambda ch: ch.name)],
            "timing_ms": round(self.timing_ms, 3),
        }

    def render(self) -> str:
        lines = [f"{self.command} {self.cartan}: {'PASS' if self.ok else 'FAIL'} ({len(self.checks)} checks)"]
        for ch in sorted(self.checks, key=lambda ch: ch.name):
            lines.append(f"  [{'pass' if ch.ok else 'FAIL'}] {ch.name}  {ch.detail}")
        return "\n".join(lines)


def _cartan(args) -> CartanDatum:
    spec = args.type
    if spec is None:
        if not args.positional:
            raise UsageError("missing Cartan type (positional or --type/-t)")
        spec = args.positional.pop(0)
    try:
        return build_cartan(spec)
    except CartanError as exc:
        raise UsageError(str(exc)) from None


def _word(c: CartanDatum, text: str):
    try:
        return from_word(c, parse_word(text))
    except (ValueError, IndexError) as exc:
        raise UsageError(f"bad word {text!r}: {exc}") from None


def _emit(args, payload, human: str) -> None:
    if args.json:
        json.dump(payload, sys.stdout, sort_keys=False)
        sys.stdout.write("\n")
    else:
        print(human)


def _table(c: CartanDatum, args) -> KLTable:
    table = KLTable(c)
    if args.cache:
        table, stats = load_cache(args.cache, c, table)
        log.info("loaded %d KL records (%d corrupt skipped)", stats.loaded, stats.corrupt)
    return table


def cmd_kl(args) -> int:
    c = _cartan(args)
    t0 = time.perf_counter()
    table = _table(c, args)
    rest = args.positional
    if args.all:
        if rest:
            raise UsageError("--all takes no words")
        elements = all_elements(c)
        pairs = [(y, w) for w in elements for y in elements if y != w and bruhat_leq(y, w)]
    else:
        if len(rest) != 2:
            raise UsageError("kl needs a y-word and a w-word, or --all")
        pairs = [(_word(c, rest[0]), _word(c, rest[1]))]
    rows = []
    checks = []
    try:
        for y, w in pairs:
            rows.append((y, w, table.polynomial(y, w)))
        # detail must not depend on cache state, so report the columns used, not the columns recomputed
        checks.append(Check("kl_consistency", True, f"{len({w for _, w in pairs})} basis elements verified"))
        log.info("computed %d basis elements, %d cache hits", table.computed, table.cache_hits)
    except KLConsistencyError as exc:
        checks.append(Check("kl_consistency", False, str(exc)))
    neg = [r for r in rows if any(v < 0 for v in r[2].terms.values())]
    checks.append(Check("kl_positivity", not neg, f"{len(rows)} polynomials"))
    if args.cache:
        store_cache(table, args.cache)
    report = RunReport("kl", c.key, checks, (time.perf_counter() - t0) * 1e3, args.seed)
    payload = {
        "report": report.to_json(),
        "table": [{"y": format_word(y.word), "w": format_word(w.word), "poly": p.to_json()} for y, w, p in rows],
    }
    human = "\n".join(
        [f"{'y':>20} {'w':>20}  P_(y,w)"]
        + [f"{format_word(y.word) or 'e':>20} {format_word(w.word) or 'e':>20}  {p}" for y, w, p in rows]
        + [report.render()]
    )
    _emit(args, payload, human)
    return 0 if report.ok else 1


def cmd_verify(args) -> int:
    c = _cartan(args)
    if args.positional:
        raise UsageError(f"unexpected arguments {args.positional}")
    names = list(SUITES) if args.suite == "all" else [args.suite]
    t0 = time.perf_counter()
    checks = run_suites(c, names, args.seed)
    report = RunReport(f"verify:{args.suite}", c.key, checks, (time.perf_counter() - t0) * 1e3, args.seed)
    _emit(args, report.to_json(), report.render())
    return 0 if report.ok else 1


def cmd_mult(args) -> int:
    c = _cartan(args)
    if len(args.positional) != 1:
        raise UsageError("mult needs exactly one expression")
    table = _table(c, args)
    try:
        h = evaluate(args.positional[0], c, table)
    except ExpressionError as exc:
        raise UsageError(str(exc)) from None
    if args.c_basis:
        coeffs = to_c_basis(h, table)
        terms = sorted(coeffs.items(), key=lambda kv: (kv[0].length, kv[0].word))
        payload = {
            "cartan": c.key,
            "basis": "C",
            "terms": [{"w": format_word(w.word), "poly": p.to_json()} for w, p in terms],
        }
        human = " + ".join(f"({p})*C[{format_word(w.word)}]" for w, p in terms) or "0"
    else:
        payload = h.to_json()
        human = str(h)
    if args.cache:
        store_cache(table, args.cache)
    _emit(args, payload, human)
    return 0


def cmd_dl(args) -> int:
    c = _cartan(args)
    rest = args.positional
    if not 1 <= len(rest) <= 2:
        raise UsageError("dl needs a braid word and an optional weight-Laurent JSON file")
    try:
        b = BraidWord.parse(c, rest[0])
    except (ValueError, IndexError) as exc:
        raise UsageError(str(exc)) from None
    if len(rest) == 2:
        try:
            with open(rest[1], encoding="utf-8") if rest[1] != "-" else sys.stdin as fh:
                f = WeightLaurent.from_json(json.load(fh))
        except (OSError, ValueError, KeyError, TypeError, CartanError) as exc:
            raise UsageError(f"cannot read weight-Laurent file {rest[1]!r}: {exc}") from None
        if f.cartan != c:
            raise UsageError(f"file is over {f.cartan.key}, expected {c.key}")
    else:
        f = WeightLaurent.one(c)
    try:
        out = hecke_action(hecke_image(b), f)
    except NonExactDivision as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 1
    _emit(args, out.to_json(), str(out))
    return 0


def cmd_roots(args) -> int:
    c = _cartan(args)
    rs = generate_roots(c)
    _emit(args, rs.to_json(), "\n".join(" ".join(map(str, r)) for r in rs.roots))
    return 0


def cmd_poincare(args) -> int:
    c = _cartan(args)
    p = poincare(c)
    _emit(args, p.to_json(), str(p))
    return 0


def cmd_steinberg(args) -> int:
    c = _cartan(args)
    s = steinberg_summary(c)
    human = (
        f"{c.key}: {s.num_components} components of dimension {s.component_dim}; "
        f"flag variety dimension {s.flag_dim}"
    )
    _emit(args, s.to_json(), human)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-t", "--type", help="Cartan spec: e.g. A3, G2, or a JSON integer matrix")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized suites")
    common.add_argument("--cache", help="KL cache file (JSON lines)")
    common.add_argument("--json", action="store_true", help="machine-readable output on stdout")
    common.add_argument("--c-basis", action="store_true", help="mult: print the result in the KL basis")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="heckebraid", description=__doc__.strip().splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("kl", parents=[common], help="Kazhdan-Lusztig polynomials")
    p.add_argument("positional", nargs="*", metavar="ARG", help="[TYPE] [Y-WORD W-WORD]")
    p.add_argument("--all", action="store_true", help="every pair y < w")
    p.set_defaults(func=cmd_kl)

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("positional", nargs="*", metavar="TYPE")
    p.add_argument("--suite", choices=[*SUITES, "all"], default="all")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("mult", parents=[common], help="evaluate a Hecke-algebra expression")
    p.add_argument("positional", nargs="*", metavar="ARG", help="[TYPE] EXPR")
    p.set_defaults(func=cmd_mult)

    p = sub.add_parser("dl", parents=[common], help="apply a braid word through Demazure-Lusztig operators")
    p.add_argument("positional", nargs="*", metavar="ARG", help="[TYPE] WORD [FILE]")
    p.set_defaults(func=cmd_dl)

    for name, func, text in [
        ("roots", cmd_roots, "list the roots"),
        ("poincare", cmd_poincare, "Poincare polynomial of G/B"),
        ("steinberg", cmd_steinberg, "Steinberg variety summary"),
    ]:
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("positional", nargs="*", metavar="TYPE")
        p.set_defaults(func=func)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return 2
    except OverflowError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
