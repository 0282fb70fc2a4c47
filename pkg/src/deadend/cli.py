"""Command line front end.

Exit status: 0 on success, 1 on usage, notation or budget errors, 2 when a
verification job finds a counterexample or an oracle disagrees.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Sequence

from . import factor as fac
from . import measures as ms
from .core import EndStore, format_end, parse
from .enumeration import Budget, census, generate_day, hasse_dot, verify_unique_factorisation
from .errors import DeadEndError, NotationError, Overflow, ZeroGame
from .oracle import GenStore, context_pool, distinguish, order_violations
from .order import canonical, compare, good_options

SCHEMA = "deadend/1"
VERBS = ("compare", "canon", "measure", "factor", "enum", "census", "verify", "hasse", "oracle")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


class Finding(Exception):
    """A verification failure worth reporting (exit status 2)."""


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=("text", "json", "dot", "tsv"), default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--budget-nodes", type=int, default=None)
    p.add_argument("--budget-seconds", type=float, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--oracle", action="store_true", help="force brute-force cross-checks")
    p.add_argument("-v", "--verbose", action="store_true")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="deadend", description="Left dead ends in misère play.")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = sub.add_parser("compare", parents=[common], help="order two games")
    p.add_argument("g")
    p.add_argument("h")

    p = sub.add_parser("canon", parents=[common], help="canonical form")
    p.add_argument("g")

    p = sub.add_parser("measure", parents=[common], help="terminal lengths, race, flexibility, options")
    p.add_argument("g")

    p = sub.add_parser("factor", parents=[common], help="divisors and factorisations")
    p.add_argument("g")

    p = sub.add_parser("enum", parents=[common], help="canonical ends born by day N")
    p.add_argument("--day", type=int, required=True)
    p.add_argument("--census", action="store_true")
    p.add_argument("--verify-unique", action="store_true")
    p.add_argument("--hasse", metavar="OUT.dot")
    p.add_argument("--plot", metavar="FIG", help="render the census or Hasse diagram to an image")

    p = sub.add_parser("census", parents=[common], help="counts of ends, atoms and molecules")
    p.add_argument("--day", type=int, required=True)
    p.add_argument("--max-day", type=int, default=5, help="largest day to generate in full")
    p.add_argument("--plot", metavar="FIG")

    p = sub.add_parser("verify", parents=[common], help="check unique factorisation by day N")
    p.add_argument("--day", type=int, required=True)

    p = sub.add_parser("hasse", parents=[common], help="Hasse diagram of day N as DOT")
    p.add_argument("--day", type=int, required=True)
    p.add_argument("--out", metavar="OUT.dot")
    p.add_argument("--plot", metavar="FIG")

    p = sub.add_parser("oracle", parents=[common], help="outcome-based checks")
    osub = p.add_subparsers(dest="action", required=True, parser_class=_Parser)
    q = osub.add_parser("distinguish", parents=[common])
    q.add_argument("g")
    q.add_argument("h")
    q = osub.add_parser("sample", parents=[common], help="look for contexts contradicting the order")
    q.add_argument("g")
    q.add_argument("h")
    q.add_argument("--contexts", type=int, default=200)
    q.add_argument("--depth", type=int, default=4)
    return parser


def _dump(obj: dict) -> str:
    return json.dumps({"schema": SCHEMA, **obj}, sort_keys=True)


def _budget(args) -> Budget:
    return Budget(nodes=args.budget_nodes, seconds=args.budget_seconds)


def _names(ids, s: EndStore) -> list[str]:
    return [format_end(x, s) for x in ids]


def cmd_compare(args, s: EndStore, out) -> None:
    g, h = parse(args.g, s), parse(args.h, s)
    rel = compare(g, h, s)
    if args.format == "json":
        out.write(_dump({"g": format_end(g, s), "h": format_end(h, s), "relation": rel}) + "\n")
    else:
        out.write(f"G {rel} H\n")


def cmd_canon(args, s: EndStore, out) -> None:
    g = canonical(parse(args.g, s), s)
    if args.format == "json":
        out.write(_dump({"game": args.g, "canonical": format_end(g, s)}) + "\n")
    else:
        out.write(format_end(g, s) + "\n")


def measure_record(g: int, s: EndStore) -> dict:
    t = ms.terminal_set(g, s)

    def maybe(fn):
        try:
            return _names(fn(g, s), s)
        except ZeroGame:
            return []

    return {
        "game": format_end(g, s),
        "terminal": t.lengths(),
        "race": t.min(),
        "birthday": t.max(),
        "flex": ms.flex(g, s),
        "integer": len(t) == 1,
        "good": _names(good_options(g, s), s),
        "racing": maybe(ms.racing_options),
        "stalling": maybe(ms.stalling_options),
        "versatile": maybe(ms.versatile_options),
    }


def cmd_measure(args, s: EndStore, out) -> None:
    rec = measure_record(parse(args.g, s), s)
    if args.format == "text":
        for key in ("game", "terminal", "race", "birthday", "flex", "integer", "good", "racing", "stalling", "versatile"):
            out.write(f"{key}\t{rec[key]}\n")
    else:
        out.write(_dump(rec) + "\n")


def factor_record(rep: fac.FactorReport, s: EndStore) -> dict:
    return {
        "target": format_end(rep.target, s),
        "divisors": _names(rep.divisors, s),
        "factorisations": [_names(f, s) for f in rep.factorisations],
        "longest": rep.longest,
        "bound": rep.bound,
        "unique": rep.unique,
        "atom_rule": rep.atom_rule,
        "uniqueness_rules": rep.uniqueness_rules,
        "oracle_checked": rep.oracle_checked,
    }


def cmd_factor(args, s: EndStore, out) -> None:
    g = parse(args.g, s)
    try:
        rep = fac.factor_report(g, s, oracle=args.oracle)
    except AssertionError as exc:
        raise Finding(str(exc)) from exc
    rec = factor_record(rep, s)
    if args.format == "text":
        out.write("target\t%s\n" % rec["target"])
        for f in rec["factorisations"]:
            out.write("factorisation\t%s\n" % " + ".join(f) if f else "factorisation\t0\n")
        out.write("longest\t%d\nbound\t%d\nunique\t%s\n" % (rec["longest"], rec["bound"], rec["unique"]))
    else:
        out.write(_dump(rec) + "\n")
    if not rep.unique:
        raise Finding(f"{rec['target']} has {len(rep.factorisations)} factorisations")


CENSUS_HEADER = ("day", "ends", "atoms", "molecules", "nontrivial_molecules")


def _census_rows(day: int, max_day: int, args, s: EndStore):
    budget = _budget(args)
    return [census(n, s, max_day=max_day, jobs=args.jobs, budget=budget) for n in range(day + 1)]


def _write_census(rows, out) -> None:
    out.write("\t".join(CENSUS_HEADER) + "\n")
    for r in rows:
        out.write("\t".join(r.cells()) + "\n")


def cmd_census(args, s: EndStore, out) -> None:
    rows = _census_rows(args.day, args.max_day, args, s)
    if args.format == "json":
        out.write(_dump({"census": [dict(zip(CENSUS_HEADER, r.cells())) for r in rows]}) + "\n")
    else:
        _write_census(rows, out)
    if args.plot:
        from .plotting import census_figure

        census_figure(rows, args.plot)


def _verify(day: int, args, s: EndStore, out) -> None:
    rep = verify_unique_factorisation(day, s, jobs=args.jobs, budget=_budget(args))
    out.write(f"verified\t{rep.checked}\tday\t{day}\tcounterexamples\t{len(rep.counterexamples)}\n")
    for g, facts in rep.counterexamples:
        out.write("counterexample\t%s\t%s\n" % (format_end(g, s), " | ".join(" + ".join(_names(f, s)) for f in facts)))
    if not rep.all_unique:
        raise Finding(f"{len(rep.counterexamples)} games without unique factorisation")


def cmd_verify(args, s: EndStore, out) -> None:
    _verify(args.day, args, s, out)


def cmd_hasse(args, s: EndStore, out) -> None:
    text = hasse_dot(args.day, s, jobs=args.jobs, budget=_budget(args))
    if args.out:
        Path(args.out).write_text(text)
    else:
        out.write(text)
    if args.plot:
        from .plotting import hasse_figure

        hasse_figure(generate_day(args.day, s), args.plot, labels=args.day <= 4)


def cmd_enum(args, s: EndStore, out) -> None:
    poset = generate_day(args.day, s, jobs=args.jobs, budget=_budget(args))
    if args.format == "json":
        out.write(_dump({"day": args.day, "games": _names(poset.games, s)}) + "\n")
    elif not (args.census or args.verify_unique):
        out.write(f"day\t{args.day}\tends\t{len(poset.games)}\n")
        for g in poset.games:
            out.write(format_end(g, s) + "\n")
    if args.census:
        rows = _census_rows(args.day, max(args.day, 5), args, s)
        _write_census(rows, out)
        if args.plot:
            from .plotting import census_figure

            census_figure(rows, args.plot)
    if args.hasse:
        Path(args.hasse).write_text(hasse_dot(args.day, s))
        if args.plot and not args.census:
            from .plotting import hasse_figure

            hasse_figure(poset, args.plot, labels=args.day <= 4)
    if args.verify_unique:
        _verify(args.day, args, s, out)


def cmd_oracle(args, s: EndStore, out) -> None:
    g, h = parse(args.g, s), parse(args.h, s)
    gen = GenStore()
    if args.action == "distinguish":
        w = distinguish(g, h, s, gen)
        if w is None:
            out.write("indistinguishable by terminal lengths\n")
        else:
            out.write(f"n\t{w.length}\nG+C_n\t{w.outcome_g}\nH+C_n\t{w.outcome_h}\n")
        return
    pool = context_pool(args.contexts, args.depth, args.seed, gen)
    bad = order_violations(g, h, pool, s, gen)
    out.write(f"contexts\t{len(pool)}\tseed\t{args.seed}\tviolations\t{len(bad)}\n")
    for x in bad[:10]:
        out.write("context\t%s\n" % gen.format(x))
    if bad and compare(g, h, s) in (">", "="):
        raise Finding("sampled contexts contradict G >= H")


COMMANDS = {
    "compare": cmd_compare,
    "canon": cmd_canon,
    "measure": cmd_measure,
    "factor": cmd_factor,
    "enum": cmd_enum,
    "census": cmd_census,
    "verify": cmd_verify,
    "hasse": cmd_hasse,
    "oracle": cmd_oracle,
}


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        err.write(f"deadend: {exc}\n")
        return 1
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))
    store = EndStore()
    try:
        COMMANDS[args.verb](args, store, out)
    except Finding as exc:
        err.write(f"deadend: finding: {exc}\n")
        return 2
    except NotationError as exc:
        err.write(f"deadend: {exc}\n")
        return 1
    except Overflow as exc:
        err.write(f"deadend: {exc}; progress {json.dumps(exc.progress, sort_keys=True)}\n")
        return 1
    except DeadEndError as exc:
        err.write(f"deadend: {exc}\n")
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
