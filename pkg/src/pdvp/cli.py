"""Command-line front end.

Subcommands: match, dist, avoid, gf, verify, problem.  Patterns are written
in the pipe notation ("12|P,{2},P|(1,2,{2})|P,P") or as dashed patterns with
a "gp:" prefix ("gp:2-31").  Sequences are whitespace- or comma-separated
integers, so lengths above 9 work.  All numeric output is rendered as decimal
strings; values can exceed 64 bits.

The PDVP_BUDGET environment variable caps enumeration sizes: it bounds the
number of words scanned directly, and bounds permutation scans by the largest
n with n! within the budget.

Exit codes: 0 on success (verify: all checks pass), 1 when a verify check
fails, 2 on usage or pattern parse errors.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from math import factorial

from . import checks, exhaustive, problems, transfer
from .dsl import ParseError, parse_gp, parse_pattern, render_pattern
from .matcher import PermSequence, WordSequence, iter_occurrences
from .pattern import Mode, Pdvp


def _parse_any_pattern(text: str, mode: Mode) -> Pdvp:
    if text.startswith("gp:"):
        return parse_gp(text[3:], mode)
    return parse_pattern(text, mode)


def _parse_ints(text: str) -> tuple[int, ...]:
    toks = [tok for tok in re.split(r"[,\s]+", text.strip()) if tok]
    return tuple(int(tok) for tok in toks)


def _budgets() -> tuple[int | None, int | None]:
    """(perm scan limit, word scan budget) from PDVP_BUDGET, if set."""
    raw = os.environ.get("PDVP_BUDGET")
    if not raw:
        return None, None
    budget = int(raw)
    n = 0
    while factorial(n + 1) <= budget:
        n += 1
    return n, budget


def _emit(args, text: str, json_obj) -> None:
    payload = json.dumps(json_obj, indent=2) if args.format == "json" else text
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(payload + "\n")
    else:
        print(payload)


def _table_json(table: exhaustive.DistributionTable) -> dict:
    return {
        "n": table.length,
        "entries": {str(m): str(table.counts[m]) for m in sorted(table.counts)},
    }


def _zpoly_text(row: dict[int, int]) -> str:
    if not row:
        return "0"
    parts = []
    for j in sorted(row):
        c = row[j]
        if j == 0:
            parts.append(str(c))
        elif j == 1:
            parts.append(f"{c}*z" if c != 1 else "z")
        else:
            parts.append(f"{c}*z^{j}" if c != 1 else f"z^{j}")
    return " + ".join(parts)


def _cmd_match(args) -> int:
    mode = Mode.PERMUTATION if args.perm is not None else Mode.WORD
    pat = _parse_any_pattern(args.pattern, mode)
    if args.perm is not None:
        seq = PermSequence(_parse_ints(args.perm))
    else:
        seq = WordSequence(_parse_ints(args.word), args.alphabet)
    occs = list(iter_occurrences(pat, seq))
    lines = []
    for occ in occs:
        idx = ",".join(str(i) for i in occ.indices)
        vals = ",".join(str(v) for v in occ.values(seq))
        lines.append(f"({idx}) -> ({vals})")
    obj = {
        "pattern": render_pattern(pat),
        "n": len(seq.entries),
        "occurrences": [
            {
                "indices": list(occ.indices),
                "values": [str(v) for v in occ.values(seq)],
            }
            for occ in occs
        ],
    }
    _emit(args, "\n".join(lines) if lines else "no occurrences", obj)
    return 0


def _cmd_dist(args) -> int:
    limit, budget = _budgets()
    if args.perm_n is not None:
        pat = _parse_any_pattern(args.pattern, Mode.PERMUTATION)
        table = exhaustive.perm_distribution(pat, args.perm_n, limit=limit)
    else:
        pat = _parse_any_pattern(args.pattern, Mode.WORD)
        table = exhaustive.word_distribution(pat, args.alphabet, args.word_n, budget=budget)
    lines = [f"{m} {table.counts[m]}" for m in sorted(table.counts)]
    _emit(args, "\n".join(lines), _table_json(table))
    return 0


def _cmd_avoid(args) -> int:
    texts = list(args.pattern or [])
    if args.patterns:
        with open(args.patterns, encoding="utf-8") as fh:
            texts.extend(
                line.strip() for line in fh if line.strip() and not line.startswith("#")
            )
    limit, budget = _budgets()
    if args.perm_n is not None:
        pats = [_parse_any_pattern(t, Mode.PERMUTATION) for t in texts]
        n = args.perm_n
        count = exhaustive.perm_multi_avoiders(pats, n, limit=limit)
    else:
        pats = [_parse_any_pattern(t, Mode.WORD) for t in texts]
        n = args.word_n
        count = exhaustive.word_multi_avoiders(pats, args.alphabet, n, budget=budget)
    obj = {"n": n, "patterns": [render_pattern(p) for p in pats], "avoiders": str(count)}
    _emit(args, str(count), obj)
    return 0


def _cmd_gf(args) -> int:
    pat = _parse_any_pattern(args.pattern, Mode.WORD)
    sp = transfer.StatPattern(pat)
    if args.solve:
        gf = transfer.solve_transfer_system(sp, args.alphabet)
        text = f"({gf.num!r}) / ({gf.den!r})"
        _emit(args, text, gf.to_json_obj())
    else:
        table = transfer.dp_series(sp, args.alphabet, args.max_n)
        lines = [f"q^{n}: {_zpoly_text(table.z_poly(n))}" for n in range(table.n_max + 1)]
        _emit(args, "\n".join(lines), table.to_json_obj())
    return 0


def _cmd_verify(args) -> int:
    if args.check in (None, "all"):
        results = checks.run_all()
    else:
        try:
            results = [checks.run_check(args.check)]
        except KeyError as exc:
            print(f"error: {exc.args[0]}", file=sys.stderr)
            return 2
    detail = args.check not in (None, "all")
    lines = []
    for res in results:
        lines.append(f"{'PASS' if res.ok else 'FAIL'} {res.name}")
        if detail or not res.ok:
            lines.extend(res.lines)
    all_ok = all(res.ok for res in results)
    obj = {
        "checks": [{"name": r.name, "ok": r.ok, "lines": r.lines} for r in results],
        "all_ok": all_ok,
    }
    _emit(args, "\n".join(lines), obj)
    return 0 if all_ok else 1


def _cmd_problem(args) -> int:
    report = problems.problem_report(args.which, args.max_size)
    _emit(args, report.to_text(), report.to_json_obj())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pdvp", description=__doc__.split("\n\n")[0])
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--out", help="write output to this path instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("match", help="list pattern occurrences in one sequence")
    p.add_argument("--pattern", required=True)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--perm", help="permutation, e.g. '2 3 1 5 4'")
    g.add_argument("--word", help="word letters, e.g. '1 3 2 3 1'")
    p.add_argument("--alphabet", type=int, help="alphabet size for --word")
    p.set_defaults(func=_cmd_match)

    p = sub.add_parser("dist", help="occurrence-count distribution over S_n or {1..t}^n")
    p.add_argument("--pattern", required=True)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--perm-n", type=int)
    g.add_argument("--word-n", type=int)
    p.add_argument("--alphabet", type=int)
    p.set_defaults(func=_cmd_dist)

    p = sub.add_parser("avoid", help="count objects avoiding every listed pattern")
    p.add_argument("--pattern", action="append", help="repeatable pattern flag")
    p.add_argument("--patterns", help="file with one pattern per line")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--perm-n", type=int)
    g.add_argument("--word-n", type=int)
    p.add_argument("--alphabet", type=int)
    p.set_defaults(func=_cmd_avoid)

    p = sub.add_parser("gf", help="series table (--dp) or solved rational form (--solve)")
    p.add_argument("--pattern", required=True)
    p.add_argument("--alphabet", type=int, required=True)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--dp", action="store_true")
    g.add_argument("--solve", action="store_true")
    p.add_argument("--max-n", type=int, default=10)
    p.set_defaults(func=_cmd_gf)

    p = sub.add_parser("verify", help="run the named verification checks")
    p.add_argument("--check", default="all", help=f"one of: {', '.join(checks.CHECKS)}, or all")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("problem", help="equinumerosity report for one open question")
    p.add_argument("--which", type=int, required=True, choices=(1, 2, 3, 4))
    p.add_argument("--max-size", type=int, default=8)
    p.set_defaults(func=_cmd_problem)
    return parser


def _validate(parser: argparse.ArgumentParser, args) -> None:
    needs_alphabet = (
        getattr(args, "word", None) is not None
        or getattr(args, "word_n", None) is not None
        or args.command == "gf"
    )
    if needs_alphabet and getattr(args, "alphabet", None) is None:
        parser.error("--alphabet is required for word input")
    if args.command == "avoid" and not (args.pattern or args.patterns):
        # an empty pattern list is legal (counts everything); require explicit intent
        args.pattern = []


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _validate(parser, args)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"pattern parse error {exc}", file=sys.stderr)
        return 2
    except (exhaustive.EnumerationLimitError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
