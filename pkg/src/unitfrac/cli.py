"""Command line front end.

Exit codes: 0 on success, 1 when a verification or cross-check fails on
well-formed input, 2 for malformed input or internal errors.  Output is
deterministic: the same invocation produces identical bytes.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
from collections import Counter
from fractions import Fraction
from typing import Optional

from .construct import TargetSequence, construct
from .diagnostics import DEFAULT_T_GRID, classify
from .families import parse_family_spec, theta_partial, verify_bracket
from .greedy import (
    IndexSet,
    ReplayOverrunError,
    WgaaPolicy,
    recover_shadow,
    telescoping_interval,
    wgaa_expand,
)
from .rational import format_rational, parse_rational
from .uniqueness import (
    necessary_uniqueness,
    pair_necessary_closed,
    pair_uniqueness,
    sample_pairs,
    sufficient_uniqueness,
    sweep,
    uniqueness_consequences,
)

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2


def _read_sequence_file(path: str) -> list[int]:
    """One decimal integer per line; blank or non-integer lines reject."""
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise ValueError(f"cannot read {path}: {exc}")
    values = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            raise ValueError(f"{path}:{lineno}: blank line")
        try:
            values.append(int(line))
        except ValueError:
            raise ValueError(f"{path}:{lineno}: not an integer: {line!r}")
    if not values:
        raise ValueError(f"{path}: empty sequence file")
    return values


def _print_json(doc) -> None:
    print(json.dumps(doc, indent=2))


def _print_csv(header, rows) -> None:
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)


def _print_table(header, rows) -> None:
    cells = [header] + [[str(c) for c in row] for row in rows]
    widths = [max(len(row[i]) for row in cells)
              for i in range(len(header))]
    for row in cells:
        print("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())


def _parse_t_grid(text: str):
    grid = []
    for token in text.split(","):
        t = parse_rational(token.strip())
        if t < 1:
            raise ValueError("weakness levels must be at least 1")
        grid.append(t)
    if not grid:
        raise ValueError("empty weakness grid")
    return tuple(grid)


# ---------------------------------------------------------------- commands

def _cmd_expand(args) -> int:
    theta = parse_rational(args.theta)
    t = parse_rational(args.t)
    lam = IndexSet.parse(args.lam)
    selection = args.selection or ("greedy" if t == 1 else "ceil-t-a")
    policy = WgaaPolicy(t=t, lam=lam, selection=selection)
    run = wgaa_expand(theta, policy, args.terms,
                      last_greedy=args.last_greedy)
    if args.format == "json":
        _print_json(run.to_json_dict())
        return EXIT_OK
    rows = [(n + 1, run.a[n], run.b[n], format_rational(run.residuals[n]))
            for n in range(len(run.a))]
    if args.format == "csv":
        _print_csv(("index", "a", "b", "residual"), rows)
    else:
        _print_table(["n", "a", "b", "residual"], rows)
    return EXIT_OK


def _cmd_verify(args) -> int:
    b_values = _read_sequence_file(args.b_file)
    theta = parse_rational(args.theta)
    doc = {
        "ok": False,
        "theta": format_rational(theta),
        "n-terms": len(b_values),
        "a": [],
        "b": list(b_values),
        "first-weak-violation": None,
        "overrun-at": None,
        "bracket-checked": args.bracket,
        "bracket-failures": [],
    }
    try:
        replay = recover_shadow(b_values, theta)
    except ReplayOverrunError as exc:
        doc["overrun-at"] = exc.index
        if args.format == "json":
            _print_json(doc)
        else:
            print(f"FAIL: partial sums exhaust theta at index {exc.index}")
        return EXIT_VERIFY

    failures: list[int] = []
    if args.bracket:
        for i in range(len(replay.a) - 1):
            if replay.a[i + 1] > replay.a[i]:
                window = telescoping_interval(replay.a[i], replay.a[i + 1])
                if not window.contains(Fraction(b_values[i])):
                    failures.append(i + 1)
    ok = replay.first_weak_violation is None and not failures
    doc.update({
        "ok": ok,
        "a": list(replay.a),
        "first-weak-violation": replay.first_weak_violation,
        "bracket-failures": failures,
    })
    if args.format == "json":
        _print_json(doc)
    else:
        rows = [(n + 1, replay.a[n], b_values[n],
                 format_rational(replay.residuals[n]))
                for n in range(len(b_values))]
        if args.format == "csv":
            _print_csv(("index", "a", "b", "residual"), rows)
        else:
            _print_table(["n", "a", "b", "residual"], rows)
            if ok:
                print("OK")
            elif replay.first_weak_violation is not None:
                print(f"FAIL: b below the greedy shadow at index "
                      f"{replay.first_weak_violation}")
            else:
                print(f"FAIL: bracket misses at {failures}")
    return EXIT_OK if ok else EXIT_VERIFY


def _cmd_construct(args) -> int:
    if (args.a_file is None) == (args.family is None):
        print("error: give exactly one of --a-file or --family",
              file=sys.stderr)
        return EXIT_USAGE
    if args.family is not None and args.repeat_last_delta:
        print("error: --repeat-last-delta applies only to --a-file",
              file=sys.stderr)
        return EXIT_USAGE
    if args.a_file is not None:
        values = _read_sequence_file(args.a_file)
        rule = "repeat-last-delta" if args.repeat_last_delta else None
        seq = TargetSequence.from_explicit(values, rule)
    else:
        seq = TargetSequence.from_family(parse_family_spec(args.family))
    result = construct(seq, args.depth, horizon=args.horizon)
    if args.format == "json":
        _print_json(result.to_json_dict())
        return EXIT_OK
    rows = [(c.index, result.a_prefix[c.index - 1],
             result.b_prefix[c.index - 1],
             format_rational(c.lower_margin), format_rational(c.upper_margin))
            for c in result.certificates]
    if args.format == "csv":
        _print_csv(("index", "a", "b", "lower-margin", "upper-margin"), rows)
        return EXIT_OK
    iv = result.theta_enclosure
    print(f"jumps {list(result.jump_indices)}, next jump at "
          f"{result.next_jump_index} to {result.next_jump_value}")
    print(f"theta enclosure ({format_rational(iv.lo)}, "
          f"{format_rational(iv.hi)})")
    print(f"future filler bound {format_rational(result.future_filler_bound)}")
    _print_table(["n", "a", "b", "lower-margin", "upper-margin"], rows)
    return EXIT_OK


def _unique_rows_exit(rows, fmt) -> int:
    bad = sum(1 for r in rows
              if not (r["open_agrees"] and r["closed_agrees"]
                      and r["consequences_ok"]))
    if fmt == "csv":
        header = list(rows[0].keys())
        _print_csv(header, [[row[k] for k in header] for row in rows])
    else:
        cases = Counter()
        for row in rows:
            cases[row["open_case"]] += 1
            cases[row["closed_case"]] += 1
        doc = {
            "pairs": len(rows),
            "open-unique": sum(r["open_unique"] for r in rows),
            "closed-unique": sum(r["closed_unique"] for r in rows),
            "disagreements": bad,
            "cases": {k: cases[k] for k in sorted(cases)},
        }
        if fmt == "json":
            _print_json(doc)
        else:
            for key, value in doc.items():
                print(f"{key}: {value}")
    return EXIT_VERIFY if bad else EXIT_OK


def _cmd_unique(args) -> int:
    modes = [args.pair is not None, args.a_file is not None,
             args.range is not None, args.sample is not None]
    if sum(modes) != 1:
        print("error: give exactly one of --pair, --a-file, --range, "
              "--sample", file=sys.stderr)
        return EXIT_USAGE
    if args.pair is not None:
        a, a_next = args.pair
        doc = {
            "open": pair_uniqueness(a, a_next).to_json_dict(),
            "closed": pair_necessary_closed(a, a_next).to_json_dict(),
            "consequences": uniqueness_consequences(a, a_next),
        }
        if args.format == "json":
            _print_json(doc)
        elif args.format == "csv":
            _print_csv(("criterion", "unique", "k", "case"),
                       [("open", doc["open"]["unique"], doc["open"]["k"],
                         doc["open"]["case"]),
                        ("closed", doc["closed"]["unique"],
                         doc["closed"]["k"], doc["closed"]["case"])])
        else:
            for name in ("open", "closed"):
                v = doc[name]
                print(f"{name}: unique={v['unique']} k={v['k']} "
                      f"case={v['case']}")
            print(f"consequences: {doc['consequences']}")
        return EXIT_OK
    if args.a_file is not None:
        values = _read_sequence_file(args.a_file)
        suff, open_verdicts = sufficient_uniqueness(values)
        nec, closed_verdicts = necessary_uniqueness(values)
        if args.format == "json":
            _print_json({
                "sufficient": suff,
                "necessary": nec,
                "open-verdicts": [v.to_json_dict() for v in open_verdicts],
                "closed-verdicts": [v.to_json_dict()
                                    for v in closed_verdicts],
            })
        else:
            rows = [(v.index, v.a, v.a_next, v.unique, v.case,
                     w.unique, w.case)
                    for v, w in zip(open_verdicts, closed_verdicts)]
            header = ("index", "a", "a-next", "open-unique", "open-case",
                      "closed-unique", "closed-case")
            if args.format == "csv":
                _print_csv(header, rows)
            else:
                _print_table(list(header), rows)
                print(f"sufficient: {suff}")
                print(f"necessary: {nec}")
        return EXIT_OK
    if args.range is not None:
        return _unique_rows_exit(sweep(args.range), args.format)
    return _unique_rows_exit(sample_pairs(args.sample, args.seed),
                             args.format)


def _cmd_family(args) -> int:
    family = parse_family_spec(args.spec)
    if args.terms < 1:
        raise ValueError("need at least one term")
    a_vals = [family.a(n) for n in range(1, args.terms + 1)]
    b_vals = [family.b(n) for n in range(1, args.terms + 1)]
    bracket_ok = verify_bracket(family, args.terms)
    enclosure = (theta_partial(family, args.terms)
                 if args.theta_enclosure else None)
    if args.format == "json":
        doc = {
            "spec": family.spec_string(),
            "a": a_vals,
            "b": b_vals,
            "bracket-ok": bracket_ok,
        }
        if enclosure is not None:
            doc["theta-enclosure"] = enclosure.to_json_dict()
            doc["enclosure-width"] = format_rational(enclosure.width())
        _print_json(doc)
        return EXIT_OK
    rows = list(zip(range(1, args.terms + 1), a_vals, b_vals))
    if args.format == "csv":
        _print_csv(("n", "a", "b"), rows)
        return EXIT_OK
    _print_table(["n", "a", "b"], rows)
    print(f"bracket-ok: {bracket_ok}")
    if enclosure is not None:
        print(f"theta in ({format_rational(enclosure.lo)}, "
              f"{format_rational(enclosure.hi)})")
    return EXIT_OK


def _cmd_classify(args) -> int:
    a_values = _read_sequence_file(args.a_file)
    b_values = _read_sequence_file(args.b_file)
    t_grid = (_parse_t_grid(args.t_grid) if args.t_grid
              else DEFAULT_T_GRID)
    declared_limit = None
    exceeds = None
    if args.family:
        family = parse_family_spec(args.family)
        declared_limit = family.ratio_limit()
        exceeds = family.ratio_exceeds_one()
    report = classify(a_values, b_values, t_grid,
                      declared_limit=declared_limit,
                      declared_limit_exceeds_one=exceeds)
    if args.format == "json":
        _print_json(report.to_json_dict())
        return EXIT_OK
    rows = [(format_rational(t), c, s)
            for (t, c), (_, s) in zip(report.witness_counts,
                                      report.second_half_witness_counts)]
    if args.format == "csv":
        _print_csv(("t", "witnesses", "second-half-witnesses"), rows)
        return EXIT_OK
    _print_table(["t", "witnesses", "second-half-witnesses"], rows)
    print(f"verdict: {report.verdict}")
    return EXIT_OK


# ------------------------------------------------------------------ wiring

def _add_format(sub) -> None:
    sub.add_argument("--format", choices=("table", "json", "csv"),
                     default="table")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="unitfrac",
        description="Exact greedy and weak-greedy unit fraction expansions")
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("expand", help="run a weak greedy expansion")
    p.add_argument("--theta", required=True, help="target in (0, 1], as P/Q")
    p.add_argument("--terms", type=int, required=True)
    p.add_argument("--t", default="1", help="weakness level, rational >= 1")
    p.add_argument("--lambda", dest="lam", default="all",
                   help="index set: all, set:..., cofinite:..., periodic:p:r")
    p.add_argument("--selection",
                   choices=("greedy", "ceil-t-a", "min-admissible"))
    p.add_argument("--last-greedy", action="store_true",
                   help="force the final term to the greedy choice")
    _add_format(p)
    p.set_defaults(func=_cmd_expand)

    p = commands.add_parser("verify",
                            help="replay a denominator file against theta")
    p.add_argument("--b-file", required=True)
    p.add_argument("--theta", required=True)
    p.add_argument("--bracket", action="store_true",
                   help="also require each b inside its telescoping bracket")
    _add_format(p)
    p.set_defaults(func=_cmd_verify)

    p = commands.add_parser("construct",
                            help="build b hitting given greedy targets")
    p.add_argument("--a-file")
    p.add_argument("--repeat-last-delta", action="store_true",
                   help="extend the file arithmetically past its end")
    p.add_argument("--family", help="family spec, e.g. geometric:a=2,r=3")
    p.add_argument("--depth", type=int, required=True,
                   help="number of strict target increases to process")
    p.add_argument("--horizon", type=int)
    _add_format(p)
    p.set_defaults(func=_cmd_construct)

    p = commands.add_parser("unique",
                            help="forced-choice criteria and cross-checks")
    p.add_argument("--pair", nargs=2, type=int, metavar=("A", "A_NEXT"))
    p.add_argument("--a-file")
    p.add_argument("--range", type=int,
                   help="check all pairs up to this bound")
    p.add_argument("--sample", type=int, help="check random pairs")
    p.add_argument("--seed", type=int, default=0)
    _add_format(p)
    p.set_defaults(func=_cmd_unique)

    p = commands.add_parser("family", help="closed-form sequence families")
    p.add_argument("--spec", required=True)
    p.add_argument("--terms", type=int, required=True)
    p.add_argument("--theta-enclosure", action="store_true",
                   help="also bound the full series sum")
    _add_format(p)
    p.set_defaults(func=_cmd_family)

    p = commands.add_parser("classify",
                            help="screen (a, b) data for producibility")
    p.add_argument("--a-file", required=True)
    p.add_argument("--b-file", required=True)
    p.add_argument("--t-grid", help="comma separated weakness levels")
    p.add_argument("--family",
                   help="declare the family the data came from")
    _add_format(p)
    p.set_defaults(func=_cmd_classify)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
