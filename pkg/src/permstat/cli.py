"""Command-line front end: statistics, bijections, verification, tables.

Exit codes: 0 success, 1 usage or parse error, 2 enumeration cap exceeded,
3 verification failure. Data goes to stdout, diagnostics to stderr.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import bijections, stats
from .core import format_word, is_permutation, parse_permutation, parse_word
from .equidist import (
    JointDistribution,
    Source,
    joint_distribution,
    size_cap,
    verify_suite,
)
from .errors import PermstatError, SizeCapExceeded

FORMATS = ("plain", "csv", "json")

#: registry names usable without a parameter, in canonical output order
DEFAULT_STAT_ORDER = (
    "des", "exc", "inv", "maj", "fix", "imaj", "ides", "ini",
    "ai", "aid", "lec", "pix", "aix", "mix", "das",
)


def _default_names(word) -> list[str]:
    perm = is_permutation(word)
    names = []
    for name in DEFAULT_STAT_ORDER:
        if not perm and stats.REGISTRY[name][1]:
            continue
        if name == "ini" and not word:
            continue
        names.append(name)
    return names


def cmd_stats(args) -> int:
    word = parse_word(args.perm)
    if args.names:
        names = [n.strip() for n in args.names.split(",") if n.strip()]
    else:
        names = _default_names(word)
        if not is_permutation(word):
            print(
                "note: input is not a permutation of 1..n; "
                "permutation-only statistics omitted",
                file=sys.stderr,
            )
    vector = stats.stat_vector(word, names)
    if args.format == "json":
        print(json.dumps({"word": format_word(word), "stats": dict(vector)}))
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow([name for name, _ in vector])
        writer.writerow([value for _, value in vector])
        sys.stdout.write(buf.getvalue())
    else:
        print(" ".join(f"{name}={value}" for name, value in vector))
    return 0


def cmd_map(args) -> int:
    p = parse_permutation(args.perm)
    if args.phi:
        if args.trace:
            image, traces = bijections.phi_with_traces(p)
            for k, trace in zip(reversed(p), traces):
                rules = ",".join(step.rule for step in trace)
                print(f"insert {k}: {rules}")
        else:
            image = bijections.phi(p)
    elif args.phi_inverse:
        image = bijections.phi_inverse(p)
    else:
        if args.trace:
            for letters in bijections.psi_chain(p):
                print("reverse {" + ",".join(str(x) for x in sorted(letters)) + "}")
        image = bijections.psi(p)
    if args.format == "json":
        print(json.dumps({"input": format_word(p), "output": format_word(image)}))
    else:
        print(format_word(image))
    return 0


def cmd_verify(args) -> int:
    report = verify_suite(args.n, args.suite)
    if args.format == "json":
        print(json.dumps(report))
    else:
        for claim in report["claims"]:
            line = f"{claim['status'].upper():4s} {claim['claim']} [{claim['n_range']}]"
            if claim["witness"] is not None:
                line += f" witness={json.dumps(claim['witness'])}"
            print(line)
    return 0 if report["passed"] else 3


_SOURCES = {"all": None, "avoid321": "321", "avoid312": "312"}


def cmd_table(args) -> int:
    names = [n.strip() for n in args.stats.split(",") if n.strip()]
    pattern = _SOURCES[args.source]
    src = Source.all(args.n) if pattern is None else Source.avoiding(args.n, pattern)
    dist = joint_distribution(src, names)
    rows = sorted(dist.counts.items())
    if args.format == "json":
        print(
            json.dumps(
                {
                    "stats": names,
                    "n": args.n,
                    "source": args.source,
                    "rows": [[list(value), count] for value, count in rows],
                    "total": dist.total,
                }
            )
        )
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(names + ["count"])
        for value, count in rows:
            writer.writerow(list(value) + [count])
        sys.stdout.write(buf.getvalue())
    else:
        for value, count in rows:
            print(" ".join(str(v) for v in value) + f" -> {count}")
    return 0


def parse_table_csv(text: str) -> JointDistribution:
    """Rebuild a JointDistribution from a table emitted with --format csv."""
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    names = tuple(header[:-1])
    dist = JointDistribution(names)
    for row in reader:
        if not row:
            continue
        dist.add(tuple(int(x) for x in row[:-1]), int(row[-1]))
    return dist


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="permstat",
        description="Permutation statistics, bijections, and exhaustive verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_stats = sub.add_parser("stats", help="evaluate statistics on one word")
    p_stats.add_argument("perm", help="one-line notation: '3 1 2' or compact '312'")
    p_stats.add_argument("--names", help="comma-separated statistic names")
    p_stats.add_argument("--format", choices=FORMATS, default="plain")
    p_stats.set_defaults(func=cmd_stats)

    p_map = sub.add_parser("map", help="apply phi, its inverse, or psi")
    which = p_map.add_mutually_exclusive_group(required=True)
    which.add_argument("--phi", action="store_true")
    which.add_argument("--phi-inverse", action="store_true")
    which.add_argument("--psi", action="store_true")
    p_map.add_argument("perm")
    p_map.add_argument("--trace", action="store_true", help="print the rule trace or B-set chain")
    p_map.add_argument("--format", choices=FORMATS, default="plain")
    p_map.set_defaults(func=cmd_map)

    p_verify = sub.add_parser("verify", help="run the exhaustive verification suites")
    p_verify.add_argument("--n", type=int, default=8, help="largest permutation size")
    p_verify.add_argument(
        "--suite",
        default="all",
        choices=["all", "classic", "theorem1", "lemmas-f", "lemmas-g", "psi", "rawlings", "kratt"],
    )
    p_verify.add_argument("--format", choices=FORMATS, default="plain")
    p_verify.set_defaults(func=cmd_verify)

    p_table = sub.add_parser("table", help="joint distribution table over S_n")
    p_table.add_argument("--n", type=int, required=True)
    p_table.add_argument("--stats", required=True, help="comma-separated statistic names")
    p_table.add_argument("--source", choices=sorted(_SOURCES), default="all")
    p_table.add_argument("--format", choices=FORMATS, default="plain")
    p_table.set_defaults(func=cmd_table)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code else 0
    try:
        return args.func(args)
    except SizeCapExceeded as exc:
        print(f"error: {exc} (raise PERMSTAT_NMAX to override, cap={size_cap()})", file=sys.stderr)
        return 2
    except PermstatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
