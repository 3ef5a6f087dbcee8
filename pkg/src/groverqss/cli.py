"""Command-line front end.

Subcommands: ``tables``, ``protocol``, ``attack``, ``sample``.  Exit codes:
0 = success, 1 = protocol reject or table mismatch (a scientific finding),
2 = usage or input error.  All output is deterministic for fixed flags and
seeds.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import attacks, catalog, grover, protocol
from .statevec import label_to_index

EXIT_OK = 0
EXIT_FINDING = 1
EXIT_USAGE = 2

FORMATS = ("csv", "json", "markdown")


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _fail_usage(msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return EXIT_USAGE


def cmd_tables(args) -> int:
    try:
        if args.which == 1:
            rows = catalog.generate_table1(enc_k=args.enc_k, m=args.m)
            reference = catalog.published_table1()
        else:
            rows = catalog.generate_table2(enc_k=args.enc_k, m=args.m, M=args.M)
            reference = catalog.published_table2()
    except ValueError as e:
        return _fail_usage(str(e))
    rendered = catalog.render_table(rows, args.format)
    default_config = args.enc_k == 1 and args.m == "110" and (args.which == 1 or args.M == "110")
    diff = catalog.diff_table(rows, reference) if default_config else []
    try:
        _emit(rendered, args.out)
    except OSError as e:
        return _fail_usage(str(e))
    if not default_config:
        print("note: non-default parameters, no published reference to diff against",
              file=sys.stderr)
        return EXIT_OK
    diff_text = json.dumps({"table": args.which, "mismatching_rows": diff}, indent=2)
    print(diff_text, file=sys.stderr)
    return EXIT_FINDING if diff else EXIT_OK


def cmd_protocol(args) -> int:
    try:
        cfg = protocol.load_session_config(args.config)
        if args.seed is not None:
            cfg["seed"] = args.seed
        result = protocol.run_session_from_config(cfg)
    except (OSError, ValueError, json.JSONDecodeError) as e:
        return _fail_usage(str(e))
    doc = {
        "verdict": result.verdict,
        "recovered_secret": result.recovered_secret,
        "rounds": [[e.to_dict() for e in t.events] for t in result.transcripts],
    }
    _emit(json.dumps(doc, indent=2) + "\n", args.out)
    return EXIT_OK if result.verdict == "accept" else EXIT_FINDING


def cmd_attack(args) -> int:
    try:
        if args.kind == "lie":
            report = attacks.lie_attack(args.m, frozenset(args.flips or ()))
        elif args.kind == "intercept":
            if args.k_guess is not None:
                report = attacks.intercept_wrong_op(
                    args.k_true, args.m, args.k_guess, M_guess=args.M
                )
            else:
                report = attacks.intercept_enumeration(args.k_true, args.m)
        elif args.kind == "resend":
            report = attacks.intercept_resend_analysis()
        else:
            report = attacks.entangle_measure(
                k=args.k_true, m=args.m, control_qubit=args.control
            )
    except ValueError as e:
        return _fail_usage(str(e))
    _emit(report.to_json(), args.out)
    return EXIT_OK


def cmd_sample(args) -> int:
    try:
        if args.shots < 1:
            raise ValueError("shots must be >= 1")
        encoded = grover.encode(catalog.initial_state(args.k), args.m)
        _, final, dist = grover.collective_op(encoded, catalog.initial_state(args.k))
        counts = grover.sample(final, args.shots, args.seed)
    except ValueError as e:
        return _fail_usage(str(e))
    labels = [format(i, "03b") for i in range(8)]
    doc = {
        "k": args.k,
        "m": args.m,
        "shots": args.shots,
        "seed": args.seed,
        "outcomes": [
            {
                "label": lab,
                "exact_p": float(f"{dist[label_to_index(lab)]:.12g}"),
                "exact_p_3dp": catalog.round3(float(dist[label_to_index(lab)])),
                "count": counts.counts.get(lab, 0),
                "empirical_p": counts.counts.get(lab, 0) / args.shots,
            }
            for lab in labels
        ],
    }
    if args.format == "json":
        _emit(json.dumps(doc, indent=2) + "\n", args.out)
    else:
        lines = ["label,exact_p,count,empirical_p"]
        for o in doc["outcomes"]:
            lines.append(f"{o['label']},{o['exact_p']:.12g},{o['count']},{o['empirical_p']:.6f}")
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="groverqss",
        description="Simulate the Grover-based four-party quantum secret-sharing protocol",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tables", help="regenerate the published result tables and diff them")
    p.add_argument("--which", type=int, choices=(1, 2), required=True)
    p.add_argument("--enc-k", type=int, default=1, dest="enc_k")
    p.add_argument("--m", default="110")
    p.add_argument("--M", default="110")
    p.add_argument("--format", choices=FORMATS, default="csv")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("protocol", help="run a secret-sharing session from a JSON config")
    p.add_argument("config")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--format", choices=FORMATS, default="json")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_protocol)

    p = sub.add_parser("attack", help="run one of the four attack analyses")
    p.add_argument("kind", choices=("lie", "intercept", "resend", "entangle"))
    p.add_argument("--m", default="110")
    p.add_argument("--flips", nargs="*", default=None, metavar="P",
                   help="lying participants, e.g. P1 P2")
    p.add_argument("--k-true", type=int, default=1, dest="k_true")
    p.add_argument("--k-guess", type=int, default=None, dest="k_guess")
    p.add_argument("--M", default=None)
    p.add_argument("--control", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=FORMATS, default="json")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_attack)

    p = sub.add_parser("sample", help="shot-sample the decode pipeline for (k, m)")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--m", default="110")
    p.add_argument("--shots", type=int, default=1024)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=FORMATS, default="json")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_sample)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse exits with 2 on usage errors already
        return int(e.code) if e.code else EXIT_OK
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
