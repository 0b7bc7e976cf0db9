"""Command-line entry point: ``spectra <subcommand>``.

Exit codes: 0 clean, 1 findings (counterexamples or an unstable catalog),
2 usage or input errors.  Output is deterministic for a given input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence, TextIO

from . import catalog
from .embed import is_planar
from .enumerate import (
    CLASS_G,
    TREES,
    TRIANGLE_FREE_LAMBDA2,
    TRIANGLE_FREE_PLANAR,
    UNICYCLIC,
    ClassPredicate,
    EnumerationConfig,
    default_workers,
    enumerate_connected,
    write_levels,
)
from .families import FAMILIES, FamilyError, FamilySpec
from .graphcore import Graph6Error, decode_graph6, encode_graph6, girth, is_connected, is_triangle_free
from .spectral import spectral_summary

EXIT_OK, EXIT_FINDINGS, EXIT_USAGE = 0, 1, 2

CLASSES: dict[str, ClassPredicate] = {
    "tfp-lambda2": CLASS_G,
    "tfp": TRIANGLE_FREE_PLANAR,
    "tf-lambda2": TRIANGLE_FREE_LAMBDA2,
    "trees": TREES,
    "unicyclic": UNICYCLIC,
    "connected": ClassPredicate(),
}

SUITES = ("trees", "unicyclic", "main", "girth-lemmas")


def _dump(obj: object, out: TextIO) -> None:
    out.write(json.dumps(obj, indent=2) + "\n")


def _check_record(text: str) -> dict:
    g = decode_graph6(text)
    rec = {"graph6": encode_graph6(g), "n": g.n, "edges": g.num_edges()}
    rec.update(spectral_summary(g).to_dict())
    rec.update(
        girth=girth(g),
        connected=is_connected(g),
        triangle_free=is_triangle_free(g),
        planar=bool(is_planar(g, want_witness=False)),
    )
    return rec


def cmd_check(args: argparse.Namespace, stdin: TextIO, out: TextIO, err: TextIO) -> int:
    for lineno, raw in enumerate(stdin, 1):
        line = raw.strip()
        if not line:
            continue
        try:
            rec = _check_record(line)
        except Graph6Error as exc:
            err.write(f"line {lineno}: {exc}\n")
            return EXIT_USAGE
        out.write(json.dumps(rec, sort_keys=True) + "\n")
    return EXIT_OK


def cmd_family(args: argparse.Namespace, out: TextIO, err: TextIO) -> int:
    kind = args.kind.upper()
    if kind not in FAMILIES:
        err.write(f"unknown family {args.kind!r}; choose from {', '.join(sorted(FAMILIES))}\n")
        return EXIT_USAGE
    if kind == "THETA":
        params: tuple[int, ...] = tuple(args.lengths or ())
    else:
        given = [p for p in (args.s, args.t, args.k) if p is not None]
        params = tuple(given if args.params is None else args.params)
    try:
        g = FamilySpec(kind, params).build()
    except FamilyError as exc:
        err.write(f"{exc}\n")
        return EXIT_USAGE
    out.write(encode_graph6(g) + "\n")
    return EXIT_OK


def cmd_enumerate(args: argparse.Namespace, out: TextIO, err: TextIO) -> int:
    if args.n < 0:
        err.write("--n must be >= 0\n")
        return EXIT_USAGE
    pred = CLASSES[args.cls]
    levels = enumerate_connected(EnumerationConfig(args.n, pred, args.workers)) if args.n else {}
    for g in levels.get(args.n, []):
        out.write(encode_graph6(g) + "\n")
    if args.out is not None:
        directory = Path(args.out)
        write_levels(levels, directory)
        summary = {
            "schema": catalog.SCHEMA_VERSION,
            "class": args.cls,
            "label": pred.label,
            "n_max": args.n,
            "members": {str(n): len(v) for n, v in sorted(levels.items())},
        }
        (directory / "summary.json").write_text(
            json.dumps(summary, indent=2) + "\n", encoding="utf-8", newline="\n")
    return EXIT_OK


def _report_exit(rep: catalog.Report, out: TextIO) -> int:
    _dump(rep.to_dict(), out)
    return EXIT_OK if rep.ok else EXIT_FINDINGS


def cmd_catalog(args: argparse.Namespace, out: TextIO, err: TextIO) -> int:
    if args.cap < 1:
        err.write("--cap must be >= 1\n")
        return EXIT_USAGE
    return _report_exit(catalog.derive_sporadic_maximal(args.cap, args.workers).to_report(), out)


def cmd_verify(args: argparse.Namespace, out: TextIO, err: TextIO) -> int:
    if args.n < 1:
        err.write("--n must be >= 1\n")
        return EXIT_USAGE
    if args.suite == "trees":
        rep = catalog.verify_tree_theorem(args.n, args.workers)
    elif args.suite == "unicyclic":
        rep = catalog.verify_unicyclic_theorem(args.n, args.workers)
    elif args.suite == "girth-lemmas":
        rep = catalog.verify_girth_lemmas(args.n, args.workers)
    else:
        cap = max(args.cap, args.n + 1)
        cat = catalog.derive_sporadic_maximal(cap, args.workers)
        rep = catalog.verify_main_theorem(args.n, cat, worker_count=args.workers)
    return _report_exit(rep, out)


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="spectra", description=__doc__.splitlines()[0])
    p.add_argument("--workers", type=int, default=None,
                   help="worker processes (default: $SPECTRA_WORKERS or 1)")
    sub = p.add_subparsers(dest="command", required=True)

    sub.add_parser("check", help="spectral and structural flags for graph6 lines on stdin")

    fam = sub.add_parser("family", help="print one family member as graph6")
    fam.add_argument("kind", help="family name, e.g. f1, f2, g0, theta, cycle")
    fam.add_argument("--s", type=int)
    fam.add_argument("--t", type=int)
    fam.add_argument("--k", type=int)
    fam.add_argument("--lengths", type=_int_list, help="theta path lengths, e.g. 2,2,2")
    fam.add_argument("--params", type=_int_list, help="positional parameters, e.g. 3,1,1")

    en = sub.add_parser("enumerate", help="isomorph-free enumeration of a connected class")
    en.add_argument("--class", dest="cls", choices=sorted(CLASSES), default="tfp-lambda2")
    en.add_argument("--n", type=int, required=True, help="largest order; level n is printed")
    en.add_argument("--out", help="directory for level_NN.g6 files and summary.json")

    cat = sub.add_parser("catalog", help="derive the maximal sporadic graphs")
    cat.add_argument("--cap", type=int, default=14)

    ver = sub.add_parser("verify", help="run a bounded verification suite")
    ver.add_argument("--suite", choices=SUITES, required=True)
    ver.add_argument("--n", type=int, required=True)
    ver.add_argument("--cap", type=int, default=14, help="catalog cap for the main suite")
    return p


def main(
    argv: Optional[Sequence[str]] = None,
    stdin: Optional[TextIO] = None,
    stdout: Optional[TextIO] = None,
    stderr: Optional[TextIO] = None,
) -> int:
    stdin = stdin or sys.stdin
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.workers is None:
        args.workers = default_workers()
    elif args.workers < 1:
        err.write("--workers must be >= 1\n")
        return EXIT_USAGE
    if args.command == "check":
        return cmd_check(args, stdin, out, err)
    if args.command == "family":
        return cmd_family(args, out, err)
    if args.command == "enumerate":
        return cmd_enumerate(args, out, err)
    if args.command == "catalog":
        return cmd_catalog(args, out, err)
    return cmd_verify(args, out, err)


if __name__ == "__main__":
    raise SystemExit(main())
