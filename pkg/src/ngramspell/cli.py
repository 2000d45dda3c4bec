"""Command-line front end: index building, checking, evaluation, baselines.

`check` can run against a local index file or act as a thin client of a
running service (`--server`); `serve` starts that service. Exit codes:
0 success, 1 usage error, 2 data error.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import __version__
from .baselines import hamming, lcs, levenshtein, soundex
from .correct import CheckOptions, Correction, correct_text
from .detect import ErrorKind
from .evaluate import InjectionPlan, evaluate, inject_errors, write_ground_truth
from .index import NgramIndex
from .ingest import IngestOptions, build_index
from .tokenize import tokenize


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would sys.exit(2); we want exit 1
        raise _UsageError(f"{self.prog}: error: {message}\n{self.format_usage()}")


def _build_parser() -> _Parser:
    parser = _Parser(prog="ngramspell", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build-index", help="count corpus n-grams and write an NGIDX file")
    p.add_argument("--corpus", nargs="+", required=True, metavar="PATH")
    p.add_argument("--out", required=True, metavar="PATH")
    p.add_argument("--max-order", type=int, default=5)
    p.add_argument(
        "--min-count",
        action="append",
        default=[],
        metavar="K=N",
        help="per-order pruning threshold, repeatable (e.g. --min-count 3=2)",
    )
    p.add_argument("--threads", type=int, default=None)
    p.add_argument("--no-sentence-split", action="store_true")

    p = sub.add_parser("check", help="spell-check text against an index")
    p.add_argument("--index", metavar="PATH")
    p.add_argument("--server", metavar="URL", help="use a running service instead of a local index")
    p.add_argument("--input", metavar="PATH", help="default: standard input")
    p.add_argument("--output", metavar="PATH", help="default: standard output")
    p.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    p.add_argument("--k", type=int, default=5)
    p.add_argument("--realword", action="store_true")
    p.add_argument("--tau", type=float, default=2.0)
    p.add_argument("--no-backoff", action="store_true")

    p = sub.add_parser("evaluate", help="inject seeded errors, re-check, report quality")
    p.add_argument("--index", required=True, metavar="PATH")
    p.add_argument("--text", required=True, metavar="PATH")
    p.add_argument("--rate", type=float, default=0.01)
    p.add_argument("--realword-frac", type=float, default=0.13)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    p.add_argument("--k", type=int, default=5)
    p.add_argument("--tau", type=float, default=2.0)
    p.add_argument("--no-realword", action="store_true", help="skip the real-word pass")
    p.add_argument("--truth-out", metavar="PATH", help="write the injected ground truth as TSV")
    p.add_argument("--format", choices=("text", "tsv"), default="text")

    p = sub.add_parser("baseline", help="classical algorithms on explicit inputs")
    bsub = p.add_subparsers(dest="algorithm", required=True)
    b = bsub.add_parser("soundex")
    b.add_argument("word")
    b = bsub.add_parser("editdist")
    b.add_argument("a")
    b.add_argument("b")
    b = bsub.add_parser("hamming")
    b.add_argument("a")
    b.add_argument("b")
    b = bsub.add_parser("lcs")
    b.add_argument("a")
    b.add_argument("b")

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--index", metavar="PATH")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


def _parse_min_counts(entries: list[str]) -> dict[int, int]:
    thresholds = {}
    for entry in entries:
        k, sep, v = entry.partition("=")
        if not sep or not k.isdigit() or not v.isdigit():
            raise _UsageError(f"--min-count expects K=N with integers, got {entry!r}")
        thresholds[int(k)] = int(v)
    return thresholds


def _record_line(c: Correction) -> str:
    chosen = c.chosen if c.chosen is not None else "-"
    return f"{c.token_index}\t{c.original}\t{chosen}\t{c.kind.value}\t{c.nominee_frequency}"


def _cmd_build_index(args) -> int:
    opts = IngestOptions(
        max_order=args.max_order,
        min_count=_parse_min_counts(args.min_count),
        sentence_split=not args.no_sentence_split,
    )
    index = build_index(args.corpus, opts, workers=args.threads)
    index.save(args.out)
    for k, n in index.order_sizes().items():
        print(f"order {k}: {n}")
    return 0


def _check_remote(args, text: str) -> tuple[str, list[str]]:
    import httpx

    try:
        response = httpx.post(
            args.server.rstrip("/") + "/check",
            json={
                "text": text,
                "k": args.k,
                "threads": args.threads,
                "realword": args.realword,
                "tau": args.tau,
                "backoff": not args.no_backoff,
            },
            timeout=120.0,
        )
        response.raise_for_status()
    except httpx.HTTPError as exc:
        raise OSError(f"service request failed: {exc}") from exc
    payload = response.json()
    records = [
        "{token_index}\t{original}\t{chosen}\t{kind}\t{nominee_frequency}".format(
            **{**rec, "chosen": rec["chosen"] if rec["chosen"] is not None else "-"}
        )
        for rec in payload["corrections"]
    ]
    return payload["corrected_text"], records


def _cmd_check(args) -> int:
    if bool(args.index) == bool(args.server):
        raise _UsageError("check requires exactly one of --index or --server")
    text = (
        Path(args.input).read_text(encoding="utf-8")
        if args.input
        else sys.stdin.read()
    )
    if args.server:
        corrected, records = _check_remote(args, text)
    else:
        index = NgramIndex.load(args.index)
        opts = CheckOptions(
            k=args.k,
            backoff=not args.no_backoff,
            realword=args.realword,
            tau=args.tau,
        )
        report = correct_text(text, index, p=max(1, args.threads), options=opts)
        corrected = report.corrected_text
        records = [_record_line(c) for c in report.corrections]

    if args.output:
        Path(args.output).write_text(corrected, encoding="utf-8")
        stream = sys.stdout
    else:
        sys.stdout.write(corrected)
        stream = sys.stderr
    for line in records:
        print(line, file=stream)
    return 0


def _cmd_evaluate(args) -> int:
    index = NgramIndex.load(args.index)
    text = Path(args.text).read_text(encoding="utf-8")
    tokens = tokenize(text)
    plan = InjectionPlan(rate=args.rate, realword_frac=args.realword_frac, seed=args.seed)
    injection = inject_errors(tokens, index, plan)
    if args.truth_out:
        write_ground_truth(injection.truth, args.truth_out)

    opts = CheckOptions(k=args.k, realword=not args.no_realword, tau=args.tau)
    report = correct_text(
        injection.corrupted_text, index, p=max(1, args.threads), options=opts
    )
    result = evaluate(report, injection.truth)

    if args.format == "tsv":
        for kind, counts in (
            ("total", result.total),
            ("non-word", result.non_word),
            ("real-word", result.real_word),
        ):
            print(
                f"{kind}\t{counts.injected}\t{counts.corrected}"
                f"\t{counts.not_corrected}\t{counts.falsely_corrected}"
            )
        print(f"collateral\t{result.collateral_changes}")
    else:
        print(result.summary())
        if injection.skipped:
            print(f"Skipped positions (no usable corruption): {len(injection.skipped)}")
    return 0


def _cmd_baseline(args) -> int:
    if args.algorithm == "soundex":
        print(soundex(args.word))
    elif args.algorithm == "editdist":
        print(levenshtein(args.a, args.b))
    elif args.algorithm == "hamming":
        print(hamming(args.a, args.b))
    else:
        length, witness = lcs(args.a, args.b)
        print(f"{length}\t{witness}")
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(args.index), host=args.host, port=args.port)
    return 0


_COMMANDS = {
    "build-index": _cmd_build_index,
    "check": _cmd_check,
    "evaluate": _cmd_evaluate,
    "baseline": _cmd_baseline,
    "serve": _cmd_serve,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except _UsageError as exc:
        print(exc, file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"ngramspell: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
