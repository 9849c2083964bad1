"""Command-line front end: cluster one corpus, compare strategies, or
generate a synthetic planted-topic corpus."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .bench import compare_strategies, emit_comparison_csv
from .corpus_io import STRATEGIES, LingoConfig, load_config, load_corpus, write_outputs
from .pipeline import run_lingo
from .synth import generate_corpus, write_corpus


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lingoclust",
        description="Search-results clustering with induced labels.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    cluster = sub.add_parser("cluster", help="cluster one corpus and write reports")
    cluster.add_argument("--input", required=True, help="corpus directory or JSON-lines file")
    cluster.add_argument("--config", help="JSON config file (defaults apply when omitted)")
    cluster.add_argument("--strategy", choices=STRATEGIES, help="content discovery strategy")
    cluster.add_argument("--out", required=True, help="output directory")

    compare = sub.add_parser("compare", help="run several strategies on one corpus")
    compare.add_argument("--input", required=True, help="corpus directory or JSON-lines file")
    compare.add_argument("--config", help="JSON config file (defaults apply when omitted)")
    compare.add_argument(
        "--strategies",
        default=",".join(STRATEGIES),
        help="comma-separated strategies (default: all)",
    )
    compare.add_argument("--out", required=True, help="output directory")

    gen = sub.add_parser("gen-corpus", help="generate a synthetic planted-topic corpus")
    gen.add_argument("--topics", type=int, default=3)
    gen.add_argument("--docs-per-topic", type=int, default=30)
    gen.add_argument("--synonym-pairs", type=int, default=5)
    gen.add_argument("--seed", type=int, default=7)
    gen.add_argument("--out", required=True, help="directory for the generated text files")
    return parser


def _load_run_config(args: argparse.Namespace) -> LingoConfig:
    config = load_config(args.config) if args.config else LingoConfig()
    if getattr(args, "strategy", None):
        config = config.with_strategy(args.strategy)
    return config


def cli_main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        if args.command == "cluster":
            config = _load_run_config(args)
            corpus = load_corpus(args.input)
            result = run_lingo(corpus, config)
            write_outputs(result, args.out, dataset=Path(args.input).stem or "corpus")
        elif args.command == "compare":
            config = _load_run_config(args)
            strategies = [s.strip() for s in args.strategies.split(",") if s.strip()]
            unknown = [s for s in strategies if s not in STRATEGIES]
            if unknown:
                print(
                    f"error: unknown strategy {unknown[0]!r}; choose from {', '.join(STRATEGIES)}",
                    file=sys.stderr,
                )
                return 2
            corpus = load_corpus(args.input)
            name = Path(args.input).stem or "corpus"
            report = compare_strategies(corpus, config, strategies, corpus_name=name)
            out = Path(args.out)
            for strategy, result in report.results.items():
                write_outputs(result, out / strategy, dataset=name)
            emit_comparison_csv(report, out / "comparison.csv")
        elif args.command == "gen-corpus":
            docs = generate_corpus(
                topics=args.topics,
                docs_per_topic=args.docs_per_topic,
                synonym_pairs=args.synonym_pairs,
                seed=args.seed,
            )
            write_corpus(docs, args.out)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def main() -> None:  # console entry point
    sys.exit(cli_main())
