"""Strategy comparison harness: same corpus, same config, one run per
content-discovery strategy, with derived per-strategy summaries."""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .corpus_io import ClusteringResult, Document, LingoConfig
from .pipeline import run_lingo


@dataclass(frozen=True)
class StrategySummary:
    cluster_count: int
    assigned_doc_count: int
    others_count: int
    total_score: float


@dataclass
class ComparisonReport:
    corpus_name: str
    results: dict[str, ClusteringResult]

    def summaries(self) -> dict[str, StrategySummary]:
        out = {}
        for strategy, result in self.results.items():
            out[strategy] = StrategySummary(
                cluster_count=len(result.clusters),
                assigned_doc_count=len(result.assigned_ids()),
                others_count=len(result.others),
                total_score=sum(c.score for c in result.clusters),
            )
        return out


def compare_strategies(
    corpus: Sequence[Document],
    config: LingoConfig,
    strategies: Sequence[str],
    corpus_name: str = "corpus",
) -> ComparisonReport:
    """Run the pipeline once per strategy; only the strategy field varies."""
    if not strategies:
        raise ValueError("at least one strategy is required")
    results = {}
    for strategy in strategies:
        results[strategy] = run_lingo(corpus, config.with_strategy(strategy))
    return ComparisonReport(corpus_name=corpus_name, results=results)


def emit_comparison_csv(report: ComparisonReport, path: str | Path) -> Path:
    """Cluster rows per strategy followed by per-strategy TOTAL rows."""
    path = Path(path)
    summaries = report.summaries()
    with path.open("w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f)
        writer.writerow(["strategy", "cluster_id", "size", "score"])
        for strategy, result in report.results.items():
            for i, cluster in enumerate(result.clusters, start=1):
                writer.writerow([strategy, i, len(cluster.members), repr(cluster.score)])
        for strategy, summary in summaries.items():
            writer.writerow(
                [
                    strategy,
                    "TOTAL",
                    summary.assigned_doc_count,
                    summary.others_count,
                    repr(summary.total_score),
                ]
            )
    return path
