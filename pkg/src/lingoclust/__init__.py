"""Search-results clustering with induced labels.

Implements the Lingo approach: frequent complete phrases become label
candidates, the leading singular vectors of the weighted term-document
matrix pick the labels, and documents are assigned to labels by cosine
similarity. Three interchangeable content-discovery strategies are
provided: literal vector-space matching (``vsm``), rank-reduced latent
semantic matching (``lsi``) and latent semantic matching over a
BM25-weighted matrix (``lsi-bm25``).
"""

from .bench import ComparisonReport, StrategySummary, compare_strategies, emit_comparison_csv
from .corpus_io import (
    ClusteringResult,
    Document,
    LingoConfig,
    STRATEGIES,
    load_config,
    load_corpus,
    read_result,
    write_outputs,
)
from .estimator import LingoClusterer
from .pipeline import Cluster, LabelCandidate, run_lingo
from .phrases import Phrase
from .synth import generate_corpus, write_corpus

__version__ = "0.1.0"

__all__ = [
    "Cluster",
    "ClusteringResult",
    "ComparisonReport",
    "Document",
    "LabelCandidate",
    "LingoClusterer",
    "LingoConfig",
    "Phrase",
    "STRATEGIES",
    "StrategySummary",
    "compare_strategies",
    "emit_comparison_csv",
    "generate_corpus",
    "load_config",
    "load_corpus",
    "read_result",
    "run_lingo",
    "write_corpus",
    "write_outputs",
    "__version__",
]
