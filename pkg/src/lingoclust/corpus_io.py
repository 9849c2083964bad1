"""Corpus loading, run configuration and result serialization.

Corpora come either as a directory of UTF-8 text files (one document per
file, lexicographic filename order) or as a JSON-lines file with one
``{"title": ..., "body": ...}`` object per line. Results are written as a
JSON file, a plain-text cluster table and a CSV summary.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass, fields, replace
from pathlib import Path
from typing import TYPE_CHECKING, Iterable

if TYPE_CHECKING:  # pragma: no cover
    from .pipeline import Cluster

STRATEGIES = ("vsm", "lsi", "lsi-bm25")

_DATA_DIR = Path(__file__).parent / "data"
DEFAULT_STOPWORD_PATH = _DATA_DIR / "stopwords_en.txt"


@dataclass(frozen=True)
class Document:
    """A single input document (or search-result snippet)."""

    id: int
    title: str
    body: str

    @property
    def text(self) -> str:
        """Title and body joined with a sentence break between them."""
        if self.title:
            return self.title + "\n" + self.body
        return self.body


@dataclass(frozen=True)
class LingoConfig:
    """Tunable parameters of a clustering run.

    All thresholds are validated on construction; out-of-range values raise
    ``ValueError`` naming the field and its allowed range.
    """

    term_frequency_threshold: int = 2
    candidate_label_threshold: float = 0.775
    label_similarity_threshold: float = 0.30
    snippet_assignment_threshold: float = 0.15
    k1: float = 1.2
    b: float = 0.75
    strategy: str = "vsm"
    stopword_list_path: str | None = None
    max_phrase_length: int = 8

    def __post_init__(self) -> None:
        if not isinstance(self.term_frequency_threshold, int) or self.term_frequency_threshold < 0:
            raise ValueError("term_frequency_threshold must be a non-negative integer")
        if not 0.0 < self.candidate_label_threshold <= 1.0:
            raise ValueError("candidate_label_threshold must be in (0,1]")
        if not 0.0 <= self.label_similarity_threshold <= 1.0:
            raise ValueError("label_similarity_threshold must be in [0,1]")
        if not 0.0 <= self.snippet_assignment_threshold <= 1.0:
            raise ValueError("snippet_assignment_threshold must be in [0,1]")
        if self.k1 < 0:
            raise ValueError("k1 must be >= 0")
        if not 0.0 <= self.b <= 1.0:
            raise ValueError("b must be in [0,1]")
        if self.strategy not in STRATEGIES:
            raise ValueError("strategy must be one of %s" % ", ".join(STRATEGIES))
        if not isinstance(self.max_phrase_length, int) or self.max_phrase_length < 1:
            raise ValueError("max_phrase_length must be a positive integer")

    def with_strategy(self, strategy: str) -> "LingoConfig":
        return replace(self, strategy=strategy)

    def stopword_path(self) -> Path:
        if self.stopword_list_path is None:
            return DEFAULT_STOPWORD_PATH
        return Path(self.stopword_list_path)

    def to_dict(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}


@dataclass
class ClusteringResult:
    """Full output of one clustering run."""

    clusters: list["Cluster"]
    others: list[int]
    config: LingoConfig
    corpus_size: int

    def assigned_ids(self) -> set[int]:
        ids: set[int] = set()
        for cluster in self.clusters:
            ids.update(cluster.members)
        return ids

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ClusteringResult):
            return NotImplemented
        return (
            self.clusters == other.clusters
            and self.others == other.others
            and self.config == other.config
            and self.corpus_size == other.corpus_size
        )


def load_stopwords(path: str | Path) -> frozenset[str]:
    """Read a stop-word list: one lowercase word per line, '#' comments."""
    path = Path(path)
    if not path.is_file():
        raise FileNotFoundError(f"stop-word list not found: {path}")
    words = set()
    for line in path.read_text(encoding="utf-8").splitlines():
        word = line.split("#", 1)[0].strip()
        if word:
            words.add(word.lower())
    return frozenset(words)


def load_corpus(path: str | Path) -> list[Document]:
    """Load documents from a directory of text files or a JSON-lines file.

    Ids are assigned 1..N in lexicographic filename order (directory mode)
    or line order (file mode).
    """
    path = Path(path)
    if path.is_dir():
        docs = _load_corpus_dir(path)
    elif path.is_file():
        docs = _load_corpus_jsonl(path)
    else:
        raise FileNotFoundError(f"corpus path does not exist: {path}")
    if not docs:
        raise ValueError(f"empty corpus: {path}")
    return docs


def _load_corpus_dir(path: Path) -> list[Document]:
    docs = []
    names = sorted(p.name for p in path.iterdir() if p.is_file() and not p.name.startswith("."))
    for i, name in enumerate(names, start=1):
        raw = (path / name).read_bytes()
        try:
            body = raw.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ValueError(f"undecodable bytes in corpus file {path / name}: {exc}") from exc
        docs.append(Document(id=i, title="", body=body))
    return docs


def _load_corpus_jsonl(path: Path) -> list[Document]:
    docs = []
    raw = path.read_bytes()
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise ValueError(f"undecodable bytes in corpus file {path}: {exc}") from exc
    doc_id = 0
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise ValueError(f"invalid JSON on line {lineno} of {path}: {exc}") from exc
        if not isinstance(obj, dict) or "body" not in obj:
            raise ValueError(f"line {lineno} of {path} must be an object with a 'body' field")
        doc_id += 1
        docs.append(Document(id=doc_id, title=str(obj.get("title", "")), body=str(obj["body"])))
    return docs


def coerce_documents(data: Iterable) -> list[Document]:
    """Turn raw user input into a document list with ids 1..N.

    Accepts Document instances, plain strings (used as the body), ``(title,
    body)`` pairs, or dicts with ``title``/``body`` keys.
    """
    docs: list[Document] = []
    items = list(data)
    if not items:
        raise ValueError("empty corpus: no documents given")
    for i, item in enumerate(items, start=1):
        if isinstance(item, Document):
            docs.append(Document(id=i, title=item.title, body=item.body))
        elif isinstance(item, str):
            docs.append(Document(id=i, title="", body=item))
        elif isinstance(item, dict):
            docs.append(Document(id=i, title=str(item.get("title", "")), body=str(item.get("body", ""))))
        elif isinstance(item, (tuple, list)) and len(item) == 2:
            docs.append(Document(id=i, title=str(item[0]), body=str(item[1])))
        else:
            raise TypeError(
                f"document {i} has unsupported type {type(item).__name__}; "
                "expected str, (title, body), dict or Document"
            )
    return docs


def load_config(path: str | Path) -> LingoConfig:
    """Read a JSON config object; absent fields take their defaults."""
    path = Path(path)
    try:
        obj = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid JSON in config {path}: {exc}") from exc
    if not isinstance(obj, dict):
        raise ValueError(f"config {path} must be a JSON object")
    known = {f.name for f in fields(LingoConfig)}
    unknown = sorted(set(obj) - known)
    if unknown:
        raise ValueError(f"unknown config field(s): {', '.join(unknown)}")
    return LingoConfig(**obj)


def format_score(score: float) -> str:
    """Render a score in two-decimal scientific notation, e.g. 5.34E+00."""
    return f"{score:.2E}"


def _label_to_dict(label) -> dict:
    vector = label.term_vector
    indices = [int(i) for i in vector.nonzero()[0]]
    return {
        "terms": list(label.phrase.terms),
        "surface": label.phrase.surface_form,
        "occurrence_count": label.phrase.occurrence_count,
        "score": label.score,
        "term_vector": {
            "size": int(vector.shape[0]),
            "indices": indices,
            "values": [float(vector[i]) for i in indices],
        },
    }


def result_to_dict(result: ClusteringResult) -> dict:
    return {
        "corpus_size": result.corpus_size,
        "config": result.config.to_dict(),
        "clusters": [
            {
                "label": _label_to_dict(c.label),
                "members": list(c.members),
                "score": c.score,
            }
            for c in result.clusters
        ],
        "others": list(result.others),
    }


def result_from_dict(obj: dict) -> ClusteringResult:
    import numpy as np

    from .phrases import Phrase
    from .pipeline import Cluster, LabelCandidate

    clusters = []
    for entry in obj["clusters"]:
        lab = entry["label"]
        vec_spec = lab["term_vector"]
        vector = np.zeros(vec_spec["size"])
        for i, v in zip(vec_spec["indices"], vec_spec["values"]):
            vector[i] = v
        phrase = Phrase(
            terms=tuple(lab["terms"]),
            occurrence_count=lab["occurrence_count"],
            surface_form=lab["surface"],
        )
        label = LabelCandidate(phrase=phrase, score=lab["score"], term_vector=vector)
        clusters.append(Cluster(label=label, members=list(entry["members"]), score=entry["score"]))
    return ClusteringResult(
        clusters=clusters,
        others=list(obj["others"]),
        config=LingoConfig(**obj["config"]),
        corpus_size=obj["corpus_size"],
    )


def result_to_json(result: ClusteringResult) -> str:
    return json.dumps(result_to_dict(result), indent=2)


def read_result(path: str | Path) -> ClusteringResult:
    """Parse a result JSON file back into a ClusteringResult."""
    return result_from_dict(json.loads(Path(path).read_text(encoding="utf-8")))


def render_table(result: ClusteringResult) -> str:
    """Plain-text cluster table: number, size, score, member ids."""
    lines = []
    for i, cluster in enumerate(result.clusters, start=1):
        ids = ",".join(str(d) for d in cluster.members)
        lines.append(f"Cluster {i} | {len(cluster.members)} | {format_score(cluster.score)} | {ids}")
    other_ids = ",".join(str(d) for d in result.others)
    lines.append(f"Other topics = {len(result.others)} | {other_ids}")
    return "\n".join(lines) + "\n"


def write_outputs(result: ClusteringResult, out_dir: str | Path, dataset: str = "corpus") -> list[Path]:
    """Write result.json, clusters.txt and summary.csv into ``out_dir``."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    json_path = out_dir / "result.json"
    json_path.write_text(result_to_json(result) + "\n", encoding="utf-8")

    table_path = out_dir / "clusters.txt"
    table_path.write_text(render_table(result), encoding="utf-8")

    csv_path = out_dir / "summary.csv"
    with csv_path.open("w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f)
        writer.writerow(["dataset", "strategy", "cluster_id", "size", "score"])
        for i, cluster in enumerate(result.clusters, start=1):
            writer.writerow([dataset, result.config.strategy, i, len(cluster.members), repr(cluster.score)])
        writer.writerow([dataset, result.config.strategy, "others", len(result.others), ""])
    return [json_path, table_path, csv_path]
