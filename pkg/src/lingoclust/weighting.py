"""Term weighting: tf-idf and Okapi BM25 term-document matrices.

The tf-idf variant is raw term frequency times natural-log inverse
document frequency. BM25 entries can be negative for terms appearing in
more than half of the documents; BM25 columns are deliberately left
unnormalized at build time, cosine normalization happens only inside
similarity computations.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from .preprocess import PreprocessedDocument, Vocabulary

TFIDF = "tfidf"
BM25 = "bm25"


@dataclass(frozen=True)
class Bm25Params:
    """Corpus statistics and tuning constants for BM25 scoring."""

    k1: float
    b: float
    avg_doc_len: float
    doc_lens: dict[int, int]
    doc_freqs: dict[str, int]
    n: int

    @classmethod
    def from_corpus(
        cls,
        docs: Sequence[PreprocessedDocument],
        vocabulary: Vocabulary,
        k1: float,
        b: float,
    ) -> "Bm25Params":
        doc_lens = {doc.doc_id: doc.length for doc in docs}
        if not doc_lens:
            raise ValueError("empty corpus: no documents")
        avg = sum(doc_lens.values()) / len(doc_lens)
        if avg <= 0:
            raise ValueError("average document length must be positive")
        doc_freqs = dict(zip(vocabulary.terms, vocabulary.document_frequency))
        return cls(k1=k1, b=b, avg_doc_len=avg, doc_lens=doc_lens, doc_freqs=doc_freqs, n=len(docs))


@dataclass(frozen=True)
class TermWeighting:
    """Per-term weighting model used for document and phrase vectors."""

    kind: str
    idf: np.ndarray
    k1: float = 0.0
    b: float = 0.0
    avg_doc_len: float = 1.0

    def vector(self, term_counts: Mapping[int, float], doc_len: float) -> np.ndarray:
        """Weight a bag of term counts (indexed by vocabulary row)."""
        vec = np.zeros(self.idf.shape[0])
        for i, count in term_counts.items():
            if count <= 0:
                continue
            if self.kind == TFIDF:
                vec[i] = count * self.idf[i]
            else:
                denom = count + self.k1 * (1.0 - self.b + self.b * doc_len / self.avg_doc_len)
                vec[i] = self.idf[i] * count * (self.k1 + 1.0) / denom
        return vec


@dataclass(frozen=True)
class TermDocumentMatrix:
    """Dense t x d weighted matrix with its index maps."""

    weights: np.ndarray
    vocabulary: Vocabulary
    doc_ids: tuple[int, ...]
    weighting: str
    model: TermWeighting

    def unit_columns(self) -> np.ndarray:
        return unit_normalize_columns(self.weights)


def unit_normalize_columns(matrix: np.ndarray) -> np.ndarray:
    norms = np.linalg.norm(matrix, axis=0)
    safe = np.where(norms > 0, norms, 1.0)
    return matrix / safe


def _term_counts(doc: PreprocessedDocument, vocabulary: Vocabulary) -> Counter:
    counts: Counter[int] = Counter()
    for token in doc.tokens():
        if token.is_stopword:
            continue
        idx = vocabulary.index.get(token.stem)
        if idx is not None:
            counts[idx] += 1
    return counts


def count_matrix(docs: Sequence[PreprocessedDocument], vocabulary: Vocabulary) -> np.ndarray:
    counts = np.zeros((len(vocabulary), len(docs)))
    for j, doc in enumerate(docs):
        for i, c in _term_counts(doc, vocabulary).items():
            counts[i, j] = c
    return counts


def tfidf_matrix(docs: Sequence[PreprocessedDocument], vocabulary: Vocabulary) -> TermDocumentMatrix:
    """entry(i, j) = tf(i, j) * ln(d / df(i))."""
    if len(vocabulary) == 0:
        raise ValueError("vocabulary is empty")
    counts = count_matrix(docs, vocabulary)
    d = len(docs)
    df = np.asarray(vocabulary.document_frequency, dtype=float)
    idf = np.log(d / df)
    model = TermWeighting(kind=TFIDF, idf=idf)
    return TermDocumentMatrix(
        weights=counts * idf[:, None],
        vocabulary=vocabulary,
        doc_ids=tuple(doc.doc_id for doc in docs),
        weighting=TFIDF,
        model=model,
    )


def bm25_idf(n: int, n_t: int) -> float:
    """ln((n - n_t + 0.5) / (n_t + 0.5)); negative when n_t > n / 2."""
    return math.log((n - n_t + 0.5) / (n_t + 0.5))


def bm25_score(
    query_terms: Sequence[str],
    doc_id: int,
    params: Bm25Params,
    counts: Mapping[str, float],
) -> float:
    """Okapi BM25 score of one document against a bag of query terms."""
    length_norm = params.k1 * (
        1.0 - params.b + params.b * params.doc_lens[doc_id] / params.avg_doc_len
    )
    score = 0.0
    for term in query_terms:
        count = counts.get(term, 0)
        if count <= 0:
            continue
        idf = bm25_idf(params.n, params.doc_freqs.get(term, 0))
        score += idf * count * (params.k1 + 1.0) / (count + length_norm)
    return score


def bm25_weight_matrix(
    docs: Sequence[PreprocessedDocument],
    vocabulary: Vocabulary,
    params: Bm25Params,
) -> TermDocumentMatrix:
    """Per-entry BM25 weights; columns are not normalized at build time."""
    if len(vocabulary) == 0:
        raise ValueError("vocabulary is empty")
    counts = count_matrix(docs, vocabulary)
    idf = np.array([bm25_idf(params.n, df) for df in vocabulary.document_frequency])
    lens = np.array([params.doc_lens[doc.doc_id] for doc in docs], dtype=float)
    length_norm = params.k1 * (1.0 - params.b + params.b * lens / params.avg_doc_len)
    with np.errstate(invalid="ignore", divide="ignore"):
        weights = idf[:, None] * counts * (params.k1 + 1.0) / (counts + length_norm[None, :])
    weights[counts == 0] = 0.0
    model = TermWeighting(
        kind=BM25, idf=idf, k1=params.k1, b=params.b, avg_doc_len=params.avg_doc_len
    )
    return TermDocumentMatrix(
        weights=weights,
        vocabulary=vocabulary,
        doc_ids=tuple(doc.doc_id for doc in docs),
        weighting=BM25,
        model=model,
    )
