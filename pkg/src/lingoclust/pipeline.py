"""The clustering pipeline: label induction, content discovery, clusters.

Labels are induced from the leading left singular vectors of the weighted
term-document matrix: each abstract concept is labeled by the candidate
phrase (or frequent single term) whose vector has the largest absolute
projection on it. Content discovery then assigns documents to labels by
cosine thresholding against the raw matrix (vsm), its rank-k
reconstruction (lsi) or the rank-k reconstruction of the BM25-weighted
matrix (lsi-bm25). Unassigned documents fall into the "others" group.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from typing import Sequence

import numpy as np
import scipy.sparse as sp

from .corpus_io import ClusteringResult, Document, LingoConfig
from .linalg import SvdFactors, reconstruct_rank_k, singular_mass_quality, svd, TruncationChoice
from .phrases import Phrase, discover_frequent_complete_phrases, stopword_stems
from .preprocess import PreprocessedDocument, Vocabulary, preprocess_corpus
from .weighting import (
    Bm25Params,
    TermDocumentMatrix,
    TermWeighting,
    bm25_weight_matrix,
    tfidf_matrix,
    unit_normalize_columns,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LabelCandidate:
    """A candidate cluster label with its concept-alignment score."""

    phrase: Phrase
    score: float
    term_vector: np.ndarray

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LabelCandidate):
            return NotImplemented
        return (
            self.phrase == other.phrase
            and self.score == other.score
            and np.array_equal(self.term_vector, other.term_vector)
        )


@dataclass
class Cluster:
    label: LabelCandidate
    members: list[int]
    score: float

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Cluster):
            return NotImplemented
        return (
            self.label == other.label
            and self.members == other.members
            and self.score == other.score
        )


@dataclass
class ContentAssignment:
    """Per-label member lists plus the unassigned documents."""

    members: list[list[int]]
    unassigned: list[int]
    similarities: np.ndarray


def select_k(factors: SvdFactors, candidate_label_threshold: float) -> TruncationChoice:
    """Smallest k whose cumulative singular-value mass reaches the
    threshold; falls back to the full rank."""
    if factors.r < 1:
        raise ValueError("matrix has rank 0, nothing to truncate")
    for k in range(1, factors.r + 1):
        quality = singular_mass_quality(factors.sigma, k)
        if quality >= candidate_label_threshold:
            return TruncationChoice(k=k, quality=quality)
    return TruncationChoice(k=factors.r, quality=1.0)


def candidate_phrases(phrases: Sequence[Phrase], vocabulary: Vocabulary) -> list[Phrase]:
    """Mined phrases plus every frequent single term, deduplicated."""
    by_terms = {p.terms: p for p in phrases}
    for i, stem in enumerate(vocabulary.terms):
        key = (stem,)
        if key not in by_terms:
            by_terms[key] = Phrase(
                terms=key,
                occurrence_count=vocabulary.corpus_frequency[i],
                surface_form=vocabulary.display_forms[i],
            )
    return [by_terms[t] for t in sorted(by_terms)]


def build_phrase_matrix(
    candidates: Sequence[Phrase],
    vocabulary: Vocabulary,
    model: TermWeighting,
) -> tuple[sp.csc_matrix, list[Phrase]]:
    """Weight each candidate as a pseudo-document and unit-normalize.

    Returns the t x p sparse matrix and the candidates actually kept;
    candidates with no vocabulary overlap (or an all-zero vector) are
    dropped with a warning.
    """
    if not candidates:
        raise ValueError("no candidate phrases")
    rows: list[int] = []
    cols: list[int] = []
    values: list[float] = []
    kept: list[Phrase] = []
    for phrase in candidates:
        counts = Counter(
            vocabulary.index[t] for t in phrase.terms if t in vocabulary.index
        )
        vec = model.vector(counts, doc_len=len(phrase.terms))
        norm = np.linalg.norm(vec)
        if norm == 0:
            logger.warning("dropping label candidate with no weighted terms: %r", phrase.surface_form)
            continue
        col = len(kept)
        kept.append(phrase)
        for i in np.nonzero(vec)[0]:
            rows.append(int(i))
            cols.append(col)
            values.append(vec[i] / norm)
    matrix = sp.csc_matrix(
        (values, (rows, cols)), shape=(len(vocabulary), len(kept))
    )
    return matrix, kept


def induce_label_candidates(
    factors: SvdFactors,
    k: int,
    phrase_matrix: sp.csc_matrix,
    candidates: Sequence[Phrase],
) -> list[LabelCandidate]:
    """Label each of the k abstract concepts with its best-aligned phrase.

    The winner of concept i is the phrase column maximizing |U_k^T P| on
    row i (ties go to the lowest column index); its score is that absolute
    component. Concepts with no non-zero alignment yield no label.
    """
    if phrase_matrix.shape[1] != len(candidates):
        raise ValueError("phrase matrix and candidate list disagree")
    projections = np.abs(phrase_matrix.T.dot(factors.u[:, :k]).T)
    labels = []
    for i in range(k):
        j = int(np.argmax(projections[i]))
        score = float(projections[i, j])
        if score <= 0.0:
            continue
        labels.append(
            LabelCandidate(
                phrase=candidates[j],
                score=min(score, 1.0),
                term_vector=phrase_matrix[:, [j]].toarray().ravel(),
            )
        )
    return labels


def dedupe_labels(
    candidates: Sequence[LabelCandidate], label_similarity_threshold: float
) -> list[LabelCandidate]:
    """Collapse groups of similar labels to their best-scoring member.

    Groups are connected components of the graph with an edge wherever the
    pairwise cosine reaches the threshold; ties on score break toward the
    lexicographically smaller phrase.
    """
    m = len(candidates)
    if m == 0:
        return []
    vectors = np.column_stack([c.term_vector for c in candidates])
    cosines = vectors.T @ vectors  # columns are unit vectors
    parent = list(range(m))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in range(m):
        for j in range(i + 1, m):
            if cosines[i, j] >= label_similarity_threshold:
                parent[find(i)] = find(j)

    best: dict[int, LabelCandidate] = {}
    for i, candidate in enumerate(candidates):
        root = find(i)
        incumbent = best.get(root)
        if incumbent is None or (-candidate.score, candidate.phrase.terms) < (
            -incumbent.score,
            incumbent.phrase.terms,
        ):
            best[root] = candidate
    survivors = [c for c in candidates if any(c is b for b in best.values())]
    return survivors


def label_matrix(labels: Sequence[LabelCandidate]) -> np.ndarray:
    """Stack surviving label vectors into the t x m matrix Q."""
    if not labels:
        raise ValueError("no labels to stack")
    return np.column_stack([lab.term_vector for lab in labels])


def discover_contents(
    strategy: str,
    q_matrix: np.ndarray,
    matrix: TermDocumentMatrix,
    factors: SvdFactors,
    k: int,
    snippet_assignment_threshold: float,
) -> ContentAssignment:
    """Assign documents to labels by cosine above the snippet threshold.

    vsm scores against the weighted matrix itself, lsi and lsi-bm25
    against its rank-k reconstruction (the matrix and factors already
    carry the strategy's weighting).
    """
    if strategy == "vsm":
        doc_columns = matrix.weights
    elif strategy in ("lsi", "lsi-bm25"):
        doc_columns = reconstruct_rank_k(factors, k)
    else:
        raise ValueError(f"unknown strategy: {strategy!r}")
    similarities = q_matrix.T @ unit_normalize_columns(doc_columns)

    members: list[list[int]] = []
    assigned = np.zeros(len(matrix.doc_ids), dtype=bool)
    for i in range(similarities.shape[0]):
        hits = np.nonzero(similarities[i] > snippet_assignment_threshold)[0]
        assigned[hits] = True
        members.append(sorted(matrix.doc_ids[j] for j in hits))
    unassigned = sorted(matrix.doc_ids[j] for j in np.nonzero(~assigned)[0])
    return ContentAssignment(members=members, unassigned=unassigned, similarities=similarities)


def form_final_clusters(
    labels: Sequence[LabelCandidate],
    assignment: ContentAssignment,
    config: LingoConfig,
    corpus_size: int,
) -> ClusteringResult:
    """Score label groups, drop empty ones and order by descending score."""
    clusters = []
    for label, members in zip(labels, assignment.members):
        if not members:
            continue
        clusters.append(
            Cluster(label=label, members=members, score=label.score * len(members))
        )
    clusters.sort(key=lambda c: (-c.score, c.label.phrase.terms))
    return ClusteringResult(
        clusters=clusters,
        others=list(assignment.unassigned),
        config=config,
        corpus_size=corpus_size,
    )


def weighted_matrix(
    docs: Sequence[PreprocessedDocument],
    vocabulary: Vocabulary,
    config: LingoConfig,
) -> TermDocumentMatrix:
    """The strategy's term-document matrix: BM25 for lsi-bm25, else tf-idf."""
    if config.strategy == "lsi-bm25":
        params = Bm25Params.from_corpus(docs, vocabulary, k1=config.k1, b=config.b)
        return bm25_weight_matrix(docs, vocabulary, params)
    return tfidf_matrix(docs, vocabulary)


def run_lingo(corpus: Sequence[Document], config: LingoConfig) -> ClusteringResult:
    """Run the full pipeline on a corpus and return the clustering."""
    docs, vocabulary = preprocess_corpus(corpus, config)
    if len(vocabulary) == 0:
        raise ValueError("no clusterable terms: vocabulary is empty after filtering")
    phrases = discover_frequent_complete_phrases(docs, config)

    matrix = weighted_matrix(docs, vocabulary, config)
    factors = svd(matrix.weights)
    if factors.r == 0:
        raise ValueError("no clusterable terms: term-document matrix has rank 0")
    choice = select_k(factors, config.candidate_label_threshold)

    stop_stems = stopword_stems(docs)
    candidates = [
        p for p in candidate_phrases(phrases, vocabulary)
        if not (len(p.terms) == 1 and p.terms[0] in stop_stems)
    ]
    phrase_mat, kept = build_phrase_matrix(candidates, vocabulary, matrix.model)
    induced = induce_label_candidates(factors, choice.k, phrase_mat, kept)
    survivors = dedupe_labels(induced, config.label_similarity_threshold)
    if not survivors:
        return ClusteringResult(
            clusters=[], others=sorted(matrix.doc_ids), config=config, corpus_size=len(corpus)
        )

    assignment = discover_contents(
        config.strategy,
        label_matrix(survivors),
        matrix,
        factors,
        choice.k,
        config.snippet_assignment_threshold,
    )
    return form_final_clusters(survivors, assignment, config, corpus_size=len(corpus))
