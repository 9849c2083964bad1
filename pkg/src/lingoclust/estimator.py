"""scikit-learn style front end for the clustering pipeline."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, ClusterMixin

from .corpus_io import LingoConfig, coerce_documents
from .pipeline import run_lingo


class LingoClusterer(ClusterMixin, BaseEstimator):
    """Cluster short documents under induced, human-readable labels.

    Parameters mirror the run configuration; see ``LingoConfig``. ``fit``
    accepts an iterable of raw strings, ``(title, body)`` pairs, dicts
    with ``title``/``body`` keys, or ``Document`` objects.

    Attributes set by ``fit``:

    result_ : ClusteringResult
        The full clustering, including scores and the "others" group.
    clusters_ : list[Cluster]
        Clusters ordered by descending score.
    cluster_labels_ : list[str]
        Display label of each cluster.
    labels_ : ndarray of shape (n_documents,)
        Index of the best-scoring cluster containing each document, or -1
        for documents in the "others" group. Documents may belong to
        several clusters; ``result_`` keeps the full membership.
    """

    def __init__(
        self,
        strategy: str = "vsm",
        term_frequency_threshold: int = 2,
        candidate_label_threshold: float = 0.775,
        label_similarity_threshold: float = 0.30,
        snippet_assignment_threshold: float = 0.15,
        k1: float = 1.2,
        b: float = 0.75,
        stopword_list_path: str | None = None,
        max_phrase_length: int = 8,
    ):
        self.strategy = strategy
        self.term_frequency_threshold = term_frequency_threshold
        self.candidate_label_threshold = candidate_label_threshold
        self.label_similarity_threshold = label_similarity_threshold
        self.snippet_assignment_threshold = snippet_assignment_threshold
        self.k1 = k1
        self.b = b
        self.stopword_list_path = stopword_list_path
        self.max_phrase_length = max_phrase_length

    def _config(self) -> LingoConfig:
        return LingoConfig(**self.get_params())

    def fit(self, X, y=None):
        """Cluster the documents in X."""
        documents = coerce_documents(X)
        self.result_ = run_lingo(documents, self._config())
        self.clusters_ = self.result_.clusters
        self.others_ = list(self.result_.others)
        self.cluster_labels_ = [c.label.phrase.surface_form for c in self.clusters_]
        labels = np.full(len(documents), -1, dtype=int)
        for idx in reversed(range(len(self.clusters_))):
            for doc_id in self.clusters_[idx].members:
                labels[doc_id - 1] = idx
        self.labels_ = labels
        return self
