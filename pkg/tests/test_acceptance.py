"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
report lines.
"""

import math
import random
import time
from contextlib import contextmanager

import numpy as np
import pytest

from lingoclust import LingoConfig, compare_strategies, generate_corpus
from lingoclust.corpus_io import Document, format_score, read_result, result_to_json, write_outputs
from lingoclust.linalg import reconstruct_rank_k, svd
from lingoclust.phrases import discover_frequent_complete_phrases
from lingoclust.pipeline import (
    build_phrase_matrix,
    candidate_phrases,
    dedupe_labels,
    discover_contents,
    induce_label_candidates,
    label_matrix,
    run_lingo,
    select_k,
    weighted_matrix,
)
from lingoclust.preprocess import preprocess_corpus

from test_phrases import phrase_oracle, random_corpus
from test_pipeline import fake_factors


@contextmanager
def criterion(number, name):
    try:
        yield
    except BaseException:
        print(f"criterion {number:2d} ({name}): FAIL")
        raise
    print(f"criterion {number:2d} ({name}): PASS")


def word_soup_corpus(rng, n_docs=20, vocab_size=24):
    pool = [
        "bolt", "crank", "diode", "ember", "flux", "gear", "helix", "ion",
        "joule", "krypton", "lumen", "motor", "node", "ohm", "pivot", "quark",
        "rotor", "stator", "torque", "unit", "valve", "watt", "xenon", "yoke",
        "zinc", "anode", "brush", "cable", "drum", "shaft",
    ]
    words = rng.sample(pool, vocab_size)
    docs = []
    for i in range(n_docs):
        sentences = []
        for _ in range(rng.randint(1, 3)):
            sentences.append(" ".join(rng.choice(words) for _ in range(rng.randint(3, 8))))
        docs.append(Document(id=i + 1, title="", body=". ".join(sentences) + "."))
    return docs


def strategy_run(corpus, config):
    """Compose the pipeline stages, returning the result and similarities."""
    docs, vocabulary = preprocess_corpus(corpus, config)
    phrases = discover_frequent_complete_phrases(docs, config)
    matrix = weighted_matrix(docs, vocabulary, config)
    factors = svd(matrix.weights)
    choice = select_k(factors, config.candidate_label_threshold)
    cands = candidate_phrases(phrases, vocabulary)
    phrase_mat, kept = build_phrase_matrix(cands, vocabulary, matrix.model)
    induced = induce_label_candidates(factors, choice.k, phrase_mat, kept)
    survivors = dedupe_labels(induced, config.label_similarity_threshold)
    assignment = discover_contents(
        config.strategy, label_matrix(survivors), matrix, factors, choice.k,
        config.snippet_assignment_threshold,
    )
    from lingoclust.pipeline import form_final_clusters

    result = form_final_clusters(survivors, assignment, config, corpus_size=len(corpus))
    return result, assignment, factors


@pytest.fixture(scope="module")
def headline_runs():
    """Criterion 5 corpus clustered under both strategies, defaults only."""
    corpus = generate_corpus(topics=3, docs_per_topic=30, synonym_pairs=5, seed=7)
    report = compare_strategies(corpus, LingoConfig(), ["vsm", "lsi"])
    return corpus, report


@pytest.fixture(scope="module")
def equivalence_runs():
    """Criterion 2: per-seed (vsm result, lsi result, similarity delta)."""
    runs = []
    for seed in range(20):
        rng = random.Random(1000 + seed)
        corpus = word_soup_corpus(rng)
        base = LingoConfig(term_frequency_threshold=1, candidate_label_threshold=1.0)
        vsm_result, vsm_assign, factors = strategy_run(corpus, base.with_strategy("vsm"))
        lsi_result, lsi_assign, _ = strategy_run(corpus, base.with_strategy("lsi"))
        assert factors.r <= 50  # corpus construction keeps the term count small
        delta = float(np.max(np.abs(vsm_assign.similarities - lsi_assign.similarities)))
        runs.append((vsm_result, lsi_result, delta))
    return runs


def test_criterion_1_svd_invariants():
    with criterion(1, "SVD invariant suite"):
        start = time.monotonic()
        rng = np.random.default_rng(42)
        for _ in range(50):
            t = int(rng.integers(1, 51))
            d = int(rng.integers(1, 51))
            a = rng.standard_normal((t, d)) * float(rng.uniform(0.1, 10))
            factors = svd(a)
            r = factors.r
            assert np.max(np.abs(factors.u.T @ factors.u - np.eye(r))) <= 1e-8
            assert np.max(np.abs(factors.v.T @ factors.v - np.eye(r))) <= 1e-8
            approx = (factors.u * factors.sigma) @ factors.v.T
            assert np.linalg.norm(a - approx) <= 1e-8 * np.linalg.norm(a)
            assert np.all(np.diff(factors.sigma) <= 0)
            norm_a = np.linalg.norm(a)
            for k in range(1, r + 1):
                residual = np.linalg.norm(a - reconstruct_rank_k(factors, k)) ** 2
                tail = float(np.sum(factors.sigma[k:] ** 2))
                scale = max(norm_a**2, 1.0)
                assert abs(residual - tail) <= 1e-8 * scale
        assert time.monotonic() - start < 10.0


def test_criterion_2_full_rank_equivalence(equivalence_runs):
    with criterion(2, "full-rank LSI equals VSM"):
        start = time.monotonic()
        for vsm_result, lsi_result, delta in equivalence_runs:
            vsm_members = [(c.label.phrase.terms, tuple(c.members)) for c in vsm_result.clusters]
            lsi_members = [(c.label.phrase.terms, tuple(c.members)) for c in lsi_result.clusters]
            assert vsm_members == lsi_members
            assert vsm_result.others == lsi_result.others
            assert delta < 1e-8
        assert time.monotonic() - start < 10.0


def test_criterion_3_bm25_unit_values():
    with criterion(3, "BM25 unit values"):
        from lingoclust.weighting import Bm25Params, bm25_idf, bm25_score

        # Exact formula match against an independent re-evaluation; the
        # 4-decimal constant is the formula's own value at (100, 10).
        assert abs(bm25_idf(100, 10) - math.log((100 - 10 + 0.5) / (10 + 0.5))) <= 1e-12
        assert abs(bm25_idf(100, 10) - 2.153975) <= 1e-4
        assert bm25_idf(10, 5) == 0.0
        assert bm25_idf(10, 6) < 0.0

        params = Bm25Params(
            k1=1.2, b=0.75, avg_doc_len=10.0, doc_lens={1: 10, 2: 40},
            doc_freqs={"term": 3}, n=10,
        )
        idf = bm25_idf(10, 3)
        score = bm25_score(["term"], 1, params, {"term": 3})
        assert abs(score / idf - 6.6 / 4.2) <= 1e-12

        flat = Bm25Params(
            k1=1.2, b=0.0, avg_doc_len=21.0, doc_lens={1: 2, 2: 40},
            doc_freqs={"term": 1}, n=5,
        )
        short = bm25_score(["term"], 1, flat, {"term": 4})
        long = bm25_score(["term"], 2, flat, {"term": 4})
        assert short == long


def test_criterion_4_phrase_miner_oracle():
    with criterion(4, "phrase miner equals brute-force oracle"):
        start = time.monotonic()
        rng = random.Random(2024)
        for i in range(100):
            docs = random_corpus(rng)
            threshold = 1 if i % 2 == 0 else 2
            config = LingoConfig(term_frequency_threshold=threshold)
            processed, _ = preprocess_corpus(docs, config)
            mined = discover_frequent_complete_phrases(processed, config)
            mined_set = {(p.terms, p.occurrence_count) for p in mined}
            assert mined_set == phrase_oracle(processed, threshold, config.max_phrase_length)
        assert time.monotonic() - start < 20.0


def test_criterion_5_headline_effect(headline_runs):
    with criterion(5, "LSI assigns more documents than VSM"):
        start = time.monotonic()
        _, report = headline_runs
        summaries = report.summaries()
        vsm, lsi = summaries["vsm"], summaries["lsi"]
        assert lsi.assigned_doc_count > vsm.assigned_doc_count
        assert lsi.others_count < vsm.others_count
        ratio = lsi.assigned_doc_count / vsm.assigned_doc_count
        assert ratio >= 1.2
        print(
            f"  [headline] vsm assigned={vsm.assigned_doc_count} others={vsm.others_count}; "
            f"lsi assigned={lsi.assigned_doc_count} others={lsi.others_count}; "
            f"improvement={100 * (ratio - 1):.0f}% (reported effect: 40-50%)"
        )
        assert time.monotonic() - start < 10.0


def test_criterion_6_score_identity(headline_runs, equivalence_runs):
    with criterion(6, "cluster score = label score x member count"):
        _, report = headline_runs
        results = list(report.results.values())
        for vsm_result, lsi_result, _ in equivalence_runs:
            results.extend([vsm_result, lsi_result])
        assert any(result.clusters for result in results)
        for result in results:
            for cluster in result.clusters:
                assert cluster.score == cluster.label.score * len(cluster.members)


def test_criterion_7_partition_and_monotonicity(headline_runs):
    with criterion(7, "partition and threshold monotonicity"):
        corpus, report = headline_runs
        all_ids = set(range(1, len(corpus) + 1))
        for result in report.results.values():
            assigned = result.assigned_ids()
            assert assigned | set(result.others) == all_ids
            assert assigned & set(result.others) == set()

        base = LingoConfig()
        raised = LingoConfig(
            snippet_assignment_threshold=base.snippet_assignment_threshold + 0.1
        )
        for strategy in ("vsm", "lsi"):
            low = report.results[strategy]
            high = run_lingo(corpus, raised.with_strategy(strategy))
            low_members = {c.label.phrase.terms: set(c.members) for c in low.clusters}
            high_members = {c.label.phrase.terms: set(c.members) for c in high.clusters}
            for terms, members in high_members.items():
                assert members <= low_members.get(terms, set())


def test_criterion_8_k_selection():
    with criterion(8, "k selection on reference spectra"):
        assert select_k(fake_factors([3.0, 2.0, 1.0]), 0.8).k == 2
        for threshold in (0.05, 0.3, 0.775, 1.0):
            assert select_k(fake_factors([5.0]), threshold).k == 1
        assert select_k(fake_factors([3.0, 2.0, 1.0]), 1.0).k == 3


def test_criterion_9_scale():
    with criterion(9, "115-document corpus in under 5 s per strategy"):
        corpus = generate_corpus(topics=5, docs_per_topic=23, synonym_pairs=5, seed=7)
        assert len(corpus) == 115
        for strategy in ("vsm", "lsi", "lsi-bm25"):
            start = time.monotonic()
            result = run_lingo(corpus, LingoConfig(strategy=strategy))
            elapsed = time.monotonic() - start
            assert elapsed < 5.0
            assert result.corpus_size == 115


def test_criterion_10_format_fidelity(headline_runs, tmp_path):
    with criterion(10, "output format fidelity"):
        assert format_score(5.34) == "5.34E+00"
        assert format_score(0.49) == "4.90E-01"

        _, report = headline_runs
        result = report.results["lsi"]
        write_outputs(result, tmp_path, dataset="headline")
        table = (tmp_path / "clusters.txt").read_text().splitlines()
        for line, cluster in zip(table, result.clusters):
            assert format_score(cluster.score) in line

        raw = (tmp_path / "result.json").read_text()
        parsed = read_result(tmp_path / "result.json")
        assert parsed == result
        assert result_to_json(parsed) + "\n" == raw
