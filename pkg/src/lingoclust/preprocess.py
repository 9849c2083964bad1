"""Tokenization, stemming, stop-word marking and vocabulary construction.

Input is treated as English throughout. Stop words stay in the token
streams (flagged) so that phrases may span them internally; they are only
excluded from the vocabulary that backs the term-document matrix.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from . import porter
from .corpus_io import Document, LingoConfig, load_stopwords

_SENTENCE_BREAK = re.compile(r"[.!?\n]")
_TOKEN = re.compile(r"[^\W_]+", re.UNICODE)


@dataclass(frozen=True)
class Token:
    surface: str
    stem: str
    is_stopword: bool


@dataclass(frozen=True)
class PreprocessedDocument:
    doc_id: int
    sentences: tuple[tuple[Token, ...], ...]

    def tokens(self) -> Iterator[Token]:
        for sentence in self.sentences:
            yield from sentence

    @property
    def length(self) -> int:
        return sum(len(s) for s in self.sentences)


@dataclass(frozen=True)
class Vocabulary:
    """Filtered stem vocabulary with frequency statistics.

    Terms are lexicographically sorted stems; ``index`` maps a stem to its
    0-based matrix row. ``display_forms`` keeps the most frequent surface
    spelling of each stem for labels (ties broken lexicographically).
    """

    terms: tuple[str, ...]
    index: dict[str, int]
    corpus_frequency: tuple[int, ...]
    document_frequency: tuple[int, ...]
    display_forms: tuple[str, ...]

    def __len__(self) -> int:
        return len(self.terms)

    def __contains__(self, stem: str) -> bool:
        return stem in self.index


def _surface_sentences(text: str) -> list[list[str]]:
    """Sentences of original-case tokens (for display forms)."""
    sentences = []
    for chunk in _SENTENCE_BREAK.split(text):
        tokens = _TOKEN.findall(chunk)
        if tokens:
            sentences.append(tokens)
    return sentences


def tokenize(text: str) -> list[list[str]]:
    """Split text into sentences of lowercase alphanumeric tokens.

    Sentences break at '.', '!', '?' and newlines; tokens are maximal runs
    of alphanumeric characters. Empty sentences are dropped.
    """
    return [[t.lower() for t in s] for s in _surface_sentences(text)]


def stem_token(surface: str) -> str:
    """Porter stem of a lowercase token."""
    return porter.stem(surface)


def preprocess_document(doc: Document, stopwords: frozenset[str]) -> PreprocessedDocument:
    sentences = []
    for sentence in _surface_sentences(doc.text):
        tokens = []
        for surface in sentence:
            lowered = surface.lower()
            tokens.append(
                Token(surface=surface, stem=stem_token(lowered), is_stopword=lowered in stopwords)
            )
        sentences.append(tuple(tokens))
    return PreprocessedDocument(doc_id=doc.id, sentences=tuple(sentences))


def build_vocabulary(
    docs: Sequence[PreprocessedDocument],
    stopwords: frozenset[str],
    term_frequency_threshold: int,
) -> Vocabulary:
    corpus_freq: Counter[str] = Counter()
    doc_freq: Counter[str] = Counter()
    surface_freq: dict[str, Counter[str]] = {}
    for doc in docs:
        seen: set[str] = set()
        for token in doc.tokens():
            if token.is_stopword or token.stem in stopwords:
                continue
            corpus_freq[token.stem] += 1
            surface_freq.setdefault(token.stem, Counter())[token.surface] += 1
            seen.add(token.stem)
        for stem in seen:
            doc_freq[stem] += 1

    kept = sorted(s for s, n in corpus_freq.items() if n > term_frequency_threshold)
    display = []
    for stem in kept:
        counts = surface_freq[stem]
        display.append(min(counts, key=lambda s: (-counts[s], s)))
    return Vocabulary(
        terms=tuple(kept),
        index={s: i for i, s in enumerate(kept)},
        corpus_frequency=tuple(corpus_freq[s] for s in kept),
        document_frequency=tuple(doc_freq[s] for s in kept),
        display_forms=tuple(display),
    )


def preprocess_corpus(
    docs: Iterable[Document], config: LingoConfig
) -> tuple[list[PreprocessedDocument], Vocabulary]:
    """Tokenize, stem and flag all documents, then build the vocabulary."""
    stopwords = load_stopwords(config.stopword_path())
    processed = [preprocess_document(d, stopwords) for d in docs]
    if not processed:
        raise ValueError("empty corpus: no documents to preprocess")
    vocabulary = build_vocabulary(processed, stopwords, config.term_frequency_threshold)
    return processed, vocabulary
