"""Frequent complete phrase discovery over a suffix array.

Documents are concatenated into one token stream of stems with a unique
sentinel between sentences, so phrases never cross sentence boundaries and
boundary contexts never collide. A phrase is *complete* when no single
token extends it on the left or right in every occurrence; occurrences are
counted as starting positions, overlaps included.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .corpus_io import LingoConfig
from .preprocess import PreprocessedDocument

# Sentinels sort below every token: stems are non-empty alphanumeric
# strings, so any string starting with '\x00' compares lower.
_SENTINEL_PREFIX = "\x00"


@dataclass(frozen=True)
class Phrase:
    """A frequent complete token sequence (stems) with its display form."""

    terms: tuple[str, ...]
    occurrence_count: int
    surface_form: str

    def __len__(self) -> int:
        return len(self.terms)


@dataclass(frozen=True)
class SuffixArray:
    tokens: tuple
    sa: tuple[int, ...]
    lcp: tuple[int, ...]


def build_suffix_array(tokens: Sequence) -> SuffixArray:
    """Sort all suffixes of ``tokens`` and compute the LCP array.

    Prefix-doubling construction, O(n log^2 n); ``lcp[i]`` is the length of
    the common prefix of the suffixes at ``sa[i-1]`` and ``sa[i]`` (0 at
    i=0).
    """
    tokens = tuple(tokens)
    n = len(tokens)
    if n == 0:
        return SuffixArray(tokens=(), sa=(), lcp=())

    order = {t: i for i, t in enumerate(sorted(set(tokens)))}
    rank = np.fromiter((order[t] for t in tokens), dtype=np.int64, count=n)
    step = 1
    while int(rank.max()) < n - 1:
        second = np.full(n, -1, dtype=np.int64)
        second[: n - step] = rank[step:]
        idx = np.lexsort((second, rank))
        new_rank = np.empty(n, dtype=np.int64)
        new_rank[idx[0]] = 0
        changed = (np.diff(rank[idx]) != 0) | (np.diff(second[idx]) != 0)
        new_rank[idx[1:]] = np.cumsum(changed)
        rank = new_rank
        step *= 2
    sa = np.argsort(rank)

    lcp = _kasai(tokens, sa)
    return SuffixArray(tokens=tokens, sa=tuple(int(i) for i in sa), lcp=tuple(lcp))


def _kasai(tokens: tuple, sa: np.ndarray) -> list[int]:
    n = len(sa)
    pos = [0] * n
    for r, i in enumerate(sa):
        pos[i] = r
    lcp = [0] * n
    h = 0
    for i in range(n):
        r = pos[i]
        if r == 0:
            h = 0
            continue
        j = sa[r - 1]
        while i + h < n and j + h < n and tokens[i + h] == tokens[j + h]:
            h += 1
        lcp[r] = h
        if h:
            h -= 1
    return lcp


def _lcp_intervals(lcp: Sequence[int]):
    """Yield (depth, lb, rb) for every internal LCP interval, rb inclusive."""
    n = len(lcp)
    stack: list[tuple[int, int]] = [(0, 0)]
    for i in range(1, n):
        lb = i - 1
        while lcp[i] < stack[-1][0]:
            depth, lb = stack.pop()
            yield depth, lb, i - 1
        if lcp[i] > stack[-1][0]:
            stack.append((lcp[i], lb))
    while stack:
        depth, lb = stack.pop()
        if depth > 0:
            yield depth, lb, n - 1


class _Stream:
    """Concatenated corpus stream with per-position metadata."""

    def __init__(self, docs: Sequence[PreprocessedDocument]):
        stems: list[str] = []
        surfaces: list[str | None] = []
        sentinel = 0
        stems.append(_SENTINEL_PREFIX + "0")
        surfaces.append(None)
        for doc in docs:
            for sentence in doc.sentences:
                for token in sentence:
                    stems.append(token.stem)
                    surfaces.append(token.surface)
                sentinel += 1
                stems.append(_SENTINEL_PREFIX + str(sentinel))
                surfaces.append(None)
        self.stems = stems
        self.surfaces = surfaces

    @staticmethod
    def is_sentinel(token: str) -> bool:
        return token.startswith(_SENTINEL_PREFIX)


def _interval_for(stream: list[str], sa: Sequence[int], phrase: tuple[str, ...]) -> tuple[int, int]:
    """Half-open SA interval of suffixes having ``phrase`` as a prefix."""

    def compare(pos: int) -> int:
        piece = stream[pos : pos + len(phrase)]
        for a, b in zip(piece, phrase):
            if a < b:
                return -1
            if a > b:
                return 1
        if len(piece) < len(phrase):
            return -1
        return 0

    lo, hi = 0, len(sa)
    while lo < hi:
        mid = (lo + hi) // 2
        if compare(sa[mid]) < 0:
            lo = mid + 1
        else:
            hi = mid
    start = lo
    lo, hi = start, len(sa)
    while lo < hi:
        mid = (lo + hi) // 2
        if compare(sa[mid]) == 0:
            lo = mid + 1
        else:
            hi = mid
    return start, lo


def _left_complete(stream: list[str], sa: Sequence[int], lb: int, rb: int) -> bool:
    first = stream[sa[lb] - 1]
    for i in range(lb + 1, rb + 1):
        if stream[sa[i] - 1] != first:
            return True
    return _Stream.is_sentinel(first)


def stopword_stems(docs: Sequence[PreprocessedDocument]) -> frozenset[str]:
    """Stems observed on stop-word-flagged tokens anywhere in the corpus."""
    return frozenset(
        t.stem for doc in docs for t in doc.tokens() if t.is_stopword
    )


def _trim(terms: tuple[str, ...], stop_stems: frozenset[str]) -> tuple[str, ...]:
    start, end = 0, len(terms)
    while start < end and terms[start] in stop_stems:
        start += 1
    while end > start and terms[end - 1] in stop_stems:
        end -= 1
    return terms[start:end]


def discover_frequent_complete_phrases(
    docs: Sequence[PreprocessedDocument], config: LingoConfig
) -> list[Phrase]:
    """Mine frequent complete phrases from the concatenated corpus.

    Returns phrases with occurrence count strictly above the term frequency
    threshold, trimmed of leading/trailing stop words, at most
    ``config.max_phrase_length`` tokens long, sorted by their stem tuples.
    """
    threshold = config.term_frequency_threshold
    max_len = config.max_phrase_length
    stream = _Stream(docs)
    stems = stream.stems
    suffixes = build_suffix_array(stems)
    sa, lcp = suffixes.sa, suffixes.lcp
    stop_stems = stopword_stems(docs)

    raw: dict[tuple[str, ...], int] = {}
    for depth, lb, rb in _lcp_intervals(lcp):
        if depth > max_len:
            continue
        count = rb - lb + 1
        if count <= threshold:
            continue
        if not _left_complete(stems, sa, lb, rb):
            continue
        start = sa[lb]
        raw[tuple(stems[start : start + depth])] = count

    if threshold < 1:
        # Count-1 complete phrases are exactly the whole sentences whose
        # token sequence occurs once in the corpus.
        for doc in docs:
            for sentence in doc.sentences:
                if not 1 <= len(sentence) <= max_len:
                    continue
                phrase = tuple(t.stem for t in sentence)
                lo, hi = _interval_for(stems, sa, phrase)
                if hi - lo == 1:
                    raw[phrase] = 1

    trimmed: dict[tuple[str, ...], tuple[int, int]] = {}
    for phrase in raw:
        cut = _trim(phrase, stop_stems)
        if not cut or cut in trimmed:
            continue
        lo, hi = _interval_for(stems, sa, cut)
        trimmed[cut] = (lo, hi)

    phrases = []
    for terms in sorted(trimmed):
        lo, hi = trimmed[terms]
        count = hi - lo
        surfaces = Counter()
        for i in range(lo, hi):
            start = sa[i]
            surfaces[" ".join(stream.surfaces[start : start + len(terms)])] += 1
        surface = min(surfaces, key=lambda s: (-surfaces[s], s))
        phrases.append(Phrase(terms=terms, occurrence_count=count, surface_form=surface))
    return phrases
