"""Seeded synthetic corpora with planted topics and split synonym pairs.

Each topic gets a disjoint vocabulary: a two-word label phrase, a block of
shared core terms that appears in every document of the topic, and a set
of synonym pairs whose two sides are split across documents. A fixed
fraction of each topic's documents are "synonym-only": they carry the
core terms and the second synonym side but never the label words, so
literal matching cannot assign them to the topic label while rank-reduced
matching can, through co-occurrence.

Token counts per document are deterministic given the generator
parameters; the seed only drives word synthesis and sentence arrangement,
and identical seeds yield byte-identical corpora.
"""

from __future__ import annotations

import random
from pathlib import Path
from typing import Sequence

from .corpus_io import DEFAULT_STOPWORD_PATH, Document, load_stopwords

_CONSONANTS = "bcdfglmnprstvz"
_VOWELS = "aeiou"

# Every fifth document of a topic is synonym-only.
_SYN_ONLY_PERIOD = 5

_FILLER_STOPWORDS = ("the", "of", "and", "in", "for", "with", "a", "to")


def _make_word(rng: random.Random, syllables: int, used: set[str], avoid: frozenset[str]) -> str:
    while True:
        word = "".join(
            rng.choice(_CONSONANTS) + rng.choice(_VOWELS) for _ in range(syllables)
        )
        if word not in used and word not in avoid:
            used.add(word)
            return word


def generate_corpus(
    topics: int = 3,
    docs_per_topic: int = 30,
    synonym_pairs: int = 5,
    seed: int = 7,
    core_terms: int = 32,
    core_tf: int = 2,
    label_tf: int = 3,
) -> list[Document]:
    """Build a planted-topic corpus; ids are 1..topics*docs_per_topic."""
    if topics < 1 or docs_per_topic < 1 or synonym_pairs < 0:
        raise ValueError("topics and docs_per_topic must be >= 1, synonym_pairs >= 0")
    rng = random.Random(seed)
    stopwords = load_stopwords(DEFAULT_STOPWORD_PATH)
    used: set[str] = set()

    docs: list[Document] = []
    doc_id = 0
    for _ in range(topics):
        label = (
            _make_word(rng, 3, used, stopwords),
            _make_word(rng, 3, used, stopwords),
        )
        core = [_make_word(rng, 3, used, stopwords) for _ in range(core_terms)]
        pairs = [
            (_make_word(rng, 3, used, stopwords), _make_word(rng, 3, used, stopwords))
            for _ in range(synonym_pairs)
        ]
        for d in range(docs_per_topic):
            doc_id += 1
            synonym_only = d % _SYN_ONLY_PERIOD == _SYN_ONLY_PERIOD - 1
            pool = core * core_tf
            pool += [a for a, _ in pairs] if not synonym_only else [b for _, b in pairs]
            pool += [_make_word(rng, 4, used, stopwords) for _ in range(rng.randint(2, 4))]
            rng.shuffle(pool)
            body = _render_doc(rng, pool, label if not synonym_only else None, label_tf)
            docs.append(Document(id=doc_id, title="", body=body))
    return docs


def _render_doc(
    rng: random.Random,
    pool: list[str],
    label: tuple[str, str] | None,
    label_tf: int,
) -> str:
    sentences: list[list[object]] = []
    i = 0
    while i < len(pool):
        take = rng.randint(5, 9)
        sentences.append(list(pool[i : i + take]))
        i += take
    if label is not None:
        slots = rng.sample(range(len(sentences)), k=min(label_tf, len(sentences)))
        extra = label_tf - len(slots)
        for s in slots:
            sentences[s].insert(rng.randrange(len(sentences[s]) + 1), label)
        for _ in range(extra):
            sentences.append([label])
    rendered = []
    for sentence in sentences:
        words: list[str] = []
        for item in sentence:
            if rng.random() < 0.35:
                words.append(rng.choice(_FILLER_STOPWORDS))
            if isinstance(item, tuple):
                words.extend(item)
            else:
                words.append(item)
        rendered.append(" ".join(words) + ".")
    return "\n".join(rendered) + "\n"


def write_corpus(docs: Sequence[Document], out_dir: str | Path) -> list[Path]:
    """Write one text file per document, named so filename order is id order."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    width = max(3, len(str(len(docs))))
    paths = []
    for doc in docs:
        path = out_dir / f"doc_{doc.id:0{width}d}.txt"
        path.write_text(doc.body, encoding="utf-8")
        paths.append(path)
    return paths
