"""Dictionary construction and sparse document vectors.

Sparse vectors are plain ``dict`` objects mapping a vocabulary index to a
nonzero weight. ``FrequencyVector`` wraps one together with the raw counts
and the document length it came from.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence, Union

from .preprocess import Document

SparseVector = Mapping[int, float]


@dataclass(frozen=True)
class Vocabulary:
    terms: tuple[str, ...]
    index: Mapping[str, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        terms = tuple(self.terms)
        index = {t: i for i, t in enumerate(terms)}
        if len(index) != len(terms):
            raise ValueError("vocabulary terms must be distinct")
        object.__setattr__(self, "terms", terms)
        object.__setattr__(self, "index", index)

    @property
    def m(self) -> int:
        return len(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __contains__(self, term: object) -> bool:
        return term in self.index

    def get(self, term: str) -> int | None:
        return self.index.get(term)


@dataclass(frozen=True)
class FrequencyVector:
    """Relative frequency measure of one document on a vocabulary.

    ``counts`` holds c(t, d) for in-vocabulary terms, ``entries`` the
    corresponding weights c(t, d) / |d|. Out-of-vocabulary tokens are absent
    from both but are included in ``source_len``.
    """

    counts: Mapping[int, int]
    source_len: int
    vocabulary: Vocabulary = field(repr=False, compare=False)
    entries: Mapping[int, float] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        n = self.source_len
        entries = {i: c / n for i, c in self.counts.items()} if n else {}
        object.__setattr__(self, "entries", entries)

    def total(self) -> float:
        return math.fsum(self.entries.values())


def build_vocabulary(docs: Iterable[Document]) -> Vocabulary:
    """Distinct tokens in order of first appearance."""
    seen: dict[str, None] = {}
    for doc in docs:
        for token in doc.tokens:
            if token not in seen:
                seen[token] = None
    if not seen:
        raise ValueError("cannot build a vocabulary: every document is empty")
    return Vocabulary(tuple(seen))


def term_count(doc: Document, term: str) -> int:
    return doc.tokens.count(term)


def frequency_vector(doc: Document, vocab: Vocabulary) -> FrequencyVector:
    counts: Counter[int] = Counter()
    index = vocab.index
    for token in doc.tokens:
        i = index.get(token)
        if i is not None:
            counts[i] += 1
    return FrequencyVector(dict(counts), doc.length, vocab)


def document_frequency(docs: Iterable[Document], term: str) -> int:
    return sum(1 for doc in docs if term in doc.tokens)


def tfidf_vector(doc: Document, docs: Sequence[Document], vocab: Vocabulary) -> dict[int, float]:
    """Raw count times natural-log inverse document frequency.

    Terms present in every document of ``docs`` get weight 0 and are left
    out of the result.
    """
    counts = frequency_vector(doc, vocab).counts
    if not counts:
        return {}
    wanted = {vocab.terms[i] for i in counts}
    df = Counter()
    for other in docs:
        df.update(wanted.intersection(other.tokens))
    n = len(docs)
    out = {}
    for i, c in counts.items():
        term = vocab.terms[i]
        if df[term] == 0:
            raise ValueError(f"term {term!r} occurs in no document of the reference corpus")
        weight = c * math.log(n / df[term])
        if weight != 0.0:
            out[i] = weight
    return out


def _as_map(v: Union[SparseVector, FrequencyVector]) -> Mapping[int, float]:
    return v.entries if hasattr(v, "entries") else v


def inner_product(u, v) -> float:
    """Sum of u[t] * v[t] over the shared support."""
    u, v = _as_map(u), _as_map(v)
    if len(u) > len(v):
        u, v = v, u
    return math.fsum(x * v[i] for i, x in u.items() if i in v)
