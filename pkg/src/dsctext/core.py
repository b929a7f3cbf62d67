"""Domain-specific word extraction and similarity-search classification.

Training computes, for each label j, the mean relative frequency f_j(t) of
every term over the label's documents and keeps as *domain-specific* the
terms with ``f_j(t) > alpha * sum(f_l(t) for l != j)``. Each label is then
represented by the uniform measure on its domain-specific words, scaled to
unit l^p norm. A document is assigned the label whose measure has the
largest inner product with the document's relative frequency vector.
"""

from __future__ import annotations

import json
import math
import warnings
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .corpus_io import LabeledCorpus, RawDocument
from .preprocess import Document, PreprocessConfig, preprocess, preprocess_all
from .vsm import FrequencyVector, Vocabulary, build_vocabulary, frequency_vector, inner_product

FORMAT_VERSION = 1

# Exponents above this fall back to float comparison when ranking scores.
_MAX_EXACT_EXPONENT = 64


class EmptyDomainWarning(UserWarning):
    """A label ended up with no domain-specific words."""


class ModelFormatError(ValueError):
    """Model file is corrupt or structurally invalid."""


class ModelVersionError(ModelFormatError):
    """Model file was written with an unsupported format version."""


class VocabularyMismatchError(ValueError):
    """A document vector was built against a different vocabulary."""


def parse_p(value) -> float:
    """Accept a positive number or the token ``"inf"``."""
    if isinstance(value, str):
        text = value.strip().lower()
        p = math.inf if text in ("inf", "infinity") else float(text)
    else:
        p = float(value)
    if math.isnan(p) or p <= 0:
        raise ValueError(f"p must be positive or 'inf', got {value!r}")
    return p


def format_p(p: float) -> str | float:
    return "inf" if math.isinf(p) else p


# --------------------------------------------------------------------------
# Training stage


@dataclass(frozen=True)
class ClassProfiles:
    labels: tuple[str, ...]
    f: Mapping[str, Mapping[int, float]]
    sizes: Mapping[str, int]


def class_profiles(
    docs: Sequence[Document], vocab: Vocabulary, labels: Sequence[str] | None = None
) -> ClassProfiles:
    """Mean relative term frequency per label.

    Empty documents add nothing to the sum but still count towards the
    number of documents of their label.
    """
    if labels is None:
        labels = tuple(dict.fromkeys(d.label for d in docs))
    labels = tuple(labels)
    contributions: dict[str, dict[int, list[float]]] = {l: defaultdict(list) for l in labels}
    sizes = dict.fromkeys(labels, 0)
    nonempty = dict.fromkeys(labels, False)
    for doc in docs:
        if doc.label not in sizes:
            raise ValueError(f"document {doc.id!r} has unknown label {doc.label!r}")
        sizes[doc.label] += 1
        if not doc.length:
            continue
        nonempty[doc.label] = True
        w = frequency_vector(doc, vocab)
        bucket = contributions[doc.label]
        for i, x in w.entries.items():
            bucket[i].append(x)
    for label in labels:
        if not nonempty[label]:
            raise ValueError(f"label {label!r} has no nonempty documents")
    # fsum makes each profile value independent of document order.
    f = {
        label: {i: math.fsum(xs) / sizes[label] for i, xs in contributions[label].items()}
        for label in labels
    }
    return ClassProfiles(labels, f, sizes)


def extract_domain_specific(profiles: ClassProfiles, alpha: float) -> dict[str, frozenset[int]]:
    """Terms whose profile for a label strictly beats alpha times the rest."""
    if not alpha >= 0:
        raise ValueError(f"alpha must be non-negative, got {alpha!r}")
    labels = profiles.labels
    support = set()
    for label in labels:
        support.update(profiles.f[label])
    cs: dict[str, set[int]] = {label: set() for label in labels}
    for t in support:
        values = [profiles.f[label].get(t, 0.0) for label in labels]
        for j, label in enumerate(labels):
            fj = values[j]
            if fj <= 0.0:
                continue
            rest = math.fsum(values[:j] + values[j + 1 :])
            if fj > alpha * rest:
                cs[label].add(t)
    for label in labels:
        if not cs[label]:
            warnings.warn(
                f"label {label!r} has no domain-specific words at alpha={alpha}",
                EmptyDomainWarning,
                stacklevel=2,
            )
    return {label: frozenset(terms) for label, terms in cs.items()}


# --------------------------------------------------------------------------
# Class measures and scoring


@dataclass(frozen=True)
class ClassMeasure:
    """Uniform measure on a set of terms with unit l^p norm."""

    label: str | None
    support: tuple[int, ...]
    p: float

    @property
    def weight(self) -> float:
        if not self.support:
            return 0.0
        if math.isinf(self.p):
            return 1.0
        return 1.0 / len(self.support) ** (1.0 / self.p)

    @property
    def entries(self) -> dict[int, float]:
        w = self.weight
        return {t: w for t in self.support} if w else {}

    def norm(self) -> float:
        """l^p norm (max norm for p = inf)."""
        if not self.support:
            return 0.0
        if math.isinf(self.p):
            return self.weight
        return math.fsum(self.weight**self.p for _ in self.support) ** (1.0 / self.p)


def class_measure(cs_j: Iterable[int], p: float, label: str | None = None) -> ClassMeasure:
    return ClassMeasure(label, tuple(sorted(cs_j)), parse_p(p))


def _hits(w: FrequencyVector, cs_j: frozenset[int] | set[int]) -> int:
    return sum(c for t, c in w.counts.items() if t in cs_j)


def _normalize(mass: float, size: int, p: float) -> float:
    if size == 0:
        return 0.0
    if math.isinf(p):
        return mass
    return mass / size ** (1.0 / p)


def score(w: FrequencyVector, cs_j, p) -> float:
    """Relative frequency mass of ``cs_j`` in the document over |CS_j|^(1/p)."""
    p = parse_p(p)
    cs_j = cs_j if isinstance(cs_j, (set, frozenset)) else frozenset(cs_j)
    if not cs_j or not w.source_len:
        return 0.0
    return _normalize(_hits(w, cs_j) / w.source_len, len(cs_j), p)


def _rank_key(hits: int, size: int, p: float):
    """Quantity ordered like the score hits / |d| / size**(1/p).

    The common 1/|d| factor is dropped, and whenever p or 1/p is an integer
    the comparison is made in exact rationals so that ties are detected
    reliably. Other p values compare floats.
    """
    if size == 0 or hits == 0:
        return 0
    if math.isinf(p):
        return hits
    if p.is_integer() and p <= _MAX_EXACT_EXPONENT:
        return Fraction(hits ** int(p), size)
    q = 1.0 / p
    if q.is_integer() and q <= _MAX_EXACT_EXPONENT:
        return Fraction(hits, size ** int(q))
    return hits / size**q


@dataclass(frozen=True)
class Prediction:
    label: str
    scores: Mapping[str, float]
    tie: bool = False


# --------------------------------------------------------------------------
# Model


@dataclass(frozen=True)
class DscModel:
    alpha: float
    p: float
    vocabulary: Vocabulary = field(repr=False)
    labels: tuple[str, ...]
    cs: Mapping[str, frozenset[int]] = field(repr=False)
    preprocess_config: PreprocessConfig = field(default_factory=PreprocessConfig, repr=False)
    # term index -> positions (into labels) of the labels it is specific to
    _term_labels: Mapping[int, tuple[int, ...]] = field(
        init=False, repr=False, compare=False, hash=False
    )

    def __post_init__(self) -> None:
        object.__setattr__(self, "p", parse_p(self.p))
        if not self.alpha >= 0:
            raise ValueError(f"alpha must be non-negative, got {self.alpha!r}")
        m = len(self.vocabulary)
        owners: dict[int, list[int]] = defaultdict(list)
        for j, label in enumerate(self.labels):
            for t in sorted(self.cs[label]):
                if not 0 <= t < m:
                    raise ValueError(f"label {label!r}: term index {t} outside the vocabulary")
                owners[t].append(j)
        object.__setattr__(self, "_term_labels", {t: tuple(js) for t, js in owners.items()})

    @property
    def k(self) -> int:
        return len(self.labels)

    def cs_terms(self, label: str) -> set[str]:
        return {self.vocabulary.terms[t] for t in self.cs[label]}

    def measures(self, p=None) -> list[ClassMeasure]:
        p = self.p if p is None else parse_p(p)
        return [class_measure(self.cs[label], p, label) for label in self.labels]

    def vectorize(self, doc: Document | RawDocument) -> FrequencyVector:
        if isinstance(doc, RawDocument):
            doc = preprocess(doc, self.preprocess_config)
        return frequency_vector(doc, self.vocabulary)


def _check_vocab(w: FrequencyVector, model: DscModel) -> None:
    if w.vocabulary is not model.vocabulary and w.vocabulary != model.vocabulary:
        raise VocabularyMismatchError("document vector was built against another vocabulary")


def _pick(labels: Sequence[str], keys: Sequence) -> tuple[str, bool]:
    best = max(keys)
    winners = [label for label, key in zip(labels, keys) if key == best]
    return winners[0], len(winners) > 1


def classify(w: FrequencyVector, model: DscModel, p=None) -> Prediction:
    """Label with the highest normalized domain-specific mass.

    Ties go to the earliest label in the model's label order and set
    ``tie``. ``p`` overrides the model's normalization for this call only.
    """
    _check_vocab(w, model)
    p = model.p if p is None else parse_p(p)
    hits = [0] * model.k
    term_labels = model._term_labels
    for t, c in w.counts.items():
        for j in term_labels.get(t, ()):
            hits[j] += c
    sizes = [len(model.cs[label]) for label in model.labels]
    n = w.source_len
    scores = {
        label: _normalize(h / n, size, p) if n else 0.0
        for label, h, size in zip(model.labels, hits, sizes)
    }
    keys = [_rank_key(h, size, p) for h, size in zip(hits, sizes)]
    label, tie = _pick(model.labels, keys)
    return Prediction(label, scores, tie)


def classify_by_similarity(
    w: FrequencyVector, model: DscModel, p=None, rel_tol: float = 1e-12
) -> Prediction:
    """Nearest class measure under the inner product.

    Equivalent to :func:`classify`, computed through explicit class measures.
    Inner products within ``rel_tol`` of the maximum count as tied.
    """
    _check_vocab(w, model)
    measures = model.measures(p)
    scores = {m.label: inner_product(w, m.entries) for m in measures}
    best = max(scores.values())
    winners = [l for l in model.labels if scores[l] >= best - rel_tol * abs(best)]
    return Prediction(winners[0], scores, len(winners) > 1)


def fit(
    docs: Sequence[Document],
    alpha: float,
    p,
    config: PreprocessConfig | None = None,
    labels: Sequence[str] | None = None,
    vocabulary: Vocabulary | None = None,
) -> DscModel:
    """Train from already preprocessed documents.

    ``vocabulary`` defaults to the dictionary of ``docs``. Passing a larger
    one (for instance built over training and test documents together) does
    not change the domain-specific term sets.
    """
    if labels is None:
        labels = tuple(dict.fromkeys(d.label for d in docs))
    vocab = vocabulary if vocabulary is not None else build_vocabulary(docs)
    profiles = class_profiles(docs, vocab, labels)
    cs = extract_domain_specific(profiles, alpha)
    return DscModel(alpha, p, vocab, tuple(labels), cs, config or PreprocessConfig())


def train(corpus: LabeledCorpus, alpha: float, p, config: PreprocessConfig) -> DscModel:
    if not len(corpus):
        raise ValueError("cannot train on an empty corpus")
    docs = preprocess_all(corpus.documents, config)
    return fit(docs, alpha, p, config, labels=corpus.labels)


def predict(model: DscModel, docs: Iterable[Document | RawDocument], p=None) -> list[Prediction]:
    return [classify(model.vectorize(d), model, p) for d in docs]


# --------------------------------------------------------------------------
# Persistence


def model_to_json(model: DscModel) -> str:
    cfg = model.preprocess_config
    payload = {
        "format_version": FORMAT_VERSION,
        "alpha": model.alpha,
        "p": format_p(model.p),
        "labels": list(model.labels),
        "vocabulary": list(model.vocabulary.terms),
        "cs": {label: sorted(model.cs[label]) for label in model.labels},
        "preprocess": {
            "min_word_len_exclusive": cfg.min_word_len_exclusive,
            "lowercase": cfg.lowercase,
            "stopwords_digest": cfg.stopwords_digest,
            "stopwords": sorted(cfg.stopwords),
        },
    }
    return json.dumps(payload, sort_keys=True, ensure_ascii=False) + "\n"


def model_from_json(text: str) -> DscModel:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ModelFormatError(f"corrupt model file: {exc}") from exc
    if not isinstance(payload, dict) or "format_version" not in payload:
        raise ModelFormatError("corrupt model file: missing format_version")
    version = payload["format_version"]
    if version != FORMAT_VERSION:
        raise ModelVersionError(
            f"unsupported model format version {version!r} (expected {FORMAT_VERSION})"
        )
    try:
        pre = payload["preprocess"]
        config = PreprocessConfig(
            min_word_len_exclusive=int(pre["min_word_len_exclusive"]),
            stopwords=frozenset(pre["stopwords"]),
            lowercase=bool(pre["lowercase"]),
        )
        if config.stopwords_digest != pre["stopwords_digest"]:
            raise ModelFormatError("corrupt model file: stop-word digest does not match")
        labels = tuple(payload["labels"])
        cs = {label: frozenset(int(t) for t in payload["cs"][label]) for label in labels}
        return DscModel(
            alpha=float(payload["alpha"]),
            p=parse_p(payload["p"]),
            vocabulary=Vocabulary(tuple(payload["vocabulary"])),
            labels=labels,
            cs=cs,
            preprocess_config=config,
        )
    except ModelFormatError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise ModelFormatError(f"corrupt model file: {exc}") from exc


def save_model(model: DscModel, path: str | Path) -> None:
    Path(path).write_text(model_to_json(model), encoding="utf-8")


def load_model(path: str | Path) -> DscModel:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise ModelFormatError(f"corrupt model file {path}: {exc}") from exc
    return model_from_json(text)
