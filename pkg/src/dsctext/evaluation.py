"""Confusion matrices, accuracy / F1, cross-validation and (alpha, p) grids."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .core import (
    DscModel,
    Prediction,
    class_profiles,
    classify,
    extract_domain_specific,
    format_p,
    parse_p,
    predict,
    train,
)
from .corpus_io import LabeledCorpus, make_folds
from .preprocess import PreprocessConfig, preprocess_all
from .vsm import build_vocabulary, frequency_vector


@dataclass(frozen=True)
class ConfusionMatrix:
    """Rows are true labels, columns predicted labels."""

    labels: tuple[str, ...]
    counts: np.ndarray

    @property
    def total(self) -> int:
        return int(self.counts.sum())


@dataclass(frozen=True)
class ClassMetrics:
    precision: float
    recall: float
    f1: float
    support: int


@dataclass
class MetricsReport:
    accuracy: float
    per_class: dict[str, ClassMetrics]
    confusion: ConfusionMatrix
    timings: dict[str, float] = field(default_factory=dict)

    def to_dict(self, include_timings: bool = False) -> dict:
        out = {
            "accuracy": self.accuracy,
            "n_documents": self.confusion.total,
            "labels": list(self.confusion.labels),
            "confusion": self.confusion.counts.tolist(),
            "per_class": {
                label: {
                    "precision": m.precision,
                    "recall": m.recall,
                    "f1": m.f1,
                    "support": m.support,
                }
                for label, m in self.per_class.items()
            },
        }
        if include_timings:
            out["timings"] = dict(self.timings)
        return out

    def format_table(self) -> str:
        width = max(8, *(len(l) for l in self.per_class))
        lines = [f"accuracy {self.accuracy:.4f}  (n={self.confusion.total})"]
        lines.append(f"{'label':<{width}}  precision  recall     f1  support")
        for label, m in self.per_class.items():
            lines.append(
                f"{label:<{width}}  {m.precision:9.4f}  {m.recall:6.4f}  {m.f1:.4f}  {m.support:7d}"
            )
        for stage, secs in self.timings.items():
            lines.append(f"{stage} time {secs:.3f}s")
        return "\n".join(lines)


def confusion(
    preds: Sequence[Prediction | str], truth: Sequence[str], labels: Sequence[str]
) -> ConfusionMatrix:
    if len(preds) != len(truth):
        raise ValueError(f"{len(preds)} predictions but {len(truth)} true labels")
    if not preds:
        raise ValueError("cannot build a confusion matrix from no predictions")
    labels = tuple(labels)
    pos = {label: i for i, label in enumerate(labels)}
    counts = np.zeros((len(labels), len(labels)), dtype=np.int64)
    for pred, true in zip(preds, truth):
        guess = pred.label if isinstance(pred, Prediction) else pred
        for label in (guess, true):
            if label not in pos:
                raise ValueError(f"unknown label {label!r}")
        counts[pos[true], pos[guess]] += 1
    return ConfusionMatrix(labels, counts)


def _ratio(num: float, den: float) -> float:
    return num / den if den else 0.0


def metrics(cm: ConfusionMatrix) -> MetricsReport:
    """Accuracy plus one-vs-rest precision, recall and F1; 0/0 counts as 0."""
    counts = cm.counts
    total = counts.sum()
    if total <= 0:
        raise ValueError("confusion matrix is empty")
    diag = np.diag(counts)
    rows = counts.sum(axis=1)
    cols = counts.sum(axis=0)
    per_class = {}
    for i, label in enumerate(cm.labels):
        prec = _ratio(diag[i], cols[i])
        rec = _ratio(diag[i], rows[i])
        per_class[label] = ClassMetrics(
            float(prec), float(rec), float(_ratio(2 * prec * rec, prec + rec)), int(rows[i])
        )
    return MetricsReport(float(diag.sum() / total), per_class, cm)


def timed(run: Callable, *args, **kwargs):
    """Call ``run`` and return ``(result, wall_clock_seconds)``."""
    start = time.perf_counter()
    result = run(*args, **kwargs)
    return result, time.perf_counter() - start


def evaluate(model: DscModel, corpus: LabeledCorpus, p=None) -> MetricsReport:
    """Score a trained model on a labeled corpus."""
    preds, secs = timed(predict, model, corpus.documents, p)
    report = metrics(confusion(preds, [d.label for d in corpus.documents], model.labels))
    report.timings["predict"] = secs
    return report


def train_and_evaluate(
    train_corpus: LabeledCorpus,
    test_corpus: LabeledCorpus,
    alpha: float,
    p,
    config: PreprocessConfig,
) -> tuple[DscModel, MetricsReport]:
    """Fit on one split, score on the other, timing both stages."""
    model, train_secs = timed(train, train_corpus, alpha, p, config)
    report = evaluate(model, test_corpus)
    report.timings = {"train": train_secs, **report.timings}
    return model, report


# --------------------------------------------------------------------------
# Cross-validation


@dataclass
class GridRow:
    alpha: float
    p: float
    report: MetricsReport

    def to_dict(self, include_timings: bool = False) -> dict:
        return {
            "alpha": self.alpha,
            "p": format_p(self.p),
            **self.report.to_dict(include_timings),
        }


@dataclass
class GridSearchResult:
    rows: list[GridRow]
    best: GridRow
    k_folds: int
    seed: int

    def to_dict(self, include_timings: bool = False) -> dict:
        return {
            "k_folds": self.k_folds,
            "seed": self.seed,
            "grid": [row.to_dict(include_timings) for row in self.rows],
            "best": {"alpha": self.best.alpha, "p": format_p(self.best.p),
                     "accuracy": self.best.report.accuracy},
        }

    def format_table(self) -> str:
        labels = self.rows[0].report.confusion.labels
        head = ["alpha", "p", "accuracy"] + [f"F1 {l}" for l in labels]
        lines = ["  ".join(f"{h:>10}" for h in head)]
        for row in self.rows:
            cells = [f"{row.alpha:g}", f"{row.p:g}", f"{row.report.accuracy:.4f}"]
            cells += [f"{row.report.per_class[l].f1:.4f}" for l in labels]
            marker = "  *" if row is self.best else ""
            lines.append("  ".join(f"{c:>10}" for c in cells) + marker)
        lines.append(
            f"best: alpha={self.best.alpha:g} p={self.best.p:g} "
            f"accuracy={self.best.report.accuracy:.4f}"
        )
        return "\n".join(lines)


def _cv_grid(
    corpus: LabeledCorpus,
    alphas: Sequence[float],
    ps: Sequence[float],
    k_folds: int,
    seed: int,
    config: PreprocessConfig,
) -> list[GridRow]:
    """Pooled cross-validated predictions for every (alpha, p) cell.

    Class profiles are computed once per fold and shared by all cells; the
    domain-specific sets once per (fold, alpha) and shared by all p.
    """
    if not alphas or not ps:
        raise ValueError("alpha and p grids must be nonempty")
    alphas = [float(a) for a in alphas]
    ps = [parse_p(p) for p in ps]
    plan = make_folds(corpus, k_folds, seed)
    docs = preprocess_all(corpus.documents, config)
    labels = corpus.labels
    n = len(docs)
    preds = {(a, p): [None] * n for a in alphas for p in ps}
    train_time = {(a, p): 0.0 for a in alphas for p in ps}
    predict_time = dict(train_time)
    for fold in range(k_folds):
        train_ix = plan.train_indices(fold)
        test_ix = plan.test_indices(fold)
        train_docs = [docs[i] for i in train_ix]
        start = time.perf_counter()
        vocab = build_vocabulary(train_docs)
        profiles = class_profiles(train_docs, vocab, labels)
        shared = time.perf_counter() - start
        vectors = [frequency_vector(docs[i], vocab) for i in test_ix]
        for a in alphas:
            (cs, extract_secs) = timed(extract_domain_specific, profiles, a)
            model = DscModel(a, ps[0], vocab, labels, cs, config)
            for p in ps:
                train_time[a, p] += shared + extract_secs
                start = time.perf_counter()
                cell = preds[a, p]
                for i, w in zip(test_ix, vectors):
                    cell[i] = classify(w, model, p)
                predict_time[a, p] += time.perf_counter() - start
    truth = [d.label for d in corpus.documents]
    rows = []
    for a in alphas:
        for p in ps:
            report = metrics(confusion(preds[a, p], truth, labels))
            report.timings = {"train": train_time[a, p], "predict": predict_time[a, p]}
            rows.append(GridRow(a, p, report))
    return rows


def cross_validate(
    corpus: LabeledCorpus,
    k_folds: int,
    alpha: float,
    p,
    seed: int,
    config: PreprocessConfig,
) -> MetricsReport:
    """Stratified k-fold cross-validation with predictions pooled over folds."""
    return _cv_grid(corpus, [alpha], [p], k_folds, seed, config)[0].report


def grid_search(
    corpus: LabeledCorpus,
    alphas: Sequence[float],
    ps: Sequence,
    k_folds: int,
    seed: int,
    config: PreprocessConfig,
) -> GridSearchResult:
    """Cross-validate every (alpha, p) pair.

    The best cell has the highest accuracy; ties go to the smaller alpha,
    then the smaller p.
    """
    rows = _cv_grid(corpus, alphas, ps, k_folds, seed, config)
    best = min(rows, key=lambda r: (-r.report.accuracy, r.alpha, r.p))
    return GridSearchResult(rows, best, k_folds, seed)


def dump_json(payload: dict) -> str:
    """Stable JSON text for reports."""
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
