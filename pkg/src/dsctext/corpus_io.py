"""Loading labeled and unlabeled document collections, and fold planning.

Two on-disk layouts are understood:

* TSV: one document per line, ``label<TAB>text`` for labeled files or just
  ``text`` for unlabeled ones. Ids are 1-based line numbers.
* Directory: one subdirectory per label, one file per document. Ids are
  ``<label>/<filename>``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping, Sequence

import numpy as np


class CorpusError(ValueError):
    """Raised for malformed or unusable corpus input."""


@dataclass(frozen=True)
class RawDocument:
    id: str
    text: str
    label: str | None = None


@dataclass(frozen=True)
class LabeledCorpus:
    """Documents together with their label set and per-label partition.

    ``labels`` keeps the order labels were given in; everything downstream
    (tie-breaking, confusion matrix rows) follows that order.
    """

    documents: tuple[RawDocument, ...]
    labels: tuple[str, ...]
    per_label_index: Mapping[str, tuple[int, ...]] = field(repr=False)

    @classmethod
    def from_documents(
        cls, documents: Iterable[RawDocument], labels: Sequence[str] | None = None
    ) -> "LabeledCorpus":
        docs = tuple(documents)
        if not docs:
            raise CorpusError("corpus has no documents")
        seen: set[str] = set()
        for doc in docs:
            if doc.label is None:
                raise CorpusError(f"document {doc.id!r} has no label")
            if doc.id in seen:
                raise CorpusError(f"duplicate document id {doc.id!r}")
            seen.add(doc.id)
        if labels is None:
            labels = tuple(dict.fromkeys(doc.label for doc in docs))
        else:
            labels = tuple(labels)
            if len(set(labels)) != len(labels):
                raise CorpusError("label list contains duplicates")
        blocks: dict[str, list[int]] = {label: [] for label in labels}
        for i, doc in enumerate(docs):
            if doc.label not in blocks:
                raise CorpusError(f"document {doc.id!r} has unknown label {doc.label!r}")
            blocks[doc.label].append(i)
        index = {label: tuple(ix) for label, ix in blocks.items()}
        return cls(docs, labels, index)

    def __len__(self) -> int:
        return len(self.documents)

    @property
    def k(self) -> int:
        return len(self.labels)

    def subset(self, indices: Iterable[int]) -> "LabeledCorpus":
        """Corpus restricted to ``indices``, keeping the full label order."""
        return LabeledCorpus.from_documents(
            [self.documents[i] for i in indices], labels=self.labels
        )


def _read_lines(path: Path) -> list[str]:
    if not path.is_file():
        raise FileNotFoundError(f"no such file: {path}")
    text = path.read_text(encoding="utf-8")
    return text.splitlines()


def load_tsv(path: str | Path, labeled: bool = True) -> LabeledCorpus | list[RawDocument]:
    """Read a TSV collection.

    Empty lines are skipped but still advance the line counter, so ids always
    match line numbers in the file. In labeled mode the line is split at the
    first TAB; anything after it (including further TABs) is text.
    """
    path = Path(path)
    lines = _read_lines(path)
    docs = []
    for lineno, line in enumerate(lines, start=1):
        if line == "":
            continue
        if labeled:
            label, sep, text = line.partition("\t")
            if not sep or not label.strip():
                raise CorpusError(f"{path}:{lineno}: expected 'label<TAB>text'")
            docs.append(RawDocument(str(lineno), text, label))
        else:
            docs.append(RawDocument(str(lineno), line))
    if not docs:
        raise CorpusError(f"{path}: file contains no documents")
    if labeled:
        return LabeledCorpus.from_documents(docs)
    return docs


def write_tsv(path: str | Path, documents: Iterable[RawDocument]) -> None:
    """Write documents in the format ``load_tsv`` reads.

    Text must not contain line breaks; labels must not contain TABs.
    """
    out = []
    for doc in documents:
        if "\n" in doc.text or "\r" in doc.text:
            raise CorpusError(f"document {doc.id!r}: text contains a line break")
        if doc.label is None:
            out.append(doc.text)
        else:
            if "\t" in doc.label:
                raise CorpusError(f"document {doc.id!r}: label contains a TAB")
            out.append(f"{doc.label}\t{doc.text}")
    Path(path).write_text("".join(line + "\n" for line in out), encoding="utf-8")


def load_dir(path: str | Path) -> LabeledCorpus:
    """Read a directory with one subdirectory per label."""
    root = Path(path)
    if not root.is_dir():
        raise FileNotFoundError(f"no such directory: {root}")
    label_dirs = sorted(p for p in root.iterdir() if p.is_dir())
    if not label_dirs:
        raise CorpusError(f"{root}: no label subdirectories")
    docs = []
    for label_dir in label_dirs:
        files = sorted(p for p in label_dir.iterdir() if p.is_file())
        if not files:
            raise CorpusError(f"{root}: label {label_dir.name!r} contains no documents")
        for f in files:
            try:
                text = f.read_text(encoding="utf-8")
            except (OSError, UnicodeDecodeError) as exc:
                raise CorpusError(f"cannot read {f}: {exc}") from exc
            docs.append(RawDocument(f"{label_dir.name}/{f.name}", text, label_dir.name))
    return LabeledCorpus.from_documents(docs, labels=[d.name for d in label_dirs])


@dataclass(frozen=True)
class FoldPlan:
    k_folds: int
    seed: int
    assignments: tuple[int, ...]

    def test_indices(self, fold: int) -> list[int]:
        return [i for i, a in enumerate(self.assignments) if a == fold]

    def train_indices(self, fold: int) -> list[int]:
        return [i for i, a in enumerate(self.assignments) if a != fold]


def make_folds(corpus: LabeledCorpus, k_folds: int, seed: int) -> FoldPlan:
    """Stratified k-fold assignment.

    Each label's documents are shuffled with a generator seeded by ``seed``
    and dealt round-robin over the folds. The starting fold rotates from one
    label to the next so that the remainders do not all pile onto fold 0.
    """
    if k_folds < 2:
        raise CorpusError(f"k_folds must be at least 2, got {k_folds}")
    for label in corpus.labels:
        n = len(corpus.per_label_index[label])
        if n < k_folds:
            raise CorpusError(
                f"label {label!r} has {n} documents, fewer than k_folds={k_folds}"
            )
    rng = np.random.default_rng(seed)
    assignments = [-1] * len(corpus)
    offset = 0
    for label in corpus.labels:
        block = np.asarray(corpus.per_label_index[label])
        for pos, doc_index in enumerate(rng.permutation(block)):
            assignments[int(doc_index)] = (offset + pos) % k_folds
        offset = (offset + len(block)) % k_folds
    return FoldPlan(k_folds, seed, tuple(assignments))
