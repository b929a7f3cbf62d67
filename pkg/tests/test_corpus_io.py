from collections import Counter

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dsctext import CorpusError, LabeledCorpus, RawDocument, load_dir, load_tsv, make_folds, write_tsv


def test_load_tsv_labeled(tmp_path):
    path = tmp_path / "c.tsv"
    path.write_text("earn\tprofit rose\nacq\tmerger deal\n", encoding="utf-8")
    corpus = load_tsv(path)
    assert len(corpus) == 2
    assert corpus.labels == ("earn", "acq")
    assert [d.id for d in corpus.documents] == ["1", "2"]
    assert corpus.documents[1].text == "merger deal"


def test_load_tsv_unlabeled_456_lines(tmp_path):
    path = tmp_path / "u.tsv"
    path.write_text("".join(f"document number {i}\n" for i in range(456)), encoding="utf-8")
    docs = load_tsv(path, labeled=False)
    assert len(docs) == 456
    assert all(d.label is None for d in docs)
    assert docs[-1].id == "456"


def test_load_tsv_missing_tab_names_line(tmp_path):
    path = tmp_path / "bad.tsv"
    path.write_text("earn\tok\nno tab here\n", encoding="utf-8")
    with pytest.raises(CorpusError, match=":2:"):
        load_tsv(path)


def test_load_tsv_errors(tmp_path):
    with pytest.raises(FileNotFoundError):
        load_tsv(tmp_path / "nope.tsv")
    empty = tmp_path / "empty.tsv"
    empty.write_text("", encoding="utf-8")
    with pytest.raises(CorpusError):
        load_tsv(empty)


def test_blank_lines_keep_line_numbers(tmp_path):
    path = tmp_path / "c.tsv"
    path.write_text("a\tx\n\nb\ty\n", encoding="utf-8")
    assert [d.id for d in load_tsv(path).documents] == ["1", "3"]


def test_load_dir(tmp_path):
    (tmp_path / "earn").mkdir()
    (tmp_path / "acq").mkdir()
    (tmp_path / "earn" / "a.txt").write_text("profit", encoding="utf-8")
    (tmp_path / "acq" / "b.txt").write_text("merger", encoding="utf-8")
    corpus = load_dir(tmp_path)
    assert corpus.labels == ("acq", "earn")
    assert [d.id for d in corpus.documents] == ["acq/b.txt", "earn/a.txt"]


def test_load_dir_single_label(tmp_path):
    (tmp_path / "only").mkdir()
    (tmp_path / "only" / "x").write_text("text", encoding="utf-8")
    assert load_dir(tmp_path).k == 1


def test_load_dir_empty_label_is_named(tmp_path):
    (tmp_path / "earn").mkdir()
    (tmp_path / "earn" / "a").write_text("x", encoding="utf-8")
    (tmp_path / "ghost").mkdir()
    with pytest.raises(CorpusError, match="ghost"):
        load_dir(tmp_path)


def test_load_dir_empty_directory(tmp_path):
    with pytest.raises(CorpusError):
        load_dir(tmp_path)


def _two_label_corpus(n_a, n_b):
    docs = [RawDocument(f"a{i}", "x", "A") for i in range(n_a)]
    docs += [RawDocument(f"b{i}", "y", "B") for i in range(n_b)]
    return LabeledCorpus.from_documents(docs)


def test_make_folds_stratified():
    corpus = _two_label_corpus(10, 10)
    plan = make_folds(corpus, 5, seed=7)
    for fold in range(5):
        labels = Counter(corpus.documents[i].label for i in plan.test_indices(fold))
        assert labels == {"A": 2, "B": 2}


def test_make_folds_deterministic():
    corpus = _two_label_corpus(13, 8)
    assert make_folds(corpus, 5, 7) == make_folds(corpus, 5, 7)
    assert make_folds(corpus, 5, 7).assignments != make_folds(corpus, 5, 8).assignments


def test_make_folds_too_few_documents():
    corpus = _two_label_corpus(10, 3)
    with pytest.raises(CorpusError, match="'B'"):
        make_folds(corpus, 5, 0)
    with pytest.raises(CorpusError):
        make_folds(corpus, 1, 0)


@settings(max_examples=60, deadline=None)
@given(
    sizes=st.lists(st.integers(1, 25), min_size=1, max_size=6),
    seed=st.integers(0, 2**63 - 1),
    data=st.data(),
)
def test_partition_and_fold_properties(sizes, seed, data):
    rng = np.random.default_rng(seed % 1000)
    labels = [f"L{j}" for j in range(len(sizes))]
    order = rng.permutation(np.repeat(np.arange(len(sizes)), sizes))
    docs = [RawDocument(str(i), "t", labels[j]) for i, j in enumerate(order)]
    corpus = LabeledCorpus.from_documents(docs)
    blocks = [set(corpus.per_label_index[l]) for l in corpus.labels]
    assert sum(len(b) for b in blocks) == len(corpus)
    assert set().union(*blocks) == set(range(len(corpus)))
    k_folds = data.draw(st.integers(2, max(2, min(sizes))))
    if min(sizes) < k_folds:
        return
    plan = make_folds(corpus, k_folds, seed)
    assert all(0 <= a < k_folds for a in plan.assignments)
    for label in corpus.labels:
        per_fold = Counter(plan.assignments[i] for i in corpus.per_label_index[label])
        counts = [per_fold.get(f, 0) for f in range(k_folds)]
        assert max(counts) - min(counts) <= 1


def test_tsv_round_trip(tmp_path):
    docs = [
        RawDocument("1", "alpha beta", "x"),
        RawDocument("2", "gamma\tdelta", "y"),
        RawDocument("3", "  spaced  ", "x"),
    ]
    corpus = LabeledCorpus.from_documents(docs)
    path = tmp_path / "rt.tsv"
    write_tsv(path, corpus.documents)
    again = load_tsv(path)
    assert again.documents == corpus.documents
    assert again.labels == corpus.labels
