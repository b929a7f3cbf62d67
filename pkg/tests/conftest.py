from collections import defaultdict

import pytest

from dsctext import PreprocessConfig, RawDocument
from dsctext.corpus_io import LabeledCorpus

CRITERIA = {
    "1": "R8 reproduction: accuracy 0.952 +/- 0.02, train < 60 s, predict < 30 s",
    "2": "R8 per-class F1: earn/acq +/- 0.03, grain/ship +/- 0.10",
    "3": "R8 train+test vocabulary within 10% of 22931",
    "4": "CDMC protocol shape: 5-fold alpha sweep table",
    "5": "Oracle equivalence on 1000 random corpora",
    "6": "Score identity and argmax-rule agreement",
    "7": "Structural properties",
    "8": "Determinism of model files and reports",
}

_by_nodeid = {}
_outcomes = defaultdict(list)


def pytest_collection_modifyitems(items):
    for item in items:
        marker = item.get_closest_marker("criterion")
        if marker is not None:
            _by_nodeid[item.nodeid] = str(marker.args[0])


def pytest_runtest_logreport(report):
    crit = _by_nodeid.get(report.nodeid)
    if crit is None:
        return
    if report.when == "call" or report.outcome != "passed":
        _outcomes[crit].append(report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for crit, text in CRITERIA.items():
        results = _outcomes.get(crit)
        if not results:
            status = "NOT RUN"
        elif "failed" in results:
            status = "FAIL"
        elif all(r == "passed" for r in results):
            status = "PASS"
        else:
            status = "SKIP"
        terminalreporter.write_line(f"criterion {crit}: {status:7s} {text} ({len(results)} checks)")


SYN_TEXT = [
    ("A", "apple apple banana"),
    ("A", "apple cherry"),
    ("B", "banana banana cherry"),
    ("B", "cherry durian"),
]


@pytest.fixture
def plain_config():
    return PreprocessConfig()


@pytest.fixture
def syn_corpus():
    docs = [RawDocument(f"d{i + 1}", text, label) for i, (label, text) in enumerate(SYN_TEXT)]
    return LabeledCorpus.from_documents(docs)


def separable_corpus(n_per_label=10, labels=("A", "B", "C")):
    """Every document uses only words private to its own label."""
    docs = []
    for label in labels:
        key = label.lower()
        for i in range(n_per_label):
            words = [f"{key}word"] * (1 + i % 2) + [f"{key}extra"] * (i % 3)
            docs.append(RawDocument(f"{label}{i}", " ".join(words), label))
    return LabeledCorpus.from_documents(docs)


@pytest.fixture
def separable():
    return separable_corpus()
