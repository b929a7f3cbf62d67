"""Text to token sequence: lowercasing, splitting, stop-word and length filters."""

from __future__ import annotations

import hashlib
import re
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable

from .corpus_io import RawDocument

# A token is a maximal run of alphanumeric characters (letters or digits,
# any script). Underscore counts as a separator.
_TOKEN_RE = re.compile(r"[^\W_]+")

DEFAULT_STOPWORDS_RESOURCE = "english_stopwords.txt"


@dataclass(frozen=True)
class PreprocessConfig:
    """Filtering rules applied to every document.

    Tokens whose length is less than or equal to ``min_word_len_exclusive``
    are dropped, as are tokens found in ``stopwords``.
    """

    min_word_len_exclusive: int = 0
    stopwords: frozenset[str] = field(default_factory=frozenset)
    lowercase: bool = True

    def __post_init__(self) -> None:
        if self.min_word_len_exclusive < 0:
            raise ValueError("min_word_len_exclusive must be non-negative")
        object.__setattr__(self, "stopwords", frozenset(self.stopwords))
        for word in self.stopwords:
            if not word or word != word.lower():
                raise ValueError(f"stop words must be nonempty and lowercase: {word!r}")

    @property
    def stopwords_digest(self) -> str:
        """SHA-256 over the sorted stop words, one per line."""
        payload = "".join(w + "\n" for w in sorted(self.stopwords))
        return hashlib.sha256(payload.encode("utf-8")).hexdigest()


@dataclass(frozen=True)
class Document:
    id: str
    tokens: tuple[str, ...]
    label: str | None = None

    @property
    def length(self) -> int:
        return len(self.tokens)

    def __len__(self) -> int:
        return len(self.tokens)


def parse_stopwords(lines: Iterable[str]) -> frozenset[str]:
    words = set()
    for line in lines:
        word = line.split("#", 1)[0].strip().lower()
        if word:
            words.add(word)
    return frozenset(words)


def load_stopwords(path: str | Path | None = None) -> frozenset[str]:
    """Read a stop-word file; ``None`` loads the bundled English list."""
    if path is None:
        text = (
            resources.files("dsctext.data")
            .joinpath(DEFAULT_STOPWORDS_RESOURCE)
            .read_text(encoding="utf-8")
        )
    else:
        text = Path(path).read_text(encoding="utf-8")
    return parse_stopwords(text.splitlines())


def r8_config() -> PreprocessConfig:
    """Bundled stop words, drop words of length two or less."""
    return PreprocessConfig(min_word_len_exclusive=2, stopwords=load_stopwords())


def tokenize(text: str, lowercase: bool = True) -> list[str]:
    if lowercase:
        text = text.lower()
    return _TOKEN_RE.findall(text)


def filter_tokens(tokens: Iterable[str], config: PreprocessConfig) -> list[str]:
    min_len = config.min_word_len_exclusive
    stop = config.stopwords
    return [t for t in tokens if len(t) > min_len and t not in stop]


def preprocess(raw: RawDocument, config: PreprocessConfig) -> Document:
    tokens = filter_tokens(tokenize(raw.text, config.lowercase), config)
    return Document(raw.id, tuple(tokens), raw.label)


def preprocess_all(raws: Iterable[RawDocument], config: PreprocessConfig) -> list[Document]:
    return [preprocess(raw, config) for raw in raws]
