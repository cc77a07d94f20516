"""Tokenization and corpus construction.

A corpus is a set of texts; each text becomes a sequence of word ids into a
shared vocabulary. Text boundaries are preserved: the last word of one text
is never treated as a neighbor of the first word of the next.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import EmptyCorpus

UNK = "<unk>"

# Maximal runs of Unicode letters (\w minus digits and underscore).
_ALPHA_RE = re.compile(r"[^\W\d_]+")
# Letter runs, digit runs, then any other single non-space character.
_EXTENDED_RE = re.compile(r"[^\W\d_]+|\d+|\S")

TOKEN_MODES = ("alphabetic_only", "extended_tokens")
PRUNING_POLICIES = ("map_to_unk", "break_chain")


@dataclass(frozen=True)
class TokenizationConfig:
    mode: str = "alphabetic_only"
    case_fold: bool = True
    min_count: int = 1
    pruning_policy: str = "map_to_unk"

    def __post_init__(self) -> None:
        if self.mode not in TOKEN_MODES:
            raise ValueError(f"unknown token mode {self.mode!r}")
        if self.pruning_policy not in PRUNING_POLICIES:
            raise ValueError(f"unknown pruning policy {self.pruning_policy!r}")
        if self.min_count < 1:
            raise ValueError("min_count must be >= 1")


@dataclass
class Vocabulary:
    """Ordered word types and their occurrence counts."""

    types: list[str]
    counts: list[int]
    _index: dict[str, int] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        self._index = {t: i for i, t in enumerate(self.types)}
        if len(self._index) != len(self.types):
            raise ValueError("duplicate word types in vocabulary")

    def __len__(self) -> int:
        return len(self.types)

    def __contains__(self, word: str) -> bool:
        return word in self._index

    def id_of(self, word: str) -> int:
        return self._index[word]

    @property
    def total_occurrences(self) -> int:
        return sum(self.counts)


@dataclass
class TokenizedCorpus:
    """Occurrence-id sequences plus the vocabulary mapping ids to types."""

    texts: list[list[int]]
    vocabulary: Vocabulary

    def validate(self) -> None:
        nt = len(self.vocabulary)
        recount = Counter()
        for seq in self.texts:
            for wid in seq:
                if not 0 <= wid < nt:
                    raise ValueError(f"occurrence id {wid} out of range")
                recount[wid] += 1
        expected = {i: c for i, c in enumerate(self.vocabulary.counts) if c}
        if recount != Counter(expected):
            raise ValueError("vocabulary counts do not match sequences")

    def tokens(self) -> Iterator[str]:
        """All token strings in corpus order."""
        types = self.vocabulary.types
        for seq in self.texts:
            for wid in seq:
                yield types[wid]

    @property
    def total_occurrences(self) -> int:
        return sum(len(seq) for seq in self.texts)


def tokenize(raw_text: str, config: TokenizationConfig | None = None) -> list[str]:
    """Split a text into word-occurrence tokens.

    alphabetic_only keeps maximal letter runs; extended_tokens additionally
    keeps digit runs and single punctuation characters.
    """
    config = config or TokenizationConfig()
    pattern = _ALPHA_RE if config.mode == "alphabetic_only" else _EXTENDED_RE
    tokens = pattern.findall(raw_text)
    if config.case_fold:
        tokens = [t.lower() for t in tokens]
    return tokens


def build_corpus(
    texts: Sequence[str], config: TokenizationConfig | None = None
) -> TokenizedCorpus:
    """Tokenize raw texts and assemble the shared vocabulary.

    Types with fewer than ``min_count`` occurrences are replaced by the
    reserved UNK type (map_to_unk) or removed with the chain broken at each
    removal site (break_chain).
    """
    config = config or TokenizationConfig()
    token_lists = [tokenize(t, config) for t in texts]
    counts = Counter(tok for toks in token_lists for tok in toks)
    rare = {t for t, c in counts.items() if c < config.min_count}

    segments: list[list[str]] = []
    if not rare:
        segments = [toks for toks in token_lists if toks]
    elif config.pruning_policy == "map_to_unk":
        for toks in token_lists:
            seg = [UNK if t in rare else t for t in toks]
            if seg:
                segments.append(seg)
    else:  # break_chain
        for toks in token_lists:
            seg: list[str] = []
            for t in toks:
                if t in rare:
                    if seg:
                        segments.append(seg)
                    seg = []
                else:
                    seg.append(t)
            if seg:
                segments.append(seg)

    if not segments:
        raise EmptyCorpus("no tokens survive tokenization and pruning")

    order: list[str] = []
    index: dict[str, int] = {}
    final = Counter()
    for seg in segments:
        for t in seg:
            if t not in index:
                index[t] = len(order)
                order.append(t)
            final[t] += 1

    vocab = Vocabulary(order, [final[t] for t in order])
    sequences = [[index[t] for t in seg] for seg in segments]
    corpus = TokenizedCorpus(sequences, vocab)
    corpus.validate()
    return corpus


def read_manifest(path: str) -> list[str]:
    """Read raw texts listed in a manifest file, one path per line.

    Relative paths are resolved against the manifest's directory.
    """
    import os

    base = os.path.dirname(os.path.abspath(path))
    texts = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            name = line.strip()
            if not name:
                continue
            full = name if os.path.isabs(name) else os.path.join(base, name)
            with open(full, encoding="utf-8") as tf:
                texts.append(tf.read())
    return texts
