"""Paradigmatic dissimilarity over a context-position interval.

Two words are paradigmatically close when they can substitute for each other,
i.e. share the same contexts. The per-position dissimilarity compares the
context rows of two words; the interval version is a weighted sum over
positions, and similarity is its complement.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .corpus import TokenizedCorpus
from .counts import ContextMatrix, context_matrix
from .errors import RangeError

_CHUNK = 256


@dataclass(frozen=True)
class ParadigmaticConfig:
    interval: tuple[int, ...] = (-1, 1)
    weights: tuple[float, ...] | None = None  # None = uniform 1/|interval|

    def __post_init__(self) -> None:
        if not self.interval:
            raise ValueError("interval must be nonempty")
        if self.weights is not None:
            if len(self.weights) != len(self.interval):
                raise ValueError("one weight per interval position required")
            if any(w < 0 for w in self.weights):
                raise ValueError("weights must be nonnegative")
            if abs(sum(self.weights) - 1.0) > 1e-9:
                raise ValueError("weights must sum to 1")

    def effective_weights(self) -> tuple[float, ...]:
        if self.weights is not None:
            return self.weights
        return tuple([1.0 / len(self.interval)] * len(self.interval))


@dataclass
class DissimilarityMatrix:
    entries: np.ndarray  # dense symmetric, zero diagonal
    word_ids: list[int]  # row/column -> vocabulary id

    @property
    def dim(self) -> int:
        return self.entries.shape[0]


def positional_dissimilarity(c_k: ContextMatrix, i: int, j: int) -> float:
    """Dissimilarity of the position-k contexts of words i and j.

    Sum of |row_i - row_j| over the total mass of both rows. Both rows
    empty returns 0 by convention; exactly one empty returns 1.
    """
    row_i = np.zeros(c_k.dim)
    row_j = np.zeros(c_k.dim)
    for (a, b), c in c_k.counts.items():
        if a == i:
            row_i[b] = c
        if a == j:
            row_j[b] = c
    den = row_i.sum() + row_j.sum()
    if den == 0:
        return 0.0
    return float(np.abs(row_i - row_j).sum() / den)


def _pairwise_delta(rows: np.ndarray) -> np.ndarray:
    """All-pairs positional dissimilarity between the given context rows."""
    m = rows.shape[0]
    sums = rows.sum(axis=1)
    den = sums[:, None] + sums[None, :]
    delta = np.zeros((m, m))
    for start in range(0, m, _CHUNK):
        stop = min(start + _CHUNK, m)
        num = np.abs(rows[start:stop, None, :] - rows[None, :, :]).sum(axis=2)
        block = den[start:stop]
        delta[start:stop] = np.divide(
            num, block, out=np.zeros_like(num), where=block > 0
        )
    return delta


def dissimilarity_matrix(
    corpus: TokenizedCorpus,
    config: ParadigmaticConfig | None = None,
    policy: str = "truncate",
    word_ids: Sequence[int] | None = None,
) -> DissimilarityMatrix:
    """Weighted sum of per-position dissimilarities over the interval.

    ``word_ids`` restricts the (dense, quadratic) computation to a subset of
    the vocabulary; context rows still span the full vocabulary.
    """
    config = config or ParadigmaticConfig()
    ids = list(word_ids) if word_ids is not None else list(range(len(corpus.vocabulary)))
    total = np.zeros((len(ids), len(ids)))
    for k, weight in zip(config.interval, config.effective_weights()):
        c_k = context_matrix(corpus, k, policy)
        rows = c_k.to_dense()[ids]
        total += weight * _pairwise_delta(rows)
    np.fill_diagonal(total, 0.0)
    return DissimilarityMatrix(total, ids)


def similarity_matrix(delta: DissimilarityMatrix) -> np.ndarray:
    """Entrywise 1 - dissimilarity; requires entries in [0, 1]."""
    entries = delta.entries
    if entries.min() < 0 or entries.max() > 1:
        raise RangeError("dissimilarity entries outside [0, 1]; check weights")
    return 1.0 - entries
