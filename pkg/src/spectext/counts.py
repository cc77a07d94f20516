"""Co-occurrence statistics: context, neighborhood, and transition matrices.

The context matrix at signed distance k counts how often word j occurs k
positions after word i. Symmetrizing and halving gives the neighborhood
matrix W; dividing each row by its degree gives the row-stochastic
transition matrix P, the maximum-likelihood bigram Markov estimate.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import IO, Iterable, Sequence

import numpy as np

from .corpus import TokenizedCorpus

BOUNDARY_POLICIES = ("truncate", "wrap")


def _check_policy(policy: str) -> None:
    if policy not in BOUNDARY_POLICIES:
        raise ValueError(f"unknown boundary policy {policy!r}")


@dataclass
class ContextMatrix:
    """Sparse directed co-occurrence counts at signed distance k."""

    k: int
    dim: int
    policy: str
    counts: dict[tuple[int, int], int]

    def row_sums(self) -> np.ndarray:
        sums = np.zeros(self.dim)
        for (i, _), c in self.counts.items():
            sums[i] += c
        return sums

    def to_dense(self) -> np.ndarray:
        dense = np.zeros((self.dim, self.dim))
        for (i, j), c in self.counts.items():
            dense[i, j] = c
        return dense


@dataclass
class NeighborhoodMatrix:
    """Symmetrized, halved context counts; the weighted co-occurrence graph."""

    k: int
    dim: int
    policy: str
    entries: dict[tuple[int, int], float]
    degree: np.ndarray = field(init=False)

    def __post_init__(self) -> None:
        degree = np.zeros(self.dim)
        for (i, _), w in self.entries.items():
            degree[i] += w
        self.degree = degree

    def to_dense(self) -> np.ndarray:
        dense = np.zeros((self.dim, self.dim))
        for (i, j), w in self.entries.items():
            dense[i, j] = w
        return dense


@dataclass
class TransitionMatrix:
    """Row-stochastic transition probabilities with the normalizing degrees."""

    matrix: np.ndarray
    degree: np.ndarray

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]


def context_matrix(
    corpus: TokenizedCorpus, k: int, policy: str = "truncate"
) -> ContextMatrix:
    """Count ordered pairs (word at p, word at p+k) within each text.

    Under wrap, p+k is taken modulo the text length; pairs never cross text
    boundaries. k = 0 yields the diagonal matrix of occurrence counts.
    """
    _check_policy(policy)
    nt = len(corpus.vocabulary)
    counts: dict[tuple[int, int], int] = defaultdict(int)
    if k == 0:
        for i, c in enumerate(corpus.vocabulary.counts):
            if c:
                counts[(i, i)] = c
    else:
        for seq in corpus.texts:
            n = len(seq)
            for p in range(n):
                q = p + k
                if policy == "wrap":
                    q %= n
                elif not 0 <= q < n:
                    continue
                counts[(seq[p], seq[q])] += 1
    return ContextMatrix(k, nt, policy, dict(counts))


def neighborhood_matrix(c_pos: ContextMatrix) -> NeighborhoodMatrix:
    """Symmetrize a positive-distance context matrix: w(i,j) = (c(i,j)+c(j,i))/2."""
    if c_pos.k <= 0:
        raise ValueError("neighborhood matrix requires k > 0")
    entries: dict[tuple[int, int], float] = {}
    for (i, j) in c_pos.counts:
        if (i, j) in entries:
            continue
        w = (c_pos.counts.get((i, j), 0) + c_pos.counts.get((j, i), 0)) / 2
        entries[(i, j)] = w
        entries[(j, i)] = w
    return NeighborhoodMatrix(c_pos.k, c_pos.dim, c_pos.policy, entries)


def combined_neighborhood(
    corpus: TokenizedCorpus, ks: Sequence[int], policy: str = "truncate"
) -> NeighborhoodMatrix:
    """Sum the neighborhood matrices for several distances with uniform weights."""
    if not ks:
        raise ValueError("at least one distance k required")
    if any(k <= 0 for k in ks):
        raise ValueError("distances must be positive")
    total: dict[tuple[int, int], float] = defaultdict(float)
    for k in ks:
        w = neighborhood_matrix(context_matrix(corpus, k, policy))
        for key, val in w.entries.items():
            total[key] += val
    return NeighborhoodMatrix(min(ks), len(corpus.vocabulary), policy, dict(total))


def transition_matrix(w: NeighborhoodMatrix) -> TransitionMatrix:
    """Normalize each row of W by its actual degree.

    A zero-degree row (isolated word under truncate) becomes a self-loop
    with degree 1, keeping P stochastic and D invertible.
    """
    dense = w.to_dense()
    degree = w.degree.copy()
    isolated = degree == 0
    if isolated.any():
        idx = np.flatnonzero(isolated)
        dense[idx, idx] = 1.0
        degree[idx] = 1.0
    matrix = dense / degree[:, None]
    return TransitionMatrix(matrix, degree)


def bigram_mle_check(
    corpus: TokenizedCorpus, p: TransitionMatrix, policy: str = "truncate"
) -> float:
    """Max absolute difference between P and a direct bigram-frequency estimate.

    Streams over adjacent occurrence pairs (both reading directions, halved)
    without building any matrix; the brute-force oracle for the k=1 pipeline.
    """
    _check_policy(policy)
    nt = len(corpus.vocabulary)
    events: dict[tuple[int, int], float] = defaultdict(float)
    for seq in corpus.texts:
        n = len(seq)
        last = n if policy == "wrap" else n - 1
        for pos in range(last):
            a, b = seq[pos], seq[(pos + 1) % n]
            events[(a, b)] += 0.5
            events[(b, a)] += 0.5
    totals = np.zeros(nt)
    for (i, _), v in events.items():
        totals[i] += v
    estimate = np.zeros((nt, nt))
    for i in range(nt):
        if totals[i] == 0:
            estimate[i, i] = 1.0  # same isolated-word convention as P
    for (i, j), v in events.items():
        estimate[i, j] = v / totals[i]
    return float(np.max(np.abs(estimate - p.matrix)))


def write_triplets(
    fh: IO[str], dim: int, k: int, policy: str, items: Iterable[tuple[int, int, float]]
) -> None:
    """Dump a sparse matrix as 'i j value' lines under a 'nt k policy' header."""
    fh.write(f"{dim} {k} {policy}\n")
    for i, j, v in sorted(items):
        fh.write(f"{i} {j} {v:.12g}\n")


def read_triplets(fh: IO[str]) -> tuple[int, int, str, dict[tuple[int, int], float]]:
    header = fh.readline().split()
    dim, k, policy = int(header[0]), int(header[1]), header[2]
    entries = {}
    for line in fh:
        if not line.strip():
            continue
        si, sj, sv = line.split()
        entries[(int(si), int(sj))] = float(sv)
    return dim, k, policy, entries
