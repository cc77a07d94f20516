"""Synthetic corpora from coupled Markov chains, and separation scoring.

Several elementary chains are coupled by a small cross-transition
probability; the random walk over the coupled system emits a token stream
whose known per-word chain is the ground truth for evaluating how well the
spectral axes recover the latent generative systems.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import IO, Mapping, Sequence

import numpy as np

from .corpus import UNK, Vocabulary
from .errors import MissingLabel
from .spectral import SpectralResult

RNG_ID = "numpy.random.PCG64"


@dataclass
class ChainSpec:
    states: list[str]
    transitions: np.ndarray
    label: int = 0

    def __post_init__(self) -> None:
        t = np.asarray(self.transitions, dtype=float)
        if t.shape != (len(self.states), len(self.states)):
            raise ValueError("transition matrix shape does not match states")
        if t.min() < 0:
            raise ValueError("negative transition probability")
        if np.max(np.abs(t.sum(axis=1) - 1.0)) > 1e-12:
            raise ValueError("transition rows must sum to 1")
        self.transitions = t


@dataclass
class MixSpec:
    chains: list[ChainSpec]
    cross_probability: float = 0.02
    seed: int = 0
    length: int = 10000

    def __post_init__(self) -> None:
        if not 0 < self.cross_probability < 1:
            raise ValueError("cross_probability must lie in (0, 1)")
        if self.length < 1:
            raise ValueError("length must be positive")

    def truth_labels(self) -> dict[str, int]:
        """Chain label per word; words present in several chains are omitted."""
        seen: dict[str, int] = {}
        conflicted: set[str] = set()
        for chain in self.chains:
            for word in chain.states:
                if word in seen and seen[word] != chain.label:
                    conflicted.add(word)
                seen[word] = chain.label
        return {w: l for w, l in seen.items() if w not in conflicted}


def generate(mix: MixSpec) -> str:
    """Emit a space-separated token stream from the coupled random walk.

    At each step the walk jumps, with the cross probability, to a uniformly
    chosen state of a uniformly chosen other chain; otherwise it follows the
    current chain's transition row. Deterministic given the seed.
    """
    rng = np.random.default_rng(mix.seed)
    cumulative = [np.cumsum(c.transitions, axis=1) for c in mix.chains]
    chain = int(rng.integers(len(mix.chains)))
    state = int(rng.integers(len(mix.chains[chain].states)))
    out = []
    for _ in range(mix.length):
        out.append(mix.chains[chain].states[state])
        if len(mix.chains) > 1 and rng.random() < mix.cross_probability:
            other = int(rng.integers(len(mix.chains) - 1))
            if other >= chain:
                other += 1
            chain = other
            state = int(rng.integers(len(mix.chains[chain].states)))
        else:
            u = rng.random()
            state = int(np.searchsorted(cumulative[chain][state], u, side="right"))
            state = min(state, len(mix.chains[chain].states) - 1)
    return " ".join(out)


def separation_accuracy(
    result: SpectralResult,
    vocabulary: Vocabulary,
    truth: Mapping[str, int],
    axis: int = 2,
    ignore: Sequence[str] = (),
) -> float:
    """Accuracy of the sign of an eigen-axis against binary chain labels.

    Each word is classified by the sign of its coordinate; of the two
    label-to-sign assignments the better one is scored, so the result is
    invariant under a global sign flip. ``ignore`` exempts words (e.g.
    planted shared vocabulary) from needing a label.
    """
    if axis < 2:
        raise ValueError("axis must be >= 2 (axis 1 is trivial)")
    coords = result.axis(axis)
    skip = set(ignore) | {UNK}
    labels = sorted({l for w, l in truth.items() if w not in skip})
    if len(labels) != 2:
        raise ValueError("separation accuracy needs exactly two classes")
    pairs = []
    for wid, word in enumerate(vocabulary.types):
        if word in skip:
            continue
        if word not in truth:
            raise MissingLabel(f"no ground-truth label for {word!r}")
        pairs.append((coords[wid] >= 0, truth[word] == labels[1]))
    hits = sum(s == t for s, t in pairs)
    return max(hits, len(pairs) - hits) / len(pairs)


def write_mixspec(fh: IO[str], mix: MixSpec) -> None:
    fh.write(f"cross_probability={mix.cross_probability}\n")
    fh.write(f"seed={mix.seed}\n")
    fh.write(f"length={mix.length}\n")
    for chain in mix.chains:
        fh.write("[chain]\n")
        fh.write("states=" + " ".join(chain.states) + "\n")
        fh.write(f"label={chain.label}\n")
        for row in chain.transitions:
            fh.write(" ".join(format(v, ".12g") for v in row) + "\n")


def read_mixspec(fh: IO[str]) -> MixSpec:
    """Parse the plain-text chain config: key=value lines plus matrix blocks."""
    globals_: dict[str, str] = {}
    chains: list[ChainSpec] = []
    states: list[str] | None = None
    label = 0
    rows: list[list[float]] = []

    def flush() -> None:
        nonlocal states, rows, label
        if states is not None:
            chains.append(ChainSpec(states, np.array(rows), label))
        states, rows, label = None, [], 0

    for raw in fh:
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line == "[chain]":
            flush()
            states = []
            continue
        if "=" in line and not line[0].isdigit() and not line[0] in "+-.":
            key, value = line.split("=", 1)
            key, value = key.strip(), value.strip()
            if states is None:
                globals_[key] = value
            elif key == "states":
                states = value.split()
            elif key == "label":
                label = int(value)
            continue
        rows.append([float(v) for v in line.split()])
    flush()
    if not chains:
        raise ValueError("chain config defines no chains")
    return MixSpec(
        chains,
        cross_probability=float(globals_.get("cross_probability", 0.02)),
        seed=int(globals_.get("seed", 0)),
        length=int(globals_.get("length", 10000)),
    )
