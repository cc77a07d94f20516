import string

import numpy as np
import pytest

from spectext import build_corpus
from spectext.counts import combined_neighborhood


def random_text(rng, vocab_size, length):
    letters = string.ascii_lowercase[:vocab_size]
    return " ".join(rng.choice(list(letters), size=length))


def random_corpus(rng, vocab_max=20, length_max=200, n_texts=1):
    vocab_size = int(rng.integers(2, vocab_max + 1))
    texts = [
        random_text(rng, vocab_size, int(rng.integers(2, length_max + 1)))
        for _ in range(n_texts)
    ]
    return build_corpus(texts)


def is_connected(corpus, policy="truncate"):
    w = combined_neighborhood(corpus, (1,), policy)
    n = len(corpus.vocabulary)
    adj = w.to_dense() > 0
    seen = np.zeros(n, dtype=bool)
    stack = [0]
    seen[0] = True
    while stack:
        i = stack.pop()
        for j in np.flatnonzero(adj[i]):
            if not seen[j]:
                seen[j] = True
                stack.append(j)
    return seen.all()


def random_connected_corpus(rng, vocab_max=20, length_max=200):
    while True:
        corpus = random_corpus(rng, vocab_max, length_max)
        if is_connected(corpus):
            return corpus


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
