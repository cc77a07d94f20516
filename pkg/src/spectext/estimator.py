"""Scikit-learn style wrapper around the spectral pipeline."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .corpus import UNK, TokenizationConfig, build_corpus, tokenize
from .counts import combined_neighborhood, transition_matrix
from .spectral import membership, spectral_decompose


def _check_documents(X) -> list[str]:
    if isinstance(X, str):
        raise ValueError("expected an iterable of documents, got a single string")
    docs = list(X)
    if not docs:
        raise ValueError("at least one document required")
    if not all(isinstance(d, str) for d in docs):
        raise ValueError("documents must be strings")
    return docs


class SpectralWordClusters(BaseEstimator, TransformerMixin):
    """Soft clustering of a corpus vocabulary into latent generative systems.

    Fitting builds the word neighborhood graph from raw documents, solves
    the degree-normalized eigenproblem, and exposes per-word coordinates
    and membership probabilities on the eigen-axes. ``transform`` maps
    documents to their mean membership profile on the non-trivial axes,
    and ``predict`` splits documents by the sign of their mean coordinate
    on a chosen axis.

    Parameters
    ----------
    token_mode : 'alphabetic_only' or 'extended_tokens'
    case_fold : lowercase tokens before counting
    min_count : drop or merge types rarer than this
    pruning_policy : 'map_to_unk' or 'break_chain'
    k : neighbor distance(s) used for the co-occurrence graph
    boundary : 'truncate' or 'wrap' text-edge handling
    n_axes : eigen-axes to retain (None keeps all)
    """

    def __init__(
        self,
        token_mode="alphabetic_only",
        case_fold=True,
        min_count=1,
        pruning_policy="map_to_unk",
        k=1,
        boundary="truncate",
        n_axes=None,
    ):
        self.token_mode = token_mode
        self.case_fold = case_fold
        self.min_count = min_count
        self.pruning_policy = pruning_policy
        self.k = k
        self.boundary = boundary
        self.n_axes = n_axes

    def _token_config(self) -> TokenizationConfig:
        return TokenizationConfig(
            mode=self.token_mode,
            case_fold=self.case_fold,
            min_count=self.min_count,
            pruning_policy=self.pruning_policy,
        )

    def fit(self, X, y=None):
        docs = _check_documents(X)
        ks = (self.k,) if isinstance(self.k, int) else tuple(self.k)
        self.corpus_ = build_corpus(docs, self._token_config())
        w = combined_neighborhood(self.corpus_, ks, self.boundary)
        p = transition_matrix(w)
        result = spectral_decompose(p, self.n_axes)
        self.vocabulary_ = self.corpus_.vocabulary
        self.degrees_ = result.degrees
        self.eigenvalues_ = result.eigenvalues
        self.coordinates_ = result.eigenvectors
        self.membership_ = membership(result).values
        self.result_ = result
        return self

    def word_ids(self, words) -> np.ndarray:
        """Vocabulary ids for word strings; unknown words map to UNK."""
        check_is_fitted(self, "vocabulary_")
        ids = []
        for word in words:
            if self.case_fold:
                word = word.lower()
            if word in self.vocabulary_:
                ids.append(self.vocabulary_.id_of(word))
            elif UNK in self.vocabulary_:
                ids.append(self.vocabulary_.id_of(UNK))
            else:
                raise KeyError(f"unknown word {word!r} and no UNK in vocabulary")
        return np.asarray(ids, dtype=int)

    def transform(self, X) -> np.ndarray:
        """Mean membership over non-trivial axes for each document's tokens."""
        check_is_fitted(self, "membership_")
        docs = _check_documents(X)
        n_axes = self.membership_.shape[1] - 1
        out = np.zeros((len(docs), n_axes))
        for row, doc in enumerate(docs):
            tokens = tokenize(doc, self._token_config())
            known = [t for t in tokens if t in self.vocabulary_]
            if known:
                ids = self.word_ids(known)
                out[row] = self.membership_[ids, 1:].mean(axis=0)
        return out

    def predict(self, X, axis: int = 2) -> np.ndarray:
        """0/1 document labels from the sign of the mean axis coordinate."""
        check_is_fitted(self, "coordinates_")
        docs = _check_documents(X)
        labels = np.zeros(len(docs), dtype=int)
        for row, doc in enumerate(docs):
            tokens = tokenize(doc, self._token_config())
            known = [t for t in tokens if t in self.vocabulary_]
            if known:
                ids = self.word_ids(known)
                labels[row] = int(self.coordinates_[ids, axis - 1].mean() >= 0)
        return labels
