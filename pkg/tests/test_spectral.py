import numpy as np
import pytest

from spectext import (
    DegenerateDegree,
    build_corpus,
    context_matrix,
    generalized_residual,
    membership,
    ncut_cost,
    neighborhood_matrix,
    spectral_decompose,
    transition_matrix,
)
from spectext.counts import TransitionMatrix

from conftest import random_connected_corpus


def pipeline(texts, policy="truncate"):
    corpus = build_corpus(texts)
    w = neighborhood_matrix(context_matrix(corpus, 1, policy))
    p = transition_matrix(w)
    return corpus, w, p


def test_hand_bipartite_example():
    _, w, p = pipeline(["a b a b a"])
    result = spectral_decompose(p)
    assert np.allclose(result.eigenvalues, [1.0, -1.0], atol=1e-12)
    y1 = result.axis(1)
    assert abs(y1[0] - y1[1]) <= 1e-12
    table = membership(result)
    assert np.allclose(table.column(1), [0.5, 0.5], atol=1e-12)
    # bipartite second axis splits the two words with opposite signs
    assert np.allclose(table.column(2), [0.5, 0.5], atol=1e-12)
    y2 = result.axis(2)
    assert y2[0] * y2[1] < 0


def test_single_state():
    _, _, p = pipeline(["a a a"], policy="wrap")
    result = spectral_decompose(p)
    assert result.eigenvalues[0] == pytest.approx(1.0, abs=1e-12)
    assert membership(result).column(1)[0] == pytest.approx(1.0, abs=1e-12)


def test_disconnected_blocks_give_double_unit_eigenvalue():
    _, _, p = pipeline(["a b a b a", "c d c d c"])
    result = spectral_decompose(p)
    assert result.eigenvalues[0] == pytest.approx(1.0, abs=1e-9)
    assert result.eigenvalues[1] == pytest.approx(1.0, abs=1e-9)
    # the unit eigenspace is spanned by the block indicators: any basis
    # vector is constant within each block
    for col in range(2):
        y = result.eigenvectors[:, col]
        assert abs(y[0] - y[1]) <= 1e-9
        assert abs(y[2] - y[3]) <= 1e-9


def test_sign_convention_peak_positive(rng):
    for _ in range(10):
        corpus = random_connected_corpus(rng, vocab_max=12, length_max=100)
        w = neighborhood_matrix(context_matrix(corpus, 1, "truncate"))
        result = spectral_decompose(transition_matrix(w))
        for col in range(result.n_axes):
            y = result.eigenvectors[:, col]
            assert y[np.argmax(np.abs(y))] > 0


def test_d_normalization_and_membership_columns(rng):
    for _ in range(10):
        corpus = random_connected_corpus(rng, vocab_max=20, length_max=150)
        w = neighborhood_matrix(context_matrix(corpus, 1, "truncate"))
        p = transition_matrix(w)
        result = spectral_decompose(p)
        norms = result.degrees @ result.eigenvectors**2
        assert np.max(np.abs(norms - 1.0)) <= 1e-9
        table = membership(result)
        assert table.values.min() >= 0.0
        assert np.max(np.abs(table.values.sum(axis=0) - 1.0)) <= 1e-9


def test_trivial_axis_recovers_word_frequencies(rng):
    for _ in range(10):
        corpus = random_connected_corpus(rng, vocab_max=15, length_max=150)
        w = neighborhood_matrix(context_matrix(corpus, 1, "wrap"))
        p = transition_matrix(w)
        result = spectral_decompose(p)
        y1 = result.axis(1)
        spread = (y1.max() - y1.min()) / abs(y1.mean())
        assert spread <= 1e-9
        freq = result.degrees / result.degrees.sum()
        assert np.max(np.abs(membership(result).column(1) - freq)) <= 1e-9


def test_eigenvalue_residual_against_p(rng):
    for _ in range(10):
        corpus = random_connected_corpus(rng, vocab_max=15, length_max=120)
        w = neighborhood_matrix(context_matrix(corpus, 1, "truncate"))
        p = transition_matrix(w)
        result = spectral_decompose(p)
        assert abs(result.eigenvalues[0] - 1.0) <= 1e-9
        assert result.eigenvalues.min() >= -1.0 - 1e-9
        assert result.eigenvalues.max() <= 1.0 + 1e-9
        for col in range(result.n_axes):
            y = result.eigenvectors[:, col]
            resid = p.matrix @ y - result.eigenvalues[col] * y
            assert np.max(np.abs(resid)) / np.max(np.abs(y)) <= 1e-8


def test_spectrum_matches_nonsymmetric_path(rng):
    for _ in range(10):
        corpus = random_connected_corpus(rng, vocab_max=15, length_max=120)
        w = neighborhood_matrix(context_matrix(corpus, 1, "truncate"))
        p = transition_matrix(w)
        result = spectral_decompose(p)
        raw = np.sort(np.real(np.linalg.eigvals(p.matrix)))[::-1]
        assert np.max(np.abs(raw - result.eigenvalues)) <= 1e-9


def test_nonsymmetric_eigenvectors_agree_after_rescaling():
    # the paper's route: nonsymmetric eigenvectors rescaled to y^T D y = 1
    corpus = build_corpus(["a b c a b c b a c a b"])
    w = neighborhood_matrix(context_matrix(corpus, 1, "truncate"))
    p = transition_matrix(w)
    result = spectral_decompose(p)
    values, vectors = np.linalg.eig(p.matrix)
    order = np.argsort(-np.real(values))
    for col, raw_col in enumerate(order):
        y = np.real(vectors[:, raw_col])
        y = y / np.sqrt(result.degrees @ y**2)
        ref = result.eigenvectors[:, col]
        if y @ ref < 0:  # sign is the only remaining ambiguity
            y = -y
        assert np.max(np.abs(y - ref)) <= 1e-8


def test_generalized_residual(rng):
    _, w, p = pipeline(["a b a b a"])
    result = spectral_decompose(p)
    assert generalized_residual(result, w, p.degree) <= 1e-12
    for _ in range(10):
        corpus = random_connected_corpus(rng, vocab_max=20, length_max=150)
        w = neighborhood_matrix(context_matrix(corpus, 1, "truncate"))
        p = transition_matrix(w)
        result = spectral_decompose(p)
        assert generalized_residual(result, w, p.degree) <= 1e-8


def test_degenerate_degree_raises():
    p = TransitionMatrix(np.eye(2), np.array([1.0, 0.0]))
    with pytest.raises(DegenerateDegree):
        spectral_decompose(p)


def test_retain_fewer_axes():
    _, _, p = pipeline(["a b c a b c a"])
    result = spectral_decompose(p, m=2)
    assert result.n_axes == 2
    assert len(result.eigenvalues) == 3
    with pytest.raises(ValueError):
        spectral_decompose(p, m=10)


def test_ncut_cost_examples():
    _, w, _ = pipeline(["a b a b a"])
    assert ncut_cost(w, np.ones(2)) == 0.0
    assert ncut_cost(w, np.array([1.0, 0.0])) == 4.0


def test_ncut_zero_on_components():
    _, w, _ = pipeline(["a b a b a", "c d c d c"])
    indicator = np.array([1.0, 1.0, 0.0, 0.0])
    assert ncut_cost(w, indicator) == 0.0
