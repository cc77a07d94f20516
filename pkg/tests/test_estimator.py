import numpy as np
import pytest
from sklearn.base import clone

from spectext import ChainSpec, MixSpec, SpectralWordClusters, generate


@pytest.fixture(scope="module")
def bilingual_docs():
    gabu = ChainSpec(["ga", "bu"], [[0.3, 0.7], [0.7, 0.3]], label=0)
    zomeu = ChainSpec(["zo", "meu"], [[0.3, 0.7], [0.7, 0.3]], label=1)
    docs = []
    for seed in range(6):
        chain = gabu if seed % 2 == 0 else zomeu
        docs.append(generate(MixSpec([chain], seed=seed, length=300)))
    # weak bridge keeps the word graph connected across the two languages
    docs.append("ga zo ga zo")
    return docs


def test_get_set_params_roundtrip():
    est = SpectralWordClusters(k=2, boundary="wrap")
    params = est.get_params()
    assert params["k"] == 2
    assert params["boundary"] == "wrap"
    cloned = clone(est)
    assert cloned.get_params() == params


def test_fit_sets_attributes(bilingual_docs):
    est = SpectralWordClusters().fit(bilingual_docs)
    nt = len(est.vocabulary_)
    assert est.coordinates_.shape == (nt, nt)
    assert est.membership_.shape == (nt, nt)
    assert abs(est.eigenvalues_[0] - 1.0) <= 1e-9
    assert np.max(np.abs(est.membership_.sum(axis=0) - 1.0)) <= 1e-9


def test_fit_validates_input():
    est = SpectralWordClusters()
    with pytest.raises(ValueError):
        est.fit("a single string is not a document list")
    with pytest.raises(ValueError):
        est.fit([])


def test_transform_shape(bilingual_docs):
    est = SpectralWordClusters().fit(bilingual_docs)
    profile = est.transform(bilingual_docs)
    assert profile.shape == (len(bilingual_docs), len(est.vocabulary_) - 1)
    assert (profile >= 0).all()


def test_predict_separates_documents(bilingual_docs):
    # stay/jump structure aside, ga/bu docs and zo/meu docs never share words,
    # so the second axis splits them and document signs follow suit
    est = SpectralWordClusters().fit(bilingual_docs)
    labels = est.predict(bilingual_docs)
    gabu = labels[:6:2]
    zomeu = labels[1:6:2]
    assert len(set(gabu)) == 1
    assert len(set(zomeu)) == 1
    assert gabu[0] != zomeu[0]


def test_word_ids_unknown_maps_to_unk(bilingual_docs):
    est = SpectralWordClusters(min_count=2).fit(bilingual_docs + ["rare"])
    ids = est.word_ids(["ga", "neverseen"])
    assert est.vocabulary_.types[ids[0]] == "ga"
    assert est.vocabulary_.types[ids[1]] == "<unk>"


def test_word_ids_unknown_raises_without_unk(bilingual_docs):
    est = SpectralWordClusters().fit(bilingual_docs)
    with pytest.raises(KeyError):
        est.word_ids(["neverseen"])
