"""Spectral soft clustering of corpus vocabularies into latent languages."""

from .corpus import (
    UNK,
    TokenizationConfig,
    TokenizedCorpus,
    Vocabulary,
    build_corpus,
    read_manifest,
    tokenize,
)
from .counts import (
    ContextMatrix,
    NeighborhoodMatrix,
    TransitionMatrix,
    bigram_mle_check,
    combined_neighborhood,
    context_matrix,
    neighborhood_matrix,
    transition_matrix,
)
from .errors import (
    AxisOutOfRange,
    DegenerateDegree,
    EmptyCorpus,
    MissingLabel,
    RangeError,
    SpectextError,
)
from .estimator import SpectralWordClusters
from .paradigm import (
    DissimilarityMatrix,
    ParadigmaticConfig,
    dissimilarity_matrix,
    positional_dissimilarity,
    similarity_matrix,
)
from .render import (
    PipelineResult,
    RenderConfig,
    export_axes,
    export_scatter,
    render_html,
    run_pipeline,
)
from .spectral import (
    MembershipTable,
    SpectralResult,
    generalized_residual,
    membership,
    ncut_cost,
    spectral_decompose,
)
from .synth import ChainSpec, MixSpec, generate, read_mixspec, separation_accuracy

__version__ = "0.1.0"
