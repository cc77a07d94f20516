"""Pipeline orchestration and output rendering.

Renders the corpus in original token order with one background color per
word, RGB channels driven by three eigen-axes, plus CSV exports of word
coordinates and a plain-text run report.
"""

from __future__ import annotations

import html
import os
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import counts as counts_mod
from .corpus import (
    TokenizationConfig,
    TokenizedCorpus,
    Vocabulary,
    build_corpus,
    read_manifest,
)
from .errors import AxisOutOfRange
from .spectral import MembershipTable, SpectralResult, membership, spectral_decompose

COLOR_MODES = ("squared_coordinate", "membership")


@dataclass(frozen=True)
class RenderConfig:
    axes: tuple[int, int, int] = (2, 3, 4)
    color_mode: str = "squared_coordinate"
    scatter_axes: tuple[int, int] = (2, 3)
    top_n: int = 40

    def __post_init__(self) -> None:
        if self.color_mode not in COLOR_MODES:
            raise ValueError(f"unknown color mode {self.color_mode!r}")
        if len(self.axes) != 3 or len(set(self.axes)) != 3:
            raise ValueError("exactly 3 distinct RGB axes required")
        if min(self.axes) < 2 or min(self.scatter_axes) < 2:
            raise ValueError("axis indices must be >= 2 (axis 1 is trivial)")
        if self.top_n < 1:
            raise ValueError("top_n must be positive")


def _check_axes(result: SpectralResult, axes: Sequence[int]) -> None:
    if max(axes) > result.n_axes:
        raise AxisOutOfRange(
            f"axis {max(axes)} requested but only {result.n_axes} computed"
        )


def _channel(result: SpectralResult, axis: int, mode: str) -> np.ndarray:
    values = result.axis(axis) ** 2
    if mode == "membership":
        values = result.degrees * values
    peak = values.max()
    if peak == 0:
        return np.zeros(len(values), dtype=int)
    return np.rint(255 * values / peak).astype(int)


def render_html(
    corpus: TokenizedCorpus, result: SpectralResult, config: RenderConfig | None = None
) -> str:
    """Color-coded HTML of the corpus, one background color per word type.

    Channels are per-axis max-normalized squares of the coordinates (or the
    degree-weighted memberships); text flips black/white on a 0.5 relative
    luminance threshold. Stripping the markup recovers the token sequence.
    """
    config = config or RenderConfig()
    _check_axes(result, config.axes)
    channels = np.stack(
        [_channel(result, a, config.color_mode) for a in config.axes], axis=1
    )
    types = corpus.vocabulary.types
    styles = []
    for wid in range(len(types)):
        r, g, b = channels[wid]
        lum = (0.2126 * r + 0.7152 * g + 0.0722 * b) / 255
        fg = "#000000" if lum > 0.5 else "#ffffff"
        styles.append(f"background-color:#{r:02x}{g:02x}{b:02x};color:{fg}")
    parts = [
        "<!DOCTYPE html>",
        '<html><head><meta charset="utf-8"><title></title></head><body>',
    ]
    for seq in corpus.texts:
        spans = (
            f'<span style="{styles[wid]}">{html.escape(types[wid])}</span>'
            for wid in seq
        )
        parts.append("<p>" + " ".join(spans) + "</p>")
    parts.append("</body></html>")
    return "\n".join(parts) + "\n"


def _top_words(vocabulary: Vocabulary, n: int) -> list[int]:
    order = sorted(
        range(len(vocabulary)),
        key=lambda i: (-vocabulary.counts[i], vocabulary.types[i]),
    )
    return order[:n]


def export_scatter(
    result: SpectralResult, vocabulary: Vocabulary, config: RenderConfig | None = None
) -> str:
    """CSV of the top-N most frequent words on the two scatter axes."""
    config = config or RenderConfig()
    _check_axes(result, config.scatter_axes)
    a, b = config.scatter_axes
    lines = [f"word,count,y_{a},y_{b}"]
    for wid in _top_words(vocabulary, config.top_n):
        lines.append(
            f"{vocabulary.types[wid]},{vocabulary.counts[wid]},"
            f"{result.axis(a)[wid]:.12g},{result.axis(b)[wid]:.12g}"
        )
    return "\n".join(lines) + "\n"


def export_axes(
    result: SpectralResult,
    table: MembershipTable,
    vocabulary: Vocabulary,
    axes: Sequence[int] = (2, 3, 4),
) -> str:
    """CSV of per-word coordinates and memberships on the given axes."""
    _check_axes(result, axes)
    header = ["word", "count"]
    header += [f"y_{a}" for a in axes] + [f"membership_{a}" for a in axes]
    lines = [",".join(header)]
    for wid in range(len(vocabulary)):
        row = [vocabulary.types[wid], str(vocabulary.counts[wid])]
        row += [f"{result.axis(a)[wid]:.12g}" for a in axes]
        row += [f"{table.column(a)[wid]:.12g}" for a in axes]
        lines.append(",".join(row))
    return "\n".join(lines) + "\n"


@dataclass
class PipelineResult:
    corpus: TokenizedCorpus
    neighborhood: counts_mod.NeighborhoodMatrix
    transition: counts_mod.TransitionMatrix
    spectral: SpectralResult
    membership: MembershipTable
    outputs: dict[str, str] = field(default_factory=dict)  # name -> path


def run_pipeline(
    manifest: str,
    out_dir: str,
    token_config: TokenizationConfig | None = None,
    render_config: RenderConfig | None = None,
    ks: Sequence[int] = (1,),
    boundary: str = "truncate",
    random_source: str | None = None,
) -> PipelineResult:
    """Full corpus -> counts -> spectral -> render run, writing all outputs.

    Writes render.html, scatter.csv, axes.csv and report.txt into out_dir.
    Deterministic: identical inputs and configs give byte-identical outputs.
    """
    token_config = token_config or TokenizationConfig()
    render_config = render_config or RenderConfig()
    texts = read_manifest(manifest)
    corpus = build_corpus(texts, token_config)
    w = counts_mod.combined_neighborhood(corpus, ks, boundary)
    p = counts_mod.transition_matrix(w)
    result = spectral_decompose(p)
    table = membership(result)

    os.makedirs(out_dir, exist_ok=True)
    outputs = {}

    def write(name: str, content: str) -> None:
        path = os.path.join(out_dir, name)
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(content)
        outputs[name] = path

    write("render.html", render_html(corpus, result, render_config))
    write("scatter.csv", export_scatter(result, corpus.vocabulary, render_config))
    axes = sorted(set(render_config.axes) | set(render_config.scatter_axes))
    axes = [a for a in axes if a <= result.n_axes]
    write("axes.csv", export_axes(result, table, corpus.vocabulary, axes))

    shown = min(result.n_axes, 12)
    report = [
        f"vocabulary_size={len(corpus.vocabulary)}",
        f"token_count={corpus.total_occurrences}",
        "eigenvalues="
        + " ".join(format(v, ".12g") for v in result.eigenvalues[:shown]),
        f"k={','.join(str(k) for k in ks)}",
        f"boundary={boundary}",
        f"token_mode={token_config.mode}",
        f"case_fold={token_config.case_fold}",
        f"min_count={token_config.min_count}",
        f"pruning_policy={token_config.pruning_policy}",
        f"axes={','.join(str(a) for a in render_config.axes)}",
        f"color_mode={render_config.color_mode}",
        f"top_n={render_config.top_n}",
    ]
    if random_source:
        report.append(f"random_source={random_source}")
    write("report.txt", "\n".join(report) + "\n")

    return PipelineResult(corpus, w, p, result, table, outputs)
