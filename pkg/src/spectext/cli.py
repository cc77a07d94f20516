"""Command-line interface: analyze, generate, evaluate, paradigm."""

from __future__ import annotations

import argparse
import os
import sys

import numpy as np

from . import synth
from .corpus import TokenizationConfig, build_corpus, read_manifest
from .counts import combined_neighborhood, transition_matrix, write_triplets
from .errors import SpectextError
from .paradigm import ParadigmaticConfig, dissimilarity_matrix, similarity_matrix
from .render import RenderConfig, run_pipeline
from .spectral import spectral_decompose


def _int_list(text: str) -> tuple[int, ...]:
    return tuple(int(v) for v in text.split(","))


def _bool(text: str) -> bool:
    if text.lower() in ("true", "1", "yes"):
        return True
    if text.lower() in ("false", "0", "no"):
        return False
    raise argparse.ArgumentTypeError(f"expected true/false, got {text!r}")


def _apply_config_file(argv: list[str]) -> list[str]:
    """Prepend key=value pairs from a --config file as long flags."""
    if "--config" not in argv:
        return argv
    idx = argv.index("--config")
    path = argv[idx + 1]
    rest = argv[:idx] + argv[idx + 2 :]
    flags = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            key, value = line.split("=", 1)
            flags += [f"--{key.strip().replace('_', '-')}", value.strip()]
    # command line wins over config file: flags from the file go first
    return [rest[0]] + flags + rest[1:]


def _add_corpus_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--token-mode", choices=("alphabetic_only", "extended_tokens"),
                   default="alphabetic_only")
    p.add_argument("--case-fold", type=_bool, default=True)
    p.add_argument("--min-count", type=int, default=1)
    p.add_argument("--pruning", choices=("map_to_unk", "break_chain"),
                   default="map_to_unk")
    p.add_argument("--k", type=_int_list, default=(1,),
                   help="comma-separated neighbor distances, e.g. 1 or 1,2")
    p.add_argument("--boundary", choices=("truncate", "wrap"), default="truncate")


def _token_config(args) -> TokenizationConfig:
    return TokenizationConfig(
        mode=args.token_mode,
        case_fold=args.case_fold,
        min_count=args.min_count,
        pruning_policy=args.pruning,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spectext",
        description="Spectral soft clustering of corpus words into "
        "latent languages/discourses.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="run the full pipeline on a manifest")
    p.add_argument("manifest")
    p.add_argument("--out-dir", required=True)
    _add_corpus_flags(p)
    p.add_argument("--axes", type=_int_list, default=(2, 3, 4))
    p.add_argument("--color-mode", choices=("squared_coordinate", "membership"),
                   default="squared_coordinate")
    p.add_argument("--scatter-axes", type=_int_list, default=(2, 3))
    p.add_argument("--top-n", type=int, default=40)

    p = sub.add_parser("generate", help="generate a corpus from a chain config")
    p.add_argument("chain_config")
    p.add_argument("--out", required=True)
    p.add_argument("--seed", type=int, default=None, help="override config seed")

    p = sub.add_parser("evaluate", help="score axis-sign separation against labels")
    p.add_argument("manifest")
    p.add_argument("--labels", required=True,
                   help="file of 'word label' lines; ground truth classes")
    p.add_argument("--axis", type=int, default=2)
    _add_corpus_flags(p)

    p = sub.add_parser("paradigm", help="export paradigmatic (dis)similarities")
    p.add_argument("manifest")
    p.add_argument("--out-dir", required=True)
    p.add_argument("--interval", type=_int_list, default=(-1, 1))
    p.add_argument("--top-n", type=int, default=40)
    _add_corpus_flags(p)

    return parser


def cmd_analyze(args) -> int:
    run_pipeline(
        args.manifest,
        args.out_dir,
        token_config=_token_config(args),
        render_config=RenderConfig(
            axes=tuple(args.axes),
            color_mode=args.color_mode,
            scatter_axes=tuple(args.scatter_axes),
            top_n=args.top_n,
        ),
        ks=args.k,
        boundary=args.boundary,
    )
    print(f"wrote outputs to {args.out_dir}")
    return 0


def cmd_generate(args) -> int:
    with open(args.chain_config, encoding="utf-8") as fh:
        mix = synth.read_mixspec(fh)
    if args.seed is not None:
        mix.seed = args.seed
    text = synth.generate(mix)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(text + "\n")
    with open(args.out + ".meta", "w", encoding="utf-8") as fh:
        fh.write(f"random_source={synth.RNG_ID}\n")
        fh.write(f"seed={mix.seed}\n")
        fh.write(f"length={mix.length}\n")
        fh.write(f"cross_probability={mix.cross_probability}\n")
    print(f"wrote {mix.length} tokens to {args.out}")
    return 0


def cmd_evaluate(args) -> int:
    texts = read_manifest(args.manifest)
    corpus = build_corpus(texts, _token_config(args))
    w = combined_neighborhood(corpus, args.k, args.boundary)
    result = spectral_decompose(transition_matrix(w))
    truth = {}
    with open(args.labels, encoding="utf-8") as fh:
        for line in fh:
            if line.strip():
                word, label = line.split()
                truth[word] = int(label)
    ignore = [w_ for w_ in corpus.vocabulary.types if w_ not in truth]
    acc = synth.separation_accuracy(
        result, corpus.vocabulary, truth, axis=args.axis, ignore=ignore
    )
    print(f"separation_accuracy={acc:.4f}")
    print(f"lambda_2={result.eigenvalues[1]:.6f}" if len(result.eigenvalues) > 1 else "")
    return 0


def cmd_paradigm(args) -> int:
    texts = read_manifest(args.manifest)
    corpus = build_corpus(texts, _token_config(args))
    config = ParadigmaticConfig(interval=tuple(args.interval))
    order = sorted(
        range(len(corpus.vocabulary)),
        key=lambda i: (-corpus.vocabulary.counts[i], corpus.vocabulary.types[i]),
    )
    ids = order[: args.top_n]
    delta = dissimilarity_matrix(corpus, config, args.boundary, word_ids=ids)
    sim = similarity_matrix(delta)
    os.makedirs(args.out_dir, exist_ok=True)
    with open(os.path.join(args.out_dir, "delta.txt"), "w", encoding="utf-8") as fh:
        items = [
            (a, b, delta.entries[a, b])
            for a in range(delta.dim)
            for b in range(delta.dim)
            if delta.entries[a, b] != 0
        ]
        write_triplets(fh, delta.dim, 0, args.boundary, items)
    types = corpus.vocabulary.types
    with open(os.path.join(args.out_dir, "pairs.csv"), "w", encoding="utf-8") as fh:
        fh.write("word_i,word_j,delta,similarity\n")
        for a in range(delta.dim):
            for b in range(a + 1, delta.dim):
                fh.write(
                    f"{types[ids[a]]},{types[ids[b]]},"
                    f"{delta.entries[a, b]:.12g},{sim[a, b]:.12g}\n"
                )
    print(f"wrote paradigm exports to {args.out_dir}")
    return 0


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    argv = _apply_config_file(argv)
    args = build_parser().parse_args(argv)
    handlers = {
        "analyze": cmd_analyze,
        "generate": cmd_generate,
        "evaluate": cmd_evaluate,
        "paradigm": cmd_paradigm,
    }
    try:
        return handlers[args.command](args)
    except SpectextError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
