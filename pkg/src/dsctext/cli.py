"""Batch command-line interface: train, predict, evaluate, cv, grid.

Defaults follow the Reuters R8 setup: bundled English stop words, tokens of
two characters or fewer dropped, alpha = 0.45 and p = inf. Fold shuffling
uses ``--seed`` (default 0) and nothing else is random.
"""

from __future__ import annotations

import argparse
import sys
import warnings
from pathlib import Path

from .core import EmptyDomainWarning, format_p, load_model, parse_p, predict, save_model, train
from .corpus_io import load_dir, load_tsv
from .evaluation import cross_validate, dump_json, evaluate, grid_search
from .preprocess import PreprocessConfig, load_stopwords

DEFAULT_ALPHA = 0.45
DEFAULT_P = "inf"
DEFAULT_FOLDS = 5
DEFAULT_SEED = 0
DEFAULT_MIN_WORD_LEN = 2


def _alpha(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid alpha {text!r}") from None
    if not value >= 0:
        raise argparse.ArgumentTypeError(f"alpha must be >= 0, got {text}")
    return value


def _p(text: str) -> float:
    try:
        return parse_p(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"p must be a positive number or 'inf', got {text!r}") from None


def _folds(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid fold count {text!r}") from None
    if value < 2:
        raise argparse.ArgumentTypeError("folds must be at least 2")
    return value


def _min_len(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("min-word-len must be >= 0")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dsctext", description="Domain-specific word text classifier."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, preprocessing: bool = True) -> None:
        p.add_argument("--input", required=True, type=Path, help="TSV file or label directory")
        p.add_argument("--format", choices=("tsv", "dir"), default="tsv")
        if preprocessing:
            p.add_argument("--min-word-len", type=_min_len, default=DEFAULT_MIN_WORD_LEN,
                           help="drop tokens of this length or shorter (default 2)")
            p.add_argument("--stopwords", default=None,
                           help="stop-word file, or 'none' (default: bundled English list)")

    def report_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--report", type=Path, help="write a JSON report here")
        p.add_argument("--report-timings", action="store_true",
                       help="include wall-clock timings in the JSON report")

    p_train = sub.add_parser("train", help="fit a model and write it to --model")
    common(p_train)
    p_train.add_argument("--model", required=True, type=Path)
    p_train.add_argument("--alpha", type=_alpha, default=DEFAULT_ALPHA)
    p_train.add_argument("--p", type=_p, default=parse_p(DEFAULT_P))

    p_pred = sub.add_parser("predict", help="label documents with a trained model")
    common(p_pred, preprocessing=False)
    p_pred.add_argument("--model", required=True, type=Path)
    p_pred.add_argument("--p", type=_p, default=None, help="override the model's p")
    p_pred.add_argument("--labeled", action="store_true",
                        help="TSV input has a label column (ignored for prediction)")

    p_eval = sub.add_parser("evaluate", help="score a trained model on labeled input")
    common(p_eval, preprocessing=False)
    p_eval.add_argument("--model", required=True, type=Path)
    p_eval.add_argument("--p", type=_p, default=None, help="override the model's p")
    report_flags(p_eval)

    p_cv = sub.add_parser("cv", help="k-fold cross-validation")
    common(p_cv)
    p_cv.add_argument("--alpha", type=_alpha, default=DEFAULT_ALPHA)
    p_cv.add_argument("--p", type=_p, default=parse_p(DEFAULT_P))
    p_cv.add_argument("--folds", type=_folds, default=DEFAULT_FOLDS)
    p_cv.add_argument("--seed", type=int, default=DEFAULT_SEED)
    report_flags(p_cv)

    p_grid = sub.add_parser("grid", help="cross-validated (alpha, p) grid search")
    common(p_grid)
    p_grid.add_argument("--alpha", type=_alpha, nargs="+", default=[DEFAULT_ALPHA])
    p_grid.add_argument("--p", type=_p, nargs="+", default=[parse_p(DEFAULT_P)])
    p_grid.add_argument("--folds", type=_folds, default=DEFAULT_FOLDS)
    p_grid.add_argument("--seed", type=int, default=DEFAULT_SEED)
    report_flags(p_grid)
    return parser


def _config(args) -> PreprocessConfig:
    if args.stopwords is None:
        stop = load_stopwords()
    elif args.stopwords.lower() == "none":
        stop = frozenset()
    else:
        stop = load_stopwords(args.stopwords)
    return PreprocessConfig(min_word_len_exclusive=args.min_word_len, stopwords=stop)


def _labeled(args):
    if args.format == "dir":
        return load_dir(args.input)
    return load_tsv(args.input, labeled=True)


def _write_report(args, payload: dict) -> None:
    if args.report is not None:
        args.report.write_text(dump_json(payload), encoding="utf-8")


def cmd_train(args) -> int:
    corpus = _labeled(args)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", EmptyDomainWarning)
        model = train(corpus, args.alpha, args.p, _config(args))
    save_model(model, args.model)
    print(f"documents {len(corpus)}  k={model.k}  m={len(model.vocabulary)}  "
          f"alpha={model.alpha:g}  p={format_p(model.p)}")
    for label in model.labels:
        print(f"  |CS[{label}]| = {len(model.cs[label])}")
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    print(f"model written to {args.model}")
    return 0


def cmd_predict(args) -> int:
    model = load_model(args.model)
    if args.format == "dir":
        docs = load_dir(args.input).documents
    else:
        docs = load_tsv(args.input, labeled=args.labeled)
        if args.labeled:
            docs = docs.documents
    lines = []
    for doc, pred in zip(docs, predict(model, docs, args.p)):
        line = f"{doc.id}\t{pred.label}\t{pred.scores[pred.label]!r}"
        lines.append(line + "\ttie" if pred.tie else line)
    sys.stdout.write("".join(line + "\n" for line in lines))
    return 0


def cmd_evaluate(args) -> int:
    model = load_model(args.model)
    report = evaluate(model, _labeled(args), args.p)
    print(report.format_table())
    payload = {"alpha": model.alpha, "p": format_p(args.p if args.p is not None else model.p)}
    payload.update(report.to_dict(args.report_timings))
    _write_report(args, payload)
    return 0


def cmd_cv(args) -> int:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", EmptyDomainWarning)
        report = cross_validate(_labeled(args), args.folds, args.alpha, args.p, args.seed, _config(args))
    print(f"{args.folds}-fold cross-validation, alpha={args.alpha:g} p={format_p(args.p)} seed={args.seed}")
    print(report.format_table())
    payload = {"alpha": args.alpha, "p": format_p(args.p), "k_folds": args.folds, "seed": args.seed}
    payload.update(report.to_dict(args.report_timings))
    _write_report(args, payload)
    return 0


def cmd_grid(args) -> int:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", EmptyDomainWarning)
        result = grid_search(_labeled(args), args.alpha, args.p, args.folds, args.seed, _config(args))
    print(result.format_table())
    _write_report(args, result.to_dict(args.report_timings))
    return 0


COMMANDS = {
    "train": cmd_train,
    "predict": cmd_predict,
    "evaluate": cmd_evaluate,
    "cv": cmd_cv,
    "grid": cmd_grid,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (OSError, ValueError) as exc:
        print(f"dsctext {args.command}: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
