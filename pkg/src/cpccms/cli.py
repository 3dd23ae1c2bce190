"""Command-line entry point wiring files through the library modules.

Exit codes: 0 success, 1 input error, 2 judgment matrix needs revision.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import decision, fileio, metrics, pairwise
from .textpipe import corpus as corpus_io
from .textpipe import pipeline

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_NEEDS_REVISION = 2


def _write_json(payload: dict, out_path: str | None) -> None:
    text = json.dumps(payload, indent=2) + "\n"
    if out_path:
        Path(out_path).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _parse_fractions(raw: str) -> tuple[float, ...]:
    try:
        return tuple(float(part) for part in raw.split(","))
    except ValueError as exc:
        raise ValueError(f"invalid split {raw!r}: expected comma-separated numbers") from exc


def _parse_ngrams(raw: str) -> tuple[int, int]:
    parts = raw.split(",")
    if len(parts) != 2:
        raise ValueError(f"invalid n-gram range {raw!r}: expected 'min,max'")
    return int(parts[0]), int(parts[1])


def cmd_weights(args: argparse.Namespace) -> int:
    pom = fileio.load_pom(args.pom)
    utilities = pairwise.rau_utilities(pom)
    weights = pairwise.normalize_weights(utilities, pom.kappa, pom.n)
    accordance = pairwise.accordance_report(pom)
    ranking = decision.rank(list(zip(weights.criteria, weights.weights)), precision=args.precision)
    ranks = {entry.model: entry.rank for entry in ranking.entries}
    _write_json(
        {
            "criteria": list(pom.criteria),
            "kappa": pom.kappa,
            "utilities": list(utilities.values),
            "weights": weights.as_dict(),
            "ranks": {c: ranks[c] for c in pom.criteria},
            "accordance_index": accordance.ai,
            "verdict": accordance.verdict.value,
        },
        args.out,
    )
    if accordance.verdict is pairwise.AccordanceVerdict.NEEDS_REVISION:
        return EXIT_NEEDS_REVISION
    return EXIT_OK


def cmd_rank(args: argparse.Namespace) -> int:
    if args.weights:
        weight_vector, accordance = fileio.load_weights_json(args.weights)
    else:
        pom = fileio.load_pom(args.pom)
        weight_vector = pairwise.weights_from_pom(pom)
        accordance = pairwise.accordance_report(pom)

    matrix = fileio.load_decision_matrix_csv(args.scores)
    if args.with_efficiency and metrics.EFFICIENCY not in matrix.criteria:
        if not args.timings:
            raise ValueError("--with-efficiency needs --timings (or an efficiency column in the scores CSV)")
        matrix = decision.with_efficiency_column(matrix, fileio.load_timings_csv(args.timings))

    ranking = decision.rank_models(matrix, weight_vector, precision=args.precision)
    _write_json(
        decision.ranking_report(weight_vector, accordance, ranking, precision=args.precision),
        args.out,
    )
    if accordance.verdict is pairwise.AccordanceVerdict.NEEDS_REVISION:
        return EXIT_NEEDS_REVISION
    return EXIT_OK


def cmd_metrics(args: argparse.Namespace) -> int:
    true_labels, predicted = fileio.load_predictions_csv(args.pred)
    classes = [c.strip() for c in args.classes.split(",") if c.strip()]
    cm = metrics.confusion_from_labels(true_labels, predicted, classes)
    scores = metrics.criterion_scores(cm)
    payload: dict = {"model": args.model}
    payload.update({name: round(value, args.precision) for name, value in scores.as_dict().items()})
    _write_json(payload, args.out)
    return EXIT_OK


def cmd_demo(args: argparse.Namespace) -> int:
    documents = corpus_io.load_corpus_csv(args.data)
    result = pipeline.run_demo(
        documents,
        alpha=args.alpha,
        seed=args.seed,
        fractions=_parse_fractions(args.split),
        ngram_range=_parse_ngrams(args.ngrams),
        keep_punctuation=args.keep_punctuation,
        class_prior_mode=args.prior,
    )
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    fileio.write_predictions_csv(out_dir / "predictions.csv", result.true_labels, result.predicted_labels)
    scores_payload: dict = {"model": result.model_name}
    scores_payload.update(
        {name: round(value, args.precision) for name, value in result.scores.as_dict().items()}
    )
    _write_json(scores_payload, str(out_dir / "scores.json"))
    fileio.write_timings_csv(out_dir / "timing.csv", {result.model_name: result.seconds})
    print(
        f"{result.model_name}: split {result.split_sizes}, "
        f"accuracy {result.scores.accuracy:.{args.precision}f}, "
        f"outputs in {out_dir}",
        file=sys.stderr,
    )
    return EXIT_OK


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(
        state_dir=Path(args.state_dir) if args.state_dir else None,
        static_dir=Path(args.static_dir) if args.static_dir else None,
    )
    uvicorn.run(app, host=args.host, port=args.port)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cpccms",
        description="Criterion weighting, classification metrics, and weighted model ranking.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_weights = sub.add_parser("weights", help="derive criterion weights from a judgment matrix")
    p_weights.add_argument("--pom", required=True, help="judgment matrix JSON file")
    p_weights.add_argument("--out", help="output JSON path (default: stdout)")
    p_weights.add_argument("--precision", type=int, default=3, help="decimals for rank ties")
    p_weights.set_defaults(func=cmd_weights)

    p_rank = sub.add_parser("rank", help="rank models from a scores table and criterion weights")
    source = p_rank.add_mutually_exclusive_group(required=True)
    source.add_argument("--pom", help="judgment matrix JSON file")
    source.add_argument("--weights", help="weights report JSON (output of 'cpccms weights')")
    p_rank.add_argument("--scores", required=True, help="decision matrix CSV")
    p_rank.add_argument("--timings", help="model,seconds CSV for the efficiency column")
    p_rank.add_argument("--with-efficiency", action="store_true", help="include the efficiency criterion")
    p_rank.add_argument("--out", help="output JSON path (default: stdout)")
    p_rank.add_argument("--precision", type=int, default=3, help="decimals for score ties")
    p_rank.set_defaults(func=cmd_rank)

    p_metrics = sub.add_parser("metrics", help="compute criterion scores from predictions")
    p_metrics.add_argument("--pred", required=True, help="true_label,predicted_label CSV")
    p_metrics.add_argument("--classes", required=True, help="comma-separated class labels")
    p_metrics.add_argument("--model", help="model name recorded in the report")
    p_metrics.add_argument("--out", help="output JSON path (default: stdout)")
    p_metrics.add_argument("--precision", type=int, default=3)
    p_metrics.set_defaults(func=cmd_metrics)

    p_demo = sub.add_parser("demo", help="run the text-classification pipeline on a corpus CSV")
    p_demo.add_argument("--data", required=True, help="text,label corpus CSV")
    p_demo.add_argument("--alpha", type=float, default=0.1, help="smoothing strength")
    p_demo.add_argument("--seed", type=int, default=101, help="split shuffle seed")
    p_demo.add_argument("--split", default="0.8,0.1,0.1", help="train,validation,test fractions")
    p_demo.add_argument("--ngrams", default="1,2", help="n-gram range, e.g. 1,2")
    p_demo.add_argument("--keep-punctuation", action="store_true")
    p_demo.add_argument("--prior", choices=("empirical", "balanced"), default="empirical")
    p_demo.add_argument("--out-dir", default="demo-output")
    p_demo.add_argument("--precision", type=int, default=3)
    p_demo.set_defaults(func=cmd_demo)

    p_serve = sub.add_parser("serve", help="run the elicitation HTTP service")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--state-dir", help="directory for session snapshots")
    p_serve.add_argument("--static-dir", help="directory of UI assets to serve")
    p_serve.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
