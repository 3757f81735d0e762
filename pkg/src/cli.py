"""Command-line entry point: ``regress-bench <eda|run|train|predict|scatter>``.

Exit codes: 0 success, 1 usage error, 2 input/data error, 3 computation error.
Each command computes all of its outputs before writing any of them.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Callable, Optional, Sequence

import pandas as pd
from loguru import logger

from src.analytics.regressors.persistence import model_document
from src.analytics.regressors.registry import MODEL_KINDS
from src.config.loader import load_pipeline_config, load_settings
from src.config.logging import setup_logging
from src.config.models import PipelineConfig
from src.data.ingest import read_dataset
from src.errors import ModelFormatError, RegressBenchError, UsageError
from src.pipeline import predict_records, run_eda, run_experiment, train_model
from src.reporting.generator import (
    cv_reports_from_document,
    eda_plots,
    emit_scatter,
    render_report,
    report_document,
    scatter_html,
)
from src.utils.io import atomic_write_text, dumps_json

Outputs = dict[Path, str]


class _ArgumentParser(argparse.ArgumentParser):
    """argparse exits with status 2 on bad usage; usage errors here are exit 1."""

    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message)


def _common_options() -> argparse.ArgumentParser:
    common = _ArgumentParser(add_help=False)
    common.add_argument("--input", help="insurance CSV (records CSV for predict)")
    common.add_argument("--config", help="flat YAML file of pipeline settings")
    common.add_argument("--seed", type=int, help="split and fold seed (default: REGRESS_BENCH_SEED or 42)")
    common.add_argument("--k", type=int, help="number of cross-validation folds")
    common.add_argument("--threshold", type=float, help="drop rows with charges above this value")
    common.add_argument("--ratio", type=float, help="training share of the train/test split")
    common.add_argument("--cv-scope", choices=["filtered_full", "train_only"], help="rows used for cross-validation")
    common.add_argument("--out", help="output directory")
    common.add_argument("--plots", action="store_true", help="also write plotly HTML plots")
    common.add_argument("--log-level", type=str.upper, choices=["TRACE", "DEBUG", "INFO", "WARNING", "ERROR"],
                        help="override the configured log level")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = _ArgumentParser(prog="regress-bench", description="Insurance-cost regression benchmark")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    sub.add_parser("eda", parents=[common], help="box-plot summaries before and after filtering")
    sub.add_parser("run", parents=[common], help="fit all models, score on the test split and by k-fold CV")

    train = sub.add_parser("train", parents=[common], help="fit one model and save it")
    train.add_argument("--model", required=True, choices=MODEL_KINDS)
    train.add_argument("--model-file", help="destination (default: <out>/model_<kind>.json)")

    predict = sub.add_parser("predict", parents=[common], help="predict charges for a records CSV")
    predict.add_argument("--model-file", required=True)

    scatter = sub.add_parser("scatter", parents=[common], help="per-fold (r2, rmse) points from a saved report")
    scatter.add_argument("--report", help="report JSON (default: <out>/report.json)")
    return parser


def _config(args: argparse.Namespace) -> PipelineConfig:
    return load_pipeline_config(
        args.config,
        overrides={
            "input_path": args.input,
            "seed": args.seed,
            "k": args.k,
            "outlier_threshold": args.threshold,
            "split_ratio": args.ratio,
            "cv_scope": args.cv_scope,
            "output_dir": args.out,
        },
    )


# --- Commands ---

def cmd_eda(args: argparse.Namespace, config: PipelineConfig) -> Outputs:
    report = run_eda(config)
    out = Path(config.output_dir)
    outputs = {
        out / "eda_summary.json": dumps_json(report.summary_to_dict()),
        **{out / f"boxes_{stage}.json": dumps_json(report.boxes_to_dict(stage)) for stage in report.boxes},
    }
    if args.plots:
        outputs.update({out / f"{stem}.html": html for stem, html in eda_plots(report).items()})
    return outputs


def cmd_run(args: argparse.Namespace, config: PipelineConfig) -> Outputs:
    report = run_experiment(config)
    out = Path(config.output_dir)
    outputs = {
        out / "report.json": dumps_json(report_document(report)),
        out / "report.txt": render_report(report),
    }
    if args.plots:
        scatter = emit_scatter({m.kind: m.cv for m in report.models})
        outputs[out / "cv_scatter.html"] = scatter_html(scatter)
    return outputs


def cmd_train(args: argparse.Namespace, config: PipelineConfig) -> Outputs:
    trained = train_model(config, args.model)
    path = Path(args.model_file) if args.model_file else Path(config.output_dir) / f"model_{args.model}.json"
    return {path: dumps_json(model_document(trained.model, trained.scaler))}


def cmd_predict(args: argparse.Namespace, config: PipelineConfig) -> Outputs:
    if not config.input_path:
        raise UsageError("predict needs --input with the records to score")
    records = read_dataset(config.input_path, with_target=False)
    predictions = predict_records(args.model_file, records)
    frame = pd.DataFrame({"predicted_charges": predictions})
    logger.info("Predicted {} records", len(frame))
    return {Path(config.output_dir) / "predictions.csv": frame.to_csv(index=False, lineterminator="\n")}


def cmd_scatter(args: argparse.Namespace, config: PipelineConfig) -> Outputs:
    out = Path(config.output_dir)
    report_path = Path(args.report) if args.report else out / "report.json"
    try:
        payload = json.loads(report_path.read_text())
    except json.JSONDecodeError as e:
        raise ModelFormatError(f"{report_path} is not valid JSON: {e}") from e
    scatter = emit_scatter(cv_reports_from_document(payload))
    outputs = {out / "scatter.json": dumps_json(scatter)}
    if args.plots:
        outputs[out / "cv_scatter.html"] = scatter_html(scatter)
    return outputs


COMMANDS: dict[str, Callable[[argparse.Namespace, PipelineConfig], Outputs]] = {
    "eda": cmd_eda,
    "run": cmd_run,
    "train": cmd_train,
    "predict": cmd_predict,
    "scatter": cmd_scatter,
}


def _write(outputs: Outputs) -> None:
    for path, text in outputs.items():
        atomic_write_text(path, text)
        logger.info("Wrote {}", path)


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        setup_logging(load_settings().logging, level=args.log_level)
        config = _config(args)
        _write(COMMANDS[args.command](args, config))
    except SystemExit as e:  # --help
        return int(e.code or 0)
    except RegressBenchError as e:
        logger.error("{}: {}", type(e).__name__, e)
        return e.exit_code
    except OSError as e:
        logger.error("I/O error: {}", e)
        return 2
    except Exception:
        logger.exception("Unexpected failure")
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
