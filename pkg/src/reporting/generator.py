"""Report assembly: JSON documents, the text report, scatter points and plots."""

from __future__ import annotations

from typing import Any, Mapping

from loguru import logger

from src.analytics.evaluation.models import CvReport
from src.errors import ModelFormatError
from src.reporting.models import EdaReport, EvalReport
from src.reporting.renderers import render_text
from src.utils.chart_factory import box_plot, cv_scatter, figure_html

REPORT_TEMPLATE = "report.txt.j2"


def report_document(report: EvalReport) -> dict[str, Any]:
    return report.to_dict()


def render_report(report: EvalReport | Mapping[str, Any]) -> str:
    """Human-readable version of an evaluation report, models in report order."""
    payload = report.to_dict() if isinstance(report, EvalReport) else dict(report)
    logger.debug("Rendering text report for {} models", len(payload["models"]))
    return render_text(REPORT_TEMPLATE, payload)


def emit_scatter(cv_reports: Mapping[str, CvReport]) -> dict[str, Any]:
    """Per-fold (r2, rmse) points, labeled by model and fold, sorted by (model, fold)."""
    points = [
        {
            "model": model,
            "fold": fold.index,
            "size": fold.size,
            "r2": fold.r2,
            "rmse": fold.rmse,
            "tss": fold.tss,
        }
        for model, cv in cv_reports.items()
        for fold in cv.fold_scores
    ]
    points.sort(key=lambda p: (p["model"], p["fold"]))
    return {"points": points}


def cv_reports_from_document(payload: Mapping[str, Any]) -> dict[str, CvReport]:
    """Recover each model's CvReport from a saved report document."""
    try:
        return {m["kind"]: CvReport.from_dict(m["cv"]) for m in payload["models"]}
    except (KeyError, TypeError) as e:
        raise ModelFormatError(f"not an evaluation report: {e}") from e


def scatter_html(scatter: Mapping[str, Any]) -> str:
    fig = cv_scatter(scatter["points"], title="Cross-validation folds: R² against RMSE")
    return figure_html(fig, div_id="cv_scatter")


def eda_plots(report: EdaReport) -> dict[str, str]:
    """One HTML box plot per (stage, group column), keyed by file stem."""
    plots = {}
    for stage, by_col in report.boxes.items():
        for col, summaries in by_col.items():
            stem = f"box_charges_by_{col}_{stage}"
            fig = box_plot(summaries, title=f"Charges by {col} ({stage.replace('_', ' ')})", y_title="charges (USD)")
            plots[stem] = figure_html(fig, div_id=stem)
    return plots
