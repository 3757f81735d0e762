"""Plotly chart builder with consistent theme."""

from __future__ import annotations

from typing import Mapping

import plotly.graph_objects as go

from src.analytics.models import BoxPlotSummary

COLORS = {
    "primary": "#4F46E5",
    "danger": "#EF4444",
}

PALETTE = ["#4F46E5", "#06B6D4", "#10B981", "#F59E0B", "#EF4444", "#8B5CF6", "#EC4899", "#64748B"]

_LAYOUT_DEFAULTS = dict(
    font=dict(family="Inter, sans-serif", size=12, color="#1E293B"),
    plot_bgcolor="white",
    paper_bgcolor="white",
    margin=dict(l=40, r=20, t=40, b=40),
    legend=dict(orientation="h", yanchor="bottom", y=1.02, xanchor="right", x=1),
    colorway=PALETTE,
)


def apply_theme(fig: go.Figure) -> go.Figure:
    """Apply standard theme to a Plotly figure."""
    fig.update_layout(**_LAYOUT_DEFAULTS)
    fig.update_xaxes(showgrid=False, showline=True, linewidth=1, linecolor="#E2E8F0")
    fig.update_yaxes(showgrid=True, gridwidth=1, gridcolor="#F1F5F9", showline=False)
    return fig


def box_plot(summaries: Mapping[str, BoxPlotSummary], title: str = "", y_title: str = "") -> go.Figure:
    """Box plot drawn from precomputed summaries, outliers as a separate marker trace."""
    groups = list(summaries)
    boxes = [summaries[g] for g in groups]
    fig = go.Figure(go.Box(
        x=groups,
        q1=[b.q1 for b in boxes],
        median=[b.median for b in boxes],
        q3=[b.q3 for b in boxes],
        lowerfence=[b.whisker_low for b in boxes],
        upperfence=[b.whisker_high for b in boxes],
        name="charges",
        marker_color=COLORS["primary"],
    ))
    out_x = [g for g, b in zip(groups, boxes) for _ in b.outliers]
    out_y = [v for b in boxes for v in b.outliers]
    if out_y:
        fig.add_trace(go.Scatter(
            x=out_x, y=out_y, mode="markers", name="outliers",
            marker=dict(color=COLORS["danger"], size=4),
        ))
    fig.update_layout(title=title, yaxis_title=y_title, showlegend=False)
    return apply_theme(fig)


def cv_scatter(points: list[dict], title: str = "") -> go.Figure:
    """Per-fold (RMSE, R²) points, one trace per model."""
    fig = go.Figure()
    for model in dict.fromkeys(p["model"] for p in points):
        own = [p for p in points if p["model"] == model and p["r2"] is not None]
        fig.add_trace(go.Scatter(
            x=[p["rmse"] for p in own],
            y=[p["r2"] for p in own],
            mode="markers",
            name=model,
            text=[f"fold {p['fold']}" for p in own],
        ))
    fig.update_layout(title=title, xaxis_title="RMSE (USD)", yaxis_title="R²")
    return apply_theme(fig)


def figure_html(fig: go.Figure, div_id: str) -> str:
    """Standalone HTML; a fixed div id keeps the output byte-stable."""
    return fig.to_html(include_plotlyjs="cdn", full_html=True, div_id=div_id)
