"""Render a diagram to an image file."""

from __future__ import annotations

import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .diagram import Diagram  # noqa: E402
from .io import plot_coordinates  # noqa: E402

_STYLE = {
    "U": ("tab:blue", "o"),
    "D": ("tab:orange", "s"),
    "L": ("tab:green", "^"),
    "R": ("tab:red", "v"),
    "B": ("black", "*"),
}


def render_diagram(D: Diagram, path: str | Path, title: str | None = None) -> Path:
    """Scatter each class with its own marker; infinite coordinates are drawn
    on a frame just outside the finite range, and B sits in the top-left corner."""
    coords = [(I.kind, *plot_coordinates(I), k) for I, k in D.items()]
    finite = [v for _, s, t, _ in coords for v in (s, t) if math.isfinite(v)]
    lo, hi = (min(finite), max(finite)) if finite else (0.0, 1.0)
    pad = max(hi - lo, 1.0) * 0.15
    low_edge, high_edge = lo - pad, hi + pad

    def place(v):
        if v == math.inf:
            return high_edge
        if v == -math.inf:
            return low_edge
        return v

    fig, ax = plt.subplots(figsize=(5, 5))
    for kind, (color, marker) in _STYLE.items():
        pts = [(place(s), place(t), k) for c, s, t, k in coords if c == kind]
        if not pts:
            continue
        xs, ys, ks = zip(*pts)
        ax.scatter(xs, ys, c=color, marker=marker, s=[40 * k for k in ks], label=kind, zorder=3)
        for x, y, k in pts:
            if k > 1:
                ax.annotate(f"x{k}", (x, y), textcoords="offset points", xytext=(5, 5), fontsize=8)
    ax.plot([low_edge, high_edge], [low_edge, high_edge], color="grey", lw=0.8, zorder=1)
    for edge in (low_edge, high_edge):
        ax.axhline(edge, color="grey", ls=":", lw=0.8)
        ax.axvline(edge, color="grey", ls=":", lw=0.8)
    margin = pad * 0.3
    ax.set_xlim(low_edge - margin, high_edge + margin)
    ax.set_ylim(low_edge - margin, high_edge + margin)
    ax.set_xlabel("s")
    ax.set_ylabel("t")
    if title:
        ax.set_title(title)
    if coords:
        ax.legend(loc="upper left", bbox_to_anchor=(1.02, 1.0), fontsize=8)
    path = Path(path)
    fig.savefig(path, dpi=100, bbox_inches="tight")
    plt.close(fig)
    return path
