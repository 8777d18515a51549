"""Render sweep curves to PNG files next to their CSV output."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt


def _short_label(label: str) -> str:
    # drop the leading quantity tag, keep the parameter tuple
    parts = label.split("|")
    return " ".join(parts[1:]) if len(parts) > 1 else label


def render_curves(x_values, labels, columns, path: Path, *,
                  xlabel: str = "t", ylabel: str = "", title: str = "") -> Path:
    """Plot one line per column and save to path."""
    fig, ax = plt.subplots(figsize=(7.2, 4.5))
    for label, col in zip(labels, columns):
        ax.plot(x_values, col, lw=1.4, label=_short_label(label))
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    if title:
        ax.set_title(title, fontsize=9)
    ax.grid(alpha=0.3)
    ax.legend(fontsize=7, ncol=2)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return Path(path)
