"""Figures written next to the textual reports."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def _slug(name: str) -> str:
    return "".join(c if c.isalnum() or c in "-_" else "_" for c in name).strip("_") or "algebra"


def plot_series(series_dims: dict, algebra: str, out_dir) -> Path:
    """Dimensions of the derived, lower and upper central series against the step."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    fig, ax = plt.subplots(figsize=(5, 3.5))
    markers = {"derived": "s", "lower": "o", "upper": "^"}
    for kind, dims in series_dims.items():
        ax.plot(range(len(dims)), dims, marker=markers.get(kind, "o"), label=kind)
    ax.set_xlabel("step")
    ax.set_ylabel("dimension")
    ax.set_title(f"{algebra}: characteristic series")
    ax.legend()
    ax.grid(alpha=0.3)
    path = out / f"{_slug(algebra)}_series.png"
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def plot_flag(flag: dict, algebra: str, out_dir) -> Path:
    """Staircase of the characteristic flag; gaps in dimension show as taller steps."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    chain = flag["chain"]
    dims = [c["dim"] for c in chain]
    fig, ax = plt.subplots(figsize=(5, 3.5))
    ax.step(range(len(dims)), dims, where="mid", color="tab:blue")
    ax.scatter(range(len(dims)), dims, color="tab:blue", zorder=3)
    for i, c in enumerate(chain):
        ax.annotate(c["recipe"], (i, c["dim"]), textcoords="offset points", xytext=(4, 4), fontsize=8)
    ax.set_xlabel("position in chain")
    ax.set_ylabel("dimension")
    state = "complete" if flag["complete"] else "incomplete"
    ax.set_title(f"{algebra}: {state} characteristic flag")
    ax.grid(alpha=0.3)
    path = out / f"{_slug(algebra)}_flag.png"
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
