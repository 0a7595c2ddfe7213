"""Matplotlib figures for bench tables and barcodes (Agg backend, files only)."""

from __future__ import annotations

import math
from collections import defaultdict

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

COLORS = {
    "standard": "#377eb8",
    "zz-ascending": "#4daf4a",
    "forward": "#e41a1c",
    "backward": "#ff7f00",
    "outward": "#984ea3",
    "inward": "#a65628",
    "compute": "#333333",
}
DIM_COLORS = ["#2166ac", "#b2182b"]

# no timestamps or version strings, so reruns give the same bytes
_META = {"Software": None}


def _save(fig, path) -> None:
    fig.savefig(path, dpi=120, metadata=_META)
    plt.close(fig)


def bench_figure(rows, path) -> None:
    """Mean ops and normalized ops against m, one line per path."""
    by_path = defaultdict(list)
    for r in rows:
        by_path[r.path].append(r)
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(10, 4))
    for name, rs in sorted(by_path.items()):
        rs.sort(key=lambda r: r.m)
        ms = [r.m for r in rs]
        c = COLORS.get(name)
        ax1.plot(ms, [max(r.mean_ops, 1e-9) for r in rs], "o-", color=c, label=name)
        ax2.plot(ms, [r.norm for r in rs], "o-", color=c, label=name)
    ax1.set_xscale("log", base=2)
    ax1.set_yscale("log")
    ax1.set_xlabel("m")
    ax1.set_ylabel("mean primitive ops")
    ax2.set_xscale("log", base=2)
    ax2.set_yscale("log")
    ax2.set_xlabel("m")
    ax2.set_ylabel("ops / growth term")
    ax2.legend(fontsize=8, frameon=False)
    fig.tight_layout()
    _save(fig, path)


def barcode_figure(intervals, m: int, path, title: str = "") -> None:
    """Horizontal bars per interval; open ends drawn hollow, infinite bars run to m."""
    ivs = sorted(intervals)
    fig, ax = plt.subplots(figsize=(7, max(2.0, 0.22 * len(ivs) + 1)))
    for y, iv in enumerate(ivs):
        c = DIM_COLORS[iv.dim % 2]
        d = m if math.isinf(iv.death) else iv.death
        ax.plot([iv.birth, d], [y, y], "-", color=c, lw=2)
        ax.plot([iv.birth], [y], "o", color=c, mfc=c if iv.btype == "c" else "white", ms=5)
        if math.isinf(iv.death):
            ax.plot([d], [y], ">", color=c, ms=5)
        else:
            ax.plot([d], [y], "o", color=c, mfc=c if iv.dtype == "c" else "white", ms=5)
    ax.set_xlim(-0.5, max(m, 1) + 0.5)
    ax.set_ylim(-1, max(len(ivs), 1))
    ax.set_yticks([])
    ax.set_xlabel("index")
    for dim, c in enumerate(DIM_COLORS):
        ax.plot([], [], "-", color=c, label=f"H{dim}")
    ax.legend(fontsize=8, frameon=False, loc="lower right")
    if title:
        ax.set_title(title)
    fig.tight_layout()
    _save(fig, path)
