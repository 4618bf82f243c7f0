"""Benchmark figures, rendered off-screen."""

from __future__ import annotations

import math
from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402


def scaling_figure(sizes: Sequence[int], millis: Sequence[float], path: str) -> None:
    """Log-log plot of sort time against n, with an ``n log^2 n`` guide.

    The guide is anchored at the smallest measured size so only the slopes
    are compared.
    """
    fig, ax = plt.subplots(figsize=(5.0, 3.6))
    ax.loglog(sizes, millis, "o-", color="C0", label="measured")
    if sizes:
        n0, t0 = sizes[0], millis[0]
        ref = [t0 * (n * math.log2(n) ** 2) / (n0 * math.log2(max(n0, 2)) ** 2)
               for n in sizes]
        ax.loglog(sizes, ref, "--", color="0.5", label=r"$n \log^2 n$ guide")
    ax.set_xlabel("n")
    ax.set_ylabel("sort time (ms)")
    ax.grid(True, which="both", alpha=0.3)
    ax.legend(frameon=False)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
