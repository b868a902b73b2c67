"""Summary figure for an analysis: lattice profile, monodromy exponents, resonance dimensions."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.patches import Patch  # noqa: E402
from matplotlib.ticker import MaxNLocator  # noqa: E402

from .milnor import Provenance  # noqa: E402
from .pipeline import Analysis  # noqa: E402

_COLORS = {
    Provenance.CERTIFIED_BETA: "#2b6cb0",
    Provenance.FAMILY_TABLE: "#dd8452",
    Provenance.UNKNOWN: "#bbbbbb",
}


def _slug(name: str) -> str:
    return "".join(ch if ch.isalnum() else "_" for ch in name).strip("_") or "arrangement"


def render_summary(a: Analysis, outdir: str | Path, dpi: int = 120) -> Path:
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    fig, axes = plt.subplots(1, 3, figsize=(12, 3.6))

    ax = axes[0]
    prof = sorted(a.incidence.profile.items())
    ax.bar([str(q) for q, _ in prof], [c for _, c in prof], color="#4c72b0")
    ax.set_xlabel("multiplicity $q_X$")
    ax.set_ylabel("flats")
    ax.set_title("rank-2 flats")

    ax = axes[1]
    entries = a.milnor.entries
    if entries:
        xs = [str(e.j) for e in entries]
        hs = [e.exponent if e.known else 0 for e in entries]
        bars = ax.bar(xs, hs, color=[_COLORS[e.provenance] for e in entries])
        for bar, e in zip(bars, entries):
            if not e.known:
                ax.annotate("?", (bar.get_x() + bar.get_width() / 2, 0), ha="center", va="bottom")
        used = dict.fromkeys(e.provenance for e in entries)
        ax.legend(handles=[Patch(color=_COLORS[p], label=p.value.lower()) for p in used], fontsize=8)
    else:
        ax.text(0.5, 0.5, "n = 1", ha="center", va="center", transform=ax.transAxes)
    ax.set_xlabel("$j$")
    ax.set_ylabel("$e_j$")
    ax.set_title(f"monodromy exponents, $b_1(F)$ = {a.milnor.b1F if a.milnor.complete else '?'}")

    ax = axes[2]
    dims: dict[tuple[str, int], int] = {}
    for c in a.components:
        key = (c.kind.value.lower(), c.dimension)
        dims[key] = dims.get(key, 0) + 1
    if dims:
        keys = sorted(dims)
        ax.bar([f"{k} d={d}" for k, d in keys], [dims[k] for k in keys], color="#55a868")
        ax.tick_params(axis="x", labelrotation=20)
    ax.set_ylabel("components")
    ax.set_title("resonance components")

    for ax in axes:
        ax.yaxis.set_major_locator(MaxNLocator(integer=True))
    fig.suptitle(f"{a.name}: {a.verdict.status.value}")
    fig.tight_layout()
    path = outdir / f"{_slug(a.name)}_summary.png"
    fig.savefig(path, dpi=dpi)
    plt.close(fig)
    return path
