"""Figure rendering for the report path.

Everything draws through the Agg backend into files; no interactive
windows.  Figures take plain dict/census inputs so the CLI can feed them
straight from report bodies.
"""

from __future__ import annotations

import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  backend must be pinned first


def _bar(ax, labels, values, xlabel, ylabel):
    ax.bar(range(len(values)), values, color="#4878a8", edgecolor="black",
           linewidth=0.5)
    ax.set_xticks(range(len(values)))
    ax.set_xticklabels([str(x) for x in labels])
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    ax.grid(axis="y", alpha=0.3)


def secant_histogram_figure(histogram: dict, path: str, ell: int):
    """Line size classes against line counts, log scale on the counts."""
    sizes = sorted(int(k) for k in histogram)
    counts = [int(histogram[s] if s in histogram else histogram[str(s)])
              for s in sizes]
    fig, ax = plt.subplots(figsize=(6, 4))
    _bar(ax, sizes, counts, "curve points on line", "number of lines")
    ax.set_yscale("log")
    ax.set_title(f"Secant census, l = {ell}")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def plane_incidence_figure(histogram: dict, path: str, ell: int):
    sizes = sorted(int(k) for k in histogram)
    counts = [int(histogram[s] if s in histogram else histogram[str(s)])
              for s in sizes]
    fig, ax = plt.subplots(figsize=(6, 4))
    _bar(ax, sizes, counts, "curve points on plane", "number of planes")
    ax.set_yscale("log")
    ax.set_title(f"Plane sections, l = {ell}")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def weight_counts_figure(counts: dict, path: str, title: str):
    """Codeword counts by weight; zero rows are kept to show gaps."""
    ws = sorted(int(k) for k in counts)
    vals = [int(counts[w] if w in counts else counts[str(w)]) for w in ws]
    fig, ax = plt.subplots(figsize=(6, 4))
    _bar(ax, ws, vals, "weight", "codewords")
    if any(vals):
        ax.set_yscale("symlog")
    ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def orbit_figure(o1: int, o2: int, path: str, ell: int):
    fig, ax = plt.subplots(figsize=(4.5, 4))
    _bar(ax, ["O1", "O2"], [o1, o2], "orbit", "points")
    ax.set_title(f"Point orbits, l = {ell}")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def render_for(kind: str, body: dict, outdir: str, ell: int) -> list:
    """Figures appropriate to a report kind; returns written paths."""
    os.makedirs(outdir, exist_ok=True)
    paths = []
    if kind == "curve-census":
        paths.append(orbit_figure(int(body["o1"]), int(body["o2"]),
                                  os.path.join(outdir, f"orbits_l{ell}.png"),
                                  ell))
    elif kind == "secant-census":
        paths.append(secant_histogram_figure(
            body["histogram"], os.path.join(outdir, f"secants_l{ell}.png"),
            ell))
    elif kind == "conic-census":
        if "plane_histogram" in body:
            paths.append(plane_incidence_figure(
                body["plane_histogram"],
                os.path.join(outdir, f"planes_l{ell}.png"), ell))
    elif kind in ("weight-search", "weight-brute"):
        counts = body.get("counts", {})
        if counts:
            paths.append(weight_counts_figure(
                counts, os.path.join(outdir, f"weights_l{ell}.png"),
                f"Low-weight census, l = {ell}"))
    return paths
