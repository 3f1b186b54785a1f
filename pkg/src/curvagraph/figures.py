"""Figure rendering for the report path: every plot lands next to the
delimited output as a PNG file."""

from __future__ import annotations

import os
from typing import Sequence

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt


def _save(fig, outdir: str, name: str) -> str:
    os.makedirs(outdir, exist_ok=True)
    path = os.path.join(outdir, name)
    fig.savefig(path, dpi=130, bbox_inches="tight")
    plt.close(fig)
    return path


def curvature_histogram(values: Sequence[float], outdir: str,
                        name: str = "curvature_hist.png") -> str:
    fig, ax = plt.subplots(figsize=(5, 3.2))
    ax.hist(values, bins=min(40, max(5, len(set(values)))), color="#30618c")
    ax.set_xlabel("vertex curvature")
    ax.set_ylabel("count")
    ax.spines["right"].set_visible(False)
    ax.spines["top"].set_visible(False)
    return _save(fig, outdir, name)


def growth_plot(sphere_sizes: Sequence[int], factor: float, outdir: str,
                name: str = "growth.png") -> str:
    fig, ax = plt.subplots(figsize=(5, 3.2))
    ns = list(range(len(sphere_sizes)))
    ax.semilogy(ns, sphere_sizes, "o-", color="#30618c", label="|S_n|")
    lower = [max(factor * sum(sphere_sizes[:n]), 1e-3) for n in ns]
    ax.semilogy(ns, lower, "--", color="#b04a30", label="curvature bound")
    ax.set_xlabel("n")
    ax.set_ylabel("sphere size")
    ax.legend(frameon=False)
    return _save(fig, outdir, name)


def spectrum_plot(radii: Sequence[int], bottoms: Sequence[float],
                  bound: float, outdir: str,
                  name: str = "spectrum.png") -> str:
    fig, ax = plt.subplots(figsize=(5, 3.2))
    ax.plot(radii, bottoms, "o-", color="#30618c", label="Dirichlet bottom")
    ax.axhline(bound, color="#b04a30", ls="--", label="Cheeger bound")
    ax.set_xlabel("radius")
    ax.set_ylabel("smallest eigenvalue")
    ax.legend(frameon=False)
    return _save(fig, outdir, name)


def cheeger_plot(radii: Sequence[int], alphas: Sequence[float], outdir: str,
                 name: str = "cheeger.png") -> str:
    fig, ax = plt.subplots(figsize=(5, 3.2))
    ax.plot(radii, alphas, "o-", color="#30618c")
    ax.set_xlabel("radius r")
    ax.set_ylabel("alpha lower bound on U_r")
    ax.set_ylim(0, 1.05)
    return _save(fig, outdir, name)


def eigenvalue_stem(lams: Sequence[float], outdir: str,
                    name: str = "eigensearch.png") -> str:
    fig, ax = plt.subplots(figsize=(5, 2.4))
    if lams:
        ax.stem(lams, [1.0] * len(lams))
    ax.set_xlabel("eigenvalue of finitely supported eigenfunction")
    ax.set_yticks([])
    return _save(fig, outdir, name)


def degree_histogram(before: Sequence[int], after: Sequence[int],
                     outdir: str, name: str = "embedding_degrees.png") -> str:
    fig, ax = plt.subplots(figsize=(5, 3.2))
    bins = range(min(before + after), max(before + after) + 2)
    ax.hist([before, after], bins=bins, label=["original", "supergraph"],
            color=["#30618c", "#b04a30"])
    ax.set_xlabel("vertex degree")
    ax.set_ylabel("count")
    ax.legend(frameon=False)
    return _save(fig, outdir, name)
