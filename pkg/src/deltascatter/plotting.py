"""Figure rendering for sweep, wavefunction, and resonance output.

Figures are written straight to files (Agg backend, no display) so the CLI
can drop a PNG next to each CSV it writes.  The CSV stays the data contract;
these plots are a convenience for eyeballing results.
"""

from __future__ import annotations

from collections.abc import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

__all__ = ["plot_sweep", "plot_wavefunction", "plot_resonance_scan"]

_PARAM_LABELS = {
    "dtilde": r"gap $\tilde{d}$",
    "xi": r"strength $\xi$",
    "k": r"wavenumber $k$",
}


def _param_label(param: str) -> str:
    return _PARAM_LABELS.get(param, param)


def plot_sweep(records, path, param: str = "dtilde", title: str | None = None) -> None:
    """T and R against the swept parameter."""
    values = [rec.param for rec in records]
    fig, ax = plt.subplots(figsize=(7.0, 4.2))
    ax.plot(values, [rec.T for rec in records], label="T", color="tab:blue")
    ax.plot(values, [rec.R for rec in records], label="R", color="tab:red", ls="--")
    ax.set_xlabel(_param_label(param))
    ax.set_ylabel("probability")
    ax.set_ylim(-0.02, 1.02)
    ax.legend(frameon=False)
    if title:
        ax.set_title(title)
    ax.grid(alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=160)
    plt.close(fig)


def plot_wavefunction(samples, sites: Sequence[float], path, title: str | None = None) -> None:
    """Probability density |psi|^2 with the site positions marked."""
    ys = [s.y for s in samples]
    fig, ax = plt.subplots(figsize=(7.0, 4.2))
    ax.plot(ys, [s.density for s in samples], color="tab:blue", label=r"$|\psi|^2$")
    for i, site in enumerate(sites):
        ax.axvline(site, color="0.6", lw=0.8, ls=":", label="sites" if i == 0 else None)
    ax.set_xlabel("y")
    ax.set_ylabel("density")
    ax.legend(frameon=False)
    if title:
        ax.set_title(title)
    ax.grid(alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=160)
    plt.close(fig)


def plot_resonance_scan(values, residuals, hits, path, param: str = "xi") -> None:
    """Reflection probability on a log scale with resonance hits marked."""
    values = np.asarray(values, dtype=float)
    residuals = np.asarray(residuals, dtype=float)
    fig, ax = plt.subplots(figsize=(7.0, 4.2))
    positive = residuals > 0
    ax.semilogy(values[positive], residuals[positive], color="tab:blue", label=r"$|r|^2$")
    for i, hit in enumerate(hits):
        ax.axvline(hit.param, color="tab:red", lw=0.9, ls="--",
                   label="resonance" if i == 0 else None)
    ax.set_xlabel(_param_label(param))
    ax.set_ylabel("reflection probability")
    ax.legend(frameon=False)
    ax.grid(alpha=0.3, which="both")
    fig.tight_layout()
    fig.savefig(path, dpi=160)
    plt.close(fig)
