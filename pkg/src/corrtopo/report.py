"""File emitters for sweep results: CSV, binary PGM, JSON and rendered figures.

Output is byte-deterministic: floats are written with 12 significant digits
(%.12g), rows are emitted in row-major grid order, CSV uses LF line endings
and UTF-8, PGM is binary P5 with maxval 255 (0 = separable/black,
255 = maximally entangled/white).
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .topo import AlternationReport, ConcurrenceField, LatticeSite, ZeroLocus


def fmt(x: float) -> str:
    return "%.12g" % float(x)


def jnum(x: float) -> float:
    """Round to 12 significant digits for stable JSON emission."""
    return float(fmt(x))


def jamps(state: np.ndarray) -> list[list[float]]:
    """Serialize complex amplitudes as [re, im] pairs."""
    return [[jnum(z.real), jnum(z.imag)] for z in np.asarray(state, dtype=complex)]


def write_field_csv(path: str | Path, field: ConcurrenceField) -> None:
    eta = field.grid.eta_axis()
    kap = field.grid.kappa_axis()
    lines = ["eta,kappa,concurrence,vbar"]
    for i in range(field.grid.n_eta):
        for j in range(field.grid.n_kappa):
            lines.append(
                f"{fmt(eta[i])},{fmt(kap[j])},{fmt(field.values[i, j])},{fmt(field.vbar[i, j])}"
            )
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def write_pgm(path: str | Path, field: ConcurrenceField) -> None:
    """8-bit binary PGM of the concurrence; row i is eta_axis[i], column j is
    kappa_axis[j], pixel value round(255 * concurrence)."""
    pixels = np.rint(255.0 * field.values).astype(np.uint8)
    header = f"P5\n{field.grid.n_kappa} {field.grid.n_eta}\n255\n".encode("ascii")
    Path(path).write_bytes(header + pixels.tobytes())


def write_loci_csv(path: str | Path, loci: list[ZeroLocus], points_per_locus: int = 201) -> None:
    lines = ["locus,point,eta,kappa"]
    for locus in loci:
        for idx, (eta, kap) in enumerate(locus.points(points_per_locus)):
            lines.append(f"{locus.name},{idx},{fmt(eta)},{fmt(kap)}")
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def write_sites_csv(path: str | Path, sites_by_locus: dict[str, list[LatticeSite]]) -> None:
    lines = ["locus,kind,eta,kappa,concurrence"]
    for name, sites in sites_by_locus.items():
        for s in sites:
            lines.append(f"{name},{s.kind},{fmt(s.eta)},{fmt(s.kappa)},{fmt(s.concurrence)}")
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def write_alternation_json(path: str | Path, reports: dict[str, AlternationReport]) -> None:
    doc = {
        name: {
            "passed": r.passed,
            "vacuous": r.vacuous,
            "reason": r.reason,
            "n_separable": r.n_separable,
            "n_max_entangled": r.n_max,
        }
        for name, r in reports.items()
    }
    Path(path).write_text(json.dumps(doc, indent=2) + "\n", encoding="utf-8")


def dumps_json(obj) -> str:
    return json.dumps(obj, indent=2)


def dumps_json_line(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def render_field_figure(
    path: str | Path,
    field: ConcurrenceField,
    loci: list[ZeroLocus] | None = None,
    sites_by_locus: dict[str, list[LatticeSite]] | None = None,
    n_contours: int = 7,
) -> None:
    """Render the swept field to an image file.

    Greyscale concurrence map (black separable, white maximal), solid black
    contour lines of the initial potential expectation, dashed lines on the
    zero-expectation loci, and blue/red dots for separable/maximal lattice
    sites. eta runs along x, kappa along y.
    """
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    g = field.grid
    fig, ax = plt.subplots(figsize=(6.6, 5.4))
    im = ax.imshow(
        field.values.T,
        origin="lower",
        extent=(g.eta_min, g.eta_max, g.kappa_min, g.kappa_max),
        cmap="gray",
        vmin=0.0,
        vmax=1.0,
        aspect="auto",
    )
    fig.colorbar(im, ax=ax, label="concurrence")

    lo, hi = float(field.vbar.min()), float(field.vbar.max())
    if hi > lo:
        levels = [lev for lev in np.linspace(lo, hi, n_contours) if abs(lev) > 1e-12]
        if levels:
            ax.contour(
                g.eta_axis(),
                g.kappa_axis(),
                field.vbar.T,
                levels=sorted(levels),
                colors="black",
                linewidths=0.6,
            )

    for locus in loci or []:
        pts = locus.points(2)
        ax.plot(pts[:, 0], pts[:, 1], "k--", linewidth=1.2)

    for sites in (sites_by_locus or {}).values():
        for s in sites:
            color = "tab:blue" if s.kind == "separable" else "tab:red"
            ax.plot(s.eta, s.kappa, "o", color=color, markersize=5)

    ax.set_xlabel(r"$\eta$")
    ax.set_ylabel(r"$\kappa$")
    ax.set_title(f"{field.family}, x = {field.x:.6g}")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_trajectory_figure(path: str | Path, samples: list[dict]) -> None:
    """Concurrence and potential expectation along an evolution trajectory."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    t = [s["t"] for s in samples]
    fig, (ax1, ax2) = plt.subplots(2, 1, figsize=(6.4, 5.6), sharex=True)
    ax1.plot(t, [s["concurrence"] for s in samples], "-o", markersize=3)
    ax1.set_ylabel("concurrence")
    ax1.set_ylim(-0.05, 1.05)
    ax2.plot(t, [s["expectation"] for s in samples], "-o", markersize=3, color="tab:orange")
    ax2.set_ylabel("Tr(V rho)")
    ax2.set_xlabel("t")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
