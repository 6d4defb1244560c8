"""Figure rendering for the report commands (matplotlib, file output only)."""
from __future__ import annotations


def _plt():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def save_counts_plot(reports, path: str) -> None:
    """Rotation and class counts per coincidence index, as a stem chart."""
    plt = _plt()
    sigmas = [c.sigma for c in reports]
    fig, (ax1, ax2) = plt.subplots(2, 1, figsize=(8, 6), sharex=True)
    ax1.vlines(sigmas, 0, [c.f for c in reports], color="tab:blue", lw=2)
    ax1.plot(sigmas, [c.f for c in reports], "o", color="tab:blue", ms=3)
    ax1.set_ylabel("CSLs per index f")
    ax2.vlines(sigmas, 0, [c.f_ineq for c in reports], color="tab:red", lw=2)
    ax2.plot(sigmas, [c.f_ineq for c in reports], "o", color="tab:red", ms=3)
    ax2.set_ylabel("classes f_ineq")
    ax2.set_xlabel("coincidence index (Sigma)")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_table_plot(rows, kinds, path: str) -> None:
    """Histogram of Bravais symbols per lattice kind over the table rows."""
    plt = _plt()
    symbols = sorted({row.reports[k].symbol for row in rows for k in kinds})
    fig, ax = plt.subplots(figsize=(8, 4.5))
    width = 0.8 / len(kinds)
    for i, kind in enumerate(kinds):
        tally = {s: 0 for s in symbols}
        for row in rows:
            tally[row.reports[kind].symbol] += len(row.reps)
        xs = [j + i * width for j in range(len(symbols))]
        ax.bar(xs, [tally[s] for s in symbols], width=width, label=kind)
    ax.set_xticks([j + width * (len(kinds) - 1) / 2 for j in range(len(symbols))])
    ax.set_xticklabels(symbols)
    ax.set_ylabel("classes")
    ax.set_xlabel("Bravais class of the CSL")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
