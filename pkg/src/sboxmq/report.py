"""Survey report: one delimited table plus rendered figures.

Mirrors the six-system survey (equations, monomials, dependent variables,
and both log2 resistance criteria) as survey.csv, a grouped bar chart of
the criteria, and the per-equation monomial-count distributions.
"""

from __future__ import annotations

import csv
import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .mqgen import build_system
from .raa import gamma, gamma_cp, stats

# survey column order and the dependent-variable counts each row uses
SURVEY = (("rd23", 8), ("rd16", 8), ("rd32", 8),
          ("chain-rd", 2032), ("chain-aia", 2032), ("aia32", 8))


def survey_rows(include_chain: bool = True) -> list:
    """One dict per system with counts, criteria, and raw term counts."""
    rows = []
    for key, n in SURVEY:
        if not include_chain and key.startswith("chain"):
            continue
        mq = build_system(key)
        st = stats(mq, n)
        rows.append({
            "system": key,
            "equations": st.r,
            "monomials": st.t,
            "min_terms": st.min_terms,
            "max_terms": st.max_terms,
            "dependent_variables": st.n,
            "log2_gamma": round(gamma(st), 1),
            "log2_gamma_cp": round(gamma_cp(st), 1),
            "_term_counts": mq.term_counts(),
        })
    return rows


def write_report(outdir: str, include_chain: bool = True) -> list:
    """Write survey.csv and the figures into outdir; returns written paths."""
    os.makedirs(outdir, exist_ok=True)
    rows = survey_rows(include_chain)
    written = []

    csv_path = os.path.join(outdir, "survey.csv")
    fields = ["system", "equations", "monomials", "min_terms", "max_terms",
              "dependent_variables", "log2_gamma", "log2_gamma_cp"]
    with open(csv_path, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=fields, extrasaction="ignore")
        writer.writeheader()
        writer.writerows(rows)
    written.append(csv_path)

    labels = [r["system"] for r in rows]
    xs = range(len(rows))

    fig, ax = plt.subplots(figsize=(8, 4.5))
    width = 0.38
    ax.bar([x - width / 2 for x in xs], [r["log2_gamma"] for r in rows],
           width, label=r"$\log_2 \Gamma$")
    ax.bar([x + width / 2 for x in xs], [r["log2_gamma_cp"] for r in rows],
           width, label=r"$\log_2 \Gamma_{CP}$")
    ax.set_xticks(list(xs))
    ax.set_xticklabels(labels, rotation=20)
    ax.set_ylabel("log2 of criterion")
    ax.set_title("Resistance criteria per equation system")
    ax.legend()
    fig.tight_layout()
    fig_path = os.path.join(outdir, "raa_criteria.png")
    fig.savefig(fig_path, dpi=150)
    plt.close(fig)
    written.append(fig_path)

    fig, ax = plt.subplots(figsize=(8, 4.5))
    ax.boxplot([r["_term_counts"] for r in rows], tick_labels=labels,
               whis=(0, 100))
    ax.set_yscale("log")
    ax.set_ylabel("monomials per equation")
    ax.set_title("Equation sizes per system")
    fig.tight_layout()
    fig_path = os.path.join(outdir, "equation_sizes.png")
    fig.savefig(fig_path, dpi=150)
    plt.close(fig)
    written.append(fig_path)

    return written
