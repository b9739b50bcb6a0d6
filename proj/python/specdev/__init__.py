"""Certified spectral irregularity bounds.

Exact-arithmetic verification of rho(G) - 2m/n <= sqrt(s(G)/2) and its
relatives: certified spectral-radius enclosures, the row-sum lemma machinery,
exhaustive and randomized corpus checks, blow-up scaling and the star
tightness sweep.  Rationals are lowest-terms "p/q" strings.
"""

from ._specdev import (
    BlowupRow,
    BoundReport,
    CaseDecomposition,
    CorpusSummary,
    DegreeStats,
    Graph,
    Graph6Error,
    RowSumCheck,
    ShiftBoundResult,
    SpectralInterval,
    StarSweepRow,
    Violation,
    blow_up,
    blowup_demo,
    case_decomposition,
    certified_interval,
    circulant,
    complete,
    complete_bipartite,
    components,
    cycle,
    degree_stats,
    evaluate_bounds,
    exhaustive_check,
    gnp,
    half_deviation_identity_holds,
    lemma1_check,
    optimized_shift_bound,
    path,
    poly_row_sums,
    random_corpus_check,
    rowsum_check,
    star,
    star_gap_ratio,
    star_sweep,
)

__all__ = [
    "BlowupRow",
    "BoundReport",
    "CaseDecomposition",
    "CorpusSummary",
    "DegreeStats",
    "Graph",
    "Graph6Error",
    "RowSumCheck",
    "ShiftBoundResult",
    "SpectralInterval",
    "StarSweepRow",
    "Violation",
    "blow_up",
    "blowup_demo",
    "case_decomposition",
    "certified_interval",
    "circulant",
    "complete",
    "complete_bipartite",
    "components",
    "cycle",
    "degree_stats",
    "evaluate_bounds",
    "exhaustive_check",
    "gnp",
    "half_deviation_identity_holds",
    "lemma1_check",
    "optimized_shift_bound",
    "path",
    "poly_row_sums",
    "random_corpus_check",
    "rowsum_check",
    "star",
    "star_gap_ratio",
    "star_sweep",
]
