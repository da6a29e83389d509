"""Exact graphs of cyclic modules over trivial extension algebras F_p x| F_p^n."""

from ._core import (
    Algebra,
    BudgetExceeded,
    Graph,
    Ideal,
    Module,
    NotDecompositionIdealError,
    NotFundamentalError,
    TowerLevel,
    cdim,
    direct_sum,
    fcdim,
    free_module,
    gamma,
    gamma_full,
    goldie_dim,
    in_decomposition_domain,
    is_admissible,
    is_fundamental,
    ks_length,
    module_from_json,
    presentation,
    search_csv,
    sigma_tilde,
    socle_collapse,
    tower_level,
    truncation_purity,
    verify_thm31_text,
)

__all__ = [
    "Algebra",
    "BudgetExceeded",
    "Graph",
    "Ideal",
    "Module",
    "NotDecompositionIdealError",
    "NotFundamentalError",
    "TowerLevel",
    "cdim",
    "direct_sum",
    "fcdim",
    "free_module",
    "gamma",
    "gamma_full",
    "goldie_dim",
    "in_decomposition_domain",
    "is_admissible",
    "is_fundamental",
    "ks_length",
    "module_from_json",
    "presentation",
    "search_csv",
    "sigma_tilde",
    "socle_collapse",
    "tower_level",
    "truncation_purity",
    "verify_thm31_text",
]
