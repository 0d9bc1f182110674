"""Maximum additive Hermitian rank-metric codes over F_{q^2}."""

from ._hermcodes import (
    BudgetExceeded,
    Code,
    code_from_json,
    compare_fingerprints,
    construct,
    eigenvalues,
    full_space,
    neg_q_binom,
    run_cli,
    theorem3_distribution,
)

__all__ = [
    "BudgetExceeded",
    "Code",
    "code_from_json",
    "compare_fingerprints",
    "construct",
    "eigenvalues",
    "full_space",
    "neg_q_binom",
    "run_cli",
    "theorem3_distribution",
]
