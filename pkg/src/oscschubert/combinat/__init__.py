"""Partitions, tableaux, sign-imbalance, Schubert calculus counts, factorization counts."""

from .factorcount import admissible_derivative_root_counts, nu, predicted_real_counts
from .lr import DEFAULT_TERM_BUDGET, complex_count, lr_coefficient, lr_product
from .partitions import (
    Partition,
    SchubertProblemSpec,
    SkewShape,
    as_partition,
    complement,
    diag_length,
    hook_complement,
    hook_problem,
    is_symmetric,
    parse_problem,
    partitions_in_box,
)
from .tableaux import (
    DEFAULT_MAX_CELLS,
    Tableau,
    enumerate_tableaux,
    gaussian_binomial_at_minus_one,
    multinomial,
    permutation_sign,
    sign_imbalance,
    tableau_sign,
)

__all__ = [
    "Partition",
    "SkewShape",
    "SchubertProblemSpec",
    "Tableau",
    "as_partition",
    "complement",
    "hook_complement",
    "hook_problem",
    "is_symmetric",
    "diag_length",
    "parse_problem",
    "partitions_in_box",
    "enumerate_tableaux",
    "tableau_sign",
    "permutation_sign",
    "sign_imbalance",
    "gaussian_binomial_at_minus_one",
    "multinomial",
    "lr_product",
    "lr_coefficient",
    "complex_count",
    "nu",
    "predicted_real_counts",
    "admissible_derivative_root_counts",
    "DEFAULT_MAX_CELLS",
    "DEFAULT_TERM_BUDGET",
]
