"""Binary sub-codes of second-order Reed-Muller codes."""

from ._core import (
    FieldTable,
    LinearCode,
    check_nesting,
    coset_size_formula,
    coset_weight_distribution_by_rank,
    cyclotomic_coset,
    expected_parameters,
    gcd_power_formula,
    grey_rankin_max,
    hadamard_transform,
    hamming_feasible,
    is_bent,
    is_subcode,
    orthogonal,
    plotkin_max,
    polarize,
    rank,
    rm1,
    rm2,
    same_code,
    self_complementary_optimality,
    simplex,
    subcode,
    symplectic_group,
    table1,
    verify_first_order_rm,
    weight_distribution_by_cosets,
)

__all__ = [name for name in dir() if not name.startswith("_")]
