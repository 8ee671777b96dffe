"""The Frobenius twist of graded algebras and Hopf algebras over F_p."""

from fcq.twist.algebra import (
    SuperAlgebra,
    SuperHopf,
    change_basis,
    exterior,
    exterior_hopf,
    ground_field,
    group_algebra_cyclic,
    product_algebra,
    random_graded_automorphism,
    random_super_algebra,
    square_zero,
    truncated_polynomial,
    upper_triangular,
)
from fcq.twist.frobenius import (
    TateTwist,
    dual_algebra,
    frobenius_twist_algebra,
    graded_twist_dims,
    hopf_twist,
    sign_factor,
    tate_zero_dims,
    twist_morphism,
)

__all__ = [
    "SuperAlgebra",
    "SuperHopf",
    "TateTwist",
    "change_basis",
    "dual_algebra",
    "exterior",
    "exterior_hopf",
    "frobenius_twist_algebra",
    "graded_twist_dims",
    "ground_field",
    "group_algebra_cyclic",
    "hopf_twist",
    "product_algebra",
    "random_graded_automorphism",
    "random_super_algebra",
    "sign_factor",
    "square_zero",
    "tate_zero_dims",
    "truncated_polynomial",
    "twist_morphism",
    "upper_triangular",
]
