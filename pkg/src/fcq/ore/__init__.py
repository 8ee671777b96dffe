"""Normal-form arithmetic in the Weyl algebra and quantum torus, with the rank-one examples."""

from fcq.ore.coulomb import (
    AR_VARS,
    CoulombBasisError,
    CoulombElement,
    NotInCoulomb,
    ar_element,
    basis_poly,
    basis_product,
    classical,
    coulomb_basis,
    coulomb_frobenius,
    coulomb_frobenius_report,
    coulomb_generators,
    coulomb_membership,
    coulomb_mul,
    falling_poly,
    frobenius_on,
    frobenius_structure_report,
    relation_check,
)
from fcq.ore.qtorus import (
    QTorusElement,
    adams,
    centrality_report,
    cyclotomic_identity,
    falling_q_product,
    k_basis,
    k_central_map,
    k_centrality_report,
    k_generators,
    k_product_coefficient,
    k_product_rule_report,
    qtorus_commutator,
    qtorus_mul,
)
from fcq.ore.weyl import (
    WForm,
    WeylElement,
    falling_w,
    frobenius_weyl,
    from_wform,
    to_wform,
    weyl_commutator,
    weyl_mul,
)

__all__ = [
    "AR_VARS",
    "CoulombBasisError",
    "CoulombElement",
    "NotInCoulomb",
    "QTorusElement",
    "WForm",
    "WeylElement",
    "adams",
    "ar_element",
    "basis_poly",
    "basis_product",
    "centrality_report",
    "classical",
    "coulomb_basis",
    "coulomb_frobenius",
    "coulomb_frobenius_report",
    "coulomb_generators",
    "coulomb_membership",
    "coulomb_mul",
    "cyclotomic_identity",
    "falling_poly",
    "falling_q_product",
    "falling_w",
    "frobenius_on",
    "frobenius_structure_report",
    "frobenius_weyl",
    "from_wform",
    "k_basis",
    "k_central_map",
    "k_centrality_report",
    "k_generators",
    "k_product_coefficient",
    "k_product_rule_report",
    "qtorus_commutator",
    "qtorus_mul",
    "relation_check",
    "to_wform",
    "weyl_commutator",
    "weyl_mul",
]
