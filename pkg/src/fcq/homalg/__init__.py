"""Chain complexes over F_p with cyclic actions, tensor powers, and Tate hypercohomology."""

from fcq.homalg.complexes import ChainMap, Complex, CyclicComplex, cyclic_shift, mapping_cone
from fcq.homalg.resolution import (
    expected_zeta_scalar,
    periodic_resolution,
    subset_complex,
    subset_complex_direct,
    verify_zeta,
    zeta_map,
)
from fcq.homalg.steenrod import (
    ConeFiltration,
    TensorPower,
    additivity_defect,
    cone_filtration,
    conjugate_average,
    is_induced,
    orbit_representatives,
    same_cyclic_complex,
    steenrod_chainmap,
    steenrod_complex,
    tensor_map,
)
from fcq.homalg.tate import tate_dim, tate_hypercohomology

__all__ = [
    "ChainMap",
    "Complex",
    "ConeFiltration",
    "CyclicComplex",
    "TensorPower",
    "additivity_defect",
    "cone_filtration",
    "conjugate_average",
    "cyclic_shift",
    "expected_zeta_scalar",
    "is_induced",
    "mapping_cone",
    "orbit_representatives",
    "periodic_resolution",
    "same_cyclic_complex",
    "steenrod_chainmap",
    "steenrod_complex",
    "subset_complex",
    "subset_complex_direct",
    "tate_dim",
    "tate_hypercohomology",
    "tensor_map",
    "verify_zeta",
    "zeta_map",
]
