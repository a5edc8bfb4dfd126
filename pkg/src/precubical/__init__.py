"""Exact cohomology rings of finite precubical sets.

The package computes, over the integers or a residue ring, the graded
cohomology of a finite precubical set together with cocycle generators and
the full cup-product multiplication table, all in exact arithmetic.  A
property-test harness machine-checks the algebraic identities the
construction relies on (boundary squares to zero, the diagonal is a chain
map, the Leibniz rule, ring axioms of the product) on random instances.
"""

from .cochains import (
    Chain,
    Cochain,
    TensorChain,
    boundary,
    coboundary,
    cup,
    diagonal,
    tensor_boundary,
    unit_cochain,
)
from .cohomology import (
    CohomologyGroup,
    RingTable,
    class_of,
    cohomology_groups,
    delta_matrix,
    ring_table,
)
from .core import (
    MAX_DIM,
    CubeId,
    PrecubicalSet,
    SubsetWithSign,
    Violation,
    circle,
    interval,
    iterated_face,
    permutation_sign,
    standard_cube,
    subset_with_sign,
    subsets_with_sign,
    tensor_many,
    tensor_product,
    torus,
    validate,
)
from .exactlinalg import (
    IntMatrix,
    SmithForm,
    determinant,
    express_in_lattice,
    field_rank_and_kernel,
    kernel_basis,
    smith_normal_form,
)
from .propcheck import (
    GenConfig,
    PropertyReport,
    anticommutativity_report,
    check,
    random_precubical,
)
from .rings import CoeffRing, Z, Zmod, parse_ring
from .textformat import ParseError, parse, serialize

__version__ = "0.1.0"

__all__ = [
    "MAX_DIM",
    "Chain",
    "Cochain",
    "CoeffRing",
    "CohomologyGroup",
    "CubeId",
    "GenConfig",
    "IntMatrix",
    "ParseError",
    "PrecubicalSet",
    "PropertyReport",
    "RingTable",
    "SmithForm",
    "SubsetWithSign",
    "TensorChain",
    "Violation",
    "Z",
    "Zmod",
    "anticommutativity_report",
    "boundary",
    "check",
    "circle",
    "class_of",
    "coboundary",
    "cohomology_groups",
    "cup",
    "delta_matrix",
    "determinant",
    "diagonal",
    "express_in_lattice",
    "field_rank_and_kernel",
    "interval",
    "iterated_face",
    "kernel_basis",
    "parse",
    "parse_ring",
    "permutation_sign",
    "random_precubical",
    "ring_table",
    "serialize",
    "smith_normal_form",
    "standard_cube",
    "subset_with_sign",
    "subsets_with_sign",
    "tensor_boundary",
    "tensor_many",
    "tensor_product",
    "torus",
    "unit_cochain",
    "validate",
]
