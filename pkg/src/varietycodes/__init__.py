"""Quantum stabilizer codes from subfield-subcodes of affine variety codes.

The public surface is re-exported here; see the submodules for details.
"""

from .catalog import CatalogEntry, CodeSpec, Expected, SpecError, catalog, load, loads, lookup
from .distance import (DistanceResult, Status, css_coset_distance, min_dependent_columns,
                       min_weight_exhaustive, verify_distance_claim)
from .evaluation import (LinearCode, code_CU, code_CUs, dual_code_CUs, subcode_diagnostic,
                         subfield_subcode_oracle)
from .fields import FieldContext, build_field
from .lattice import CyclotomicSet, ExponentSet, all_minimal_sets, hat, minimal_cyclotomic_set, u_perp
from .stabilizer import (GV, NotSelfOrthogonal, check_self_orthogonal_CUs, css_parameters,
                         gram_orthogonality_oracle, gv_sufficient)

__version__ = "0.1.0"

__all__ = [
    "CatalogEntry", "CodeSpec", "Expected", "SpecError", "catalog", "load", "loads", "lookup",
    "DistanceResult", "Status", "css_coset_distance", "min_dependent_columns",
    "min_weight_exhaustive", "verify_distance_claim",
    "LinearCode", "code_CU", "code_CUs", "dual_code_CUs", "subcode_diagnostic",
    "subfield_subcode_oracle",
    "FieldContext", "build_field",
    "CyclotomicSet", "ExponentSet", "all_minimal_sets", "hat", "minimal_cyclotomic_set", "u_perp",
    "GV", "NotSelfOrthogonal", "check_self_orthogonal_CUs", "css_parameters",
    "gram_orthogonality_oracle", "gv_sufficient",
]
