from .move import MoveSide, RelationReport, side_integral, union_algebra
from .theorems import (
    PachnerMove, ASSEMBLIES, standard_w_lhs, standard_w_rhs,
    verify_33, verify_w_independence, verify_d1, verify_b, explore_24,
)
