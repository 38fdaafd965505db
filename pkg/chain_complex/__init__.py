from .matrix import BasisLabel, ExactMatrix
from .f_complex import (
    ChainVector, FComplex, lift_to_constrained, solve_tail,
    build_f2, build_f3, build_f4, build_f5, gauge_f4, gauge_transform, build_f_complex,
)
from .g_complex import (
    GComplexVector, GComplex, canonicalize, middle_basis, permutation_sign,
    triangle_invariant, tet_chain_image, simplex_g4_terms,
    build_g2, build_g3, build_g4, build_g5, build_g_complex,
)
from .homology import (
    check_complex, homology_dims, homology_report,
    simplicial_boundary, simplicial_homology_dims,
)
