from .vrows import VRow, v_rows, v_rows_from_matrix, single_simplex_f4, simplex_algebra
from .weight import (
    weight, deformed_weight, face_operator, tet_face_operator, face_operator_from_matrix,
)
from .xchain import (
    XChain, random_xchain, xchain_from_tet_chain, xchain_to_middle, is_cycle, is_boundary,
)
