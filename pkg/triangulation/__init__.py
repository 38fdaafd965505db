from .complex import (
    Triangulation, FaceLattice, build_lattice, boundary_sign,
    opposite_vertex, faces_of, orient_from_reference,
)
from .builtin import builtin, builtin_names, COMMON_BOUNDARY_33
from .coordinates import VertexCoordinates, random_coordinates
