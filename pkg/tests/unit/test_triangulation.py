from itertools import combinations

import pytest

from field import Field
from triangulation import (
    COMMON_BOUNDARY_33, Triangulation, VertexCoordinates, boundary_sign, build_lattice,
    builtin, builtin_names, faces_of, orient_from_reference, random_coordinates,
)
from utils.errors import (
    CoordinateCollision, DisconnectedInterior, FieldTooSmall, InputError, NotAFacet,
    OrientationInconsistent, TetrahedronInThreeSimplices, UnknownName,
)


def test_boundary_sign():
    """
    ∂[1234] = [234] - [134] + [124] - [123]
    """
    assert boundary_sign((2, 3, 4), (1, 2, 3, 4)) == 1
    assert boundary_sign((1, 3, 4), (1, 2, 3, 4)) == -1
    assert boundary_sign((1, 2, 4), (1, 2, 3, 4)) == 1
    assert boundary_sign((1, 2, 3), (1, 2, 3, 4)) == -1
    assert boundary_sign((1, 2, 3, 4), (1, 2, 3, 4, 5)) == 1
    with pytest.raises(NotAFacet):
        boundary_sign((1, 2, 5), (1, 2, 3, 4))


@pytest.mark.parametrize("name", ["pachner33_lhs", "boundary_delta5", "pachner24_rhs"])
def test_boundary_of_boundary_vanishes(name):
    """
    Знаки граней дают ∂∂ = 0 на каждом симплексе
    """
    for u in builtin(name).simplices4:
        for size in (5, 4, 3):
            for simplex in faces_of(u, size):
                total = {}
                for face in faces_of(simplex, size - 1):
                    for sub in faces_of(face, size - 2):
                        sign = boundary_sign(face, simplex) * boundary_sign(sub, face)
                        total[sub] = total.get(sub, 0) + sign
                assert all(v == 0 for v in total.values())


def test_pachner33_lattices():
    """
    Внутренние грани обеих сторон хода 3→3
    """
    lhs = build_lattice(builtin("pachner33_lhs"))
    assert lhs.inner_tetrahedra == [(1, 2, 3, 4), (1, 2, 3, 5), (1, 2, 3, 6)]
    assert lhs.inner_triangles == [(1, 2, 3)]
    assert lhs.inner_edges == [] and lhs.inner_vertices == []

    rhs = build_lattice(builtin("pachner33_rhs"))
    assert rhs.inner_tetrahedra == [(1, 4, 5, 6), (2, 4, 5, 6), (3, 4, 5, 6)]
    assert rhs.inner_triangles == [(4, 5, 6)]
    assert rhs.is_inner((4, 5, 6)) and not rhs.is_inner((1, 2, 3))

    assert set(lhs.boundary_tetrahedra) == set(COMMON_BOUNDARY_33)
    assert set(rhs.boundary_tetrahedra) == set(COMMON_BOUNDARY_33)


def test_boundary_delta5_is_closed():
    lattice = build_lattice(builtin("boundary_delta5"))
    assert len(lattice.tetrahedra) == 15
    assert lattice.boundary_tetrahedra == []
    assert lattice.inner_vertices == [1, 2, 3, 4, 5, 6]
    assert all(len(owners) == 2 for owners in lattice.cofaces.values())
    assert lattice.summary()["inner_edges"] == 15


def test_pachner24_lattices():
    lhs = build_lattice(builtin("pachner24_lhs"))
    assert lhs.inner_tetrahedra == [(1, 2, 3, 4)]
    assert lhs.inner_triangles == []

    rhs = build_lattice(builtin("pachner24_rhs"))
    assert len(rhs.inner_tetrahedra) == 6
    assert all({5, 6} <= set(t) for t in rhs.inner_tetrahedra)
    assert rhs.inner_triangles == [(1, 5, 6), (2, 5, 6), (3, 5, 6), (4, 5, 6)]
    assert rhs.inner_edges == [(5, 6)]
    assert set(lhs.boundary_tetrahedra) == set(rhs.boundary_tetrahedra)


def test_builtin_orientations():
    """
    Знаки ε для сторон хода 3→3 и границы 5-симплекса
    """
    lhs = builtin("pachner33_lhs")
    assert [lhs.eps(u) for u in lhs.simplices4] == [1, -1, 1]
    rhs = builtin("pachner33_rhs")
    assert [rhs.eps(u) for u in rhs.simplices4] == [1, -1, 1]

    closed = builtin("boundary_delta5")
    for u in closed.simplices4:
        omitted = (set(range(1, 7)) - set(u)).pop()
        assert closed.eps(u) == (-1) ** omitted


def test_orient_from_reference_reproduces_builtin():
    plain = Triangulation(builtin("pachner33_lhs").simplices4, 6)
    oriented = orient_from_reference(plain, ((1, 2, 3, 4, 5), 1))
    assert oriented == builtin("pachner33_lhs")

    flipped = orient_from_reference(plain, ((1, 2, 3, 4, 5), -1))
    assert all(flipped.eps(u) == -oriented.eps(u) for u in plain.simplices4)


def test_orientation_errors():
    simplices = [(1, 2, 3, 4, 5), (1, 2, 3, 4, 6)]
    with pytest.raises(OrientationInconsistent):
        build_lattice(Triangulation(simplices, epsilon={simplices[0]: 1, simplices[1]: 1}))

    disjoint = Triangulation([(1, 2, 3, 4, 5), (6, 7, 8, 9, 10)])
    with pytest.raises(DisconnectedInterior):
        orient_from_reference(disjoint, ((1, 2, 3, 4, 5), 1))


def test_tetrahedron_in_three_simplices():
    with pytest.raises(TetrahedronInThreeSimplices):
        build_lattice(Triangulation([(1, 2, 3, 4, 5), (1, 2, 3, 4, 6), (1, 2, 3, 4, 7)]))


def test_invalid_triangulations():
    with pytest.raises(InputError):
        Triangulation([(1, 2, 3, 4)])
    with pytest.raises(InputError):
        Triangulation([(1, 2, 3, 4, 4)])
    with pytest.raises(InputError):
        Triangulation([])
    with pytest.raises(InputError):
        Triangulation([(1, 2, 3, 4, 5)]).eps((1, 2, 3, 4, 5))


def test_builtin_names():
    assert builtin_names() == [
        "boundary_delta5", "pachner24_lhs", "pachner24_rhs", "pachner33_lhs", "pachner33_rhs",
    ]
    assert builtin("pachner24_lhs").simplices4 == ((1, 2, 3, 4, 5), (1, 2, 3, 4, 6))
    assert len(builtin("boundary_delta5")) == 6
    with pytest.raises(UnknownName):
        builtin("pachner42")


def test_random_coordinates():
    """
    Детерминированность и попарная различность координат
    """
    tri = builtin("boundary_delta5")
    first = random_coordinates(tri, "gf:1000003", 7)
    assert first == random_coordinates(tri, "gf:1000003", 7)
    values = [first[v] for v in tri.vertex_ids]
    assert len(set(values)) == 6
    for i, j in combinations(tri.vertex_ids, 2):
        assert first.diff(i, j) == -first.diff(j, i)

    small = random_coordinates(tri, "gf:7", 1)
    assert len({small[v] for v in tri.vertex_ids}) == 6

    with pytest.raises(FieldTooSmall):
        random_coordinates(tri, "gf:5", 0)


def test_coordinate_collision():
    field = Field.rationals()
    with pytest.raises(CoordinateCollision):
        VertexCoordinates(field, {1: 2, 2: 2})
    zeta = VertexCoordinates(field, {1: "1/2", 2: 3})
    assert str(zeta.diff(1, 2)) == "-5/2"
    with pytest.raises(InputError):
        zeta[3]
