import pytest

from chain_complex import build_f_complex
from field import make_rng
from grassmann import Generator, GrassmannAlgebra, KIND_A, KIND_B, GrassmannOperator
from triangulation import build_lattice, builtin, random_coordinates
from utils.errors import BoundaryTetWithoutFlag, FaceNotInner
from weights import (
    XChain, deformed_weight, face_operator, face_operator_from_matrix, is_boundary,
    is_cycle, random_xchain, simplex_algebra, single_simplex_f4, tet_face_operator,
    v_rows, v_rows_from_matrix, weight, xchain_from_tet_chain,
)

GF = "gf:1000003"
U = (1, 2, 3, 4, 5)


def a(*tetra):
    return Generator(tetra, KIND_A)


def b(*tetra):
    return Generator(tetra, KIND_B)


def coordinates(seed, field=GF):
    return random_coordinates(range(1, 7), field, seed)


@pytest.mark.parametrize("seed", [0, 1, 2, 3])
def test_v_rows_explicit_formulas(seed):
    """
    Явные строки v₁, v₂, v₃ симплекса 12345
    """
    zeta = coordinates(seed)
    algebra = simplex_algebra(zeta.field, U)
    z = zeta.diff
    v1, v2, v3 = [row.element for row in v_rows(U, zeta, algebra)[:3]]
    assert v1 == algebra.linear([
        (z(3, 4), a(1, 2, 3, 4)), (-z(3, 5), a(1, 2, 3, 5)),
        (z(4, 5), a(1, 2, 4, 5)), (-z(4, 5), a(1, 3, 4, 5)),
    ])
    assert v2 == algebra.linear([
        (z(3, 4), b(1, 2, 3, 4)), (-z(3, 5), b(1, 2, 3, 5)),
        (z(4, 5), b(1, 2, 4, 5)), (z(4, 5), a(2, 3, 4, 5)),
    ])
    assert v3 == algebra.linear([
        (-z(1, 4), a(1, 2, 3, 4)), (-z(2, 4), b(1, 2, 3, 4)),
        (z(1, 5), a(1, 2, 3, 5)), (z(2, 5), b(1, 2, 3, 5)),
        (-z(4, 5), b(1, 3, 4, 5)), (z(4, 5), b(2, 3, 4, 5)),
    ])


@pytest.mark.parametrize("seed", range(5))
def test_v_rows_relations_and_matrix_agree(seed):
    """
    Σ v = 0, Σ ζ v = 0; решенные строки 4, 5 совпадают со строками матрицы
    """
    zeta = coordinates(seed)
    algebra = simplex_algebra(zeta.field, U)
    rows = v_rows(U, zeta, algebra)
    total = algebra.zero()
    weighted = algebra.zero()
    for row in rows:
        total = total + row.element
        weighted = weighted + row.element.scale(zeta[row.vertex])
    assert total.is_zero and weighted.is_zero
    assert [r.element for r in rows] == [r.element for r in v_rows_from_matrix(U, zeta, algebra)]
    assert [r.vertex for r in rows] == list(U)


def test_single_simplex_f4_shape():
    zeta = coordinates(0)
    assert single_simplex_f4(U, zeta).shape == (5, 10)


@pytest.mark.parametrize("seed", range(10))
def test_weight_alternative_expressions(seed):
    """
    (1/ζ₄₅)v₁v₂v₃ = -(1/ζ₃₅)v₁v₂v₄ = (1/ζ₁₂)v₃v₄v₅
    """
    zeta = coordinates(seed, "q" if seed < 2 else GF)
    rows = [row.element for row in v_rows(U, zeta)]
    v1, v2, v3, v4, v5 = rows
    w = weight(U, zeta)
    assert w.degrees() == [3]
    assert w == (v1 * v2 * v4).scale(-zeta.diff(3, 5).inverse())
    assert w == (v3 * v4 * v5).scale(zeta.diff(1, 2).inverse())


@pytest.mark.parametrize("seed", range(5))
def test_deformed_weight_relation_plane(seed):
    """
    Деформированный вес зависит только от класса x по модулю соотношений
    """
    zeta = coordinates(seed)
    field = zeta.field
    rng = make_rng(seed)
    base = XChain(field, {(U, v): field.random(rng) for v in U})
    alpha, beta = field.random(rng), field.random(rng)
    shifted = XChain(field, {(U, v): base.get(U, v) + alpha + beta * zeta[v] for v in U})
    assert deformed_weight(U, zeta, base, -1) == deformed_weight(U, zeta, shifted, -1)

    undeformed = weight(U, zeta)
    assert deformed_weight(U, zeta, XChain(field), 1) == undeformed
    constant = XChain(field, {(U, v): 7 for v in U})
    assert deformed_weight(U, zeta, constant, 1) == undeformed

    deformed = deformed_weight(U, zeta, base, 1)
    assert deformed.homogeneous_part(3) == undeformed
    assert deformed.degrees() in ([1, 3], [3])


def test_tet_face_operator_cases():
    zeta = coordinates(4)
    t = (1, 2, 3, 4)
    field = zeta.field
    assert tet_face_operator(t, (1, 3, 4), zeta) == GrassmannOperator(field, [(1, a(*t))])
    assert tet_face_operator(t, (2, 3, 4), zeta) == GrassmannOperator(field, [(-1, b(*t))])
    d = tet_face_operator(t, (1, 2, 3), zeta)
    assert d.coefficient(a(*t)) == zeta.diff(2, 3) / zeta.diff(3, 4)
    assert d.coefficient(b(*t)) == -zeta.diff(1, 3) / zeta.diff(3, 4)
    with pytest.raises(FaceNotInner):
        tet_face_operator(t, (1, 2, 5), zeta)


@pytest.mark.parametrize("name,triangle,terms", [
    ("pachner33_lhs", (1, 2, 3), 6),
    ("pachner33_rhs", (4, 5, 6), 3),
])
def test_face_operator_matches_gauged_f3(name, triangle, terms):
    tri = builtin(name)
    lattice = build_lattice(tri)
    zeta = coordinates(6)
    d = face_operator(triangle, lattice, zeta)
    assert len(d.terms) == terms
    f3_tilde = build_f_complex(tri, lattice, zeta).f3_tilde
    assert face_operator_from_matrix(triangle, f3_tilde) == d
    with pytest.raises(FaceNotInner):
        face_operator((1, 2, 4), lattice, zeta)


def test_face_operator_inverts_standard_w():
    """
    d₁₂₃(ζ₂₃⁻¹ζ₃₄a₁₂₃₄) = 1
    """
    tri = builtin("pachner33_lhs")
    lattice = build_lattice(tri)
    zeta = coordinates(7)
    algebra = simplex_algebra(zeta.field, (1, 2, 3, 4, 5))
    w = algebra.gen(a(1, 2, 3, 4), zeta.diff(3, 4) / zeta.diff(2, 3))
    assert face_operator((1, 2, 3), lattice, zeta)(w) == 1


@pytest.mark.parametrize("seed", [0, 1, 2])
@pytest.mark.parametrize("degree", [1, 2, 3])
def test_face_operator_lowers_degree_by_one(seed, degree):
    """
    d_s обнуляет константы и переводит однородные элементы степени k в степень k-1
    """
    lattice = build_lattice(builtin("pachner33_lhs"))
    zeta = coordinates(seed)
    field = zeta.field
    algebra = GrassmannAlgebra.for_tetrahedra(field, lattice.tetrahedra)
    d = face_operator((1, 2, 3), lattice, zeta)
    assert d(algebra.one()).is_zero
    assert d(algebra.scalar(field.random(make_rng(seed), nonzero=True))).is_zero

    rng = make_rng(f"degree-{seed}-{degree}")
    x = algebra.zero()
    for _ in range(4):
        x = x + algebra.monomial(rng.sample(algebra.generators, degree), field.random(rng, nonzero=True))
    assert x.degrees() in ([degree], [])
    image = d(x)
    assert image.is_zero or image.degrees() == [degree - 1]

    untouched = [g for g in algebra.generators if not {1, 2, 3} <= set(g.tetra)]
    touched = algebra.monomial([a(1, 2, 3, 4)] + untouched[:degree - 1])
    assert d(touched).degrees() == [degree - 1]


def test_xchain_from_tet_chain():
    tri = builtin("pachner33_lhs")
    lattice = build_lattice(tri)
    field = coordinates(0).field

    inner = xchain_from_tet_chain({(1, 2, 3, 4): 1}, tri, lattice, field)
    assert inner == XChain(field, {((1, 2, 3, 4, 5), 5): 1, ((1, 2, 3, 4, 6), 6): 1})

    boundary = xchain_from_tet_chain({(2, 3, 4, 5): 1}, tri, lattice, field, include_boundary=True)
    assert boundary == XChain(field, {((1, 2, 3, 4, 5), 1): 1})

    assert not xchain_from_tet_chain({(1, 2, 3, 4): 0}, tri, lattice, field)
    with pytest.raises(BoundaryTetWithoutFlag):
        xchain_from_tet_chain({(2, 3, 4, 5): 1}, tri, lattice, field)


def test_xchain_json():
    field = coordinates(0).field
    chain = XChain(field, {((1, 2, 3, 4, 5), 5): 2, ((1, 2, 3, 4, 5), 1): -1})
    assert chain.to_json() == {"chain": [[[1, 2, 3, 4, 5], 1, "1000002"], [[1, 2, 3, 4, 5], 5, "2"]]}


def test_cycles_and_boundaries_on_pachner33():
    """
    На сторонах хода 3→3 любая x-цепь - цикл; границами являются образы g₃
    """
    tri = builtin("pachner33_lhs")
    lattice = build_lattice(tri)
    zeta = coordinates(3)
    rng = make_rng(3)
    x = random_xchain(tri, zeta.field, rng)
    assert is_cycle(x, tri, lattice, zeta)
    assert not is_boundary(x, tri, lattice, zeta)

    image = xchain_from_tet_chain({(1, 2, 3, 5): 3, (1, 2, 3, 6): -2}, tri, lattice, zeta.field)
    assert is_boundary(image, tri, lattice, zeta)
    assert is_boundary(XChain(zeta.field), tri, lattice, zeta)
