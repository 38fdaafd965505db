import pytest

from chain_complex import (
    BasisLabel, ChainVector, ExactMatrix, GComplexVector, build_f2, build_f3,
    build_f_complex, build_g2, build_g3, build_g4, build_g5, build_g_complex,
    canonicalize, check_complex, homology_dims, homology_report, lift_to_constrained,
    simplex_g4_terms, simplicial_homology_dims, triangle_invariant,
)
from field import Field
from triangulation import build_lattice, builtin, random_coordinates
from utils.errors import NotAComplex, TriangleNotInSimplex

GF = "gf:1000003"
COMPLEX_TRIANGULATIONS = ["boundary_delta5", "pachner24_lhs", "pachner24_rhs", "pachner33_lhs"]


def setup(name, seed, field=GF):
    tri = builtin(name)
    return tri, build_lattice(tri), random_coordinates(tri, field, seed)


def test_basis_label_format():
    assert str(BasisLabel("V3", (1, 2, 3, 4), 1)) == "V3:(1234,1)"
    assert str(BasisLabel("E*", (5,))) == "E*:(5)"
    assert BasisLabel("V3", (1, 2, 3, 4), 1) < BasisLabel("V3", (1, 2, 3, 5), 1)


def test_exact_matrix_basics():
    field = Field.rationals()
    rows = [BasisLabel("R", (1,)), BasisLabel("R", (2,))]
    cols = [BasisLabel("C", (1,)), BasisLabel("C", (2,))]
    m = ExactMatrix.from_columns(field, rows, cols, [
        {rows[0]: 1, rows[1]: 2},
        {rows[0]: 2, rows[1]: 4, BasisLabel("X", ()): 9},
    ])
    assert m.shape == (2, 2)
    assert m.rank() == 1
    assert m.entry(rows[1], cols[1]) == 4
    assert m.apply({cols[0]: 2, cols[1]: -1}) == {}
    assert m.to_json() == {
        "field": "q",
        "rows": ["R:(1)", "R:(2)"],
        "cols": ["C:(1)", "C:(2)"],
        "entries": [[0, 0, "1"], [0, 1, "2"], [1, 0, "2"], [1, 1, "4"]],
    }
    transposed = ExactMatrix.from_columns(field, cols, rows, [{cols[0]: 1, cols[1]: 2}, {cols[0]: 2, cols[1]: 4}])
    assert m.compose(transposed).entry(rows[0], rows[0]) == 5


def test_lift_to_constrained_triangle():
    """
    y_{s,i} = 1 поднимается в y_{s,j} = ζ_ki/ζ_jk, y_{s,k} = ζ_ij/ζ_jk
    """
    zeta = random_coordinates([1, 2, 3], "q", 4)
    s = (1, 2, 3)
    lifted = lift_to_constrained("V2", {(s, 1): 1}, zeta)
    assert lifted.get(s, 2) == zeta.diff(3, 1) / zeta.diff(2, 3)
    assert lifted.get(s, 3) == zeta.diff(1, 2) / zeta.diff(2, 3)
    assert lifted.satisfies_constraints(zeta)

    zero = lift_to_constrained("V2", {(s, 1): 0}, zeta)
    assert all(not value for value in zero.coords.values())


def test_lift_then_project_is_identity():
    zeta = random_coordinates(range(1, 6), GF, 2)
    u = (1, 2, 3, 4, 5)
    free = {(u, 1): 3, (u, 2): -7, (u, 3): 11}
    lifted = lift_to_constrained("V4", free, zeta)
    assert lifted.satisfies_constraints(zeta)
    projected = lifted.project("V4")
    assert projected == {BasisLabel("V4", u, v): zeta.field(value) for (_, v), value in free.items()}


def _f2_column_oracle(vertex, lattice, zeta):
    image = ChainVector("W2")
    for s in lattice.inner_triangles:
        if vertex not in s:
            continue
        for position, i in enumerate(s):
            # Четные перестановки возрастающей тройки - циклические сдвиги
            j, k = s[(position + 1) % 3], s[(position + 2) % 3]
            inv_ij = zeta.diff(i, j).inverse()
            inv_ik = zeta.diff(i, k).inverse()
            if vertex == i:
                image.add(s, i, inv_ij - inv_ik)
            elif vertex == j:
                image.add(s, i, -inv_ij)
            else:
                image.add(s, i, inv_ik)
    return image


def test_f2_on_boundary_delta5():
    tri, lattice, zeta = setup("boundary_delta5", 3)
    f2 = build_f2(tri, lattice, zeta)
    assert f2.shape == (20, 6)
    for col in f2.cols:
        oracle = _f2_column_oracle(col.simplex[0], lattice, zeta)
        assert oracle.satisfies_constraints(zeta)
        assert f2.column(col) == {k: v for k, v in oracle.project("V2").items() if v}


def test_f2_empty_without_inner_vertices():
    tri, lattice, zeta = setup("pachner33_lhs", 1)
    assert build_f2(tri, lattice, zeta).is_empty


def test_f3_on_pachner33_lhs():
    tri, lattice, zeta = setup("pachner33_lhs", 5)
    f3 = build_f3(tri, lattice, zeta)
    assert f3.shape == (24, 1)
    inner_rows = [r for r in f3.rows if r.simplex in lattice.inner_tetrahedra]
    assert len(inner_rows) == 6
    assert f3.select_rows(inner_rows).rank() == 1


@pytest.mark.parametrize("name", COMPLEX_TRIANGULATIONS)
@pytest.mark.parametrize("seed", [0, 1, 2])
def test_f_complex_property(name, seed):
    """
    f₃f₂ = 0, f₄f₃ = 0, f₅f₄ = 0, f̃₄f̃₃ = 0
    """
    tri, lattice, zeta = setup(name, seed)
    fc = build_f_complex(tri, lattice, zeta)
    assert fc.f3.compose(fc.f2).is_zero()
    assert fc.f4.compose(fc.f3).is_zero()
    assert fc.f5.compose(fc.f4).is_zero()
    assert fc.f4_tilde.compose(fc.f3_tilde).is_zero()
    assert fc.f3.rank() == fc.f3_tilde.rank()
    assert fc.f4.rank() == fc.f4_tilde.rank()


def test_f_complex_over_rationals():
    tri, lattice, zeta = setup("boundary_delta5", 0, "q")
    check_complex([m for _, m in build_f_complex(tri, lattice, zeta).maps()])


@pytest.mark.parametrize("name", COMPLEX_TRIANGULATIONS)
@pytest.mark.parametrize("seed", [0, 1, 2])
def test_g_complex_property(name, seed):
    """
    g₃g₂ = 0, g₄g₃ = 0, g₅g₄ = 0
    """
    tri, lattice, zeta = setup(name, seed)
    gc = build_g_complex(tri, lattice, zeta)
    check_complex([m for _, m in gc.maps()])


def test_g2_on_boundary_delta5():
    tri, lattice, zeta = setup("boundary_delta5", 6)
    g2 = build_g2(tri, lattice, zeta)
    column = g2.column(BasisLabel("V0", (1,)))
    assert len(column) == 10
    expected = (zeta.diff(1, 2) * zeta.diff(1, 3) * zeta.diff(1, 4)).inverse()
    assert column[BasisLabel("T", (1, 2, 3, 4))] == expected


def test_g3_columns():
    """
    g₃(e_1234) = e_{12345,5} + e_{12346,6}; граничный тетраэдр дает одно слагаемое
    """
    tri, lattice, zeta = setup("pachner33_lhs", 8)
    g3 = build_g3(tri, lattice, zeta)
    expected = GComplexVector()
    expected.add((1, 2, 3, 4, 5), 5, zeta.field.one)
    expected.add((1, 2, 3, 4, 6), 6, zeta.field.one)
    assert g3.column(BasisLabel("T", (1, 2, 3, 4))) == expected.canonical(zeta)

    extended = build_g3(tri, lattice, zeta, include_boundary=True)
    assert len(extended.cols) == 12
    assert extended.column(BasisLabel("T", (2, 3, 4, 5))) == {
        BasisLabel("M", (1, 2, 3, 4, 5), 1): zeta.field.one,
    }


@pytest.mark.parametrize("name", ["pachner33_lhs", "pachner33_rhs"])
def test_extended_g3_is_onto(name):
    """
    Аналог g₃ на всех тетраэдрах отображает на весь средний член
    """
    tri, lattice, zeta = setup(name, 8)
    extended = build_g3(tri, lattice, zeta, include_boundary=True)
    assert len(extended.cols) == 12
    assert extended.rank() == 9


def test_triangle_invariant_examples():
    zeta = random_coordinates(range(1, 6), "q", 9)
    u = (1, 2, 3, 4, 5)
    ones = {v: 1 for v in u}
    zetas = {v: zeta[v] for v in u}
    for triangle in [(1, 2, 3), (2, 4, 5), (1, 3, 5)]:
        assert not triangle_invariant(ones, u, triangle, zeta)
        assert not triangle_invariant(zetas, u, triangle, zeta)
    assert triangle_invariant({1: 1}, u, (1, 2, 3), zeta) == zeta.diff(2, 3)
    with pytest.raises(TriangleNotInSimplex):
        triangle_invariant({1: 1}, u, (1, 2, 6), zeta)


def test_canonical_form_ignores_relations():
    zeta = random_coordinates(range(1, 6), GF, 10)
    u = (1, 2, 3, 4, 5)
    raw = {1: 3, 2: 5, 3: 7, 4: 11, 5: 13}
    alpha, beta = zeta.field(17), zeta.field(19)
    shifted = {v: zeta.field(value) + alpha + beta * zeta[v] for v, value in raw.items()}
    assert canonicalize(u, raw, zeta) == canonicalize(u, shifted, zeta)
    assert simplex_g4_terms(u, {v: 1 for v in u}, zeta) == {}


def test_g4_vanishes_on_pachner33_sides():
    for name in ("pachner33_lhs", "pachner33_rhs"):
        tri, lattice, zeta = setup(name, 2)
        g4 = build_g4(tri, lattice, zeta)
        assert g4.rows == [] and len(g4.cols) == 9


def test_g5_edge_column():
    tri, lattice, zeta = setup("boundary_delta5", 4)
    g5 = build_g5(tri, lattice, zeta)
    edge = BasisLabel("E", (1, 2))
    assert g5.entry(BasisLabel("E*", (1,)), edge) == 1
    assert g5.entry(BasisLabel("F*", (1,)), edge) == zeta[2]
    assert g5.entry(BasisLabel("E*", (2,)), edge) == -zeta.field.one
    assert g5.entry(BasisLabel("F*", (2,)), edge) == -zeta[1]
    assert all(label.simplex in ((1,), (2,)) for label in g5.column(edge))


def test_homology_dims_basic():
    field = Field.rationals()
    cols = [BasisLabel("C", (v,)) for v in range(3)]
    assert homology_dims([ExactMatrix(field, [], cols)]) == [3, 0]

    label = [BasisLabel("C", (0,))]
    identity = ExactMatrix(field, label, label, {(0, 0): field.domain.one})
    with pytest.raises(NotAComplex):
        homology_dims([identity, identity])


def test_g_homology_on_pachner33_lhs():
    tri, lattice, zeta = setup("pachner33_lhs", 12)
    gc = build_g_complex(tri, lattice, zeta)
    report = homology_report(gc.maps())
    assert report["maps"] == ["g2", "g3", "g4", "g5"]
    assert report["dims"] == [0, 3, 9, 0, 0]
    assert report["homology"][2] == 9 - gc.g3.rank()


def test_f_homology_reports():
    tri, lattice, zeta = setup("boundary_delta5", 0)
    report = homology_report(build_f_complex(tri, lattice, zeta).maps())
    assert len(report["dims"]) == 5
    assert report["dims"] == [6, 20, 30, 18, 6]

    tri, lattice, zeta = setup("pachner33_lhs", 0)
    short = homology_report(build_f_complex(tri, lattice, zeta).maps())
    assert short["maps"] == ["f3_tilde", "f4_tilde"]
    assert len(short["homology"]) == 3


def test_simplicial_homology():
    field = Field.prime(1000003)
    sphere = builtin("boundary_delta5")
    assert simplicial_homology_dims(sphere, build_lattice(sphere), field) == [1, 0, 0, 0, 1]

    ball = builtin("pachner33_lhs")
    lattice = build_lattice(ball)
    assert simplicial_homology_dims(ball, lattice, field) == [1, 0, 0, 0, 0]
    assert simplicial_homology_dims(ball, lattice, field, relative=True) == [0, 0, 0, 0, 1]
