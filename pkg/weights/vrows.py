"""
Векторы v_{u,1..5} степени 1 для 4-симплекса u

Строки 1-3 берутся из калиброванной матрицы f₄ одного симплекса u с
образом в W₄; строки 4, 5 решаются из Σ_r v_{u,r} = 0, Σ_r ζ_r v_{u,r} = 0.
"""

import logging
from dataclasses import dataclass

from chain_complex import build_f4, gauge_f4, solve_tail
from grassmann import Generator, GrassmannAlgebra, GrassmannElement, KIND_A, KIND_B
from triangulation import Triangulation, build_lattice, faces_of

logger = logging.getLogger("pachner_grassmann")


@dataclass
class VRow:
    """
    Вектор v_{u,r}: симплекс, номер r (с 1), вершина u[r-1] и элемент степени 1
    """
    simplex: tuple
    index: int
    vertex: int
    element: GrassmannElement


def simplex_algebra(field, simplex):
    """
    Алгебра с образующими a_t, b_t пяти тетраэдров симплекса
    """
    return GrassmannAlgebra.for_tetrahedra(field, faces_of(tuple(simplex), 4))


def single_simplex_f4(simplex, zeta):
    """
    Калиброванная матрица f₄ одного симплекса с образом в W₄ (5×10)
    """
    single = Triangulation.single(simplex)
    lattice = build_lattice(single)
    return gauge_f4(build_f4(single, lattice, zeta, codomain="W4"), zeta)


def _row_element(matrix, label, algebra):
    pairs = []
    for col, value in matrix.row(label).items():
        kind = KIND_A if col.vertex == col.simplex[0] else KIND_B
        pairs.append((value, Generator(col.simplex, kind)))
    return algebra.linear(pairs)


def v_rows_from_matrix(simplex, zeta, algebra=None):
    """
    Все пять строк калиброванной матрицы f₄ как элементы алгебры

    Returns:
        list: Пять VRow
    """
    simplex = tuple(sorted(simplex))
    algebra = algebra or simplex_algebra(zeta.field, simplex)
    matrix = single_simplex_f4(simplex, zeta)
    rows = []
    for r, vertex in enumerate(simplex, start=1):
        label = next(lbl for lbl in matrix.rows if lbl.vertex == vertex)
        rows.append(VRow(simplex, r, vertex, _row_element(matrix, label, algebra)))
    return rows


def v_rows(simplex, zeta, algebra=None):
    """
    Пять векторов v_{u,r} симплекса u

    Args:
        simplex: Упорядоченный 4-симплекс
        zeta: Координаты вершин
        algebra: Алгебра, содержащая образующие тетраэдров u
            (по умолчанию - алгебра одного симплекса)

    Returns:
        list: Пять VRow в порядке вершин
    """
    leading = v_rows_from_matrix(simplex, zeta, algebra)[:3]
    simplex = leading[0].simplex
    zetas = [zeta[v] for v in simplex]
    inv = zeta.diff(simplex[3], simplex[4]).inverse()
    v4, v5 = solve_tail([row.element for row in leading], zetas, inv)
    return leading + [
        VRow(simplex, 4, simplex[3], v4),
        VRow(simplex, 5, simplex[4], v5),
    ]
