"""
Веса 4-симплексов и операторы d_s внутренних треугольников
"""

import logging

from grassmann import Generator, GrassmannOperator, KIND_A, KIND_B, gr_mul
from utils.errors import FaceNotInner

from .vrows import v_rows

logger = logging.getLogger("pachner_grassmann")


def weight(simplex, zeta, algebra=None, rows=None):
    """
    Вес 𝒲_u = (1/ζ_ℓm) v_{u,1} v_{u,2} v_{u,3}, u = ijkℓm

    Args:
        simplex: Упорядоченный 4-симплекс
        zeta: Координаты вершин
        algebra: Алгебра для результата
        rows: Готовые векторы v_rows (необязательно)

    Returns:
        GrassmannElement: Элемент степени 3
    """
    rows = rows or v_rows(simplex, zeta, algebra)
    u = rows[0].simplex
    product = gr_mul(gr_mul(rows[0].element, rows[1].element), rows[2].element)
    return product.scale(zeta.diff(u[3], u[4]).inverse())


def deformed_weight(simplex, zeta, x, eps, algebra=None, rows=None):
    """
    Деформированный вес 𝒲̃_u = 𝒲_u + ε_u Σ_r x_{u,r} v_{u,r}

    Args:
        simplex: Упорядоченный 4-симплекс
        zeta: Координаты вершин
        x: XChain (отсутствующие значения равны нулю)
        eps: Знак ориентации ε_u
        algebra: Алгебра для результата
        rows: Готовые векторы v_rows (необязательно)

    Returns:
        GrassmannElement: Сумма частей степени 3 и 1
    """
    rows = rows or v_rows(simplex, zeta, algebra)
    result = weight(simplex, zeta, rows=rows)
    u = rows[0].simplex
    for row in rows:
        value = x.get(u, row.vertex)
        if value:
            result = result + row.element.scale(value * eps)
    return result


def tet_face_operator(tetra, triangle, zeta):
    """
    Оператор d_{t,s} для тетраэдра t = ijkℓ и его грани s

    s = ijk: (ζ_jk/ζ_kℓ)∂/∂a_t - (ζ_ik/ζ_kℓ)∂/∂b_t
    s = ijℓ: -(ζ_jℓ/ζ_kℓ)∂/∂a_t + (ζ_iℓ/ζ_kℓ)∂/∂b_t
    s = ikℓ: ∂/∂a_t
    s = jkℓ: -∂/∂b_t
    """
    i, j, k, l = tetra
    a = Generator(tetra, KIND_A)
    b = Generator(tetra, KIND_B)
    field = zeta.field
    triangle = tuple(triangle)
    if triangle == (i, j, k):
        inv = zeta.diff(k, l).inverse()
        terms = [(zeta.diff(j, k) * inv, a), (-zeta.diff(i, k) * inv, b)]
    elif triangle == (i, j, l):
        inv = zeta.diff(k, l).inverse()
        terms = [(-zeta.diff(j, l) * inv, a), (zeta.diff(i, l) * inv, b)]
    elif triangle == (i, k, l):
        terms = [(field.one, a)]
    elif triangle == (j, k, l):
        terms = [(-field.one, b)]
    else:
        raise FaceNotInner(f"Треугольник {triangle} не является гранью {tetra}")
    return GrassmannOperator(field, terms)


def face_operator(triangle, lattice, zeta):
    """
    Оператор d_s = Σ_{t⊃s} d_{t,s} внутреннего треугольника s

    Args:
        triangle: Внутренний треугольник
        lattice: Решетка граней
        zeta: Координаты вершин

    Returns:
        GrassmannOperator: Оператор d_s

    Raises:
        FaceNotInner: Если треугольник не внутренний
    """
    triangle = tuple(sorted(triangle))
    if triangle not in lattice.inner_triangles:
        raise FaceNotInner(f"Треугольник {triangle} не является внутренним")
    result = GrassmannOperator(zeta.field)
    for t in lattice.tetrahedra_containing(triangle):
        result = result + tet_face_operator(t, triangle, zeta)
    return result


def face_operator_from_matrix(triangle, f3_tilde):
    """
    Оператор -Σ_t (f̃₃[(t, первая вершина), s] ∂/∂a_t + f̃₃[(t, вторая вершина), s] ∂/∂b_t)

    Совпадает с face_operator для внутреннего треугольника s.
    """
    triangle = tuple(sorted(triangle))
    col = next(label for label in f3_tilde.cols if label.simplex == triangle)
    terms = []
    for row, value in f3_tilde.column(col).items():
        t = row.simplex
        kind = KIND_A if row.vertex == t[0] else KIND_B
        terms.append((-value, Generator(t, kind)))
    return GrassmannOperator(f3_tilde.field, terms)
