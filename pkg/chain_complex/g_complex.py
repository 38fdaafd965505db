"""
Комплекс g: 0 → (внутренние вершины) → (внутренние тетраэдры) → (средний член)
→ (внутренние ориентированные ребра) → 2·(внутренние вершины) → 0

Средний член порождается векторами e_{u,i} (4-симплекс u, вершина i ∈ u) с
соотношениями Σ_i e_{u,i} = 0, Σ_i ζ_i e_{u,i} = 0 для каждого u. Вектор
хранится в канонической форме: две последние координаты каждого симплекса
равны нулю.
"""

import logging
from dataclasses import dataclass, field as dataclass_field
from itertools import combinations

from triangulation import opposite_vertex
from utils.errors import TriangleNotInSimplex

from .matrix import BasisLabel, ExactMatrix

logger = logging.getLogger("pachner_grassmann")


def permutation_sign(sequence):
    """
    Знак перестановки, переводящей sequence в возрастающий порядок
    """
    sequence = list(sequence)
    inversions = 0
    for a in range(len(sequence)):
        for b in range(a + 1, len(sequence)):
            if sequence[a] > sequence[b]:
                inversions += 1
    return -1 if inversions % 2 else 1


def canonicalize(simplex, coords, zeta):
    """
    Каноническая форма набора (x_{u,1}, ..., x_{u,5})

    Вычитается α·(1,...,1) + β·(ζ_1,...,ζ_5) так, чтобы две последние
    координаты обнулились.

    Args:
        simplex: 4-симплекс u
        coords: Словарь вершина -> значение (отсутствующие равны нулю)
        zeta: Координаты вершин

    Returns:
        dict: Вершина -> значение для трех первых вершин u
    """
    field = zeta.field
    values = [field(coords.get(v, 0)) for v in simplex]
    p, q = simplex[3], simplex[4]
    beta = (values[3] - values[4]) / zeta.diff(p, q)
    alpha = values[3] - beta * zeta[p]
    return {v: values[r] - alpha - beta * zeta[v] for r, v in enumerate(simplex[:3])}


@dataclass
class GComplexVector:
    """
    Вектор среднего члена: для каждого 4-симплекса пять координат x_{u,i}
    """
    values: dict = dataclass_field(default_factory=dict)

    def coordinates(self, simplex):
        """
        Координаты симплекса как словарь вершина -> значение
        """
        return self.values.get(tuple(simplex), {})

    def add(self, simplex, vertex, value):
        coords = self.values.setdefault(tuple(simplex), {})
        coords[vertex] = coords[vertex] + value if vertex in coords else value

    def canonical(self, zeta, simplices=None):
        """
        Каноническая форма: словарь BasisLabel("M", u, v) -> значение
        (только ненулевые)
        """
        result = {}
        for u in sorted(simplices if simplices is not None else self.values):
            for vertex, value in canonicalize(u, self.coordinates(u), zeta).items():
                if value:
                    result[BasisLabel("M", u, vertex)] = value
        return result

    def equivalent(self, other, zeta):
        """
        Равенство как векторов среднего члена (с учетом соотношений)
        """
        simplices = set(self.values) | set(other.values)
        return self.canonical(zeta, simplices) == other.canonical(zeta, simplices)


def middle_basis(triangulation):
    """
    Базис среднего члена: (u, первые три вершины u)
    """
    return [BasisLabel("M", u, v) for u in triangulation.simplices4 for v in u[:3]]


def triangle_invariant(x, simplex, triangle, zeta):
    """
    y_ijk = ζ_jk x_{u,i} + ζ_ki x_{u,j} + ζ_ij x_{u,k}

    Args:
        x: GComplexVector или словарь вершина -> значение
        simplex: 4-симплекс u
        triangle: Треугольник ijk ⊂ u
        zeta: Координаты вершин

    Returns:
        FieldScalar: Значение y_ijk

    Raises:
        TriangleNotInSimplex: Если треугольник не лежит в u
    """
    simplex = tuple(simplex)
    triangle = tuple(triangle)
    if len(triangle) != 3 or not set(triangle) <= set(simplex):
        raise TriangleNotInSimplex(f"Треугольник {triangle} не лежит в {simplex}")
    coords = x.coordinates(simplex) if isinstance(x, GComplexVector) else x
    field = zeta.field
    i, j, k = sorted(triangle)
    x_i = field(coords.get(i, 0))
    x_j = field(coords.get(j, 0))
    x_k = field(coords.get(k, 0))
    return zeta.diff(j, k) * x_i + zeta.diff(k, i) * x_j + zeta.diff(i, j) * x_k


def build_g2(triangulation, lattice, zeta):
    """
    Матрица g₂: g₂(e_i) = Σ_{t∋i} 1/(ζ_ij ζ_ik ζ_iℓ) e_t

    Returns:
        ExactMatrix: (внутренние тетраэдры) × (внутренние вершины)
    """
    cols = [BasisLabel("V0", (v,)) for v in lattice.inner_vertices]
    rows = [BasisLabel("T", t) for t in lattice.inner_tetrahedra]
    columns = []
    for col in cols:
        i = col.simplex[0]
        image = {}
        for t in lattice.inner_tetrahedra:
            if i not in t:
                continue
            product = zeta.field.one
            for other in t:
                if other != i:
                    product = product * zeta.diff(i, other)
            image[BasisLabel("T", t)] = product.inverse()
        columns.append(image)
    return ExactMatrix.from_columns(zeta.field, rows, cols, columns)


def tet_chain_image(triangulation, lattice, coeffs):
    """
    Аналог g₃ на цепи тетраэдров: каждому t с коэффициентом c и каждому u ⊃ t
    добавляется c к x_{u, вершина u напротив t}

    Args:
        triangulation: Триангуляция
        lattice: Решетка граней
        coeffs: Словарь тетраэдр -> значение

    Returns:
        GComplexVector: Вектор среднего члена (до канонизации)
    """
    vector = GComplexVector()
    for t, value in coeffs.items():
        t = tuple(sorted(t))
        for u in lattice.cofaces.get(t, []):
            vector.add(u, opposite_vertex(t, u), value)
    return vector


def build_g3(triangulation, lattice, zeta, include_boundary=False):
    """
    Матрица g₃: g₃(e_t) = Σ_{u⊃t} e_{u, вершина напротив t}

    Args:
        triangulation: Триангуляция
        lattice: Решетка граней
        zeta: Координаты вершин
        include_boundary: Включать граничные тетраэдры (по одному слагаемому)

    Returns:
        ExactMatrix: (средний член, канонический базис) × (тетраэдры)
    """
    tets = lattice.tetrahedra if include_boundary else lattice.inner_tetrahedra
    cols = [BasisLabel("T", t) for t in tets]
    rows = middle_basis(triangulation)
    columns = []
    for t in tets:
        vector = tet_chain_image(triangulation, lattice, {t: zeta.field.one})
        columns.append(vector.canonical(zeta))
    return ExactMatrix.from_columns(zeta.field, rows, cols, columns)


def simplex_g4_terms(simplex, coords, zeta):
    """
    Слагаемые g₄ от одного 4-симплекса без знака ε_u

    Для каждого треугольника abc ⊂ u и дополнительного ребра de:
    знак перестановки (a, b, c, d, e) · y_abc · e_de.

    Returns:
        dict: Ребро (d, e) -> значение
    """
    result = {}
    for triangle in combinations(simplex, 3):
        y = triangle_invariant(coords, simplex, triangle, zeta)
        if not y:
            continue
        edge = tuple(v for v in simplex if v not in triangle)
        sign = permutation_sign(triangle + edge)
        result[edge] = y * sign
    return result


def build_g4(triangulation, lattice, zeta):
    """
    Матрица g₄: g₄(x) = Σ_u ε_u Σ_{abc⊂u} sign·y_abc e_de по внутренним ребрам

    Returns:
        ExactMatrix: (внутренние ребра) × (средний член)
    """
    cols = middle_basis(triangulation)
    rows = [BasisLabel("E", e) for e in lattice.inner_edges]
    columns = []
    for col in cols:
        u = col.simplex
        eps = triangulation.eps(u)
        terms = simplex_g4_terms(u, {col.vertex: zeta.field.one}, zeta)
        columns.append({BasisLabel("E", edge): value * eps for edge, value in terms.items()})
    return ExactMatrix.from_columns(zeta.field, rows, cols, columns)


def build_g5(triangulation, lattice, zeta):
    """
    Матрица g₅: g₅(e_ab) = e*_a + ζ_b f*_a - e*_b - ζ_a f*_b

    Returns:
        ExactMatrix: (e*, f* внутренних вершин) × (внутренние ребра)
    """
    cols = [BasisLabel("E", e) for e in lattice.inner_edges]
    rows = []
    for v in lattice.inner_vertices:
        rows.append(BasisLabel("E*", (v,)))
        rows.append(BasisLabel("F*", (v,)))
    columns = []
    for col in cols:
        a, b = col.simplex
        columns.append({
            BasisLabel("E*", (a,)): zeta.field.one,
            BasisLabel("F*", (a,)): zeta[b],
            BasisLabel("E*", (b,)): -zeta.field.one,
            BasisLabel("F*", (b,)): -zeta[a],
        })
    return ExactMatrix.from_columns(zeta.field, rows, cols, columns)


@dataclass
class GComplex:
    """
    Набор матриц комплекса g для одной триангуляции
    """
    g2: ExactMatrix
    g3: ExactMatrix
    g4: ExactMatrix
    g5: ExactMatrix

    def maps(self):
        return [("g2", self.g2), ("g3", self.g3), ("g4", self.g4), ("g5", self.g5)]


def build_g_complex(triangulation, lattice, zeta):
    """
    Все матрицы комплекса g

    Returns:
        GComplex: Матрицы комплекса
    """
    zeta.covers(triangulation.vertex_ids)
    complex_ = GComplex(
        g2=build_g2(triangulation, lattice, zeta),
        g3=build_g3(triangulation, lattice, zeta),
        g4=build_g4(triangulation, lattice, zeta),
        g5=build_g5(triangulation, lattice, zeta),
    )
    logger.debug(f"Комплекс g построен: g3 {complex_.g3.shape}, g4 {complex_.g4.shape}")
    return complex_
