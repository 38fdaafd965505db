"""
Сторона хода Пахнера: произведение весов, множители w и интеграл Березина
"""

import logging
from dataclasses import dataclass, field as dataclass_field
from typing import Optional

from field import FieldScalar
from grassmann import (
    Generator, GrassmannAlgebra, GrassmannElement, KIND_A, KIND_B,
    apply_operator, berezin_integrate, product_with_required,
    solve_operator_inverse_of_one,
)
from triangulation import build_lattice
from utils.errors import PachnerError, WNotInverse
from weights import deformed_weight, face_operator, v_rows, weight

logger = logging.getLogger("pachner_grassmann")


def union_algebra(field, lattices):
    """
    Общая алгебра для нескольких кластеров: образующие всех их тетраэдров
    """
    tets = set()
    for lattice in lattices:
        tets.update(lattice.tetrahedra)
    return GrassmannAlgebra.for_tetrahedra(field, sorted(tets))


class MoveSide:
    """
    Одна сторона соотношения для кластера 4-симплексов

    Веса берутся в лексикографическом порядке симплексов, затем по одному
    множителю w на каждый внутренний треугольник; мера - da_t db_t / ζ_kℓ
    для каждого внутреннего тетраэдра t = ijkℓ.
    """
    def __init__(self, cluster, zeta, algebra=None, name=""):
        """
        Args:
            cluster: Триангуляция с заданными ε
            zeta: Координаты вершин
            algebra: Общая алгебра (по умолчанию - по тетраэдрам кластера)
            name: Имя стороны для отчетов
        """
        zeta.covers(cluster.vertex_ids)
        self.cluster = cluster
        self.zeta = zeta
        self.name = name
        self.lattice = build_lattice(cluster)
        self.algebra = algebra or union_algebra(zeta.field, [self.lattice])
        self.inner_tets = list(self.lattice.inner_tetrahedra)
        self.inner_triangles = list(self.lattice.inner_triangles)
        self.measure = [(t, zeta.diff(t[2], t[3])) for t in self.inner_tets]
        self.variables = []
        for t in self.inner_tets:
            self.variables.append(Generator(t, KIND_A))
            self.variables.append(Generator(t, KIND_B))
        self.operators = {s: face_operator(s, self.lattice, zeta) for s in self.inner_triangles}
        self._rows = {u: v_rows(u, zeta, self.algebra) for u in cluster.simplices4}

    @property
    def field(self):
        return self.zeta.field

    def rows(self, simplex):
        return self._rows[tuple(simplex)]

    def weights(self, x=None):
        """
        Веса симплексов (деформированные, если задана x-цепь)
        """
        result = []
        for u in self.cluster.simplices4:
            if x is None:
                result.append(weight(u, self.zeta, rows=self._rows[u]))
            else:
                result.append(deformed_weight(u, self.zeta, x, self.cluster.eps(u), rows=self._rows[u]))
        return result

    def canonical_w(self, choice=0):
        """
        Канонические решения d_s w = 1 для всех внутренних треугольников
        """
        return {s: solve_operator_inverse_of_one(d, self.algebra, choice)
                for s, d in self.operators.items()}

    def resolve_w(self, w_choice):
        """
        Приведение выбора w к словарю треугольник -> элемент

        Args:
            w_choice: None (канонический выбор), элемент (для единственного
                треугольника) или словарь треугольник -> элемент

        Raises:
            WNotInverse: Если d_s w ≠ 1
        """
        if w_choice is None:
            chosen = self.canonical_w()
        elif isinstance(w_choice, GrassmannElement):
            if len(self.inner_triangles) != 1:
                raise PachnerError(
                    f"Сторона имеет {len(self.inner_triangles)} внутренних треугольников, нужен словарь w"
                )
            chosen = {self.inner_triangles[0]: w_choice}
        else:
            chosen = {tuple(sorted(s)): w for s, w in dict(w_choice).items()}
        one = self.algebra.one()
        for s in self.inner_triangles:
            w = chosen.get(s)
            if w is None:
                raise WNotInverse(f"Для треугольника {s} не задан множитель w")
            if apply_operator(self.operators[s], w) != one:
                raise WNotInverse(f"d_{s} w ≠ 1 для w = {w}")
        return chosen

    def measure_scale(self):
        """
        Произведение 1/ζ_kℓ по внутренним тетраэдрам
        """
        scale = self.field.one
        for _, zeta_kl in self.measure:
            scale = scale / zeta_kl
        return scale


def side_integral(side, x=None, w_choice=None, w_factors=True):
    """
    Интеграл стороны: ∫ 𝒲_{u_1} ... 𝒲_{u_n} w_{s_1} ... Π da_t db_t / ζ_kℓ

    Args:
        side: MoveSide
        x: XChain для деформированных весов (None - без деформации)
        w_choice: Выбор w (см. MoveSide.resolve_w)
        w_factors: Включать множители w (False - без них)

    Returns:
        GrassmannElement: Элемент от образующих граничных тетраэдров

    Raises:
        WNotInverse: Если d_s w ≠ 1
    """
    factors = side.weights(x)
    if w_factors and side.inner_triangles:
        chosen = side.resolve_w(w_choice)
        factors.extend(chosen[s] for s in side.inner_triangles)
    product = product_with_required(factors, side.variables)
    result = berezin_integrate(product, side.variables)
    return result.scale(side.measure_scale())


@dataclass
class RelationReport:
    """
    Результат сравнения двух сторон соотношения
    """
    lhs_value: GrassmannElement
    rhs_value: GrassmannElement
    theorem: str = ""
    extra: dict = dataclass_field(default_factory=dict)
    residual: Optional[GrassmannElement] = None

    def __post_init__(self):
        if self.residual is None:
            self.residual = self.lhs_value - self.rhs_value

    @property
    def equal(self):
        return self.residual.is_zero

    def graded_residual(self):
        """
        Число ненулевых членов невязки по степеням
        """
        counts = {}
        for degree in self.residual.degrees():
            counts[degree] = len(self.residual.homogeneous_part(degree))
        return counts

    def ratio(self):
        """
        Множитель c с lhs = c·rhs, если он существует (иначе None)
        """
        if self.rhs_value.is_zero:
            return self.rhs_value.field.zero if self.lhs_value.is_zero else None
        mask = min(self.rhs_value.terms)
        raw = self.rhs_value.terms[mask]
        lhs_raw = self.lhs_value.terms.get(mask)
        if lhs_raw is None:
            return None
        field = self.rhs_value.field
        factor = FieldScalar(field, lhs_raw) / FieldScalar(field, raw)
        return factor if self.rhs_value.scale(factor) == self.lhs_value else None

    def to_json(self):
        """
        Поля отчета для JSON-строки
        """
        data = {
            "theorem": self.theorem,
            "equal": self.equal,
            "residual_terms": len(self.residual),
            "residual_by_degree": {str(d): n for d, n in sorted(self.graded_residual().items())},
            "lhs_degrees": self.lhs_value.degrees(),
            "rhs_degrees": self.rhs_value.degrees(),
            "lhs_terms": len(self.lhs_value),
        }
        data.update(self.extra)
        return data

