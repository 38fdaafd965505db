"""
x-цепи: числа x_{u,i} по парам (4-симплекс, вершина)
"""

import logging

from chain_complex import (
    BasisLabel, ExactMatrix, GComplexVector, tet_chain_image, build_g3, build_g4, middle_basis,
)
from utils.errors import BoundaryTetWithoutFlag, InputError

logger = logging.getLogger("pachner_grassmann")


class XChain:
    """
    Присваивание скаляров парам (4-симплекс, вершина); отсутствующие равны нулю
    """
    def __init__(self, field, values=None):
        """
        Args:
            field: Поле значений
            values: Словарь (симплекс, вершина) -> значение
        """
        self.field = field
        self.values = {}
        for (simplex, vertex), value in (values or {}).items():
            self.add(simplex, vertex, value)

    def get(self, simplex, vertex):
        return self.values.get((tuple(simplex), vertex), self.field.zero)

    def add(self, simplex, vertex, value):
        simplex = tuple(sorted(simplex))
        if vertex not in simplex:
            raise InputError(f"Вершина {vertex} не лежит в симплексе {simplex}")
        key = (simplex, vertex)
        total = self.values.get(key, self.field.zero) + self.field(value)
        if total:
            self.values[key] = total
        else:
            self.values.pop(key, None)

    def __add__(self, other):
        if not isinstance(other, XChain):
            return NotImplemented
        result = XChain(self.field, self.values)
        for (simplex, vertex), value in other.values.items():
            result.add(simplex, vertex, value)
        return result

    def restricted(self, simplices):
        """
        Цепь на подмножестве симплексов
        """
        keep = {tuple(u) for u in simplices}
        return XChain(self.field, {k: v for k, v in self.values.items() if k[0] in keep})

    def __bool__(self):
        return bool(self.values)

    def __eq__(self, other):
        return (isinstance(other, XChain)
                and other.field == self.field
                and other.values == self.values)

    __hash__ = None

    def __repr__(self):
        return f"XChain({len(self.values)} ненулевых, {self.field.tag})"

    def to_json(self):
        return {"chain": [[list(u), v, str(value)]
                          for (u, v), value in sorted(self.values.items())]}


def random_xchain(triangulation, field, rng):
    """
    Случайная x-цепь на всех парах (симплекс, вершина)
    """
    chain = XChain(field)
    for u in triangulation.simplices4:
        for vertex in u:
            chain.add(u, vertex, field.random(rng))
    return chain


def xchain_from_tet_chain(coeffs, triangulation, lattice, field, include_boundary=False):
    """
    x-цепь, порожденная цепью тетраэдров

    Для каждого тетраэдра t с коэффициентом c и каждого u ⊃ t к
    x_{u, вершина напротив t} добавляется c.

    Args:
        coeffs: Словарь тетраэдр -> значение
        triangulation: Триангуляция
        lattice: Решетка граней
        field: Поле значений
        include_boundary: Разрешить граничные тетраэдры

    Returns:
        XChain: Цепь

    Raises:
        BoundaryTetWithoutFlag: Граничный тетраэдр без разрешающего флага
        InputError: Тетраэдр не принадлежит триангуляции
    """
    normalized = {}
    for t, value in coeffs.items():
        t = tuple(sorted(t))
        if t not in lattice.cofaces:
            raise InputError(f"Тетраэдр {t} не принадлежит триангуляции")
        if not include_boundary and not lattice.is_inner(t):
            raise BoundaryTetWithoutFlag(f"Тетраэдр {t} граничный")
        normalized[t] = field(value)
    vector = tet_chain_image(triangulation, lattice, normalized)
    chain = XChain(field)
    for u, coords in vector.values.items():
        for vertex, value in coords.items():
            chain.add(u, vertex, value)
    return chain


def xchain_to_middle(x, triangulation, zeta):
    """
    Вектор среднего члена комплекса g, соответствующий x-цепи

    Returns:
        GComplexVector: Вектор со всеми симплексами триангуляции
    """
    vector = GComplexVector()
    for u in triangulation.simplices4:
        for vertex in u:
            value = x.get(u, vertex)
            if value:
                vector.add(u, vertex, value)
    return vector


def _middle_column(x, triangulation, zeta):
    canonical = xchain_to_middle(x, triangulation, zeta).canonical(zeta, triangulation.simplices4)
    return ExactMatrix.from_columns(zeta.field, middle_basis(triangulation), [BasisLabel("X", ())], [canonical])


def is_cycle(x, triangulation, lattice, zeta):
    """
    Является ли x-цепь циклом: g₄ переводит ее в ноль
    """
    g4 = build_g4(triangulation, lattice, zeta)
    column = _middle_column(x, triangulation, zeta)
    return g4.compose(column).is_zero()


def is_boundary(x, triangulation, lattice, zeta):
    """
    Лежит ли x-цепь (как вектор среднего члена) в образе g₃ на внутренних тетраэдрах
    """
    g3 = build_g3(triangulation, lattice, zeta)
    column = _middle_column(x, triangulation, zeta)
    if column.is_zero():
        return True
    return g3.hstack(column).rank() == g3.rank()
