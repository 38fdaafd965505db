"""
Проверки соотношений для хода 3→3 и исследование хода 2→4
"""

import logging

from grassmann import Generator, KIND_A, KIND_B
from triangulation import COMMON_BOUNDARY_33, build_lattice, builtin
from utils.errors import InputError, UnsupportedTetrahedron
from weights import XChain, random_xchain, xchain_from_tet_chain

from .move import MoveSide, RelationReport, side_integral, union_algebra

logger = logging.getLogger("pachner_grassmann")

ASSEMBLIES = ("plain", "w-factors")


class PachnerMove:
    """
    Две стороны хода в общей алгебре образующих всех тетраэдров
    """
    def __init__(self, lhs_cluster, rhs_cluster, zeta):
        """
        Args:
            lhs_cluster: Кластер левой стороны
            rhs_cluster: Кластер правой стороны
            zeta: Координаты вершин
        """
        self.zeta = zeta
        algebra = union_algebra(zeta.field, [build_lattice(lhs_cluster), build_lattice(rhs_cluster)])
        self.lhs = MoveSide(lhs_cluster, zeta, algebra, "lhs")
        self.rhs = MoveSide(rhs_cluster, zeta, algebra, "rhs")
        self.algebra = algebra

    @classmethod
    def move_33(cls, zeta):
        return cls(builtin("pachner33_lhs"), builtin("pachner33_rhs"), zeta)

    @classmethod
    def move_24(cls, zeta):
        return cls(builtin("pachner24_lhs"), builtin("pachner24_rhs"), zeta)

    @property
    def field(self):
        return self.zeta.field

    def side(self, name):
        """
        Сторона по имени "lhs" или "rhs"
        """
        if name == "lhs":
            return self.lhs
        if name == "rhs":
            return self.rhs
        raise InputError(f"Сторона должна быть lhs или rhs, получено {name!r}")

    def common_boundary(self):
        """
        Граничные тетраэдры, общие для обеих сторон
        """
        return sorted(set(self.lhs.lattice.boundary_tetrahedra)
                      & set(self.rhs.lattice.boundary_tetrahedra))


def standard_w_lhs(move):
    """
    w₁₂₃ = ζ₂₃⁻¹ ζ₃₄ a₁₂₃₄
    """
    zeta = move.zeta
    coeff = zeta.diff(3, 4) / zeta.diff(2, 3)
    return move.algebra.gen(Generator((1, 2, 3, 4), KIND_A), coeff)


def standard_w_rhs(move):
    """
    w₄₅₆ = -b₁₄₅₆
    """
    return move.algebra.gen(Generator((1, 4, 5, 6), KIND_B), -1)


def verify_33(zeta, w_lhs=None, w_rhs=None, move=None):
    """
    Соотношение хода 3→3 без деформации

    Args:
        zeta: Координаты вершин 1..6
        w_lhs: Множитель w₁₂₃ (по умолчанию ζ₂₃⁻¹ζ₃₄a₁₂₃₄)
        w_rhs: Множитель w₄₅₆ (по умолчанию -b₁₄₅₆)
        move: Готовый PachnerMove (необязательно)

    Returns:
        RelationReport: Сравнение сторон

    Raises:
        WNotInverse: Если выбранный w не удовлетворяет d_s w = 1
    """
    move = move or PachnerMove.move_33(zeta)
    w_lhs = w_lhs if w_lhs is not None else standard_w_lhs(move)
    w_rhs = w_rhs if w_rhs is not None else standard_w_rhs(move)
    lhs = side_integral(move.lhs, w_choice=w_lhs)
    rhs = side_integral(move.rhs, w_choice=w_rhs)
    return RelationReport(lhs, rhs, theorem="33")


def verify_w_independence(zeta, move=None):
    """
    Интеграл каждой стороны не зависит от выбора решения d_s w = 1

    Сравниваются решения по первой и по последней образующей оператора d_s.

    Returns:
        list: Два RelationReport (левая и правая стороны)
    """
    move = move or PachnerMove.move_33(zeta)
    reports = []
    for side in (move.lhs, move.rhs):
        first = side_integral(side, w_choice=side.canonical_w(0))
        last = side_integral(side, w_choice=side.canonical_w(-1))
        reports.append(RelationReport(first, last, theorem="w", extra={"side": side.name}))
    return reports


def _check_common(coeffs):
    allowed = set(COMMON_BOUNDARY_33)
    normalized = {}
    for t, value in coeffs.items():
        t = tuple(sorted(t))
        if t not in allowed:
            raise UnsupportedTetrahedron(f"Тетраэдр {t} не лежит на общей границе сторон")
        normalized[t] = value
    return normalized


def verify_d1(zeta, boundary_tet_coeffs, move=None):
    """
    Деформированное соотношение 3→3 для x-цепей от общей цепи граничных тетраэдров

    Args:
        zeta: Координаты вершин 1..6
        boundary_tet_coeffs: Словарь тетраэдр -> значение на девяти общих
            граничных тетраэдрах
        move: Готовый PachnerMove (необязательно)

    Returns:
        RelationReport: Сравнение деформированных сторон

    Raises:
        UnsupportedTetrahedron: Коэффициент вне общей границы
    """
    coeffs = _check_common(boundary_tet_coeffs)
    move = move or PachnerMove.move_33(zeta)
    chains = {}
    for side in (move.lhs, move.rhs):
        chains[side.name] = xchain_from_tet_chain(
            coeffs, side.cluster, side.lattice, move.field, include_boundary=True
        )
    lhs = side_integral(move.lhs, chains["lhs"], w_choice=standard_w_lhs(move))
    rhs = side_integral(move.rhs, chains["rhs"], w_choice=standard_w_rhs(move))
    return RelationReport(lhs, rhs, theorem="d1")


def verify_b(side, zeta, base_x, inner_tet_coeffs, move=None):
    """
    Интеграл стороны не меняется при добавлении к x-цепи образа цепи
    внутренних тетраэдров

    Args:
        side: MoveSide или имя стороны хода 3→3 ("lhs", "rhs")
        zeta: Координаты вершин
        base_x: Исходная x-цепь (None - нулевая)
        inner_tet_coeffs: Словарь внутренний тетраэдр -> значение
        move: Готовый PachnerMove (необязательно)

    Returns:
        RelationReport: Сравнение интеграла до и после сдвига; флаг - поле equal

    Raises:
        BoundaryTetWithoutFlag: Коэффициент на граничном тетраэдре
    """
    if isinstance(side, str):
        move = move or PachnerMove.move_33(zeta)
        side = move.side(side)
    base_x = base_x if base_x is not None else XChain(side.field)
    shift = xchain_from_tet_chain(inner_tet_coeffs, side.cluster, side.lattice, side.field)
    before = side_integral(side, base_x)
    after = side_integral(side, base_x + shift)
    return RelationReport(before, after, theorem="b", extra={"side": side.name})


def boundary_chain(tets, field, rng):
    """
    Случайная цепь на заданных тетраэдрах
    """
    return {t: field.random(rng) for t in tets}


def explore_24(zeta, deform="none", assembly="plain", rng=None, move=None):
    """
    Сравнение сторон хода 2→4 для разных сборок и деформаций (без контракта)

    Args:
        zeta: Координаты вершин 1..6
        deform: "none", "boundary" (одна цепь на общих граничных тетраэдрах)
            или "random" (независимые x-цепи сторон)
        assembly: "plain" (без множителей w) или "w-factors"
        rng: Генератор случайных чисел (нужен для деформаций)
        move: Готовый PachnerMove (необязательно)

    Returns:
        RelationReport: Отчет с невязкой, профилем степеней и пропорциональностью
    """
    if assembly not in ASSEMBLIES:
        raise InputError(f"Неизвестная сборка {assembly!r}; доступны: {', '.join(ASSEMBLIES)}")
    move = move or PachnerMove.move_24(zeta)
    field = move.field
    chains = {"lhs": None, "rhs": None}
    if deform == "boundary":
        coeffs = boundary_chain(move.common_boundary(), field, rng)
        for side in (move.lhs, move.rhs):
            chains[side.name] = xchain_from_tet_chain(
                coeffs, side.cluster, side.lattice, field, include_boundary=True
            )
    elif deform == "random":
        for side in (move.lhs, move.rhs):
            chains[side.name] = random_xchain(side.cluster, field, rng)
    elif deform != "none":
        raise InputError(f"Неизвестный режим деформации: {deform}")

    with_w = assembly == "w-factors"
    lhs = side_integral(move.lhs, chains["lhs"], w_factors=with_w)
    rhs = side_integral(move.rhs, chains["rhs"], w_factors=with_w)
    report = RelationReport(lhs, rhs, theorem="24")
    ratio = report.ratio()
    report.extra.update({
        "assembly": assembly,
        "deform": deform,
        "proportional": ratio is not None,
        "ratio": str(ratio) if ratio is not None else None,
    })
    logger.debug(f"2→4 ({assembly}, {deform}): невязка {len(report.residual)} членов")
    return report
