"""
Встроенные конфигурации: стороны ходов Пахнера 3→3 и 2→4, граница 5-симплекса
"""

from itertools import combinations

from utils.errors import UnknownName

from .complex import Triangulation, orient_from_reference

PACHNER33_LHS = [(1, 2, 3, 4, 5), (1, 2, 3, 4, 6), (1, 2, 3, 5, 6)]
PACHNER33_RHS = [(1, 2, 4, 5, 6), (1, 3, 4, 5, 6), (2, 3, 4, 5, 6)]
PACHNER24_LHS = [(1, 2, 3, 4, 5), (1, 2, 3, 4, 6)]
PACHNER24_RHS = [(1, 2, 3, 5, 6), (1, 2, 4, 5, 6), (1, 3, 4, 5, 6), (2, 3, 4, 5, 6)]

# Общие граничные тетраэдры двух сторон хода 3→3
COMMON_BOUNDARY_33 = [
    (1, 2, 4, 5), (1, 3, 4, 5), (2, 3, 4, 5),
    (1, 2, 4, 6), (1, 3, 4, 6), (2, 3, 4, 6),
    (1, 2, 5, 6), (1, 3, 5, 6), (2, 3, 5, 6),
]


def _pachner33_lhs():
    return Triangulation(PACHNER33_LHS, 6, epsilon=dict(zip(PACHNER33_LHS, (1, -1, 1))))


def _pachner33_rhs():
    return Triangulation(PACHNER33_RHS, 6, epsilon=dict(zip(PACHNER33_RHS, (1, -1, 1))))


def _pachner24_lhs():
    return orient_from_reference(Triangulation(PACHNER24_LHS, 6), ((1, 2, 3, 4, 5), 1))


def _pachner24_rhs():
    # Знак выбран так, чтобы общая граница ориентировалась так же, как у левой стороны
    return orient_from_reference(Triangulation(PACHNER24_RHS, 6), ((1, 2, 3, 5, 6), -1))


def _boundary_delta5():
    simplices = list(combinations(range(1, 7), 5))
    return orient_from_reference(Triangulation(simplices, 6), ((1, 2, 3, 4, 5), 1))


BUILTINS = {
    "pachner33_lhs": _pachner33_lhs,
    "pachner33_rhs": _pachner33_rhs,
    "pachner24_lhs": _pachner24_lhs,
    "pachner24_rhs": _pachner24_rhs,
    "boundary_delta5": _boundary_delta5,
}


def builtin_names():
    """
    Имена встроенных конфигураций
    """
    return sorted(BUILTINS)


def builtin(name):
    """
    Встроенная триангуляция по имени

    Args:
        name: Одно из имен builtin_names()

    Returns:
        Triangulation: Конфигурация с заданными ε

    Raises:
        UnknownName: Если имя неизвестно
    """
    factory = BUILTINS.get(name)
    if factory is None:
        raise UnknownName(f"Неизвестная конфигурация {name!r}; доступны: {', '.join(builtin_names())}")
    return factory()
