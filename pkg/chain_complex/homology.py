"""
Размерности гомологий над полем: экзотические комплексы и обычные
симплициальные гомологии для сравнения
"""

import logging
from itertools import combinations

from triangulation import boundary_sign
from utils.errors import NotAComplex, PachnerError

from .matrix import BasisLabel, ExactMatrix

logger = logging.getLogger("pachner_grassmann")


def check_complex(maps):
    """
    Проверка, что соседние отображения согласованы и дают ноль в композиции

    Args:
        maps: Список ExactMatrix d_1, d_2, ... (d_{k+1} ∘ d_k)

    Raises:
        NotAComplex: Если композиция ненулевая
    """
    for k in range(len(maps) - 1):
        inner, outer = maps[k], maps[k + 1]
        if outer.cols != inner.rows:
            raise PachnerError(f"Отображения {k} и {k + 1} не согласованы по базисам")
        product = outer.compose(inner)
        if not product.is_zero():
            raise NotAComplex(
                f"Композиция отображений {k} и {k + 1} ненулевая: {product.nnz()} элементов"
            )


def homology_dims(maps):
    """
    Размерности гомологий в каждом члене комплекса

    В члене C_k: dim ker(исходящее) - rank(входящее).

    Args:
        maps: Непустой список ExactMatrix по порядку

    Returns:
        list: Размерности для членов C_0, ..., C_n (n = len(maps))

    Raises:
        NotAComplex: Если композиция соседних отображений ненулевая
    """
    if not maps:
        return []
    check_complex(maps)
    ranks = [m.rank() for m in maps]
    dims = [len(maps[0].cols)] + [len(m.rows) for m in maps]
    result = []
    for k, dim in enumerate(dims):
        incoming = ranks[k - 1] if k > 0 else 0
        outgoing = ranks[k] if k < len(maps) else 0
        result.append(dim - outgoing - incoming)
    return result


def homology_report(named_maps):
    """
    Отчет по комплексу: размерности членов, ранги и гомологии

    Args:
        named_maps: Список пар (имя, ExactMatrix)

    Returns:
        dict: {"maps": [...], "dims": [...], "ranks": [...], "homology": [...]}
    """
    maps = [m for _, m in named_maps]
    homology = homology_dims(maps)
    return {
        "maps": [name for name, _ in named_maps],
        "dims": [len(maps[0].cols)] + [len(m.rows) for m in maps] if maps else [],
        "ranks": [m.rank() for m in maps],
        "homology": homology,
    }


def simplicial_boundary(field, faces, cofaces, space):
    """
    Матрица симплициального граничного оператора C_k → C_{k-1}

    Args:
        field: Поле
        faces: Список (k-1)-граней (строки)
        cofaces: Список k-граней (столбцы)
        space: Префикс меток ("C" или "R")

    Returns:
        ExactMatrix: Граничный оператор
    """
    rows = [BasisLabel(f"{space}{len(f) - 1}", f) for f in faces]
    cols = [BasisLabel(f"{space}{len(c) - 1}", c) for c in cofaces]
    columns = []
    for c in cofaces:
        columns.append({
            BasisLabel(f"{space}{len(c) - 2}", f): field(boundary_sign(f, c))
            for f in combinations(c, len(c) - 1)
        })
    return ExactMatrix.from_columns(field, rows, cols, columns)


def simplicial_homology_dims(triangulation, lattice, field, relative=False):
    """
    Числа Бетти триангуляции над полем

    Args:
        triangulation: Триангуляция
        lattice: Решетка граней
        field: Поле
        relative: Гомологии по модулю края (только внутренние грани)

    Returns:
        list: b_0, ..., b_4
    """
    if relative:
        levels = [
            [(v,) for v in lattice.inner_vertices],
            lattice.inner_edges,
            lattice.inner_triangles,
            lattice.inner_tetrahedra,
            list(triangulation.simplices4),
        ]
        space = "R"
    else:
        levels = [
            lattice.vertices,
            lattice.edges,
            lattice.triangles,
            lattice.tetrahedra,
            list(triangulation.simplices4),
        ]
        space = "C"
    ranks = [0] * 6
    for k in range(1, 5):
        ranks[k] = simplicial_boundary(field, levels[k - 1], levels[k], space).rank()
    betti = [len(levels[k]) - ranks[k] - ranks[k + 1] for k in range(5)]
    logger.debug(f"Числа Бетти ({'относительные' if relative else 'абсолютные'}): {betti}")
    return betti
