"""
Комбинаторика триангулированного ориентированного 4-многообразия с краем
"""

import logging
from collections import deque
from itertools import combinations

from utils.errors import (
    NotAFacet, TetrahedronInThreeSimplices, OrientationInconsistent,
    NonOrientable, DisconnectedInterior, InputError,
)

logger = logging.getLogger("pachner_grassmann")


def boundary_sign(face, cofac):
    """
    Знак грани в симплициальной границе: (-1)^k, где k - позиция
    (с нуля) выброшенной вершины в cofac

    Args:
        face: Упорядоченный кортеж вершин грани
        cofac: Упорядоченный кортеж вершин симплекса на одну вершину больше

    Returns:
        int: +1 или -1

    Raises:
        NotAFacet: Если face не является гипергранью cofac
    """
    face = tuple(face)
    cofac = tuple(cofac)
    if len(cofac) != len(face) + 1 or not set(face) < set(cofac):
        raise NotAFacet(f"{face} не является гипергранью {cofac}")
    missing = (set(cofac) - set(face)).pop()
    return -1 if cofac.index(missing) % 2 else 1


def opposite_vertex(face, simplex):
    """
    Вершина симплекса, не лежащая в гиперграни
    """
    rest = set(simplex) - set(face)
    if len(rest) != 1:
        raise NotAFacet(f"{tuple(face)} не является гипергранью {tuple(simplex)}")
    return rest.pop()


def faces_of(simplex, size):
    """
    Все грани заданного числа вершин, в лексикографическом порядке
    """
    return list(combinations(simplex, size))


class Triangulation:
    """
    Список 4-симплексов с номерами вершин и знаками ориентации ε_u
    """
    def __init__(self, simplices, n_vertices=None, epsilon=None):
        """
        Инициализация триангуляции

        Args:
            simplices: 4-симплексы как наборы из пяти различных вершин (нумерация с 1)
            n_vertices: Число вершин N₀ (по умолчанию - наибольший номер)
            epsilon: Словарь u -> ±1 (необязательно)

        Raises:
            InputError: Если симплекс задан некорректно
        """
        normalized = []
        for simplex in simplices:
            u = tuple(sorted(int(v) for v in simplex))
            if len(u) != 5 or len(set(u)) != 5:
                raise InputError(f"4-симплекс должен иметь пять различных вершин: {simplex}")
            if u[0] < 1:
                raise InputError(f"Номера вершин начинаются с 1: {simplex}")
            normalized.append(u)
        if not normalized:
            raise InputError("Триангуляция не содержит 4-симплексов")
        if len(set(normalized)) != len(normalized):
            raise InputError("4-симплексы повторяются")
        self.simplices4 = tuple(sorted(normalized))
        self.vertex_ids = tuple(sorted({v for u in self.simplices4 for v in u}))
        self.n_vertices = n_vertices if n_vertices is not None else self.vertex_ids[-1]
        if self.vertex_ids[-1] > self.n_vertices:
            raise InputError(f"Номер вершины {self.vertex_ids[-1]} больше N₀ = {self.n_vertices}")
        self.epsilon = None
        if epsilon is not None:
            self.epsilon = {tuple(sorted(u)): int(s) for u, s in dict(epsilon).items()}
            if set(self.epsilon) != set(self.simplices4):
                raise InputError("Знаки ориентации заданы не для всех 4-симплексов")
            if any(s not in (1, -1) for s in self.epsilon.values()):
                raise InputError("Знак ориентации должен быть +1 или -1")

    @classmethod
    def single(cls, simplex):
        """
        Триангуляция из одного 4-симплекса с ε = +1
        """
        u = tuple(sorted(simplex))
        return cls([u], epsilon={u: 1})

    @property
    def oriented(self):
        return self.epsilon is not None

    def with_epsilon(self, epsilon):
        """
        Копия с другими знаками ориентации
        """
        return Triangulation(self.simplices4, self.n_vertices, epsilon)

    def eps(self, simplex):
        """
        Знак ориентации ε_u

        Raises:
            InputError: Если ориентация не задана
        """
        if self.epsilon is None:
            raise InputError("Ориентация триангуляции не задана")
        return self.epsilon[tuple(simplex)]

    def __len__(self):
        return len(self.simplices4)

    def __eq__(self, other):
        return (isinstance(other, Triangulation)
                and other.simplices4 == self.simplices4
                and other.epsilon == self.epsilon)

    def __hash__(self):
        return hash(self.simplices4)

    def __repr__(self):
        return f"Triangulation({len(self.simplices4)} симплексов, N₀={self.n_vertices})"


class FaceLattice:
    """
    Решетка граней с разделением на внутренние и граничные

    Тетраэдр граничный, если лежит ровно в одном 4-симплексе; грань меньшей
    размерности граничная, если лежит в каком-нибудь граничном тетраэдре.
    """
    def __init__(self, triangulation):
        """
        Построение решетки граней

        Args:
            triangulation: Триангуляция

        Raises:
            TetrahedronInThreeSimplices: Если тетраэдр лежит более чем в двух 4-симплексах
            OrientationInconsistent: Если заданные ε несогласованы
        """
        self.triangulation = triangulation
        self.cofaces = {}
        for u in triangulation.simplices4:
            for t in faces_of(u, 4):
                self.cofaces.setdefault(t, []).append(u)
        for t, owners in self.cofaces.items():
            if len(owners) > 2:
                raise TetrahedronInThreeSimplices(
                    f"Тетраэдр {t} лежит в {len(owners)} 4-симплексах"
                )

        self.tetrahedra = sorted(self.cofaces)
        self.boundary_tetrahedra = [t for t in self.tetrahedra if len(self.cofaces[t]) == 1]
        self.inner_tetrahedra = [t for t in self.tetrahedra if len(self.cofaces[t]) == 2]

        boundary_faces = set()
        for t in self.boundary_tetrahedra:
            for size in (1, 2, 3):
                boundary_faces.update(faces_of(t, size))

        def collect(size):
            return sorted({f for u in triangulation.simplices4 for f in faces_of(u, size)})

        self.triangles = collect(3)
        self.edges = collect(2)
        self.vertices = collect(1)
        self.inner_triangles = [s for s in self.triangles if s not in boundary_faces]
        self.inner_edges = [e for e in self.edges if e not in boundary_faces]
        self.inner_vertices = [v[0] for v in self.vertices if v not in boundary_faces]

        self._inner = set(self.inner_tetrahedra) | set(self.inner_triangles) | set(self.inner_edges)
        self._inner.update((v,) for v in self.inner_vertices)

        if triangulation.oriented:
            self._check_orientation()

    def _check_orientation(self):
        tri = self.triangulation
        for t in self.inner_tetrahedra:
            u, v = self.cofaces[t]
            induced = boundary_sign(t, u) * tri.eps(u) + boundary_sign(t, v) * tri.eps(v)
            if induced != 0:
                raise OrientationInconsistent(
                    f"Тетраэдр {t} получает одинаковую ориентацию из {u} и {v}"
                )

    def is_inner(self, face):
        """
        Является ли грань (тетраэдр, треугольник, ребро, вершина) внутренней
        """
        return tuple(face) in self._inner

    def simplices_containing(self, face):
        """
        4-симплексы, содержащие грань
        """
        face = set(face)
        return [u for u in self.triangulation.simplices4 if face <= set(u)]

    def tetrahedra_containing(self, face):
        """
        Тетраэдры триангуляции, содержащие грань
        """
        face = set(face)
        return [t for t in self.tetrahedra if face <= set(t)]

    def summary(self):
        """
        Число граней каждого вида для отчетов
        """
        return {
            "simplices4": len(self.triangulation.simplices4),
            "tetrahedra": len(self.tetrahedra),
            "inner_tetrahedra": len(self.inner_tetrahedra),
            "triangles": len(self.triangles),
            "inner_triangles": len(self.inner_triangles),
            "edges": len(self.edges),
            "inner_edges": len(self.inner_edges),
            "vertices": len(self.vertices),
            "inner_vertices": len(self.inner_vertices),
        }


def build_lattice(triangulation):
    """
    Построение решетки граней триангуляции

    Args:
        triangulation: Триангуляция

    Returns:
        FaceLattice: Решетка граней
    """
    return FaceLattice(triangulation)


def orient_from_reference(triangulation, reference):
    """
    Распространение ориентации от опорного 4-симплекса

    Соседние по тетраэдру t симплексы u, v получают ε так, что
    boundary_sign(t, u)·ε_u = -boundary_sign(t, v)·ε_v.

    Args:
        triangulation: Триангуляция
        reference: Пара (u, ±1) - опорный симплекс и его знак

    Returns:
        Triangulation: Триангуляция с заполненными ε

    Raises:
        NonOrientable: Если распространение противоречиво
        DisconnectedInterior: Если двойственный граф несвязен
    """
    start, sign = reference
    start = tuple(sorted(start))
    if start not in triangulation.simplices4:
        raise InputError(f"Опорный симплекс {start} не принадлежит триангуляции")
    if sign not in (1, -1):
        raise InputError("Знак опорного симплекса должен быть +1 или -1")
    lattice = FaceLattice(triangulation.with_epsilon(None))

    neighbours = {u: [] for u in triangulation.simplices4}
    for t in lattice.inner_tetrahedra:
        u, v = lattice.cofaces[t]
        neighbours[u].append((t, v))
        neighbours[v].append((t, u))

    epsilon = {start: sign}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for t, v in neighbours[u]:
            expected = -boundary_sign(t, u) * boundary_sign(t, v) * epsilon[u]
            if v in epsilon:
                if epsilon[v] != expected:
                    raise NonOrientable(f"Противоречие ориентаций на тетраэдре {t}")
                continue
            epsilon[v] = expected
            queue.append(v)

    if len(epsilon) != len(triangulation.simplices4):
        missing = sorted(set(triangulation.simplices4) - set(epsilon))
        raise DisconnectedInterior(f"Симплексы {missing} недостижимы от {start}")
    logger.debug(f"Ориентация распространена от {start} на {len(epsilon)} симплексов")
    return triangulation.with_epsilon(epsilon)
