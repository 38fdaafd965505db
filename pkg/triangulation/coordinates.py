"""
Координаты ζ_i вершин
"""

import logging

from field import Field, make_rng
from utils.errors import CoordinateCollision, FieldTooSmall, InputError

logger = logging.getLogger("pachner_grassmann")


class VertexCoordinates:
    """
    Попарно различные координаты ζ_i и их разности ζ_ij = ζ_i - ζ_j
    """
    def __init__(self, field, zeta):
        """
        Args:
            field: Поле координат
            zeta: Словарь номер вершины -> значение (int, строка или FieldScalar)

        Raises:
            CoordinateCollision: Если две координаты совпадают
        """
        self.field = field
        self.zeta = {int(v): field(value) for v, value in dict(zeta).items()}
        seen = {}
        for vertex in sorted(self.zeta):
            value = self.zeta[vertex]
            if value in seen:
                raise CoordinateCollision(
                    f"ζ_{seen[value]} = ζ_{vertex} = {value}"
                )
            seen[value] = vertex
        self._diff = {}

    def __getitem__(self, vertex):
        try:
            return self.zeta[vertex]
        except KeyError:
            raise InputError(f"Координата вершины {vertex} не задана")

    def __contains__(self, vertex):
        return vertex in self.zeta

    def vertices(self):
        return sorted(self.zeta)

    def diff(self, i, j):
        """
        ζ_ij = ζ_i - ζ_j
        """
        key = (i, j)
        value = self._diff.get(key)
        if value is None:
            value = self[i] - self[j]
            self._diff[key] = value
        return value

    def covers(self, vertex_ids):
        """
        Проверка, что координаты заданы для всех вершин

        Raises:
            InputError: Если какой-то вершине не сопоставлена координата
        """
        missing = [v for v in vertex_ids if v not in self.zeta]
        if missing:
            raise InputError(f"Не заданы координаты вершин {missing}")

    def to_json(self):
        return {str(v): str(self.zeta[v]) for v in sorted(self.zeta)}

    def __eq__(self, other):
        return (isinstance(other, VertexCoordinates)
                and other.field == self.field
                and other.zeta == self.zeta)

    __hash__ = None

    def __repr__(self):
        body = ", ".join(f"{v}: {self.zeta[v]}" for v in sorted(self.zeta))
        return f"VertexCoordinates({{{body}}}, {self.field.tag})"


def random_coordinates(triangulation, field, seed):
    """
    Случайные попарно различные координаты для вершин триангуляции

    Совпадения перевыбираются; результат детерминирован по seed.

    Args:
        triangulation: Триангуляция (или последовательность номеров вершин)
        field: Поле или его тег
        seed: Целое зерно

    Returns:
        VertexCoordinates: Координаты

    Raises:
        FieldTooSmall: Если в поле меньше элементов, чем вершин
    """
    if not isinstance(field, Field):
        field = Field.from_tag(field)
    vertex_ids = getattr(triangulation, "vertex_ids", triangulation)
    vertex_ids = sorted(vertex_ids)
    if field.size is not None and field.size < len(vertex_ids):
        raise FieldTooSmall(
            f"В поле {field.tag} {field.size} элементов, нужно {len(vertex_ids)} различных"
        )
    rng = make_rng(seed)
    used = set()
    zeta = {}
    for vertex in vertex_ids:
        value = field.random(rng)
        while value in used:
            value = field.random(rng)
        used.add(value)
        zeta[vertex] = value
    logger.debug(f"Координаты для seed={seed}: {len(zeta)} вершин в {field.tag}")
    return VertexCoordinates(field, zeta)
