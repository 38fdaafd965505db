"""
Исключения, общие для всех модулей системы проверки
"""


class PachnerError(Exception):
    """
    Базовое исключение для всех ошибок вычислений и ввода
    """


class InputError(PachnerError):
    """
    Ошибка входных данных или конфигурации (код выхода 2)
    """


# Точная арифметика

class MixedFields(PachnerError):
    """Операция над элементами разных полей"""


class DivisionByZero(PachnerError):
    """Деление на ноль в поле"""


class ParseError(InputError):
    """Строка не является каноническим представлением скаляра"""


class DenominatorDivisibleByP(InputError):
    """Знаменатель обращается в ноль по модулю p"""


class InvalidField(InputError):
    """Неизвестный или недопустимый тег поля"""


# Алгебра Грассмана

class DuplicateVariable(PachnerError):
    """Переменная интегрирования повторяется"""


class ZeroOperator(PachnerError):
    """Дифференциальный оператор не имеет ненулевых коэффициентов"""


# Триангуляции

class TetrahedronInThreeSimplices(InputError):
    """Тетраэдр лежит более чем в двух 4-симплексах"""


class OrientationInconsistent(InputError):
    """Заданные знаки ориентации несогласованы"""


class NotAFacet(PachnerError):
    """Грань не является гипергранью симплекса"""


class NonOrientable(InputError):
    """Распространение ориентации привело к противоречию"""


class DisconnectedInterior(InputError):
    """Двойственный граф 4-симплексов несвязен"""


class UnknownName(InputError):
    """Неизвестное имя встроенной конфигурации"""


class FieldTooSmall(InputError):
    """В поле недостаточно элементов для попарно различных координат"""


class CoordinateCollision(InputError):
    """Координаты двух вершин совпадают"""


# Цепные комплексы

class TriangleNotInSimplex(PachnerError):
    """Треугольник не является гранью 4-симплекса"""


class NotAComplex(PachnerError):
    """Композиция соседних отображений ненулевая"""


# Веса и соотношения

class FaceNotInner(PachnerError):
    """Треугольник не является внутренним"""


class BoundaryTetWithoutFlag(PachnerError):
    """Граничный тетраэдр в цепи без разрешающего флага"""


class WNotInverse(PachnerError):
    """Элемент w не удовлетворяет уравнению d_s w = 1"""


class UnsupportedTetrahedron(PachnerError):
    """Коэффициент задан на тетраэдре вне общей границы сторон хода"""
