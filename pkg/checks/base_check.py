"""
Базовый класс проверки, от которого наследуются все остальные проверки
"""

import logging

from field import Field, make_rng
from storage import JsonStorage
from triangulation import build_lattice, random_coordinates

logger = logging.getLogger("pachner_grassmann")


class BaseCheck:
    """
    Базовый класс для всех проверок

    Проверка строится из простых параметров (строк и чисел), поэтому ее
    можно создавать заново в рабочем процессе.
    """
    name = "base"
    default_tri = None

    def __init__(self, field="gf:1000003", tri=None, deform="none"):
        """
        Инициализация проверки

        Args:
            field: Тег поля
            tri: Имя встроенной конфигурации или путь к JSON
            deform: Режим деформации
        """
        self.field = Field.from_tag(field)
        self.tri = tri or self.default_tri
        self.deform = deform
        self.storage = JsonStorage()

    def options(self):
        """
        Параметры для воссоздания проверки в другом процессе
        """
        return {"field": self.field.tag, "tri": self.tri, "deform": self.deform}

    def load(self):
        """
        Загрузка триангуляции и ее решетки граней

        Returns:
            tuple: (триангуляция, решетка)
        """
        loaded = self.storage.load_triangulation(self.tri, self.field.tag)
        return loaded.triangulation, build_lattice(loaded.triangulation)

    def coordinates(self, vertex_ids, seed):
        return random_coordinates(vertex_ids, self.field, seed)

    def chain_rng(self, seed):
        """
        Генератор для случайных цепей, независимый от генератора координат
        """
        return make_rng(f"chain-{seed}")

    def report(self, seed, passed, **fields):
        """
        Общие поля отчета одного испытания
        """
        data = {"check": self.name, "seed": seed, "field": self.field.tag, "passed": bool(passed)}
        data.update(fields)
        return data

    def process(self, seed):
        """
        Выполнение одного испытания

        Args:
            seed: Зерно испытания

        Returns:
            dict: Отчет с полем passed
        """
        raise NotImplementedError(f"Проверка {self.name} не реализует process")
