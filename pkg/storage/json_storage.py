"""
Модуль для загрузки триангуляций и x-цепей и сохранения отчетов и матриц в JSON
"""

import os
import json
import logging

from field import Field
from triangulation import Triangulation, VertexCoordinates, builtin, builtin_names, orient_from_reference
from utils.errors import InputError, ParseError
from weights import XChain

logger = logging.getLogger("pachner_grassmann")


def dumps(data):
    """
    Детерминированная сериализация одной JSON-строки отчета
    """
    return json.dumps(data, sort_keys=True, ensure_ascii=False, separators=(",", ":"))


class LoadedTriangulation:
    """
    Результат загрузки: триангуляция, координаты (если заданы) и тег поля
    """
    def __init__(self, triangulation, zeta=None, field_tag=None, source=""):
        self.triangulation = triangulation
        self.zeta = zeta
        self.field_tag = field_tag
        self.source = source


class JsonStorage:
    """
    Класс для работы с файлами JSON: входные триангуляции и цепи, экспорт
    """
    def __init__(self, out_dir=None):
        """
        Инициализация хранилища

        Args:
            out_dir: Директория для экспорта (создается при первой записи)
        """
        self.out_dir = out_dir

    def _read(self, path):
        if not os.path.exists(path):
            raise InputError(f"Файл не найден: {path}")
        try:
            with open(path, encoding="utf-8") as handle:
                return json.load(handle)
        except json.JSONDecodeError as e:
            raise ParseError(f"Некорректный JSON в {path}: {e}")
        except OSError as e:
            raise InputError(f"Ошибка чтения {path}: {e}")

    def load_triangulation(self, spec, field_tag=None):
        """
        Загрузка триангуляции по имени встроенной конфигурации или пути к файлу

        Формат файла: {"n_vertices": 6, "simplices": [[1,2,3,4,5], ...],
        "orientations": [1, -1, ...], "zeta": {"1": "3/7", ...}, "field": "q"}

        Args:
            spec: Имя встроенной конфигурации или путь
            field_tag: Тег поля из командной строки (приоритетнее файла)

        Returns:
            LoadedTriangulation: Триангуляция с необязательными координатами

        Raises:
            InputError: Если файл отсутствует или формат неверен
        """
        if spec in builtin_names():
            return LoadedTriangulation(builtin(spec), None, field_tag, spec)

        data = self._read(spec)
        if not isinstance(data, dict) or "simplices" not in data:
            raise ParseError(f"В {spec} нет списка simplices")
        try:
            simplices = [tuple(int(v) for v in u) for u in data["simplices"]]
            n_vertices = int(data["n_vertices"]) if "n_vertices" in data else None
        except (TypeError, ValueError) as e:
            raise ParseError(f"Некорректный список симплексов в {spec}: {e}")

        triangulation = Triangulation(simplices, n_vertices)
        orientations = data.get("orientations")
        if orientations is not None:
            if not isinstance(orientations, list):
                raise ParseError(f"orientations в {spec} должен быть списком знаков")
            if len(orientations) != len(simplices):
                raise ParseError("Число знаков ориентации не совпадает с числом симплексов")
            try:
                epsilon = {tuple(sorted(u)): int(s) for u, s in zip(simplices, orientations)}
            except (TypeError, ValueError) as e:
                raise ParseError(f"Некорректные знаки ориентации в {spec}: {e}")
            triangulation = triangulation.with_epsilon(epsilon)
        else:
            triangulation = orient_from_reference(triangulation, (tuple(sorted(simplices[0])), 1))

        tag = field_tag or data.get("field")
        zeta = None
        if data.get("zeta") is not None:
            field = Field.from_tag(tag) if tag else Field.rationals()
            try:
                zeta = VertexCoordinates(field, {int(k): field.parse(v) for k, v in data["zeta"].items()})
            except (TypeError, ValueError, AttributeError) as e:
                raise ParseError(f"Некорректные координаты в {spec}: {e}")
            zeta.covers(triangulation.vertex_ids)
        logger.info(f"Загружена триангуляция {spec}: {len(triangulation)} симплексов")
        return LoadedTriangulation(triangulation, zeta, tag, spec)

    def load_xchain(self, path, field):
        """
        Загрузка x-цепи: {"chain": [[[1,2,3,4,5], 5, "2/3"], ...]}

        Args:
            path: Путь к файлу
            field: Поле значений

        Returns:
            XChain: Цепь
        """
        data = self._read(path)
        chain = XChain(field)
        try:
            for simplex, vertex, value in data["chain"]:
                chain.add(tuple(int(v) for v in simplex), int(vertex), field.parse(value))
        except (KeyError, TypeError, ValueError) as e:
            raise ParseError(f"Некорректная x-цепь в {path}: {e}")
        return chain

    def save(self, name, data):
        """
        Сохранение JSON-документа в директорию экспорта

        Args:
            name: Имя файла
            data: Сериализуемые данные

        Returns:
            str: Путь к файлу

        Raises:
            InputError: Если запись невозможна
        """
        if not self.out_dir:
            raise InputError("Не задана директория экспорта (--out)")
        path = os.path.join(self.out_dir, name)
        try:
            os.makedirs(self.out_dir, exist_ok=True)
            with open(path, "w", encoding="utf-8") as handle:
                json.dump(data, handle, sort_keys=True, ensure_ascii=False, indent=1)
                handle.write("\n")
        except OSError as e:
            raise InputError(f"Ошибка записи {path}: {e}")
        logger.debug(f"Сохранен файл {path}")
        return path
