"""
Разреженные точные матрицы с помеченными строками и столбцами
"""

import logging
from dataclasses import dataclass
from typing import Optional

from sympy.polys.matrices import DomainMatrix

from field import FieldScalar
from grassmann import format_simplex
from utils.errors import MixedFields, PachnerError

logger = logging.getLogger("pachner_grassmann")


@dataclass(frozen=True, order=True)
class BasisLabel:
    """
    Метка базисного вектора: пространство, симплекс и (необязательно) вершина

    Строковая запись: "V3:(1234,1)", "T:(1234)", "E*:(5)".
    """
    space: str
    simplex: tuple
    vertex: Optional[int] = None

    def __str__(self):
        body = format_simplex(self.simplex)
        if self.vertex is not None:
            body = f"{body},{self.vertex}"
        return f"{self.space}:({body})"


class ExactMatrix:
    """
    Матрица над точным полем: строки и столбцы - списки BasisLabel,
    ненулевые элементы - словарь (номер строки, номер столбца) -> сырой элемент
    """
    def __init__(self, field, rows, cols, entries=None):
        """
        Args:
            field: Поле элементов
            rows: Метки строк
            cols: Метки столбцов
            entries: Словарь (i, j) -> элемент домена; нули не хранятся
        """
        self.field = field
        self.rows = list(rows)
        self.cols = list(cols)
        self.entries = {k: v for k, v in (entries or {}).items() if v}
        self._row_index = {label: i for i, label in enumerate(self.rows)}
        self._col_index = {label: j for j, label in enumerate(self.cols)}

    @classmethod
    def from_columns(cls, field, rows, cols, columns):
        """
        Сборка матрицы по столбцам

        Args:
            field: Поле
            rows: Метки строк
            cols: Метки столбцов
            columns: Для каждого столбца словарь метка строки -> значение;
                метки вне rows отбрасываются

        Returns:
            ExactMatrix: Матрица
        """
        row_index = {label: i for i, label in enumerate(rows)}
        entries = {}
        for j, column in enumerate(columns):
            for label, value in column.items():
                i = row_index.get(label)
                if i is None:
                    continue
                raw = field.convert(value)
                if raw:
                    entries[(i, j)] = raw
        return cls(field, rows, cols, entries)

    @property
    def shape(self):
        return (len(self.rows), len(self.cols))

    @property
    def is_empty(self):
        return not self.rows or not self.cols

    def is_zero(self):
        return not self.entries

    def nnz(self):
        return len(self.entries)

    def entry(self, row, col):
        """
        Элемент по меткам строки и столбца

        Returns:
            FieldScalar: Значение (ноль, если не хранится)
        """
        i = self._row_index[row]
        j = self._col_index[col]
        return FieldScalar(self.field, self.entries.get((i, j), self.field.domain.zero))

    def column(self, col):
        """
        Столбец как словарь метка строки -> FieldScalar (только ненулевые)
        """
        j = self._col_index[col]
        return {self.rows[i]: FieldScalar(self.field, v)
                for (i, jj), v in sorted(self.entries.items()) if jj == j}

    def row(self, row):
        """
        Строка как словарь метка столбца -> FieldScalar (только ненулевые)
        """
        i = self._row_index[row]
        return {self.cols[j]: FieldScalar(self.field, v)
                for (ii, j), v in sorted(self.entries.items()) if ii == i}

    def apply(self, vector):
        """
        Образ вектора, заданного словарем метка столбца -> значение

        Returns:
            dict: Метка строки -> FieldScalar (только ненулевые)
        """
        raw = {}
        for label, value in vector.items():
            j = self._col_index.get(label)
            if j is None:
                raise PachnerError(f"Метка {label} не является столбцом матрицы")
            raw[j] = self.field.convert(value)
        result = {}
        for (i, j), v in self.entries.items():
            if j in raw and raw[j]:
                result[i] = result.get(i, self.field.domain.zero) + v * raw[j]
        return {self.rows[i]: FieldScalar(self.field, v)
                for i, v in sorted(result.items()) if v}

    def to_domain_matrix(self):
        """
        Представление sympy DomainMatrix (разреженное)
        """
        rows = {}
        for (i, j), v in self.entries.items():
            rows.setdefault(i, {})[j] = v
        return DomainMatrix(rows, self.shape, self.field.domain)

    def rank(self):
        """
        Ранг точным исключением Гаусса
        """
        if self.is_empty or not self.entries:
            return 0
        return int(self.to_domain_matrix().rank())

    def compose(self, inner):
        """
        Композиция self ∘ inner (сначала inner, затем self)

        Args:
            inner: Матрица, строки которой совпадают со столбцами self

        Returns:
            ExactMatrix: Произведение self · inner

        Raises:
            MixedFields: Если поля различны
            PachnerError: Если метки не согласованы
        """
        if inner.field != self.field:
            raise MixedFields(f"Смешение полей {self.field.tag} и {inner.field.tag}")
        if inner.rows != self.cols:
            raise PachnerError("Базисы промежуточного пространства не совпадают")
        if self.is_empty or inner.is_empty or not self.entries or not inner.entries:
            return ExactMatrix(self.field, self.rows, inner.cols)
        product = self.to_domain_matrix().matmul(inner.to_domain_matrix())
        entries = {}
        for i, row in product.to_sparse().rep.items():
            for j, v in row.items():
                if v:
                    entries[(i, j)] = v
        return ExactMatrix(self.field, self.rows, inner.cols, entries)

    def select_rows(self, labels):
        """
        Подматрица из строк с заданными метками (в заданном порядке)
        """
        labels = list(labels)
        position = {self._row_index[label]: k for k, label in enumerate(labels)}
        entries = {(position[i], j): v for (i, j), v in self.entries.items() if i in position}
        return ExactMatrix(self.field, labels, self.cols, entries)

    def select_cols(self, labels):
        """
        Подматрица из столбцов с заданными метками (в заданном порядке)
        """
        labels = list(labels)
        position = {self._col_index[label]: k for k, label in enumerate(labels)}
        entries = {(i, position[j]): v for (i, j), v in self.entries.items() if j in position}
        return ExactMatrix(self.field, self.rows, labels, entries)

    def scale_rows(self, factor):
        """
        Умножение строк на множители

        Args:
            factor: Функция метка строки -> FieldScalar
        """
        scales = [self.field.convert(factor(label)) for label in self.rows]
        entries = {(i, j): v * scales[i] for (i, j), v in self.entries.items()}
        return ExactMatrix(self.field, self.rows, self.cols, entries)

    def scale_cols(self, factor):
        """
        Умножение столбцов на множители

        Args:
            factor: Функция метка столбца -> FieldScalar
        """
        scales = [self.field.convert(factor(label)) for label in self.cols]
        entries = {(i, j): v * scales[j] for (i, j), v in self.entries.items()}
        return ExactMatrix(self.field, self.rows, self.cols, entries)

    def hstack(self, other):
        """
        Матрица [self | other] с общими строками
        """
        if other.rows != self.rows:
            raise PachnerError("Для склейки по столбцам строки должны совпадать")
        shift = len(self.cols)
        entries = dict(self.entries)
        entries.update({(i, j + shift): v for (i, j), v in other.entries.items()})
        return ExactMatrix(self.field, self.rows, self.cols + other.cols, entries)

    def __eq__(self, other):
        return (isinstance(other, ExactMatrix)
                and other.field == self.field
                and other.rows == self.rows
                and other.cols == self.cols
                and other.entries == self.entries)

    __hash__ = None

    def __repr__(self):
        return f"ExactMatrix({self.shape[0]}x{self.shape[1]}, nnz={self.nnz()}, {self.field.tag})"

    def to_json(self):
        """
        Сериализация: {"rows": [...], "cols": [...], "entries": [[r, c, "p/q"], ...]}
        """
        return {
            "field": self.field.tag,
            "rows": [str(label) for label in self.rows],
            "cols": [str(label) for label in self.cols],
            "entries": [[i, j, self.field.format(v)] for (i, j), v in sorted(self.entries.items())],
        }
