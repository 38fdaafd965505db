"""
Точная арифметика полей: рациональные числа и простые поля GF(p)

Элементы хранятся как элементы доменов sympy (QQ, GF(p)), поверх которых
FieldScalar дает единый интерфейс с проверкой принадлежности полю.
"""

import re
import random
import logging
from functools import lru_cache

from sympy import isprime
from sympy.polys.domains import QQ, GF

from utils.errors import (
    MixedFields, DivisionByZero, ParseError,
    DenominatorDivisibleByP, InvalidField,
)

logger = logging.getLogger("pachner_grassmann")

SCALAR_PATTERN = re.compile(r"-?[0-9]+(/[0-9]+)?")

# Ниже этой границы совпадения случайных координат становятся заметными
SAFE_PRIME_BOUND = 10 ** 4

# Диапазон случайных рациональных координат
RATIONAL_NUMERATOR_BOUND = 60
RATIONAL_DENOMINATOR_BOUND = 12


class Field:
    """
    Поле скаляров: QQ или GF(p) с p > 2

    Поля сравниваются по тегу: "q" или "gf:<p>".
    """
    def __init__(self, domain, tag, characteristic=0):
        """
        Инициализация поля

        Args:
            domain: Домен sympy (QQ или GF(p))
            tag: Текстовый тег поля
            characteristic: Характеристика (0 для QQ)
        """
        self.domain = domain
        self.tag = tag
        self.characteristic = characteristic

    @classmethod
    def rationals(cls):
        """
        Поле рациональных чисел

        Returns:
            Field: Поле QQ
        """
        return _rationals()

    @classmethod
    def prime(cls, p):
        """
        Простое поле GF(p)

        Args:
            p: Простое число, большее 2

        Returns:
            Field: Поле GF(p)

        Raises:
            InvalidField: Если p не простое или p = 2
        """
        return _prime_field(int(p))

    @classmethod
    def from_tag(cls, tag):
        """
        Разбор тега поля "q" или "gf:P"

        Args:
            tag: Тег поля

        Returns:
            Field: Соответствующее поле

        Raises:
            InvalidField: Если тег не распознан
        """
        text = str(tag).strip().lower()
        if text in ("q", "qq", "rationals"):
            return cls.rationals()
        if text.startswith("gf:"):
            modulus = text[3:]
            if not modulus.isdigit():
                raise InvalidField(f"Некорректный модуль поля: {tag!r}")
            return cls.prime(int(modulus))
        raise InvalidField(f"Неизвестный тег поля: {tag!r} (ожидается q или gf:P)")

    @property
    def is_prime_field(self):
        return self.characteristic != 0

    @property
    def size(self):
        """
        Число элементов поля (None для QQ)
        """
        return self.characteristic or None

    @property
    def zero(self):
        return FieldScalar(self, self.domain.zero)

    @property
    def one(self):
        return FieldScalar(self, self.domain.one)

    def __call__(self, value):
        """
        Приведение значения к элементу поля

        Args:
            value: int, FieldScalar этого поля или каноническая строка

        Returns:
            FieldScalar: Элемент поля
        """
        if isinstance(value, FieldScalar):
            if value.field != self:
                raise MixedFields(f"Скаляр поля {value.field.tag} в поле {self.tag}")
            return value
        if isinstance(value, str):
            return self.parse(value)
        return FieldScalar(self, self.domain(int(value)))

    def convert(self, value):
        """
        Сырой элемент домена для int или FieldScalar

        Args:
            value: int или FieldScalar

        Returns:
            Элемент домена sympy
        """
        if isinstance(value, FieldScalar):
            if value.field != self:
                raise MixedFields(f"Смешение полей {value.field.tag} и {self.tag}")
            return value.value
        return self.domain(int(value))

    def parse(self, text):
        """
        Разбор канонической записи скаляра

        Args:
            text: Строка вида -?[0-9]+(/[0-9]+)?

        Returns:
            FieldScalar: Точное значение

        Raises:
            ParseError: Если строка не соответствует формату
            DenominatorDivisibleByP: Если знаменатель делится на p
        """
        text = str(text).strip()
        if not SCALAR_PATTERN.fullmatch(text):
            raise ParseError(f"Некорректная запись скаляра: {text!r}")
        numerator, _, denominator = text.partition("/")
        numerator = int(numerator)
        denominator = int(denominator) if denominator else 1
        if self.is_prime_field:
            if denominator % self.characteristic == 0:
                raise DenominatorDivisibleByP(
                    f"Знаменатель {denominator} делится на {self.characteristic}"
                )
            return FieldScalar(self, self.domain(numerator) / self.domain(denominator))
        if denominator == 0:
            raise ParseError(f"Нулевой знаменатель: {text!r}")
        return FieldScalar(self, self.domain(numerator, denominator))

    def format(self, raw):
        """
        Каноническая запись сырого элемента

        Args:
            raw: Элемент домена

        Returns:
            str: "p/q" (или "p") для QQ, вычет 0..p-1 для GF(p)
        """
        if self.is_prime_field:
            return str(int(self.domain.to_int(raw)) % self.characteristic)
        numerator = int(self.domain.numer(raw))
        denominator = int(self.domain.denom(raw))
        if denominator == 1:
            return str(numerator)
        return f"{numerator}/{denominator}"

    def random(self, rng, nonzero=False):
        """
        Случайный элемент поля

        Args:
            rng: Экземпляр random.Random
            nonzero: Исключить ноль

        Returns:
            FieldScalar: Случайный элемент
        """
        while True:
            if self.is_prime_field:
                raw = self.domain(rng.randrange(self.characteristic))
            else:
                raw = self.domain(
                    rng.randint(-RATIONAL_NUMERATOR_BOUND, RATIONAL_NUMERATOR_BOUND),
                    rng.randint(1, RATIONAL_DENOMINATOR_BOUND),
                )
            if raw or not nonzero:
                return FieldScalar(self, raw)

    def __eq__(self, other):
        return isinstance(other, Field) and other.tag == self.tag

    def __hash__(self):
        return hash(self.tag)

    def __reduce__(self):
        return (Field.from_tag, (self.tag,))

    def __repr__(self):
        return f"Field({self.tag})"


@lru_cache(maxsize=None)
def _rationals():
    return Field(QQ, "q", 0)


@lru_cache(maxsize=None)
def _prime_field(p):
    if p <= 2 or not isprime(p):
        raise InvalidField(f"Модуль поля должен быть простым числом больше 2, получено {p}")
    if p <= SAFE_PRIME_BOUND:
        logger.warning(f"Поле GF({p}): малый модуль, случайные координаты будут часто совпадать")
    return Field(GF(p, symmetric=False), f"gf:{p}", p)


class FieldScalar:
    """
    Неизменяемый элемент поля с тегом поля
    """
    __slots__ = ("field", "value")

    def __init__(self, field, value):
        """
        Args:
            field: Поле
            value: Сырой элемент домена поля
        """
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("FieldScalar неизменяем")

    def __reduce__(self):
        return (_rebuild_scalar, (self.field.tag, str(self)))

    def _raw(self, other):
        if isinstance(other, FieldScalar):
            if other.field != self.field:
                raise MixedFields(f"Смешение полей {self.field.tag} и {other.field.tag}")
            return other.value
        if isinstance(other, int):
            return self.field.domain(other)
        return NotImplemented

    def __add__(self, other):
        raw = self._raw(other)
        if raw is NotImplemented:
            return NotImplemented
        return FieldScalar(self.field, self.value + raw)

    __radd__ = __add__

    def __sub__(self, other):
        raw = self._raw(other)
        if raw is NotImplemented:
            return NotImplemented
        return FieldScalar(self.field, self.value - raw)

    def __rsub__(self, other):
        raw = self._raw(other)
        if raw is NotImplemented:
            return NotImplemented
        return FieldScalar(self.field, raw - self.value)

    def __mul__(self, other):
        raw = self._raw(other)
        if raw is NotImplemented:
            return NotImplemented
        return FieldScalar(self.field, self.value * raw)

    __rmul__ = __mul__

    def __truediv__(self, other):
        raw = self._raw(other)
        if raw is NotImplemented:
            return NotImplemented
        if not raw:
            raise DivisionByZero(f"Деление на ноль в поле {self.field.tag}")
        return FieldScalar(self.field, self.value / raw)

    def __rtruediv__(self, other):
        raw = self._raw(other)
        if raw is NotImplemented:
            return NotImplemented
        if not self.value:
            raise DivisionByZero(f"Деление на ноль в поле {self.field.tag}")
        return FieldScalar(self.field, raw / self.value)

    def __neg__(self):
        return FieldScalar(self.field, -self.value)

    def __pow__(self, exponent):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return FieldScalar(self.field, self.value ** int(exponent))

    def inverse(self):
        """
        Обратный элемент

        Raises:
            DivisionByZero: Для нулевого элемента
        """
        return self.field.one / self

    @property
    def is_zero(self):
        return not self.value

    def __bool__(self):
        return bool(self.value)

    def _canonical(self):
        # Вычет 0..p-1 для GF(p), несократимая дробь для Q
        if self.field.is_prime_field:
            return int(self.field.domain.to_int(self.value)) % self.field.characteristic
        numerator = int(self.field.domain.numer(self.value))
        denominator = int(self.field.domain.denom(self.value))
        return numerator if denominator == 1 else (numerator, denominator)

    def __eq__(self, other):
        """
        Равенство скаляров одного поля; целое равно скаляру, только если
        совпадает с каноническим представителем (вычетом 0..p-1 в GF(p))
        """
        if isinstance(other, FieldScalar):
            return other.field == self.field and other.value == self.value
        if isinstance(other, int):
            return self._canonical() == other
        return NotImplemented

    def __hash__(self):
        return hash(self._canonical())

    def __str__(self):
        return self.field.format(self.value)

    def __repr__(self):
        return f"FieldScalar({self}, {self.field.tag})"


def add(a, b):
    """Сумма двух скаляров одного поля"""
    return a + b


def sub(a, b):
    """Разность двух скаляров одного поля"""
    return a - b


def mul(a, b):
    """Произведение двух скаляров одного поля"""
    return a * b


def div(a, b):
    """
    Частное двух скаляров одного поля

    Raises:
        MixedFields: Если поля различны
        DivisionByZero: Если b = 0
    """
    return a / b


def parse_scalar(text, field):
    """
    Разбор канонической записи скаляра в заданном поле

    Args:
        text: Строка вида -?[0-9]+(/[0-9]+)?
        field: Поле или его тег

    Returns:
        FieldScalar: Точное значение
    """
    if not isinstance(field, Field):
        field = Field.from_tag(field)
    return field.parse(text)


def make_rng(seed):
    """
    Детерминированный генератор случайных чисел

    Args:
        seed: Целое зерно

    Returns:
        random.Random: Генератор
    """
    return random.Random(seed)


def _rebuild_scalar(tag, text):
    return Field.from_tag(tag).parse(text)
