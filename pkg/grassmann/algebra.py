"""
Разреженная алгебра Грассмана над точным полем

Образующие a_t, b_t занумерованы в каноническом порядке
(тетраэдр лексикографически, затем a < b); моном хранится как битовая
маска номеров образующих, знак перестановки учтен в коэффициенте.
"""

import logging
from dataclasses import dataclass
from functools import total_ordering

from field import FieldScalar
from utils.errors import MixedFields, PachnerError

logger = logging.getLogger("pachner_grassmann")

KIND_A = "a"
KIND_B = "b"


def format_simplex(simplex):
    """
    Запись симплекса для отчетов: 1234 или 1,2,10,11 при номерах > 9

    Args:
        simplex: Кортеж номеров вершин

    Returns:
        str: Текстовая запись
    """
    if all(v < 10 for v in simplex):
        return "".join(str(v) for v in simplex)
    return ",".join(str(v) for v in simplex)


@total_ordering
@dataclass(frozen=True)
class Generator:
    """
    Образующая алгебры Грассмана

    Вид A соответствует паре (тетраэдр, первая вершина),
    вид B - паре (тетраэдр, вторая вершина).
    """
    tetra: tuple
    kind: str = KIND_A

    def __post_init__(self):
        if self.kind not in (KIND_A, KIND_B):
            raise ValueError(f"Вид образующей должен быть a или b: {self.kind!r}")
        object.__setattr__(self, "tetra", tuple(sorted(self.tetra)))

    @property
    def vertex(self):
        """
        Вершина тетраэдра, которой соответствует образующая
        """
        return self.tetra[0] if self.kind == KIND_A else self.tetra[1]

    def sort_key(self):
        return (self.tetra, self.kind)

    def __lt__(self, other):
        if not isinstance(other, Generator):
            return NotImplemented
        return self.sort_key() < other.sort_key()

    def __str__(self):
        return f"{self.kind}[{format_simplex(self.tetra)}]"


def _bits(mask):
    result = []
    index = 0
    while mask:
        if mask & 1:
            result.append(index)
        mask >>= 1
        index += 1
    return result


def _product_terms(left, right, required=0, free=0, max_extra=None):
    """
    Произведение разреженных словарей термов

    Args:
        left: {маска: коэффициент} левого множителя
        right: {маска: коэффициент} правого множителя
        required: Маска образующих, которые обязаны войти в каждый моном результата
        free: Маска образующих вне required
        max_extra: Наибольшее допустимое число образующих из free в мономе

    Returns:
        dict: {маска: коэффициент} произведения
    """
    result = {}
    right_items = [(mask, coeff, _bits(mask)) for mask, coeff in right.items()]
    for mask1, coeff1 in left.items():
        for mask2, coeff2, bits2 in right_items:
            if mask1 & mask2:
                continue
            mask = mask1 | mask2
            if required & ~mask:
                continue
            if max_extra is not None and (mask & free).bit_count() > max_extra:
                continue
            # Каждая образующая правого монома переносится через старшие образующие левого
            swaps = 0
            for j in bits2:
                swaps += (mask1 >> (j + 1)).bit_count()
            coeff = coeff1 * coeff2
            if swaps & 1:
                coeff = -coeff
            previous = result.get(mask)
            if previous is None:
                result[mask] = coeff
            else:
                total = previous + coeff
                if total:
                    result[mask] = total
                else:
                    del result[mask]
    return result


class GrassmannAlgebra:
    """
    Алгебра Грассмана с фиксированным упорядоченным набором образующих
    """
    def __init__(self, field, generators):
        """
        Инициализация алгебры

        Args:
            field: Поле коэффициентов
            generators: Образующие (порядок задается их сортировкой)
        """
        self.field = field
        self.generators = tuple(sorted(set(generators)))
        self._index = {g: i for i, g in enumerate(self.generators)}

    @classmethod
    def for_tetrahedra(cls, field, tetrahedra):
        """
        Алгебра с образующими a_t, b_t для каждого тетраэдра

        Args:
            field: Поле коэффициентов
            tetrahedra: Набор тетраэдров

        Returns:
            GrassmannAlgebra: Алгебра
        """
        generators = []
        for tetra in tetrahedra:
            generators.append(Generator(tuple(tetra), KIND_A))
            generators.append(Generator(tuple(tetra), KIND_B))
        return cls(field, generators)

    def index(self, generator):
        """
        Номер образующей в каноническом порядке

        Raises:
            KeyError: Если образующая не принадлежит алгебре
        """
        try:
            return self._index[generator]
        except KeyError:
            raise KeyError(f"Образующая {generator} не принадлежит алгебре")

    def mask(self, generators):
        """
        Битовая маска набора образующих
        """
        result = 0
        for g in generators:
            result |= 1 << self.index(g)
        return result

    def __contains__(self, generator):
        return generator in self._index

    def __eq__(self, other):
        return (isinstance(other, GrassmannAlgebra)
                and other.field == self.field
                and other.generators == self.generators)

    def __hash__(self):
        return hash((self.field, self.generators))

    def zero(self):
        return GrassmannElement(self, {})

    def one(self):
        return self.scalar(1)

    def scalar(self, value):
        """
        Элемент степени 0

        Args:
            value: int или FieldScalar
        """
        raw = self.field.convert(value)
        return GrassmannElement(self, {0: raw} if raw else {})

    def gen(self, generator, coeff=1):
        """
        Элемент coeff * θ

        Args:
            generator: Образующая θ
            coeff: Коэффициент (int или FieldScalar)
        """
        raw = self.field.convert(coeff)
        if not raw:
            return self.zero()
        return GrassmannElement(self, {1 << self.index(generator): raw})

    def linear(self, pairs):
        """
        Элемент степени 1 из пар (коэффициент, образующая)

        Args:
            pairs: Итерируемое пар (коэффициент, образующая)
        """
        terms = {}
        for coeff, generator in pairs:
            mask = 1 << self.index(generator)
            total = terms.get(mask, self.field.domain.zero) + self.field.convert(coeff)
            if total:
                terms[mask] = total
            else:
                terms.pop(mask, None)
        return GrassmannElement(self, terms)

    def monomial(self, generators, coeff=1):
        """
        Элемент coeff * θ_1 θ_2 ... в указанном порядке множителей

        Args:
            generators: Последовательность образующих
            coeff: Коэффициент
        """
        result = self.scalar(coeff)
        for g in generators:
            result = result * self.gen(g)
        return result


class GrassmannElement:
    """
    Элемент алгебры Грассмана: {маска монома: ненулевой коэффициент}

    Значения неизменяемы; операции возвращают новые элементы.
    """
    __slots__ = ("algebra", "terms")

    def __init__(self, algebra, terms):
        self.algebra = algebra
        self.terms = terms

    @property
    def field(self):
        return self.algebra.field

    def _check(self, other):
        if other.algebra is self.algebra:
            return
        if other.algebra.field != self.algebra.field:
            raise MixedFields(f"Смешение полей {self.field.tag} и {other.field.tag}")
        if other.algebra != self.algebra:
            raise PachnerError("Элементы принадлежат разным алгебрам Грассмана")

    def _coerce(self, other):
        if isinstance(other, GrassmannElement):
            self._check(other)
            return other
        if isinstance(other, (int, FieldScalar)):
            return self.algebra.scalar(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for mask, coeff in other.terms.items():
            total = terms[mask] + coeff if mask in terms else coeff
            if total:
                terms[mask] = total
            else:
                terms.pop(mask, None)
        return GrassmannElement(self.algebra, terms)

    __radd__ = __add__

    def __neg__(self):
        return GrassmannElement(self.algebra, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, value):
        """
        Умножение на скаляр

        Args:
            value: int или FieldScalar
        """
        raw = self.field.convert(value)
        if not raw:
            return self.algebra.zero()
        return GrassmannElement(self.algebra, {m: c * raw for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, FieldScalar)):
            return self.scale(other)
        if not isinstance(other, GrassmannElement):
            return NotImplemented
        return gr_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, FieldScalar)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, (int, FieldScalar)):
            other = self.algebra.scalar(other)
        if not isinstance(other, GrassmannElement):
            return NotImplemented
        return self.algebra == other.algebra and self.terms == other.terms

    __hash__ = None

    @property
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def degrees(self):
        """
        Множество степеней мономов с ненулевыми коэффициентами
        """
        return sorted({mask.bit_count() for mask in self.terms})

    def homogeneous_part(self, degree):
        """
        Однородная компонента заданной степени
        """
        return GrassmannElement(
            self.algebra,
            {m: c for m, c in self.terms.items() if m.bit_count() == degree},
        )

    def support(self):
        """
        Маска всех образующих, входящих в элемент
        """
        result = 0
        for mask in self.terms:
            result |= mask
        return result

    def generators(self):
        """
        Образующие, входящие в элемент, в каноническом порядке
        """
        gens = self.algebra.generators
        return [gens[i] for i in _bits(self.support())]

    def coefficient(self, generators=()):
        """
        Коэффициент при каноническом мономе из заданных образующих

        Args:
            generators: Образующие монома (порядок не важен)

        Returns:
            FieldScalar: Коэффициент
        """
        mask = self.algebra.mask(generators)
        return FieldScalar(self.field, self.terms.get(mask, self.field.domain.zero))

    def monomials(self):
        """
        Термы в порядке печати: (кортеж образующих, коэффициент)

        Returns:
            list: Пары (образующие в каноническом порядке, FieldScalar)
        """
        gens = self.algebra.generators
        result = []
        for mask in sorted(self.terms, key=lambda m: (m.bit_count(), _bits(m))):
            result.append((tuple(gens[i] for i in _bits(mask)),
                           FieldScalar(self.field, self.terms[mask])))
        return result

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for generators, coeff in self.monomials():
            if generators:
                parts.append(f"{coeff}*" + "^".join(str(g) for g in generators))
            else:
                parts.append(str(coeff))
        return " + ".join(parts)

    def __repr__(self):
        return f"GrassmannElement({self})"

    def to_json(self):
        """
        Сериализация: список [[образующие], "коэффициент"] в порядке печати
        """
        return [[[str(g) for g in generators], str(coeff)]
                for generators, coeff in self.monomials()]


def gr_mul(x, y):
    """
    Произведение элементов алгебры Грассмана

    Args:
        x: Левый множитель
        y: Правый множитель

    Returns:
        GrassmannElement: Произведение x·y

    Raises:
        MixedFields: Если поля множителей различны
    """
    x._check(y)
    return GrassmannElement(x.algebra, _product_terms(x.terms, y.terms))


def product_with_required(factors, required):
    """
    Произведение множителей с отбрасыванием мономов, которые уже не могут
    содержать все образующие из required

    Результат совпадает с полным произведением в членах, содержащих
    все образующие из required; остальные члены отброшены. Кроме того,
    моном итогового члена имеет степень не больше суммы старших степеней
    множителей, поэтому частичные мономы с лишними образующими вне
    required отбрасываются сразу.

    Args:
        factors: Непустой список множителей (порядок сохраняется)
        required: Список образующих, обязательных в итоговых мономах

    Returns:
        GrassmannElement: Усеченное произведение
    """
    algebra = factors[0].algebra
    for factor in factors[1:]:
        factors[0]._check(factor)
    if any(factor.is_zero for factor in factors):
        return algebra.zero()
    required_mask = algebra.mask(required)
    free = ((1 << len(algebra.generators)) - 1) & ~required_mask
    max_extra = sum(max(factor.degrees()) for factor in factors) - required_mask.bit_count()
    if max_extra < 0:
        return algebra.zero()
    # Образующие, которые еще могут прийти из оставшихся множителей
    remaining = [0] * (len(factors) + 1)
    for k in range(len(factors) - 1, -1, -1):
        remaining[k] = remaining[k + 1] | factors[k].support()

    must = required_mask & ~remaining[1]
    terms = {m: c for m, c in factors[0].terms.items()
             if not (must & ~m) and (m & free).bit_count() <= max_extra}
    for k in range(1, len(factors)):
        must = required_mask & ~remaining[k + 1]
        terms = _product_terms(terms, factors[k].terms, must, free, max_extra)
    return GrassmannElement(algebra, terms)
