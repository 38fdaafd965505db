"""
Левые производные, интеграл Березина и линейные дифференциальные операторы
"""

from field import FieldScalar
from utils.errors import DuplicateVariable, ZeroOperator, MixedFields

from .algebra import GrassmannElement


def left_derivative(theta, x):
    """
    Левая производная ∂/∂θ

    На мономе, содержащем θ на позиции k (с нуля, канонический порядок),
    дает (-1)^k на моном без θ; ноль, если θ отсутствует.

    Args:
        theta: Образующая
        x: Элемент алгебры

    Returns:
        GrassmannElement: ∂x/∂θ
    """
    algebra = x.algebra
    if theta not in algebra:
        return algebra.zero()
    bit = 1 << algebra.index(theta)
    lower = bit - 1
    terms = {}
    for mask, coeff in x.terms.items():
        if not mask & bit:
            continue
        if (mask & lower).bit_count() & 1:
            coeff = -coeff
        terms[mask ^ bit] = coeff
    return GrassmannElement(algebra, terms)


def berezin_integrate(x, thetas):
    """
    Повторный интеграл Березина ∫ x dθ_1 dθ_2 ...

    Первой интегрируется переменная, записанная левее всех;
    ∫ f dθ определяется как левая производная ∂f/∂θ.

    Args:
        x: Подынтегральное выражение
        thetas: Упорядоченный список переменных интегрирования

    Returns:
        GrassmannElement: Значение интеграла

    Raises:
        DuplicateVariable: Если переменная повторяется
    """
    seen = set()
    for theta in thetas:
        if theta in seen:
            raise DuplicateVariable(f"Переменная {theta} встречается в мере дважды")
        seen.add(theta)
    result = x
    for theta in thetas:
        result = left_derivative(theta, result)
    return result


class GrassmannOperator:
    """
    Линейный оператор Σ c_θ ∂/∂θ из левых производных

    Каждая образующая входит не более одного раза; нулевые коэффициенты
    не хранятся.
    """
    def __init__(self, field, terms=()):
        """
        Инициализация оператора

        Args:
            field: Поле коэффициентов
            terms: Пары (коэффициент, образующая); повторы суммируются
        """
        self.field = field
        self.coefficients = {}
        for coeff, generator in terms:
            coeff = field(coeff)
            total = self.coefficients.get(generator, field.zero) + coeff
            if total:
                self.coefficients[generator] = total
            else:
                self.coefficients.pop(generator, None)

    @property
    def terms(self):
        """
        Пары (коэффициент, образующая) в каноническом порядке образующих
        """
        return [(self.coefficients[g], g) for g in sorted(self.coefficients)]

    def __add__(self, other):
        if not isinstance(other, GrassmannOperator):
            return NotImplemented
        if other.field != self.field:
            raise MixedFields(f"Смешение полей {self.field.tag} и {other.field.tag}")
        return GrassmannOperator(self.field, self.terms + other.terms)

    def __neg__(self):
        return GrassmannOperator(self.field, [(-c, g) for c, g in self.terms])

    def __eq__(self, other):
        return (isinstance(other, GrassmannOperator)
                and other.field == self.field
                and other.coefficients == self.coefficients)

    __hash__ = None

    def coefficient(self, generator):
        """
        Коэффициент при ∂/∂θ (ноль, если θ не входит)
        """
        return self.coefficients.get(generator, self.field.zero)

    def __bool__(self):
        return bool(self.coefficients)

    def __str__(self):
        if not self.coefficients:
            return "0"
        return " + ".join(f"{c}*d/d{g}" for c, g in self.terms)

    def __repr__(self):
        return f"GrassmannOperator({self})"

    def __call__(self, x):
        return apply_operator(self, x)


def apply_operator(operator, x):
    """
    Применение оператора: Σ c_θ · ∂x/∂θ

    Args:
        operator: GrassmannOperator
        x: Элемент алгебры

    Returns:
        GrassmannElement: Результат
    """
    result = x.algebra.zero()
    for coeff, generator in operator.terms:
        result = result + left_derivative(generator, x).scale(coeff)
    return result


def solve_operator_inverse_of_one(operator, algebra, choice=0):
    """
    Элемент w степени 1 с D w = 1

    Канонический выбор: w = c⁻¹·θ для первой (в каноническом порядке)
    образующей θ с ненулевым коэффициентом c; choice выбирает другую.

    Args:
        operator: Оператор D
        algebra: Алгебра, в которой строится w
        choice: Номер образующей среди ненулевых (0 - первая)

    Returns:
        GrassmannElement: Решение w

    Raises:
        ZeroOperator: Если у D нет ненулевых коэффициентов
    """
    terms = operator.terms
    if not terms:
        raise ZeroOperator("Оператор не имеет ненулевых коэффициентов")
    coeff, generator = terms[choice % len(terms)]
    if not isinstance(coeff, FieldScalar):
        coeff = algebra.field(coeff)
    return algebra.gen(generator, coeff.inverse())
