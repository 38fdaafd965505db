import pytest
from hypothesis import given, settings, strategies as st

from field import Field, make_rng
from grassmann import (
    Generator, GrassmannAlgebra, GrassmannOperator, KIND_A, KIND_B,
    apply_operator, berezin_integrate, left_derivative, product_with_required,
    solve_operator_inverse_of_one,
)
from utils.errors import DuplicateVariable, MixedFields, ZeroOperator

FIELD = Field.prime(1000003)
TETS = [(1, 2, 3, 4), (1, 2, 3, 5), (1, 2, 4, 5)]
ALGEBRA = GrassmannAlgebra.for_tetrahedra(FIELD, TETS)
A = Generator((1, 2, 3, 4), KIND_A)
B = Generator((1, 2, 3, 4), KIND_B)
C = Generator((1, 2, 3, 5), KIND_A)


def random_homogeneous(rng, degree, terms=4):
    result = ALGEBRA.zero()
    for _ in range(terms):
        gens = rng.sample(ALGEBRA.generators, degree)
        result = result + ALGEBRA.monomial(gens, FIELD.random(rng))
    return result


def random_element(rng):
    result = ALGEBRA.zero()
    for degree in range(4):
        result = result + random_homogeneous(rng, degree, terms=2)
    return result


def test_generator_order_and_print():
    """
    Канонический порядок образующих: тетраэдр, затем a < b
    """
    assert A < B < C
    assert str(Generator((4, 3, 2, 1), KIND_B)) == "b[1234]"
    assert Generator((1, 2, 3, 4)).vertex == 1
    assert B.vertex == 2
    assert ALGEBRA.generators[:3] == (A, B, C)


def test_product_signs():
    """
    Нильпотентность и антикоммутация
    """
    a, b = ALGEBRA.gen(A), ALGEBRA.gen(B)
    assert (a * a).is_zero
    assert b * a == -(a * b)
    assert ((a + b) * (a + b)).is_zero
    assert str(ALGEBRA.monomial([C, A, B], 2)) == "2*a[1234]^b[1234]^a[1235]"


def test_mixed_fields_rejected():
    other = GrassmannAlgebra.for_tetrahedra(Field.rationals(), TETS)
    with pytest.raises(MixedFields):
        ALGEBRA.gen(A) * other.gen(A)


def test_left_derivative_examples():
    """
    ∂/∂a(a∧b) = b, ∂/∂b(a∧b) = -a, ∂/∂c(a∧b) = 0
    """
    ab = ALGEBRA.monomial([A, B])
    assert left_derivative(A, ab) == ALGEBRA.gen(B)
    assert left_derivative(B, ab) == -ALGEBRA.gen(A)
    assert left_derivative(C, ab).is_zero


def test_berezin_integral():
    """
    Интеграл Березина: внутренняя (левая) переменная интегрируется первой
    """
    ab = ALGEBRA.monomial([A, B])
    assert berezin_integrate(ALGEBRA.gen(A), [A]) == 1
    assert berezin_integrate(ab, [A, B]) == 1
    assert berezin_integrate(ab, [B, A]) == -1
    assert berezin_integrate(ALGEBRA.one(), [A]).is_zero
    with pytest.raises(DuplicateVariable):
        berezin_integrate(ab, [A, A])


def test_apply_operator_examples():
    d = GrassmannOperator(FIELD, [(1, A), (1, B)])
    assert apply_operator(d, ALGEBRA.monomial([A, B])) == ALGEBRA.gen(B) - ALGEBRA.gen(A)
    assert apply_operator(GrassmannOperator(FIELD, [(2, A)]), ALGEBRA.gen(A)) == 2
    assert d(ALGEBRA.one()).is_zero


def test_operator_merges_repeated_generators():
    d = GrassmannOperator(FIELD, [(1, A), (-1, A), (3, B)])
    assert d.terms == [(FIELD(3), B)]
    assert (d + (-d)).coefficients == {}


def test_solve_inverse_of_one():
    """
    Канонический выбор w = c⁻¹θ для первой образующей
    """
    d = GrassmannOperator(FIELD, [(5, B)])
    assert solve_operator_inverse_of_one(d, ALGEBRA) == ALGEBRA.gen(B, FIELD(5).inverse())
    with pytest.raises(ZeroOperator):
        solve_operator_inverse_of_one(GrassmannOperator(FIELD), ALGEBRA)

    d = GrassmannOperator(FIELD, [(2, A), (7, C)])
    first = solve_operator_inverse_of_one(d, ALGEBRA)
    last = solve_operator_inverse_of_one(d, ALGEBRA, choice=-1)
    assert first.generators() == [A]
    assert last.generators() == [C]
    assert d(first) == 1 and d(last) == 1


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 6), st.integers(0, 3), st.integers(0, 3))
def test_graded_commutativity(seed, p, q):
    rng = make_rng(seed)
    x = random_homogeneous(rng, p)
    y = random_homogeneous(rng, q)
    sign = -1 if (p * q) % 2 else 1
    assert x * y == (y * x).scale(sign)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_associativity(seed):
    rng = make_rng(seed)
    x, y, z = random_element(rng), random_element(rng), random_element(rng)
    assert (x * y) * z == x * (y * z)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_derivatives_anticommute(seed):
    rng = make_rng(seed)
    x = random_element(rng)
    theta, eta = rng.sample(ALGEBRA.generators, 2)
    assert left_derivative(theta, left_derivative(eta, x)) == -left_derivative(eta, left_derivative(theta, x))


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_berezin_permutation_sign(seed):
    rng = make_rng(seed)
    x = random_homogeneous(rng, 3, terms=6)
    thetas = rng.sample(ALGEBRA.generators, 3)
    swapped = [thetas[1], thetas[0], thetas[2]]
    assert berezin_integrate(x, swapped) == -berezin_integrate(x, thetas)


def test_inverse_of_one_random_operators():
    rng = make_rng(11)
    for _ in range(200):
        pairs = [(FIELD.random(rng), g) for g in rng.sample(ALGEBRA.generators, 3)]
        d = GrassmannOperator(FIELD, pairs)
        if not d:
            continue
        assert d(solve_operator_inverse_of_one(d, ALGEBRA)) == 1


def test_product_with_required_matches_full_product():
    """
    Усеченное произведение совпадает с полным на мономах с нужными образующими
    """
    rng = make_rng(3)
    factors = [random_homogeneous(rng, 2, terms=5) for _ in range(3)]
    required = [A, B]
    full = factors[0] * factors[1] * factors[2]
    pruned = product_with_required(factors, required)
    assert berezin_integrate(pruned, required) == berezin_integrate(full, required)
