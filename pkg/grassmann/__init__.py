from .algebra import (
    Generator, GrassmannAlgebra, GrassmannElement, KIND_A, KIND_B,
    gr_mul, product_with_required, format_simplex,
)
from .operators import (
    GrassmannOperator, left_derivative, berezin_integrate,
    apply_operator, solve_operator_inverse_of_one,
)
