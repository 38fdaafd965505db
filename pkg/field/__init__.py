from .scalar import (
    Field, FieldScalar, add, sub, mul, div, parse_scalar, make_rng,
    SAFE_PRIME_BOUND,
)
