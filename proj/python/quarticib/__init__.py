"""Integral bases of quartic number fields defined by X^4 + aX + b."""

from ._core import (
    FactorizationIncompleteError,
    HypothesisError,
    NotRegularError,
    QuarticError,
    ReducibleError,
    TableMismatchError,
    UnnormalizedError,
    disc,
    discriminant,
    index_bound,
    integral_basis,
    is_element_integral,
    is_p_regular,
    newton_polygon,
    oracle_vp_index,
    p_basis,
    p_basis_regular,
)

__all__ = [
    "FactorizationIncompleteError",
    "HypothesisError",
    "NotRegularError",
    "QuarticError",
    "ReducibleError",
    "TableMismatchError",
    "UnnormalizedError",
    "disc",
    "discriminant",
    "index_bound",
    "integral_basis",
    "is_element_integral",
    "is_p_regular",
    "newton_polygon",
    "oracle_vp_index",
    "p_basis",
    "p_basis_regular",
]
