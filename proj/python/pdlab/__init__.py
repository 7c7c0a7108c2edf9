"""Pipe dreams, flows, rectification and identity checks."""

from ._pdlab import (
    PreconditionError,
    ResourceError,
    a_dagger,
    adjoint,
    corect,
    demazure_product,
    enumerate,
    identity_names,
    ins,
    insert,
    is_ordinary,
    is_reduced,
    length,
    permutation,
    plactic_product,
    poly,
    rect,
    rect_inverse,
    render,
    rsk_prime,
    shift,
    tab,
    verify,
    word,
    x_minus,
    x_plus,
    y_minus,
    y_plus,
)

__all__ = [
    "PreconditionError",
    "ResourceError",
    "a_dagger",
    "adjoint",
    "corect",
    "demazure_product",
    "enumerate",
    "identity_names",
    "ins",
    "insert",
    "is_ordinary",
    "is_reduced",
    "length",
    "permutation",
    "plactic_product",
    "poly",
    "rect",
    "rect_inverse",
    "render",
    "rsk_prime",
    "shift",
    "tab",
    "verify",
    "word",
    "x_minus",
    "x_plus",
    "y_minus",
    "y_plus",
]
