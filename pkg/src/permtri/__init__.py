"""Exhaustive verification toolkit for permutation trinomials over finite fields."""

from .gf import (
    CapExceededError,
    Elem,
    FieldMismatchError,
    GF,
    enumeration_cap,
    extension,
    field_of_order,
    make_field,
)

__version__ = "0.1.0"

__all__ = [
    "CapExceededError",
    "Elem",
    "FieldMismatchError",
    "GF",
    "enumeration_cap",
    "extension",
    "field_of_order",
    "make_field",
]
