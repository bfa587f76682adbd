"""Exact arithmetic for the Hopf superalgebras sQSym, sNCQSym, sNCSym and sFQSym."""

from .combinat import (
    Bidegree,
    DottedComposition,
    InvalidIndexError,
    ParseError,
    Part,
    SetSupercomposition,
    alpha_of,
    bidegree,
    gamma_of,
    global_descents,
    lift,
    parse_dotted,
    parse_index,
    parse_supercomposition,
    shift,
    standardize,
    w_of,
)
from .hopf import (
    NotSymmetricError,
    UnsupportedConversion,
    abelianize,
    antipode,
    change_basis,
    coproduct,
    counit,
    multiply,
    super_tensor_mul,
)
from .linear import Basis, LinearCombination, TensorCombination, basis_element, unit

__all__ = [
    "Bidegree",
    "DottedComposition",
    "InvalidIndexError",
    "ParseError",
    "Part",
    "SetSupercomposition",
    "alpha_of",
    "bidegree",
    "gamma_of",
    "global_descents",
    "lift",
    "parse_dotted",
    "parse_index",
    "parse_supercomposition",
    "shift",
    "standardize",
    "w_of",
    "NotSymmetricError",
    "UnsupportedConversion",
    "abelianize",
    "antipode",
    "change_basis",
    "coproduct",
    "counit",
    "multiply",
    "super_tensor_mul",
    "Basis",
    "LinearCombination",
    "TensorCombination",
    "basis_element",
    "unit",
]

__version__ = "0.1.0"
