"""Exact incidence algebras over finite posets, their idealization rings,
and the classification of ring involutions on the idealization."""

from .errors import IncalgError
from .fia import IncFn, IncidenceAlgebra
from .fields import QQ, PrimeField, RationalField, SquareClass, parse_field
from .idealization import DElem, DLinearMap, d_anti_isomorphic
from .involutions import (
    InvolutionSpec, base_involution, build, check_hypotheses, classify,
    equivalent, equivalent_inner, recognize, rho_eps, sigma_lambda,
    symmetric_decompose,
)
from .posets import LambdaDecomposition, Poset, PosetMap, lambda_decomposition

__all__ = [
    "DElem", "DLinearMap", "IncFn", "IncalgError", "IncidenceAlgebra",
    "InvolutionSpec", "LambdaDecomposition", "Poset", "PosetMap",
    "PrimeField", "QQ", "RationalField", "SquareClass", "base_involution",
    "build", "check_hypotheses", "classify", "d_anti_isomorphic",
    "equivalent", "equivalent_inner", "lambda_decomposition", "parse_field",
    "recognize", "rho_eps", "sigma_lambda", "symmetric_decompose",
]

__version__ = "0.1.0"
