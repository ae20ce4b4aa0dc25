"""Essential-rank-metric codes over finite fields."""

from .codegen import CodeParams, construct_code, x_set
from .essdecode import decode
from .essrank import EssCode, ess_rank, ess_variables
from .galois import BaseField, ExtField, LBasis
from .polyring import DiffOp, HomogPoly

__all__ = [
    "BaseField",
    "CodeParams",
    "DiffOp",
    "EssCode",
    "ExtField",
    "HomogPoly",
    "LBasis",
    "construct_code",
    "decode",
    "ess_rank",
    "ess_variables",
    "x_set",
]
