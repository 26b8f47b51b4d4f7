"""Independent symbolic evaluation of graph cochains on polynomial polyvector fields."""

from .cochain import FootedGraph, chevalley_d, eval_B, eval_C, tau_sign, zeta_operator
from .poly import MultiPoly
from .polyvector import PolyVector, nabla, q_bracket, schouten, wedge

__all__ = [
    "FootedGraph",
    "MultiPoly",
    "PolyVector",
    "chevalley_d",
    "eval_B",
    "eval_C",
    "nabla",
    "q_bracket",
    "schouten",
    "tau_sign",
    "wedge",
    "zeta_operator",
]
