"""Exact arithmetic: rationals, Z[t]/Q[t], Q(t), Q((1/t)), R[x]/(f) and matrices."""
from .algebraic import AlgebraicElem, Modulus, alg_inv, alg_mul
from .laurent import INF, LaurentSeries, laurent_add, laurent_inv, laurent_mul, valuation
from .matrix import Matrix, adjugate, char_poly, det_leibniz, mat_det, mat_inv, mat_mul
from .poly import Poly, poly_gcd, poly_xgcd
from .ratfunc import RatFunc
from .rational import Q, qdiv, qnorm

__all__ = [
    "AlgebraicElem", "INF", "LaurentSeries", "Matrix", "Modulus", "Poly", "Q", "RatFunc",
    "adjugate", "alg_inv", "alg_mul", "char_poly", "det_leibniz", "laurent_add", "laurent_inv",
    "laurent_mul", "mat_det", "mat_inv", "mat_mul", "poly_gcd", "poly_xgcd", "qdiv", "qnorm",
    "valuation",
]
