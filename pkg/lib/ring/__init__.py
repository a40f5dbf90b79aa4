from . import errors

from .polynomial import VarSet, LaurentPoly, parse, total
from .numbers import q_number, q_factorial, q_binomial, t_number, t_factorial, t_binomial, t_trinomial
from .matrix import Matrix, char_poly, inverse, block_matrix, collapse_variables, collapse
