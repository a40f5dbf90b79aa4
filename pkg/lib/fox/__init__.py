
from . import errors

from .algebra import FreeWord, GroupRingElement, word_sum
from .calculus import (
	fox_derivative, abelianize, artin_action, variables, magnus_matrix, gassner_matrix, g_basis_matrix,
	reduced_magnus_matrix, fundamental_residual, dictionary_matrix, dictionary_residual
)
