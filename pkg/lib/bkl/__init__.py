
from . import errors

from .complex import colored_variables, fork_basis, relator_basis, boundary_matrix, kernel_vector, kernel_coefficient
from .action import ColoredBKL, CBKL, UNCOLORED, bkl_action_matrix, bkl_matrix, bkl, cbkl, cbkl_induced
from .pairing import standard_pairing, identification_system, identification_residual, identification_determinant, coefficients
