from . import errors

from .codes import CodeSequenceIndex, enumerate_codes, dimension
from .action import ColoredLawrence, UNCOLORED, colored_variables, colored_lawrence, lawrence_action_matrix, lawrence_matrix, lawrence, claw, lawrence_induced
from .basis import (
	multifork_weight, fork_decomposition, p_from_forks, change_of_basis_p, p_residuals, burau_dictionary, burau_residual,
	FOUR_STRANDS, four_strand_matrix
)
