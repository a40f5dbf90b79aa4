
from . import errors

from .verma import VermaTrunc, verma_action, DEFAULT_CUTOFF
from .rmatrix import r_matrix_weight1, r_matrix_local
from .action import Quant, quant, phi, gassner_in_colors, check_conjugation, PINNED_SIGN
