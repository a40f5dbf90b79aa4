
from . import errors

from .graded import CACHE_SIZE, GradedMap, InducedRepresentation, compose
from .burau import Gassner, GASSNER, burau_block, reduced_burau_block, burau, gamma, induced_gassner
