from . import errors

from .permutation import Perm
from .word import BraidWord, CrossingLabel, Convention
from .word import perm_of, is_pure, pure_generator, over_strand_labels, forget_last_strand, free_reduce, random_word, random_pure_word
