
from . import errors

from .signature import Signature, Matched, Unmatched
from .command import Command
