
from . import errors

from .extensions import yield_extensions, extension_name
from .search import fuzzy_search, suggest, SearchItem
from .ui import ANSIFactory, Summary
from .wrappers import signature_command
from .registry import Registry, Extension, command
