# Native libraries
import re as regex
from dataclasses import dataclass
from typing import Any, Iterable, Tuple

# Constants
MIN_RELATIVE_OVERLAP = 0.5
FUZZY_OVERLAP_MARGIN = 1
MAX_RELATIVE_DISTANCE = 0.5
FUZZY_DISTANCE_MARGIN = 2


# ---------------------> External Classes


@dataclass
class SearchItem:
	item              : Any
	text              : str
	sanitized         : str   = ''
	overlap           : int   = 0
	relative_overlap  : float = 0.0
	distance          : int   = 0
	relative_distance : float = 0.0
	ranking           : int   = 0


# ---------------------> Internal Functions


def _sanitize(text: str) -> str:
	# Lowercase, keeping word characters and dashes so suite names stay intact
	return regex.sub(r'[^\w\- ]', '', text.lower())

def _overlap(a: str, b: str) -> int:
	"""Length of the longest common substring."""

	best = 0
	previous = [0] * (len(b) + 1)
	for i in range(1, len(a) + 1):
		current = [0] * (len(b) + 1)
		for j in range(1, len(b) + 1):
			if a[i - 1] == b[j - 1]:
				current[j] = previous[j - 1] + 1
				best = max(best, current[j])
		previous = current
	return best

def _distance(a: str, b: str) -> int:
	"""Levenshtein distance."""

	previous = list(range(len(b) + 1))
	for i, left in enumerate(a, start=1):
		current = [i]
		for j, right in enumerate(b, start=1):
			current.append(min(previous[j] + 1, current[j - 1] + 1, previous[j - 1] + (left != right)))
		previous = current
	return previous[-1]


# ---------------------> External Functions


def fuzzy_search(options: list[SearchItem], query: str) -> Tuple[bool, list[SearchItem]]:
	# Ranks options by overlap with the query first and edit distance second
	#   - conclusive when the best option is close enough and clearly ahead of the runner-up

	if not options:
		return False, []

	query = _sanitize(query)
	for option in options:
		option.sanitized = _sanitize(option.text)
		size = max(len(option.sanitized), 1)
		option.overlap = _overlap(query, option.sanitized)
		option.relative_overlap = option.overlap / size
		option.distance = _distance(query, option.sanitized)
		option.relative_distance = option.distance / size

	options.sort(key=lambda option: (-option.overlap, option.distance))
	for ranking, option in enumerate(options, start=1):
		option.ranking = ranking

	best = options[0]
	conclusive = best.relative_overlap > MIN_RELATIVE_OVERLAP and \
				 best.relative_distance < MAX_RELATIVE_DISTANCE and (
					 len(options) < 2 or
					 best.overlap > options[1].overlap + FUZZY_OVERLAP_MARGIN or
					 best.distance < options[1].distance - FUZZY_DISTANCE_MARGIN
				 )
	return conclusive, options

def suggest(names: Iterable[str], query: str) -> str | None:
	"""Closest name when the search is conclusive."""

	conclusive, options = fuzzy_search([SearchItem(name, name) for name in names], query)
	return options[0].text if conclusive else None
