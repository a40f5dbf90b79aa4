from __future__ import annotations

# Native libraries
import json
from functools import singledispatch
from typing import Any

# Local libraries
from . import errors
from lib.gassner import GradedMap
from lib.ring import Matrix


# ---------------------> JSON


def _terms(matrix: Matrix) -> list[list[list[dict[str, Any]]]]:
	return [[entry.to_json()['terms'] for entry in row] for row in matrix.rows]

@singledispatch
def to_json(result: Any) -> str:
	raise errors.UnsupportedResultError(result)

@to_json.register
def _(result: Matrix) -> str:
	return json.dumps({'vars': list(result.vars.names), 'rows': _terms(result)}, sort_keys=True)

@to_json.register
def _(result: GradedMap) -> str:
	return json.dumps({
		'n': result.n,
		'vars': list(result.vars.names),
		'blocks': [
			{'src': list(source.images), 'dst': list(target.images), 'matrix': _terms(matrix)}
			for source, (target, matrix) in result.blocks.items()
		]
	}, sort_keys=True)


# ---------------------> LaTeX


@singledispatch
def to_latex(result: Any) -> str:
	raise errors.UnsupportedResultError(result)

@to_latex.register
def _(result: Matrix) -> str:
	body = ' \\\\ '.join(' & '.join(entry.to_latex() for entry in row) for row in result.rows)
	return f'\\begin{{pmatrix}} {body} \\end{{pmatrix}}\n'

@to_latex.register
def _(result: GradedMap) -> str:
	return ''.join(f'% {source} -> {target}\n' + to_latex(matrix) for source, (target, matrix) in result.blocks.items())


# ---------------------> Monomial CSV


def _monomial_lines(matrix: Matrix, prefix: str = '') -> list[str]:
	# One line per nonzero term: row, column, coefficient, exponents
	lines = []
	for i, j, entry in matrix.nonzero_entries():
		for exps, coeff in entry.terms:
			lines.append(prefix + ','.join(map(str, (i + 1, j + 1, coeff) + exps)))
	return lines

@singledispatch
def to_csv(result: Any) -> str:
	raise errors.UnsupportedResultError(result)

@to_csv.register
def _(result: Matrix) -> str:
	header = ','.join(('row', 'col', 'coeff') + result.vars.names)
	return '\n'.join([header] + _monomial_lines(result)) + '\n'

@to_csv.register
def _(result: GradedMap) -> str:
	header = ','.join(('src', 'dst', 'row', 'col', 'coeff') + result.vars.names)
	lines = [header]
	for source, (target, matrix) in result.blocks.items():
		lines.extend(_monomial_lines(matrix, f'{source},{target},'))
	return '\n'.join(lines) + '\n'


# ---------------------> Dispatch


EXPORTERS = {
	'json': to_json,
	'latex': to_latex,
	'csv-monomial': to_csv
}

def export_matrix(result: Matrix | GradedMap, format: str) -> bytes:
	"""Canonical rendering of a matrix or graded map; identical inputs give identical bytes."""

	if format not in EXPORTERS:
		raise errors.UnknownFormatError(format)
	return EXPORTERS[format](result).encode('utf8')
