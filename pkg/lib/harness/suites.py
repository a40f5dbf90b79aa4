"""Identity suites over every representation family.

A suite receives a SuiteRun and records one case per identity: `check` expects the
residual to vanish, `expect_failure` expects it not to. Cases are named by what
they compare so that reports can be diffed between runs.
"""

from __future__ import annotations

# Native libraries
import logging, os, random, time
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from os.path import basename
from typing import Any, Callable

# Local libraries
from . import errors
from .report import CaseFailure, VerificationReport, residual_summary
from lib import bkl, fox, gassner, lawrence, quantum
from lib.braid import BraidWord, Convention, Perm, forget_last_strand, is_pure, pure_generator, random_pure_word, random_word
from lib.ring import LaurentPoly, Matrix, VarSet, collapse, q_binomial, q_factorial, t_binomial, t_factorial, t_trinomial, total
from lib.utility.search import suggest

# Constants
DEFAULT_SEED = 42
DEFAULT_SAMPLES = 50
WORD_LENGTH = 6
FOX_SAMPLES = 5
PURE_FACTORS = (1, 3)

name = basename(__file__)[:-3]
log = logging.getLogger(name)


# ---------------------> Registry


@dataclass(frozen=True)
class SuiteParams:
	seed    : int
	max_n   : int
	max_m   : int
	samples : int

	def to_dict(self) -> dict[str, int]:
		return {'max_m': self.max_m, 'max_n': self.max_n, 'samples': self.samples}

@dataclass(frozen=True)
class Suite:
	name     : str
	func     : Callable[[SuiteRun], None]
	defaults : dict[str, int] = field(default_factory=dict)

SUITES: dict[str, Suite] = {}

def suite(name: str, **defaults: int) -> Callable:
	def decorator(func: Callable[[SuiteRun], None]) -> Callable[[SuiteRun], None]:
		SUITES[name] = Suite(name, func, defaults)
		return func
	return decorator


class SuiteRun:
	"""Collects cases for one report; the rng is seeded once per suite."""

	def __init__(self, suite: Suite, params: SuiteParams) -> None:
		self.suite    : Suite = suite
		self.params   : SuiteParams = params
		self.rng      : random.Random = random.Random(params.seed)
		self.cases    : int = 0
		self.failures : list[CaseFailure] = []

	def check(self, case: str, residual: Any) -> bool:
		self.cases += 1
		nonzero, terms = residual_summary(residual)
		if nonzero:
			log.warning(f'[{self.suite.name}] {case}: {nonzero} nonzero entries, first has {terms} terms')
			self.failures.append(CaseFailure(case, nonzero, terms))
		return not nonzero

	def expect_failure(self, case: str, residual: Any) -> bool:
		self.cases += 1
		nonzero, _ = residual_summary(residual)
		if not nonzero:
			log.warning(f'[{self.suite.name}] {case}: vanished but should not')
			self.failures.append(CaseFailure(case, 0, 0))
		return bool(nonzero)


def default_seed() -> int:
	return int(os.getenv('BRAIDREP_SEED', DEFAULT_SEED))

def default_samples() -> int:
	return int(os.getenv('BRAIDREP_SAMPLES', DEFAULT_SAMPLES))

def default_cutoff() -> int:
	return int(os.getenv('BRAIDREP_VERMA_CUTOFF', quantum.DEFAULT_CUTOFF))

def suite_names() -> list[str]:
	return list(SUITES)

def find_suite(name: str) -> Suite:
	if name in SUITES:
		return SUITES[name]

	raise errors.UnknownSuiteError(name, suggest(SUITES, name))

def run_suite(name: str, seed: int | None = None, max_n: int | None = None,
			  max_m: int | None = None, samples: int | None = None) -> VerificationReport:
	found = find_suite(name)
	params = SuiteParams(
		seed=default_seed() if seed is None else seed,
		max_n=found.defaults.get('max_n', 0) if max_n is None else max_n,
		max_m=found.defaults.get('max_m', 0) if max_m is None else max_m,
		samples=found.defaults.get('samples', default_samples()) if samples is None else samples
	)

	log.info(f'Running suite `{found.name}` with seed {params.seed} and {params.to_dict()}')
	run = SuiteRun(found, params)
	start = time.perf_counter()
	found.func(run)
	wall_time = time.perf_counter() - start

	report = VerificationReport(found.name, params.seed, params.to_dict(), run.cases, run.failures, wall_time)
	log.info(f'Suite `{found.name}` finished {run.cases} cases with {len(run.failures)} failures in {wall_time:.2f}s')
	return report

def run_all(seed: int | None = None, max_n: int | None = None,
			max_m: int | None = None, samples: int | None = None) -> list[VerificationReport]:
	return [run_suite(key, seed, max_n, max_m, samples) for key in SUITES]


# ---------------------> Shared cases


def _relations(n: int) -> list[tuple[str, BraidWord, BraidWord]]:
	"""Braid relations of B_n as (case, left, right)."""

	pairs = []
	for i in range(1, n - 1):
		pairs.append((
			f'n={n} {i},{i + 1},{i}',
			BraidWord.parse(f'{i} {i + 1} {i}', n),
			BraidWord.parse(f'{i + 1} {i} {i + 1}', n)
		))
	for i, j in combinations(range(1, n), 2):
		if j - i >= 2:
			pairs.append((f'n={n} {i},{j}', BraidWord.parse(f'{i} {j}', n), BraidWord.parse(f'{j} {i}', n)))
	return pairs

def _random_poly(vars: VarSet, rng: random.Random, terms: int = 4, spread: int = 3) -> LaurentPoly:
	return total((
		vars.monomial({name: rng.randint(-spread, spread) for name in vars}, rng.randint(-5, 5))
		for _ in range(terms)
	), vars)

def _short_pure_words(n: int, rng: random.Random, count: int) -> list[BraidWord]:
	# Artin images grow quickly, so words fed to Fox calculus stay short
	return [random_pure_word(n, rng, 1, 2) for _ in range(count)]


# ---------------------> Suites


@suite('ring-axioms', max_n=6, samples=25)
def ring_axioms(run: SuiteRun) -> None:
	vars = VarSet.of('q', 's', 't')
	for index in range(run.params.samples):
		a, b, c = (_random_poly(vars, run.rng) for _ in range(3))
		run.check(f'sample {index} commutativity', [a + b - (b + a), a * b - b * a])
		run.check(f'sample {index} associativity', [(a + b) + c - (a + (b + c)), (a * b) * c - a * (b * c)])
		run.check(f'sample {index} distributivity', a * (b + c) - (a * b + a * c))
		monomial = vars.monomial({name: run.rng.randint(-4, 4) for name in vars}, run.rng.choice((1, -1)))
		run.check(f'sample {index} unit', monomial * monomial.inverse() - 1)

	q, t = vars.var('q'), vars.var('t')
	inverse = t ** -1
	for k in range(run.params.max_n + 1):
		for l in range(k + 1):
			run.check(f'[{k};{l}]_q factorials', q_binomial(k, l, q) * q_factorial(l, q) * q_factorial(k - l, q) - q_factorial(k, q))
			run.check(f'({k};{l})_t factorials', t_binomial(k, l, t) * t_factorial(l, t) * t_factorial(k - l, t) - t_factorial(k, t))
			if 0 < l < k:
				pascal = t_binomial(k - 1, l - 1, t) + t ** l * t_binomial(k - 1, l, t)
				run.check(f'({k};{l})_t pascal', t_binomial(k, l, t) - pascal)
			for j in range(k - l + 1):
				product = t_factorial(l, inverse) * t_factorial(j, inverse) * t_factorial(k - l - j, inverse)
				run.check(f'({k};{l},{j},{k - l - j})_t^-1 factorials', t_trinomial(k, l, j, k - l - j, inverse) * product - t_factorial(k, inverse))


@suite('braid-relations-gassner', max_n=5)
def braid_relations_gassner(run: SuiteRun) -> None:
	t = VarSet.of('t').var('t')
	for n in range(2, run.params.max_n + 1):
		for case, left, right in _relations(n):
			run.check(f'{case} induced', gassner.induced_gassner(left) - gassner.induced_gassner(right))
			run.check(f'{case} burau', gassner.burau(left, t) - gassner.burau(right, t))
		word = random_word(n, WORD_LENGTH, run.rng)
		run.check(f'n={n} word times inverse', (gassner.induced_gassner(word * word.inverse())).is_identity())


@suite('conjugation', max_n=4)
def conjugation(run: SuiteRun) -> None:
	for n in range(2, run.params.max_n + 1):
		for k in range(1, n):
			generator = BraidWord.generator(n, k)
			run.check(f'n={n} sigma{k} sign +1', quantum.check_conjugation(generator, 1))
			run.expect_failure(f'n={n} sigma{k} sign -1', quantum.check_conjugation(generator, -1))
		for case, left, right in _relations(n):
			run.check(f'{case} quant', quantum.quant(left) - quantum.quant(right))

	word = random_pure_word(3, run.rng)
	run.check(f'pure word {word}', quantum.check_conjugation(word))

	# Truncated Verma module identities below the cutoff
	verma = quantum.VermaTrunc(default_cutoff() + 1)
	q = verma.q
	e, f, k = verma.matrix('E'), verma.matrix('F'), verma.matrix('K')
	below = list(range(verma.cutoff))
	commutator = (e @ f - f @ e).submatrix(list(range(verma.cutoff + 1)), below)
	run.check('verma [E,F]', commutator - (k - k.inverse()).submatrix(list(range(verma.cutoff + 1)), below))
	run.check('verma F F = [2] F^(2)', f @ f - verma.matrix('F', 2).scale(q + q ** -1))

	# Local R-matrix on the weight one subspace
	s = VarSet.of('s').var('s')
	for vacuum, expectation in ((-1, run.check), (1, run.expect_failure)):
		r1, r2 = (quantum.r_matrix_local(3, i, s, vacuum=vacuum) for i in (1, 2))
		expectation(f'r-matrix braid relation vacuum {vacuum}', r1 @ r2 @ r1 - r2 @ r1 @ r2)
	for n in range(2, run.params.max_n + 1):
		identity = Perm.identity(n)
		for i in range(1, n):
			weight_one = quantum.r_matrix_local(n, i, s, vacuum=-1).submatrix(list(range(1, n + 1)), list(range(1, n + 1)))
			action = collapse(quantum.quant(BraidWord.generator(n, i), -1, [identity]).matrix(identity), 's', 's')
			run.check(f'n={n} r-matrix at {i} against quant sign -1', weight_one + action)


@suite('bkl-kernel', max_n=5)
def bkl_kernel(run: SuiteRun) -> None:
	for n in range(2, run.params.max_n + 1):
		boundary = bkl.boundary_matrix(n)
		uncolored = VarSet.of('t')
		t = uncolored.var('t')
		images = {f'q{i}': 1 for i in range(1, n + 1)}
		for j, k in bkl.fork_basis(n):
			vector = bkl.kernel_vector(n, j, k)
			run.check(f'n={n} boundary of v({j},{k})', boundary @ vector)
			run.check(f'n={n} v({j},{k}) at q=1', vector.substitute(images, uncolored).column(0)[bkl.relator_basis(n).index((j, k))] - (1 - t) * (t + 1) ** 2)


def _bkl_display() -> tuple[Matrix, Matrix]:
	vars = bkl.UNCOLORED
	q, t = vars.var('q'), vars.var('t')
	first = Matrix(vars, [[q ** 2 * t, 0, q ** 2 - q], [0, 0, q], [0, 1, 1 - q]])
	second = Matrix(vars, [[0, q, 0], [1, 1 - q, 0], [0, t * (q ** 2 - q), q ** 2 * t]])
	return first, second

@suite('bkl-relations', max_n=5)
def bkl_relations(run: SuiteRun) -> None:
	for i, display in enumerate(_bkl_display(), start=1):
		run.check(f'displayed BKL{i}', bkl.bkl_matrix(3, i) - display)

	for n in range(2, run.params.max_n + 1):
		identity = Perm.identity(n)
		for case, left, right in _relations(n):
			run.check(f'{case} uncolored', bkl.bkl(left) - bkl.bkl(right))
			run.check(f'{case} colored', bkl.cbkl(left) - bkl.cbkl(right))
		for i in range(1, n):
			generator = BraidWord.generator(n, i)
			run.check(f'n={n} sigma{i} colored against induced', bkl.cbkl(generator) - bkl.cbkl_induced(generator, [identity]).matrix(identity))

	vars = bkl.colored_variables(bkl.pairing.STRANDS)
	q1, q2 = vars.var('q1'), vars.var('q2')
	run.check('identification of sigma1 v(2,4)', bkl.identification_residual(bkl.coefficients()))
	run.check('identification is unique', bool(bkl.identification_determinant()))
	run.expect_failure('identification with C = 1 - q2', bkl.identification_residual(Matrix(vars, [[q1 ** 2 - q1], [q1], [1 - q2]])))

	# σ1(v_(2,4)) coefficients read off the action itself
	column = bkl.CBKL.generator(4, 1, 1).column(bkl.fork_basis(4).index((2, 4)))
	basis = bkl.fork_basis(4)
	candidate = Matrix(vars, [[column[basis.index(pair)]] for pair in ((1, 2), (1, 4), (2, 4))])
	run.check('identification matches the action', bkl.identification_residual(candidate))


def _lawrence_display() -> tuple[Matrix, Matrix]:
	vars = lawrence.UNCOLORED
	s, t = vars.var('s'), vars.var('t')
	first = Matrix(vars, [[s ** 2 * t ** -1, -s ** 2 * (1 + t ** -1), s ** 2], [0, -s, s], [0, 0, 1]])
	second = Matrix(vars, [[1, 0, 0], [1, -s, 0], [1, -s * (1 + t ** -1), s ** 2 * t ** -1]])
	return first, second

@suite('lawrence-relations', max_n=5, max_m=3)
def lawrence_relations(run: SuiteRun) -> None:
	for i, display in enumerate(_lawrence_display(), start=1):
		run.check(f'displayed L{i}', lawrence.lawrence_matrix(3, 2, i) - display)

	s, t = lawrence.UNCOLORED.var('s'), lawrence.UNCOLORED.var('t')
	for m in range(1, run.params.max_m + 1):
		two_strands = Matrix(lawrence.UNCOLORED, [[(-1) ** m * t ** -(m * (m - 1) // 2) * s ** m]])
		run.check(f'n=2 m={m} single code', lawrence.lawrence_matrix(2, m, 1) - two_strands)

		for n in range(2, run.params.max_n + 1):
			for case, left, right in _relations(n):
				run.check(f'{case} m={m} uncolored', lawrence.lawrence(left, m) - lawrence.lawrence(right, m))
				if n <= 4:
					run.check(f'{case} m={m} colored', lawrence.claw(left, m) - lawrence.claw(right, m))

		if run.params.max_n >= 4 and m in lawrence.FOUR_STRANDS:
			vars = lawrence.colored_variables(4)
			for i in range(1, 4):
				written = lawrence.four_strand_matrix(m, i, vars)
				run.check(f'n=4 m={m} sigma{i} written out', lawrence.colored_lawrence(m).generator(4, i, i) - written)


@suite('p-basis')
def p_basis(run: SuiteRun) -> None:
	for i, residual in enumerate(lawrence.p_residuals(), start=1):
		run.check(f'P BKL{i}(s,1/t) = L{i}(s,t) P', residual)
	run.check('P from fork decompositions', lawrence.p_from_forks() - lawrence.change_of_basis_p())


@suite('specializations', max_n=4, max_m=2, samples=5)
def specializations(run: SuiteRun) -> None:
	t = VarSet.of('t').var('t')
	for n in range(2, run.params.max_n + 1):
		for index in range(run.params.samples):
			word = random_word(n, WORD_LENGTH, run.rng)
			run.check(f'n={n} sample {index} cbkl at q', collapse(bkl.cbkl(word), 'q', 'q') - bkl.bkl(word))
			run.check(f'n={n} sample {index} gamma at t', collapse(gassner.gamma(word), 't', 't') - gassner.burau(word, t))
			source = run.rng.choice(list(Perm.all(n)))
			run.check(f'n={n} sample {index} induced at t', collapse(gassner.induced_gassner(word, [source]).matrix(source), 't', 't') - gassner.burau(word, t))
			for m in range(1, run.params.max_m + 1):
				run.check(f'n={n} sample {index} claw m={m} at s', collapse(lawrence.claw(word, m), 's', 's') - lawrence.lawrence(word, m))

		for i in range(1, n):
			run.check(f'n={n} sigma{i} level one against reduced burau', lawrence.burau_residual(n, i))

	for index in range(min(run.params.samples, FOX_SAMPLES)):
		word = random_word(3, 3, run.rng)
		run.check(f'fox sample {index} at t', collapse(fox.gassner_matrix(word), 't', 't') - gassner.burau(word, t))


@suite('fadell-neuwirth', max_n=4, samples=20)
def fadell_neuwirth(run: SuiteRun) -> None:
	n = run.params.max_n
	last = {f't{n}': 1}
	smaller = VarSet.indexed('t', n - 1)
	for index in range(run.params.samples):
		word = random_pure_word(n, run.rng)
		deleted = gassner.gamma(word).substitute(last, smaller).delete_last()
		run.check(f'n={n} sample {index} gamma', deleted - gassner.gamma(forget_last_strand(word)))

	for index, word in enumerate(_short_pure_words(3, run.rng, min(run.params.samples, FOX_SAMPLES))):
		deleted = fox.gassner_matrix(word).substitute({'t3': 1}, VarSet.indexed('t', 2)).delete_last()
		run.check(f'n=3 sample {index} fox', deleted - fox.gassner_matrix(forget_last_strand(word)))


@suite('pure-multiplicativity', max_n=4, max_m=2)
def pure_multiplicativity(run: SuiteRun) -> None:
	n, m = run.params.max_n, run.params.max_m
	identity = Perm.identity(n)
	families = [(bkl.CBKL, 'cbkl'), (lawrence.colored_lawrence(m), f'claw m={m}')]
	for index in range(run.params.samples):
		u, v = (random_pure_word(n, run.rng, *PURE_FACTORS) for _ in range(2))
		run.check(f'n={n} pair {index} gamma', gassner.gamma(u * v) - gassner.gamma(u) @ gassner.gamma(v))
		for family, label in families:
			# colored(v, start=colored(u)) is colored(u) @ colored(v) by associativity
			run.check(f'n={n} pair {index} {label}', family.colored(u * v) - family.colored(v, start=family.colored(u)))

		word = u if index % 2 else random_word(n, WORD_LENGTH, run.rng)
		run.check(f'n={n} word {index} purity gate', gassner.induced_gassner(word, [identity]).fixes(identity) == is_pure(word))

	# A(1,2) followed by the non-pure σ1 recolours both crossings of A(1,2)
	u, v = pure_generator(n, 1, 2), BraidWord.generator(n, 1)
	run.expect_failure(f'n={n} gamma with non-pure right factor', gassner.gamma(u * v) - gassner.gamma(u) @ gassner.gamma(v))

	for index in range(min(run.params.samples, FOX_SAMPLES)):
		u, v = random_word(3, 4, run.rng), random_word(3, 4, run.rng)
		run.check(f'n=3 pair {index} induced', gassner.induced_gassner(u * v) - gassner.compose(gassner.induced_gassner(u), gassner.induced_gassner(v)))

	words = _short_pure_words(3, run.rng, 2 * min(run.params.samples, FOX_SAMPLES))
	for index, (u, v) in enumerate(zip(words[::2], words[1::2])):
		run.check(f'n=3 pair {index} fox', fox.gassner_matrix(u * v) - fox.gassner_matrix(u) @ fox.gassner_matrix(v))


@suite('over-strand-convention', max_n=4, max_m=2)
def over_strand_convention(run: SuiteRun) -> None:
	families = [gassner.GASSNER, bkl.CBKL, lawrence.colored_lawrence(run.params.max_m)]
	for family in families:
		for convention in Convention:
			expectation = run.check if convention is family.convention else run.expect_failure
			for n in range(3, run.params.max_n + 1):
				for i in range(1, n - 1):
					left = BraidWord.parse(f'{i} {i + 1} {i}', n)
					right = BraidWord.parse(f'{i + 1} {i} {i + 1}', n)
					residual = family.colored(left, convention) - family.colored(right, convention)
					expectation(f'{family.family} {convention.value} n={n} {i},{i + 1},{i}', residual)


@suite('fox-gassner', max_n=4)
def fox_gassner(run: SuiteRun) -> None:
	t = VarSet.of('t').var('t')
	for n in range(2, run.params.max_n + 1):
		for r, s in combinations(range(1, n + 1), 2):
			word = pure_generator(n, r, s)
			magnus, colored = fox.gassner_matrix(word), gassner.gamma(word)
			run.check(f'A({r},{s}) in PB{n} trace', magnus.trace() - colored.trace())
			run.check(f'A({r},{s}) in PB{n} determinant', magnus.det() - colored.det())
			run.check(f'A({r},{s}) in PB{n} dictionary', fox.dictionary_residual(word))
			run.check(f'A({r},{s}) in PB{n} fox at t', collapse(magnus, 't', 't') - gassner.burau(word, t))
			run.check(f'A({r},{s}) in PB{n} gamma at t', collapse(colored, 't', 't') - gassner.burau(word, t))
			run.check(f'A({r},{s}) in PB{n} reduced', fox.reduced_magnus_matrix(word).shape == (n - 1, n - 1))
			for i in range(1, n + 1):
				image = fox.artin_action(word, fox.FreeWord.generator(i))
				run.check(f'A({r},{s}) in PB{n} fundamental x{i}', fox.fundamental_residual(image, n))

	for index, word in enumerate(_short_pure_words(3, run.rng, FOX_SAMPLES)):
		run.check(f'n=3 sample {index} dictionary', fox.dictionary_residual(word))


@suite('dimensions', max_n=8, max_m=8)
def dimensions(run: SuiteRun) -> None:
	for n in range(2, run.params.max_n + 1):
		run.check(f'n={n} fork basis', len(bkl.fork_basis(n)) == n * (n - 1) // 2)
		for m in range(run.params.max_m + 1):
			run.check(f'n={n} m={m} code sequences', len(lawrence.enumerate_codes(n, m)) == comb(n + m - 2, m) == lawrence.dimension(n, m))
