
# Native libraries
import json, logging, sys
from os.path import basename
from typing import Any

# Local libraries
from lib import harness, utility

# Constants
ALL_SUITES = 'all'
FAILURE = 1


# ---------------------> Setup


# Logging
name = basename(__file__)[:-3]
log = logging.getLogger(name)


# ---------------------> Verification extension


def setup(registry: utility.Registry) -> None:
	registry.add_extension(Verification(registry))
	log.info(f'Extension has been created: {name}')

class Verification(utility.Extension):
	name = name
	description = 'Runs identity suites and prints their reports'

	@utility.command(name='verify', description='Runs one identity suite, or all of them, and prints the report JSON')
	@utility.signature_command(
		usage='<(str) suite> [(int) --seed="seed"] [(int) --max-n="strands"] [(int) --max-m="points"] '
			  '[(int) --samples="count"] [--no-timing] [--quiet | --verbose]',
		thesaurus={'seed': ['s'], 'samples': ['k']}
	)
	def verify(self, summary: utility.Summary, params: dict[str, Any], flags: list[str], vars: dict[str, Any]) -> int:
		bounds = {
			'seed': vars.get('seed'),
			'max_n': vars.get('max-n'),
			'max_m': vars.get('max-m'),
			'samples': vars.get('samples')
		}
		timing = 'no-timing' not in flags

		# Run suites
		if params['suite'] == ALL_SUITES:
			reports = harness.run_all(**bounds)
			sys.stdout.write(json.dumps([report.to_dict(timing) for report in reports], indent=2) + '\n')
		else:
			reports = [harness.run_suite(params['suite'], **bounds)]
			sys.stdout.write(reports[0].to_json(timing) + '\n')

		# Summarise
		failed = [report for report in reports if not report.passed]
		summary.set_header(f'{len(reports) - len(failed)} of {len(reports)} suites passed')
		for report in failed:
			summary.set_field(report.suite, f'{len(report.failures)} of {report.cases} cases failed')

		if failed:
			summary.failed = True
			log.warning(f'Suites with failures: {", ".join(report.suite for report in failed)}')
			return FAILURE
