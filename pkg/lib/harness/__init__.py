
from . import errors

from .report import CaseFailure, VerificationReport, residual_summary
from .suites import SUITES, Suite, SuiteParams, SuiteRun, suite, suite_names, find_suite, run_suite, run_all, default_seed, default_samples, default_cutoff
from .export import EXPORTERS, export_matrix, to_json, to_latex, to_csv
from .families import FAMILIES, Family, family_names, find_family, represent, specialize
