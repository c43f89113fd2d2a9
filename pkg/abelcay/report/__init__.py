
from .suites import Check, SuiteResult, SUITES, run_suite, PASS, FAIL, FLAGGED

from .emit import dumps, profile_json, profile_from_json
from .emit import write_extremal_csv, write_frontier_csv, extremal_json
from .emit import EXTREMAL_HEADER, FRONTIER_HEADER

from .cli import main, build_parser
