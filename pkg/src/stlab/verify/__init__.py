from stlab.verify.claims import CLAIMS, parse_grid, run_claim
from stlab.verify.report import EXIT_CODES, SCHEMA, Instance, Report, merge_status

__all__ = ["CLAIMS", "EXIT_CODES", "SCHEMA", "Instance", "Report", "merge_status", "parse_grid", "run_claim"]
