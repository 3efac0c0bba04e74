"""Verification suites: exact brute-force checks of the code/graph/function identities."""

from qnl.verify.checks import (
    check_apc_equals_d,
    check_eq44,
    check_eq322,
    check_epc_equals_db,
    check_graph_state,
    check_lattice_gap,
    check_par_alpha,
    check_par_bound,
    check_wk,
)
from qnl.verify.models import CheckFailure, CheckReport, SuiteResult
from qnl.verify.registry import ALL_SUITES, SuiteRegistry, build_registry

__all__ = [
    "ALL_SUITES",
    "CheckFailure",
    "CheckReport",
    "SuiteRegistry",
    "SuiteResult",
    "build_registry",
    "check_apc_equals_d",
    "check_eq322",
    "check_eq44",
    "check_epc_equals_db",
    "check_graph_state",
    "check_lattice_gap",
    "check_par_alpha",
    "check_par_bound",
    "check_wk",
]
