"""Executable property suite; importing this package registers every check."""
from src.verify.registry import (
    Check,
    CheckRecord,
    VerifyContext,
    VerifyReport,
    check,
    registered_checks,
    run_suite,
    tolerance_record,
)
from src.verify import checks  # noqa: F401

__all__ = [
    "Check",
    "CheckRecord",
    "VerifyContext",
    "VerifyReport",
    "check",
    "registered_checks",
    "run_suite",
    "tolerance_record",
]
