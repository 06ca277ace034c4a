"""Operational surface: CLI, wire formats, golden corpus and the on-disk cache."""
from .cache import DecompositionCache, default_cache
from .golden import GOLDEN_COLUMNS, load_golden, verify_rows
from .serialize import SCHEMA_VERSION, case_descriptor, case_from_descriptor, case_row

__all__ = [
    "DecompositionCache", "default_cache", "GOLDEN_COLUMNS", "load_golden", "verify_rows",
    "SCHEMA_VERSION", "case_descriptor", "case_from_descriptor", "case_row",
]
