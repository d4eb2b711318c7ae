from __future__ import annotations

"""Project-wide constants used across modules.

This module isolates public constants to reduce cross-module coupling.
"""

# Process exit codes for the CLI.
EXIT_OK: int = 0
EXIT_SELFTEST_FAILED: int = 1
EXIT_USAGE: int = 2
EXIT_IO: int = 3

# Verdict labels as they appear in records.
VERDICT_NOT_A_KNOT: str = "NOT_A_KNOT"
VERDICT_NOT_SLICE: str = "NOT_SLICE"
VERDICT_SLICE: str = "SLICE"
VERDICT_INCONCLUSIVE: str = "INCONCLUSIVE"

REASON_SIGNATURE: str = "signature"
REASON_LATTICE_EMBEDDING: str = "lattice_embedding"
REASON_COSET_COVERAGE: str = "coset_coverage"

# Record schema version; bump the minor part on additive changes only.
RECORD_SCHEMA_VERSION: str = "1.0"

# Fixed CSV column order (see docs/record_schema.md).
CSV_COLUMNS: tuple[str, ...] = (
    "tuple",
    "multiset",
    "verdict",
    "reason",
    "sigma",
    "det",
    "pairs",
    "single_twists",
    "simple_ribbon",
    "mutant_ribbon",
    "num_embedding_solutions",
    "max_R",
    "max_H_bar",
    "any_full_coverage",
    "single_twist_case",
)

# Orbit searches beyond this many strands get expensive quickly.
MAX_SEARCH_STRANDS: int = 9

# Default dimension cap for the generic embedding oracle.
DEFAULT_ORACLE_MAX_DIM: int = 30

# Largest a+b+c the selftest compares the generic search against the solver on.
DEFAULT_ORACLE_MAX_SUM: int = 21

# Default odd bound for census and selftest sweeps.
DEFAULT_ODD_BOUND: int = 21
