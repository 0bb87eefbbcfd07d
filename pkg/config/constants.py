"""Constants used throughout the application."""

# Affine families as (family, r)
UNTWISTED_FAMILIES = [
    ("A", 1), ("B", 1), ("C", 1), ("D", 1),
    ("E", 1), ("F", 1), ("G", 1),
]

# A_{2n}^(2) and A_{2n-1}^(2) share the letter; the parity of N tells them apart
TWISTED_FAMILIES = [
    ("A", 2), ("D", 2), ("E", 2), ("D", 3),
]

# Weyl group orders of the exceptional finite types
WEYL_GROUP_ORDERS = {
    "E6": 51840,
    "E7": 2903040,
    "E8": 696729600,
    "F4": 1152,
    "G2": 12,
}

# Positive-root counts of the exceptional finite types
POSITIVE_ROOT_COUNTS = {
    "E6": 36,
    "E7": 63,
    "E8": 120,
    "F4": 24,
    "G2": 6,
}

# Output formats
OUTPUT_FORMATS = ["json", "csv"]

# CLI exit codes
EXIT_OK = 0
EXIT_INVALID_INPUT = 2
EXIT_CAP_EXCEEDED = 3
EXIT_INTEGRALITY = 4
EXIT_INVARIANT_FAILURE = 5

# Commands
COMMANDS = ["weights", "fuse", "verlinde", "smatrix", "check", "decompose"]
