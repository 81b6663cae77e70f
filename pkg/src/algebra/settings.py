"""Settings, enums, and constants."""

from enum import Enum


# Output formats
class OutputFormat(str, Enum):
    TEXT = "text"
    JSON = "json"
    CSV = "csv"


# How invariants are obtained
class InvariantMethod(str, Enum):
    CLOSED_FORM = "closed-form"
    HOCHSTER = "hochster"


class InvariantSource(str, Enum):
    CLOSED_FORM = "closed-form"
    HOCHSTER = "hochster"


# Which decomposition to print
class DecomposeSource(str, Enum):
    CLOSED_FORM = "closed-form"
    BRUTE_FORCE = "brute-force"
    BOTH = "both"


# Ideals attached to a path with n edges
class IdealKind(str, Enum):
    FACET = "facet"
    SR = "sr"
    P = "p"


# Betti table conventions
class BettiView(str, Enum):
    IDEAL = "ideal"
    QUOTIENT = "quotient"


# Verification checks
class Check(str, Enum):
    FACETS = "facets"
    DECOMPOSITION = "decomposition"
    RECURSION = "recursion"
    P_IDEAL = "p-ideal"
    INVARIANTS = "invariants"
    SR_IDEAL = "sr-ideal"
    LEMMAS = "lemmas"


class Status(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    FLAGGED = "flagged-discrepancy"


# Named members of the closed-form cover family
class CoverKind(str, Enum):
    A = "A"
    A_PRIME = "A'"
    B = "B"
    B_PRIME = "B'"
    C = "C"
    D = "D"


# Side on which the facet recursion peels off an edge
class Side(str, Enum):
    LEFT = "left"
    RIGHT = "right"


# Log levels
class LogLevel(str, Enum):
    DEBUG = "DEBUG"
    INFO = "INFO"
    WARNING = "WARNING"
    ERROR = "ERROR"


DEFAULT_CHARACTERISTIC = 0
DIAGNOSTIC_CHARACTERISTIC = 2

# Largest nvars swept by Hochster's formula without --force
DEFAULT_HOCHSTER_LIMIT = 12

# Subsets handed to one worker at a time
HOCHSTER_CHUNK_SIZE = 64

# Exit codes
EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2

# Printed heights that disagree with the decomposition, keyed by n
HEIGHT_ERRATA = {2: 1}

ALL_CHECKS = tuple(Check)

# Checks whose comparisons include a Hochster sweep
HOCHSTER_CHECKS = frozenset({Check.P_IDEAL, Check.INVARIANTS, Check.SR_IDEAL, Check.LEMMAS})
