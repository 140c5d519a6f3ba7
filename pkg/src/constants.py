"""
Constants for the column competent matrix toolkit.

This module contains all constant values used throughout the application.
"""

# ============================================================================
# MATRIX CLASS NAMES
# ============================================================================

CLASS_COLUMN_COMPETENT = 'ColumnCompetent'
CLASS_COLUMN_ADEQUATE = 'ColumnAdequate'
CLASS_P0 = 'P0'
CLASS_P = 'P'
CLASS_NONDEGENERATE = 'PrincipallyNonDegenerate'
CLASS_Z = 'Z'
CLASS_E0 = 'E0'
CLASS_R0 = 'R0'
CLASS_R = 'R'

# Report order
CLASS_NAMES = (
    CLASS_COLUMN_COMPETENT,
    CLASS_COLUMN_ADEQUATE,
    CLASS_P0,
    CLASS_P,
    CLASS_NONDEGENERATE,
    CLASS_Z,
    CLASS_E0,
    CLASS_R0,
    CLASS_R,
)

ADEQUACY_MODE_THEOREM = 'theorem'
ADEQUACY_MODE_DIRECT = 'direct'


# ============================================================================
# LINEAR RELATIONS
# ============================================================================

REL_EQ = '='
REL_LE = '<='
REL_LT = '<'
REL_GE = '>='
REL_GT = '>'

RELATIONS = (REL_EQ, REL_LE, REL_LT, REL_GE, REL_GT)
STRICT_RELATIONS = (REL_LT, REL_GT)


# ============================================================================
# CONE MEMBERSHIP
# ============================================================================

CONE_INTERIOR = 'interior'
CONE_BOUNDARY = 'boundary'
CONE_OUTSIDE = 'outside'
CONE_SINGULAR = 'singular'


# ============================================================================
# SOLVER METHODS
# ============================================================================

METHOD_LEMKE = 'lemke'
METHOD_ENUMERATE = 'enumerate'
METHOD_AUTO = 'auto'

SOLVE_METHODS = (METHOD_LEMKE, METHOD_ENUMERATE, METHOD_AUTO)


# ============================================================================
# EXIT CODES
# ============================================================================

EXIT_SUCCESS = 0
EXIT_FAILURE = 1
EXIT_PARSE_ERROR = 2
EXIT_INCONSISTENT = 3
EXIT_PRECONDITION = 4
EXIT_CAP_EXCEEDED = 5


# ============================================================================
# DEFAULTS
# ============================================================================

DEFAULT_CONFIG_PATH = 'config/compmat_config.json'
ENV_NMAX = 'COMPMAT_NMAX'

DEFAULT_ENUMERATION_CAP = 14
DEFAULT_LEMKE_MAX_ITERATIONS = 10000

# "[-]digits(/digits)?"
RATIONAL_PATTERN = r'^-?\d+(/\d+)?$'


# ============================================================================
# INVARIANT KINDS
# ============================================================================

# identity: algebraic fact; theorem: proven result; claim: stated result under test
INVARIANT_IDENTITY = 'identity'
INVARIANT_THEOREM = 'theorem'
INVARIANT_CLAIM = 'claim'

STATUS_PASS = 'pass'
STATUS_FAIL = 'fail'
STATUS_FALSIFIED = 'falsified'
# required check count not reached within the extra-draw budget
STATUS_SHORT = 'short'


# ============================================================================
# EXCEL REPORT LAYOUT
# ============================================================================

COL_WIDTH_STANDARD = 13
COL_WIDTH_MEDIUM = 16
COL_WIDTH_EXTRA_WIDE = 50

COLOR_PALE_BLUE = 'E6F3FF'

SHEET_SUMMARY = 'summary'
