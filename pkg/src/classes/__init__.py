"""Decision procedures for the matrix classes used by the LCP theory."""

from .verdict import ClassVerdict
from .minors import has_trivial_principal_kernels, is_P, is_P0, is_principally_nondegenerate
from .competence import adequacy_violation, competence_failure, is_column_adequate, is_column_competent
from .semimonotone import is_E0, is_R, is_R0, is_Z
from .report import ClassificationReport, classify

__all__ = [
    'ClassVerdict',
    'has_trivial_principal_kernels',
    'is_P',
    'is_P0',
    'is_principally_nondegenerate',
    'adequacy_violation',
    'competence_failure',
    'is_column_adequate',
    'is_column_competent',
    'is_E0',
    'is_R',
    'is_R0',
    'is_Z',
    'ClassificationReport',
    'classify',
]
