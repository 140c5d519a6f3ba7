"""
Verdict type shared by every class decision procedure.
"""

from dataclasses import dataclass
from typing import Optional

from ..linalg import IndexSet, Vector


@dataclass(frozen=True)
class ClassVerdict:
    """
    Membership of one matrix in one class.

    witness_vector / witness_set demonstrate non-membership (or, for a few
    classes, the defining failure); certificate_note names the procedure.
    """
    class_name: str
    member: bool
    witness_vector: Optional[Vector] = None
    witness_set: Optional[IndexSet] = None
    certificate_note: str = ''
