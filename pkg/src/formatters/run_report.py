"""
The RunReport every command returns.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, Optional

import pandas as pd

from ..constants import EXIT_SUCCESS


@dataclass
class RunReport:
    """
    Result of one CLI command.

    results holds the JSON payload (every number an exact rational string);
    tables holds the same content as DataFrames for text and Excel output.
    """
    command: str
    input_digest: Optional[str]
    results: Dict[str, Any]
    tables: Dict[str, pd.DataFrame] = field(default_factory=dict)
    seed: Optional[int] = None
    elapsed_ms: str = '0'
    exit_code: int = EXIT_SUCCESS

    def to_payload(self) -> Dict[str, Any]:
        return {
            'command': self.command,
            'input_digest': self.input_digest,
            'seed': None if self.seed is None else str(self.seed),
            'elapsed_ms': self.elapsed_ms,
            'results': self.results,
        }
