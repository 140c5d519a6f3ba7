"""Utility functions for exact number formatting and file handling."""

from .file_utils import decode_bytes, ensure_parent_dir, file_digest
from .rationals import format_rational, format_rows, format_tuple, format_vector, parse_rational

__all__ = [
    'decode_bytes',
    'ensure_parent_dir',
    'file_digest',
    'format_rational',
    'format_rows',
    'format_tuple',
    'format_vector',
    'parse_rational',
]
