"""Matrix document parsing and serialization."""

from .matrix_document import MatrixDocument, load_document, parse_document, serialize_document

__all__ = [
    'MatrixDocument',
    'load_document',
    'parse_document',
    'serialize_document',
]
