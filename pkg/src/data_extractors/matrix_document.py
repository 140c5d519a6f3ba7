"""
Matrix documents: the input files of every command.

Two formats are accepted:

* JSON (UTF-8): {"n": 2, "A": [["1", "0"], ["1", "0"]], "q": ["1", "-2"]}
  with entries as rational strings or integers; "q" is optional.
* Whitespace text: one matrix row per line, an optional "q:" line, blank
  lines and "#" comments ignored. Decoded with the configured encoding.

Parse errors carry the line and column of the offending token.
"""

import json
import logging
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, List, Optional, Tuple

from ..errors import DocumentParseError
from ..linalg import Matrix, Vector
from ..utils import decode_bytes, file_digest, format_rational, parse_rational

DOCUMENT_KEYS = ('n', 'A', 'q')
Q_PREFIX = 'q:'


@dataclass(frozen=True)
class MatrixDocument:
    n: int
    A: Matrix
    q: Optional[Vector] = None


@dataclass(frozen=True)
class _FloatToken:
    """Keeps the source spelling of a JSON float so it can be reported and located."""
    text: str


def _position(text: str, offset: int) -> Tuple[int, int]:
    line = text.count('\n', 0, offset) + 1
    column = offset - (text.rfind('\n', 0, offset) + 1) + 1
    return line, column


def _fail(text: str, message: str, token: Optional[str] = None) -> DocumentParseError:
    """Builds a parse error located at the first occurrence of token in text."""
    if token is not None:
        offset = text.find(token)
        if offset >= 0:
            return DocumentParseError(message, *_position(text, offset))
    return DocumentParseError(message)


def _entry(text: str, value: Any, where: str) -> Fraction:
    if isinstance(value, _FloatToken):
        raise _fail(text, f"{where}: decimal {value.text} is not exact; write it as a fraction string", value.text)
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise _fail(text, f"{where}: expected a rational string or integer, got {json.dumps(value)}", json.dumps(value))
    if isinstance(value, int):
        return Fraction(value)
    try:
        return parse_rational(value)
    except ValueError as e:
        raise _fail(text, f"{where}: {e}", json.dumps(value)) from e


def _json_document(text: str) -> MatrixDocument:
    try:
        raw = json.loads(text, parse_float=_FloatToken)
    except json.JSONDecodeError as e:
        raise DocumentParseError(f"invalid JSON: {e.msg}", e.lineno, e.colno) from e

    if not isinstance(raw, dict):
        raise DocumentParseError("a matrix document must be a JSON object", 1, 1)
    unknown = [key for key in raw if key not in DOCUMENT_KEYS]
    if unknown:
        raise _fail(text, f"unknown key {unknown[0]!r}; expected {list(DOCUMENT_KEYS)}", json.dumps(unknown[0]))
    for key in ('n', 'A'):
        if key not in raw:
            raise DocumentParseError(f"missing key {key!r}")

    n = raw['n']
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise _fail(text, f"'n' must be a positive integer, got {json.dumps(n, default=str)}", '"n"')

    rows = raw['A']
    if not isinstance(rows, list) or len(rows) != n or any(not isinstance(r, list) or len(r) != n for r in rows):
        raise _fail(text, f"'A' must be a list of {n} rows of {n} entries", '"A"')
    entries = [
        [_entry(text, value, f"A[{i + 1}][{j + 1}]") for j, value in enumerate(row)]
        for i, row in enumerate(rows)
    ]

    q = None
    if raw.get('q') is not None:
        if not isinstance(raw['q'], list) or len(raw['q']) != n:
            raise _fail(text, f"'q' must be a list of {n} entries", '"q"')
        q = tuple(_entry(text, value, f"q[{i + 1}]") for i, value in enumerate(raw['q']))

    return MatrixDocument(n, Matrix.from_rows(entries), q)


def _text_tokens(line: str, line_number: int, start: int) -> List[Fraction]:
    values = []
    column = start
    for token in line[start:].split():
        column = line.index(token, column)
        try:
            values.append(parse_rational(token))
        except ValueError as e:
            raise DocumentParseError(str(e), line_number, column + 1) from e
        column += len(token)
    return values


def _text_document(text: str) -> MatrixDocument:
    rows = []
    q = None
    for line_number, line in enumerate(text.splitlines(), start=1):
        content = line.split('#', 1)[0]
        stripped = content.strip()
        if not stripped:
            continue
        if stripped.startswith(Q_PREFIX):
            if q is not None:
                raise DocumentParseError("q given twice", line_number, content.index(Q_PREFIX) + 1)
            q = (_text_tokens(content, line_number, content.index(Q_PREFIX) + len(Q_PREFIX)), line_number)
            continue
        if q is not None:
            raise DocumentParseError("matrix rows must come before the q line", line_number, 1)
        rows.append((_text_tokens(content, line_number, 0), line_number))

    if not rows:
        raise DocumentParseError("no matrix rows found")
    n = len(rows)
    for values, line_number in rows:
        if len(values) != n:
            raise DocumentParseError(f"row has {len(values)} entries, expected {n}", line_number, 1)
    q_vector = None
    if q is not None:
        values, line_number = q
        if len(values) != n:
            raise DocumentParseError(f"q has {len(values)} entries, expected {n}", line_number, 1)
        q_vector = tuple(values)
    return MatrixDocument(n, Matrix.from_rows([values for values, _ in rows]), q_vector)


def parse_document(text: str) -> MatrixDocument:
    """
    Parses a matrix document in either format.

    Args:
        text (str): The document text; a leading "{" selects JSON.

    Returns:
        MatrixDocument: The parsed document.

    Raises:
        DocumentParseError: With line and column where the problem can be located.
    """
    if text.lstrip().startswith('{'):
        return _json_document(text)
    return _text_document(text)


def serialize_document(document: MatrixDocument) -> str:
    """Canonical JSON form: every entry a rational string, q omitted when absent."""
    payload = {
        'n': document.n,
        'A': [[format_rational(x) for x in row] for row in document.A.rows],
    }
    if document.q is not None:
        payload['q'] = [format_rational(x) for x in document.q]
    return json.dumps(payload, indent=2) + '\n'


def load_document(path: str, encoding: str = 'auto') -> Tuple[MatrixDocument, str]:
    """
    Reads and parses a matrix document from disk.

    JSON files are always read as UTF-8; other files are decoded with the
    given encoding ('auto' detects it).

    Returns:
        (MatrixDocument, str): The document and the sha256 digest of the raw bytes.

    Raises:
        FileNotFoundError: If path does not exist.
        DocumentParseError: If the contents cannot be decoded or parsed.
    """
    file_path = Path(path)
    if not file_path.exists():
        raise FileNotFoundError(f"Input file not found: {path}")
    data = file_path.read_bytes()
    try:
        text = data.decode('utf-8') if file_path.suffix.lower() == '.json' else decode_bytes(data, encoding)
    except (UnicodeDecodeError, LookupError) as e:
        raise DocumentParseError(f"cannot decode {path}: {e}") from e
    document = parse_document(text)
    logging.info(f"Loaded {document.n}x{document.n} matrix from {path}{' with q' if document.q else ''}")
    return document, file_digest(data)
