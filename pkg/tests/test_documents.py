from fractions import Fraction

import pytest

from src.data_extractors import load_document, parse_document, serialize_document
from src.errors import DocumentParseError
from src.linalg import vector
from src.utils import decode_bytes, file_digest, format_rational, parse_rational


def test_json_document_with_strings_and_integers():
    document = parse_document('{"n": 2, "A": [["1/2", 3], ["-4", "0"]], "q": [1, "-2/3"]}')
    assert document.n == 2
    assert document.A[0, 0] == Fraction(1, 2)
    assert document.A[1, 0] == -4
    assert document.q == (Fraction(1), Fraction(-2, 3))


def test_json_document_without_q():
    assert parse_document('{"n": 1, "A": [["5"]]}').q is None


def test_text_document():
    text = "# a comment\n1 0\n1 0   # trailing\n\nq: 1 -2/3\n"
    document = parse_document(text)
    assert document.n == 2
    assert document.A.rows == (vector([1, 0]), vector([1, 0]))
    assert document.q == (Fraction(1), Fraction(-2, 3))


def test_decimal_rejected_with_position():
    text = '{"n": 1,\n "A": [[1.5]]}'
    with pytest.raises(DocumentParseError) as info:
        parse_document(text)
    assert (info.value.line, info.value.column) == (2, 9)
    assert "1.5" in str(info.value)


def test_zero_denominator_rejected():
    with pytest.raises(DocumentParseError):
        parse_document('{"n": 1, "A": [["1/0"]]}')


def test_text_token_position():
    with pytest.raises(DocumentParseError) as info:
        parse_document("1 2\n3 x4\n")
    assert (info.value.line, info.value.column) == (2, 3)


@pytest.mark.parametrize("text", [
    '{"n": 2, "A": [["1", "2"]]}',
    '{"n": 1, "A": [["1"]], "q": ["1", "2"]}',
    '{"n": 1, "A": [["1"]], "b": ["1"]}',
    '{"A": [["1"]]}',
    '{"n": true, "A": [["1"]]}',
    '{"n": 1, "A": [[null]]}',
    '[1, 2]',
    '{"n": 1, "A": [["1"]]',
    "1 2\n3\n",
    "q: 1\n1\n",
    "",
])
def test_malformed_documents(text):
    with pytest.raises(DocumentParseError):
        parse_document(text)


def test_serialize_is_canonical_and_reparses():
    document = parse_document("2 -1/2\n-4 2\nq: 0 6/4\n")
    text = serialize_document(document)
    assert '"3/2"' in text and '"-1/2"' in text
    assert parse_document(text) == document
    assert serialize_document(parse_document(text)) == text


def test_load_document_digest(tmp_path):
    path = tmp_path / "m.json"
    path.write_text('{"n": 1, "A": [["7"]]}', encoding='utf-8')
    document, digest = load_document(str(path))
    assert document.A[0, 0] == 7
    assert digest == file_digest(path.read_bytes())
    assert digest.startswith("sha256:")


def test_load_text_document_in_latin1(tmp_path):
    path = tmp_path / "m.txt"
    path.write_bytes("# matrice définie à la main\n1 0\n0 1\n".encode('latin-1'))
    document, _ = load_document(str(path), encoding='latin-1')
    assert document.n == 2


def test_load_missing_file(tmp_path):
    with pytest.raises(FileNotFoundError):
        load_document(str(tmp_path / "absent.json"))


def test_decode_bytes_auto():
    assert decode_bytes("1 2\n3 4\n".encode('utf-8')) == "1 2\n3 4\n"


@pytest.mark.parametrize("text, value", [("3", 3), ("-3/6", Fraction(-1, 2)), ("0/5", 0)])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("text", ["1.5", "1e3", " 1", "1/", "+1", "1/0"])
def test_parse_rational_rejects(text):
    with pytest.raises(ValueError):
        parse_rational(text)


def test_format_rational_never_decimal():
    assert format_rational(Fraction(6, 4)) == "3/2"
    assert format_rational(Fraction(-4, 2)) == "-2"
