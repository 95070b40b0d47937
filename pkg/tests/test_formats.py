import json

import numpy as np
import pytest

from williamson_doubling import formats
from williamson_doubling.formats import ParseError
from williamson_doubling.hadamard import williamson_array
from williamson_doubling.seqcore import paf_spectrum
from williamson_doubling.williamson import WilliamsonQuad, double, verify_quad


def test_parse_quads_with_comments_and_separators():
    text = "# header\n+++\n+--\n\n+--\n+--\n----\n+\n+\n+\n+\n"
    qs = formats.parse_quads(text)
    assert [q.strings() for q in qs] == [("+++", "+--", "+--", "+--"), ("+", "+", "+", "+")]


def test_parse_quads_wrong_line_count():
    with pytest.raises(ParseError) as exc:
        formats.parse_quads("+++\n+--\n+--\n")
    assert exc.value.line == 1


def test_parse_quads_bad_char_location():
    with pytest.raises(ParseError) as exc:
        formats.parse_quads("+++\n+--\n+x-\n+--\n")
    assert (exc.value.line, exc.value.column) == (3, 2)
    assert "line 3, column 2" in str(exc.value)


def test_parse_quads_ragged():
    with pytest.raises(ParseError) as exc:
        formats.parse_quads("+++\n+--\n+-\n+--\n")
    assert exc.value.line == 3


def test_parse_quads_empty():
    with pytest.raises(ParseError):
        formats.parse_quads("# nothing\n\n")


def test_quad_text_round_trip(search_reports):
    quads = list(search_reports[9].normalized_quads)
    text = formats.format_quads(quads)
    assert formats.parse_quads(text) == quads
    assert formats.format_quads(formats.parse_quads(text)) == text


def test_quads_json_round_trip(search_reports):
    quads = [double(q) for q in search_reports[7].normalized_quads]
    text = formats.dumps(formats.quads_document(quads))
    assert formats.parse_quads(text) == quads
    assert formats.dumps(formats.quads_document(formats.parse_quads(text))) == text


def test_report_json_round_trip(search_reports):
    text = formats.dumps(formats.report_document(search_reports[5]))
    doc = formats.parse_report_document(text)
    assert formats.dumps(doc) == text
    assert doc["raw_count"] == 192
    # reports are also valid quad input
    assert formats.parse_quads(text) == list(search_reports[5].normalized_quads)


def test_report_json_validation():
    with pytest.raises(ParseError):
        formats.parse_report_document('{"order": "3", "raw_count": 1, "candidates_examined": 1, "quads": []}')
    with pytest.raises(ParseError):
        formats.parse_report_document('{"order": 3, "raw_count": 1, "candidates_examined": 1, "quads": [["+"]]}')


def test_report_text_is_quad_input(search_reports):
    text = formats.format_report(search_reports[7])
    assert text.startswith("# order 7\n# raw_count 960\n")
    assert formats.parse_quads(text) == list(search_reports[7].normalized_quads)


def test_matrix_round_trips(n3_quad):
    m = williamson_array(n3_quad)
    text = formats.format_matrix(m)
    assert len(text.splitlines()) == 12
    [back] = formats.parse_matrices(text)
    assert np.array_equal(back, m)
    doc = formats.dumps(formats.matrix_document(m))
    assert json.loads(doc)["order"] == 12
    [back] = formats.parse_matrices(doc)
    assert np.array_equal(back, m)
    assert formats.dumps(formats.matrix_document(back)) == doc


def test_parse_matrix_not_square():
    with pytest.raises(ParseError):
        formats.parse_matrices("++\n+-\n--\n")


def test_spectrum_and_verification_documents():
    q = WilliamsonQuad.from_strings("+++", "+++", "+++", "+++")
    doc = formats.verification_document(q, verify_quad(q))
    assert doc["is_williamson"] is False
    assert doc["paf_violations"] == [[1, 12]]
    assert "s=1 sum=12" in formats.format_verification(q, verify_quad(q))
    spec = formats.spectrum_document(paf_spectrum(formats.parse_sequence("+--")))
    assert spec == {"n": 3, "values": [3, -1, -1]}


def test_bad_json():
    with pytest.raises(ParseError) as exc:
        formats.parse_quads('{"quads": [}\n')
    assert exc.value.line == 1
    with pytest.raises(ParseError):
        formats.parse_quads('{"order": 3}\n')
