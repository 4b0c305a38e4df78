import io
import json

import pytest

from codforge import (
    ArgumentError,
    Entry,
    JsonReader,
    ParseError,
    TextReader,
    gen_G,
    gen_Gw,
    parse,
    read_matrix,
    serialize,
)

from .conftest import EQ3_TEXT


def test_text_rows(eq3):
    assert serialize(eq3, "text").splitlines()[1] == "-z2* z1* 0"
    assert serialize(eq3) == EQ3_TEXT


def test_single_cell():
    m = parse("z1")
    assert m.params == (1, 1, 1)
    assert m.cell(1, 1) == Entry(1)


def test_comments_and_blank_lines_skipped():
    m = parse("# заголовок\n\nz1 z2\n   \n-z2* z1*\n")
    assert m.params == (2, 2, 2)


def test_text_round_trip():
    m = gen_Gw(4, 2)
    assert parse(serialize(m, "text")) == m


def test_json_round_trip_keeps_names():
    m = gen_G(3)
    back = parse(serialize(m, "json"))
    assert back == m
    assert back.names == m.names


def test_json_layout(eq3):
    data = json.loads(serialize(eq3, "json"))
    assert (data["p"], data["n"], data["k"]) == (4, 3, 3)
    assert data["cells"][1][0] == {"v": 2, "s": -1, "c": True}
    assert data["cells"][1][2] is None
    assert "names" not in data


def test_bad_token_position():
    with pytest.raises(ParseError) as info:
        parse("z1 z2\nz1 q3\n")
    assert (info.value.line, info.value.column) == (2, 4)
    assert "строка 2, столбец 4" in str(info.value)


def test_ragged_rows():
    with pytest.raises(ParseError) as info:
        parse("z1 z2\nz1\n")
    assert info.value.line == 2


@pytest.mark.parametrize("text", ["z1 z3", "", "# только комментарий\n"])
def test_invalid_text(text):
    with pytest.raises(ParseError):
        parse(text, "text")


@pytest.mark.parametrize(
    "payload",
    [
        '{"cells": [',
        '{"p": 1}',
        '{"cells": []}',
        '{"cells": [[{"v": 1, "s": 2, "c": false}]]}',
        '{"cells": [[{"v": 1, "s": 1}]]}',
        '{"p": 2, "cells": [[{"v": 1, "s": 1, "c": false}]]}',
        '{"k": 2, "cells": [[{"v": 1, "s": 1, "c": false}]]}',
        '{"cells": [[{"v": 1, "s": 1, "c": false}]], "names": {"1": "1,0"}}',
    ],
)
def test_invalid_json(payload):
    with pytest.raises(ParseError):
        parse(payload)


def test_json_decode_error_has_position():
    with pytest.raises(ParseError) as info:
        JsonReader.parse_text('{\n  "cells": [[null,\n')
    assert info.value.line is not None


def test_csv(eq3):
    assert serialize(eq3, "csv").splitlines()[1] == '"-z2*","z1*","0"'


def test_latex(eq3):
    lines = serialize(eq3, "latex").splitlines()
    assert lines[0] == r"\begin{pmatrix}"
    assert lines[2] == r"-z_{2}^{*} & z_{1}^{*} & 0 \\"
    assert lines[-1] == r"\end{pmatrix}"


def test_unsupported_formats(eq3):
    with pytest.raises(ArgumentError):
        serialize(eq3, "xml")
    with pytest.raises(ArgumentError):
        parse(EQ3_TEXT, "csv")


def test_read_matrix_from_file_and_stream(eq3, eq3_path):
    assert read_matrix(eq3_path) == eq3
    assert read_matrix(str(eq3_path)) == eq3
    assert read_matrix(io.StringIO(EQ3_TEXT)) == eq3


def test_read_matrix_detects_json(tmp_path):
    m = gen_Gw(3, 1)
    path = tmp_path / "g31.json"
    path.write_text(serialize(m, "json"), encoding="utf-8")
    assert read_matrix(path) == m


def test_reader_context_manager(eq3, eq3_path):
    with TextReader(eq3_path) as reader:
        assert reader.read() == eq3
    assert reader.file is None
    with pytest.raises(ParseError):
        TextReader(eq3_path).read()


@pytest.mark.parametrize("prefix", [b"", b"# " + b"x" * 5000 + b"\n"])
def test_read_matrix_rejects_non_utf8(tmp_path, prefix):
    path = tmp_path / "bad.txt"
    path.write_bytes(prefix + b"z1 \xff\n")
    with pytest.raises(ParseError, match="UTF-8"):
        read_matrix(path)
