"""Algebra file format: round trips and strict error reporting."""

import pytest

from almg import make_boolean, make_chain, make_product, make_z_window_u
from almg.fileio import AlgebraFormatError, dumps, load, loads, dump


@pytest.mark.parametrize("alg_factory", [
    lambda: make_boolean(2),
    lambda: make_chain(5, "max"),
    lambda: make_chain(1),
    lambda: make_product([make_boolean(1), make_chain(3)]),
])
def test_round_trip_total(alg_factory):
    alg = alg_factory()
    back = loads(dumps(alg))
    assert back.size == alg.size
    assert back.zero == alg.zero
    for op in ("add", "join", "meet", "star"):
        assert back.table(op) == alg.table(op)


def test_round_trip_partial():
    alg = make_z_window_u(3)
    text = dumps(alg)
    assert "?" in text
    back = loads(text)
    assert back.is_partial
    for op in ("add", "join", "meet", "star"):
        assert back.table(op) == alg.table(op)


def test_file_round_trip(tmp_path):
    alg = make_boolean(2)
    path = tmp_path / "b2.alg"
    dump(alg, path)
    assert load(path) == alg


def test_comments_and_blank_lines():
    text = """# a boolean square
almg v1

size 2   # two elements
zero 0
table add
0 1
1 1
table join
0 1
1 1
table meet
0 0
0 1
table star
0 1
1 0
"""
    alg = loads(text)
    assert alg.size == 2
    assert not alg.is_partial


def _b2_text():
    return dumps(make_boolean(2))


def test_bad_header():
    with pytest.raises(AlgebraFormatError) as err:
        loads("almg v2\nsize 1\nzero 0\n")
    assert err.value.line == 1


def test_short_row_reports_line():
    lines = _b2_text().splitlines()
    # row 0 of table add sits on line 4
    lines[4] = "0 1 2"
    with pytest.raises(AlgebraFormatError) as err:
        loads("\n".join(lines))
    assert err.value.line == 5
    assert "expected 4 entries" in str(err.value)


def test_out_of_range_entry():
    lines = _b2_text().splitlines()
    lines[4] = "0 1 2 9"
    with pytest.raises(AlgebraFormatError) as err:
        loads("\n".join(lines))
    assert "not in [0, 4)" in str(err.value)


def test_bad_entry_token():
    lines = _b2_text().splitlines()
    lines[4] = "0 1 2 x"
    with pytest.raises(AlgebraFormatError):
        loads("\n".join(lines))


def test_missing_table():
    text = "\n".join(_b2_text().splitlines()[:13])  # drop the last blocks
    with pytest.raises(AlgebraFormatError) as err:
        loads(text)
    assert "missing tables" in str(err.value) or "expected" in str(err.value)


def test_duplicate_table():
    lines = _b2_text().splitlines()
    dup = lines[3:8]  # 'table add' block
    with pytest.raises(AlgebraFormatError) as err:
        loads("\n".join(lines + dup))
    assert "duplicate" in str(err.value)


def test_unknown_table_name():
    lines = _b2_text().splitlines()
    lines[3] = "table mul"
    with pytest.raises(AlgebraFormatError) as err:
        loads("\n".join(lines))
    assert "unknown table" in str(err.value)


def test_zero_out_of_range():
    lines = _b2_text().splitlines()
    lines[2] = "zero 7"
    with pytest.raises(AlgebraFormatError) as err:
        loads("\n".join(lines))
    assert err.value.line == 3


def test_missing_size():
    with pytest.raises(AlgebraFormatError):
        loads("almg v1\nzero 0\n")


def test_empty_file():
    with pytest.raises(AlgebraFormatError):
        loads("")
    with pytest.raises(AlgebraFormatError):
        loads("# only a comment\n")


def test_question_mark_in_total_context_is_partial():
    text = dumps(make_chain(2)).replace("table star\n0 1\n1 0", "table star\n0 ?\n? 0")
    alg = loads(text)
    assert alg.is_partial
    assert alg.op("star", 0, 1) is None
