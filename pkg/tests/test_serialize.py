import io
import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from kmbranch import (BranchRow, BranchTable, Weight, branch, f_op, plain_basis, straight_path,
                      winding_construct)
from kmbranch.errors import IoFailure
from kmbranch.serialize import (emit_table, format_rational, parse_rational, path_from_json,
                                path_to_json, table_from_json, table_to_csv, table_to_json,
                                weight_from_json, weight_to_json)


def test_rationals():
    assert format_rational(3) == "3"
    assert format_rational(Fraction(-1, 3)) == "-1/3"
    assert parse_rational("-1/3") == Fraction(-1, 3)
    assert parse_rational("0.25") == Fraction(1, 4)
    with pytest.raises(ValueError):
        parse_rational(0.5)


rationals = st.fractions(max_denominator=12).filter(lambda x: abs(x) < 100)


@given(st.lists(rationals, min_size=2, max_size=4), rationals)
def test_weight_roundtrip(labels, d):
    w = Weight(labels, d)
    assert weight_from_json(json.loads(json.dumps(weight_to_json(w)))) == w


def test_path_roundtrip(A1, L1):
    p = f_op(plain_basis(A1), 0, straight_path(L1 - A1.simple_root(1)))
    assert path_from_json(path_to_json(p)) == p
    empty = straight_path(A1.zero())
    assert path_from_json(path_to_json(empty), n=A1.n) == empty


def _table(A1):
    lam = A1.fundamental(0)
    return branch(A1, lam, winding_construct(A1, 2), 3, methods=("paths", "steinberg", "peel"))


def test_table_json_roundtrip(A1):
    t = _table(A1)
    obj = table_to_json(t)
    assert set(obj) == {"algebra", "u", "lambda", "depth", "margin", "rows", "verified"}
    back = table_from_json(json.loads(json.dumps(obj)))
    assert table_to_json(back) == obj


def test_one_row_csv(A1):
    lam = A1.fundamental(0)
    t = BranchTable(A1, 1, lam, 0, 0, [BranchRow(lam, 1, {"paths": 1})], True)
    lines = table_to_csv(t).splitlines()
    assert lines[0] == "label_0,label_1,d,depth,mult,methods,verified"
    assert lines[1:] == ["1,0,0,0,1,paths=1,true"]


def test_rows_sorted(A1):
    t = _table(A1)
    keys = [(t.row_depth(r), r.weight.labels) for r in t.rows]
    assert keys == sorted(keys)


def test_deterministic_bytes(A1):
    for fmt in ("json", "csv", "pretty"):
        assert emit_table(_table(A1), fmt) == emit_table(_table(A1), fmt)


def test_emit_to_streams(A1):
    t = _table(A1)
    buf = io.BytesIO()
    data = emit_table(t, "csv", buf)
    assert buf.getvalue() == data
    text = io.StringIO()
    emit_table(t, "json", text)
    assert text.getvalue().encode() == emit_table(t, "json")


def test_emit_io_failure(A1):
    class Broken(io.RawIOBase):
        def write(self, b):
            raise OSError("disk full")

    with pytest.raises(IoFailure):
        emit_table(_table(A1), "json", Broken())


def test_bad_format(A1):
    with pytest.raises(ValueError):
        emit_table(_table(A1), "xml")
