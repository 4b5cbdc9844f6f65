import csv
import io
import json

import pytest

from akdecomp.canonical import compute_basis
from akdecomp.decomp import assemble, from_json, serialize
from akdecomp.laurent import Q
from akdecomp.mpart import ParamSet, enumerate_dpartitions
from akdecomp.afun import a1

from conftest import CONFIGS, mp

E2 = ParamSet(2, (0,))


def matrix(n, p=E2):
    return assemble(compute_basis(n, p))


def test_rank_two():
    m = matrix(2)
    assert m.rows == [mp("2"), mp("1.1")]
    assert m.cols == [mp("2")]
    assert m.column(mp("2")) == {mp("2"): 1, mp("1.1"): 1}
    assert serialize(m) == "     2\n2    1\n1.1  1\n"


def test_rank_three():
    m = matrix(3)
    assert m.column(mp("3")) == {mp("3"): 1, mp("1.1.1"): 1}
    assert m.column(mp("2.1")) == {mp("2.1"): 1}
    assert m.poly(mp("1.1.1"), mp("3")) == Q


def test_rank_zero():
    m = matrix(0, ParamSet(3, (0, 1)))
    assert m.rows == m.cols == [mp("-|-")]
    assert m.value(mp("-|-"), mp("-|-")) == 1


def test_level_one_e3_rank5():
    # decomposition matrix of the Hecke algebra of S_5 at e = 3
    m = matrix(5, ParamSet(3, (0,)))
    assert m.column(mp("5")) == {mp("5"): 1, mp("2.2.1"): 1}
    assert m.column(mp("2.2.1")) == {mp("2.2.1"): 1, mp("2.1.1.1"): 1}
    assert m.column(mp("4.1")) == {mp("4.1"): 1, mp("3.2"): 1}
    assert m.column(mp("3.2")) == {mp("3.2"): 1, mp("1.1.1.1.1"): 1}
    assert m.column(mp("3.1.1")) == {mp("3.1.1"): 1}


@pytest.mark.parametrize("p", CONFIGS, ids=str)
def test_unitriangular_in_a1_order(p):
    for n in range(6):
        m = matrix(n, p)
        assert sorted(m.rows, key=str) == sorted(enumerate_dpartitions(n, p.d), key=str)
        for col in m.cols:
            assert m.value(col, col) == 1
            for row, value in m.column(col).items():
                assert a1(row, p) >= a1(col, p)
                assert value >= 0


@pytest.mark.parametrize("p", CONFIGS, ids=str)
def test_q_mode_specializes(p):
    m = matrix(5, p)
    for col in m.cols:
        q_col = m.column(col, q_mode=True)
        assert {r: c.eval_at_one() for r, c in q_col.items()} == m.column(col)


def test_text_q_mode_and_dots():
    text = serialize(matrix(3), "text", q_mode=True)
    assert text.splitlines() == [
        "       3  2.1",
        "3      1    .",
        "2.1    .    1",
        "1.1.1  q    .",
    ]


def test_csv():
    rows = list(csv.reader(io.StringIO(serialize(matrix(3), "csv"))))
    assert rows[0] == ["", "3", "2.1"]
    assert rows[1:] == [["3", "1", "0"], ["2.1", "0", "1"], ["1.1.1", "1", "0"]]
    with pytest.raises(ValueError):
        serialize(matrix(3), "csv", q_mode=True)


@pytest.mark.parametrize("q_mode", [False, True])
def test_json_round_trip(q_mode):
    m = matrix(4, ParamSet(4, (0, 2, 3)))
    text = serialize(m, "json", q_mode)
    doc = json.loads(text)
    assert set(doc) == {"e", "d", "v", "n", "rows", "columns"}
    back = from_json(text)
    assert back.rows == m.rows and back.cols == m.cols
    assert serialize(back, "json", q_mode) == text
    for col in m.cols:
        assert back.column(col) == m.column(col)


def test_json_values():
    doc = json.loads(serialize(matrix(2), "json", q_mode=True))
    assert doc["columns"] == [
        {"label": "2", "entries": [{"row": "2", "value": [[0, 1]]}, {"row": "1.1", "value": [[1, 1]]}]}
    ]
    doc = json.loads(serialize(matrix(2), "json"))
    assert doc["columns"][0]["entries"][1] == {"row": "1.1", "value": 1}


def test_unknown_format():
    with pytest.raises(ValueError):
        serialize(matrix(2), "xml")
