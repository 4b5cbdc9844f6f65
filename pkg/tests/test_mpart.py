import pytest
from hypothesis import given
from hypothesis import strategies as st

from akdecomp.errors import DiagramError
from akdecomp.mpart import (
    Multipartition,
    Node,
    ParamSet,
    addable_nodes,
    enumerate_dpartitions,
    is_above,
    n_stat_above,
    n_stat_below,
    n_stat_total,
    n_stat_zero_nodes,
    rank,
    removable_nodes,
    residue,
    residue_diagram,
)

from conftest import CONFIGS, E4, mp
from oracles import diagram, multipartition_count, oracle_addable, oracle_removable

E2 = ParamSet(2, (0,))


def test_paramset_invariants():
    assert ParamSet(4, (0, 2, 3)).d == 3
    for e, v in [(2, (3,)), (4, (2, 1)), (0, (0,)), (3, ()), (3, (-1,))]:
        with pytest.raises(ValueError):
            ParamSet(e, v)


def test_rank():
    assert rank(Multipartition.empty(3)) == 0
    assert rank(mp("1|3.1|2.1.1")) == 9
    assert rank(mp("2|1.1")) == 4


def test_parse_and_render_round_trip():
    for text in ["1|3.1|2.1.1", "-|2.1|1.1.1", "-", "-|-", "10.2"]:
        assert str(mp(text)) == text
    with pytest.raises(DiagramError):
        mp("1.2")
    with pytest.raises(DiagramError):
        mp("a|1")


def test_residue_examples():
    assert residue(Node(1, 1, 0), E4) == 0
    assert residue(Node(3, 1, 2), E4) == 1
    assert residue(Node(1, 1, 0), ParamSet(3, (0, 1))) == 0
    with pytest.raises(DiagramError):
        residue(Node(1, 1, 3), E4)


def test_residue_diagram_matches_worked_example():
    assert residue_diagram(mp("1|3.1|2.1.1"), E4) == [
        [[0]],
        [[2, 3, 0], [1]],
        [[3, 0], [2], [1]],
    ]


def test_is_above():
    assert is_above(Node(2, 1, 0), Node(1, 2, 0), E2)
    assert not is_above(Node(1, 2, 0), Node(2, 1, 0), E2)
    assert is_above(Node(1, 1, 1), Node(1, 1, 2), E4)
    assert is_above(Node(1, 2, 2), Node(1, 3, 1), E4)
    assert not is_above(Node(1, 3, 1), Node(1, 2, 2), E4)
    assert not is_above(Node(1, 1, 0), Node(1, 1, 0), E4)


def test_addable_removable_examples():
    assert addable_nodes(mp("1"), 1, E2) == [Node(2, 1, 0), Node(1, 2, 0)]
    assert addable_nodes(mp("2"), 0, E2) == [Node(1, 3, 0)]
    empty = Multipartition.empty(3)
    for i in range(4):
        expected = [Node(1, 1, c) for c in range(3) if E4.v[c] == i]
        assert sorted(addable_nodes(empty, i, E4)) == expected
        assert removable_nodes(empty, i, E4) == []
    assert removable_nodes(mp("2.1"), 1, E2) == [Node(2, 1, 0), Node(1, 2, 0)]
    rem = removable_nodes(mp("1|3.1|2.1.1"), 0, E4)
    lam = mp("1|3.1|2.1.1")
    assert sorted(lam.part(n.c, n.a) for n in rem) == [1, 2, 3]


def test_n_stats():
    assert n_stat_above(mp("1"), mp("2"), 1, E2) == 1
    assert n_stat_above(mp("-"), mp("1"), 0, E2) == 0
    assert n_stat_above(mp("2"), mp("2.1"), 1, E2) == 0
    assert n_stat_below(mp("1"), mp("1.1"), 1, E2) == 1
    assert n_stat_below(mp("2"), mp("2.1"), 1, E2) == -1
    assert n_stat_below(mp("-"), mp("1"), 0, E2) == 0
    assert n_stat_total(mp("-"), 0, E2) == 1
    assert n_stat_total(mp("1"), 1, E2) == 2
    assert n_stat_total(mp("1"), 0, E2) == -1
    assert n_stat_zero_nodes(mp("-"), E2) == 0
    assert n_stat_zero_nodes(mp("1|3.1|2.1.1"), E4) == 3
    assert n_stat_zero_nodes(mp("2"), E2) == 1


def test_n_stat_rejects_mismatched_pairs():
    with pytest.raises(DiagramError):
        n_stat_above(mp("1"), mp("3"), 0, E2)
    with pytest.raises(DiagramError):
        n_stat_below(mp("1"), mp("2"), 0, E2)  # added node is a 1-node


def test_add_remove_examples():
    assert mp("1").add_node(Node(1, 2, 0)) == mp("2")
    assert mp("2.1").remove_node(Node(2, 1, 0)) == mp("2")
    assert mp("1").add_node(Node(2, 1, 0)) == mp("1.1")
    with pytest.raises(DiagramError):
        mp("1").add_node(Node(2, 2, 0))
    with pytest.raises(DiagramError):
        mp("2.1").remove_node(Node(1, 1, 0))


def test_enumerate_examples():
    assert enumerate_dpartitions(0, 3) == [Multipartition.empty(3)]
    assert [str(x) for x in enumerate_dpartitions(2, 2)] == ["2|-", "1.1|-", "1|1", "-|2", "-|1.1"]
    assert [str(x) for x in enumerate_dpartitions(3, 1)] == ["3", "2.1", "1.1.1"]


@pytest.mark.parametrize("n, d", [(n, d) for d in (1, 2, 3) for n in range(11 if d < 3 else 9)])
def test_enumeration_counts(n, d):
    mps = enumerate_dpartitions(n, d)
    assert len(mps) == len(set(mps)) == multipartition_count(n, d)
    assert all(x.rank == n and x.d == d for x in mps)
    assert mps == sorted(mps, key=Multipartition.sort_key)


def multipartitions(d, max_rank=7):
    part = st.lists(st.integers(1, 4), max_size=3).map(lambda xs: tuple(sorted(xs, reverse=True)))
    return st.lists(part, min_size=d, max_size=d).map(lambda cs: Multipartition(tuple(cs)))


@pytest.mark.parametrize("p", CONFIGS, ids=str)
@given(data=st.data())
def test_node_sets_match_set_oracle(p, data):
    lam = data.draw(multipartitions(p.d))
    cells = diagram(lam.components)
    assert set(map(tuple, lam.addable())) == oracle_addable(cells, p.d, lam.rank)
    assert set(map(tuple, lam.removable())) == oracle_removable(cells, p.d)
    # one more addable slot than removable corner per component
    assert len(list(lam.addable())) == len(list(lam.removable())) + p.d
    for i in range(p.e):
        for node in addable_nodes(lam, i, p):
            assert residue(node, p) == i
            assert lam.add_node(node).remove_node(node) == lam
        nodes = addable_nodes(lam, i, p) + removable_nodes(lam, i, p)
        keys = {(n.b - n.a + p.v[n.c], n.c) for n in nodes}
        assert len(keys) == len(nodes)
        for x in nodes:
            for y in nodes:
                if x != y:
                    assert is_above(x, y, p) != is_above(y, x, p)
