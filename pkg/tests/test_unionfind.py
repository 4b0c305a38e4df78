import pytest

from codforge.unionfind import ParityUnionFind, UnionFind


def test_union_find_groups():
    uf = UnionFind(6)
    uf.union(0, 1)
    uf.union(2, 3)
    uf.union(1, 3)
    assert uf.find(0) == uf.find(2)
    assert uf.find(0) != uf.find(4)
    assert sorted(map(sorted, uf.all_group_members().values())) == [[0, 1, 2, 3], [4], [5]]


def test_union_find_repeated_union_is_noop():
    uf = UnionFind(3)
    uf.union(0, 1)
    uf.union(1, 0)
    assert uf.parents[uf.find(0)] == -2
    assert len(uf.all_group_members()) == 2


def test_union_find_long_chain():
    uf = UnionFind(2000)
    for x in range(1999):
        uf.union(x, x + 1)
    assert list(uf.all_group_members().values()) == [list(range(2000))]


def test_parity_odd_triangle_conflicts():
    uf = ParityUnionFind(3)
    assert (uf.union(0, 1, 1), uf.union(1, 2, 1), uf.union(0, 2, 1)) == (True, True, False)
    # чётный треугольник непротиворечив
    assert uf.union(0, 2, 0)


def test_parity_values_satisfy_accepted_equations():
    equations = [(0, 1, 1), (1, 2, 0), (3, 4, 1), (2, 4, 1), (5, 6, 0)]
    uf = ParityUnionFind(7)
    for x, y, parity in equations:
        assert uf.union(x, y, parity)
    for x, y, parity in equations:
        assert uf.value(x) ^ uf.value(y) == parity
    assert uf.find(0)[0] == uf.find(3)[0]
    assert uf.find(0)[0] != uf.find(5)[0]


@pytest.mark.parametrize("order", [[0, 1, 2, 3], [3, 2, 1, 0], [1, 3, 0, 2]])
def test_parity_path_compression_keeps_values(order):
    uf = ParityUnionFind(5)
    chain = [(0, 1, 1), (1, 2, 1), (2, 3, 0), (3, 4, 1)]
    for idx in order:
        uf.union(*chain[idx])
    expected = {0: 0}
    for x, y, parity in chain:
        expected[y] = expected[x] ^ parity
    for x in range(5):
        assert uf.value(x) ^ uf.value(0) == expected[x]


def test_parity_path_payloads():
    uf = ParityUnionFind(4)
    uf.union(0, 1, 1, payload="a")
    uf.union(1, 2, 0, payload="b")
    uf.union(3, 2, 1, payload="c")
    edges = uf.path(0, 3)
    assert [e[3] for e in edges] == ["a", "b", "c"]
    assert (edges[0][0], edges[-1][1]) == (0, 3)
    assert sum(e[2] for e in edges) % 2 == uf.value(0) ^ uf.value(3)


def test_parity_path_between_groups():
    uf = ParityUnionFind(3)
    uf.union(0, 1, 0)
    assert uf.path(0, 2) is None
    assert uf.path(1, 1) == []
