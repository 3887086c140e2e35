"""
Unit tests for the order, lattice operations, covers, rank and whole-lattice tables
"""
import itertools
import random

import networkx as nx
import pytest

from src.errors import ShapeMismatchError
from src.lattice import (
    Shape,
    bottom,
    complement,
    covered_by,
    covers,
    downset,
    enumerate_strings,
    is_antichain,
    join,
    lattice_table,
    leq,
    meet,
    parse_string,
    rank,
    to_subset,
    top,
    upset,
)


def order_graph(shape):
    """DiGraph of the strict order v < w over all pairs"""
    elements = enumerate_strings(shape)
    graph = nx.DiGraph()
    graph.add_nodes_from(elements)
    graph.add_edges_from((v, w) for v in elements for w in elements if v != w and leq(v, w))
    return graph


class TestEnumeration:
    """Tests for enumeration order"""

    def test_s_3_2_matches_golden(self, shape_3_2, golden_dir):
        """Test the canonical order of S(3,2)"""
        expected = (golden_dir / "s_3_2.txt").read_text().split()
        assert [str(w) for w in enumerate_strings(shape_3_2)] == expected

    @pytest.mark.parametrize("n,r", [(1, 1), (4, 2), (6, 3), (10, 5)])
    def test_size(self, n, r):
        """Test 2^n distinct elements"""
        elements = enumerate_strings(Shape(n, r))
        assert len(elements) == 2 ** n
        assert len(set(elements)) == 2 ** n

    def test_index_roundtrip(self, shape_5_3):
        """Test index_of inverts element"""
        table = lattice_table(shape_5_3)
        for i in range(len(table)):
            assert table.index_of(table.element(i)) == i

    def test_to_subset_is_bijective(self):
        """Test distinct elements give distinct subsets"""
        shape = Shape(10, 4)
        subsets = {to_subset(w) for w in enumerate_strings(shape)}
        assert len(subsets) == 2 ** 10

    def test_to_subset_example(self):
        """Test the subset of 4310|013"""
        assert to_subset(parse_string(Shape(7, 4), "4310|013")) == {1, 3, 4, -1, -3}
        assert to_subset(parse_string(Shape(7, 4), "0000|000")) == frozenset()


class TestOrder:
    """Tests for leq, meet and join"""

    def test_leq_examples(self, shape_3_2, shape_4_2):
        """Test componentwise comparison"""
        assert leq(parse_string(shape_3_2, "10|1"), parse_string(shape_3_2, "21|0"))
        assert not leq(parse_string(shape_4_2, "10|01"), parse_string(shape_4_2, "10|02"))
        assert leq(parse_string(shape_4_2, "10|02"), parse_string(shape_4_2, "10|01"))

    def test_order_axioms(self):
        """Test reflexivity, antisymmetry and transitivity"""
        elements = enumerate_strings(Shape(5, 2))
        for v in elements:
            assert leq(v, v)
        for v, w in itertools.product(elements, repeat=2):
            if v != w:
                assert not (leq(v, w) and leq(w, v))
        assert nx.is_directed_acyclic_graph(order_graph(Shape(5, 2)))
        for u, v, w in itertools.product(elements[::3], repeat=3):
            if leq(u, v) and leq(v, w):
                assert leq(u, w)

    def test_bottom_and_top(self):
        """Test the extreme elements"""
        shape = Shape(6, 2)
        assert str(bottom(shape)) == "00|1234"
        assert str(top(shape)) == "21|0000"
        for w in enumerate_strings(shape):
            assert meet(bottom(shape), w) == bottom(shape)
            assert join(top(shape), w) == top(shape)

    def test_meet_example(self, shape_3_2):
        """Test componentwise minimum"""
        assert str(meet(parse_string(shape_3_2, "21|0"), parse_string(shape_3_2, "10|1"))) == "10|1"

    def test_meet_join_bounds(self):
        """Test meet and join are the infimum and supremum"""
        elements = enumerate_strings(Shape(5, 3))
        for v, w in itertools.product(elements, repeat=2):
            m, j = meet(v, w), join(v, w)
            assert leq(m, v) and leq(m, w)
            assert leq(v, j) and leq(w, j)
            lower = [u for u in elements if leq(u, v) and leq(u, w)]
            assert all(leq(u, m) for u in lower)

    def test_absorption_and_distributivity(self):
        """Test the lattice is distributive"""
        elements = enumerate_strings(Shape(4, 2))
        for u, v, w in itertools.product(elements, repeat=3):
            assert meet(u, join(u, v)) == u
            assert join(u, meet(u, v)) == u
            assert meet(u, join(v, w)) == join(meet(u, v), meet(u, w))
            assert join(u, meet(v, w)) == meet(join(u, v), join(u, w))

    def test_shape_mismatch(self, shape_3_2, shape_4_2):
        """Test comparing strings of different shapes"""
        with pytest.raises(ShapeMismatchError):
            leq(bottom(shape_3_2), bottom(shape_4_2))


class TestComplement:
    """Tests for complement"""

    def test_worked_example(self):
        """Test (4310|001)^c"""
        shape = Shape(7, 4)
        assert str(complement(parse_string(shape, "4310|001"))) == "2000|023"

    def test_involution(self):
        """Test complement is an involution mapping theta to Theta"""
        shape = Shape(6, 3)
        for w in enumerate_strings(shape):
            assert complement(complement(w)) == w
        assert str(complement(parse_string(shape, "000|000"))) == "321|123"

    def test_table_complements(self, shape_5_3):
        """Test the vectorized complement permutation"""
        table = lattice_table(shape_5_3)
        for i in range(len(table)):
            assert table.element(int(table.complements[i])) == complement(table.element(i))


def every_shape(n_fast, n_max):
    """Every shape with n <= n_max; those above n_fast are marked slow"""
    return [
        pytest.param(n, r, marks=pytest.mark.slow) if n > n_fast else (n, r)
        for n in range(1, n_max + 1)
        for r in range(1, n + 1)
    ]


class TestEveryShape:
    """Order axioms, bounds and complement on every shape with n <= 8"""

    @pytest.mark.parametrize("n,r", every_shape(6, 8))
    def test_order_axioms(self, n, r):
        """Test reflexivity and antisymmetry on all pairs, transitivity by closure"""
        shape = Shape(n, r)
        elements = enumerate_strings(shape)
        for v in elements:
            assert leq(v, v)
        for v, w in itertools.product(elements, repeat=2):
            if v != w:
                assert not (leq(v, w) and leq(w, v))
        graph = order_graph(shape)
        closure = nx.transitive_closure(graph, reflexive=False)
        assert set(closure.edges) == set(graph.edges)

    @pytest.mark.parametrize("n,r", every_shape(6, 8))
    def test_meet_below_join_above(self, n, r):
        """Test meet is below and join above both operands"""
        elements = enumerate_strings(Shape(n, r))
        for v, w in itertools.product(elements, repeat=2):
            m, j = meet(v, w), join(v, w)
            assert leq(m, v) and leq(m, w)
            assert leq(v, j) and leq(w, j)

    @pytest.mark.parametrize("n,r", every_shape(6, 8))
    def test_complement_involution(self, n, r):
        """Test complement is an involution exchanging bottom and top"""
        shape = Shape(n, r)
        for w in enumerate_strings(shape):
            assert complement(complement(w)) == w
        assert complement(bottom(shape)) == top(shape)
        assert complement(top(shape)) == bottom(shape)
        assert {complement(w) for w in enumerate_strings(shape)} == set(enumerate_strings(shape))


class TestCoversAndRank:
    """Tests for covers, rank and the table edges"""

    def test_covers_example(self, shape_3_2, shape_5_3):
        """Test the covers of small elements"""
        assert {str(u) for u in covers(parse_string(shape_3_2, "00|1"))} == {"10|1", "00|0"}
        assert {str(u) for u in covers(parse_string(shape_5_3, "000|12"))} == {"100|12", "000|02"}
        assert covers(top(shape_5_3)) == []
        assert covered_by(bottom(shape_5_3)) == []

    @pytest.mark.parametrize("n,r", [(3, 2), (5, 3), (6, 2), (6, 6)])
    def test_covers_are_transitive_reduction(self, n, r):
        """Test covers against networkx transitive reduction of leq"""
        shape = Shape(n, r)
        reduction = nx.transitive_reduction(order_graph(shape))
        for w in enumerate_strings(shape):
            assert set(covers(w)) == set(reduction.successors(w))
            assert set(covered_by(w)) == set(reduction.predecessors(w))

    @pytest.mark.parametrize("n,r", [(5, 3), (7, 3), (8, 1)])
    def test_table_edges_match_covers(self, n, r):
        """Test table edges equal the per-element covers"""
        shape = Shape(n, r)
        table = lattice_table(shape)
        edges = {(table.element(int(s)), table.element(int(d)))
                 for s, d in zip(table.edge_src, table.edge_dst)}
        expected = {(w, u) for w in table.elements() for u in covers(w)}
        assert edges == expected

    @pytest.mark.parametrize("n,r", [(4, 2), (6, 3), (8, 5)])
    def test_rank_equals_bfs_height(self, n, r):
        """Test the closed form against BFS from the bottom"""
        shape = Shape(n, r)
        graph = nx.DiGraph()
        for w in enumerate_strings(shape):
            graph.add_edges_from((w, u) for u in covers(w))
        heights = nx.single_source_shortest_path_length(graph, bottom(shape))
        longest = {w: 0 for w in graph}
        for w in nx.topological_sort(graph):
            for u in graph.successors(w):
                longest[u] = max(longest[u], longest[w] + 1)
        table = lattice_table(shape)
        for w in graph:
            assert rank(w) == heights[w] == longest[w] == table.ranks[table.index_of(w)]

    def test_rank_of_top(self):
        """Test rank of the maximum"""
        shape = Shape(7, 3)
        assert rank(bottom(shape)) == 0
        assert rank(top(shape)) == 6 + 10
        assert lattice_table(shape).max_rank == 16

    def test_covers_raise_rank_by_one(self):
        """Test graded steps"""
        for w in enumerate_strings(Shape(6, 4)):
            for u in covers(w):
                assert rank(u) == rank(w) + 1


class TestUpsetsAndAntichains:
    """Tests for upset, downset and is_antichain"""

    def test_empty(self):
        """Test the empty input"""
        assert upset([]) == set()
        assert downset([]) == set()
        assert is_antichain([])

    def test_against_leq(self):
        """Test up-sets and down-sets against direct comparison"""
        shape = Shape(5, 2)
        elements = enumerate_strings(shape)
        rng = random.Random(3)
        for _ in range(20):
            seeds = rng.sample(elements, rng.randint(1, 4))
            assert upset(seeds) == {w for w in elements if any(leq(z, w) for z in seeds)}
            assert downset(seeds) == {w for w in elements if any(leq(w, z) for z in seeds)}

    def test_idempotent(self):
        """Test closure operators are idempotent"""
        elements = enumerate_strings(Shape(6, 3))
        rng = random.Random(11)
        for _ in range(10):
            seeds = rng.sample(elements, 3)
            assert upset(upset(seeds)) == upset(seeds)
            assert downset(downset(seeds)) == downset(seeds)

    def test_antichain(self, shape_3_2):
        """Test antichain detection"""
        level = [parse_string(shape_3_2, s) for s in ("20|1", "10|0")]
        assert is_antichain(level)
        chain = [parse_string(shape_3_2, s) for s in ("10|1", "21|0")]
        assert not is_antichain(chain)

    def test_mixed_shapes(self, shape_3_2, shape_4_2):
        """Test mixed shapes are rejected"""
        with pytest.raises(ShapeMismatchError):
            upset([bottom(shape_3_2), bottom(shape_4_2)])
