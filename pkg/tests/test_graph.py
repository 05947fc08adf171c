import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import graphs
from exclusivity.errors import InvalidParameter, ParseError
from exclusivity.graph import (
    Graph,
    complement,
    find_isomorphism,
    format_graph,
    induced,
    is_isomorphism,
    make_circulant,
    make_complete,
    make_cycle,
    make_empty,
    make_prism,
    make_shrikhande,
    or_product,
    parse_graph,
)
from exclusivity.oracles import brute_alpha, brute_induced, brute_isomorphic, has_triangle


def assert_simple(g: Graph):
    for u in range(g.n):
        assert not g.has_edge(u, u)
        for v in range(g.n):
            assert g.has_edge(u, v) == g.has_edge(v, u)


class TestGenerators:
    def test_cycle5(self):
        g = make_cycle(5)
        assert (g.n, g.num_edges) == (5, 5)
        assert set(g.degrees()) == {2}

    def test_cycle3_is_triangle(self):
        assert make_cycle(3) == make_complete(3)

    def test_cycle7_alpha_by_enumeration(self):
        assert brute_alpha(make_cycle(7)) == 3

    @pytest.mark.parametrize("n", [0, 1, 2, -1])
    def test_cycle_rejects_small(self, n):
        with pytest.raises(InvalidParameter):
            make_cycle(n)

    def test_ci8_shape(self, ci8):
        assert (ci8.n, ci8.num_edges) == (8, 12)
        assert set(ci8.degrees()) == {3}
        assert not has_triangle(ci8)

    def test_circulant_distance_one_is_cycle(self):
        assert make_circulant(5, {1}) == make_cycle(5)

    def test_circulant_all_distances_complete(self):
        assert make_circulant(8, {1, 2, 3, 4}) == make_complete(8)

    @pytest.mark.parametrize("d", [0, 5, -1])
    def test_circulant_bad_distance(self, d):
        with pytest.raises(InvalidParameter):
            make_circulant(8, {d})

    def test_prism(self, prism):
        assert (prism.n, prism.num_edges) == (6, 9)
        assert set(prism.degrees()) == {3}

    def test_shrikhande_complement(self, cs):
        assert make_shrikhande().num_edges == 48
        assert set(make_shrikhande().degrees()) == {6}
        assert (cs.n, cs.num_edges) == (16, 72)
        assert set(cs.degrees()) == {9}

    def test_constructors_simple(self, ci8, prism, cs):
        for g in (make_cycle(7), ci8, prism, cs, make_empty(4), make_complete(4)):
            assert_simple(g)

    def test_rejects_self_loop(self):
        with pytest.raises(InvalidParameter):
            Graph.from_edges(3, [(1, 1)])
        with pytest.raises(InvalidParameter):
            Graph(2, (0b01, 0))

    def test_rejects_asymmetric(self):
        with pytest.raises(InvalidParameter):
            Graph(2, (0b10, 0))


class TestOperations:
    def test_complement_small(self):
        assert complement(make_complete(3)) == make_empty(3)
        assert find_isomorphism(complement(make_cycle(5)), make_cycle(5)) is not None

    @given(graphs())
    def test_complement_involution(self, g):
        assert complement(complement(g)) == g
        assert_simple(complement(g))

    def test_or_product_c5(self, c5):
        assert or_product(c5, c5).n == 25

    @given(graphs(max_n=5), graphs(max_n=5))
    @settings(max_examples=60)
    def test_or_product_rule_and_degrees(self, g, h):
        p = or_product(g, h)
        assert p.n == g.n * h.n
        assert_simple(p)
        for u1, u2, v1, v2 in itertools.product(range(g.n), range(h.n), range(g.n), range(h.n)):
            a, b = u1 * h.n + u2, v1 * h.n + v2
            expect = a != b and (g.has_edge(u1, v1) or h.has_edge(u2, v2))
            assert p.has_edge(a, b) == expect
        for u1, u2 in itertools.product(range(g.n), range(h.n)):
            d1, d2 = g.degree(u1), h.degree(u2)
            assert p.degree(u1 * h.n + u2) == d1 * h.n + d2 * g.n - d1 * d2

    def test_induced(self, c5):
        assert induced(c5, range(5)) == c5
        path = induced(c5, [0, 1, 2])
        assert path.edges() == [(0, 1), (1, 2)]
        with pytest.raises(InvalidParameter):
            induced(c5, [7])

    def test_ci8_some_five_subset_induces_c5(self, ci8):
        c5 = make_cycle(5)
        hits = [s for s in itertools.combinations(range(8), 5) if brute_isomorphic(induced(ci8, s), c5)]
        assert hits


class TestIsomorphism:
    def test_self(self, cs):
        m = find_isomorphism(cs, cs)
        assert m is not None and is_isomorphism(cs, cs, m)

    def test_c5_vs_chord(self, c5):
        chorded = Graph.from_edges(5, c5.edges() + [(0, 2)])
        assert find_isomorphism(c5, chorded) is None

    def test_deterministic(self, ci8):
        shuffled = relabel(ci8, random.Random(3))
        assert find_isomorphism(ci8, shuffled) == find_isomorphism(ci8, shuffled)

    @given(graphs(max_n=7), st.randoms(use_true_random=False))
    @settings(max_examples=80)
    def test_permuted_copy_found(self, g, rnd):
        h = relabel(g, rnd)
        m = find_isomorphism(g, h)
        assert m is not None and is_isomorphism(g, h, m)

    @given(graphs(max_n=6), graphs(max_n=6))
    @settings(max_examples=80)
    def test_agrees_with_brute_force(self, g, h):
        m = find_isomorphism(g, h)
        assert (m is not None) == brute_isomorphic(g, h)
        if m is not None:
            assert is_isomorphism(g, h, m)

    def test_same_degree_sequence_non_isomorphic(self):
        # C6 versus two triangles: both 2-regular on 6 vertices
        two_triangles = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
        assert find_isomorphism(make_cycle(6), two_triangles) is None

    def test_shrikhande_not_rook(self):
        rook = Graph.from_edges(
            16,
            [(4 * a + b, 4 * c + d) for a, b, c, d in itertools.product(range(4), repeat=4)
             if (a == c) != (b == d) and 4 * a + b < 4 * c + d],
        )
        assert rook.num_edges == 48
        assert find_isomorphism(make_shrikhande(), rook) is None


def relabel(g: Graph, rnd) -> Graph:
    perm = list(range(g.n))
    rnd.shuffle(perm)
    return Graph.from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


class TestTextFormat:
    def test_round_trip(self, cs):
        assert parse_graph(format_graph(cs, "complement of Shrikhande")) == cs

    def test_comments_and_blank_lines(self):
        g = parse_graph("# header\n\nn 3  # three\n0 1\n# edge\n1 2\n")
        assert g.edges() == [(0, 1), (1, 2)]

    @pytest.mark.parametrize(
        "text, line",
        [("0 1\n", 1), ("n 3\n0 5\n", 2), ("n 3\n0 1 2\n", 2), ("n 3\n0 x\n", 2), ("n 2\n1 1\n", 2)],
    )
    def test_errors_carry_line(self, text, line):
        with pytest.raises(ParseError) as err:
            parse_graph(text)
        assert err.value.line == line

    def test_missing_header(self):
        with pytest.raises(ParseError):
            parse_graph("# nothing\n")


def test_induced_oracle_agrees_on_small_hosts():
    rnd = random.Random(11)
    for _ in range(5):
        n = rnd.randint(5, 7)
        g = Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rnd.random() < 0.5])
        assert brute_induced(g, make_cycle(5)) == any(
            brute_isomorphic(induced(g, s), make_cycle(5)) for s in itertools.combinations(range(n), 5)
        )
