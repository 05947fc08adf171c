import pytest

from exclusivity.errors import InvalidParameter, ParseError
from exclusivity.graph import find_isomorphism, make_circulant, make_cycle, make_prism, make_shrikhande_complement
from exclusivity.scenario import (
    CliqueHypergraph,
    Event,
    Scenario,
    builtin,
    exclusivity_graph,
    format_scenario,
    parse_scenario,
)

THREE_BOX = """\
# Specker's three boxes: open two, one full and one empty
context 1 2
context 1 3
context 2 3
event 1,0 | 1,2
event 0,1 | 1,2
event 1,0 | 1,3
event 0,1 | 1,3
event 1,0 | 2,3
event 0,1 | 2,3
"""


class TestParse:
    def test_single_event(self):
        s = parse_scenario("event 1,0 | b1,b2")
        assert s.events[0].assignments == {"b1": 1, "b2": 0}
        assert s.contexts is None

    def test_three_box_file(self):
        s = parse_scenario(THREE_BOX)
        assert len(s.events) == 6
        assert len(s.contexts) == 3
        assert str(s.events[0]) == "1,0|1,2"

    def test_order_preserved(self):
        s = parse_scenario("event 1 | x\nevent 0 | x\nevent 2 | y\n")
        assert [str(e) for e in s.events] == ["1|x", "0|x", "2|y"]

    def test_duplicate_event(self):
        with pytest.raises(ParseError) as err:
            parse_scenario("event 1,0 | a,b\n\nevent 1,0 | a,b\n")
        assert err.value.line == 3

    def test_duplicate_up_to_order(self):
        with pytest.raises(ParseError):
            parse_scenario("event 1,0 | a,b\nevent 0,1 | b,a\n")

    @pytest.mark.parametrize(
        "text, line",
        [
            ("event 1,0 | a\n", 1),
            ("event 1 a\n", 1),
            ("event x | a\n", 1),
            ("event -1 | a\n", 1),
            ("event 1,1 | a,a\n", 1),
            ("\nfrobnicate\n", 2),
            ("setting a\nevent 1 | b\n", 2),
            ("context a\nevent 1 | b\n", 2),
            ("context\n", 1),
        ],
    )
    def test_malformed(self, text, line):
        with pytest.raises(ParseError) as err:
            parse_scenario(text)
        assert err.value.line == line

    def test_empty(self):
        with pytest.raises(ParseError):
            parse_scenario("# nothing\n")

    def test_round_trip(self):
        for name in ("three-box", "kcbs", "chsh", "mermin"):
            s = builtin(name)
            again = parse_scenario(format_scenario(s), name)
            assert again.events == s.events
            assert again.contexts == s.contexts


class TestTypes:
    def test_event_needs_assignment(self):
        with pytest.raises(InvalidParameter):
            Event((), ())

    def test_event_equality_is_map_equality(self):
        assert Event.of((1, 0), ("a", "b")) == Event.of((0, 1), ("b", "a"))

    def test_scenario_rejects_duplicates(self):
        e = Event.of((1,), ("a",))
        with pytest.raises(InvalidParameter):
            Scenario((e, e))

    def test_scenario_context_cover(self):
        with pytest.raises(InvalidParameter):
            Scenario((Event.of((1, 0), ("a", "b")),), (("a",),))

    def test_hypergraph_requires_cliques(self, c5):
        with pytest.raises(InvalidParameter):
            CliqueHypergraph(c5, ((0, 2),))
        assert CliqueHypergraph(c5, ((0, 1), (1, 2))).uncovered() == [3, 4]


class TestCompile:
    def test_three_box_is_prism(self):
        g, gamma = exclusivity_graph(parse_scenario(THREE_BOX))
        assert find_isomorphism(g, make_prism()) is not None
        assert gamma.cliques == ((0, 1), (2, 3), (4, 5))

    def test_kcbs_is_c5(self):
        g, _ = exclusivity_graph(builtin("kcbs"))
        # event i = (1,0 | i,i+1) clashes with i-1 and i+1 on their shared setting
        assert g.edges() == make_cycle(5).edges()

    def test_single_event(self):
        g, gamma = exclusivity_graph(parse_scenario("event 1 | x"))
        assert (g.n, g.num_edges) == (1, 0)
        assert gamma.cliques == ((0,),)

    def test_chsh(self):
        s = builtin("chsh")
        assert len(s.events) == 8
        assert all(e.settings[0].startswith("A") and e.settings[1].startswith("B") for e in s.events)
        g, _ = exclusivity_graph(s)
        assert find_isomorphism(g, make_circulant(8, {1, 4})) is not None

    def test_mermin(self):
        s = builtin("mermin")
        assert len(s.events) == 16
        g, gamma = exclusivity_graph(s)
        assert find_isomorphism(g, make_shrikhande_complement()) is not None
        assert sorted(map(len, gamma.cliques)) == [4, 4, 4, 4]

    def test_unknown_builtin(self):
        with pytest.raises(InvalidParameter):
            builtin("ghz")

    @pytest.mark.parametrize("name", ["three-box", "kcbs", "chsh", "mermin"])
    def test_compiled_invariants(self, name):
        s = builtin(name)
        g, gamma = exclusivity_graph(s)
        for i, a in enumerate(s.events):
            for j, b in enumerate(s.events):
                assert g.has_edge(i, j) == (i != j and a.exclusive_with(b))
        for c in gamma.cliques:
            assert g.is_clique(c)
        # same context, different outcome on a shared setting -> adjacent
        for ctx in s.contexts:
            members = [i for i, e in enumerate(s.events) if set(e.settings) <= set(ctx)]
            for i in members:
                for j in members:
                    if i != j and s.events[i] != s.events[j]:
                        assert g.has_edge(i, j)

    def test_contexts_absent_uses_all_maximal_cliques(self):
        text = "\n".join(l for l in THREE_BOX.splitlines() if not l.startswith("context"))
        g, gamma = exclusivity_graph(parse_scenario(text))
        assert sorted(map(len, gamma.cliques)) == [2, 2, 2, 3, 3]
