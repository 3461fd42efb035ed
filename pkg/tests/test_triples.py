from itertools import combinations

import pytest
from hypothesis import given, settings

from fullhom import (
    NotPointDeterminingError,
    Triple,
    delete_vertex,
    distinguishes,
    enumerate_digraphs,
    enumerate_triples,
    is_point_determining,
    red_free_vertices,
    triple_intersection_violations,
)
from oracles import brute_false_twins
from strategies import D, digraphs

ARC = D(3, (0, 1))
CYCLE = D(3, (0, 1), (1, 2), (2, 0))


def brute_triples(g):
    found = []
    for x in range(g.n):
        rest, relabel = delete_vertex(g, x)
        back = {new: old for old, new in relabel.items()}
        for y, z in brute_false_twins(rest):
            found.append(Triple(x, (back[y], back[z])))
    return sorted(found)


def point_determining_up_to(n):
    for order in range(1, n + 1):
        for g in enumerate_digraphs(order):
            if is_point_determining(g):
                yield g


class TestEnumerateTriples:
    def test_arc_plus_isolated(self):
        # deleting 0 or deleting 1 leaves an arc-free pair
        assert enumerate_triples(ARC) == [Triple(0, (1, 2)), Triple(1, (0, 2))]
        assert enumerate_triples(ARC) == brute_triples(ARC)

    def test_cycle_has_none(self):
        assert enumerate_triples(CYCLE) == []

    def test_precondition(self):
        with pytest.raises(NotPointDeterminingError, match="not point-determining"):
            enumerate_triples(D(2))

    def test_green_normalised(self):
        assert Triple(0, (2, 1)).green == (1, 2)

    def test_dict_round_trip(self):
        t = Triple(3, (0, 5))
        assert Triple.from_dict(t.to_dict()) == t

    @given(digraphs())
    def test_matches_brute_force(self, g):
        if is_point_determining(g):
            assert enumerate_triples(g) == brute_triples(g)

    @given(digraphs())
    def test_red_is_unique_distinguisher(self, g):
        if not is_point_determining(g):
            return
        for t in enumerate_triples(g):
            y, z = t.green
            assert [w for w in range(g.n) if w not in (y, z) and distinguishes(g, w, y, z)] == [t.red]


class TestRedFree:
    def test_arc_plus_isolated(self):
        assert red_free_vertices(ARC) == {2}

    def test_cycle(self):
        assert red_free_vertices(CYCLE) == {0, 1, 2}

    def test_single_vertex(self):
        assert red_free_vertices(D(1)) == {0}

    def test_precondition(self):
        with pytest.raises(NotPointDeterminingError):
            red_free_vertices(D(2))

    def test_exhaustive_up_to_5(self):
        for g in point_determining_up_to(5):
            free = red_free_vertices(g)
            assert free
            for v in free:
                assert is_point_determining(delete_vertex(g, v)[0])

    @settings(max_examples=200, deadline=None)
    @given(digraphs(min_n=6, max_n=6))
    def test_sampled_6(self, g):
        if is_point_determining(g):
            free = red_free_vertices(g)
            assert free and all(is_point_determining(delete_vertex(g, v)[0]) for v in free)


class TestIntersectionLemma:
    def test_examples(self):
        assert triple_intersection_violations(ARC) == []
        assert triple_intersection_violations(CYCLE) == []

    def test_precondition(self):
        with pytest.raises(NotPointDeterminingError):
            triple_intersection_violations(D(2))

    def test_detects_a_planted_violation(self):
        # not a real digraph state: patch in triples that break the lemma
        import fullhom.triples as mod

        fake = [Triple(0, (1, 2)), Triple(1, (3, 4))]
        real = mod.enumerate_triples
        mod.enumerate_triples = lambda g: fake
        try:
            assert mod.triple_intersection_violations(D(5)) == [(fake[0], fake[1])]
        finally:
            mod.enumerate_triples = real

    def test_no_triples_below_three_vertices(self):
        for g in point_determining_up_to(2):
            assert enumerate_triples(g) == []

    def test_exhaustive_up_to_5(self):
        for g in point_determining_up_to(5):
            assert triple_intersection_violations(g) == []

    @settings(max_examples=200, deadline=None)
    @given(digraphs(min_n=6, max_n=6))
    def test_sampled_6(self, g):
        if is_point_determining(g):
            assert triple_intersection_violations(g) == []

    def test_pairs_share_structure(self):
        for g in point_determining_up_to(4):
            triples = enumerate_triples(g)
            for t1, t2 in combinations(triples, 2):
                if t2.red in t1.green:
                    assert t1.red in t2.green
