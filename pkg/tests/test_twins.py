from itertools import combinations

import pytest
from hypothesis import given, settings

from fullhom import (
    DigraphError,
    HomogeneousKind,
    NotPointDeterminingError,
    TwinVerdict,
    complement,
    delete_vertex,
    distinguishes,
    enumerate_digraphs,
    is_homogeneous,
    is_independent_set,
    is_point_determining,
    is_strong_clique,
    max_homogeneous,
    removable_vertex,
    twin_type,
)
from oracles import brute_false_twins
from strategies import D, digraphs

ARC = D(3, (0, 1))
CYCLE = D(3, (0, 1), (1, 2), (2, 0))


class TestDistinguishes:
    def test_isolated_witness(self):
        assert not distinguishes(ARC, 2, 0, 1)

    def test_out_neighbourhood(self):
        assert distinguishes(ARC, 0, 1, 2)

    def test_in_neighbourhood(self):
        assert distinguishes(CYCLE, 2, 0, 1)

    def test_requires_distinct(self):
        with pytest.raises(DigraphError):
            distinguishes(ARC, 0, 0, 1)

    def test_out_of_range(self):
        with pytest.raises(DigraphError):
            distinguishes(ARC, 5, 0, 1)


class TestTwinType:
    def test_true_twins(self):
        assert twin_type(D(2, (0, 1), (1, 0)), 0, 1).verdict is TwinVerdict.TRUE_TWINS

    def test_mixed_twins(self):
        c = twin_type(D(2, (0, 1)), 0, 1)
        assert c.verdict is TwinVerdict.MIXED_TWINS and c.witness is None

    def test_false_twins(self):
        assert twin_type(D(2), 0, 1).verdict is TwinVerdict.FALSE_TWINS

    def test_not_twins_witness(self):
        c = twin_type(ARC, 1, 2)
        assert c.verdict is TwinVerdict.NOT_TWINS and c.witness == 0

    def test_same_vertex(self):
        with pytest.raises(DigraphError):
            twin_type(ARC, 1, 1)

    @given(digraphs(min_n=2))
    def test_symmetric(self, g):
        for u, v in combinations(range(g.n), 2):
            assert twin_type(g, u, v) == twin_type(g, v, u)

    @given(digraphs(min_n=2))
    def test_kinds_match_sets(self, g):
        for u, v in combinations(range(g.n), 2):
            verdict = twin_type(g, u, v).verdict
            if verdict is TwinVerdict.FALSE_TWINS:
                assert is_independent_set(g, {u, v}) and is_homogeneous(g, {u, v})
            elif verdict is TwinVerdict.TRUE_TWINS:
                assert is_strong_clique(g, {u, v}) and is_homogeneous(g, {u, v})
            elif verdict is TwinVerdict.MIXED_TWINS:
                assert g.has_arc(u, v) != g.has_arc(v, u)


class TestPointDetermining:
    def test_isolated_pair(self):
        assert not is_point_determining(D(2))

    def test_single_arc_plus_vertex(self):
        assert is_point_determining(ARC)

    def test_trivial(self):
        assert is_point_determining(D(0)) and is_point_determining(D(1))

    @given(digraphs())
    def test_matches_brute_force(self, g):
        assert is_point_determining(g) == (not brute_false_twins(g))

    @given(digraphs())
    def test_no_true_twins_iff_complement_point_determining(self, g):
        has_true = any(twin_type(g, u, v).verdict is TwinVerdict.TRUE_TWINS
                       for u, v in combinations(range(g.n), 2))
        assert (not has_true) == is_point_determining(complement(g))


class TestRemovableVertex:
    def test_arc_plus_isolated(self):
        assert removable_vertex(ARC) == 2

    def test_cycle(self):
        assert removable_vertex(CYCLE) == 0

    def test_single_vertex(self):
        assert removable_vertex(D(1)) == 0

    def test_precondition(self):
        with pytest.raises(NotPointDeterminingError):
            removable_vertex(D(2))

    def test_exhaustive_up_to_5(self):
        for n in range(1, 6):
            for g in enumerate_digraphs(n):
                if is_point_determining(g):
                    v = removable_vertex(g)
                    assert is_point_determining(delete_vertex(g, v)[0])

    @settings(max_examples=300, deadline=None)
    @given(digraphs(min_n=6, max_n=7))
    def test_sampled_6_and_7(self, g):
        if is_point_determining(g):
            v = removable_vertex(g)
            assert is_point_determining(delete_vertex(g, v)[0])
            assert all(not is_point_determining(delete_vertex(g, u)[0]) for u in range(v))


class TestHomogeneous:
    def test_whole_vertex_set(self):
        assert is_homogeneous(D(2, (0, 1), (1, 0)), {0, 1})

    def test_distinguished_pair(self):
        assert not is_homogeneous(ARC, {1, 2})

    def test_small_sets(self):
        assert is_homogeneous(ARC, set()) and is_homogeneous(ARC, {1})

    @given(digraphs())
    def test_complement_invariant(self, g):
        for size in range(g.n + 1):
            for S in combinations(range(g.n), size):
                assert is_homogeneous(g, S) == is_homogeneous(complement(g), S)

    def test_max_clique_digon(self):
        assert max_homogeneous(D(2, (0, 1), (1, 0)), HomogeneousKind.STRONG_CLIQUE) == (2, {0, 1})

    def test_max_independent_cycle(self):
        size, witness = max_homogeneous(CYCLE, "independent")
        assert size == 1 and witness == {0}

    def test_max_independent_empty_pair(self):
        assert max_homogeneous(D(2), HomogeneousKind.INDEPENDENT) == (2, {0, 1})

    def test_empty_digraph(self):
        assert max_homogeneous(D(0), "strong-clique") == (0, frozenset())

    @given(digraphs(max_n=5))
    def test_max_is_maximum(self, g):
        for kind, test in (("strong-clique", is_strong_clique), ("independent", is_independent_set)):
            size, witness = max_homogeneous(g, kind)
            assert len(witness) == size
            best = max((len(S) for r in range(g.n + 1) for S in combinations(range(g.n), r)
                        if test(g, S) and is_homogeneous(g, S)), default=0)
            assert size == best
