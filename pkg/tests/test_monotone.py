import pytest
from hypothesis import given, settings, strategies as st

import oracles
from sapprox import (
    PreconditionError,
    build_space,
    check_partial_monotone,
    inflection_points,
    inflection_set,
    lower_approx,
    reduce,
    trivial_elements,
    upper_approx,
)
from sapprox.monotone import find_violation, minimal_accepted
from sapprox.verify import random_space

KINDS = ["subseteq", "intersects", "card_threshold", "table"]


def labels(sets):
    return [s.labels for s in sets]


class TestPartialMonotone:
    def test_ex1(self, ex1):
        assert check_partial_monotone(ex1, "space").holds

    def test_ex2(self, ex2):
        report = check_partial_monotone(ex2, "space")
        assert report.holds and report.witness is None

    def test_table_decider_scope(self):
        g = build_space(["x"], ["a", "b"], {"x": ["b"]}, {"kind": "table", "entries": [{"A": ["b"], "minimal": [["a"]]}]})
        assert check_partial_monotone(g, "decider").holds

    @pytest.mark.parametrize("kind", ["subseteq", "intersects", "card_threshold"])
    def test_analytic_kinds_decider_scope(self, kind):
        g = random_space(3, 3, 3, kind)
        assert check_partial_monotone(g, "decider").holds

    def test_violation_search_finds_covering_pair(self):
        # accepts exactly the sets of size 1: {a} accepted, {a,b} rejected
        hit = find_violation(lambda m: m.bit_count() == 1, 3)
        assert hit == (0b001, 0b011)

    def test_violation_search_on_monotone_predicate(self):
        assert find_violation(lambda m: m.bit_count() >= 2, 4) is None

    def test_bad_scope(self, ex1):
        with pytest.raises(ValueError):
            check_partial_monotone(ex1, "everything")


class TestInflection:
    def test_ex1(self, ex1):
        assert labels(inflection_points(ex1, "u1")) == [["a"]]
        assert labels(inflection_points(ex1, "u2")) == [["a", "b"]]

    def test_ex2(self, ex2):
        assert labels(inflection_points(ex2, "v")) == [["a", "b"], ["a", "c"], ["b", "c"]]

    def test_pairs_view(self, ex1):
        inf = inflection_set(ex1)
        assert [(x, s.labels) for x, s in inf.pairs()] == [("u1", ["a"]), ("u2", ["a", "b"])]
        assert labels(inf.support()) == [["a"], ["a", "b"]]

    def test_minimal_accepted_prunes_supersets(self):
        calls = []

        def accepts(m):
            calls.append(m)
            return m & 1 == 1

        assert minimal_accepted(accepts, 3) == (1,)
        assert [m for m in calls if m & 1] == [1]

    @settings(max_examples=60, deadline=None)
    @given(st.integers(0, 2**32), st.integers(1, 6), st.integers(1, 5), st.sampled_from(KINDS), st.booleans())
    def test_antichain_reconstructs_decider(self, seed, nu, nw, kind, trivial):
        g = random_space(seed, nu, nw, kind, allow_trivial=trivial)
        for i, x in enumerate(g.u.labels):
            ip = inflection_points(g, x)
            masks = [s.mask for s in ip]
            assert all(a == b or a & ~b for a in masks for b in masks)
            for X in g.w.subsets():
                assert g.accepts(i, X.mask) == any(m & ~X.mask == 0 for m in masks)

    @settings(max_examples=40, deadline=None)
    @given(st.integers(0, 2**32), st.integers(1, 4), st.integers(1, 4), st.sampled_from(KINDS))
    def test_matches_brute_force(self, seed, nu, nw, kind):
        g = random_space(seed, nu, nw, kind, allow_trivial=True)
        w = list(g.w.labels)
        for i, x in enumerate(g.u.labels):
            expected = oracles.minimal_accepted(lambda a, X, i=i: g.accepts(i, g.w.subset(sorted(X)).mask), None, w)
            assert {frozenset(s.labels) for s in inflection_points(g, x)} == set(expected)


class TestTrivialAndReduce:
    def test_ex1_irreducible(self, ex1):
        assert not trivial_elements(ex1)
        assert reduce(ex1) == ex1

    def test_ex2_irreducible(self, ex2):
        assert not trivial_elements(ex2)

    def test_empty_image_is_trivial(self, ex1, ex1_trivial):
        assert trivial_elements(ex1_trivial).labels == ["u3"]
        assert labels(inflection_points(ex1_trivial, "u3")) == [[]]
        assert reduce(ex1_trivial) == ex1

    def test_all_trivial_is_an_error(self):
        g = build_space(["x"], ["a"], {"x": []}, "subseteq")
        with pytest.raises(PreconditionError):
            reduce(g)

    def test_never_accepting_element_is_trivial(self):
        g = build_space(["x", "y"], ["a"], {"x": ["a"], "y": ["a"]}, {"kind": "table", "entries": [{"A": ["a"], "minimal": []}]})
        assert trivial_elements(g).labels == ["x", "y"]

    @settings(max_examples=60, deadline=None)
    @given(st.integers(0, 2**32), st.integers(1, 8), st.integers(1, 5), st.sampled_from(KINDS))
    def test_reduce_properties(self, seed, nu, nw, kind):
        g = random_space(seed, nu, nw, kind, allow_trivial=True)
        trivial = trivial_elements(g)
        if trivial == g.u.full:
            with pytest.raises(PreconditionError):
                reduce(g)
            return
        r = reduce(g)
        assert reduce(r) == r
        assert not trivial_elements(r)
        kept = set(r.u.labels)
        assert kept == set(g.u.labels) - set(trivial.labels)
        for X in g.w.subsets():
            assert set(lower_approx(r, X).labels) == set(lower_approx(g, X).labels) & kept
            assert set(upper_approx(r, X).labels) == set(upper_approx(g, X).labels) & kept
