from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from sapprox import (
    PreconditionError,
    SApproxError,
    belief_from_space,
    build_belief_structure,
    build_space,
    evaluate,
    induce_belief,
    is_irreducible,
    quality,
    space_from_belief,
)
from sapprox.verify import random_belief, random_space, _random_masses

import random

F = Fraction


def by_labels(masses):
    return {"".join(k.labels): v for k, v in masses.items()}


class TestBeliefFromSpace:
    def test_ex1(self, ex1):
        r = belief_from_space(ex1)
        assert r.valid and by_labels(r.masses) == {"a": F(1, 2), "ab": F(1, 2)}

    def test_ex2_negative_mass_reported(self, ex2):
        r = belief_from_space(ex2)
        assert not r.valid
        assert by_labels(r.masses) == {"ab": 1, "ac": 1, "bc": 1, "abc": -2}
        assert any("negative mass -2" in d for d in r.diagnostics)
        with pytest.raises(PreconditionError):
            r.structure()

    def test_strict_refuses_reducible(self, ex1_trivial):
        with pytest.raises(PreconditionError, match="reducible"):
            belief_from_space(ex1_trivial)
        r = belief_from_space(ex1_trivial, strict=False)
        assert any("reducible" in d for d in r.diagnostics)

    @settings(max_examples=60, deadline=None)
    @given(st.integers(0, 2**32), st.integers(1, 8), st.integers(1, 5))
    def test_inclusion_frequency_masses(self, seed, nu, nw):
        g = random_space(seed, nu, nw, "subseteq")
        r = belief_from_space(g)
        counts = Counter(img.mask for img in g.t)
        assert r.valid
        assert {s.mask: m for s, m in r.masses.items()} == {m: F(c, nu) for m, c in counts.items()}
        bs = r.structure()
        for x in g.w.subsets():
            assert evaluate(bs, x).bel == quality(g, x).q_lower
            assert evaluate(bs, x).pl == quality(g, x).q_upper


class TestSpaceFromBelief:
    def test_b1_is_ex1_shaped(self, b1):
        g = space_from_belief(b1)
        assert g.u.labels == ("e1", "e2")
        assert [t.labels for t in g.t] == [["a"], ["a", "b"]]
        for x in g.w.subsets():
            r = evaluate(b1, x)
            assert (quality(g, x).q_lower, quality(g, x).q_upper) == (r.bel, r.pl)

    def test_vacuous(self):
        bs = build_belief_structure(["a", "b", "c"], [(["a", "b", "c"], 1)])
        g = space_from_belief(bs)
        assert g.u.size == 1
        assert [x.labels for x in g.w.subsets() if quality(g, x).q_lower == 1] == [["a", "b", "c"]]

    def test_thirds(self):
        bs = build_belief_structure(["a", "b"], [(["a"], "1/3"), (["b"], "2/3")])
        g = space_from_belief(bs)
        assert [t.labels for t in g.t] == [["a"], ["b"], ["b"]]
        assert quality(g, g.w.subset(["b"])).q_lower == F(2, 3)

    def test_deterministic(self, b1):
        assert space_from_belief(b1) == space_from_belief(b1)

    @settings(max_examples=80, deadline=None)
    @given(st.integers(0, 2**32), st.integers(1, 5), st.integers(1, 36))
    def test_round_trip(self, seed, nw, den):
        bs = random_belief(seed, nw, den)
        g = space_from_belief(bs)
        assert is_irreducible(g)
        back = belief_from_space(g)
        assert back.valid and back.structure() == bs
        for x in bs.w.subsets():
            r = evaluate(bs, x)
            q = quality(g, x)
            assert (q.q_lower, q.q_upper) == (r.bel, r.pl)


class TestInduce:
    def _u_belief(self, g, entries):
        return build_belief_structure(g.u, entries)

    def test_vacuous_on_u(self, ex1):
        r = induce_belief(self._u_belief(ex1, [(["u1", "u2"], 1)]), ex1)
        assert r.valid and by_labels(r.masses) == {"a": F(1, 2), "ab": F(1, 2)}

    def test_shares(self, ex1):
        r = induce_belief(self._u_belief(ex1, [(["u1"], "1/3"), (["u1", "u2"], "2/3")]), ex1)
        assert by_labels(r.masses) == {"a": F(2, 3), "ab": F(1, 3)}

    def test_support_mismatch_kept(self, ex1):
        r = induce_belief(self._u_belief(ex1, [(["u1"], 1)]), ex1)
        assert r.valid
        assert by_labels(r.masses) == {"a": 1, "ab": 0}
        assert [s.labels for s in r.support] == [["a"], ["a", "b"]]
        assert any("support mismatch" in d for d in r.diagnostics)
        assert [s.labels for s in r.structure().focal_elements] == [["a"]]

    def test_universe_mismatch(self, ex1, b1):
        with pytest.raises(SApproxError):
            induce_belief(b1, ex1)

    def test_reducible_refused(self, ex1_trivial):
        bu = build_belief_structure(ex1_trivial.u, [(["u1", "u2", "u3"], 1)])
        with pytest.raises(PreconditionError):
            induce_belief(bu, ex1_trivial)
        r = induce_belief(bu, ex1_trivial, strict=False)
        assert not r.valid and r.mass(ex1_trivial.w.empty) == F(1, 3)

    @settings(max_examples=60, deadline=None)
    @given(st.integers(0, 2**32), st.integers(1, 6), st.integers(1, 4),
           st.sampled_from(["subseteq", "intersects", "card_threshold", "table"]))
    def test_valid_and_matches_direct_sum(self, seed, nu, nw, kind):
        g = random_space(seed, nu, nw, kind)
        bu = _random_masses(random.Random(seed), g.u, 36)
        r = induce_belief(bu, g)
        assert r.valid
        assert r.mass(g.w.empty) == 0 and sum(r.masses.values()) == 1
        T = {x: frozenset(g.image(x).labels) for x in g.u.labels}
        oracle = oracles.induced_masses(
            {frozenset(s.labels): m for s, m in bu.focal}, g.u.labels, g.w.labels, T,
            lambda a, X: g.s.accepts(g.w.subset(sorted(a)).mask, g.w.subset(sorted(X)).mask),
        )
        assert {frozenset(s.labels): r.mass(s) for s in g.w.subsets()} == oracle
