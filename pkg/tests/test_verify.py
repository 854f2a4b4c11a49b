import math

import pytest
from hypothesis import given, settings, strategies as st

from sapprox import SApproxError, check_partial_monotone, trivial_elements
from sapprox.serialize import dumps, space_to_doc
from sapprox.verify import (
    CLAIM_IDS,
    ClaimReport,
    GeneratorConfig,
    exit_code,
    generate_subjects,
    random_belief,
    random_space,
    replay,
    verify_claims,
)

KINDS = ["subseteq", "intersects", "card_threshold", "table"]


class TestGenerators:
    def test_seeded_space_is_reproducible(self):
        assert random_space(7, 4, 3, "table") == random_space(7, 4, 3, "table")
        assert dumps(space_to_doc(random_space(7, 4, 3, "table"))) == (
            '{"U":["u1","u2","u3","u4"],"W":["a","b","c"],'
            '"T":{"u1":["a","b"],"u2":["b"],"u3":["c"],"u4":["b","c"]},'
            '"S":{"kind":"table","entries":[{"A":["b"],"minimal":[["a"]]},{"A":["a","b"],"minimal":[["a"]]},'
            '{"A":["c"],"minimal":[["a","c"]]},{"A":["b","c"],"minimal":[["a"]]}]}}'
        )

    def test_seed_7_table_is_monotone_and_irreducible(self):
        g = random_space(7, 4, 3, "table")
        assert check_partial_monotone(g).holds and not trivial_elements(g)

    def test_belief_with_one_element(self):
        bs = random_belief(3, 1)
        assert [(s.labels, m) for s, m in bs.focal] == [(["a"], 1)]

    @pytest.mark.parametrize("args", [(0, 0, 2, "subseteq"), (0, 9, 2, "subseteq"), (0, 2, 6, "table"), (0, 2, 2, "nope")])
    def test_space_bounds(self, args):
        with pytest.raises(SApproxError):
            random_space(*args)

    def test_belief_bounds(self):
        with pytest.raises(SApproxError):
            random_belief(0, 2, 37)

    @settings(max_examples=100, deadline=None)
    @given(st.integers(0, 2**32), st.integers(1, 8), st.integers(1, 5), st.sampled_from(KINDS))
    def test_spaces_are_irreducible(self, seed, nu, nw, kind):
        g = random_space(seed, nu, nw, kind)
        assert check_partial_monotone(g).holds and not trivial_elements(g)

    @settings(max_examples=100, deadline=None)
    @given(st.integers(0, 2**32), st.integers(1, 5), st.integers(1, 36))
    def test_belief_denominators(self, seed, nw, den):
        bs = random_belief(seed, nw, den)
        assert 1 <= len(bs.focal) <= 4
        assert math.lcm(*(m.denominator for _, m in bs.focal)) <= den

    def test_subjects_cycle_kinds(self):
        subjects = list(generate_subjects(GeneratorConfig(trials=8, seed=5)))
        assert [s.space.s.kind for s in subjects] == KINDS * 2
        again = list(generate_subjects(GeneratorConfig(trials=8, seed=5)))
        assert subjects == again

    def test_trials_independent_of_count(self):
        short = list(generate_subjects(GeneratorConfig(trials=3, seed=11)))
        long = list(generate_subjects(GeneratorConfig(trials=6, seed=11)))
        assert long[:3] == short


class TestClaims:
    def test_ex1_everything_holds(self, ex1):
        reports = verify_claims(ex1)
        assert [r.claim for r in reports] == list(CLAIM_IDS)
        assert all(r.status == "holds" and r.trials == 1 for r in reports)
        assert exit_code(reports) == 0

    def test_ex2_counterexamples(self, ex2):
        reports = {r.claim: r for r in verify_claims(ex2)}
        p35 = reports["P3.5"]
        assert p35.status == "counterexample"
        assert p35.witness["family"] == [["a", "b"], ["a", "c"], ["b", "c"]]
        assert (p35.witness["union_value"], p35.witness["alternating_sum"]) == ("1/1", "3/1")
        assert reports["P3.6"].witness["set"] == ["a", "b", "c"]
        assert reports["P3.6"].witness["mass"] == "-2/1"
        assert reports["T3.8"].status == "counterexample"
        assert reports["P3.3"].status == reports["P3.4"].status == "holds"
        assert exit_code(reports.values()) == 2

    def test_reducible_space_skips(self, ex1_trivial):
        reports = {r.claim: r for r in verify_claims(ex1_trivial)}
        for cid in ("P3.4", "P3.6", "P3.7", "T3.8", "T3.10"):
            assert reports[cid].status == "skipped-precondition"
            assert reports[cid].note == "space is reducible"
        assert reports["P3.3"].status == "holds"

    def test_belief_source(self, b1):
        reports = {r.claim: r for r in verify_claims(b1)}
        assert reports["T3.9"].status == "holds"

    def test_unknown_claim(self, ex1):
        with pytest.raises(SApproxError):
            verify_claims(ex1, ["P9.9"])

    def test_random_batch_replays(self):
        reports = verify_claims(GeneratorConfig(trials=60, seed=1))
        found = [r for r in reports if r.status == "counterexample"]
        assert found
        for r in found:
            assert replay(r)
            assert replay(ClaimReport.from_doc(r.to_doc()))
        for r in reports:
            if r.claim.startswith("P2.1") or r.claim in ("P3.2", "P3.3", "P3.4", "T3.9", "T3.10"):
                assert r.status == "holds", r

    def test_replay_needs_counterexample(self, ex1):
        with pytest.raises(SApproxError):
            replay(verify_claims(ex1, ["P3.2"])[0])

    def test_tampered_witness_does_not_replay(self, ex2):
        r = verify_claims(ex2, ["P3.6"])[0]
        doc = r.to_doc()
        doc["witness"]["space"]["S"] = {"kind": "subseteq"}
        assert not replay(ClaimReport.from_doc(doc))

    def test_report_doc_validation(self):
        with pytest.raises(SApproxError):
            ClaimReport.from_doc({"claim": "P3.2", "status": "maybe", "trials": 1})
