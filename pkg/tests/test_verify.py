import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hodgepair.generate import PROFILES, RandomPairProfile, generate_pairs, generate_random_pair
from hodgepair.pairs import make_pair
from hodgepair.simplicial import cochain_pair, fixture
from hodgepair.verify import (
    ALL_STATEMENTS,
    StatementId,
    Verdict,
    format_table,
    is_coarse,
    parse_statements,
    run_suite,
    verify,
)


def test_parse_statements():
    assert parse_statements("all") == ALL_STATEMENTS
    assert parse_statements("TH_b, TH") == (StatementId.TH, StatementId.TH_b)
    with pytest.raises(ValueError):
        parse_statements("nope")


def test_TH_on_interval2(interval2):
    r = verify("TH", interval2, 1)
    assert r.verdict is Verdict.PASS
    assert (r.lhs, r.rhs) == ((1, 0), (0, 1))
    assert not r.hypotheses_met
    r = verify("TH_b", interval2, 1)
    assert r.verdict is Verdict.PASS and sum(r.lhs) == sum(r.rhs) == 2


def test_TH_b_on_interval1_is_a_pinned_failure(interval1):
    r = verify("TH_b", interval1, 1)
    assert r.verdict is Verdict.FAIL and not r.hypotheses_met
    assert (r.lhs, r.rhs) == ((1, 0), (1, 1))
    assert any("minimal domains dense: false" in x for x in r.reasons)


def test_guarded_mode_marks_not_applicable(interval1):
    r = verify("TH", interval1, 1, guarded=True)
    assert r.verdict is Verdict.NOT_APPLICABLE


def test_triggers_guard_corollaries(interval2):
    c = interval2.big
    trivial = make_pair(c, c)
    assert verify("remark_r1", trivial, 1).verdict is Verdict.PASS
    assert verify("remark_r1", interval2, 1).verdict is Verdict.NOT_APPLICABLE
    # No reference data on a hand-built pair.
    assert verify("cdgm_absolute", interval2, 1).verdict is Verdict.NOT_APPLICABLE


def test_cdgm_on_meshes():
    p = cochain_pair(fixture("interval2"))
    for q in (0, 1):
        assert verify("cdgm_absolute", p, q).verdict is Verdict.PASS
        assert verify("cdgm_relative", p, q).verdict is Verdict.PASS
    circle = cochain_pair(fixture("circle"))
    assert verify("cdgm_absolute", circle, 1).verdict is Verdict.NOT_APPLICABLE


def test_coarse_flag(interval1, interval2):
    assert is_coarse(interval1) and not is_coarse(interval2)


def test_verify_rejects_bad_degree(interval2):
    with pytest.raises(IndexError):
        verify("TH", interval2, 2)


def test_suite_on_trivial_pairs_has_no_failures():
    pairs = generate_pairs(PROFILES["trivial"], 11, 5)
    report = run_suite(pairs)
    assert report.summary()["FAIL"] == 0


def test_empty_suite():
    report = run_suite([])
    assert report.to_json() == {"instances": [], "summary": {"PASS": 0, "FAIL": 0, "NOT_APPLICABLE": 0}}
    assert "summary: PASS 0" in format_table(report)


def test_suite_is_deterministic_under_threads():
    pairs = generate_pairs(PROFILES["restricted"], 5, 4)
    one = json.dumps(run_suite(pairs).to_json())
    many = json.dumps(run_suite(pairs, threads=4).to_json())
    assert one == many


@given(st.integers(0, 2**32), st.sampled_from([0.0, 0.5, 1.0]))
def test_corollary_consistency(seed, density):
    p = generate_random_pair(RandomPairProfile((2, 3, 2), (1, 1, 1), density), seed)
    for q in p.degrees():
        th = verify("TH", p, q)
        thb = verify("TH_b", p, q)
        if th.verdict is Verdict.PASS and thb.verdict is Verdict.PASS:
            assert verify("difference", p, q).verdict is Verdict.PASS
        if th.verdict is Verdict.PASS:
            assert verify("rough_estimate", p, q).verdict is Verdict.PASS
            assert verify("finiteness", p, q).verdict is Verdict.PASS
        assert verify("new_hodge_weak", p, q).verdict is Verdict.PASS
