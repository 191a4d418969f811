import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import all_digraphs, digraphs, random_digraph, random_free_digraph
from p22free.audit import (
    audit_common_successor_bound,
    audit_common_successors,
    audit_extremal_bounds,
    audit_nonadjacent_outsets,
    audit_out_neighborhood_indegree,
    audit_outset_structure,
    audit_pigeonhole_filter,
    full_audit,
)
from p22free.constructions import Family, FamilyParams, all_params, build_family, enumerate_params, remark_digraph
from p22free.detect import P22Witness, is_free
from p22free.digraph import Digraph, add_arc, members, reverse

MINIMAL = Digraph.from_arcs(4, [(0, 1), (0, 2), (1, 3), (2, 3)])


def test_common_successors_minimal():
    verdict = audit_common_successors(MINIMAL)
    assert verdict.holds is False
    assert verdict.witness == (0, 1, 2, 3)
    assert P22Witness(*verdict.witness).is_valid_for(MINIMAL)


def test_common_successors_equals_detector_exhaustively():
    for D in all_digraphs(4):
        assert (audit_common_successors(D).holds is True) == is_free(D)


def test_common_successors_random_n7():
    rng = random.Random(7)
    for _ in range(300):
        D = random_digraph(rng, 7, rng.uniform(0.1, 0.4))
        verdict = audit_common_successors(D)
        assert (verdict.holds is True) == is_free(D)
        if verdict.holds is False:
            assert P22Witness(*verdict.witness).is_valid_for(D)


def test_indegree_examples():
    D = build_family(FamilyParams(Family.D1, 13))
    for v in range(7, 13):
        assert audit_out_neighborhood_indegree(D, v).holds
    verdict = audit_out_neighborhood_indegree(MINIMAL, 0)
    assert verdict.holds is False and verdict.witness == (0, 3, 1, 2)


def test_pigeonhole_examples():
    D = Digraph.from_arcs(5, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 4)])
    S = 0b11000
    verdict = audit_pigeonhole_filter(D, 0, 1, 2, S)
    assert verdict.holds and "P22 present" in verdict.note
    # sum equals |S| + 1: vacuous
    E = Digraph.from_arcs(5, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 3)])
    assert audit_pigeonhole_filter(E, 0, 1, 2, S).note == "premise not met"
    with pytest.raises(ValueError):
        audit_pigeonhole_filter(D, 0, 1, 1, S)
    with pytest.raises(ValueError):
        audit_pigeonhole_filter(D, 0, 1, 3, S)


def test_pigeonhole_random():
    rng = random.Random(33)
    checked = 0
    while checked < 300:
        D = random_digraph(rng, 8, rng.uniform(0.2, 0.6))
        v = rng.randrange(8)
        succ = list(members(D.out[v]))
        if len(succ) < 2:
            continue
        s1, s2 = rng.sample(succ, 2)
        S = rng.getrandbits(8)
        assert audit_pigeonhole_filter(D, v, s1, s2, S).holds
        checked += 1


def test_common_successor_bound_on_families():
    for n in (13, 14, 16):
        for p in all_params(n):
            D = build_family(p)
            k = D.max_out_degree()
            for v in range(n):
                if D.out_degree(v) == k:
                    assert audit_common_successor_bound(D, v).holds, p.describe()


def test_zero_tau_bound_is_loose():
    D = Digraph.from_arcs(4, [(0, 1), (0, 2), (3, 1)])
    assert audit_common_successor_bound(D, 0).holds


def test_random_free_digraphs_n8():
    rng = random.Random(8)
    for _ in range(150):
        D = random_free_digraph(rng, 8)
        for v in range(8):
            assert audit_out_neighborhood_indegree(D, v).holds
            assert audit_common_successor_bound(D, v).holds
            assert audit_nonadjacent_outsets(D, v).holds


def test_nonadjacent_outsets_d2():
    D = build_family(enumerate_params(Family.D2, 13)[0])
    v = 7  # first V3 vertex: sends to all of V1
    assert D.out[v] == (1 << 7) - 1
    assert audit_nonadjacent_outsets(D, v).holds


def test_planted_violation_creates_p22():
    rng = random.Random(2)
    planted = 0
    for _ in range(400):
        D = random_free_digraph(rng, 8)
        for v in range(8):
            nv = D.out[v]
            outside = D.vertices & ~nv
            for u1 in members(outside):
                for u2 in members(D.out[u1] & outside):
                    for t in members(nv & D.out[u1]):
                        for s in members(nv & D.out[u2]):
                            if t != s and not D.has_arc(t, s):
                                bad = add_arc(D, t, s)
                                assert audit_nonadjacent_outsets(bad, v).holds is False
                                assert not is_free(bad)
                                planted += 1
    assert planted > 0


def test_extremal_bounds_examples():
    D3 = build_family(enumerate_params(Family.D3, 16)[0])
    report = audit_extremal_bounds(D3)
    assert report.k == 9
    assert report.alpha_ok and report.tau_ok and report.k_in_range
    D1 = build_family(FamilyParams(Family.D1, 13))
    report = audit_extremal_bounds(D1)
    assert report.k == 7 and report.k_in_range
    remark = audit_extremal_bounds(remark_digraph())
    assert not remark.applicable
    assert remark.alpha_ok is None and remark.tau_ok is None and remark.k_in_range is None


@pytest.mark.parametrize("n", range(13, 21))
def test_full_audit_on_extremal_members(n):
    for p in all_params(n):
        for D in (build_family(p), reverse(build_family(p))):
            report = full_audit(D)
            assert report.all_hold, (p.describe(), report.render())


def test_outset_structure_exercised():
    exercised = 0
    for n in range(13, 21):
        for p in all_params(n):
            D = build_family(p)
            for v in range(n):
                if D.out_degree(v) == D.max_out_degree():
                    verdict = audit_outset_structure(D, v)
                    assert verdict.holds is not False
                    exercised += verdict.holds is True
    assert exercised > 0


def test_render_and_key_values():
    report = full_audit(build_family(FamilyParams(Family.D1, 13)))
    text = report.render()
    assert "max out-degree k = 7" in text
    kv = dict(line.split("=", 1) for line in report.key_values().splitlines())
    assert kv["n"] == "13" and kv["k"] == "7" and kv["k_in_range"] == "true"


@given(digraphs(1, 7))
@settings(max_examples=150)
def test_violation_witnesses_reverify(D):
    report = full_audit(D, list(range(D.n)))
    for verdict in report.verdicts:
        if verdict.holds is False and verdict.name == "common-successors":
            assert P22Witness(*verdict.witness).is_valid_for(D)
        if verdict.holds is False and verdict.name.startswith("out-neighborhood"):
            v, u, p1, p2 = verdict.witness
            assert D.has_arc(v, p1) and D.has_arc(v, p2) and D.has_arc(p1, u) and D.has_arc(p2, u)
        if verdict.holds is False and verdict.name.startswith("nonadjacent"):
            u1, u2, t, s = verdict.witness
            assert D.has_arc(u1, u2) and D.has_arc(u1, t) and D.has_arc(u2, s) and D.has_arc(t, s)
    if is_free(D):
        for verdict in report.verdicts:
            if not verdict.name.startswith("outset-structure"):
                assert verdict.holds is not False
