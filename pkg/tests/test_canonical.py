import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import all_digraphs, brute_isomorphic, digraphs, random_digraph, random_permutation
from p22free.canonical import (
    CanonicalForm,
    are_isomorphic,
    canonical_digraph,
    canonical_form,
    canonical_labeling,
)
from p22free.constructions import Family, FamilyParams, all_params, build_family, enumerate_params
from p22free.digraph import Digraph, new_digraph, relabel, reverse


def _class_count_by_permutations(n):
    seen = set()
    classes = 0
    perms = list(itertools.permutations(range(n)))
    for D in all_digraphs(n):
        if D in seen:
            continue
        classes += 1
        for perm in perms:
            seen.add(relabel(D, perm))
    return classes


def test_relabeling_of_d4_instance():
    rng = random.Random(1)
    D = build_family(enumerate_params(Family.D4, 14)[3])
    for _ in range(10):
        assert canonical_form(relabel(D, random_permutation(rng, 14))) == canonical_form(D)


def test_d1_vs_d2_distinct():
    D1 = build_family(FamilyParams(Family.D1, 13))
    D2 = build_family(FamilyParams(Family.D2, 13, c=1, v4=2))
    assert canonical_form(D1) != canonical_form(D2)
    assert not are_isomorphic(D1, D2)


def test_empty_vs_complete():
    K3 = Digraph(3, [0b110, 0b101, 0b011])
    assert canonical_form(new_digraph(3)) != canonical_form(K3)


def test_hex_roundtrip():
    cf = canonical_form(build_family(FamilyParams(Family.D1, 13)))
    text = cf.hex()
    assert text == text.lower()
    assert CanonicalForm.fromhex(text) == cf
    assert str(cf) == text


def test_labeling_is_permutation_and_digraph_matches():
    D = build_family(FamilyParams(Family.D1, 15, c=1))
    order = canonical_labeling(D)
    assert sorted(order) == list(range(D.n))
    C = canonical_digraph(D)
    assert are_isomorphic(C, D)
    assert canonical_digraph(C) == C


def test_class_count_on_four_vertices():
    forms = {canonical_form(D) for D in all_digraphs(4)}
    assert len(forms) == _class_count_by_permutations(4) == 218


def test_n6_agrees_with_brute_force():
    rng = random.Random(6)
    agree = 0
    for i in range(200):
        D = random_digraph(rng, 6, rng.uniform(0.2, 0.6))
        if i % 2:
            H = relabel(D, random_permutation(rng, 6))
            if rng.random() < 0.5:
                # flip one arc to make near-misses
                u, v = rng.sample(range(6), 2)
                out = list(H.out)
                out[u] ^= 1 << v
                H = Digraph(6, out)
        else:
            H = random_digraph(rng, 6, rng.uniform(0.2, 0.6))
        expected = brute_isomorphic(D, H)
        assert are_isomorphic(D, H) == expected
        assert (canonical_form(D) == canonical_form(H)) == expected
        agree += 1
    assert agree == 200


def test_random_relabelings_of_family_members():
    rng = random.Random(500)
    members = [p for n in (13, 14, 16, 18) for p in all_params(n)]
    for _ in range(500):
        p = rng.choice(members)
        D = build_family(p)
        H = relabel(D, random_permutation(rng, D.n))
        assert canonical_form(H) == canonical_form(D)


def test_self_reverse_distinction():
    # a directed path is isomorphic to its reverse, an out-star is not
    path = Digraph.from_arcs(4, [(0, 1), (1, 2), (2, 3)])
    assert are_isomorphic(path, reverse(path))
    star = Digraph.from_arcs(4, [(0, 1), (0, 2), (0, 3)])
    assert not are_isomorphic(star, reverse(star))


@given(digraphs(1, 7), st.data())
@settings(max_examples=150)
def test_relabel_invariance(D, data):
    perm = data.draw(st.permutations(range(D.n)))
    assert canonical_form(relabel(D, perm)) == canonical_form(D)


@given(digraphs(1, 6), digraphs(1, 6))
@settings(max_examples=150)
def test_isomorphic_implies_degree_multisets(D, H):
    if are_isomorphic(D, H):
        assert sorted(D.out_degree(v) for v in range(D.n)) == sorted(H.out_degree(v) for v in range(H.n))
        assert sorted(D.in_degree(v) for v in range(D.n)) == sorted(H.in_degree(v) for v in range(H.n))
