"""Combinatorial equivalence relations between smooth Fano polytopes."""

from toricfano.equivalence import (sign_equivalent, unimodular_equivalent,
                                   verify_witness, classify, SIGN_EQUIV,
                                   UNIMODULAR_EQUIV)
from toricfano.families import pentagon, hexagon


def test_pair_11_18_sign_equivalent(fano3):
    w = sign_equivalent(fano3[11], fano3[18])
    assert w is not None
    assert verify_witness(fano3[11], fano3[18], w)
    # but not unimodularly equivalent (all signs +1)
    assert unimodular_equivalent(fano3[11], fano3[18]) is None


def test_pair_10_13_sign_equivalent(fano3):
    w = sign_equivalent(fano3[10], fano3[13])
    assert w is not None and verify_witness(fano3[10], fano3[13], w)
    assert unimodular_equivalent(fano3[10], fano3[13]) is None


def test_pair_70_141_sign_equivalent(fano4):
    w = sign_equivalent(fano4[70], fano4[141])
    assert w is not None and verify_witness(fano4[70], fano4[141], w)


def test_pair_50_57_not_sign_equivalent(fano4):
    assert sign_equivalent(fano4[50], fano4[57]) is None


def test_self_equivalence():
    P = hexagon()
    w = unimodular_equivalent(P, P)
    assert w is not None and verify_witness(P, P, w)


def test_different_polytopes_not_equivalent():
    assert sign_equivalent(pentagon(), hexagon()) is None


def test_bad_witness_rejected(fano3):
    w = sign_equivalent(fano3[11], fano3[18])
    # perturb the permutation: the check must fail
    pi = list(w.pi)
    pi[0], pi[1] = pi[1], pi[0]
    w.pi = tuple(pi)
    assert not verify_witness(fano3[11], fano3[18], w)


def test_classify_d3(fano3):
    res = classify(list(fano3.values()), relation=SIGN_EQUIV)
    assert len(res["classes"]) == 16
    merged = [tuple(c) for c in res["classes"] if len(c) > 1]
    assert sorted(merged) == [(10, 13), (11, 18)]
    assert res["anomalies"] == []
    for (a, b), w in res["witnesses"].items():
        assert verify_witness(fano3[a], fano3[b], w)


def test_classify_d3_unimodular(fano3):
    res = classify(list(fano3.values()), relation=UNIMODULAR_EQUIV)
    assert len(res["classes"]) == 18
