import random

import pytest

from hyparr.arrangement import from_combinatorial
from hyparr.multinet import (
    Multinet,
    Violation,
    enumerate_k_nets,
    enumerate_reduced_3_multinets,
    verify,
)
from hyparr.oscomplex import beta_p
from hyparr.arrangement import Hypothesis, multiplicity_hypothesis

from conftest import CORPUS_TAGS, incidence
from oracles import brute_force_multinets, random_incidence, relabeled

CEVA_NETS = ["(123|456|789)", "(147|258|369)", "(159|267|348)", "(168|249|357)"]


def test_verify_ceva_net(ceva):
    mn = verify(ceva, [(1, 2, 3), (4, 5, 6), (7, 8, 9)])
    assert isinstance(mn, Multinet)
    assert mn.is_net and mn.reduced and mn.weight == 3 and not mn.trivial


def test_verify_braid3_net(braid3):
    mn = verify(braid3, [(1, 2), (3, 4), (5, 6)])
    assert isinstance(mn, Multinet) and mn.is_net and mn.weight == 2
    assert {X.hyperplanes for X in mn.base_locus} == {(1, 3, 6), (1, 4, 5), (2, 3, 5), (2, 4, 6)}


def test_verify_unequal_weights(ceva):
    v = verify(ceva, [(1, 2), (3, 4), (5, 6, 7, 8, 9)])
    assert isinstance(v, Violation) and v.axiom == "i"
    assert "2, 2, 5" in v.message


def test_verify_axiom_iii_and_iv(ceva, braid3):
    v = verify(ceva, [(1, 2, 4), (3, 5, 6), (7, 8, 9)])
    assert isinstance(v, Violation) and v.axiom == "iii"
    # equal weights, balanced flats, but class {1,2} only meets inside the base locus
    pencil6 = from_combinatorial(6, [[1, 2, 3, 4, 5, 6]])
    v = verify(pencil6, [(1, 2), (3, 4), (5, 6)])
    assert isinstance(v, Violation) and v.axiom == "iv"


def test_verify_nonreduced_multiplicities(braid3):
    # doubling every multiplicity keeps all axioms
    mn = verify(braid3, [(1, 2), (3, 4), (5, 6)], mults=[2] * 6)
    assert isinstance(mn, Multinet) and not mn.reduced and not mn.is_net and mn.weight == 4


def test_verify_malformed(ceva):
    with pytest.raises(ValueError):
        verify(ceva, [(1, 2, 3, 4, 5, 6), (7, 8, 9)])
    with pytest.raises(ValueError):
        verify(ceva, [(1, 2, 3), (4, 5, 6), (7, 8)])


def test_ceva_has_exactly_the_four_nets(ceva):
    found = enumerate_reduced_3_multinets(ceva)
    assert sorted(m.partition for m in found) == CEVA_NETS
    assert all(m.is_net for m in found)


def test_braid3_matches_brute_force(braid3):
    found = enumerate_reduced_3_multinets(braid3)
    assert [m.partition for m in found] == ["(12|34|56)"]
    assert [m.assignment for m in found] == [m.assignment for m in brute_force_multinets(braid3)]


def test_pencil3_trivial_net(pencil3):
    (mn,) = enumerate_reduced_3_multinets(pencil3)
    assert mn.partition == "(1|2|3)" and mn.trivial and mn.is_net


def test_k_nets(hessian, ceva):
    four = enumerate_k_nets(hessian, 4)
    assert len(four) == 1
    assert four[0].net and four[0].reduced and not four[0].trivial
    assert four[0].multinet.weight == 3
    assert enumerate_k_nets(hessian, 3) == []
    assert enumerate_k_nets(ceva, 4) == []
    with pytest.raises(ValueError):
        enumerate_k_nets(ceva, 5)


def test_hessian_four_net_classes(hessian):
    (cert,) = enumerate_k_nets(hessian, 4)
    # the four completely reducible fibers of the Hesse pencil: z1 z2 z3 and three triangles
    assert (1, 2, 3) in cert.multinet.classes


@pytest.mark.parametrize("tag", CORPUS_TAGS)
def test_enumerated_multinets_verify(tag):
    inc = incidence(tag)
    for mn in enumerate_reduced_3_multinets(inc):
        again = verify(inc, mn.classes)
        assert isinstance(again, Multinet) and again.reduced
    for cert in enumerate_k_nets(inc, 3) + enumerate_k_nets(inc, 4):
        assert cert.reduced and cert.net


@pytest.mark.parametrize("tag", CORPUS_TAGS)
def test_net_count_formula(tag):
    inc = incidence(tag)
    if not multiplicity_hypothesis(inc, 3, Hypothesis.THREE_R):
        pytest.skip("THREE_R hypothesis fails")
    b3 = beta_p(inc, 3)
    nets = enumerate_k_nets(inc, 3)
    assert len(nets) == (3**b3 - 1) // 2
    assert (b3 != 0) == bool(nets)


def test_search_is_label_invariant():
    rng = random.Random(5)
    for tag in ("monomial(3)", "braid3", "hessian"):
        inc = incidence(tag)
        base = len(enumerate_reduced_3_multinets(inc)), len(enumerate_k_nets(inc, 4))
        other = relabeled(inc, rng)
        assert (len(enumerate_reduced_3_multinets(other)), len(enumerate_k_nets(other, 4))) == base


@pytest.mark.parametrize("seed", range(10))
def test_pruned_equals_brute_force_small(seed):
    rng = random.Random(1000 + seed)
    inc = random_incidence(rng, rng.randint(3, 7))
    assert [m.assignment for m in enumerate_reduced_3_multinets(inc)] == [
        m.assignment for m in brute_force_multinets(inc)
    ]
