"""The twelve acceptance criteria, one test each, each printing a PASS/FAIL line."""

import random
import time
from contextlib import contextmanager
from math import comb

import pytest

from hyparr.arrangement import moebius_betti
from hyparr.exactmath import IntPoly, cyclo_poly
from hyparr.milnor import PENCIL_NOTE, delta1
from hyparr.multinet import enumerate_k_nets, enumerate_reduced_3_multinets
from hyparr.oscomplex import OSDeg2, apply_delta, beta_p
from hyparr.pipeline import analyze
from hyparr.resonance import Kind, catalog, isotropy_check, membership
from hyparr.verdict import Reason, Status, WitnessKind

from conftest import CORPUS_TAGS, incidence
from oracles import brute_force_multinets, random_incidence, relabeled


@pytest.fixture
def criterion(capsys):
    @contextmanager
    def check(number, title, limit=None):
        start = time.perf_counter()
        ok = False
        try:
            yield
            elapsed = time.perf_counter() - start
            assert limit is None or elapsed < limit, f"took {elapsed:.1f}s, limit {limit}s"
            ok = True
        finally:
            elapsed = time.perf_counter() - start
            with capsys.disabled():
                print(f"\ncriterion {number:>2}: {'PASS' if ok else 'FAIL'}  {title}  ({elapsed:.2f}s)")

    return check


def tm1(k):
    return IntPoly.t_minus_one() ** k


def test_c01_beta3_monomial(criterion):
    with criterion(1, "beta_3(monomial(m)), m = 1..6", limit=10):
        got = tuple(beta_p(incidence(f"monomial({m})"), 3) for m in range(1, 7))
        assert got == (1, 1, 2, 1, 1, 2)


def test_c02_hessian_beta(criterion):
    with criterion(2, "Hessian beta_2, beta_3, beta_5"):
        inc = incidence("hessian")
        assert (beta_p(inc, 2), beta_p(inc, 3), beta_p(inc, 5)) == (2, 0, 0)


def test_c03_ceva_nets(criterion):
    with criterion(3, "Ceva has exactly the four AG(2,3) nets", limit=5):
        found = enumerate_reduced_3_multinets(incidence("monomial(3)"))
        assert sorted(m.partition for m in found) == [
            "(123|456|789)", "(147|258|369)", "(159|267|348)", "(168|249|357)"
        ]
        assert all(m.is_net for m in found)


def test_c04_hessian_nets(criterion):
    with criterion(4, "Hessian: one non-trivial 4-net, no 3-nets", limit=60):
        inc = incidence("hessian")
        four = enumerate_k_nets(inc, 4)
        assert len(four) == 1 and not four[0].trivial and four[0].net
        assert enumerate_k_nets(inc, 3) == []


def test_c05_braid3_end_to_end(criterion):
    with criterion(5, "braid3 end to end"):
        inc = incidence("braid3")
        triples = {X.hyperplanes for X in inc.flats if X.multiplicity == 3}
        doubles = {X.hyperplanes for X in inc.flats if X.multiplicity == 2}
        assert triples == {(1, 3, 6), (1, 4, 5), (2, 3, 5), (2, 4, 6)} and len(doubles) == 3
        a = analyze(inc, "braid3", family_tag="braid3")
        assert a.betas[3] == 1
        assert a.milnor.delta1 == tm1(5) * cyclo_poly(3)
        assert a.milnor.b1F == 7
        assert a.verdict.status == Status.UNKNOWN
        assert Reason.NONTRIVIAL_MONODROMY_NO_CRITERION in a.verdict.reasons


def test_c06_two_multinet_refutation(criterion):
    with criterion(6, "monomial(3), monomial(6) not 1-formal via two reduced 3-multinets", limit=300):
        for m in (3, 6):
            a = analyze(incidence(f"monomial({m})"), f"monomial({m})", family_tag=f"monomial({m})")
            assert a.verdict.status == Status.NOT_1_FORMAL
            assert a.verdict.witness == WitnessKind.TWO_REDUCED_3MULTINETS


def test_c07_ceva_components(criterion):
    with criterion(7, "Ceva catalog: 12 local + 4 essential = (3^beta_3 - 1)/2"):
        inc = incidence("monomial(3)")
        comps = catalog(inc, enumerate_reduced_3_multinets(inc))
        local = sum(c.kind == Kind.LOCAL for c in comps)
        essential = sum(c.kind == Kind.ESSENTIAL for c in comps)
        assert (local, essential) == (12, 4)
        assert essential == (3 ** beta_p(inc, 3) - 1) // 2


def test_c08_milnor_numerology(criterion):
    with criterion(8, "Hessian, Ceva, monomial(2) weight-1 dimensions"):
        h = delta1(incidence("hessian"), "hessian")
        assert h.delta1 == tm1(11) * (cyclo_poly(2) * cyclo_poly(4)) ** 2 and h.w1_dim == 6
        c = delta1(incidence("monomial(3)"), "monomial(3)")
        assert (c.w1_dim, c.h10_dim) == (4, 2)
        assert delta1(incidence("monomial(2)"), "monomial(2)").w1_dim == 2


def test_c09_pencils(criterion):
    with criterion(9, "pencil Delta_1 and b1(F) = (n-1)^2, discrepancy noted"):
        mi = delta1(incidence("pencil(3)"), "pencil(3)")
        assert mi.delta1 == tm1(2) * cyclo_poly(3)
        for n in range(3, 7):
            a = analyze(incidence(f"pencil({n})"), f"pencil({n})", family_tag=f"pencil({n})")
            assert a.milnor.b1F == (n - 1) ** 2
            provenance = [f["provenance"] for f in a.report().delta1["factors"]]
            assert any(PENCIL_NOTE in p for p in provenance)


def test_c10_enumeration_oracle(criterion):
    with criterion(10, "pruned enumeration equals brute force on 50 random structures"):
        rng = random.Random(20240610)
        seeds = [incidence(t) for t in ("braid3", "pencil(4)", "monomial(2)", "pencil(6)")]
        for i in range(50):
            if i % 3 == 0:
                inc = relabeled(seeds[(i // 3) % len(seeds)], rng)
            else:
                inc = random_incidence(rng, rng.randint(3, 8))
            assert inc.n <= 8
            fast = [m.assignment for m in enumerate_reduced_3_multinets(inc)]
            slow = [m.assignment for m in brute_force_multinets(inc)]
            assert fast == slow, f"structure {i}: {inc.flats}"


def test_c11_isotropy(criterion):
    with criterion(11, "catalog components isotropic and resonant on the corpus"):
        for tag in CORPUS_TAGS:
            inc = incidence(tag)
            os = OSDeg2(inc)
            nets = enumerate_reduced_3_multinets(inc) + [c.multinet for c in enumerate_k_nets(inc, 4)]
            for comp in catalog(inc, nets):
                assert isotropy_check(comp, os), f"{tag}: {comp.label}"
                assert membership(comp, inc, seed=0) >= 2, f"{tag}: {comp.label}"


def test_c12_exactness(criterion):
    with criterion(12, "delta_a^2 = 0, pair coverage, dim A^2 = b_2"):
        rng = random.Random(12)
        for tag in CORPUS_TAGS:
            inc = incidence(tag)
            assert sum(comb(X.multiplicity, 2) for X in inc.flats) == comb(inc.n, 2)
            for p in (None, 2, 3, 5):
                os = OSDeg2(inc, p)
                assert os.dim2 == moebius_betti(inc)[1]
                for _ in range(100):
                    a = [rng.randint(-30, 30) for _ in range(inc.n)]
                    # delta_a(delta_a(1)) = delta_a(a), through the matrix of delta_a
                    assert not any(apply_delta(os, a, a)), tag
