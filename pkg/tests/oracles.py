"""Reference computations that share no code path with the library routines they check."""

from __future__ import annotations

import random
from itertools import combinations, product
from math import gcd

from hyparr.arrangement import IncidenceL2, from_combinatorial
from hyparr.exactmath import euler_phi, rank
from hyparr.multinet import Multinet, classes_from_assignment, verify


def aomoto_h1_via_exterior(inc: IncidenceL2, p: int) -> int:
    """dim H^1(A tensor F_p, sigma) with A^2 = E^2 / span of d(e_H e_K e_L) over collinear triples.

    Cocycles are x with sigma*x in I^2, so
    dim Z^1 = n - (rank[W | R] - rank R), W the columns sigma*e_K in E^2, R the relations.
    """
    n = inc.n
    pairs = list(combinations(range(1, n + 1), 2))
    pos = {pr: i for i, pr in enumerate(pairs)}

    def e2(h, k):
        v = [0] * len(pairs)
        if h < k:
            v[pos[(h, k)]] = 1
        else:
            v[pos[(k, h)]] = -1
        return v

    relations = []
    for X in inc.flats:
        for h, k, l in combinations(X.hyperplanes, 3):
            # d(e_h e_k e_l) = e_k e_l - e_h e_l + e_h e_k
            v = [a - b + c for a, b, c in zip(e2(k, l), e2(h, l), e2(h, k))]
            relations.append(v)
    w_cols = []
    for k in range(1, n + 1):
        col = [0] * len(pairs)
        for h in range(1, n + 1):
            if h != k:
                col = [a + b for a, b in zip(col, e2(h, k))]
        w_cols.append(col)
    # ranks of column sets, computed on transposes
    r_rel = rank(relations, p) if relations else 0
    r_all = rank(w_cols + relations, p)
    cocycles = n - (r_all - r_rel)
    return cocycles - 1


def fermat_exponents(n: int) -> dict[int, int]:
    """e_j for x^n - y^n = 1: monodromy eigenvalue theta^(a+b) for 1 <= a, b <= n-1."""
    counts: dict[int, int] = {}
    for a in range(1, n):
        for b in range(1, n):
            s = (a + b) % n
            if s == 0:
                continue
            j = n // gcd(s, n)  # order of theta^s
            counts[j] = counts.get(j, 0) + 1
    # each primitive j-th root appears counts[j] / phi(j) times
    return {j: c // euler_phi(j) for j, c in counts.items()}


def brute_force_multinets(inc: IncidenceL2, k: int = 3) -> list[Multinet]:
    """Verify-filtered scan of all k^n labelings, deduplicated by canonical assignment."""
    seen = {}
    for labels in product(range(k), repeat=inc.n):
        if len(set(labels)) != k:
            continue
        result = verify(inc, classes_from_assignment(labels))
        if isinstance(result, Multinet):
            seen[result.assignment] = result
    return [seen[a] for a in sorted(seen)]


def random_incidence(rng: random.Random, n: int) -> IncidenceL2:
    """Random abstract line combinatorics: greedily add pair-disjoint flats of size >= 3."""
    flats: list[tuple[int, ...]] = []
    covered: set[tuple[int, int]] = set()
    for _ in range(rng.randint(0, 3 * n)):
        size = rng.randint(3, min(n, 5)) if n >= 3 else 0
        if not size:
            break
        X = tuple(sorted(rng.sample(range(1, n + 1), size)))
        ps = set(combinations(X, 2))
        if ps & covered:
            continue
        covered |= ps
        flats.append(X)
    return from_combinatorial(n, flats)


def relabeled(inc: IncidenceL2, rng: random.Random) -> IncidenceL2:
    perm = list(range(1, inc.n + 1))
    rng.shuffle(perm)
    return inc.relabel(perm)
