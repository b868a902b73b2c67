"""Central arrangements in C^3, their rank-2 intersection lattice and Betti numbers.

Hyperplanes are numbered from 1 everywhere, so partitions print as ``(123|456|789)``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from .exactmath import CycloNum, cross, is_prime, zeta_power


class ArrangementError(ValueError):
    """Malformed arrangement or incidence data."""


@dataclass(frozen=True)
class Arrangement:
    name: str
    order: int
    normals: tuple[tuple[CycloNum, CycloNum, CycloNum], ...]

    def __post_init__(self):
        normals = tuple(tuple(v) for v in self.normals)
        object.__setattr__(self, "normals", normals)
        if not normals:
            raise ArrangementError("arrangement needs at least one hyperplane")
        for i, v in enumerate(normals, 1):
            if len(v) != 3:
                raise ArrangementError(f"normal {i} is not a triple")
            for c in v:
                if not isinstance(c, CycloNum) or c.order != self.order:
                    raise ArrangementError(f"normal {i} has a coordinate outside Q(zeta_{self.order})")
            if all(c.is_zero() for c in v):
                raise ArrangementError(f"normal {i} is the zero vector")
        for (i, u), (j, v) in combinations(enumerate(normals, 1), 2):
            if all(c.is_zero() for c in cross(u, v)):
                raise ArrangementError(f"hyperplanes {i} and {j} coincide")

    @property
    def n(self) -> int:
        return len(self.normals)

    @property
    def rank(self) -> int:
        # Q(zeta_m) is a Q-vector space; the rank over the field equals the
        # rank of the 3 x n matrix over Q(zeta_m), tested via 2x2 / 3x3 minors.
        if self.n == 1:
            return 1
        pairs = [cross(u, v) for u, v in combinations(self.normals, 2)]
        if all(all(c.is_zero() for c in w) for w in pairs):
            return 1
        for w in pairs:
            if any(not c.is_zero() for c in w):
                for u in self.normals:
                    det = u[0] * w[0] + u[1] * w[1] + u[2] * w[2]
                    if not det.is_zero():
                        return 3
        return 2


@dataclass(frozen=True, order=True)
class FlatL2:
    hyperplanes: tuple[int, ...]

    def __post_init__(self):
        hs = tuple(sorted(set(self.hyperplanes)))
        if len(hs) != len(self.hyperplanes):
            raise ArrangementError(f"flat {self.hyperplanes} repeats a hyperplane")
        if len(hs) < 2:
            raise ArrangementError(f"flat {self.hyperplanes} has fewer than 2 hyperplanes")
        object.__setattr__(self, "hyperplanes", hs)

    @property
    def multiplicity(self) -> int:
        return len(self.hyperplanes)

    @property
    def anchor(self) -> int:
        return self.hyperplanes[0]

    def __contains__(self, h: int) -> bool:
        return h in self.hyperplanes

    def __iter__(self):
        return iter(self.hyperplanes)

    def __len__(self) -> int:
        return len(self.hyperplanes)

    def __str__(self) -> str:
        return format_indices(self.hyperplanes)


def format_indices(hs: Iterable[int]) -> str:
    hs = list(hs)
    sep = "," if any(h > 9 for h in hs) else ""
    return sep.join(str(h) for h in hs)


@dataclass(frozen=True)
class IncidenceL2:
    n: int
    flats: tuple[FlatL2, ...]
    _pair_index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        flats = tuple(sorted(self.flats))
        object.__setattr__(self, "flats", flats)
        if self.n < 1:
            raise ArrangementError("n must be >= 1")
        index = {}
        for fi, X in enumerate(flats):
            for h in X:
                if not 1 <= h <= self.n:
                    raise ArrangementError(f"index {h} out of range 1..{self.n}")
            for pair in combinations(X.hyperplanes, 2):
                if pair in index:
                    raise ArrangementError(f"pair {{{pair[0]},{pair[1]}}} covered by two flats")
                index[pair] = fi
        if len(index) != comb(self.n, 2):
            missing = next(p for p in combinations(range(1, self.n + 1), 2) if p not in index)
            raise ArrangementError(f"pair {{{missing[0]},{missing[1]}}} lies in no flat")
        object.__setattr__(self, "_pair_index", index)

    def flat_of(self, h: int, k: int) -> FlatL2:
        """The unique flat containing hyperplanes h != k."""
        if h == k:
            raise ValueError("a flat needs two distinct hyperplanes")
        return self.flats[self._pair_index[(min(h, k), max(h, k))]]

    def flat_index(self, h: int, k: int) -> int:
        return self._pair_index[(min(h, k), max(h, k))]

    def flats_through(self, h: int) -> list[FlatL2]:
        return [X for X in self.flats if h in X]

    @property
    def profile(self) -> dict[int, int]:
        """Multiplicity -> number of flats, largest multiplicity first."""
        out: dict[int, int] = {}
        for X in self.flats:
            out[X.multiplicity] = out.get(X.multiplicity, 0) + 1
        return dict(sorted(out.items(), reverse=True))

    @property
    def rank(self) -> int:
        if self.n == 1:
            return 1
        return 2 if len(self.flats) == 1 else 3

    def fingerprint(self) -> tuple:
        return (self.n, tuple(X.hyperplanes for X in self.flats))

    def relabel(self, perm: Sequence[int]) -> IncidenceL2:
        """Image under hyperplane h -> perm[h-1]."""
        return IncidenceL2(self.n, tuple(FlatL2(tuple(perm[h - 1] for h in X)) for X in self.flats))


def _projective_key(w: tuple[CycloNum, CycloNum, CycloNum]) -> tuple:
    lead = next(c for c in w if not c.is_zero())
    s = lead.inverse()
    return tuple((c * s).coeffs for c in w)


def compute_L2(arr: Arrangement) -> IncidenceL2:
    """Group hyperplane pairs by their common line, the normalized cross product."""
    if arr.n >= 2 and arr.rank < 2:
        raise ArrangementError("rank-1 arrangement: all hyperplanes coincide")
    groups: dict[tuple, set[int]] = {}
    for (i, u), (j, v) in combinations(enumerate(arr.normals, 1), 2):
        key = _projective_key(cross(u, v))
        groups.setdefault(key, set()).update((i, j))
    return IncidenceL2(arr.n, tuple(FlatL2(tuple(g)) for g in groups.values()))


def from_combinatorial(n: int, multiple_flats: Sequence[Iterable[int]]) -> IncidenceL2:
    """Incidence from the flats of size >= 3; uncovered pairs become double points."""
    flats = []
    seen = set()
    for raw in multiple_flats:
        X = FlatL2(tuple(raw))
        if X.multiplicity < 3:
            raise ArrangementError(f"listed flat {{{format_indices(X)}}} has size < 3")
        if X in seen:
            raise ArrangementError(f"duplicate flat {{{format_indices(X)}}}")
        seen.add(X)
        for h in X:
            if not 1 <= h <= n:
                raise ArrangementError(f"index {h} out of range 1..{n}")
        flats.append(X)
    covered: dict[tuple[int, int], FlatL2] = {}
    for X in flats:
        for pair in combinations(X.hyperplanes, 2):
            if pair in covered:
                raise ArrangementError(f"pair {{{pair[0]},{pair[1]}}} covered by two flats")
            covered[pair] = X
    doubles = [FlatL2(p) for p in combinations(range(1, n + 1), 2) if p not in covered]
    return IncidenceL2(n, tuple(flats + doubles))


def moebius_betti(inc: IncidenceL2) -> tuple[int, int, dict[FlatL2, int]]:
    # mu(C^3)=1, mu(H)=-1, so mu(X) = -(1 - q_X) = q_X - 1 on rank-2 flats
    mu = {X: X.multiplicity - 1 for X in inc.flats}
    return inc.n, sum(mu.values()), mu


class Hypothesis(str, enum.Enum):
    P_SQUARED = "P_SQUARED"
    THREE_R = "THREE_R"


def violating_flats(inc: IncidenceL2, p: int, variant: Hypothesis) -> list[FlatL2]:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if variant == Hypothesis.P_SQUARED:
        return [X for X in inc.flats if X.multiplicity % (p * p) == 0]
    return [X for X in inc.flats if X.multiplicity % 3 == 0 and X.multiplicity > 3]


def multiplicity_hypothesis(inc: IncidenceL2, p: int, variant: Hypothesis) -> bool:
    """P_SQUARED: no q_X divisible by p^2.  THREE_R: no q_X = 3r with r > 1."""
    return not violating_flats(inc, p, Hypothesis(variant))


# ---------------------------------------------------------------------------
# built-in families
# ---------------------------------------------------------------------------


def _vec(m: int, *entries) -> tuple[CycloNum, CycloNum, CycloNum]:
    return tuple(e if isinstance(e, CycloNum) else CycloNum.from_rational(m, e) for e in entries)


def family_pencil(n: int) -> Arrangement:
    if n < 3:
        raise ArrangementError(f"pencil needs n >= 3, got {n}")
    normals = [_vec(n, 1, -zeta_power(n, j), 0) for j in range(n)]
    return Arrangement(f"pencil({n})", n, tuple(normals))


def family_braid3() -> Arrangement:
    # factors of (x+y)(x-y)(x+z)(x-z)(y+z)(y-z), in that order
    rows = [(1, 1, 0), (1, -1, 0), (1, 0, 1), (1, 0, -1), (0, 1, 1), (0, 1, -1)]
    return Arrangement("braid3", 1, tuple(_vec(1, *r) for r in rows))


def family_monomial(m: int) -> Arrangement:
    """Lines of (z1^m - z2^m)(z1^m - z3^m)(z2^m - z3^m).

    Ordering convention: the z1-z2 lines z1 = zeta^a z2 for a = 0..m-1, then the
    z1-z3 lines z1 = zeta^(-b) z3 for b = 0..m-1, then the z2-z3 lines
    z2 = zeta^c z3.  With the sign flip in the middle block, monomial(3) puts the
    Ceva triple points on the twelve lines of the affine plane over F_3 with
    hyperplane 3r + x + 1 at row r, column x.
    """
    if m < 1:
        raise ArrangementError(f"monomial needs m >= 1, got {m}")
    normals = [_vec(m, 1, -zeta_power(m, a), 0) for a in range(m)]
    normals += [_vec(m, 1, 0, -zeta_power(m, -b)) for b in range(m)]
    normals += [_vec(m, 0, 1, -zeta_power(m, c)) for c in range(m)]
    return Arrangement(f"monomial({m})", m, tuple(normals))


def family_hessian() -> Arrangement:
    normals = [_vec(3, 1, 0, 0), _vec(3, 0, 1, 0), _vec(3, 0, 0, 1)]
    normals += [_vec(3, 1, zeta_power(3, j), zeta_power(3, k)) for j in range(3) for k in range(3)]
    return Arrangement("hessian", 3, tuple(normals))


FAMILIES = {
    "pencil": "pencil of n concurrent lines, the trivial (n,1)-net (--n >= 3)",
    "braid3": "braid arrangement A_3, Q = (x+y)(x-y)(x+z)(x-z)(y+z)(y-z)",
    "monomial": "monomial arrangement A(m,m,3), m = 3 is the Ceva arrangement (--m >= 1)",
    "hessian": "Hessian arrangement A(G25): 12 lines, 9 quadruple and 12 double points",
}


def family(tag: str, n: int | None = None, m: int | None = None) -> Arrangement:
    if tag == "pencil":
        if n is None:
            raise ArrangementError("pencil requires n")
        return family_pencil(n)
    if tag == "braid3":
        return family_braid3()
    if tag == "monomial":
        if m is None:
            raise ArrangementError("monomial requires m")
        return family_monomial(m)
    if tag == "hessian":
        return family_hessian()
    raise ArrangementError(f"unknown family {tag!r}")

