"""First resonance components: local (one per multiple point) and essential (one per multinet)."""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .arrangement import FlatL2, IncidenceL2
from .exactmath import rank
from .multinet import Multinet
from .oscomplex import OSDeg2, aomoto_nullity


class Kind(str, enum.Enum):
    LOCAL = "LOCAL"
    ESSENTIAL = "ESSENTIAL"


@dataclass(frozen=True)
class ResonanceComponent:
    kind: Kind
    span: tuple[tuple[int, ...], ...]
    flat: FlatL2 | None = None
    multinet: Multinet | None = None

    @property
    def dimension(self) -> int:
        return rank([list(v) for v in self.span])

    @property
    def label(self) -> str:
        if self.kind == Kind.LOCAL:
            return f"L{{{self.flat}}}"
        return f"P{self.multinet.partition}"


def local_component(X: FlatL2, n: int) -> ResonanceComponent:
    span = []
    for k in X.hyperplanes[1:]:
        v = [0] * n
        v[X.anchor - 1] = 1
        v[k - 1] = -1
        span.append(tuple(v))
    return ResonanceComponent(Kind.LOCAL, tuple(span), flat=X)


def essential_component(mn: Multinet) -> ResonanceComponent:
    u = mn.class_vectors()
    span = tuple(tuple(a - b for a, b in zip(ui, u[0])) for ui in u[1:])
    return ResonanceComponent(Kind.ESSENTIAL, span, multinet=mn)


def same_subspace(a: Sequence[Sequence], b: Sequence[Sequence]) -> bool:
    ra, rb = rank([list(v) for v in a]), rank([list(v) for v in b])
    return ra == rb == rank([list(v) for v in a] + [list(v) for v in b])


def catalog(inc: IncidenceL2, multinets: Sequence[Multinet]) -> list[ResonanceComponent]:
    """Local components by flat order, then essential ones by canonical multinet order."""
    for mn in multinets:
        if mn.incidence.fingerprint() != inc.fingerprint():
            raise ValueError("multinet belongs to a different arrangement")
    comps = [local_component(X, inc.n) for X in inc.flats if X.multiplicity >= 3]
    for mn in sorted(multinets, key=lambda m: (m.k, m.assignment)):
        ess = essential_component(mn)
        # a pencil's trivial net spans the same plane as its single local component
        if any(same_subspace(ess.span, c.span) for c in comps):
            continue
        comps.append(ess)
    return comps


def depth_stratification(components: Sequence[ResonanceComponent], s: int) -> list[ResonanceComponent]:
    if s < 1:
        raise ValueError(f"depth must be >= 1, got {s}")
    return [c for c in components if c.dimension >= s + 1]


def isotropy_check(component: ResonanceComponent, os: OSDeg2) -> bool:
    """True iff all pairwise products of spanning vectors vanish in A^2."""
    span = component.span
    for v in span:
        if len(v) != os.n:
            raise ValueError(f"span vector of length {len(v)} on an arrangement of {os.n} hyperplanes")
    for i in range(len(span)):
        for j in range(i + 1, len(span)):
            if any(os.wedge(span[i], span[j])):
                return False
    return True


def random_point(component: ResonanceComponent, rng: random.Random, bound: int = 50) -> list[Fraction]:
    """Random rational combination of the spanning vectors with nonzero coefficients."""
    n = len(component.span[0])
    out = [Fraction(0)] * n
    for v in component.span:
        c = Fraction(rng.choice([x for x in range(-bound, bound + 1) if x]), rng.randint(1, bound))
        out = [a + c * b for a, b in zip(out, v)]
    return out


def membership(component: ResonanceComponent, inc: IncidenceL2, seed: int = 0) -> int:
    """Nullity of the Aomoto differential at a seeded random point of the component."""
    return aomoto_nullity(inc, random_point(component, random.Random(seed)))
