"""Formality verdicts for the Milnor fiber, first matching rule wins.

0. rank <= 2: the Milnor fiber is a punctured curve, homotopy equivalent to a
   wedge of circles, hence formal.
1. two distinct reduced 3-multinets: not 1-formal.
2. beta_3 = 2 and no flat of multiplicity 3r with r > 1: not 1-formal.
3. Delta_1 known and equal to (t-1)^(n-1): trivial monodromy, formal.
Otherwise UNKNOWN, tagged with every open case that applies.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Sequence

from .arrangement import Hypothesis, IncidenceL2, multiplicity_hypothesis
from .milnor import MilnorInvariants
from .multinet import Multinet, verify
from .oscomplex import beta_p


class Status(str, enum.Enum):
    NOT_1_FORMAL = "NOT_1_FORMAL"
    FORMAL = "FORMAL"
    UNKNOWN = "UNKNOWN"


class WitnessKind(str, enum.Enum):
    TWO_REDUCED_3MULTINETS = "TWO_REDUCED_3MULTINETS"
    BETA3_CRITERION = "BETA3_CRITERION"
    TRIVIAL_MONODROMY = "TRIVIAL_MONODROMY"
    PUNCTURED_SURFACE = "PUNCTURED_SURFACE"


class Reason(str, enum.Enum):
    SINGLE_ESSENTIAL_NET = "SINGLE_ESSENTIAL_NET"
    FOUR_NET_CASE = "FOUR_NET_CASE"
    PARTIAL_DELTA1 = "PARTIAL_DELTA1"
    NONTRIVIAL_MONODROMY_NO_CRITERION = "NONTRIVIAL_MONODROMY_NO_CRITERION"
    NO_ENUMERATION = "NO_ENUMERATION"


@dataclass(frozen=True)
class FormalityVerdict:
    status: Status
    witness: WitnessKind | None = None
    multinets: tuple[Multinet, ...] = ()
    beta3: int | None = None
    reasons: tuple[Reason, ...] = ()
    detail: str = ""
    classical: bool = False  # rule 0 is a classical fact, not one of the multinet criteria


class InconsistentInputs(ValueError):
    pass


def assess(
    inc: IncidenceL2,
    multinets: Sequence[Multinet] | None,
    beta3: int,
    milnor: MilnorInvariants,
    rank: int | None = None,
    four_nets: Sequence[Multinet] = (),
) -> FormalityVerdict:
    """Apply the rules in order.  ``multinets=None`` means the search was skipped."""
    fp = inc.fingerprint()
    for mn in list(multinets or ()) + list(four_nets):
        if mn.incidence.fingerprint() != fp:
            raise InconsistentInputs("multinet computed on a different arrangement")
    if milnor.n != inc.n:
        raise InconsistentInputs(f"Milnor data for n = {milnor.n}, incidence has n = {inc.n}")
    rank = inc.rank if rank is None else rank

    if rank <= 2:
        return FormalityVerdict(
            Status.FORMAL, WitnessKind.PUNCTURED_SURFACE, classical=True,
            detail=f"rank {rank}: the Milnor fiber is a punctured curve, homotopic to a wedge of circles",
        )

    reduced3 = [mn for mn in (multinets or ()) if mn.reduced and mn.k == 3]
    if len(reduced3) >= 2:
        pair = tuple(reduced3[:2])
        return FormalityVerdict(
            Status.NOT_1_FORMAL, WitnessKind.TWO_REDUCED_3MULTINETS, multinets=pair,
            detail=f"reduced 3-multinets {pair[0].partition} and {pair[1].partition}",
        )

    three_r = multiplicity_hypothesis(inc, 3, Hypothesis.THREE_R)
    if beta3 == 2 and three_r:
        return FormalityVerdict(
            Status.NOT_1_FORMAL, WitnessKind.BETA3_CRITERION, beta3=beta3,
            detail="beta_3 = 2 and no flat of multiplicity 3r with r > 1",
        )

    if milnor.complete and milnor.trivial_monodromy:
        return FormalityVerdict(
            Status.FORMAL, WitnessKind.TRIVIAL_MONODROMY,
            detail=f"Delta_1 = (t - 1)^{inc.n - 1}: monodromy acts trivially on H_1",
        )

    reasons = []
    if four_nets:
        reasons.append(Reason.FOUR_NET_CASE)
    if len(reduced3) == 1 or beta3 == 1:
        reasons.append(Reason.SINGLE_ESSENTIAL_NET)
    if multinets is None:
        reasons.append(Reason.NO_ENUMERATION)
    if not milnor.complete:
        reasons.append(Reason.PARTIAL_DELTA1)
    if milnor.trivial_monodromy is False:
        reasons.append(Reason.NONTRIVIAL_MONODROMY_NO_CRITERION)
    return FormalityVerdict(Status.UNKNOWN, reasons=tuple(reasons), beta3=beta3)


def recheck(verdict: FormalityVerdict, inc: IncidenceL2) -> bool:
    """Replay a NOT_1_FORMAL witness from scratch."""
    if verdict.status != Status.NOT_1_FORMAL:
        return True
    if verdict.witness == WitnessKind.TWO_REDUCED_3MULTINETS:
        a, b = verdict.multinets
        ra, rb = verify(inc, a.classes), verify(inc, b.classes)
        return (
            isinstance(ra, Multinet) and isinstance(rb, Multinet)
            and ra.reduced and rb.reduced and ra.k == rb.k == 3
            and ra.assignment != rb.assignment
        )
    if verdict.witness == WitnessKind.BETA3_CRITERION:
        return beta_p(inc, 3) == 2 and multiplicity_hypothesis(inc, 3, Hypothesis.THREE_R)
    return False
