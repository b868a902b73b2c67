"""Characteristic polynomial of the Milnor-fiber monodromy on H_1, with provenance per factor.

    Delta_1(t) = (t - 1)^(n-1) * prod_{j | n, j > 1} Phi_j(t)^(e_j)

Prime exponents come from the Aomoto-Betti numbers when no flat multiplicity
is divisible by p^2.  Everything else comes from a per-family table or is left
unknown; nothing is ever defaulted to zero.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, replace

from .arrangement import FlatL2, Hypothesis, IncidenceL2, violating_flats
from .exactmath import IntPoly, cyclo_poly, divisors, euler_phi, is_prime
from .oscomplex import beta_p


class Provenance(str, enum.Enum):
    CERTIFIED_BETA = "CERTIFIED_BETA"
    FAMILY_TABLE = "FAMILY_TABLE"
    UNKNOWN = "UNKNOWN"


@dataclass(frozen=True)
class ExponentEntry:
    j: int
    exponent: int | None
    provenance: Provenance
    note: str = ""
    beta: int | None = None  # beta_j when j is prime, also kept when uncertified
    violating: tuple[FlatL2, ...] = ()

    @property
    def known(self) -> bool:
        return self.exponent is not None


@dataclass(frozen=True)
class MilnorInvariants:
    n: int
    entries: tuple[ExponentEntry, ...]
    family: str | None = None

    @property
    def complete(self) -> bool:
        return all(e.known for e in self.entries)

    @property
    def delta1(self) -> IntPoly | None:
        if not self.complete:
            return None
        out = IntPoly.t_minus_one() ** (self.n - 1)
        for e in self.entries:
            out = out * cyclo_poly(e.j) ** e.exponent
        return out

    @property
    def w1_dim(self) -> int | None:
        if not self.complete:
            return None
        return sum(e.exponent * euler_phi(e.j) for e in self.entries)

    @property
    def b1F(self) -> int | None:
        w = self.w1_dim
        return None if w is None else self.n - 1 + w

    @property
    def h10_dim(self) -> int | None:
        w = self.w1_dim
        if w is None:
            return None
        assert w % 2 == 0, "weight-1 part must be even-dimensional"
        return w // 2

    @property
    def trivial_monodromy(self) -> bool | None:
        """True/False when decided, None when some unknown exponent could still be positive."""
        if any(e.known and e.exponent > 0 for e in self.entries):
            return False
        return True if self.complete else None

    def factors(self) -> list[tuple[str, int | None, str]]:
        """(polynomial, exponent, provenance) rows, eigenvalue-1 block first."""
        rows = [("t - 1", self.n - 1, "eigenvalue 1: H^1(U), rank n - 1")]
        for e in self.entries:
            prov = e.provenance.value + (f": {e.note}" if e.note else "")
            rows.append((str(cyclo_poly(e.j)), e.exponent, prov))
        return rows

    def delta1_str(self) -> str:
        if not self.complete:
            known = [f"({p})" + (f"^{x}" if x > 1 else "") for p, x, _ in self.factors() if x]
            return "partial: " + (" ".join(known) if known else "1") + " * unknown factors"
        return format_factored(self.n, {e.j: e.exponent for e in self.entries})


def format_factored(n: int, exps: dict[int, int]) -> str:
    parts = []
    if n - 1:
        parts.append("(t - 1)" + (f"^{n - 1}" if n - 1 > 1 else ""))
    for j in sorted(exps):
        e = exps[j]
        if e:
            parts.append(f"({cyclo_poly(j)})" + (f"^{e}" if e > 1 else ""))
    return " ".join(parts) if parts else "1"


def e_p_from_beta(inc: IncidenceL2, p: int) -> ExponentEntry:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if inc.n % p:
        raise ValueError(f"{p} does not divide n = {inc.n}")
    b = beta_p(inc, p)
    bad = violating_flats(inc, p, Hypothesis.P_SQUARED)
    if not bad:
        return ExponentEntry(
            p, b, Provenance.CERTIFIED_BETA,
            note=f"e_{p} = beta_{p} = {b}; no flat multiplicity divisible by {p * p}",
            beta=b,
        )
    X = bad[0]
    return ExponentEntry(
        p, None, Provenance.UNKNOWN,
        note=f"beta_{p} = {b} not certified: flat {{{X}}} has multiplicity {X.multiplicity}, divisible by {p * p}",
        beta=b, violating=tuple(bad),
    )


_TAG = re.compile(r"^(pencil|monomial)\((\d+)\)$|^(braid3|hessian)$")

PENCIL_NOTE = (
    "pencil table e_j = n - 2 (Fermat curve x^n - y^n = 1: eigenvalue theta^s occurs for "
    "n - 2 pairs a + b = s mod n); note the closed form b1(F) = n^2 - 2n + 2 with "
    "Phi_n^(n-1) disagrees with the n = 3 value (t-1)^2 (t^2+t+1), "
    "which this table reproduces"
)


def parse_family_tag(tag: str) -> tuple[str, int | None]:
    m = _TAG.match(tag)
    if not m:
        raise ValueError(f"unknown family tag {tag!r}")
    if m.group(1):
        return m.group(1), int(m.group(2))
    return m.group(3), None


def family_size(tag: str) -> int:
    name, param = parse_family_tag(tag)
    return {"pencil": lambda: param, "monomial": lambda: 3 * param,
            "braid3": lambda: 6, "hessian": lambda: 12}[name]()


def family_exponent(tag: str, j: int, inc: IncidenceL2) -> tuple[int, str]:
    name, param = parse_family_tag(tag)
    if name == "monomial":
        if j == 3:
            b = beta_p(inc, 3)
            return b, f"monomial({param}): e_3 = beta_3 = {b} (reflection arrangements satisfy e_p = beta_p)"
        return 0, f"monomial({param}): the only nontrivial eigenvalues are primitive cube roots"
    if name == "braid3":
        return {2: 0, 3: 1, 6: 0}[j], "braid3: Delta_1 = (t-1)^5 (t^2+t+1)"
    if name == "hessian":
        return {2: 2, 4: 2}.get(j, 0), "hessian: Delta_1 = (t-1)^11 [(t+1)(t^2+1)]^2"
    return param - 2, PENCIL_NOTE


def delta1(inc: IncidenceL2, family_tag: str | None = None) -> MilnorInvariants:
    if family_tag is not None:
        parse_family_tag(family_tag)
        if family_size(family_tag) != inc.n:
            raise ValueError(f"family {family_tag} has {family_size(family_tag)} hyperplanes, incidence has {inc.n}")
    entries = []
    for j in divisors(inc.n)[1:]:
        entry = e_p_from_beta(inc, j) if is_prime(j) else None
        if entry is not None and entry.known:
            if family_tag is not None:
                e, note = family_exponent(family_tag, j, inc)
                verb = "agrees with" if e == entry.exponent else f"CONFLICTS with (table says {e})"
                entry = replace(entry, note=f"{entry.note}; {verb} family table: {note}")
            entries.append(entry)
            continue
        if family_tag is not None:
            e, note = family_exponent(family_tag, j, inc)
            entries.append(ExponentEntry(j, e, Provenance.FAMILY_TABLE, note=note,
                                         beta=entry.beta if entry else None))
        elif entry is not None:
            entries.append(entry)
        else:
            entries.append(ExponentEntry(j, None, Provenance.UNKNOWN,
                                         note=f"composite j = {j}: no combinatorial certificate"))
    return MilnorInvariants(inc.n, tuple(entries), family_tag)
