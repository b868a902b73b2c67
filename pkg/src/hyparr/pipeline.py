"""Full analysis: L2 -> beta_p -> multinets -> resonance -> Delta_1 -> verdict, and its report."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Any, Sequence

from .arrangement import IncidenceL2, format_indices, moebius_betti
from .milnor import MilnorInvariants, delta1
from .multinet import Multinet, enumerate_k_nets, enumerate_reduced_3_multinets
from .oscomplex import beta_p
from .resonance import Kind, ResonanceComponent, catalog, depth_stratification
from .verdict import FormalityVerdict, assess

SCHEMA_VERSION = 1


@dataclass
class Analysis:
    name: str
    incidence: IncidenceL2
    rank: int
    primes: tuple[int, ...]
    betas: dict[int, int]
    multinets: list[Multinet] | None
    four_nets: list[Multinet]
    components: list[ResonanceComponent]
    milnor: MilnorInvariants
    verdict: FormalityVerdict

    def report(self) -> Report:
        return build_report(self)


def analyze(
    inc: IncidenceL2,
    name: str,
    family_tag: str | None = None,
    primes: Sequence[int] = (2, 3, 5),
    enumerate_multinets: bool = True,
    max_k: int | None = None,
    rank: int | None = None,
) -> Analysis:
    if max_k is None:
        max_k = 4 if inc.n % 4 == 0 else 3
    if max_k not in (3, 4):
        raise ValueError(f"--max-k must be 3 or 4, got {max_k}")
    rank = inc.rank if rank is None else rank
    primes = tuple(sorted(set(primes)))
    betas = {p: beta_p(inc, p) for p in primes}
    beta3 = betas[3] if 3 in betas else beta_p(inc, 3)

    if enumerate_multinets:
        multinets = enumerate_reduced_3_multinets(inc)
        four_nets = [c.multinet for c in enumerate_k_nets(inc, 4)] if max_k == 4 else []
    else:
        multinets, four_nets = None, []

    components = catalog(inc, (multinets or []) + four_nets)
    milnor = delta1(inc, family_tag)
    verdict = assess(inc, multinets, beta3, milnor, rank=rank, four_nets=four_nets)
    return Analysis(name, inc, rank, primes, betas, multinets, four_nets, components, milnor, verdict)


@dataclass
class Report:
    name: str
    n: int
    rank: int
    l2_profile: list[list[int]]
    multiple_points: list[str]
    b1: int
    b2: int
    beta: dict[str, int]
    multinets: list[dict[str, Any]] | None
    resonance: dict[str, Any]
    delta1: dict[str, Any]
    b1F: int | str
    w1_dim: int | str
    h10_dim: int | str
    verdict: dict[str, Any]
    schema_version: int = SCHEMA_VERSION

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> Report:
        data = dict(data)
        version = data.get("schema_version")
        if version != SCHEMA_VERSION:
            raise ValueError(f"unsupported report schema_version {version!r}")
        return cls(**data)


def _multinet_row(mn: Multinet) -> dict[str, Any]:
    return {
        "partition": mn.partition,
        "k": mn.k,
        "weight": mn.weight,
        "reduced": mn.reduced,
        "net": mn.is_net,
        "trivial": mn.trivial,
    }


def _or_partial(x: int | None) -> int | str:
    return "partial" if x is None else x


def build_report(a: Analysis) -> Report:
    inc = a.incidence
    b1, b2, _ = moebius_betti(inc)
    comps = a.components
    depth = {}
    s = 1
    while True:
        layer = depth_stratification(comps, s)
        depth[str(s)] = len(layer)
        if not layer:
            break
        s += 1
    mi = a.milnor
    v = a.verdict
    multinets = None
    if a.multinets is not None:
        multinets = [_multinet_row(mn) for mn in a.multinets] + [_multinet_row(mn) for mn in a.four_nets]
    return Report(
        name=a.name,
        n=inc.n,
        rank=a.rank,
        l2_profile=[[q, c] for q, c in inc.profile.items()],
        multiple_points=[format_indices(X) for X in inc.flats if X.multiplicity >= 3],
        b1=b1,
        b2=b2,
        beta={str(p): b for p, b in a.betas.items()},
        multinets=multinets,
        resonance={
            "local": sum(1 for c in comps if c.kind == Kind.LOCAL),
            "essential": sum(1 for c in comps if c.kind == Kind.ESSENTIAL),
            "components": [{"kind": c.kind.value, "label": c.label, "dimension": c.dimension} for c in comps],
            "depth": depth,
        },
        delta1={
            "polynomial": mi.delta1_str(),
            "complete": mi.complete,
            "coefficients": list(mi.delta1.coeffs) if mi.complete else None,
            "factors": [{"factor": f, "exponent": e, "provenance": p} for f, e, p in mi.factors()],
        },
        b1F=_or_partial(mi.b1F),
        w1_dim=_or_partial(mi.w1_dim),
        h10_dim=_or_partial(mi.h10_dim),
        verdict={
            "status": v.status.value,
            "witness": v.witness.value if v.witness else None,
            "witness_multinets": [mn.partition for mn in v.multinets],
            "reasons": [r.value for r in v.reasons],
            "classical": v.classical,
            "detail": v.detail,
        },
    )


def report_text(r: Report) -> str:
    """Plain-text rendering with the same field values as the JSON document."""
    lines = [
        f"name: {r.name}",
        f"n: {r.n}",
        f"rank: {r.rank}",
        "l2_profile: " + ", ".join(f"{c} x {q}" for q, c in r.l2_profile),
        "multiple_points: " + (" ".join(r.multiple_points) or "none"),
        f"b1: {r.b1}",
        f"b2: {r.b2}",
        "beta: " + ", ".join(f"beta_{p} = {b}" for p, b in r.beta.items()),
    ]
    if r.multinets is None:
        lines.append("multinets: not enumerated")
    else:
        lines.append(f"multinets: {len(r.multinets)}")
        for m in r.multinets:
            flags = [f for f in ("reduced", "net", "trivial") if m[f]]
            lines.append(f"  {m['partition']}  k={m['k']} weight={m['weight']} {' '.join(flags)}")
    res = r.resonance
    lines.append(f"resonance: {res['local']} local, {res['essential']} essential")
    for c in res["components"]:
        lines.append(f"  {c['kind']:<9} {c['label']}  dim {c['dimension']}")
    lines.append("resonance depth: " + ", ".join(f"s={s}: {k}" for s, k in res["depth"].items()))
    lines.append(f"delta1: {r.delta1['polynomial']}")
    for f in r.delta1["factors"]:
        e = "?" if f["exponent"] is None else f["exponent"]
        lines.append(f"  ({f['factor']})^{e}  [{f['provenance']}]")
    lines += [f"b1F: {r.b1F}", f"w1_dim: {r.w1_dim}", f"h10_dim: {r.h10_dim}"]
    v = r.verdict
    lines.append(f"verdict: {v['status']}")
    if v["witness"]:
        lines.append(f"  witness: {v['witness']}" + (" (classical)" if v["classical"] else ""))
    if v["witness_multinets"]:
        lines.append("  witness multinets: " + " ".join(v["witness_multinets"]))
    if v["reasons"]:
        lines.append("  reasons: " + ", ".join(v["reasons"]))
    if v["detail"]:
        lines.append(f"  detail: {v['detail']}")
    return "\n".join(lines) + "\n"
