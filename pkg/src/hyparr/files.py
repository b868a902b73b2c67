"""JSON arrangement files.

Geometric form::

    {"name": "ceva", "cyclotomic_order": 3,
     "hyperplanes": [[[[1, 1], [0, 1]], [[-1, 1], [0, 1]], [[0, 1], [0, 1]]], ...],
     "family": "monomial(3)"}

Each coordinate lists phi(m) rationals [numerator, denominator], the
coefficients of zeta_m^0 .. zeta_m^(phi(m)-1).  ``family`` is optional; when
present the lattice must agree with the built-in generator.

Combinatorial form::

    {"name": "braid3", "n": 6, "flats": [[1, 3, 6], [1, 4, 5], [2, 3, 5], [2, 4, 6]]}
"""

from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any

from .arrangement import Arrangement, ArrangementError, IncidenceL2, compute_L2, family, from_combinatorial
from .exactmath import CycloNum, euler_phi
from .milnor import parse_family_tag


@dataclass(frozen=True)
class ArrangementFile:
    name: str
    arrangement: Arrangement | None = None
    n: int | None = None
    flats: tuple[tuple[int, ...], ...] | None = None
    family: str | None = None

    @property
    def geometric(self) -> bool:
        return self.arrangement is not None

    def incidence(self) -> IncidenceL2:
        if self.arrangement is not None:
            return compute_L2(self.arrangement)
        return from_combinatorial(self.n, self.flats)

    def rank(self) -> int:
        if self.arrangement is not None:
            return self.arrangement.rank
        return self.incidence().rank


def family_arrangement(tag: str) -> Arrangement:
    name, param = parse_family_tag(tag)
    return family(name, n=param if name == "pencil" else None, m=param if name == "monomial" else None)


def _encode_coord(c: CycloNum) -> list[list[int]]:
    return [[x.numerator, x.denominator] for x in c.coeffs]


def _decode_coord(raw: Any, m: int, where: str) -> CycloNum:
    phi = euler_phi(m)
    if not isinstance(raw, list) or len(raw) != phi:
        raise ArrangementError(f"{where}: expected {phi} coefficients for Q(zeta_{m})")
    coeffs = []
    for pair in raw:
        if (not isinstance(pair, list) or len(pair) != 2
                or not all(isinstance(x, int) and not isinstance(x, bool) for x in pair)):
            raise ArrangementError(f"{where}: coefficient {pair!r} is not a [numerator, denominator] pair")
        if pair[1] == 0:
            raise ArrangementError(f"{where}: zero denominator")
        coeffs.append(Fraction(pair[0], pair[1]))
    return CycloNum(m, coeffs)


def to_dict(af: ArrangementFile) -> dict[str, Any]:
    if af.arrangement is not None:
        arr = af.arrangement
        out: dict[str, Any] = {
            "name": af.name,
            "cyclotomic_order": arr.order,
            "hyperplanes": [[_encode_coord(c) for c in v] for v in arr.normals],
        }
    else:
        out = {"name": af.name, "n": af.n, "flats": [list(f) for f in af.flats]}
    if af.family:
        out["family"] = af.family
    return out


def from_dict(data: Any) -> ArrangementFile:
    if not isinstance(data, dict):
        raise ArrangementError("arrangement file must hold a JSON object")
    name = data.get("name")
    if not isinstance(name, str):
        raise ArrangementError("missing string field 'name'")
    geo = "hyperplanes" in data or "cyclotomic_order" in data
    comb = "flats" in data or "n" in data
    if geo == comb:
        raise ArrangementError("file must be exactly one of geometric (cyclotomic_order, hyperplanes) "
                               "or combinatorial (n, flats)")
    tag = data.get("family")
    if tag is not None:
        try:
            parse_family_tag(tag)
        except (ValueError, TypeError) as exc:
            raise ArrangementError(str(exc)) from None
    if geo:
        m = data.get("cyclotomic_order")
        if not isinstance(m, int) or m < 1:
            raise ArrangementError("cyclotomic_order must be a positive integer")
        hs = data.get("hyperplanes")
        if not isinstance(hs, list) or not hs:
            raise ArrangementError("hyperplanes must be a non-empty list")
        normals = []
        for i, v in enumerate(hs, 1):
            if not isinstance(v, list) or len(v) != 3:
                raise ArrangementError(f"hyperplane {i}: normal must have 3 coordinates")
            normals.append(tuple(_decode_coord(c, m, f"hyperplane {i}") for c in v))
        af = ArrangementFile(name, arrangement=Arrangement(name, m, tuple(normals)), family=tag)
    else:
        n, flats = data.get("n"), data.get("flats")
        if not isinstance(n, int) or n < 1:
            raise ArrangementError("n must be a positive integer")
        if not isinstance(flats, list) or not all(isinstance(f, list) for f in flats):
            raise ArrangementError("flats must be a list of index lists")
        for f in flats:
            if not all(isinstance(h, int) and not isinstance(h, bool) for h in f):
                raise ArrangementError(f"flat {f!r} has a non-integer index")
        from_combinatorial(n, flats)  # validation
        af = ArrangementFile(name, n=n, flats=tuple(tuple(f) for f in flats), family=tag)
    if tag is not None:
        expected = compute_L2(family_arrangement(tag))
        if af.incidence().fingerprint() != expected.fingerprint():
            raise ArrangementError(f"lattice does not match the declared family {tag}")
    return af


def load(path: str | Path) -> ArrangementFile:
    with open(path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ArrangementError(f"invalid JSON: {exc}") from None
    return from_dict(data)


def dumps(data: Any) -> str:
    return json.dumps(data, indent=2) + "\n"


def write_atomic(path: str | Path, text: str):
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
