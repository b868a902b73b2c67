"""Multinet axioms and the backtracking search for reduced multinets and nets."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .arrangement import FlatL2, IncidenceL2, format_indices


@dataclass(frozen=True)
class Multinet:
    incidence: IncidenceL2
    classes: tuple[tuple[int, ...], ...]  # ordered by smallest member
    mults: tuple[int, ...]  # m_H for H = 1..n
    weight: int
    base_locus: tuple[FlatL2, ...]
    n_x: tuple[tuple[FlatL2, int], ...]

    @property
    def k(self) -> int:
        return len(self.classes)

    @property
    def reduced(self) -> bool:
        return all(m == 1 for m in self.mults)

    @property
    def is_net(self) -> bool:
        if not self.reduced:
            return False
        for X in self.base_locus:
            for cls in self.classes:
                if sum(1 for h in cls if h in X) != 1:
                    return False
        return True

    @property
    def trivial(self) -> bool:
        return self.weight == 1

    @property
    def assignment(self) -> tuple[int, ...]:
        """Class label (1-based) of each hyperplane; lexicographically minimal over relabelings."""
        label = {}
        for i, cls in enumerate(self.classes, 1):
            for h in cls:
                label[h] = i
        return tuple(label[h] for h in range(1, self.incidence.n + 1))

    @property
    def partition(self) -> str:
        return "(" + "|".join(format_indices(c) for c in self.classes) + ")"

    def class_vectors(self) -> list[list[int]]:
        """u_i = sum of m_H e_H over the i-th class."""
        out = []
        for cls in self.classes:
            u = [0] * self.incidence.n
            for h in cls:
                u[h - 1] = self.mults[h - 1]
            out.append(u)
        return out

    def __str__(self) -> str:
        return self.partition


@dataclass(frozen=True)
class NetCertificate:
    multinet: Multinet

    @property
    def reduced(self) -> bool:
        return self.multinet.reduced

    @property
    def net(self) -> bool:
        return self.multinet.is_net

    @property
    def trivial(self) -> bool:
        return self.multinet.trivial


@dataclass(frozen=True)
class Violation:
    axiom: str  # "i", "iii" or "iv"
    message: str
    flat: FlatL2 | None = None
    class_index: int | None = None

    def __str__(self) -> str:
        return f"axiom ({self.axiom}): {self.message}"


def _canonical_classes(classes: Iterable[Iterable[int]]) -> tuple[tuple[int, ...], ...]:
    return tuple(sorted(tuple(sorted(c)) for c in classes))


def verify(
    inc: IncidenceL2, classes: Sequence[Iterable[int]], mults: Sequence[int] | None = None
) -> Multinet | Violation:
    """Check the four multinet axioms; return the Multinet or the first violation found."""
    classes = [tuple(c) for c in classes]
    n = inc.n
    if len(classes) < 3:
        raise ValueError(f"a multinet needs k >= 3 classes, got {len(classes)}")
    if any(not c for c in classes):
        raise ValueError("empty class in partition")
    flat_list = sorted(h for c in classes for h in c)
    if flat_list != list(range(1, n + 1)):
        raise ValueError(f"classes do not partition 1..{n}")
    if mults is None:
        mults = [1] * n
    mults = tuple(int(m) for m in mults)
    if len(mults) != n or any(m < 1 for m in mults):
        raise ValueError("multiplicities must be n positive integers")

    classes = list(_canonical_classes(classes))
    label = {h: i for i, c in enumerate(classes) for h in c}

    weights = [sum(mults[h - 1] for h in c) for c in classes]
    if len(set(weights)) != 1:
        i = next(i for i, w in enumerate(weights) if w != weights[0])
        return Violation("i", f"class weights {', '.join(map(str, weights))} are not equal", class_index=i + 1)

    base = [X for X in inc.flats if len({label[h] for h in X}) >= 2]
    base_set = set(base)
    # (ii) holds by construction: any cross-class pair makes its flat mixed
    for h in range(1, n + 1):
        for k in range(h + 1, n + 1):
            if label[h] != label[k]:
                assert inc.flat_of(h, k) in base_set

    n_x = []
    for X in base:
        sums = [sum(mults[h - 1] for h in c if h in X) for c in classes]
        if len(set(sums)) != 1:
            i = next(i for i, s in enumerate(sums) if s != sums[0])
            return Violation(
                "iii",
                f"flat {{{format_indices(X)}}} meets classes with weights {', '.join(map(str, sums))}",
                flat=X,
                class_index=i + 1,
            )
        n_x.append((X, sums[0]))

    for i, c in enumerate(classes, 1):
        if not _class_connected(inc, c, base_set):
            return Violation("iv", f"class {{{format_indices(c)}}} is not connected outside the base locus", class_index=i)

    return Multinet(inc, tuple(classes), mults, weights[0], tuple(base), tuple(n_x))


def _class_connected(inc: IncidenceL2, cls: Sequence[int], base: set) -> bool:
    cls = list(cls)
    seen = {cls[0]}
    stack = [cls[0]]
    while stack:
        h = stack.pop()
        for k in cls:
            if k not in seen and inc.flat_of(h, k) not in base:
                seen.add(k)
                stack.append(k)
    return len(seen) == len(cls)


def classes_from_assignment(assignment: Sequence[int]) -> list[tuple[int, ...]]:
    groups: dict[int, list[int]] = {}
    for h, c in enumerate(assignment, 1):
        groups.setdefault(c, []).append(h)
    return [tuple(v) for v in groups.values()]


class _Search:
    """Restricted-growth backtracking over class labels 0..k-1.

    Each flat must end up either inside one class, or balanced: every class
    holds q_X / k of its hyperplanes (exactly one for nets).  Partial counts
    are checked after every assignment, which also forces equal class sizes.
    """

    def __init__(self, inc: IncidenceL2, k: int, nets_only: bool):
        self.inc = inc
        self.k = k
        self.nets_only = nets_only
        self.n = inc.n
        self.size = inc.n // k
        self.flats_of = [[] for _ in range(inc.n + 1)]
        for fi, X in enumerate(inc.flats):
            for h in X:
                self.flats_of[h].append(fi)
        self.q = [X.multiplicity for X in inc.flats]
        self.share = [self._share(q) for q in self.q]
        self.counts = [[0] * k for _ in inc.flats]
        self.class_size = [0] * k
        self.assignment = [0] * (inc.n + 1)
        self.found: list[tuple[int, ...]] = []

    def _share(self, q: int) -> int | None:
        # per-class count at a balanced flat, or None if the flat must be monochromatic
        if self.nets_only:
            return 1 if q == self.k else None
        return q // self.k if q % self.k == 0 else None

    def _flat_ok(self, fi: int) -> bool:
        cnt = self.counts[fi]
        used = sum(1 for c in cnt if c)
        if used <= 1:
            return True
        share = self.share[fi]
        return share is not None and max(cnt) <= share

    def run(self) -> list[tuple[int, ...]]:
        if self.n % self.k or self.n < self.k:
            return []
        self._place(1, 0)
        return self.found

    def _place(self, h: int, used: int):
        if h > self.n:
            self.found.append(tuple(c + 1 for c in self.assignment[1:]))
            return
        remaining = self.n - h + 1
        # every unused class still needs `size` hyperplanes
        if (self.k - used) * self.size > remaining:
            return
        for c in range(min(used + 1, self.k)):
            if self.class_size[c] >= self.size:
                continue
            self.assignment[h] = c
            self.class_size[c] += 1
            ok = True
            touched = self.flats_of[h]
            for fi in touched:
                self.counts[fi][c] += 1
            for fi in touched:
                if not self._flat_ok(fi):
                    ok = False
                    break
            if ok:
                self._place(h + 1, max(used, c + 1))
            for fi in touched:
                self.counts[fi][c] -= 1
            self.class_size[c] -= 1


def _search(inc: IncidenceL2, k: int, nets_only: bool) -> list[Multinet]:
    out = []
    for assignment in _Search(inc, k, nets_only).run():
        result = verify(inc, classes_from_assignment(assignment))
        if isinstance(result, Multinet):
            if nets_only:
                assert result.is_net
            out.append(result)
    out.sort(key=lambda mn: mn.assignment)
    return out


def enumerate_reduced_3_multinets(inc: IncidenceL2) -> list[Multinet]:
    """All reduced 3-multinets, one per unordered partition, in canonical order."""
    return _search(inc, 3, nets_only=False)


def enumerate_k_nets(inc: IncidenceL2, k: int) -> list[NetCertificate]:
    if k not in (3, 4):
        raise ValueError(f"k must be 3 or 4, got {k}")
    return [NetCertificate(mn) for mn in _search(inc, k, nets_only=True)]

