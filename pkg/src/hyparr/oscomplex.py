"""Orlik-Solomon algebra in degrees <= 2 and the Aomoto complex.

A^2 is spanned by e_{H0} e_K, one block per flat X with anchor H0 = min(A_X)
and K running over the other hyperplanes of X.  The degree-2 relation at X,
e_H e_K = e_{H0} e_K - e_{H0} e_H, reduces every product to this basis.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .arrangement import IncidenceL2
from .exactmath import is_prime, mat_vec, nullity


@dataclass(frozen=True)
class OSDeg2:
    incidence: IncidenceL2
    p: int | None = None  # None means Q
    basis2: tuple[tuple[int, int], ...] = field(init=False)
    _pos: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.p is not None and not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        basis = tuple((X.anchor, K) for X in self.incidence.flats for K in X.hyperplanes[1:])
        object.__setattr__(self, "basis2", basis)
        object.__setattr__(self, "_pos", {b: i for i, b in enumerate(basis)})

    @property
    def n(self) -> int:
        return self.incidence.n

    @property
    def dim1(self) -> int:
        return self.n

    @property
    def dim2(self) -> int:
        return len(self.basis2)

    def product_terms(self, h: int, k: int) -> list[tuple[int, int]]:
        """e_h e_k as (basis position, sign) pairs."""
        if h == k:
            raise ValueError("e_H e_H is not a basis product (H = K)")
        X = self.incidence.flat_of(h, k)
        h0 = X.anchor
        if h == h0:
            return [(self._pos[(h0, k)], 1)]
        if k == h0:
            return [(self._pos[(h0, h)], -1)]
        return [(self._pos[(h0, k)], 1), (self._pos[(h0, h)], -1)]

    def os_product(self, h: int, k: int) -> list:
        v = [self._zero()] * self.dim2
        for pos, sign in self.product_terms(h, k):
            v[pos] += sign
        return self._reduce(v)

    def wedge(self, a: Sequence, b: Sequence) -> list:
        """a * b in A^2 for a, b in A^1 (coefficient vectors indexed by hyperplane)."""
        self._check_len(a)
        self._check_len(b)
        v = [self._zero()] * self.dim2
        for i, x in enumerate(a, 1):
            if not x:
                continue
            for j, y in enumerate(b, 1):
                if i == j or not y:
                    continue
                for pos, sign in self.product_terms(i, j):
                    v[pos] += sign * x * y
        return self._reduce(v)

    def delta_matrix(self, a: Sequence) -> list[list]:
        """Matrix of e_K -> a * e_K, rows indexed by basis2, columns by hyperplane."""
        self._check_len(a)
        rows = [[self._zero()] * self.n for _ in range(self.dim2)]
        for k in range(1, self.n + 1):
            for h, x in enumerate(a, 1):
                if h == k or not x:
                    continue
                for pos, sign in self.product_terms(h, k):
                    rows[pos][k - 1] += sign * x
        return [self._reduce(r) for r in rows]

    def _zero(self):
        return 0 if self.p is not None else Fraction(0)

    def _reduce(self, v: list) -> list:
        if self.p is None:
            return [Fraction(x) for x in v]
        return [x % self.p for x in v]

    def _check_len(self, a: Sequence):
        if len(a) != self.n:
            raise ValueError(f"vector has length {len(a)}, expected {self.n}")


def delta_sigma(inc: IncidenceL2, p: int | None = None) -> list[list]:
    os = OSDeg2(inc, p)
    return os.delta_matrix([1] * inc.n)


def beta_p(inc: IncidenceL2, p: int) -> int:
    """Aomoto-Betti number: dim H^1 of (A tensor F_p, multiplication by sigma)."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if inc.n == 1:
        return 0
    os = OSDeg2(inc, p)
    k, _ = nullity(os.delta_matrix([1] * inc.n), p, ncols=inc.n)
    # sigma spans the image of A^0 and always lies in the kernel
    return k - 1


def aomoto_nullity(inc: IncidenceL2, a: Sequence, p: int | None = None) -> int:
    if len(a) != inc.n:
        raise ValueError(f"vector has length {len(a)}, expected {inc.n}")
    os = OSDeg2(inc, p)
    k, _ = nullity(os.delta_matrix(list(a)), p, ncols=inc.n)
    return k


def apply_delta(os: OSDeg2, a: Sequence, x: Sequence) -> list:
    return mat_vec(os.delta_matrix(a), x, os.p)
