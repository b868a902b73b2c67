"""Exact arithmetic: integer polynomials, cyclotomic fields, kernels over Q and F_p.

Rationals are :class:`fractions.Fraction` throughout; nothing in this package
touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Sequence

Rat = Fraction


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def euler_phi(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


# ---------------------------------------------------------------------------
# integer polynomials in t
# ---------------------------------------------------------------------------


def _trim(coeffs) -> tuple:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class IntPoly:
    """Univariate integer polynomial, constant term first."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(int(c) for c in self.coeffs))

    @classmethod
    def t_minus_one(cls) -> IntPoly:
        return cls((-1, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: IntPoly) -> IntPoly:
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IntPoly(x + y for x, y in zip(a, b))

    def __neg__(self) -> IntPoly:
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other: IntPoly) -> IntPoly:
        return self + (-other)

    def __mul__(self, other: IntPoly) -> IntPoly:
        if self.is_zero() or other.is_zero():
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    def __pow__(self, e: int) -> IntPoly:
        if e < 0:
            raise ValueError("negative exponent")
        out = IntPoly((1,))
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def divmod_monic(self, divisor: IntPoly) -> tuple[IntPoly, IntPoly]:
        """Long division by a monic divisor; stays in Z[t]."""
        if divisor.is_zero() or divisor.coeffs[-1] != 1:
            raise ValueError("divisor must be monic")
        rem = list(self.coeffs)
        dd = divisor.degree
        quo = [0] * max(len(rem) - dd, 0)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if c:
                quo[i - dd] = c
                for j, b in enumerate(divisor.coeffs):
                    rem[i - dd + j] -= c * b
        return IntPoly(quo), IntPoly(rem)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                mono = "t" if i == 1 else f"t^{i}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


@lru_cache(maxsize=None)
def cyclo_poly(j: int) -> IntPoly:
    """The j-th cyclotomic polynomial, by exact division of t^j - 1."""
    if j < 1:
        raise ValueError(f"cyclotomic index must be >= 1, got {j}")
    num = IntPoly((-1,) + (0,) * (j - 1) + (1,))
    for d in divisors(j)[:-1]:
        num, rem = num.divmod_monic(cyclo_poly(d))
        assert rem.is_zero()
    return num


# ---------------------------------------------------------------------------
# rational polynomial helpers (lists of Fraction, constant term first)
# ---------------------------------------------------------------------------


def _qtrim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _qsub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    return _qtrim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


def _qmul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _qtrim(out)


def _qdivmod(a: list, b: list) -> tuple[list, list]:
    b = _qtrim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = [Fraction(c) for c in a]
    lead = Fraction(b[-1])
    db = len(b) - 1
    quo = [Fraction(0)] * max(len(rem) - db, 0)
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i] / lead
        if c:
            quo[i - db] = c
            for j, y in enumerate(b):
                rem[i - db + j] -= c * y
    return _qtrim(quo), _qtrim(rem[:db])


# ---------------------------------------------------------------------------
# cyclotomic field Q(zeta_m)
# ---------------------------------------------------------------------------


class CycloNum:
    """Element of Q(zeta_m), stored reduced modulo the m-th cyclotomic polynomial."""

    __slots__ = ("order", "coeffs", "_hash")

    def __init__(self, order: int, coeffs: Sequence = ()):
        if order < 1:
            raise ValueError(f"cyclotomic order must be >= 1, got {order}")
        phi = cyclo_poly(order)
        c = [Fraction(x) for x in coeffs]
        if len(c) > phi.degree:
            _, c = _qdivmod(c, list(phi.coeffs))
        c = c + [Fraction(0)] * (phi.degree - len(c))
        self.order = order
        self.coeffs = tuple(c)
        self._hash = None

    @classmethod
    def from_rational(cls, order: int, value) -> CycloNum:
        return cls(order, [value])

    @property
    def degree(self) -> int:
        return len(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _check(self, other: CycloNum):
        if not isinstance(other, CycloNum):
            raise TypeError(f"expected CycloNum, got {type(other).__name__}")
        if other.order != self.order:
            raise ValueError(f"cyclotomic order mismatch: {self.order} vs {other.order}")

    def _coerce(self, other) -> CycloNum:
        if isinstance(other, (int, Fraction)):
            return CycloNum.from_rational(self.order, other)
        self._check(other)
        return other

    def __add__(self, other) -> CycloNum:
        other = self._coerce(other)
        return CycloNum(self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self) -> CycloNum:
        return CycloNum(self.order, [-a for a in self.coeffs])

    def __sub__(self, other) -> CycloNum:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> CycloNum:
        return self._coerce(other) - self

    def __mul__(self, other) -> CycloNum:
        other = self._coerce(other)
        prod = _qmul(_qtrim(list(self.coeffs)), _qtrim(list(other.coeffs)))
        return CycloNum(self.order, prod)

    __rmul__ = __mul__

    def inverse(self) -> CycloNum:
        """Inverse via the extended Euclidean algorithm against Phi_m."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(zeta_m)")
        r0, r1 = list(cyclo_poly(self.order).coeffs), _qtrim(list(self.coeffs))
        s0, s1 = [], [Fraction(1)]
        while r1:
            q, r = _qdivmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _qsub(s0, _qmul(q, s1))
        # r0 is a nonzero constant since Phi_m is irreducible
        assert len(r0) == 1
        return CycloNum(self.order, [c / r0[0] for c in s0])

    def __truediv__(self, other) -> CycloNum:
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other) -> CycloNum:
        return self._coerce(other) * self.inverse()

    def __pow__(self, e: int) -> CycloNum:
        if e < 0:
            return self.inverse() ** (-e)
        out = CycloNum.from_rational(self.order, 1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = CycloNum.from_rational(self.order, other)
        if not isinstance(other, CycloNum):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.order, self.coeffs))
        return self._hash

    def __repr__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(str(c) if i == 0 else f"{c}*z^{i}")
        return f"CycloNum[{self.order}]({' + '.join(terms) or '0'})"


def zeta_power(m: int, a: int) -> CycloNum:
    """zeta_m ** a, reduced."""
    a %= m
    return CycloNum(m, [0] * a + [1])


def cross(u: Sequence[CycloNum], v: Sequence[CycloNum]) -> tuple[CycloNum, CycloNum, CycloNum]:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


# ---------------------------------------------------------------------------
# row reduction over Q (p=None) or F_p
# ---------------------------------------------------------------------------


def _field_ops(p: int | None):
    if p is None:
        return Fraction, lambda x: 1 / x
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return (lambda x: int(x) % p), (lambda x: pow(x, -1, p))


def rref(matrix: Sequence[Sequence], p: int | None = None) -> tuple[list[list], list[int]]:
    """Reduced row echelon form and pivot columns over Q or F_p."""
    conv, inv = _field_ops(p)
    rows = [[conv(x) for x in row] for row in matrix]
    ncols = len(rows[0]) if rows else 0
    if any(len(r) != ncols for r in rows):
        raise ValueError("ragged matrix")
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        s = inv(rows[r][c])
        rows[r] = [x * s for x in rows[r]]
        if p is not None:
            rows[r] = [x % p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
                if p is not None:
                    rows[i] = [x % p for x in rows[i]]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(matrix: Sequence[Sequence], p: int | None = None) -> int:
    if not matrix:
        return 0
    return len(rref(matrix, p)[1])


def nullity(
    matrix: Sequence[Sequence], p: int | None = None, ncols: int | None = None
) -> tuple[int, list[list]]:
    """Kernel dimension and a kernel basis of ``matrix`` acting on column vectors.

    ``ncols`` is needed only when the matrix has no rows.
    """
    if not matrix:
        if ncols is None:
            raise ValueError("ncols required for an empty matrix")
        conv, _ = _field_ops(p)
        return ncols, [[conv(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    conv, _ = _field_ops(p)
    ncols = len(matrix[0])
    red, pivots = rref(matrix, p)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [conv(0)] * ncols
        v[f] = conv(1)
        for row, pc in zip(red, pivots):
            v[pc] = -row[f] if p is None else (-row[f]) % p
        basis.append(v)
    return len(free), basis


def mat_vec(matrix: Sequence[Sequence], v: Sequence, p: int | None = None) -> list:
    out = [sum(a * b for a, b in zip(row, v)) for row in matrix]
    return [x % p for x in out] if p is not None else out
