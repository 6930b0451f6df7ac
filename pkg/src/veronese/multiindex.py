"""Exponent vectors, the induced monomial order, and degree-d enumeration.

A monomial x_0^{i_0} ... x_n^{i_n} is represented by its exponent vector
(i_0, ..., i_n), a MultiIndex.  The same vector names the coordinate
z_{i_0,...,i_n} of the target projective space, so one type serves both
readings.  Monomials of a fixed degree are ordered lexicographically with
x_0 > x_1 > ... > x_n, which for equal-degree exponent tuples coincides
with plain tuple comparison; MultiIndex therefore subclasses tuple and
inherits its ordering.

All values are immutable and every function here is pure, so the module is
safe for unrestricted concurrent use.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import lru_cache

from .errors import ContractError


def binom(a: int, b: int) -> int:
    """Binomial coefficient C(a, b) as an exact integer.

    Returns 0 when b < 0 or b > a.  Requires a >= 0.
    """
    if a < 0:
        raise ContractError(f"binom requires a >= 0, got a={a}")
    if b < 0 or b > a:
        return 0
    return math.comb(a, b)


class MultiIndex(tuple):
    """Exponent vector of a monomial in n+1 variables.

    Component j is the power of x_j.  Comparison operators implement the
    lexicographic monomial order induced by x_0 > x_1 > ... > x_n (larger
    tuple = lex-larger monomial).  Note that tuple concatenation semantics
    of ``+`` are intentionally not overridden; use :meth:`plus`,
    :meth:`bump` and :meth:`drop` for componentwise arithmetic.
    """

    __slots__ = ()

    def __new__(cls, exponents) -> "MultiIndex":
        self = super().__new__(cls, (int(e) for e in exponents))
        if len(self) == 0:
            raise ContractError("a MultiIndex needs at least one exponent")
        if any(e < 0 for e in self):
            raise ContractError(f"negative exponent in {tuple(self)}")
        return self

    @property
    def degree(self) -> int:
        return sum(self)

    def plus(self, other: "MultiIndex") -> "MultiIndex":
        """Componentwise sum (the exponent vector of the product monomial)."""
        if len(self) != len(other):
            raise ContractError(f"length mismatch: {self} vs {other}")
        return MultiIndex(a + b for a, b in zip(self, other))

    def bump(self, j: int) -> "MultiIndex":
        """Copy with exponent j raised by one (multiplication by x_j)."""
        return MultiIndex(e + 1 if k == j else e for k, e in enumerate(self))

    def drop(self, j: int) -> "MultiIndex":
        """Copy with exponent j lowered by one (division by x_j)."""
        if self[j] < 1:
            raise ContractError(f"cannot divide {self} by variable {j}")
        return MultiIndex(e - 1 if k == j else e for k, e in enumerate(self))

    def coordinate_name(self) -> str:
        """Name of the coordinate this vector indexes, e.g. "z_{2,1,0}"."""
        return "z_{%s}" % ",".join(str(e) for e in self)

    def monomial_name(self) -> str:
        """Monomial reading, e.g. "x0^2*x1"; "1" for the zero vector."""
        parts = []
        for j, e in enumerate(self):
            if e == 1:
                parts.append(f"x{j}")
            elif e > 1:
                parts.append(f"x{j}^{e}")
        return "*".join(parts) if parts else "1"

    def __str__(self) -> str:
        return "(%s)" % ",".join(str(e) for e in self)

    def __repr__(self) -> str:
        return f"MultiIndex({tuple(self)})"


def unit(length: int, j: int) -> MultiIndex:
    """The j-th unit vector e_j of the given length."""
    if not 0 <= j < length:
        raise ContractError(f"unit index {j} out of range for length {length}")
    return MultiIndex(1 if k == j else 0 for k in range(length))


def pure_power(n: int, d: int, i: int) -> MultiIndex:
    """Exponent vector of x_i^d in n+1 variables."""
    if not 0 <= i <= n:
        raise ContractError(f"variable index {i} out of range for n={n}")
    return MultiIndex(d if k == i else 0 for k in range(n + 1))


_COORD_RE = re.compile(r"z_\{(-?\d+(?:,-?\d+)*)\}")


def parse_coordinate_name(text: str) -> MultiIndex:
    """Inverse of :meth:`MultiIndex.coordinate_name`."""
    m = _COORD_RE.fullmatch(text.strip())
    if not m:
        raise ContractError(f"not a coordinate name: {text!r}")
    return MultiIndex(int(e) for e in m.group(1).split(","))


def lex_compare(a: MultiIndex, b: MultiIndex) -> int:
    """Compare two same-degree monomials; +1 if x^a > x^b, -1 if smaller,
    0 if equal."""
    if len(a) != len(b):
        raise ContractError(f"length mismatch: {a} vs {b}")
    if a.degree != b.degree:
        raise ContractError(f"degree mismatch: {a} (deg {a.degree}) vs {b} (deg {b.degree})")
    if a == b:
        return 0
    return 1 if tuple(a) > tuple(b) else -1


@lru_cache(maxsize=None)
def enumerate_monomials(n: int, d: int) -> tuple[MultiIndex, ...]:
    """All C(n+d, n) degree-d exponent vectors in n+1 variables, strictly
    lex-decreasing.

    Generated directly in order by the descending-lex successor: move one
    unit of weight from the rightmost nonzero position before the end onto
    its right neighbour, collecting everything beyond it.
    """
    if n < 0 or d < 0:
        raise ContractError(f"enumerate_monomials requires n, d >= 0, got ({n}, {d})")
    out = []
    cur = [d] + [0] * n
    while True:
        out.append(MultiIndex(cur))
        pivot = -1
        for j in range(n - 1, -1, -1):
            if cur[j] > 0:
                pivot = j
                break
        if pivot < 0:
            break
        carry = sum(cur[pivot + 1:]) + 1
        cur[pivot] -= 1
        cur[pivot + 1] = carry
        for j in range(pivot + 2, n + 1):
            cur[j] = 0
    return tuple(out)


def rank(m: MultiIndex) -> int:
    """0-based position of m in enumerate_monomials(len(m)-1, m.degree).

    Strictly order-reversing: the lex-largest monomial has rank 0.  Runs in
    O((n+d) * n) via the block count of monomials sharing a leading exponent.
    """
    r = 0
    d = m.degree
    nvars = len(m)  # variables still unassigned
    for e in m[:-1]:
        nvars -= 1
        # monomials whose current exponent exceeds e come earlier
        for c in range(e + 1, d + 1):
            r += binom(d - c + nvars - 1, nvars - 1)
        d -= e
    return r


def unrank(k: int, n: int, d: int) -> MultiIndex:
    """The MultiIndex at position k of enumerate_monomials(n, d)."""
    total = binom(n + d, n)
    if not 0 <= k < total:
        raise IndexError(f"rank {k} out of range [0, {total}) for (n={n}, d={d})")
    exps = []
    remaining = d
    for pos in range(n):
        nvars = n - pos  # variables after this position
        for c in range(remaining, -1, -1):
            block = binom(remaining - c + nvars - 1, nvars - 1)
            if k < block:
                exps.append(c)
                remaining -= c
                break
            k -= block
    exps.append(remaining)
    return MultiIndex(exps)


@dataclass(frozen=True)
class VeroneseContext:
    """The pair (n, d): source space P^n and embedding degree d.

    Derived quantities: N = C(n+d, n) - 1 is the target dimension, cols =
    C(n+d-1, n) is the column count of the coordinate matrix.  Degenerate
    n = 0 and d = 0 contexts are constructible; operations that need d >= 1
    (matrix construction and everything built on it) enforce that themselves.
    """

    n: int
    d: int

    def __post_init__(self):
        if self.n < 0:
            raise ContractError(f"n must be >= 0, got {self.n}")
        if self.d < 0:
            raise ContractError(f"d must be >= 0, got {self.d}")

    @property
    def num_coords(self) -> int:
        """Number of degree-d monomials, N + 1."""
        return binom(self.n + self.d, self.n)

    @property
    def N(self) -> int:
        return self.num_coords - 1

    @property
    def cols(self) -> int:
        return binom(self.n + self.d - 1, self.n)

    def monomials(self) -> tuple[MultiIndex, ...]:
        return enumerate_monomials(self.n, self.d)

    def pure_powers(self) -> tuple[MultiIndex, ...]:
        """Exponent vectors of x_0^d, ..., x_n^d."""
        return tuple(pure_power(self.n, self.d, i) for i in range(self.n + 1))
