"""The symbolic coordinate matrix and its 2-minor binomial quadrics.

One grid of MultiIndex entries serves two readings: as L (each entry is the
monomial x^m) and as M (each entry is the coordinate z_m).  Row i holds all
degree-d exponent vectors with a positive i-th component, lex-decreasing,
so the grid is (n+1) x C(n+d-1, n).

Every 2x2 subdeterminant of M is the balanced binomial quadric
z_a z_b - z_c z_e with a + b = c + e; these generate the ideal whose
vanishing locus the rest of the package studies.  Binomials are kept in a
canonical form so that generator sets deduplicate by plain equality.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .errors import ContractError, EmptyMatrixError
from .multiindex import (
    MultiIndex,
    VeroneseContext,
    enumerate_monomials,
    parse_coordinate_name,
)

Pair = tuple[MultiIndex, MultiIndex]


@dataclass(frozen=True)
class SymbolicMatrix:
    """The (n+1) x cols grid of exponent vectors realizing both L and M."""

    ctx: VeroneseContext
    entries: tuple[tuple[MultiIndex, ...], ...]

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.entries), len(self.entries[0]) if self.entries else 0)

    def entry(self, i: int, k: int) -> MultiIndex:
        return self.entries[i][k]

    def row(self, i: int) -> tuple[MultiIndex, ...]:
        return self.entries[i]

    def column(self, k: int) -> tuple[MultiIndex, ...]:
        return tuple(row[k] for row in self.entries)

    def column_bases(self) -> tuple[MultiIndex, ...]:
        """Degree-(d-1) vectors indexing the columns; column k is its base
        multiplied by each variable in turn."""
        return enumerate_monomials(self.ctx.n, self.ctx.d - 1)

    def to_doc(self) -> dict:
        """JSON-ready document {n, d, rows} with entries as exponent lists."""
        return {
            "n": self.ctx.n,
            "d": self.ctx.d,
            "rows": [[list(m) for m in row] for row in self.entries],
        }


def build_matrix(ctx: VeroneseContext) -> SymbolicMatrix:
    """Row-wise construction: row i filters the degree-d enumeration down to
    vectors divisible by x_i, preserving the lex-descending order."""
    if ctx.d == 0:
        raise EmptyMatrixError("d = 0: no monomial has any variable as a factor")
    all_monos = enumerate_monomials(ctx.n, ctx.d)
    rows = tuple(
        tuple(m for m in all_monos if m[i] >= 1) for i in range(ctx.n + 1)
    )
    return SymbolicMatrix(ctx, rows)


def build_matrix_by_columns(ctx: VeroneseContext) -> SymbolicMatrix:
    """Column-wise construction used as an independent cross-check: column k
    is the k-th degree-(d-1) vector bumped by each variable in turn."""
    if ctx.d == 0:
        raise EmptyMatrixError("d = 0: no monomial has any variable as a factor")
    bases = enumerate_monomials(ctx.n, ctx.d - 1)
    rows = tuple(
        tuple(base.bump(i) for base in bases) for i in range(ctx.n + 1)
    )
    return SymbolicMatrix(ctx, rows)


def _ordered_pair(a: MultiIndex, b: MultiIndex) -> Pair:
    return (a, b) if tuple(a) >= tuple(b) else (b, a)


@dataclass(frozen=True)
class Binomial2:
    """Canonical balanced binomial quadric z_pos0 z_pos1 - z_neg0 z_neg1.

    Each pair is stored lex-descending and pos is the pair with the
    lex-larger leading vector, so a binomial and its negation share one
    representation.  Balanced distinct pairs never share a leading vector
    (equal leaders force equal partners), making the choice well defined.
    """

    pos: Pair
    neg: Pair

    def __post_init__(self):
        a, b = self.pos
        c, e = self.neg
        if not (len(a) == len(b) == len(c) == len(e)):
            raise ContractError("mixed-length multi-indices in a binomial")
        if a.plus(b) != c.plus(e):
            raise ContractError(f"unbalanced binomial: {a}*{b} vs {c}*{e}")

    @staticmethod
    def canonical(pair1: Pair, pair2: Pair) -> "Binomial2 | None":
        """Canonicalize {pair1} - {pair2}; None when the minor is identically
        zero (equal multisets)."""
        p1 = _ordered_pair(*pair1)
        p2 = _ordered_pair(*pair2)
        if p1 == p2:
            return None
        if tuple(p1[0]) > tuple(p2[0]):
            return Binomial2(p1, p2)
        return Binomial2(p2, p1)

    def coordinates(self) -> tuple[MultiIndex, MultiIndex, MultiIndex, MultiIndex]:
        return (*self.pos, *self.neg)

    def sort_key(self):
        return (self.pos, self.neg)

    def __str__(self) -> str:
        return f"{_product_str(self.pos)} - {_product_str(self.neg)}"


def _product_str(pair: Pair) -> str:
    a, b = pair
    if a == b:
        return f"{a.coordinate_name()}^2"
    return f"{a.coordinate_name()} {b.coordinate_name()}"


_BINOMIAL_RE = re.compile(
    r"(z_\{[\d,]+\})(?:\^2| (z_\{[\d,]+\}))\s*-\s*(z_\{[\d,]+\})(?:\^2| (z_\{[\d,]+\}))"
)


def parse_binomial(text: str) -> Binomial2:
    """Inverse of str(Binomial2); accepts the "z_{a} z_{b} - z_{c} z_{e}"
    form with ^2 for repeated factors."""
    m = _BINOMIAL_RE.fullmatch(text.strip())
    if not m:
        raise ContractError(f"not a binomial quadric: {text!r}")
    a = parse_coordinate_name(m.group(1))
    b = parse_coordinate_name(m.group(2)) if m.group(2) else a
    c = parse_coordinate_name(m.group(3))
    e = parse_coordinate_name(m.group(4)) if m.group(4) else c
    out = Binomial2.canonical((a, b), (c, e))
    if out is None:
        raise ContractError(f"identically zero binomial: {text!r}")
    return out


def minors2(matrix: SymbolicMatrix) -> frozenset[Binomial2]:
    """All distinct canonical 2-minors of the grid.

    Identically-zero minors (symmetric 2x2 submatrices with equal cross
    terms) are dropped; repeats collapse through canonicalization.
    """
    nrows, ncols = matrix.shape
    out = set()
    for i, j in combinations(range(nrows), 2):
        ri, rj = matrix.entries[i], matrix.entries[j]
        for k, l in combinations(range(ncols), 2):
            b = Binomial2.canonical((ri[k], rj[l]), (ri[l], rj[k]))
            if b is not None:
                out.add(b)
    return frozenset(out)


def toric_quadrics(ctx: VeroneseContext) -> frozenset[Binomial2]:
    """Every canonical balanced quadric z_a z_b - z_c z_e on the degree-d
    coordinates: the full catalecticant-style generating set the minors are
    compared against.  Pairs with equal componentwise sums are matched up."""
    if ctx.d < 1:
        raise EmptyMatrixError("d = 0: a single coordinate admits no quadric")
    monos = enumerate_monomials(ctx.n, ctx.d)
    by_sum: dict[tuple[int, ...], list[Pair]] = {}
    for idx, a in enumerate(monos):
        for b in monos[idx:]:
            by_sum.setdefault(tuple(a.plus(b)), []).append((a, b))
    out = set()
    for pairs in by_sum.values():
        for p1, p2 in combinations(pairs, 2):
            b = Binomial2.canonical(p1, p2)
            if b is not None:
                out.add(b)
    return frozenset(out)


def sorted_binomials(binomials: frozenset[Binomial2]) -> list[Binomial2]:
    """Deterministic listing order: lex-descending leading coordinates."""
    return sorted(binomials, key=lambda b: b.sort_key(), reverse=True)


@lru_cache(maxsize=None)
def cached_matrix(ctx: VeroneseContext) -> SymbolicMatrix:
    return build_matrix(ctx)


@lru_cache(maxsize=None)
def cached_minors(ctx: VeroneseContext) -> frozenset[Binomial2]:
    return minors2(cached_matrix(ctx))
