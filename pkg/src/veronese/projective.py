"""Exact scalars over Q and prime fields, and projective points.

Rational arithmetic is entrusted to fractions.Fraction (always reduced,
positive denominator).  Prime-field elements are Fp wrappers around a
residue in [0, p) with operator arithmetic, so generic code can mix the two
backends freely; there is deliberately no floating point anywhere.

A ProjectivePoint is an immutable coordinate tuple over one field with at
least one nonzero entry.  Its canonical representative scales the first
nonzero coordinate to 1, which makes exact set operations on points
possible (plain dataclass equality compares canonical tuples).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from random import Random

from .errors import ContractError, InvalidPointError


def is_prime(p: int) -> bool:
    """Deterministic Miller-Rabin, exact for every 64-bit integer."""
    if p < 2:
        return False
    for small in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if p % small == 0:
            return p == small
    d, s = p - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, p)
        if x in (1, p - 1):
            continue
        for _ in range(s - 1):
            x = x * x % p
            if x == p - 1:
                break
        else:
            return False
    return True


class Fp:
    """An element of the prime field with p elements."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        object.__setattr__(self, "value", value % p)
        object.__setattr__(self, "p", p)

    def __setattr__(self, *_):
        raise AttributeError("Fp elements are immutable")

    def _lift(self, other) -> "Fp":
        if isinstance(other, Fp):
            if other.p != self.p:
                raise ContractError(f"mixed moduli {self.p} and {other.p}")
            return other
        if isinstance(other, int):
            return Fp(other, self.p)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        return NotImplemented if other is NotImplemented else Fp(self.value + other.value, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        return NotImplemented if other is NotImplemented else Fp(self.value - other.value, self.p)

    def __rsub__(self, other):
        other = self._lift(other)
        return NotImplemented if other is NotImplemented else Fp(other.value - self.value, self.p)

    def __mul__(self, other):
        other = self._lift(other)
        return NotImplemented if other is NotImplemented else Fp(self.value * other.value, self.p)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return Fp(pow(self.value, k, self.p), self.p)

    def __truediv__(self, other):
        other = self._lift(other)
        return NotImplemented if other is NotImplemented else self * other.inverse()

    def __neg__(self):
        return Fp(-self.value, self.p)

    def inverse(self) -> "Fp":
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse in F_{self.p}")
        return Fp(pow(self.value, self.p - 2, self.p), self.p)

    def __bool__(self) -> bool:
        return self.value != 0

    def __eq__(self, other):
        if isinstance(other, int):
            return self.value == other % self.p
        return isinstance(other, Fp) and self.p == other.p and self.value == other.value

    def __hash__(self):
        return hash((self.value, self.p))

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return f"Fp({self.value}, {self.p})"


Scalar = Fraction | Fp


class RationalField:
    """The field of exact rationals; a stateless singleton (QQ)."""

    name = "rational"

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def from_int(self, k: int) -> Fraction:
        return Fraction(k)

    def coerce(self, v) -> Fraction:
        if isinstance(v, Fraction):
            return v
        if isinstance(v, int):
            return Fraction(v)
        raise ContractError(f"cannot interpret {v!r} as a rational")

    def parse_scalar(self, text: str) -> Fraction:
        try:
            return Fraction(text.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ContractError(f"bad rational {text!r}: {exc}") from None

    def format_scalar(self, x: Fraction) -> str:
        return str(x)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("rational")

    def __repr__(self):
        return "QQ"


@dataclass(frozen=True)
class PrimeField:
    """The field F_p for prime p; primality is checked at construction."""

    p: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ContractError(f"{self.p} is not prime")

    @property
    def name(self) -> str:
        return f"fp:{self.p}"

    @property
    def zero(self) -> Fp:
        return Fp(0, self.p)

    @property
    def one(self) -> Fp:
        return Fp(1, self.p)

    def from_int(self, k: int) -> Fp:
        return Fp(k, self.p)

    def coerce(self, v) -> Fp:
        if isinstance(v, Fp):
            if v.p != self.p:
                raise ContractError(f"element of F_{v.p} used in F_{self.p}")
            return v
        if isinstance(v, int):
            return Fp(v, self.p)
        raise ContractError(f"cannot interpret {v!r} as an element of F_{self.p}")

    def parse_scalar(self, text: str) -> Fp:
        try:
            return Fp(int(text.strip()), self.p)
        except ValueError as exc:
            raise ContractError(f"bad residue {text!r}: {exc}") from None

    def format_scalar(self, x: Fp) -> str:
        return str(x.value)

    def elements(self):
        return (Fp(v, self.p) for v in range(self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = RationalField()

Field = RationalField | PrimeField


def field_from_name(name: str) -> Field:
    """Parse a CLI field designator: "rational" or "fp:<prime>"."""
    if name == "rational":
        return QQ
    if name.startswith("fp:"):
        try:
            p = int(name[3:])
        except ValueError:
            raise ContractError(f"bad field designator {name!r}") from None
        return PrimeField(p)
    raise ContractError(f"bad field designator {name!r}")


@dataclass(frozen=True)
class ProjectivePoint:
    """A point of P^m: m+1 exact coordinates over one field, not all zero.

    Dataclass equality is coordinatewise (useful for sets of canonical
    points); use proj_eq for equality up to a scalar.
    """

    field: Field
    coords: tuple[Scalar, ...]

    def __post_init__(self):
        if len(self.coords) == 0:
            raise InvalidPointError("a point needs at least one coordinate")
        if not any(self.coords):
            raise InvalidPointError("all coordinates are zero")

    @property
    def dim(self) -> int:
        return len(self.coords) - 1

    def __str__(self):
        return format_point(self)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, k: int) -> Scalar:
        return self.coords[k]


def point(field: Field, values) -> ProjectivePoint:
    """Build a point, coercing ints (and field elements) to scalars."""
    return ProjectivePoint(field, tuple(field.coerce(v) for v in values))


def normalize(p: ProjectivePoint) -> ProjectivePoint:
    """Scalar multiple of p whose first nonzero coordinate is 1; idempotent."""
    lead = next(c for c in p.coords if c)
    if lead == p.field.one:
        return p
    inv = lead ** -1
    return ProjectivePoint(p.field, tuple(c * inv for c in p.coords))


def proj_eq(p: ProjectivePoint, q: ProjectivePoint) -> bool:
    """Projective equality: equal canonical representatives."""
    if p.field != q.field:
        raise ContractError(f"field mismatch: {p.field!r} vs {q.field!r}")
    if p.dim != q.dim:
        raise ContractError(f"dimension mismatch: {p.dim} vs {q.dim}")
    return normalize(p).coords == normalize(q).coords


def enumerate_projective_points(m: int, q: int | PrimeField):
    """Stream every point of P^m(F_q) exactly once, canonically.

    Points are grouped by the position of the leading 1, last position
    first, with the free tail coordinates in ascending lexicographic order;
    (q^(m+1) - 1)/(q - 1) points in total.  The grouping makes the stream
    restartable and partitionable.
    """
    field = q if isinstance(q, PrimeField) else PrimeField(q)
    if m < 0:
        raise ContractError(f"ambient dimension must be >= 0, got {m}")
    zero, one = field.zero, field.one
    for lead in range(m, -1, -1):
        head = (zero,) * lead + (one,)
        for tail in product(range(field.p), repeat=m - lead):
            yield ProjectivePoint(field, head + tuple(Fp(t, field.p) for t in tail))


def count_projective_points(m: int, q: int) -> int:
    return (q ** (m + 1) - 1) // (q - 1)


def format_point(p: ProjectivePoint) -> str:
    inner = " : ".join(p.field.format_scalar(c) for c in p.coords)
    return f"[{inner}]"


def parse_point(field: Field, text: str) -> ProjectivePoint:
    """Parse "[a : b : c]"; rational entries may be "p/q", prime-field
    entries are decimal residues."""
    body = text.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise ContractError(f"point must be bracketed, got {text!r}")
    parts = body[1:-1].split(":")
    if not parts or any(not s.strip() for s in parts):
        raise ContractError(f"malformed point {text!r}")
    return ProjectivePoint(field, tuple(field.parse_scalar(s) for s in parts))


def random_point(rng: Random, field: Field, dim: int, lead_zeros: int = 0) -> ProjectivePoint:
    """Seeded random point of P^dim with a prescribed leading-zero pattern.

    The first lead_zeros coordinates are 0, the next is forced nonzero, and
    the rest are free (zeros allowed).  Rational entries use numerators and
    denominators in [-99, 99] with zero denominators excluded.
    """
    if not 0 <= lead_zeros <= dim:
        raise ContractError(f"lead_zeros {lead_zeros} out of range for dim {dim}")

    def draw(nonzero: bool) -> Scalar:
        if isinstance(field, PrimeField):
            lo = 1 if nonzero else 0
            return Fp(rng.randint(lo, field.p - 1), field.p)
        num = rng.randint(1, 99) * rng.choice((1, -1)) if nonzero else rng.randint(-99, 99)
        den = rng.randint(1, 99) * rng.choice((1, -1))
        return Fraction(num, den)

    coords = [field.zero] * lead_zeros
    coords.append(draw(nonzero=True))
    coords.extend(draw(nonzero=False) for _ in range(dim - lead_zeros))
    return ProjectivePoint(field, tuple(coords))
