"""Exact membership values, fuzzy sets over a finite carrier, and their
pointwise lattice operations.

Membership values are :class:`fractions.Fraction` instances restricted to
``[0, 1]``.  Crisp subsets of the carrier ``{0, ..., n-1}`` are plain ``int``
bitmasks (bit ``x`` set means point ``x`` belongs to the subset).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import product
from math import lcm
from typing import Iterable, Iterator, Sequence, Union

MAX_GROUND_SIZE = 24

Rational = Union[int, Fraction, str]
ZERO = Fraction(0)
ONE = Fraction(1)


def value(x: Rational) -> Fraction:
    """Coerce ``x`` to a membership value, rejecting anything outside [0, 1].

    Floats are refused: every downstream check is an exact equality.
    """
    if isinstance(x, float):
        raise TypeError(f"float membership value {x!r} is not exact")
    v = Fraction(x)
    if not 0 <= v <= 1:
        raise ValueError(f"membership value {v} outside [0, 1]")
    return v


def rational(x: Rational) -> Fraction:
    """Signed exact rational (slopes and offsets of affine maps)."""
    if isinstance(x, float):
        raise TypeError(f"float {x!r} is not exact")
    return Fraction(x)


def fmt(v: Fraction) -> str:
    """Render a rational as ``"p/q"`` (integers as ``"p"``)."""
    return str(v)


# --- subsets -----------------------------------------------------------------

def full_mask(n: int) -> int:
    return (1 << n) - 1


def mask_of(points: Iterable[int]) -> int:
    m = 0
    for p in points:
        m |= 1 << p
    return m


def points_of(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def check_ground_size(n: int) -> int:
    if not 1 <= n <= MAX_GROUND_SIZE:
        raise ValueError(f"ground size {n} outside 1..{MAX_GROUND_SIZE}")
    return n


# --- grids -------------------------------------------------------------------

@dataclass(frozen=True)
class Grid:
    """The value chain ``{0, 1/q, ..., 1}`` over a carrier of ``n`` points."""

    q: int
    n: int

    def __post_init__(self):
        if self.q < 1:
            raise ValueError("grid denominator must be >= 1")
        check_ground_size(self.n)

    @property
    def levels(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(j, self.q) for j in range(self.q + 1))

    def contains(self, v: Fraction) -> bool:
        return self.q % Fraction(v).denominator == 0

    def functions(self) -> Iterator[tuple[int, ...]]:
        """All grid-valued functions, as integer numerator tuples over ``q``."""
        return product(range(self.q + 1), repeat=self.n)

    def size(self) -> int:
        return (self.q + 1) ** self.n


def refine(*denominators: int) -> int:
    return reduce(lcm, denominators, 1)


# --- fuzzy sets --------------------------------------------------------------

class FuzzySet(tuple):
    """A function from the carrier ``{0, ..., n-1}`` into [0, 1].

    Immutable; hashes and compares like the tuple of its values.
    """

    __slots__ = ()

    def __new__(cls, values: Iterable[Rational]):
        vals = tuple(value(v) for v in values)
        if not vals:
            raise ValueError("a fuzzy set needs at least one point")
        return super().__new__(cls, vals)

    @classmethod
    def _trusted(cls, values: Iterable[Fraction]) -> "FuzzySet":
        return tuple.__new__(cls, tuple(values))

    @classmethod
    def constant(cls, n: int, v: Rational) -> "FuzzySet":
        return cls([value(v)] * n)

    @classmethod
    def indicator(cls, n: int, mask: int) -> "FuzzySet":
        return cls._trusted(ONE if mask >> x & 1 else ZERO for x in range(n))

    @classmethod
    def from_codes(cls, codes: Sequence[int], q: int) -> "FuzzySet":
        return cls._trusted(Fraction(c, q) for c in codes)

    @property
    def n(self) -> int:
        return len(self)

    @property
    def denominator(self) -> int:
        """Smallest grid denominator on which every value lies."""
        return refine(*(v.denominator for v in self))

    def codes(self, q: int) -> tuple[int, ...] | None:
        """Numerators over ``q``, or ``None`` when some value is off that grid."""
        out = []
        for v in self:
            c = v * q
            if c.denominator != 1:
                return None
            out.append(c.numerator)
        return tuple(out)

    def is_constant(self) -> bool:
        return all(v == self[0] for v in self)

    def __add__(self, other):  # tuple concatenation would be silently wrong
        return NotImplemented

    def __repr__(self) -> str:
        return "FuzzySet(" + ", ".join(map(fmt, self)) + ")"


def _same_size(fs: Sequence[FuzzySet]) -> int:
    if not fs:
        raise ValueError("the index set of a family must be nonempty")
    n = len(fs[0])
    if any(len(f) != n for f in fs):
        raise ValueError("fuzzy sets live on carriers of different sizes")
    return n


def level_above(f: Sequence[Fraction], c: Rational) -> int:
    """Strict superlevel set ``{x : f(x) > c}``."""
    c = Fraction(c)
    return mask_of(x for x, v in enumerate(f) if v > c)


def level_at_least(f: Sequence[Fraction], c: Rational) -> int:
    """Weak superlevel set ``{x : f(x) >= c}``."""
    c = Fraction(c)
    return mask_of(x for x, v in enumerate(f) if v >= c)


def pointwise_sup(fs: Iterable[FuzzySet]) -> FuzzySet:
    fs = list(fs)
    _same_size(fs)
    return FuzzySet._trusted(map(max, *fs)) if len(fs) > 1 else fs[0]


def pointwise_inf(fs: Iterable[FuzzySet]) -> FuzzySet:
    fs = list(fs)
    _same_size(fs)
    return FuzzySet._trusted(map(min, *fs)) if len(fs) > 1 else fs[0]


def clip(t: Fraction) -> Fraction:
    return max(ZERO, min(ONE, t))


def affine_adjust(f: Sequence[Fraction], m: Rational, k: Rational) -> FuzzySet:
    """Apply ``t -> max(0, min(1, m*t + k))`` pointwise; requires ``m > 0``."""
    m, k = rational(m), rational(k)
    if m <= 0:
        raise ValueError("affine adjustment needs a positive slope")
    return FuzzySet._trusted(clip(m * v + k) for v in f)


def complement(f: Sequence[Fraction]) -> FuzzySet:
    return FuzzySet._trusted(ONE - v for v in f)


def restrict(f: Sequence[Fraction], points: Sequence[int]) -> FuzzySet:
    return FuzzySet._trusted(f[x] for x in points)


def breakpoints(f: Sequence[Fraction]) -> list[Fraction]:
    """Thresholds in [0, 1] that realise every distinct level set of ``f``.

    Level sets only change at values of ``f``, so the values themselves plus
    one point strictly inside every gap (and 0, 1) are representative for
    both the strict and the weak level families.
    """
    cuts = sorted(set(f) | {ZERO, ONE})
    reps = set(cuts)
    for a, b in zip(cuts, cuts[1:]):
        reps.add((a + b) / 2)
    return sorted(reps)
