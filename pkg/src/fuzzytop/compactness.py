"""Compactness for fuzzy subsets of a finite topological space.

Every subset of a finite space is compact.  To keep the level-set
definitions testable, compactness is delegated to a
:class:`CompactnessOracle`, which either answers "compact" for everything or
consults a designated family of subsets.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import floor
from typing import Optional, Sequence

from .lattice import (
    ONE,
    ZERO,
    FuzzySet,
    breakpoints,
    Grid,
    full_mask,
    level_above,
    level_at_least,
    refine,
)
from .topology import Topology, product_mask, product_projections


class NotCompact(ValueError):
    """A level set required to be compact is not, according to the oracle."""


@dataclass(frozen=True)
class CompactnessOracle:
    """``family=None`` treats every subset as compact (the honest finite case).

    A designated family must contain every closed subset of each of its
    members and be closed under finite unions, as compact sets always are.
    """

    family: Optional[frozenset] = None

    @classmethod
    def all_compact(cls) -> "CompactnessOracle":
        return cls(None)

    @classmethod
    def designated(cls, family, tau: Topology) -> "CompactnessOracle":
        fam = frozenset(family) | {0}
        closed = tau.closed_sets()
        for k in fam:
            for c in closed:
                if c & ~k == 0 and c not in fam:
                    raise ValueError(f"closed set {c:#b} inside compact {k:#b} is not designated")
        for a in fam:
            for b in fam:
                if a | b not in fam:
                    raise ValueError(f"union {a | b:#b} of designated sets is not designated")
        return cls(fam)

    def is_compact(self, mask: int) -> bool:
        return self.family is None or mask == 0 or mask in self.family


ALL_COMPACT = CompactnessOracle.all_compact()


def is_fuzzy_open(f: Sequence[Fraction], tau: Topology) -> bool:
    """Every strict level set is open."""
    return all(level_above(f, c) in tau.opens for c in breakpoints(f))


def is_fuzzy_closed(f: Sequence[Fraction], tau: Topology) -> bool:
    """Every weak level set is closed."""
    return all(tau.is_closed(level_at_least(f, c)) for c in breakpoints(f))


def is_fuzzy_compact(f: Sequence[Fraction], tau: Topology, oracle: CompactnessOracle = ALL_COMPACT) -> bool:
    """Every weak level set at a positive threshold is compact.

    The level at 0 is the whole carrier and is deliberately not examined.
    """
    return all(oracle.is_compact(level_at_least(f, c)) for c in breakpoints(f) if c > 0)


def levels_below_one_compact(f: Sequence[Fraction], oracle: CompactnessOracle) -> bool:
    """Every weak level set at a threshold strictly inside (0, 1) is compact."""
    return all(oracle.is_compact(level_at_least(f, c)) for c in breakpoints(f) if 0 < c < 1)


@dataclass
class CoverInstance:
    """A fuzzy set ``target`` dominated by the join of fuzzy open ``family``."""

    target: FuzzySet
    family: list
    epsilon: Fraction
    tau: Topology

    def __post_init__(self):
        self.target = FuzzySet(self.target)
        self.family = [FuzzySet(g) for g in self.family]
        self.epsilon = Fraction(self.epsilon)
        if self.epsilon <= 0:
            raise ValueError("epsilon must be positive")
        if not self.family:
            raise ValueError("cover family must be nonempty")
        n = self.tau.n
        if self.target.n != n or any(g.n != n for g in self.family):
            raise ValueError("cover lives on the wrong carrier")
        for i, g in enumerate(self.family):
            if not is_fuzzy_open(g, self.tau):
                raise ValueError(f"family member {i} is not fuzzy open")
        if not dominates(self.family, self.target):
            raise ValueError("family does not cover the target")


def join_at(family: Sequence[FuzzySet], indices, x: int) -> Fraction:
    return max((family[i][x] for i in indices), default=ZERO)


def dominates(family: Sequence[FuzzySet], f: Sequence[Fraction], eps: Fraction = ZERO) -> bool:
    idx = range(len(family))
    return all(join_at(family, idx, x) >= v - eps for x, v in enumerate(f))


def ladder(epsilon: Fraction, q: int = 1) -> list[Fraction]:
    """Decreasing thresholds ``1 = c_0 > ... > c_N = 0`` on a refinement of
    the grid ``1/q`` with every step strictly below ``epsilon / 2``."""
    m = q * (floor(2 / (q * epsilon)) + 1)
    return [Fraction(m - k, m) for k in range(m + 1)]


@dataclass
class SubcoverCertificate:
    indices: tuple
    ladder: list = field(repr=False)
    per_level: dict = field(repr=False)


def extract_subcover(instance: CoverInstance, oracle: CompactnessOracle = ALL_COMPACT) -> SubcoverCertificate:
    """Finite subfamily whose join dominates ``target - epsilon``.

    For each rung ``c_k`` of the ladder the weak level set of the target at
    ``c_{k-1}`` is covered by the strict level sets of the family at ``c_k``;
    members are taken greedily in ascending index order.
    """
    f, gs = instance.target, instance.family
    q = refine(f.denominator, *(g.denominator for g in gs))
    cs = ladder(instance.epsilon, q)
    chosen = set()
    per_level = {}
    for k in range(2, len(cs)):
        upper = level_at_least(f, cs[k - 1])
        if not oracle.is_compact(upper):
            raise NotCompact(f"level set at {cs[k - 1]} is not compact")
        remaining = upper
        picked = []
        for i, g in enumerate(gs):
            if not remaining:
                break
            hit = level_above(g, cs[k]) & remaining
            if hit:
                remaining &= ~hit
                picked.append(i)
        if remaining:
            raise ValueError("family does not cover the target")
        per_level[cs[k]] = tuple(picked)
        chosen.update(picked)
    if not chosen:  # index sets are nonempty
        chosen.add(0)
    return SubcoverCertificate(tuple(sorted(chosen)), cs, per_level)


@dataclass
class ConditionLVerdict:
    holds: bool
    certificate: Optional[SubcoverCertificate]
    premise: bool


def check_condition_L(f: Sequence, family: Sequence, epsilon, tau: Topology,
                      oracle: CompactnessOracle = ALL_COMPACT) -> ConditionLVerdict:
    """Condition L for one fuzzy open family: if the family covers ``f`` then
    some finite subfamily covers ``f - epsilon``.

    The subfamily is produced by :func:`extract_subcover` and re-checked.
    """
    f = FuzzySet(f)
    family = [FuzzySet(g) for g in family]
    if not dominates(family, f):
        return ConditionLVerdict(True, None, False)
    cert = extract_subcover(CoverInstance(f, family, epsilon, tau), oracle)
    sub = [family[i] for i in cert.indices]
    return ConditionLVerdict(dominates(sub, f, Fraction(epsilon)), cert, True)


def product_min(f1: Sequence[Fraction], f2: Sequence[Fraction]) -> FuzzySet:
    """``min(f1 o pi_1, f2 o pi_2)`` on the row-major product."""
    p1, p2 = product_projections(len(f1), len(f2))
    return FuzzySet._trusted(min(f1[a], f2[b]) for a, b in zip(p1.image, p2.image))


def tychonoff_level_identity(f1: Sequence[Fraction], f2: Sequence[Fraction], c) -> bool:
    """The weak level set of the product minimum is the product of the weak
    level sets of the factors."""
    c = Fraction(c)
    if not 0 < c <= 1:
        raise ValueError("threshold must lie in (0, 1]")
    lhs = level_at_least(product_min(f1, f2), c)
    rhs = product_mask(level_at_least(f1, c), level_at_least(f2, c), len(f2))
    return lhs == rhs


def one_point_extension(f: Sequence[Fraction], tau: Topology,
                        oracle: CompactnessOracle = ALL_COMPACT) -> tuple[FuzzySet, Topology]:
    """Add a point ``p`` (index ``n``) whose neighbourhoods have compact
    complement in the original carrier, and extend ``f`` by ``f(p) = 0``."""
    n = tau.n
    p = 1 << n
    full = full_mask(n)
    opens = set(tau.opens)
    opens |= {u | p for u in tau.opens if oracle.is_compact(full & ~u)}
    star = Topology(n + 1, opens)
    return FuzzySet._trusted(list(f) + [ZERO]), star


def one_point_equivalence(f: Sequence[Fraction], tau: Topology,
                          oracle: CompactnessOracle = ALL_COMPACT) -> tuple[bool, bool]:
    """``(f fuzzy compact in X, extension fuzzy closed in X*)``."""
    f_star, star = one_point_extension(f, tau, oracle)
    return is_fuzzy_compact(f, tau, oracle), is_fuzzy_closed(f_star, star)


def compactness_equivalents(tau: Topology, q: int, oracle: CompactnessOracle = ALL_COMPACT) -> tuple:
    """Four statements that coincide for every topological space: the carrier
    is compact; the constant 1 is fuzzy compact; every grid fuzzy closed set is
    fuzzy compact; some positive grid constant satisfies Condition L for every
    cover by grid fuzzy open sets.

    On a finite carrier each is true under the all-compact oracle.
    """
    n = tau.n
    one = FuzzySet.constant(n, ONE)
    grid_fs = [FuzzySet.from_codes(c, q) for c in Grid(q, n).functions()]
    carrier = oracle.is_compact(tau.full)
    top = is_fuzzy_compact(one, tau, oracle)
    closed_compact = all(is_fuzzy_compact(g, tau, oracle) for g in grid_fs if is_fuzzy_closed(g, tau))
    opens = [g for g in grid_fs if is_fuzzy_open(g, tau)]
    eps = Fraction(1, 2 * q)
    cond_l = False
    for k in range(1, q + 1):
        kf = FuzzySet.constant(n, Fraction(k, q))
        try:
            if check_condition_L(kf, opens, eps, tau, oracle).holds:
                cond_l = True
                break
        except NotCompact:
            continue
    return carrier, top, closed_compact, cond_l
