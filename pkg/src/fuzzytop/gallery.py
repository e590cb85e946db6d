"""Fuzzy topologies that separate the notions of lamination, weak inducedness
and inducedness, plus the checks that certify each separation."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Sequence

from .constructions import is_fuzzy_continuous, usual_interval_fuzzy_space
from .fuzzy import (
    ExtensionalFuzzyTopology,
    FuzzyTopology,
    SupClosedSubgrid,
    chi,
    code_is_lsc,
    generate_fuzzy_topology,
    is_laminated,
    omega,
)
from .lattice import FuzzySet, Grid, Rational, points_of, value
from .topology import GroundMap, Topology, all_maps, product_projections, relative_topology


def omega_sub_L(tau: Topology, levels: SupClosedSubgrid) -> ExtensionalFuzzyTopology:
    """Lower semicontinuous functions taking values in ``levels`` only."""
    return omega(tau, levels.q, levels)


def generated_from_sublattice(tau: Topology, levels: SupClosedSubgrid) -> ExtensionalFuzzyTopology:
    """Fuzzy topology generated by the constants in ``levels`` and the
    indicators of the open sets."""
    q, n = levels.q, tau.n
    gens = [FuzzySet.constant(n, v) for v in levels.levels] + list(chi(tau, q))
    return generate_fuzzy_topology(gens, n, q)


def open_subspace_extension(tau: Topology, y: int, q: int) -> ExtensionalFuzzyTopology:
    """Joins ``f v chi_U`` of open sets ``U`` with lsc functions on the open
    subspace ``y`` extended by zero."""
    if y not in tau.opens or y in (0, tau.full):
        raise ValueError("subspace must be a proper nonempty open set")
    pts = points_of(y)
    sub = omega(relative_topology(tau, y), q)
    extended = []
    for c in sub.codes:
        row = [0] * tau.n
        for i, x in enumerate(pts):
            row[x] = c[i]
        extended.append(row)
    codes = {tuple(q if u >> x & 1 else v for x, v in enumerate(row)) for row in extended for u in tau.opens}
    return ExtensionalFuzzyTopology(Grid(q, tau.n), codes)


# --- interval families -------------------------------------------------------

@dataclass(frozen=True)
class IntervalFamily:
    """Nontrivial closed subintervals of [0, 1] with disjoint interiors."""

    intervals: tuple

    def __post_init__(self):
        ivs = tuple(sorted((value(a), value(b)) for a, b in self.intervals))
        if not ivs:
            raise ValueError("interval family is empty")
        for a, b in ivs:
            if not a < b:
                raise ValueError(f"interval [{a}, {b}] is trivial")
        for (_, b1), (a2, _) in zip(ivs, ivs[1:]):
            if a2 < b1:
                raise ValueError("intervals overlap")
        object.__setattr__(self, "intervals", ivs)

    @classmethod
    def of(cls, *intervals: tuple[Rational, Rational]) -> "IntervalFamily":
        return cls(tuple(intervals))

    def grid_codes(self, q: int) -> list[tuple[int, int]]:
        out = []
        for a, b in self.intervals:
            ca, cb = a * q, b * q
            if ca.denominator != 1 or cb.denominator != 1:
                raise ValueError(f"interval [{a}, {b}] is off the grid 1/{q}")
            if cb - ca < 1:
                raise ValueError("interval shorter than one grid step")
            out.append((ca.numerator, cb.numerator))
        return out

    def is_whole(self) -> bool:
        return self.intervals == ((0, 1),)


def delta_J(n: int, family: IntervalFamily, q: int) -> ExtensionalFuzzyTopology:
    """Grid constants together with every grid function valued inside a single
    interval of the family."""
    codes = {(k,) * n for k in range(q + 1)}
    for lo, hi in family.grid_codes(q):
        codes |= set(product(range(lo, hi + 1), repeat=n))
    return ExtensionalFuzzyTopology(Grid(q, n), codes, check=False)


def omega_J(tau: Topology, family: IntervalFamily, q: int) -> ExtensionalFuzzyTopology:
    opens = tau.opens
    base = delta_J(tau.n, family, q)
    return ExtensionalFuzzyTopology(base.grid, {c for c in base.codes if code_is_lsc(c, opens)}, check=False)


def product_pathology(t1: Topology, t2: Topology, q: int) -> ExtensionalFuzzyTopology:
    """Union of the pullbacks of lsc functions valued in [0, 1/2] on the first
    factor and in [1/2, 1] on the second; already a fuzzy topology."""
    if q % 2:
        raise ValueError("the midpoint 1/2 must lie on the grid")
    h = Fraction(1, 2)
    d1 = omega_J(t1, IntervalFamily.of((0, h)), q)
    d2 = omega_J(t2, IntervalFamily.of((h, 1)), q)
    p1, p2 = product_projections(t1.n, t2.n)
    codes = {tuple(c[y] for y in p1.image) for c in d1.codes}
    codes |= {tuple(c[y] for y in p2.image) for c in d2.codes}
    return ExtensionalFuzzyTopology(Grid(q, t1.n * t2.n), codes)


def factors_through(f: Sequence, proj: GroundMap) -> bool:
    """Whether ``f`` is constant on every fibre of ``proj``."""
    seen = {}
    for x, y in enumerate(proj.image):
        if seen.setdefault(y, f[x]) != f[x]:
            return False
    return True


# --- interval assignments ----------------------------------------------------

@dataclass(frozen=True)
class IntervalAssignment:
    """A bijection ``U -> [a(U), b(U)]`` from subbase sets to intervals."""

    subbase: tuple
    family: IntervalFamily

    def __post_init__(self):
        object.__setattr__(self, "subbase", tuple(self.subbase))
        if len(set(self.subbase)) != len(self.subbase):
            raise ValueError("subbase sets must be distinct")
        if len(self.subbase) != len(self.family.intervals):
            raise ValueError("assignment is not a bijection")

    def pairs(self):
        return zip(self.subbase, self.family.intervals)


def delta_rho(assignment: IntervalAssignment, n: int, q: int) -> ExtensionalFuzzyTopology:
    """Grid constants and the adjusted indicators ``c v (d ^ chi_U)`` with
    ``a(U) <= c < d <= b(U)``."""
    codes = {(k,) * n for k in range(q + 1)}
    full = (1 << n) - 1
    for u, (lo, hi) in zip(assignment.subbase, assignment.family.grid_codes(q)):
        if u & ~full:
            raise ValueError("subbase set outside the carrier")
        for c in range(lo, hi + 1):
            for d in range(c + 1, hi + 1):
                codes.add(tuple(d if u >> x & 1 else c for x in range(n)))
    return ExtensionalFuzzyTopology(Grid(q, n), codes)


def continuous_maps_into_usual_interval(delta: FuzzyTopology, q: int) -> list[GroundMap]:
    """Maps onto the grid points of [0, 1] that are fuzzy continuous into the
    fuzzy topology induced by the usual topology."""
    _, d_usual = usual_interval_fuzzy_space(q)
    d_usual = d_usual.to_extensional()
    return [h for h in all_maps(delta.n, q + 1) if is_fuzzy_continuous(h, delta, d_usual).continuous]


def lamination_transfer_check(h: GroundMap, d1: FuzzyTopology, d2: FuzzyTopology) -> bool:
    """A fuzzy continuous map into a laminated space forces the source to be
    laminated too (constants pull back to constants)."""
    if not is_laminated(d2):
        raise ValueError("target fuzzy topology must be laminated")
    return is_laminated(d1) or not is_fuzzy_continuous(h, d1, d2).continuous
