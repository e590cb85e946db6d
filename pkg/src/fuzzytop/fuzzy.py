"""Fuzzy topologies on a finite carrier and the functors linking them to
crisp topologies.

Extensional fuzzy topologies keep their members as integer numerator tuples
over a common grid denominator ``q``; a member ``c`` stands for the fuzzy set
``x -> c[x] / q``.  Strict level sets of such a member only change at grid
points, so thresholds ``0, 1/q, ..., (q-1)/q`` see every one of them.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Iterable, Iterator, Sequence, Union

from .lattice import (
    ONE,
    ZERO,
    FuzzySet,
    Grid,
    Rational,
    full_mask,
    level_above,
    level_at_least,
    mask_of,
    points_of,
    refine,
    value,
)
from .topology import Topology, generate_topology

Code = tuple  # tuple[int, ...]: numerators over the grid denominator


# --- code-level helpers ------------------------------------------------------

def code_max(a: Code, b: Code) -> Code:
    return tuple(map(max, a, b))


def code_min(a: Code, b: Code) -> Code:
    return tuple(map(min, a, b))


def code_level(f: Code, j: int) -> int:
    """Strict level set ``{x : f[x] > j}`` of a code."""
    m = 0
    for x, v in enumerate(f):
        if v > j:
            m |= 1 << x
    return m


def code_levels(f: Code) -> set[int]:
    """Every strict level set of a code (including the whole carrier)."""
    return {code_level(f, j) for j in set(f)} | {full_mask(len(f))}


def code_is_lsc(f: Code, opens) -> bool:
    return all(code_level(f, j) in opens for j in set(f))


def indicator_code(n: int, mask: int, q: int) -> Code:
    return tuple(q if mask >> x & 1 else 0 for x in range(n))


def _saturate(items: set, op) -> set:
    items = set(items)
    frontier = list(items)
    while frontier:
        fresh = []
        snapshot = list(items)
        for a in frontier:
            for b in snapshot:
                c = op(a, b)
                if c not in items:
                    items.add(c)
                    fresh.append(c)
        frontier = fresh
    return items


def close_codes(codes: Iterable[Code]) -> set:
    """Close under pairwise min, then pairwise max.

    Joins of meets are meet-closed because the pointwise lattice on a chain
    is distributive, so the two passes reach the fixpoint.
    """
    return _saturate(_saturate(set(codes), code_min), code_max)


def codes_form_fuzzy_topology(codes: set, n: int, q: int) -> bool:
    if (0,) * n not in codes or (q,) * n not in codes:
        return False
    items = list(codes)
    for i, a in enumerate(items):
        for b in items[i + 1:]:
            if code_max(a, b) not in codes or code_min(a, b) not in codes:
                return False
    return True


def _codes_of(fs: Iterable, q: int) -> set:
    out = set()
    for f in fs:
        c = (f if isinstance(f, FuzzySet) else FuzzySet(f)).codes(q)
        if c is None:
            raise ValueError(f"{f!r} is not on the grid 1/{q}")
        out.add(c)
    return out


# --- fuzzy topologies --------------------------------------------------------

class ExtensionalFuzzyTopology:
    """A Chang fuzzy topology given by its (finite) set of grid-valued members."""

    __slots__ = ("grid", "codes", "_members")

    def __init__(self, grid: Grid, codes: Iterable, *, check: bool = True):
        self.grid = grid
        self.codes = frozenset(tuple(c) for c in codes)
        self._members = None
        if check:
            q, n = grid.q, grid.n
            for c in self.codes:
                if len(c) != n or any(not 0 <= v <= q for v in c):
                    raise ValueError(f"member {c} does not fit the grid")
            if not codes_form_fuzzy_topology(set(self.codes), n, q):
                raise ValueError("members do not form a fuzzy topology")

    @classmethod
    def from_members(cls, members: Iterable[Sequence[Rational]], q: int | None = None):
        fs = [FuzzySet(f) for f in members]
        if not fs:
            raise ValueError("a fuzzy topology has at least the constants 0 and 1")
        if q is None:
            q = refine(*(f.denominator for f in fs))
        return cls(Grid(q, fs[0].n), _codes_of(fs, q))

    @property
    def q(self) -> int:
        return self.grid.q

    @property
    def n(self) -> int:
        return self.grid.n

    def sorted_codes(self) -> list:
        return sorted(self.codes)

    @property
    def members(self) -> tuple:
        if self._members is None:
            self._members = tuple(FuzzySet.from_codes(c, self.q) for c in self.sorted_codes())
        return self._members

    def __iter__(self) -> Iterator[FuzzySet]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.codes)

    def __contains__(self, f) -> bool:
        c = (f if isinstance(f, FuzzySet) else FuzzySet(f)).codes(self.q)
        return c is not None and c in self.codes

    def regrid(self, q: int) -> "ExtensionalFuzzyTopology":
        """Same members, expressed over a finer denominator ``q``."""
        if q % self.q:
            raise ValueError("can only refine to a multiple of the current grid")
        s = q // self.q
        return ExtensionalFuzzyTopology(Grid(q, self.n), {tuple(v * s for v in c) for c in self.codes},
                                        check=False)

    def constants(self) -> list[Fraction]:
        return [Fraction(c[0], self.q) for c in self.sorted_codes() if len(set(c)) == 1]

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExtensionalFuzzyTopology):
            return NotImplemented
        if self.n != other.n:
            return False
        if self.q == other.q:
            return self.codes == other.codes
        q = refine(self.q, other.q)
        return self.regrid(q).codes == other.regrid(q).codes

    def __le__(self, other) -> bool:
        return all(f in other for f in self.members)

    def __hash__(self):
        return hash((self.n, frozenset(self.members)))

    def __repr__(self) -> str:
        return f"ExtensionalFuzzyTopology(n={self.n}, q={self.q}, size={len(self)})"


class InducedFuzzyTopology:
    """All lower semicontinuous fuzzy sets of a crisp topology, held
    intensionally.  ``q`` only matters when members are enumerated."""

    __slots__ = ("base", "grid")

    def __init__(self, base: Topology, q: int = 1):
        self.base = base
        self.grid = Grid(q, base.n)

    @property
    def q(self) -> int:
        return self.grid.q

    @property
    def n(self) -> int:
        return self.base.n

    def __contains__(self, f) -> bool:
        return membership(self, f)

    @property
    def codes(self) -> frozenset:
        return self.to_extensional().codes

    @property
    def members(self) -> tuple:
        return self.to_extensional().members

    def __iter__(self):
        return iter(self.members)

    def to_extensional(self) -> ExtensionalFuzzyTopology:
        return omega(self.base, self.q)

    def __repr__(self) -> str:
        return f"InducedFuzzyTopology(base={self.base!r}, q={self.q})"


FuzzyTopology = Union[ExtensionalFuzzyTopology, InducedFuzzyTopology]


def membership(delta: InducedFuzzyTopology, f: Sequence) -> bool:
    """Whether every strict level set of ``f`` is open in the base topology."""
    f = FuzzySet(f) if not isinstance(f, FuzzySet) else f
    if f.n != delta.n:
        raise ValueError("fuzzy set lives on a different carrier")
    opens = delta.base.opens
    return all(level_above(f, c) in opens for c in set(f))


@dataclass(frozen=True)
class SupClosedSubgrid:
    """Levels ``L`` inside ``{0, 1/q, ..., 1}`` containing 0 and 1.

    Every subset of a finite chain is closed under nonempty suprema.
    """

    q: int
    codes: tuple

    def __post_init__(self):
        cs = tuple(sorted(set(self.codes)))
        if not cs or cs[0] != 0 or cs[-1] != self.q or any(not 0 <= c <= self.q for c in cs):
            raise ValueError("levels must lie on the grid and contain 0 and 1")
        object.__setattr__(self, "codes", cs)

    @classmethod
    def of(cls, levels: Iterable[Rational], q: int | None = None) -> "SupClosedSubgrid":
        vals = sorted({value(v) for v in levels})
        if q is None:
            q = refine(*(v.denominator for v in vals))
        cs = []
        for v in vals:
            c = v * q
            if c.denominator != 1:
                raise ValueError(f"level {v} is off the grid 1/{q}")
            cs.append(c.numerator)
        return cls(q, tuple(cs))

    @classmethod
    def full(cls, q: int) -> "SupClosedSubgrid":
        return cls(q, tuple(range(q + 1)))

    @property
    def levels(self) -> tuple:
        return tuple(Fraction(c, self.q) for c in self.codes)

    def is_full(self) -> bool:
        return len(self.codes) == self.q + 1


# --- functors ----------------------------------------------------------------

def omega(tau: Topology, q: int = 1, levels: SupClosedSubgrid | None = None) -> ExtensionalFuzzyTopology:
    """Lower semicontinuous functions with values in ``levels`` (the whole grid
    ``1/q`` by default)."""
    if levels is None:
        levels = SupClosedSubgrid.full(q)
    elif levels.q != q:
        raise ValueError("levels were built for a different grid")
    opens = tau.opens
    codes = {f for f in product(levels.codes, repeat=tau.n) if code_is_lsc(f, opens)}
    return ExtensionalFuzzyTopology(Grid(q, tau.n), codes, check=False)


def subbase(delta: FuzzyTopology) -> set[int]:
    """All strict level sets of all members."""
    if isinstance(delta, InducedFuzzyTopology):
        return set(delta.base.opens)
    out = set()
    for c in delta.codes:
        out |= code_levels(c)
    return out


def iota(delta: FuzzyTopology) -> Topology:
    """Coarsest topology making every member lower semicontinuous."""
    if isinstance(delta, InducedFuzzyTopology):
        return delta.base
    return generate_topology(subbase(delta), delta.n)


def chi(tau: Topology, q: int = 1) -> ExtensionalFuzzyTopology:
    """Characteristic functions of the open sets."""
    return ExtensionalFuzzyTopology(Grid(q, tau.n), {indicator_code(tau.n, u, q) for u in tau.opens},
                                    check=False)


def chi_star(delta: FuzzyTopology) -> Topology:
    """Subsets whose characteristic function is a member."""
    if isinstance(delta, InducedFuzzyTopology):
        return delta.base
    q, n = delta.q, delta.n
    opens = set()
    for c in delta.codes:
        if all(v in (0, q) for v in c):
            opens.add(mask_of(x for x, v in enumerate(c) if v == q))
    return Topology._trusted(n, opens)


def generate_fuzzy_topology(generators: Iterable, n: int, q: int, mode: str = "chang") -> ExtensionalFuzzyTopology:
    """Least fuzzy topology containing ``generators``.

    ``mode="laminated"`` also adds every grid constant.
    """
    if mode not in ("chang", "laminated"):
        raise ValueError(f"unknown generation mode {mode!r}")
    codes = _codes_of(generators, q)
    if any(len(c) != n for c in codes):
        raise ValueError("generator lives on a different carrier")
    consts = range(q + 1) if mode == "laminated" else (0, q)
    codes |= {(k,) * n for k in consts}
    return ExtensionalFuzzyTopology(Grid(q, n), close_codes(codes), check=False)


# --- classification ----------------------------------------------------------

@dataclass
class ClassificationReport:
    is_chang: bool
    is_laminated: bool
    weakly_induced_conditions: tuple  # the four equivalent forms, in order
    is_grid_affine_invariant: bool
    is_grid_rescaling_closed: bool
    is_induced_on_grid: bool
    witnesses: dict = field(default_factory=dict)

    @property
    def consistent(self) -> bool:
        return len(set(self.weakly_induced_conditions)) == 1

    @property
    def is_weakly_induced(self) -> bool:
        if not self.consistent:
            raise RuntimeError(f"weak-inducedness conditions disagree: {self.weakly_induced_conditions}")
        return self.weakly_induced_conditions[0]

    def signature(self) -> tuple:
        return (self.is_laminated, self.is_weakly_induced, self.is_grid_affine_invariant,
                self.is_grid_rescaling_closed, self.is_induced_on_grid)


SIGNATURE_FIELDS = ("laminated", "weakly_induced", "grid_affine_invariant",
                    "grid_rescaling_closed", "induced_on_grid")


def grid_affine_tables(q: int) -> list[tuple]:
    """Clipped affine maps sending one grid interval onto another, tabulated on
    the grid points; ``None`` marks a grid point sent off the grid."""
    intervals = [(a, b) for a in range(q + 1) for b in range(a + 1, q + 1)]
    tables = set()
    for a, b in intervals:
        for a2, b2 in intervals:
            row = []
            for t in range(q + 1):
                y = Fraction(a2) + Fraction(b2 - a2, b - a) * (t - a)
                y = min(max(y, 0), q)
                row.append(y.numerator if y.denominator == 1 else None)
            tables.add(tuple(row))
    return sorted(tables, key=lambda r: tuple(-1 if v is None else v for v in r))


def _affine_violation(codes: frozenset, q: int):
    for table in grid_affine_tables(q):
        for f in sorted(codes):
            img = [table[v] for v in f]
            if None in img:
                continue
            g = tuple(img)
            if g not in codes:
                return f, table, g
    return None


def _rescaling_violation(codes: frozenset, q: int):
    for f in sorted(codes):
        lo, hi = min(f), max(f)
        for a in range(lo + 1):
            for b in range(max(hi, a + 1), q + 1):
                scaled = [Fraction((v - a) * q, b - a) for v in f]
                if any(s.denominator != 1 for s in scaled):
                    continue
                g = tuple(s.numerator for s in scaled)
                if g not in codes:
                    return f, (a, b), g
    return None


def classify(delta: ExtensionalFuzzyTopology) -> ClassificationReport:
    if isinstance(delta, InducedFuzzyTopology):
        delta = delta.to_extensional()
    q, n, codes = delta.q, delta.n, delta.codes
    w = {}
    chang = codes_form_fuzzy_topology(set(codes), n, q)

    missing = [k for k in range(q + 1) if (k,) * n not in codes]
    laminated = not missing
    if missing:
        w["laminated"] = Fraction(missing[0], q)

    top = iota(delta)
    cstar = chi_star(delta)
    cond_a = cstar.opens == top.opens
    cond_b = all(indicator_code(n, u, q) in codes for u in top.opens)
    cond_c = all(code_is_lsc(f, cstar.opens) for f in codes)
    cond_d = True
    for f in sorted(codes):
        for j in sorted(set(f)):
            u = code_level(f, j)
            if indicator_code(n, u, q) not in codes:
                cond_d = False
                w["weakly_induced"] = (FuzzySet.from_codes(f, q), Fraction(j, q), u)
                break
        if not cond_d:
            break

    bad = _affine_violation(codes, q)
    if bad:
        f, table, g = bad
        w["grid_affine_invariant"] = (FuzzySet.from_codes(f, q), FuzzySet.from_codes(g, q))
    rescale = laminated and _rescaling_violation(codes, q) is None

    induced = omega(top, q)
    if induced.codes != codes:
        extra = min(induced.codes - codes)
        w["induced_on_grid"] = FuzzySet.from_codes(extra, q)
    return ClassificationReport(
        is_chang=chang,
        is_laminated=laminated,
        weakly_induced_conditions=(cond_a, cond_b, cond_c, cond_d),
        is_grid_affine_invariant=bad is None,
        is_grid_rescaling_closed=rescale,
        is_induced_on_grid=induced.codes == codes,
        witnesses=w,
    )


# --- proof constructions -----------------------------------------------------

def subbase_witness(delta: FuzzyTopology, x: int, u: int) -> list[tuple[FuzzySet, Fraction]]:
    """Members ``g_i`` and thresholds ``a_i`` with ``x`` in the intersection of
    the level sets ``{g_i > a_i}``, that intersection lying inside ``u``.

    Greedy over members in canonical order, then redundant pairs are dropped.
    """
    if not u >> x & 1:
        raise ValueError(f"point {x} is not in the target set")
    q = delta.q
    cands = []
    for c in sorted(delta.codes):
        for j in range(c[x]):
            cands.append((c, j, code_level(c, j)))
    current = full_mask(delta.n)
    chosen = []
    for cand in cands:
        if current & ~u == 0:
            break
        if current & cand[2] != current:
            current &= cand[2]
            chosen.append(cand)
    if current & ~u:
        raise ValueError("target set is not a neighbourhood of the point in the generated topology")
    for cand in list(chosen):
        rest = [c for c in chosen if c is not cand]
        meet = full_mask(delta.n)
        for c in rest:
            meet &= c[2]
        if meet & ~u == 0:
            chosen = rest
    return [(FuzzySet.from_codes(c, q), Fraction(j, q)) for c, j, _ in chosen]


def witness_bump(delta: FuzzyTopology, x: int, u: int) -> FuzzySet:
    """A fuzzy set equal to 1 at ``x`` and 0 off ``u``, assembled from members
    by truncating each witness to ``[a_i, g_i(x)]`` and rescaling to [0, 1]."""
    pieces = subbase_witness(delta, x, u)
    result = [ONE] * delta.n
    for g, a in pieces:
        b = g[x]
        h = [max(a, min(b, v)) for v in g]
        fi = [(v - a) / (b - a) for v in h]
        result = [min(r, v) for r, v in zip(result, fi)]
    return FuzzySet._trusted(result)


def reconstruction_pieces(delta: FuzzyTopology, f: Sequence, levels: Iterable[Rational] | None = None):
    """Pairs ``(c, U)`` whose truncated indicators ``c ^ chi_U`` join to the
    reconstruction; ``U`` is the weak level set at ``c`` (each positive level
    of a finite chain has a gap just below it)."""
    f = f if isinstance(f, FuzzySet) else FuzzySet(f)
    top = iota(delta)
    if not all(level_above(f, c) in top.opens for c in set(f)):
        raise ValueError("fuzzy set is not lower semicontinuous for the generated topology")
    if levels is None:
        levels = delta.grid.levels
    return [(c, level_at_least(f, c)) for c in sorted({value(v) for v in levels}) if c > 0]


def reconstruct_lsc(delta: FuzzyTopology, f: Sequence, levels: Iterable[Rational] | None = None) -> FuzzySet:
    """Rebuild ``f`` as the join of ``c ^ chi_{f >= c}`` over the level grid."""
    n = delta.n
    out = [ZERO] * n
    for c, u in reconstruction_pieces(delta, f, levels):
        for x in points_of(u):
            out[x] = max(out[x], c)
    return FuzzySet._trusted(out)


def reconstruction_in(delta: FuzzyTopology, f: Sequence, levels: Iterable[Rational] | None = None) -> bool:
    """Whether every truncated indicator used by the reconstruction is a member
    (so the reconstruction itself is one)."""
    n = delta.n
    for c, u in reconstruction_pieces(delta, f, levels):
        piece = FuzzySet._trusted(c if u >> x & 1 else ZERO for x in range(n))
        if piece not in delta:
            return False
    return True


def is_laminated(delta: FuzzyTopology) -> bool:
    """Every grid constant is a member."""
    if isinstance(delta, InducedFuzzyTopology):
        return True
    n = delta.n
    return all((k,) * n in delta.codes for k in range(delta.q + 1))


def is_weakly_induced(delta: FuzzyTopology) -> bool:
    """The indicator of every strict level set of every member is a member."""
    if isinstance(delta, InducedFuzzyTopology):
        return True
    n, q, codes = delta.n, delta.q, delta.codes
    return all(indicator_code(n, u, q) in codes for f in codes for u in code_levels(f))
