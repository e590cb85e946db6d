"""Finite crisp topologies stored extensionally as families of bitmasks."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

from .lattice import MAX_GROUND_SIZE, check_ground_size, full_mask, mask_of, points_of


def _close(family: set[int], op) -> set[int]:
    """Saturate ``family`` under a binary operation."""
    family = set(family)
    frontier = list(family)
    while frontier:
        fresh = []
        snapshot = list(family)
        for a in frontier:
            for b in snapshot:
                c = op(a, b)
                if c not in family:
                    family.add(c)
                    fresh.append(c)
        frontier = fresh
    return family


def _and(a, b):
    return a & b


def _or(a, b):
    return a | b


def is_topology(family: Iterable[int], n: int) -> bool:
    fam = set(family)
    full = full_mask(n)
    if 0 not in fam or full not in fam:
        return False
    if any(u & ~full for u in fam):
        return False
    return all(a | b in fam and a & b in fam for a in fam for b in fam)


@dataclass(frozen=True)
class Topology:
    """A topology on ``{0, ..., n-1}``; ``opens`` holds every open set."""

    n: int
    opens: frozenset

    def __post_init__(self):
        check_ground_size(self.n)
        object.__setattr__(self, "opens", frozenset(self.opens))
        if not is_topology(self.opens, self.n):
            raise ValueError("family is not a topology")

    @classmethod
    def _trusted(cls, n: int, opens: Iterable[int]) -> "Topology":
        t = object.__new__(cls)
        object.__setattr__(t, "n", n)
        object.__setattr__(t, "opens", frozenset(opens))
        return t

    @classmethod
    def discrete(cls, n: int) -> "Topology":
        return cls._trusted(n, range(1 << n))

    @classmethod
    def indiscrete(cls, n: int) -> "Topology":
        return cls._trusted(n, {0, full_mask(n)})

    @classmethod
    def sierpinski(cls) -> "Topology":
        """Two points with ``{1}`` the only proper nonempty open set."""
        return cls._trusted(2, {0, 0b10, 0b11})

    @property
    def full(self) -> int:
        return full_mask(self.n)

    def sorted_opens(self) -> list[int]:
        return sorted(self.opens, key=lambda u: (bin(u).count("1"), u))

    def closed_sets(self) -> frozenset:
        return frozenset(self.full & ~u for u in self.opens)

    def clopens(self) -> list[int]:
        closed = self.closed_sets()
        return sorted(u for u in self.opens if u in closed)

    def is_open(self, mask: int) -> bool:
        return mask in self.opens

    def is_closed(self, mask: int) -> bool:
        return self.full & ~mask in self.opens

    def neighbourhood(self, x: int) -> int:
        """The smallest open set containing ``x``."""
        nb = self.full
        for u in self.opens:
            if u >> x & 1:
                nb &= u
        return nb

    def as_lists(self) -> list[list[int]]:
        return [points_of(u) for u in self.sorted_opens()]

    def __repr__(self) -> str:
        return f"Topology(n={self.n}, opens={self.as_lists()})"


def generate_topology(subbase: Iterable[int], n: int) -> Topology:
    """Smallest topology containing ``subbase``.

    Finite intersections first, then unions; the union-closure of an
    intersection-closed family is again intersection-closed by distributivity.
    """
    check_ground_size(n)
    full = full_mask(n)
    sub = set(subbase)
    if any(u & ~full for u in sub):
        raise ValueError("subbase element outside the carrier")
    base = _close(sub | {full}, _and)
    return Topology._trusted(n, _close(base, _or) | {0})


@dataclass(frozen=True)
class GroundMap:
    """A total function from ``{0..len(image)-1}`` into ``{0..target-1}``."""

    target: int
    image: tuple

    def __post_init__(self):
        object.__setattr__(self, "image", tuple(self.image))
        if any(not 0 <= y < self.target for y in self.image):
            raise ValueError("map image outside the target carrier")

    @classmethod
    def identity(cls, n: int) -> "GroundMap":
        return cls(n, tuple(range(n)))

    @classmethod
    def constant(cls, source: int, target: int, y: int) -> "GroundMap":
        return cls(target, (y,) * source)

    @property
    def source(self) -> int:
        return len(self.image)

    def preimage(self, mask: int) -> int:
        return mask_of(x for x, y in enumerate(self.image) if mask >> y & 1)

    def __call__(self, x: int) -> int:
        return self.image[x]


def all_maps(source: int, target: int):
    for image in product(range(target), repeat=source):
        yield GroundMap(target, image)


def _compress(mask: int, points: Sequence[int]) -> int:
    return mask_of(i for i, p in enumerate(points) if mask >> p & 1)


def relative_topology(tau: Topology, y: int) -> Topology:
    """Subspace topology on ``y``, re-indexed onto its points in ascending order."""
    if y == 0:
        raise ValueError("subspace must be nonempty")
    pts = points_of(y)
    if pts[-1] >= tau.n:
        raise ValueError("subspace outside the carrier")
    return Topology._trusted(len(pts), {_compress(u & y, pts) for u in tau.opens})


def product_projections(n1: int, n2: int) -> tuple[GroundMap, GroundMap]:
    """Projections of the row-major product: point ``x1*n2 + x2``."""
    pts = [(a, b) for a in range(n1) for b in range(n2)]
    return GroundMap(n1, [a for a, _ in pts]), GroundMap(n2, [b for _, b in pts])


def product_mask(u: int, v: int, n2: int) -> int:
    return mask_of(a * n2 + b for a in points_of(u) for b in points_of(v))


def product_topology(t1: Topology, t2: Topology) -> Topology:
    n = t1.n * t2.n
    if n > MAX_GROUND_SIZE:
        raise ValueError("product carrier exceeds the ground size cap")
    p1, p2 = product_projections(t1.n, t2.n)
    sub = {p1.preimage(u) for u in t1.opens} | {p2.preimage(v) for v in t2.opens}
    return generate_topology(sub, n)


def coproduct_topology(t1: Topology, t2: Topology) -> Topology:
    n = t1.n + t2.n
    if n > MAX_GROUND_SIZE:
        raise ValueError("coproduct carrier exceeds the ground size cap")
    return Topology._trusted(n, {u | v << t1.n for u in t1.opens for v in t2.opens})


def coproduct_injections(n1: int, n2: int) -> tuple[int, int]:
    """Masks of the two summands inside the disjoint union."""
    return full_mask(n1), full_mask(n2) << n1


def is_continuous(h: GroundMap, t1: Topology, t2: Topology) -> bool:
    _check_map(h, t1, t2)
    return all(h.preimage(u) in t1.opens for u in t2.opens)


def is_quotient_map(h: GroundMap, t1: Topology, t2: Topology) -> bool:
    _check_map(h, t1, t2)
    return all((u in t2.opens) == (h.preimage(u) in t1.opens) for u in range(1 << t2.n))


def _check_map(h: GroundMap, t1: Topology, t2: Topology):
    if h.source != t1.n or h.target != t2.n:
        raise ValueError("map does not match the carriers")


def is_hausdorff(tau: Topology) -> bool:
    opens = list(tau.opens)
    for x in range(tau.n):
        for y in range(x + 1, tau.n):
            if not any(u >> x & 1 and v >> y & 1 and not u & v for u in opens for v in opens):
                return False
    return True


def is_connected(tau: Topology) -> bool:
    return all(w in (0, tau.full) for w in tau.clopens())


def is_completely_regular(tau: Topology) -> bool:
    """Points and closed sets not containing them are separated by continuous
    maps into [0, 1].

    On a finite carrier the fibres of such a map are clopen, so it is enough
    to look for a clopen set containing the point and missing the closed set.
    """
    clopens = tau.clopens()
    for c in tau.closed_sets():
        for x in range(tau.n):
            if c >> x & 1:
                continue
            if not any(w >> x & 1 and not w & c for w in clopens):
                return False
    return True


def lower_topology_grid(q: int) -> Topology:
    """The lower topology on the chain ``0 < 1/q < ... < 1``.

    Point ``j`` stands for ``j/q``; the open sets are the strict up-sets
    ``{v : v > c}`` together with the whole chain.
    """
    if q < 1:
        raise ValueError("grid denominator must be >= 1")
    n = q + 1
    opens = {mask_of(range(j + 1, n)) for j in range(n)} | {full_mask(n)}
    return Topology._trusted(n, opens)
