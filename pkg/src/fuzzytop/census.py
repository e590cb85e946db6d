"""Exhaustive enumeration of topologies and fuzzy topologies on tiny
carriers, seeded random instances, and the classification census."""
from __future__ import annotations

import random
import time
from collections import Counter
from dataclasses import dataclass, field

from .fuzzy import (
    SIGNATURE_FIELDS,
    ExtensionalFuzzyTopology,
    classify,
    close_codes,
    code_levels,
    codes_form_fuzzy_topology,
    indicator_code,
    iota,
    omega,
)
from .lattice import Grid, full_mask
from .topology import Topology, generate_topology, is_topology

MAX_TOPOLOGY_N = 4
MAX_FUZZY_FUNCTIONS = 9


class EquivalenceViolation(AssertionError):
    """A fuzzy topology where lamination plus weak inducedness and
    inducedness on the grid disagree."""

    def __init__(self, report: "CensusReport"):
        super().__init__(f"{len(report.violations)} equivalence violations at n={report.n}, q={report.q}")
        self.report = report


def _canonical(t: Topology):
    return (len(t.opens), sorted(t.opens))


def enumerate_topologies(n: int) -> list[Topology]:
    """All labelled topologies on ``n`` points, by filtering every family of
    proper nonempty subsets."""
    if not 1 <= n <= MAX_TOPOLOGY_N:
        raise ValueError(f"topology enumeration supports 1 <= n <= {MAX_TOPOLOGY_N}")
    full = full_mask(n)
    middle = list(range(1, full))
    out = []
    for bits in range(1 << len(middle)):
        fam = {0, full} | {u for i, u in enumerate(middle) if bits >> i & 1}
        if is_topology(fam, n):
            out.append(Topology._trusted(n, fam))
    return sorted(out, key=_canonical)


def enumerate_topologies_by_preorders(n: int) -> list[Topology]:
    """Finite topologies correspond to preorders via their up-sets; this
    builds every transitive reflexive relation and collects the up-set
    topologies."""
    if not 1 <= n <= MAX_TOPOLOGY_N:
        raise ValueError(f"topology enumeration supports 1 <= n <= {MAX_TOPOLOGY_N}")
    pairs = [(a, b) for a in range(n) for b in range(n) if a != b]
    seen = set()
    for bits in range(1 << len(pairs)):
        le = {(a, a) for a in range(n)} | {p for i, p in enumerate(pairs) if bits >> i & 1}
        if any((a, d) not in le for a, b in le for c, d in le if b == c):
            continue
        ups = frozenset(
            u for u in range(1 << n)
            if all(u >> b & 1 for a, b in le if u >> a & 1)
        )
        seen.add(ups)
    return sorted((Topology._trusted(n, o) for o in seen), key=_canonical)


def _check_fuzzy_bound(n: int, q: int):
    if (q + 1) ** n > MAX_FUZZY_FUNCTIONS:
        raise ValueError(f"(q+1)^n = {(q + 1) ** n} exceeds the exhaustive bound {MAX_FUZZY_FUNCTIONS}")


def _fuzzy_key(d: ExtensionalFuzzyTopology):
    return (len(d.codes), d.sorted_codes())


def enumerate_fuzzy_topologies(n: int, q: int) -> list[ExtensionalFuzzyTopology]:
    """Every set of grid functions containing 0 and 1 and closed under
    pointwise max and min."""
    _check_fuzzy_bound(n, q)
    grid = Grid(q, n)
    zero, one = (0,) * n, (q,) * n
    middle = [c for c in grid.functions() if c not in (zero, one)]
    out = []
    for bits in range(1 << len(middle)):
        codes = {zero, one} | {c for i, c in enumerate(middle) if bits >> i & 1}
        if codes_form_fuzzy_topology(codes, n, q):
            out.append(ExtensionalFuzzyTopology(grid, codes, check=False))
    return sorted(out, key=_fuzzy_key)


def enumerate_fuzzy_topologies_by_extension(n: int, q: int) -> list[ExtensionalFuzzyTopology]:
    """Same family, reached by repeatedly adding one function and closing."""
    _check_fuzzy_bound(n, q)
    grid = Grid(q, n)
    allf = list(grid.functions())
    start = frozenset(close_codes({(0,) * n, (q,) * n}))
    seen = {start}
    frontier = [start]
    while frontier:
        fresh = []
        for codes in frontier:
            for f in allf:
                if f in codes:
                    continue
                nxt = frozenset(close_codes(codes | {f}))
                if nxt not in seen:
                    seen.add(nxt)
                    fresh.append(nxt)
        frontier = fresh
    return sorted((ExtensionalFuzzyTopology(grid, c, check=False) for c in seen), key=_fuzzy_key)


# --- random instances --------------------------------------------------------

FLAVORS = ("chang", "laminated", "weakly_induced", "induced")


def random_topology(rng: random.Random, n: int) -> Topology:
    full = full_mask(n)
    k = rng.randint(0, n + 1)
    return generate_topology({rng.randint(0, full) for _ in range(k)}, n)


def _weak_closure(codes: set, n: int, q: int) -> set:
    while True:
        extra = {indicator_code(n, u, q) for f in codes for u in code_levels(f)} - codes
        if not extra:
            return codes
        codes = close_codes(codes | extra)


def random_fuzzy_topology(rng: random.Random, n: int, q: int, flavor: str | None = None) -> ExtensionalFuzzyTopology:
    """Close 1-4 random grid functions; the flavour optionally adds every
    constant, the indicators of all level sets, or passes to the induced
    fuzzy topology of the result."""
    if flavor is None:
        flavor = rng.choice(FLAVORS)
    if flavor not in FLAVORS:
        raise ValueError(f"unknown flavour {flavor!r}")
    grid = Grid(q, n)
    gens = {tuple(rng.randint(0, q) for _ in range(n)) for _ in range(rng.randint(1, 4))}
    gens |= {(0,) * n, (q,) * n}
    if flavor in ("laminated", "induced") or (flavor == "weakly_induced" and rng.random() < 0.5):
        gens |= {(k,) * n for k in range(q + 1)}
    codes = close_codes(gens)
    if flavor == "weakly_induced":
        codes = _weak_closure(codes, n, q)
    delta = ExtensionalFuzzyTopology(grid, codes, check=False)
    if flavor == "induced":
        delta = omega(iota(delta), q)
    return delta


# --- census ------------------------------------------------------------------

@dataclass
class CensusReport:
    n: int
    q: int
    total: int = 0
    counts: dict = field(default_factory=dict)
    separators: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)
    inconsistent: list = field(default_factory=list)
    seconds: float = 0.0

    def to_dict(self, timing: bool = False) -> dict:
        def label(sig):
            return ",".join(f"{k}={'T' if v else 'F'}" for k, v in zip(SIGNATURE_FIELDS, sig))

        out = {
            "n": self.n,
            "q": self.q,
            "total": self.total,
            "counts": {label(s): c for s, c in sorted(self.counts.items())},
            "separators": {
                label(s): [[str(v) for v in f] for f in d.members]
                for s, d in sorted(self.separators.items())
            },
            "violations": len(self.violations),
            "inconsistent": len(self.inconsistent),
        }
        if timing:
            out["seconds"] = round(self.seconds, 3)
        return out


def run_equivalence_census(n: int, q: int, strict: bool = True) -> CensusReport:
    """Classify every fuzzy topology at ``(n, q)`` and check that lamination
    together with weak inducedness is exactly inducedness on the grid."""
    start = time.perf_counter()
    report = CensusReport(n, q)
    counts = Counter()
    for delta in enumerate_fuzzy_topologies(n, q):
        rep = classify(delta)
        if not rep.consistent:
            report.inconsistent.append(delta)
            continue
        sig = rep.signature()
        counts[sig] += 1
        report.separators.setdefault(sig, delta)
        if (rep.is_laminated and rep.is_weakly_induced) != rep.is_induced_on_grid:
            report.violations.append(delta)
    report.total = sum(counts.values()) + len(report.inconsistent)
    report.counts = dict(counts)
    report.seconds = time.perf_counter() - start
    if strict and (report.violations or report.inconsistent):
        raise EquivalenceViolation(report)
    return report
