"""JSON instance documents: a carrier, an optional topology, fuzzy sets,
named maps and a designated compact family, all with exact values."""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .compactness import CompactnessOracle
from .fuzzy import ExtensionalFuzzyTopology, codes_form_fuzzy_topology, generate_fuzzy_topology
from .lattice import MAX_GROUND_SIZE, FuzzySet, mask_of, points_of
from .topology import GroundMap, Topology, generate_topology, is_topology


@dataclass(frozen=True)
class Problem:
    path: str
    message: str

    def __str__(self) -> str:
        return f"{self.path}: {self.message}"


class InstanceError(ValueError):
    def __init__(self, problems: list[Problem]):
        super().__init__("; ".join(map(str, problems)))
        self.problems = problems


@dataclass(frozen=True)
class InstanceDocument:
    ground_size: int
    denominator: int = 1
    topology: Optional[tuple] = None  # masks exactly as written
    subbase: bool = False
    fuzzy_sets: tuple = ()
    maps: tuple = ()  # (name, GroundMap) pairs, in document order
    oracle: Optional[tuple] = None

    def tau(self) -> Optional[Topology]:
        if self.topology is None:
            return None
        if self.subbase:
            return generate_topology(self.topology, self.ground_size)
        return Topology(self.ground_size, frozenset(self.topology))

    def fuzzy_topology(self) -> Optional[ExtensionalFuzzyTopology]:
        """The fuzzy sets as a fuzzy topology, or the closure of them when the
        document carries ``"subbase": true``."""
        if not self.fuzzy_sets:
            return None
        q, n = self.denominator, self.ground_size
        if self.subbase:
            return generate_fuzzy_topology(self.fuzzy_sets, n, q)
        codes = {f.codes(q) for f in self.fuzzy_sets}
        if not codes_form_fuzzy_topology(codes, n, q):
            raise InstanceError([Problem("$.fuzzy_sets", "not a fuzzy topology: needs 0, 1 and closure "
                                         "under max and min (or \"subbase\": true)")])
        return ExtensionalFuzzyTopology.from_members(self.fuzzy_sets, q)

    def compactness_oracle(self) -> CompactnessOracle:
        if self.oracle is None:
            return CompactnessOracle.all_compact()
        tau = self.tau() or Topology.discrete(self.ground_size)
        return CompactnessOracle.designated(self.oracle, tau)

    def map(self, name: str) -> GroundMap:
        for k, h in self.maps:
            if k == name:
                return h
        raise KeyError(name)


def _value(raw, q: int, path: str, problems: list) -> Optional[Fraction]:
    if isinstance(raw, bool) or not isinstance(raw, (int, str)):
        problems.append(Problem(path, f"expected a \"p/q\" string or an integer, got {raw!r}"))
        return None
    if isinstance(raw, int):
        v = Fraction(raw, q)
    else:
        try:
            v = Fraction(raw.strip())
        except (ValueError, ZeroDivisionError):
            problems.append(Problem(path, f"cannot parse {raw!r} as a rational"))
            return None
        if "." in raw or "e" in raw.lower():
            problems.append(Problem(path, f"decimal notation {raw!r} is not exact input; use p/q"))
            return None
    if not 0 <= v <= 1:
        problems.append(Problem(path, f"value {v} outside [0, 1]"))
        return None
    return v


def _subset(raw, n: int, path: str, problems: list) -> Optional[int]:
    if not isinstance(raw, list):
        problems.append(Problem(path, "expected a list of point indices"))
        return None
    ok = True
    for i, x in enumerate(raw):
        if isinstance(x, bool) or not isinstance(x, int) or not 0 <= x < n:
            problems.append(Problem(f"{path}[{i}]", f"index {x!r} outside 0..{n - 1}"))
            ok = False
    return mask_of(raw) if ok else None


def _int_field(doc: dict, key: str, problems: list, lo: int, hi: int, default=None) -> Optional[int]:
    if key not in doc:
        if default is None:
            problems.append(Problem(f"$.{key}", "required field is missing"))
        return default
    v = doc[key]
    if isinstance(v, bool) or not isinstance(v, int) or not lo <= v <= hi:
        problems.append(Problem(f"$.{key}", f"expected an integer in {lo}..{hi}, got {v!r}"))
        return None
    return v


KNOWN_FIELDS = {"ground_size", "denominator", "topology", "subbase", "fuzzy_sets", "maps", "oracle"}


def parse_instance(text: str, max_n: int = MAX_GROUND_SIZE, max_q: int = 10**6) -> InstanceDocument:
    """Validate a JSON instance document; every problem is reported with a
    JSON path (and line/column for syntax errors)."""
    try:
        doc = json.loads(text, parse_float=lambda s: _Float(s))
    except json.JSONDecodeError as e:
        raise InstanceError([Problem(f"line {e.lineno} column {e.colno}", e.msg)]) from None
    if not isinstance(doc, dict):
        raise InstanceError([Problem("$", "document must be a JSON object")])
    problems: list[Problem] = []
    floats = _find_floats(doc, "$")
    if floats:
        raise InstanceError([Problem(p, "floating point numbers are not accepted") for p in floats])
    for key in sorted(set(doc) - KNOWN_FIELDS):
        problems.append(Problem(f"$.{key}", "unknown field"))
    n = _int_field(doc, "ground_size", problems, 1, max_n)
    q = _int_field(doc, "denominator", problems, 1, max_q, default=1)
    if n is None or q is None:
        raise InstanceError(problems)

    subbase = doc.get("subbase", False)
    if not isinstance(subbase, bool):
        problems.append(Problem("$.subbase", "expected true or false"))
        subbase = False

    topology = None
    if "topology" in doc:
        raw = doc["topology"]
        if not isinstance(raw, list):
            problems.append(Problem("$.topology", "expected a list of subsets"))
        else:
            masks = [_subset(s, n, f"$.topology[{i}]", problems) for i, s in enumerate(raw)]
            if None not in masks:
                topology = tuple(masks)
                full = (1 << n) - 1
                if not subbase:
                    if 0 not in masks:
                        problems.append(Problem("$.topology", "the empty set is missing"))
                    if full not in masks:
                        problems.append(Problem("$.topology", "the whole carrier is missing"))
                    elif 0 in masks and not is_topology(set(masks), n):
                        problems.append(Problem("$.topology", "not closed under unions and intersections"))

    fuzzy = []
    rows = doc.get("fuzzy_sets", [])
    if not isinstance(rows, list):
        problems.append(Problem("$.fuzzy_sets", "expected a list of rows"))
        rows = []
    for i, row in enumerate(rows):
        path = f"$.fuzzy_sets[{i}]"
        if not isinstance(row, list) or len(row) != n:
            problems.append(Problem(path, f"expected a row of {n} values"))
            continue
        vals = [_value(v, q, f"{path}[{j}]", problems) for j, v in enumerate(row)]
        if None not in vals:
            f = FuzzySet(vals)
            if f.codes(q) is None:
                problems.append(Problem(path, f"values are not on the grid 1/{q}"))
            else:
                fuzzy.append(f)

    maps = []
    raw_maps = doc.get("maps", {})
    if not isinstance(raw_maps, dict):
        problems.append(Problem("$.maps", "expected an object of named maps"))
        raw_maps = {}
    for name, spec in raw_maps.items():
        path = f"$.maps.{name}"
        if not isinstance(spec, dict) or set(spec) != {"target", "image"}:
            problems.append(Problem(path, "expected {\"target\": m, \"image\": [...]}"))
            continue
        m, image = spec["target"], spec["image"]
        if isinstance(m, bool) or not isinstance(m, int) or not 1 <= m <= MAX_GROUND_SIZE:
            problems.append(Problem(f"{path}.target", f"bad target size {m!r}"))
            continue
        if not isinstance(image, list) or len(image) != n:
            problems.append(Problem(f"{path}.image", f"expected {n} target indices"))
            continue
        bad = [j for j, y in enumerate(image) if isinstance(y, bool) or not isinstance(y, int) or not 0 <= y < m]
        for j in bad:
            problems.append(Problem(f"{path}.image[{j}]", f"index {image[j]!r} outside 0..{m - 1}"))
        if not bad:
            maps.append((name, GroundMap(m, tuple(image))))

    oracle = None
    if "oracle" in doc:
        raw = doc["oracle"]
        if not isinstance(raw, list):
            problems.append(Problem("$.oracle", "expected a list of subsets"))
        else:
            masks = [_subset(s, n, f"$.oracle[{i}]", problems) for i, s in enumerate(raw)]
            if None not in masks:
                oracle = tuple(masks)

    if problems:
        raise InstanceError(problems)
    out = InstanceDocument(n, q, topology, subbase, tuple(fuzzy), tuple(maps), oracle)
    try:
        out.tau()
        out.compactness_oracle()
    except ValueError as e:
        raise InstanceError([Problem("$", str(e))]) from None
    return out


class _Float(str):
    pass


def _find_floats(obj, path: str) -> list[str]:
    if isinstance(obj, _Float):
        return [path]
    if isinstance(obj, list):
        return [p for i, v in enumerate(obj) for p in _find_floats(v, f"{path}[{i}]")]
    if isinstance(obj, dict):
        return [p for k, v in obj.items() for p in _find_floats(v, f"{path}.{k}")]
    return []


def instance_to_dict(doc: InstanceDocument) -> dict:
    out: dict = {"ground_size": doc.ground_size, "denominator": doc.denominator}
    if doc.topology is not None:
        out["topology"] = [points_of(u) for u in doc.topology]
    if doc.subbase:
        out["subbase"] = True
    if doc.fuzzy_sets:
        out["fuzzy_sets"] = [[str(v) for v in f] for f in doc.fuzzy_sets]
    if doc.maps:
        out["maps"] = {k: {"target": h.target, "image": list(h.image)} for k, h in doc.maps}
    if doc.oracle is not None:
        out["oracle"] = [points_of(u) for u in doc.oracle]
    return out


def render_instance(doc: InstanceDocument) -> str:
    return json.dumps(instance_to_dict(doc), indent=2) + "\n"
