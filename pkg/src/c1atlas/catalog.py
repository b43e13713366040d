"""The table of irreducible symmetric spaces of noncompact type.

Multiplicity data ships in a versioned JSON file rather than in code; the
loader recomputes dim = rank + sum of root multiplicities for every entry and
rejects the file on any mismatch, so a transcription error cannot survive the
load.  Entries are immutable after loading.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Optional

from .errors import AdjacentRoots, DimensionMismatch, ParseError, UnknownSpace
from .linalg import solve
from .rootsys import Root, RootSystem, RootSystemType, build_root_system

_DATA_ENV = "C1_ATLAS_CATALOG"


@dataclass(frozen=True)
class RankOneType:
    """A rank-one symmetric space of noncompact type, e.g. CH^3."""

    kind: str  # "RH" | "CH" | "HH" | "OH2"
    n: int  # the superscript: RH^n, CH^n, HH^n; OH2 always has n = 2

    def __str__(self):
        if self.kind == "OH2":
            return "OH^2"
        return f"{self.kind}^{self.n}"


def rank_one_recognize(m1: int, m2: int) -> Optional[RankOneType]:
    """Recognise a rank-one space from the multiplicities (m_a, m_2a).

    (m, 0) -> RH^(m+1); (2n, 1) -> CH^(n+1); (4n, 3) -> HH^(n+1);
    (8, 7) -> OH^2; anything else -> None.
    """
    if m1 < 1 or m2 < 0:
        raise ValueError("multiplicities must satisfy m1 >= 1, m2 >= 0")
    if m2 == 0:
        return RankOneType("RH", m1 + 1)
    if m2 == 1 and m1 >= 2 and m1 % 2 == 0:
        return RankOneType("CH", m1 // 2 + 1)
    if m2 == 3 and m1 >= 4 and m1 % 4 == 0:
        return RankOneType("HH", m1 // 4 + 1)
    if (m1, m2) == (8, 7):
        return RankOneType("OH2", 2)
    return None


@dataclass(frozen=True)
class SpaceEntry:
    """One irreducible symmetric space of noncompact type.

    ``mult`` maps the squared root length (in the normalisation with long
    roots of squared length 2) to the common multiplicity of that class.
    """

    name: str
    rtype: RootSystemType
    mult: tuple  # sorted tuple of (Fraction squared length, int multiplicity)
    dim: int
    split_flag: bool = False
    complexified_flag: bool = False
    aliases: tuple = ()

    def root_system(self) -> RootSystem:
        return build_root_system(self.rtype)

    @property
    def rank(self) -> int:
        return self.rtype.rank

    def mult_map(self) -> dict:
        return dict(self.mult)

    def mult_of(self, lam: Root) -> int:
        length = self.root_system().length_sq(lam)
        table = self.mult_map()
        if length not in table:
            raise KeyError(f"no multiplicity class of squared length {length} in {self.name}")
        return table[length]

    def simple_mult(self, i: int) -> int:
        return self.mult_of(self.root_system().simple(i))

    def simple_mults(self) -> dict:
        return {i: self.simple_mult(i) for i in range(1, self.rank + 1)}

    def double_mult(self, i: int) -> int:
        """Multiplicity of 2*a_i, or 0 when 2*a_i is not a root."""
        rs = self.root_system()
        doubled = tuple(2 * n for n in rs.simple(i).coeffs)
        if not rs.contains(doubled):
            return 0
        return self.mult_of(Root(doubled))

    def validate(self):
        rs = self.root_system()
        table = self.mult_map()
        classes = {rs.length_sq(lam) for lam in rs.positives}
        if set(table) != classes:
            raise ParseError(
                f"{self.name}: multiplicity classes {sorted(map(str, table))} do not "
                f"match the root length classes {sorted(map(str, classes))}"
            )
        total = self.rank + sum(table[rs.length_sq(lam)] for lam in rs.positives)
        if total != self.dim:
            raise DimensionMismatch(
                f"{self.name}: dim {self.dim} != rank + sum of multiplicities = {total}"
            )
        if self.split_flag and any(m != 1 for m in table.values()):
            raise ParseError(f"{self.name}: split entries need all multiplicities 1")
        if self.complexified_flag:
            if any(m != 2 for m in table.values()):
                raise ParseError(f"{self.name}: complexified entries need all multiplicities 2")
            if rs.non_reduced:
                raise ParseError(f"{self.name}: complexified entries need a reduced system")

    def killing_length_sq(self, lam: Root) -> Fraction:
        """Squared length of a root in the honest Killing scale of this space.

        The Killing form restricted to a maximal flat is determined exactly by
        the root data: B(H, H') = sum over roots of mult * lam(H) lam(H').
        """
        rs = self.root_system()
        r = self.rank
        k = [[Fraction(0)] * r for _ in range(r)]
        for mu in rs.positives:
            m = self.mult_of(mu)
            for a in range(r):
                if mu.coeffs[a] == 0:
                    continue
                for b in range(r):
                    if mu.coeffs[b]:
                        k[a][b] += 2 * m * mu.coeffs[a] * mu.coeffs[b]
        dual = solve(k, [Fraction(c) for c in lam.coeffs])
        return sum(Fraction(c) * d for c, d in zip(lam.coeffs, dual))

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class BoundaryFactor:
    """One irreducible factor of a boundary component."""

    rtype: RootSystemType
    nodes: tuple  # ambient simple indices spanning this factor
    mult: tuple  # ambient squared length -> multiplicity, restricted
    rank_one: Optional[RankOneType] = None


@dataclass(frozen=True)
class BoundaryComponent:
    """The totally geodesic symmetric subspace attached to a simple subset."""

    phi: frozenset
    factors: tuple
    flat_rank: int

    @property
    def is_whole_space(self) -> bool:
        return self.flat_rank == 0


def _connected_components(rs: RootSystem, phi: frozenset):
    remaining = set(phi)
    comps = []
    while remaining:
        seed = min(remaining)
        comp = {seed}
        frontier = [seed]
        while frontier:
            i = frontier.pop()
            for j in rs.dynkin_neighbors(i):
                if j in remaining and j not in comp:
                    comp.add(j)
                    frontier.append(j)
        remaining -= comp
        comps.append(tuple(sorted(comp)))
    return comps


def _classify_subdiagram(space: SpaceEntry, nodes: tuple) -> RootSystemType:
    """Family and rank of the subsystem generated by a connected node set."""
    rs = space.root_system()
    k = len(nodes)
    node_set = set(nodes)
    bc_end = rs.non_reduced and rs.rank in node_set
    if k == 1:
        return RootSystemType("BC" if bc_end else "A", 1)
    labels = {}
    degree = {i: 0 for i in nodes}
    for (i, j, label) in rs.edges():
        if i in node_set and j in node_set:
            labels[(i, j)] = label
            degree[i] += 1
            degree[j] += 1
    if any(lab == 3 for lab in labels.values()):
        return RootSystemType("G2", 2)
    if max(degree.values()) == 3:
        center = next(i for i in nodes if degree[i] == 3)
        arms = sorted(_arm_lengths(nodes, labels, degree, center))
        if arms[:2] == [1, 1]:
            return RootSystemType("D", k)
        return RootSystemType({6: "E6", 7: "E7", 8: "E8"}[k], k)
    doubles = [e for e, lab in labels.items() if lab == 2]
    if not doubles:
        return RootSystemType("A", k)
    lengths = {i: rs.length_sq(rs.simple(i)) for i in nodes}
    short = [i for i in nodes if lengths[i] == min(lengths.values())]
    long_ = [i for i in nodes if i not in short]
    if len(short) > 1 and len(long_) > 1:
        return RootSystemType("F4", 4)
    if bc_end:
        return RootSystemType("BC", k)
    if len(short) == 1 or k == 2:
        return RootSystemType("B", k)
    return RootSystemType("C", k)


def _arm_lengths(nodes, labels, degree, center):
    adj = {i: set() for i in nodes}
    for (i, j) in labels:
        adj[i].add(j)
        adj[j].add(i)
    arms = []
    for start in adj[center]:
        length = 1
        prev, cur = center, start
        while True:
            nxt = [x for x in adj[cur] if x != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    return arms


def boundary_component(space: SpaceEntry, phi: Iterable[int]) -> BoundaryComponent:
    """Split a simple subset into irreducible factors with inherited multiplicities."""
    rs = space.root_system()
    phi = frozenset(phi)
    if not phi <= set(range(1, rs.rank + 1)):
        raise ValueError(f"phi {sorted(phi)} out of range for rank {rs.rank}")
    factors = []
    for nodes in _connected_components(rs, phi):
        rtype = _classify_subdiagram(space, nodes)
        grading = rs.grading(phi)
        sub_pos = [
            lam for lam in grading.sigma_phi_pos if lam.support <= set(nodes)
        ]
        mult = {}
        for lam in sub_pos:
            mult[rs.length_sq(lam)] = space.mult_of(lam)
        rank_one = None
        if len(nodes) == 1:
            i = nodes[0]
            rank_one = rank_one_recognize(space.simple_mult(i), space.double_mult(i))
        factors.append(
            BoundaryFactor(
                rtype=rtype,
                nodes=nodes,
                mult=tuple(sorted(mult.items())),
                rank_one=rank_one,
            )
        )
    return BoundaryComponent(
        phi=phi, factors=tuple(factors), flat_rank=rs.rank - len(phi)
    )


def homothetic_rank_one_pair(space: SpaceEntry, i: int, k: int) -> bool:
    """Whether {a_i, a_k} spans two isometric rank-one boundary components.

    Requires the two simple roots to be non-adjacent; equal recognised type
    plus equal root length forces the two factors to be isometric once the
    space carries its Killing metric.
    """
    rs = space.root_system()
    if k in rs.dynkin_neighbors(i):
        raise AdjacentRoots(f"a{i} and a{k} are adjacent; the boundary is irreducible")
    first = rank_one_recognize(space.simple_mult(i), space.double_mult(i))
    second = rank_one_recognize(space.simple_mult(k), space.double_mult(k))
    if first is None or second is None or first != second:
        return False
    return rs.length_sq(rs.simple(i)) == rs.length_sq(rs.simple(k))


# -- loading -----------------------------------------------------------------

def _entry_from_json(obj) -> SpaceEntry:
    try:
        rtype = RootSystemType(obj["family"], int(obj["rank"]))
        mult = tuple(
            sorted((Fraction(key), int(value)) for key, value in obj["mults"].items())
        )
        entry = SpaceEntry(
            name=obj["name"],
            rtype=rtype,
            mult=mult,
            dim=int(obj["dim"]),
            split_flag=bool(obj.get("split", False)),
            complexified_flag=bool(obj.get("complexified", False)),
            aliases=tuple(obj.get("aliases", ())),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed catalog entry {obj!r}: {exc}") from exc
    entry.validate()
    return entry


def load_catalog(source) -> list:
    """Load and validate a catalog from a path, file object, or parsed JSON."""
    if isinstance(source, (str, Path)):
        with open(source, "r", encoding="utf-8") as fh:
            return load_catalog(fh)
    if hasattr(source, "read"):
        try:
            data = json.load(source)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from exc
    else:
        data = source
    if isinstance(data, dict):
        if "spaces" not in data:
            raise ParseError("catalog object needs a 'spaces' array")
        data = data["spaces"]
    if not isinstance(data, list):
        raise ParseError("catalog must be a list of space objects")
    entries = [_entry_from_json(obj) for obj in data]
    names = [e.name for e in entries]
    if len(set(names)) != len(names):
        raise ParseError("duplicate space names in catalog")
    return entries


def default_catalog_path() -> Path:
    env = os.environ.get(_DATA_ENV)
    if env:
        return Path(env)
    return Path(__file__).parent / "data" / "catalog.json"


def default_catalog() -> list:
    return load_catalog(default_catalog_path())


def find_space(catalog, name: str) -> SpaceEntry:
    for entry in catalog:
        if entry.name == name or name in entry.aliases:
            return entry
    raise UnknownSpace(f"space {name!r} is not in the catalog")


def list_spaces(catalog, predicate=None) -> list:
    if predicate is None:
        return list(catalog)
    return [entry for entry in catalog if predicate(entry)]
