"""Per-space assembly of the cohomogeneity-one action catalog.

Five families of actions exist on a symmetric space of noncompact type:

 * HOROSPHERICAL      - one continuous family, lines in the maximal flat
                        modulo weighted diagram symmetries;
 * SOLVABLE           - one family per simple root modulo those symmetries;
 * CE_TOTALLY_GEODESIC- canonical extensions of actions with totally geodesic
                        singular orbits on irreducible boundary components
                        (data-driven: populated from a pluggable table);
 * CE_DIAGONAL        - canonical extensions of diagonal actions on products
                        of two isometric rank-one boundary components;
 * NILPOTENT          - the genuinely new families: canonical extensions of
                        the rank-one moduli attached to CH/HH/OH boundary
                        components, plus the short-root G2 subgroup H_{2,0}.

The nilpotent entries are derived twice (from boundary recognition and from
the elimination sweep) and the two answers are required to agree.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .catalog import (
    RankOneType,
    SpaceEntry,
    boundary_component,
    rank_one_recognize,
)
from .errors import ParseError, RHHasNoNCModuli
from . import nilcon

CH_FORMULA = "(0,π/2) × {2,4,…,2⌊n/2⌋} ⊔ {π/2} × {2,…,n}"
OH2_FORMULA = "{2,3,6,7} ⊔ [0,1] × {4}"
HH_FORMULA = "subset of a disjoint union of cubes [0,π/2]³ (symbolic)"
G2_FORMULA = "{H_{2,0}}"


@dataclass(frozen=True)
class ModuliDescriptor:
    """Moduli of the nilpotent-construction families on a rank-one space."""

    kind: str  # CH_EXPLICIT | HH_SYMBOLIC | OH2_EXPLICIT | G2_SINGLETON
    formula: str
    data: dict = field(default_factory=dict)

    @property
    def is_empty(self) -> bool:
        return self.kind == "CH_EXPLICIT" and not (
            self.data["interval_dims"] or self.data["right_angle_dims"]
        )

    def to_json(self) -> dict:
        return {"kind": self.kind, "formula": self.formula, "data": self.data}


def moduli(rank_one: RankOneType) -> ModuliDescriptor:
    """The moduli descriptor for a rank-one space; RH spaces have none."""
    if rank_one.kind == "RH":
        raise RHHasNoNCModuli("real hyperbolic spaces admit no such families")
    if rank_one.kind == "CH":
        n = rank_one.n - 1
        return ModuliDescriptor(
            "CH_EXPLICIT",
            CH_FORMULA,
            {
                "n": n,
                "interval_dims": [2 * k for k in range(1, n // 2 + 1)],
                "right_angle_dims": list(range(2, n + 1)),
            },
        )
    if rank_one.kind == "HH":
        return ModuliDescriptor("HH_SYMBOLIC", HH_FORMULA, {"n": rank_one.n - 1})
    return ModuliDescriptor(
        "OH2_EXPLICIT",
        OH2_FORMULA,
        {"points": [2, 3, 6, 7], "segment_dim": 4},
    )


@dataclass(frozen=True)
class ActionFamily:
    kind: str  # HOROSPHERICAL | SOLVABLE | CE_TOTALLY_GEODESIC | CE_DIAGONAL | NILPOTENT
    parameters: dict
    provenance: str  # construction-origin tag

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "parameters": self.parameters,
            "provenance": self.provenance,
        }


@dataclass(frozen=True)
class ActionCatalog:
    spaces: tuple
    families: tuple

    def by_kind(self, kind: str):
        return [f for f in self.families if f.kind == kind]

    def to_json(self) -> dict:
        return {
            "spaces": list(self.spaces),
            "families": [f.to_json() for f in self.families],
        }

    def text(self) -> str:
        lines = [f"space(s): {' x '.join(self.spaces)}"]
        for f in self.families:
            params = ", ".join(f"{k}={_fmt(v)}" for k, v in sorted(f.parameters.items()))
            lines.append(f"  [{f.kind}] {params}")
        return "\n".join(lines)


def _fmt(v):
    if isinstance(v, (list, tuple)):
        return "[" + ",".join(map(str, v)) + "]"
    return str(v)


# -- product-level diagram symmetries ------------------------------------------

def _factor_auts(space: SpaceEntry):
    rs = space.root_system()
    return rs.weighted_diagram_automorphisms(space.simple_mults())


def _node_orbits(factors):
    """Orbits of (factor index, simple index) pairs under the product symmetries.

    Generators: each factor's weighted diagram symmetries, plus a swap of any
    two factors that are literally the same catalog entry.
    """
    nodes = [
        (f, i)
        for f, space in enumerate(factors)
        for i in range(1, space.rank + 1)
    ]
    parent = {n: n for n in nodes}

    def find(n):
        while parent[n] != n:
            parent[n] = parent[parent[n]]
            n = parent[n]
        return n

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    for f, space in enumerate(factors):
        for sigma in _factor_auts(space):
            for i in range(1, space.rank + 1):
                union((f, i), (f, sigma[i - 1]))
    for f1, s1 in enumerate(factors):
        for f2 in range(f1 + 1, len(factors)):
            if factors[f2].name == s1.name:
                for i in range(1, s1.rank + 1):
                    union((f1, i), (f2, i))
    orbits: dict = {}
    for n in nodes:
        orbits.setdefault(find(n), []).append(n)
    return sorted(sorted(members) for members in orbits.values())


def _connected_subsets(space: SpaceEntry):
    rs = space.root_system()
    r = rs.rank
    out = []
    for mask in range(1, 1 << r):
        phi = frozenset(i + 1 for i in range(r) if mask & (1 << i))
        seed = min(phi)
        seen = {seed}
        frontier = [seed]
        while frontier:
            x = frontier.pop()
            for y in rs.dynkin_neighbors(x):
                if y in phi and y not in seen:
                    seen.add(y)
                    frontier.append(y)
        if seen == phi:
            out.append(phi)
    return out


def _orbit_representatives(space: SpaceEntry, subsets):
    """Deduplicate simple subsets along the weighted diagram symmetries."""
    auts = _factor_auts(space)
    seen = set()
    reps = []
    for phi in sorted(subsets, key=lambda s: (len(s), sorted(s))):
        canon = min(
            tuple(sorted(sigma[i - 1] for i in phi)) for sigma in auts
        )
        if canon not in seen:
            seen.add(canon)
            orbit = {
                tuple(sorted(sigma[i - 1] for i in phi)) for sigma in auts
            }
            reps.append((phi, len(orbit)))
    return reps


# -- the type-(e) derivation ----------------------------------------------------

def derive_type_e_spaces(catalog):
    """Spaces owning a boundary component of CH (n>=2), HH (n>=1), or OH type.

    Scans the rank-one boundary components attached to single simple roots
    (for rank-one spaces that component is the space itself).
    """
    out = []
    for space in sorted(catalog, key=lambda s: s.name):
        rs = space.root_system()
        hits = []
        for i in range(1, rs.rank + 1):
            rec = rank_one_recognize(space.simple_mult(i), space.double_mult(i))
            if rec is None or rec.kind == "RH":
                continue
            if rec.kind == "CH" and rec.n < 3:
                continue  # the CH^2 moduli set is empty
            hits.append((frozenset([i]), rec))
        for phi, rec in _dedupe_boundary_hits(space, hits):
            out.append((space, phi, rec))
    return out


def _dedupe_boundary_hits(space, hits):
    auts = _factor_auts(space)
    seen = set()
    for phi, rec in sorted(hits, key=lambda t: sorted(t[0])):
        canon = min(tuple(sorted(sigma[i - 1] for i in phi)) for sigma in auts)
        if canon not in seen:
            seen.add(canon)
            yield phi, rec


# -- totally geodesic table ------------------------------------------------------

def load_tg_table(source) -> dict:
    """Load the pluggable table of totally-geodesic-orbit actions per space."""
    if isinstance(source, (str, Path)):
        with open(source, "r", encoding="utf-8") as fh:
            return load_tg_table(fh)
    if hasattr(source, "read"):
        try:
            data = json.load(source)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON in table: {exc}") from exc
    else:
        data = source
    if not isinstance(data, dict) or "actions" not in data:
        raise ParseError("table needs an 'actions' object keyed by space name")
    return data["actions"]


def _boundary_name(space: SpaceEntry, comp) -> str:
    if len(comp.factors) == 1 and comp.factors[0].rank_one is not None:
        return str(comp.factors[0].rank_one)
    return " x ".join(
        f"type-{f.rtype} (mults {dict((str(k), v) for k, v in f.mult)})"
        for f in comp.factors
    )


# -- the classifier ---------------------------------------------------------------

def classify(factors, tg_table=None) -> ActionCatalog:
    """Assemble the action catalog of a product of catalog spaces.

    ``factors`` is a nonempty list of SpaceEntry (the de Rham factors);
    ``tg_table`` optionally maps boundary-component names to lists of actions
    with totally geodesic singular orbits.
    """
    if not factors:
        raise ValueError("need at least one de Rham factor")
    families = []
    total_rank = sum(s.rank for s in factors)

    families.append(
        ActionFamily(
            "HOROSPHERICAL",
            {
                "moduli": "lines l in the maximal flat modulo Aut^w(D)",
                "parameter_dimension": total_rank - 1,
            },
            provenance="horospherical foliation",
        )
    )

    for orbit in _node_orbits(factors):
        f, i = orbit[0]
        families.append(
            ActionFamily(
                "SOLVABLE",
                {
                    "factor": f,
                    "simple_root": i,
                    "orbit_size": len(orbit),
                },
                provenance="solvable foliation",
            )
        )

    for f, space in enumerate(factors):
        for phi, orbit_size in _orbit_representatives(space, _connected_subsets(space)):
            comp = boundary_component(space, phi)
            name = _boundary_name(space, comp)
            entry = {
                "factor": f,
                "phi": sorted(phi),
                "boundary": name,
                "orbit_size": orbit_size,
                "whole_space": comp.is_whole_space and len(factors) == 1,
            }
            if tg_table and name in tg_table:
                entry["actions"] = tg_table[name]
            else:
                entry["actions"] = "TG(B_phi): requires external table"
            families.append(
                ActionFamily("CE_TOTALLY_GEODESIC", entry, provenance="canonical extension of totally geodesic orbit")
            )

    families.extend(_diagonal_families(factors))
    families.extend(_nilpotent_families(factors))

    return ActionCatalog(
        spaces=tuple(s.name for s in factors), families=tuple(families)
    )


def _diagonal_families(factors):
    """Reducible rank-2 boundary components with isometric rank-one factors.

    Within a factor two non-adjacent simple roots qualify when they recognise
    the same rank-one type with equal root length; across factors the lengths
    are compared on the honest Killing scale of each factor.
    """
    pairs = []
    for f1, s1 in enumerate(factors):
        rs1 = s1.root_system()
        for i in range(1, s1.rank + 1):
            rec1 = rank_one_recognize(s1.simple_mult(i), s1.double_mult(i))
            if rec1 is None:
                continue
            for k in range(i + 1, s1.rank + 1):
                if k in rs1.dynkin_neighbors(i):
                    continue
                rec2 = rank_one_recognize(s1.simple_mult(k), s1.double_mult(k))
                if rec2 == rec1 and rs1.length_sq(rs1.simple(i)) == rs1.length_sq(
                    rs1.simple(k)
                ):
                    pairs.append(((f1, i), (f1, k), rec1))
            for f2 in range(f1 + 1, len(factors)):
                s2 = factors[f2]
                rs2 = s2.root_system()
                for k in range(1, s2.rank + 1):
                    rec2 = rank_one_recognize(s2.simple_mult(k), s2.double_mult(k))
                    if rec2 != rec1:
                        continue
                    if s1.killing_length_sq(rs1.simple(i)) == s2.killing_length_sq(
                        rs2.simple(k)
                    ):
                        pairs.append(((f1, i), (f2, k), rec1))
    seen = set()
    out = []
    for a, b, rec in pairs:
        canon = _pair_canon(factors, a, b)
        if canon in seen:
            continue
        seen.add(canon)
        out.append(
            ActionFamily(
                "CE_DIAGONAL",
                {
                    "pair": [list(a), list(b)],
                    "boundary": f"{rec} x {rec}",
                },
                provenance="canonical extension of diagonal action",
            )
        )
    return out


def _pair_canon(factors, a, b):
    """Canonical form of an unordered node pair under the product symmetries.

    The symmetry group is the product of the per-factor weighted diagram
    symmetries extended by permutations of literally identical factors, so the
    orbit of a pair is enumerated by moving each leg to any identical factor
    and applying that factor's symmetries.
    """
    (fa, ia), (fb, ib) = a, b
    same = lambda f, g: factors[f].name == factors[g].name
    candidates = []
    if fa == fb:
        for g in range(len(factors)):
            if not same(fa, g):
                continue
            for sigma in _factor_auts(factors[g]):
                candidates.append(
                    tuple(sorted(((g, sigma[ia - 1]), (g, sigma[ib - 1]))))
                )
    else:
        for ga in range(len(factors)):
            if not same(fa, ga):
                continue
            for gb in range(len(factors)):
                if gb == ga or not same(fb, gb):
                    continue
                for s1 in _factor_auts(factors[ga]):
                    for s2 in _factor_auts(factors[gb]):
                        candidates.append(
                            tuple(sorted(((ga, s1[ia - 1]), (gb, s2[ib - 1]))))
                        )
    return min(candidates)


def _nilpotent_families(factors):
    """Families of the fifth kind, derived twice and reconciled.

    Path one reads the catalog data: rank-one CH/HH/OH boundary components
    supply canonical extensions of their moduli, and the two G2-type spaces
    supply the short-root subgroup.  Path two runs the elimination sweep and
    records its survivors.  The survivor set must be exactly the short G2
    roots of the G2-type factors, otherwise the classifier refuses to emit.
    """
    families = []
    sweep_survivors = set()
    g2_factors = set()
    for f, space in enumerate(factors):
        decorations = (
            {"other_factors": "full isometry group"} if len(factors) > 1 else {}
        )
        for sp, phi, rec in derive_type_e_spaces([space]):
            desc = moduli(rec)
            if desc.is_empty:
                continue
            params = {
                "factor": f,
                "phi": sorted(phi),
                "boundary": str(rec),
                "moduli": desc.to_json(),
                **decorations,
            }
            families.append(
                ActionFamily("NILPOTENT", params, provenance="canonical extension of rank-one moduli")
            )
        if space.rtype.family == "G2":
            rs = space.root_system()
            short = min((1, 2), key=lambda i: rs.length_sq(rs.simple(i)))
            g2_factors.add((f, short))
            params = {
                "factor": f,
                "j": short,
                "subgroup": "H_{2,0}",
                "moduli": ModuliDescriptor("G2_SINGLETON", G2_FORMULA).to_json(),
                **decorations,
            }
            families.append(
                ActionFamily("NILPOTENT", params, provenance="short-root nilpotent construction")
            )
        if space.rank >= 2:
            for verdict in (nilcon.analyze(space, j) for j in range(1, space.rank + 1)):
                if verdict.status == nilcon.SURVIVES_W_ZERO_G2:
                    sweep_survivors.add((f, verdict.j))
    if sweep_survivors != g2_factors:
        raise AssertionError(
            "catalog-driven G2 families and elimination-sweep survivors disagree: "
            f"{sorted(g2_factors)} vs {sorted(sweep_survivors)}"
        )
    return families
