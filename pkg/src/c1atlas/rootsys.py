"""Exact combinatorics of reduced and non-reduced root systems.

Roots are integer coefficient vectors over a fixed simple system a1..ar.  All
inner products are exact rationals with long roots normalised to squared
length 2 (the BC families keep the squared-length ladder 1, 2, 4 for the
classes e_i, e_i +- e_j, 2e_i).  Positive roots are generated by string
closure from the Cartan matrix; the BC families are the corresponding B
closure with the doubled short roots appended.

Everything here is immutable after construction and safe to share across
threads.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Union

from .errors import InvalidRank, ProportionalRoots

FAMILIES = ("A", "B", "C", "D", "E6", "E7", "E8", "F4", "G2", "BC")
_FIXED_RANK = {"E6": 6, "E7": 7, "E8": 8, "F4": 4, "G2": 2}


@dataclass(frozen=True)
class RootSystemType:
    """A family letter plus a rank, e.g. ('BC', 2)."""

    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InvalidRank(f"unknown family {self.family!r}")
        r = self.rank
        if self.family in _FIXED_RANK:
            if r != _FIXED_RANK[self.family]:
                raise InvalidRank(f"{self.family} has fixed rank {_FIXED_RANK[self.family]}")
        elif self.family == "A" and r < 1:
            raise InvalidRank("A_r needs r >= 1")
        elif self.family == "B" and r < 2:
            raise InvalidRank("B_r needs r >= 2 (B2 is the canonical form of C2)")
        elif self.family == "C" and r < 3:
            raise InvalidRank("C_r needs r >= 3 (C2 is canonicalised to B2)")
        elif self.family == "D" and r < 4:
            raise InvalidRank("D_r needs r >= 4")
        elif self.family == "BC" and r < 1:
            raise InvalidRank("BC_r needs r >= 1")
        elif r < 1:
            raise InvalidRank("rank must be positive")

    def __str__(self):
        if self.family in _FIXED_RANK:
            return self.family
        return f"{self.family}{self.rank}"


@functools.total_ordering
@dataclass(frozen=True)
class Root:
    """Integer coefficient vector over the simple roots a1..ar."""

    coeffs: tuple

    def __post_init__(self):
        signs = {1 if n > 0 else -1 for n in self.coeffs if n != 0}
        if len(signs) > 1:
            raise ValueError(f"mixed-sign coefficient vector {self.coeffs}")

    @property
    def height(self) -> int:
        return sum(self.coeffs)

    @property
    def is_positive(self) -> bool:
        return self.height > 0

    def coefficient(self, i: int) -> int:
        """Coefficient n_i of the simple root a_i (1-based)."""
        return self.coeffs[i - 1]

    @property
    def support(self) -> frozenset:
        return frozenset(i + 1 for i, n in enumerate(self.coeffs) if n != 0)

    def __neg__(self) -> "Root":
        return Root(tuple(-n for n in self.coeffs))

    def shifted(self, other: "Root", k: int = 1) -> tuple:
        """Coefficient vector of self + k*other (may not be a root)."""
        return tuple(a + k * b for a, b in zip(self.coeffs, other.coeffs))

    def _key(self):
        return (self.height, self.coeffs)

    def __lt__(self, other):
        return self._key() < other._key()

    def __str__(self):
        if all(n == 0 for n in self.coeffs):
            return "0"
        parts = []
        for i, n in enumerate(self.coeffs, start=1):
            if n == 0:
                continue
            if n == 1:
                term = f"a{i}"
            elif n == -1:
                term = f"-a{i}"
            else:
                term = f"{n}a{i}"
            if parts and n > 0:
                parts.append("+" + term)
            else:
                parts.append(term)
        return "".join(parts)


def _chain_edges(r):
    return [(i, i + 1) for i in range(1, r)]


def _family_diagram(family: str, rank: int):
    """Return (edges, cartan_overrides, squared_lengths) for the family."""
    two = Fraction(2)
    one = Fraction(1)
    if family == "A":
        return _chain_edges(rank), {}, [two] * rank
    if family in ("B", "BC"):
        if rank == 1:
            return [], {}, [one]
        d = [two] * (rank - 1) + [one]
        ov = {(rank - 1, rank): -2, (rank, rank - 1): -1}
        return _chain_edges(rank), ov, d
    if family == "C":
        d = [one] * (rank - 1) + [two]
        ov = {(rank - 1, rank): -1, (rank, rank - 1): -2}
        return _chain_edges(rank), ov, d
    if family == "D":
        edges = _chain_edges(rank - 1) + [(rank - 2, rank)]
        return edges, {}, [two] * rank
    if family in ("E6", "E7", "E8"):
        edges = [(1, 3), (3, 4), (2, 4), (4, 5), (5, 6)]
        if family in ("E7", "E8"):
            edges.append((6, 7))
        if family == "E8":
            edges.append((7, 8))
        return edges, {}, [two] * rank
    if family == "F4":
        ov = {(2, 3): -2, (3, 2): -1}
        return _chain_edges(4), ov, [two, two, one, one]
    if family == "G2":
        # a2 is the short simple root.
        ov = {(1, 2): -3, (2, 1): -1}
        return [(1, 2)], ov, [two, Fraction(2, 3)]
    raise InvalidRank(f"unknown family {family!r}")


class RootSystem:
    """A finite root system with exact pairing data.

    All public indices of simple roots are 1-based.  ``positives`` is sorted
    by (height, lexicographic coefficients) and that order is the canonical
    one used everywhere downstream.
    """

    def __init__(self, rtype: RootSystemType):
        self.rtype = rtype
        r = rtype.rank
        base_family = "B" if rtype.family == "BC" else rtype.family
        edges, overrides, d = _family_diagram(rtype.family, r)
        cartan = [[0] * r for _ in range(r)]
        for i in range(r):
            cartan[i][i] = 2
        for (i, j) in edges:
            cartan[i - 1][j - 1] = overrides.get((i, j), -1)
            cartan[j - 1][i - 1] = overrides.get((j, i), -1)
        self.cartan = tuple(tuple(row) for row in cartan)
        self._d = tuple(d)
        gram = [[cartan[i][j] * d[j] / 2 for j in range(r)] for i in range(r)]
        for i in range(r):
            for j in range(r):
                assert gram[i][j] == gram[j][i], "Cartan data is not symmetrizable"
        self.gram = tuple(tuple(row) for row in gram)
        self._edges = tuple(sorted(edges))
        self.non_reduced = rtype.family == "BC"

        positives = self._generate_positives()
        if self.non_reduced:
            doubled = [
                Root(tuple(2 * n for n in lam.coeffs))
                for lam in positives
                if self.length_sq(lam) == 1
            ]
            positives.extend(doubled)
        self.positives = tuple(sorted(positives))
        self._posset = frozenset(p.coeffs for p in self.positives)
        self._allset = self._posset | frozenset((-p).coeffs for p in self.positives)

    # -- generation -------------------------------------------------------
    def _generate_positives(self):
        r = self.rtype.rank
        simples = [Root(tuple(int(i == j) for j in range(r))) for i in range(r)]
        roots = set(s.coeffs for s in simples)
        frontier = list(simples)
        while frontier:
            new = []
            for lam in frontier:
                for i in range(1, r + 1):
                    alpha = simples[i - 1]
                    cand = lam.shifted(alpha)
                    if cand in roots:
                        continue
                    p = 0
                    while lam.shifted(alpha, -(p + 1)) in roots:
                        p += 1
                    q = p - self._pairing_coeffs(lam.coeffs, alpha.coeffs)
                    if q > 0:
                        roots.add(cand)
                        new.append(Root(cand))
            frontier = new
        return [Root(c) for c in roots]

    # -- exact pairing ------------------------------------------------------
    def inner(self, lam: Root, mu: Root) -> Fraction:
        g = self.gram
        total = Fraction(0)
        for i, a in enumerate(lam.coeffs):
            if a == 0:
                continue
            row = g[i]
            for j, b in enumerate(mu.coeffs):
                if b:
                    total += a * b * row[j]
        return total

    def length_sq(self, lam: Root) -> Fraction:
        return self.inner(lam, lam)

    def _pairing_coeffs(self, lam_coeffs, mu_coeffs) -> int:
        lam, mu = Root(lam_coeffs), Root(mu_coeffs)
        val = 2 * self.inner(lam, mu) / self.inner(mu, mu)
        assert val.denominator == 1, "non-integral Cartan pairing"
        return int(val)

    def pairing(self, lam: Root, mu: Root) -> int:
        """Cartan integer 2 (lam, mu) / (mu, mu)."""
        return self._pairing_coeffs(lam.coeffs, mu.coeffs)

    # -- membership ---------------------------------------------------------
    @property
    def rank(self) -> int:
        return self.rtype.rank

    def simple(self, i: int) -> Root:
        return Root(tuple(int(j == i - 1) for j in range(self.rank)))

    @property
    def simples(self):
        return tuple(self.simple(i) for i in range(1, self.rank + 1))

    def contains(self, coeffs: Union[Root, tuple]) -> bool:
        if isinstance(coeffs, Root):
            coeffs = coeffs.coeffs
        return coeffs in self._allset

    @property
    def highest_root(self) -> Root:
        return self.positives[-1]

    def coefficient(self, lam: Root, i: int) -> int:
        return lam.coefficient(i)

    # -- strings --------------------------------------------------------------
    def _proportional(self, lam: Root, beta: Root) -> bool:
        for i in range(self.rank):
            for j in range(i + 1, self.rank):
                if lam.coeffs[i] * beta.coeffs[j] != lam.coeffs[j] * beta.coeffs[i]:
                    return False
        return True

    def root_string(self, lam: Root, beta: Root):
        """The upward beta-string [lam, lam+beta, ..., lam+q*beta] inside the system."""
        if not (self.contains(lam) and self.contains(beta)):
            raise ValueError("string endpoints must be roots")
        if self._proportional(lam, beta):
            raise ProportionalRoots(f"{lam} and {beta} are proportional")
        out = [lam]
        k = 1
        while lam.shifted(beta, k) in self._allset:
            out.append(Root(lam.shifted(beta, k)))
            k += 1
        return out

    def string_down_count(self, lam: Root, beta: Root) -> int:
        """Largest p with lam - p*beta still a root (the classical string depth)."""
        if self._proportional(lam, beta):
            raise ProportionalRoots(f"{lam} and {beta} are proportional")
        p = 0
        while lam.shifted(beta, -(p + 1)) in self._allset:
            p += 1
        return p

    def phi_string(self, lam: Root, phi: Iterable[int]):
        """All of Sigma u {0} congruent to lam modulo the span of {a_i : i in phi}."""
        phi = frozenset(phi)
        fixed = [i for i in range(self.rank) if (i + 1) not in phi]
        out = set()
        zero = (0,) * self.rank
        for coeffs in self._allset | {zero}:
            if all(coeffs[i] == lam.coeffs[i] for i in fixed):
                out.add(Root(coeffs))
        return out

    # -- parabolic grading ------------------------------------------------------
    def grading(self, phi: Iterable[int]) -> "ParabolicGrading":
        phi = frozenset(phi)
        if not phi <= set(range(1, self.rank + 1)):
            raise ValueError(f"phi {sorted(phi)} is not a set of simple indices")
        levels: dict = {}
        sigma = []
        for lam in self.positives:
            nu = sum(lam.coeffs[i - 1] for i in range(1, self.rank + 1) if i not in phi)
            if nu == 0:
                sigma.append(lam)
            else:
                levels.setdefault(nu, []).append(lam)
        return ParabolicGrading(
            base=self,
            phi=phi,
            levels={nu: tuple(sorted(rs)) for nu, rs in levels.items()},
            sigma_phi_pos=tuple(sorted(sigma)),
        )

    # -- diagram ----------------------------------------------------------------
    def dynkin_neighbors(self, i: int) -> frozenset:
        return frozenset(
            j + 1
            for j in range(self.rank)
            if j != i - 1 and self.cartan[i - 1][j] != 0
        )

    def edges(self):
        """Dynkin edges as (i, j, label) with i < j; label = bond multiplicity."""
        out = []
        for (i, j) in self._edges:
            label = self.cartan[i - 1][j - 1] * self.cartan[j - 1][i - 1]
            out.append((i, j, label))
        return tuple(out)

    def weighted_diagram_automorphisms(self, mult: Optional[Mapping[int, object]] = None):
        """All index permutations preserving the Cartan matrix and the weights.

        ``mult`` maps 1-based simple indices to arbitrary comparable weights
        (restricted-root multiplicities in practice); None means unweighted.
        Returned as sorted tuples sigma with sigma[i-1] = image of i.
        """
        r = self.rank
        cartan = self.cartan
        weights = [None if mult is None else mult[i] for i in range(1, r + 1)]
        results = []
        image = [0] * r

        def extend(i):
            if i == r:
                results.append(tuple(image))
                return
            used = set(image[:i])
            for cand in range(1, r + 1):
                if cand in used:
                    continue
                if weights[i] != weights[cand - 1]:
                    continue
                if cartan[i][i] != cartan[cand - 1][cand - 1]:
                    continue
                ok = True
                for j in range(i):
                    if (
                        cartan[i][j] != cartan[cand - 1][image[j] - 1]
                        or cartan[j][i] != cartan[image[j] - 1][cand - 1]
                    ):
                        ok = False
                        break
                if ok:
                    image[i] = cand
                    extend(i + 1)
                    image[i] = 0

        extend(0)
        return tuple(sorted(results))

    def apply_permutation(self, lam: Root, sigma) -> Root:
        """Relabel a root along a simple-index permutation sigma."""
        out = [0] * self.rank
        for i in range(1, self.rank + 1):
            out[sigma[i - 1] - 1] = lam.coeffs[i - 1]
        return Root(tuple(out))

    def __repr__(self):
        return f"RootSystem({self.rtype}, {len(self.positives)} positive roots)"


@dataclass(frozen=True)
class ParabolicGrading:
    """Level decomposition of the positive roots off a simple subset phi.

    ``levels[nu]`` holds the positive roots whose coefficient sum over the
    complement of phi equals nu; ``sigma_phi_pos`` is the level-zero subsystem's
    positive part.
    """

    base: RootSystem
    phi: frozenset
    levels: dict
    sigma_phi_pos: tuple

    def level(self, nu: int) -> tuple:
        return self.levels.get(nu, ())

    def level_of(self, lam: Root) -> int:
        return sum(
            lam.coeffs[i - 1]
            for i in range(1, self.base.rank + 1)
            if i not in self.phi
        )

    @property
    def max_level(self) -> int:
        return max(self.levels) if self.levels else 0


_CACHE: dict = {}


def build_root_system(rtype: RootSystemType) -> RootSystem:
    """Build (and memoise) the root system for a validated type."""
    key = (rtype.family, rtype.rank)
    if key not in _CACHE:
        _CACHE[key] = RootSystem(rtype)
    return _CACHE[key]


def root_system(family: str, rank: int) -> RootSystem:
    return build_root_system(RootSystemType(family, rank))


def level_one(rs: RootSystem, j: int) -> tuple:
    """The level-one roots of the maximal grading that singles out a_j."""
    phi = frozenset(range(1, rs.rank + 1)) - {j}
    return rs.grading(phi).level(1)
