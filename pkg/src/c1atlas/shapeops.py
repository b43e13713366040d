"""Extrinsic geometry of orbits inside the solvable model.

A noncompact symmetric space is a solvable group AN with a left-invariant
metric; on the Lie algebra a + n that metric is b_theta on the flat part and
half of b_theta on the nilpotent part.  Subgroups whose Lie algebra h is a
bracket-closed span of root spaces have completely explicit shape operators:

    <A_xi X, Y>_AN = 1/4 <[xi, X] - [theta xi, X], Y>_{b_theta},

which this module evaluates exactly and always cross-checks against the
Koszul-formula derivative -(nabla_X xi)^T.  Everything stays in Fractions:
totally-geodesic verdicts are exact zero tests and the constant-principal-
curvature check compares characteristic polynomials literally.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import FormulaMismatch, IdentityViolation, NotClosed, SpectrumMismatch
from .linalg import charpoly, inverse, mat_vec
from .rootsys import Root, RootSystem
from .scalars import GAUSSIAN, GaussianRational, as_scalar
from .chevalley import AlgebraElement, ChevalleyAlgebra

# Real basis keys: ("h", i) and, over Gaussian scalars, ("ih", i) spanning the
# compact centraliser of the flat; ("e", lam) / ("ie", lam) span root spaces.


def _real_coords(algebra: ChevalleyAlgebra, elem: AlgebraElement) -> dict:
    out = {}
    gaussian = algebra.scalars == GAUSSIAN
    for (tag, payload), c in elem.terms.items():
        if gaussian:
            c = as_scalar(c, GAUSSIAN)
            re, im = c.real, c.imag
        else:
            re, im = Fraction(c), Fraction(0)
        if re:
            out[(tag, payload)] = re
        if im:
            out[(("ih" if tag == "h" else "ie"), payload)] = im
    return out


def _from_real_key(algebra: ChevalleyAlgebra, key, coefficient=1) -> AlgebraElement:
    tag, payload = key
    if tag in ("ih", "ie"):
        c = GaussianRational(0, 1) * as_scalar(coefficient, GAUSSIAN)
        base = ("h", payload) if tag == "ih" else ("e", payload)
        return AlgebraElement(algebra, {base: c})
    return AlgebraElement(algebra, {key: as_scalar(coefficient, algebra.scalars)})


class SolvableModel:
    """The metric solvable group attached to a split or complexified algebra."""

    def __init__(self, algebra: ChevalleyAlgebra):
        self.algebra = algebra
        rs = algebra.rs
        keys = [("h", i) for i in range(1, rs.rank + 1)]
        for lam in sorted(rs.positives):
            keys.append(("e", lam))
            if algebra.scalars == GAUSSIAN:
                keys.append(("ie", lam))
        self.an_keys = tuple(keys)
        self._an_keyset = frozenset(keys)

    @property
    def rs(self) -> RootSystem:
        return self.algebra.rs

    def basis_vector(self, key) -> AlgebraElement:
        return _from_real_key(self.algebra, key)

    def _check_in_an(self, x: AlgebraElement):
        for key in _real_coords(self.algebra, x):
            if key not in self._an_keyset:
                raise ValueError(f"component {key} lies outside a + n")

    def an_inner(self, x: AlgebraElement, y: AlgebraElement) -> Fraction:
        """<x, y>_AN = b_theta on the flat part plus half b_theta on n."""
        self._check_in_an(x)
        self._check_in_an(y)
        alg = self.algebra
        xa, xn = _split_flat(alg, x)
        ya, yn = _split_flat(alg, y)
        return alg.b_theta(xa, ya) + Fraction(1, 2) * alg.b_theta(xn, yn)

    def levi_civita(self, x, y, z) -> Fraction:
        """<nabla_x y, z>_AN for left-invariant fields on AN, exactly."""
        for v in (x, y, z):
            self._check_in_an(v)
        alg = self.algebra
        b = alg.bracket
        combo = b(x, y) + b(alg.theta(x), y) - b(x, alg.theta(y))
        return Fraction(1, 4) * alg.b_theta(combo, z)


def _split_flat(algebra, x):
    flat = {}
    nilp = {}
    for key, c in x.terms.items():
        if key[0] == "h":
            flat[key] = c
        else:
            nilp[key] = c
    return AlgebraElement(algebra, flat), AlgebraElement(algebra, nilp)


@dataclass
class ShapeOperatorMatrix:
    """Exact matrix of one shape operator over the tangent basis of an orbit."""

    xi_key: tuple
    basis: tuple
    matrix: tuple

    @property
    def is_zero(self) -> bool:
        return all(all(v == 0 for v in row) for row in self.matrix)

    def trace(self) -> Fraction:
        return sum((self.matrix[i][i] for i in range(len(self.basis))), Fraction(0))

    def charpoly(self):
        return charpoly([list(row) for row in self.matrix])

    def column(self, j):
        return [self.matrix[i][j] for i in range(len(self.basis))]


class OrbitSubalgebra:
    """Tangent algebra h = a + level-zero part + w + higher levels, and its normal space.

    ``selection`` maps each level-one root to "full" (its root space joins w)
    or "zero" (it joins the normal space).  ``dropped`` removes whole root
    spaces from the higher levels, which is only used to manufacture
    deliberately non-CPC subgroups in tests; the constructor still insists the
    result is a subalgebra.
    """

    def __init__(self, model: SolvableModel, j: int, selection=None, dropped=()):
        self.model = model
        self.j = j
        rs = model.rs
        grading = rs.grading(frozenset(range(1, rs.rank + 1)) - {j})
        self.grading = grading
        level_one = grading.level(1)
        if selection is None:
            selection = {lam: "zero" for lam in level_one}
        else:
            selection = dict(selection)
            if set(selection) != set(level_one):
                raise ValueError("selection must cover exactly the level-one roots")
        self.selection = selection
        dropped = frozenset(dropped)

        h_roots = list(grading.sigma_phi_pos)
        h_roots += [lam for lam in level_one if selection[lam] == "full"]
        for nu in sorted(grading.levels):
            if nu >= 2:
                h_roots += [lam for lam in grading.level(nu) if lam not in dropped]
        self.h_roots = tuple(sorted(h_roots))
        self.v_roots = tuple(sorted(lam for lam in level_one if selection[lam] == "zero"))
        self._assert_closed()

        keys = [("h", i) for i in range(1, rs.rank + 1)]
        for lam in self.h_roots:
            keys.append(("e", lam))
            if model.algebra.scalars == GAUSSIAN:
                keys.append(("ie", lam))
        self.h_keys = tuple(keys)
        vkeys = []
        for lam in self.v_roots:
            vkeys.append(("e", lam))
            if model.algebra.scalars == GAUSSIAN:
                vkeys.append(("ie", lam))
        self.v_keys = tuple(vkeys)
        self._h_keyset = frozenset(self.h_keys)
        self._gram = self._an_gram()
        self._gram_inv = inverse(self._gram)

    def _assert_closed(self):
        rs = self.model.rs
        roots = set(self.h_roots)
        for a in self.h_roots:
            for b in self.h_roots:
                s = a.shifted(b)
                if rs.contains(s) and Root(s) not in roots:
                    raise NotClosed(
                        f"[g_{a}, g_{b}] leaves the candidate tangent algebra (hits {Root(s)})"
                    )

    def _an_gram(self):
        model = self.model
        vecs = [model.basis_vector(k) for k in self.h_keys]
        return [[model.an_inner(x, y) for y in vecs] for x in vecs]

    @property
    def gram(self):
        return self._gram

    def tangent_project(self, elem: AlgebraElement) -> dict:
        """b_theta-orthogonal projection onto h, in real coordinates.

        The real basis vectors are pairwise b_theta-orthogonal across the
        h / complement divide (the flat part lies entirely inside h), so the
        projection just keeps the h-components.
        """
        coords = _real_coords(self.model.algebra, elem)
        return {k: v for k, v in coords.items() if k in self._h_keyset}

    def normal_basis(self):
        return [self.model.basis_vector(k) for k in self.v_keys]

    def contains_normal(self, xi: AlgebraElement) -> bool:
        coords = _real_coords(self.model.algebra, xi)
        return all(k in set(self.v_keys) for k in coords)

    @property
    def top_level_one_root(self) -> Root:
        heights = {}
        for lam in self.grading.level(1):
            heights.setdefault(lam.height, []).append(lam)
        if any(len(v) > 1 for v in heights.values()):
            raise ValueError("level one is not a height chain; no top root")
        return max(self.grading.level(1))


def shape_operator(orbit: OrbitSubalgebra, xi: AlgebraElement) -> ShapeOperatorMatrix:
    """The exact shape operator of the orbit in normal direction xi.

    Columns are solved from <A_xi X, Y>_AN over the tangent basis, then
    re-derived from the Levi-Civita formula; any disagreement raises
    FormulaMismatch.
    """
    model = orbit.model
    alg = model.algebra
    if not orbit.contains_normal(xi):
        raise ValueError("xi must lie in the normal space of the orbit")
    basis = [model.basis_vector(k) for k in orbit.h_keys]
    theta_xi = alg.theta(xi)
    columns = []
    for x in basis:
        combo = alg.bracket(xi, x) - alg.bracket(theta_xi, x)
        rhs = [Fraction(1, 4) * alg.b_theta(combo, y) for y in basis]
        columns.append(mat_vec(orbit._gram_inv, rhs))
        kos = [-model.levi_civita(x, xi, y) for y in basis]
        if mat_vec(orbit._gram_inv, kos) != columns[-1]:
            raise FormulaMismatch(
                "bracket formula and Koszul derivative disagree on a tangent vector"
            )
    n = len(basis)
    matrix = tuple(tuple(columns[c][r] for c in range(n)) for r in range(n))
    xi_key = tuple(sorted(_real_coords(alg, xi).items()))
    return ShapeOperatorMatrix(xi_key=xi_key, basis=orbit.h_keys, matrix=matrix)


def is_totally_geodesic(orbit: OrbitSubalgebra) -> bool:
    """True iff every shape operator vanishes identically (exact zero test)."""
    return all(shape_operator(orbit, xi).is_zero for xi in orbit.normal_basis())


@dataclass
class ShapeIdentityReport:
    flat_annihilated: bool
    bracket_formula: bool
    level_zero_formula: bool
    top_root_annihilates: bool


def check_shape_identities(orbit: OrbitSubalgebra) -> ShapeIdentityReport:
    """Verify the structural identities of the shape operators on this orbit:

    (a) A_xi kills the flat part for every normal xi;
    (b) A_xi X is the tangent projection of ([xi, X] - [theta xi, X]) / 2;
    (c) for X in a level-zero root space the theta term drops out;
    (d) normal directions in the top level-one root space kill level zero.
    """
    model = orbit.model
    alg = model.algebra
    sigma_j = set(orbit.grading.sigma_phi_pos)
    top = orbit.top_level_one_root
    half = as_scalar(Fraction(1, 2), alg.scalars)
    for vk in orbit.v_keys:
        xi = model.basis_vector(vk)
        op = shape_operator(orbit, xi)
        theta_xi = alg.theta(xi)
        for c, key in enumerate(orbit.h_keys):
            x = model.basis_vector(key)
            col = op.column(c)
            if key[0] == "h" and any(v != 0 for v in col):
                raise IdentityViolation(f"A_xi does not kill the flat part at {key}")
            expected = orbit.tangent_project(
                half * (alg.bracket(xi, x) - alg.bracket(theta_xi, x))
            )
            got = {orbit.h_keys[r]: col[r] for r in range(len(col)) if col[r] != 0}
            if expected != got:
                raise IdentityViolation(f"projection formula fails at xi={vk}, X={key}")
            if key[0] in ("e", "ie") and key[1] in sigma_j:
                plain = orbit.tangent_project(half * alg.bracket(xi, x))
                if plain != got:
                    raise IdentityViolation(
                        f"level-zero shortcut fails at xi={vk}, X={key}"
                    )
                if vk[1] == top and any(v != 0 for v in col):
                    raise IdentityViolation(
                        f"top-root normal direction acts on level zero at X={key}"
                    )
    return ShapeIdentityReport(True, True, True, True)


def check_self_adjoint(orbit: OrbitSubalgebra, op: ShapeOperatorMatrix) -> bool:
    """A_xi must be symmetric for the AN Gram matrix of the orbit."""
    g = orbit.gram
    n = len(op.basis)
    ga = [
        [
            sum(g[i][k] * op.matrix[k][j] for k in range(n))
            for j in range(n)
        ]
        for i in range(n)
    ]
    return all(ga[i][j] == ga[j][i] for i in range(n) for j in range(i + 1, n))


def cpc_charpoly_constancy(orbit: OrbitSubalgebra, samples) -> list:
    """Characteristic polynomials of A_xi across equal-norm normal samples.

    Exact equality is required; a mismatch raises SpectrumMismatch.  Returns
    the common coefficient list.
    """
    if not samples:
        raise ValueError("need at least one normal sample")
    model = orbit.model
    norms = {model.an_inner(xi, xi) for xi in samples}
    if len(norms) != 1:
        raise ValueError(f"samples have different norm-squares {sorted(norms)}")
    polys = [shape_operator(orbit, xi).charpoly() for xi in samples]
    for p in polys[1:]:
        if p != polys[0]:
            raise SpectrumMismatch(
                "characteristic polynomials differ between equal-norm normal directions"
            )
    return polys[0]
