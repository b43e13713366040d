"""Split semisimple Lie algebras from integer Chevalley structure constants.

The basis is {h_1..h_r} (simple coroots) plus {e_lam : lam a root}.  Signs of
the constants N(lam, mu) are fixed by the extraspecial-pair algorithm driven
by the canonical (height, lex) order of the positive roots, so identical
inputs always produce identical tables.  All arithmetic is over exact
rationals, or Gaussian rationals for the complexified models where each root
space is two-real-dimensional (spanned by e_lam and i*e_lam).

The Cartan involution acts by theta(h) = -conj(h), theta(e_lam) = -conj(e_-lam)
coefficientwise; over the rationals this is the familiar split involution, and
over the Gaussian rationals the coefficient conjugation makes -B(x, theta y)
positive definite on the underlying real algebra.  ``killing`` always denotes
the trace form of that real algebra (twice the real part of the complex trace
form in the Gaussian case).

Algebras are immutable after construction; brackets and Gram lookups are pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    IdentityViolation,
    InjectivityViolation,
    NonReducedSystem,
)
from .linalg import rank as mat_rank
from .linalg import solve
from .rootsys import Root, RootSystem
from .scalars import GAUSSIAN, RATIONAL, GaussianRational, as_scalar


class AlgebraElement:
    """Sparse vector over the algebra basis; zero entries are never stored."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra, terms):
        self.algebra = algebra
        self.terms = {k: v for k, v in terms.items() if v != 0}

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            s = out.get(k, 0) + v
            if s == 0:
                out.pop(k, None)
            else:
                out[k] = s
        return AlgebraElement(self.algebra, out)

    def __sub__(self, other):
        return self + (-1) * other

    def __rmul__(self, scalar):
        scalar = as_scalar(scalar, self.algebra.scalars)
        if scalar == 0:
            return AlgebraElement(self.algebra, {})
        return AlgebraElement(self.algebra, {k: scalar * v for k, v in self.terms.items()})

    def __neg__(self):
        return (-1) * self

    def __eq__(self, other):
        return isinstance(other, AlgebraElement) and self.terms == other.terms

    def __hash__(self):
        raise TypeError("AlgebraElement is unhashable")

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, key):
        return self.terms.get(key, 0)

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for key in sorted(self.terms, key=_basis_sort_key):
            bits.append(f"({self.terms[key]})*{_basis_name(key)}")
        return " + ".join(bits)


def _basis_name(key):
    tag, payload = key
    if tag == "h":
        return f"h{payload}"
    return f"e[{payload}]"


def _basis_sort_key(key):
    tag, payload = key
    if tag == "h":
        return (0, payload, ())
    return (1, payload.height, payload.coeffs)


class ChevalleyAlgebra:
    """Exact split (or complexified) semisimple Lie algebra over a reduced system."""

    def __init__(self, rs: RootSystem, scalars: str = RATIONAL):
        if rs.non_reduced:
            raise NonReducedSystem("Chevalley bases exist for reduced systems only")
        if scalars not in (RATIONAL, GAUSSIAN):
            raise ValueError(f"unknown scalar ring {scalars!r}")
        self.rs = rs
        self.scalars = scalars
        self.roots = tuple(sorted(rs.positives) + [-p for p in sorted(rs.positives)])
        self.basis = tuple(
            [("h", i) for i in range(1, rs.rank + 1)] + [("e", lam) for lam in self.roots]
        )
        self.dim = len(self.basis)
        self._n_pos = self._positive_constants()
        self._table = self._bracket_table()
        self._cartan_gram, self._root_gram = self._killing_gram()

    # -- structure constants -----------------------------------------------
    def _positive_constants(self):
        """N(a, b) for positive special pairs a < b, extraspecial signs +."""
        rs = self.rs
        pos = sorted(rs.positives)
        posset = set(p.coeffs for p in pos)
        table: dict = {}

        def n_any(lam: Root, mu: Root) -> Fraction:
            """N(lam, mu) for arbitrary sign pattern; assumes lam + mu is a root."""
            lp, mp = lam.is_positive, mu.is_positive
            if lp and mp:
                if (lam, mu) in table:
                    return table[(lam, mu)]
                return -table[(mu, lam)]
            if not lp and not mp:
                return -n_any(-lam, -mu)
            if not lp:
                return -n_any(mu, lam)
            nu = Root(lam.shifted(mu))
            if nu.is_positive:
                ratio = rs.length_sq(nu) / rs.length_sq(lam)
                return ratio * n_any(nu, -mu)
            ratio = rs.length_sq(nu) / rs.length_sq(mu)
            return ratio * n_any(-nu, lam)

        for gamma in pos:
            if gamma.height == 1:
                continue
            pairs = []
            for xi in pos:
                if xi.height >= gamma.height:
                    break
                rest = tuple(g - x for g, x in zip(gamma.coeffs, xi.coeffs))
                if rest in posset and xi < Root(rest):
                    pairs.append((xi, Root(rest)))
            alpha, beta = pairs[0]
            table[(alpha, beta)] = Fraction(1 + rs.string_down_count(beta, alpha))
            for (xi, eta) in pairs[1:]:
                acc = Fraction(0)
                d1 = xi.shifted(alpha, -1)
                if d1 in posset or tuple(-c for c in d1) in posset:
                    acc += n_any(-alpha, xi) * n_any(Root(d1), eta)
                d2 = eta.shifted(alpha, -1)
                if d2 in posset or tuple(-c for c in d2) in posset:
                    acc += n_any(-alpha, eta) * n_any(xi, Root(d2))
                table[(xi, eta)] = acc / n_any(-alpha, gamma)
        for value in table.values():
            assert value.denominator == 1, "non-integral structure constant"
        return {k: int(v) for k, v in table.items()}

    def structure_constant(self, lam: Root, mu: Root) -> int:
        """N(lam, mu) with [e_lam, e_mu] = N(lam, mu) e_(lam+mu); 0 if not a root."""
        s = lam.shifted(mu)
        if not self.rs.contains(s) or all(c == 0 for c in s):
            return 0
        return self._n_any_public(lam, mu)

    def _n_any_public(self, lam, mu):
        lp, mp = lam.is_positive, mu.is_positive
        if lp and mp:
            if (lam, mu) in self._n_pos:
                return self._n_pos[(lam, mu)]
            return -self._n_pos[(mu, lam)]
        if not lp and not mp:
            return -self._n_any_public(-lam, -mu)
        if not lp:
            return -self._n_any_public(mu, lam)
        nu = Root(lam.shifted(mu))
        rs = self.rs
        if nu.is_positive:
            val = rs.length_sq(nu) / rs.length_sq(lam) * self._n_any_public(nu, -mu)
        else:
            val = rs.length_sq(nu) / rs.length_sq(mu) * self._n_any_public(-nu, lam)
        assert val.denominator == 1
        return int(val)

    def coroot_coefficients(self, lam: Root):
        """Integers c_i with lam-dual = sum c_i alpha_i-dual."""
        rs = self.rs
        ll = rs.length_sq(lam)
        out = []
        for i in range(1, rs.rank + 1):
            c = lam.coeffs[i - 1] * rs.length_sq(rs.simple(i)) / ll
            assert c.denominator == 1, "coroot is not an integral coroot combination"
            out.append(int(c))
        return tuple(out)

    def _bracket_table(self):
        """Brackets of all ordered basis pairs, stored sparsely."""
        rs = self.rs
        table = {}
        r = rs.rank
        for i in range(1, r + 1):
            hi = ("h", i)
            for lam in self.roots:
                val = rs.pairing(lam, rs.simple(i))
                if val:
                    table[(hi, ("e", lam))] = {("e", lam): Fraction(val)}
        for a, lam in enumerate(self.roots):
            for mu in self.roots[a + 1 :]:
                s = lam.shifted(mu)
                key = (("e", lam), ("e", mu))
                if all(c == 0 for c in s):
                    coro = self.coroot_coefficients(lam if lam.is_positive else mu)
                    sign = 1 if lam.is_positive else -1
                    table[key] = {
                        ("h", i + 1): Fraction(sign * c) for i, c in enumerate(coro) if c
                    }
                elif rs.contains(s):
                    n = self._n_any_public(lam, mu)
                    if n:
                        table[key] = {("e", Root(s)): Fraction(n)}
        return table

    def bracket_basis(self, ka, kb) -> dict:
        if ka == kb:
            return {}
        if (ka, kb) in self._table:
            return self._table[(ka, kb)]
        if (kb, ka) in self._table:
            return {k: -v for k, v in self._table[(kb, ka)].items()}
        return {}

    # -- public element API ---------------------------------------------------
    def zero(self) -> AlgebraElement:
        return AlgebraElement(self, {})

    def h(self, i: int) -> AlgebraElement:
        return AlgebraElement(self, {("h", i): as_scalar(1, self.scalars)})

    def e(self, lam: Root, coefficient=1) -> AlgebraElement:
        if not self.rs.contains(lam):
            raise ValueError(f"{lam} is not a root")
        return AlgebraElement(self, {("e", lam): as_scalar(coefficient, self.scalars)})

    def element(self, terms: dict) -> AlgebraElement:
        return AlgebraElement(self, {k: as_scalar(v, self.scalars) for k, v in terms.items()})

    def bracket(self, x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
        out: dict = {}
        for ka, ca in x.terms.items():
            for kb, cb in y.terms.items():
                tab = self.bracket_basis(ka, kb)
                if not tab:
                    continue
                c = ca * cb
                for k, v in tab.items():
                    s = out.get(k, 0) + c * v
                    if s == 0:
                        out.pop(k, None)
                    else:
                        out[k] = s
        return AlgebraElement(self, out)

    def ad(self, x: AlgebraElement):
        return lambda y: self.bracket(x, y)

    def theta(self, x: AlgebraElement) -> AlgebraElement:
        """Cartan involution: h -> -conj(h) on the Cartan part, e_lam -> -conj(.) e_-lam."""
        out = {}
        for key, c in x.terms.items():
            cc = -c.conjugate()
            if key[0] == "h":
                out[key] = cc
            else:
                out[("e", -key[1])] = cc
        return AlgebraElement(self, out)

    # -- invariant forms ---------------------------------------------------------
    def _killing_gram(self):
        """Exact Gram data of the complex trace form on the basis.

        ad(x) ad(y) shifts the root grading by the sum of the weights of x and
        y, so the only nonzero Gram entries are Cartan x Cartan and the pairs
        (e_lam, e_-lam); those are computed by honest traces.
        """
        rs = self.rs
        r = rs.rank
        cartan = [[Fraction(0)] * r for _ in range(r)]
        for i in range(r):
            for j in range(r):
                cartan[i][j] = sum(
                    Fraction(rs.pairing(lam, rs.simple(i + 1)) * rs.pairing(lam, rs.simple(j + 1)))
                    for lam in self.roots
                )
        root_entries = {}
        for lam in rs.positives:
            total = Fraction(0)
            for key in self.basis:
                y = self.bracket_basis(("e", -lam), key)
                acc = Fraction(0)
                for k2, v2 in y.items():
                    acc += v2 * self.bracket_basis(("e", lam), k2).get(key, Fraction(0))
                total += acc
            root_entries[lam] = total
        return cartan, root_entries

    def killing_complex(self, x: AlgebraElement, y: AlgebraElement):
        """The scalar-bilinear trace form (complex-valued over Gaussian scalars)."""
        total = as_scalar(0, self.scalars)
        for (ta, pa), ca in x.terms.items():
            for (tb, pb), cb in y.terms.items():
                if ta == "h" and tb == "h":
                    total = total + ca * cb * self._cartan_gram[pa - 1][pb - 1]
                elif ta == "e" and tb == "e" and pa == -pb:
                    lam = pa if pa.is_positive else pb
                    total = total + ca * cb * self._root_gram[lam]
        return total

    def killing(self, x: AlgebraElement, y: AlgebraElement) -> Fraction:
        """Killing form of the underlying real Lie algebra."""
        value = self.killing_complex(x, y)
        if self.scalars == RATIONAL:
            return Fraction(value)
        return 2 * value.real

    def b_theta(self, x: AlgebraElement, y: AlgebraElement) -> Fraction:
        """The positive definite inner product -B(x, theta y) on the real algebra."""
        return -self.killing(x, self.theta(y))

    def cartan_dual(self, lam: Root) -> AlgebraElement:
        """The vector H in the Cartan part with b_theta(H, .) = lam(.) there."""
        rs = self.rs
        r = rs.rank
        factor = 2 if self.scalars == GAUSSIAN else 1
        gram = [[factor * self._cartan_gram[i][j] for j in range(r)] for i in range(r)]
        rhs = [Fraction(rs.pairing(lam, rs.simple(j + 1))) for j in range(r)]
        coeffs = solve(gram, rhs)
        return self.element({("h", i + 1): c for i, c in enumerate(coeffs)})

    # -- verification helpers -------------------------------------------------
    def jacobi_defect(self, x, y, z) -> AlgebraElement:
        b = self.bracket
        return b(x, b(y, z)) + b(y, b(z, x)) + b(z, b(x, y))

    def check_jacobi_exhaustive(self) -> int:
        """Jacobi on all unordered basis triples; returns the number checked."""
        elems = [AlgebraElement(self, {k: Fraction(1)}) for k in self.basis]
        n = len(elems)
        count = 0
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    if not self.jacobi_defect(elems[i], elems[j], elems[k]).is_zero:
                        raise IdentityViolation(
                            f"Jacobi fails on basis triple {i},{j},{k}"
                        )
                    count += 1
        return count

    def check_constant_magnitudes(self) -> int:
        """|N(lam, mu)| = p + 1 for every root pair; returns pairs checked."""
        rs = self.rs
        count = 0
        for lam in self.roots:
            for mu in self.roots:
                s = lam.shifted(mu)
                if not rs.contains(s) or all(c == 0 for c in s):
                    continue
                p = rs.string_down_count(mu, lam)
                if abs(self.structure_constant(lam, mu)) != p + 1:
                    raise IdentityViolation(f"|N({lam},{mu})| != p+1")
                count += 1
        return count

    def real_root_basis(self, lam: Root):
        """Basis of the root space of lam in the underlying real algebra."""
        vecs = [self.e(lam)]
        if self.scalars == GAUSSIAN:
            vecs.append(self.e(lam, GaussianRational(0, 1)))
        return vecs

    def in_centraliser_of_flat(self, x: AlgebraElement) -> bool:
        """Whether x lies in the compact centraliser of the flat (the k_0 part)."""
        for key, c in x.terms.items():
            if key[0] == "e":
                return False
            if c.real != 0:
                return False
        return True


def build_algebra(rs: RootSystem, scalars: str = RATIONAL) -> ChevalleyAlgebra:
    return ChevalleyAlgebra(rs, scalars)


@dataclass
class ThetaBracketReport:
    root: Root
    pair_checked: bool
    k0_checked: bool


def check_theta_bracket_identity(
    algebra: ChevalleyAlgebra, lam: Root, x: AlgebraElement, y: AlgebraElement = None
) -> ThetaBracketReport:
    """Verify [theta X, X] = b_theta(X, X) * H_lam for X in the root space of lam,
    and that [theta X, Y] lands in the k_0 part for orthogonal X, Y there.
    """
    for elem in (x,) + ((y,) if y is not None else ()):
        for key in elem.terms:
            if key != ("e", lam):
                raise ValueError(f"vector has a component off the root space of {lam}")
    h_lam = algebra.cartan_dual(lam)
    lhs = algebra.bracket(algebra.theta(x), x)
    rhs = algebra.b_theta(x, x) * h_lam
    if lhs != rhs:
        raise IdentityViolation(f"[theta X, X] != |X|^2 H for X in g_{lam}")
    k0_checked = False
    if y is not None:
        if algebra.b_theta(x, y) != 0:
            raise ValueError("X and Y must be b_theta-orthogonal")
        mixed = algebra.bracket(algebra.theta(x), y)
        if not algebra.in_centraliser_of_flat(mixed):
            raise IdentityViolation(f"[theta X, Y] escapes k_0 for X, Y in g_{lam}")
        k0_checked = True
    return ThetaBracketReport(root=lam, pair_checked=True, k0_checked=k0_checked)


@dataclass
class StringInjectivityReport:
    alpha: Root
    beta: Root
    power: int
    ranks: tuple


def check_string_injectivity(
    algebra: ChevalleyAlgebra, alpha: Root, beta: Root, k: int
) -> StringInjectivityReport:
    """Exact-rank check that ad(X)^k : g_alpha -> g_(alpha+k*beta) is injective
    for every real basis vector X of g_beta.
    """
    rs = algebra.rs
    string = rs.root_string(alpha, beta)
    if k < 1 or k >= len(string):
        raise ValueError(f"power {k} outside the string through {alpha}")
    target = string[k]
    source = algebra.real_root_basis(alpha)
    target_basis = algebra.real_root_basis(target)
    ranks = []
    for x in algebra.real_root_basis(beta):
        cols = []
        for v in source:
            img = v
            for _ in range(k):
                img = algebra.bracket(x, img)
            cols.append(_real_components(img, target, algebra))
        mat = [[cols[c][r] for c in range(len(cols))] for r in range(len(target_basis))]
        rk = mat_rank(mat)
        if rk != len(source):
            raise InjectivityViolation(
                f"ad(X)^{k} on g_{alpha} has rank {rk} < {len(source)}"
            )
        ranks.append(rk)
    return StringInjectivityReport(alpha=alpha, beta=beta, power=k, ranks=tuple(ranks))


def _real_components(elem: AlgebraElement, lam: Root, algebra: ChevalleyAlgebra):
    c = elem.coefficient(("e", lam))
    rest = {k: v for k, v in elem.terms.items() if k != ("e", lam)}
    if rest:
        raise ValueError(f"element is not contained in the root space of {lam}")
    if algebra.scalars == RATIONAL:
        return [Fraction(c)]
    c = as_scalar(c, GAUSSIAN)
    return [c.real, c.imag]


def dump_structure_constants(algebra: ChevalleyAlgebra) -> list:
    """JSON-friendly table of all nonzero N(lam, mu) over root pairs."""
    out = []
    for lam in algebra.roots:
        for mu in algebra.roots:
            n = algebra.structure_constant(lam, mu)
            if n:
                out.append(
                    {"lam": list(lam.coeffs), "mu": list(mu.coeffs), "n": n}
                )
    return out
