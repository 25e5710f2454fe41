"""Hom-Lie superalgebras: brackets, twist maps, verifiers, Yau twists.

A bracket is stored as a full dim x dim table of structure vectors.  The
canonical constructor accepts coefficients on canonical index pairs only
(i < j, or i = j odd) and fills the rest through the super-skew rule
[y,x] = -(-1)^{|x||y|}[x,y]; the raw constructor accepts any table so the
verifiers have something to catch.
"""

from dataclasses import dataclass

from .graded import GradedMap, GradedSpace, canonicalize, skew_basis
from .linalg import (InputError, Matrix, PreconditionError, Subspace, Vec,
                     is_zero_vec, subspace_sum, vec, vec_add, vec_scale,
                     zero_vec)
from .report import Report, fmt_vec


def _parity_law_violations(space, out_vec, want_parity):
    bad = []
    for k, c in enumerate(out_vec):
        if c != 0 and space.parities[k] != want_parity:
            bad.append(space.names[k])
    return bad


@dataclass(frozen=True)
class SuperBracket2:
    space: GradedSpace
    table: tuple  # table[i][j] -> structure vector

    @staticmethod
    def from_canonical(space: GradedSpace, coeffs: dict) -> "SuperBracket2":
        """Build from canonical-pair coefficients; everything else derived."""
        dim = space.dim
        canon = {}
        for key, value in coeffs.items():
            key = tuple(key)
            t, _, zero = canonicalize(key, space.parities)
            if key != t or zero:
                raise InputError(f"bracket key {key} is not canonical")
            v = vec(value)
            if len(v) != dim:
                raise InputError(f"bracket value for {key} has wrong length")
            want = (space.parities[key[0]] + space.parities[key[1]]) % 2
            bad = _parity_law_violations(space, v, want)
            if bad:
                raise InputError(f"bracket value for {key} breaks the parity "
                                 f"law at {bad}")
            canon[key] = v
        rows = []
        for i in range(dim):
            row = []
            for j in range(dim):
                t, sign, zero = canonicalize((i, j), space.parities)
                if zero or t not in canon:
                    row.append(zero_vec(dim))
                else:
                    row.append(vec_scale(sign, canon[t]))
            rows.append(tuple(row))
        return SuperBracket2(space, tuple(rows))

    @staticmethod
    def from_table(space: GradedSpace, table) -> "SuperBracket2":
        """Raw constructor: no skew or parity validation."""
        dim = space.dim
        rows = tuple(tuple(vec(table[i][j]) for j in range(dim)) for i in range(dim))
        return SuperBracket2(space, rows)

    def value(self, i: int, j: int) -> Vec:
        return self.table[i][j]

    def eval_vectors(self, u: Vec, v: Vec) -> Vec:
        out = zero_vec(self.space.dim)
        for i, a in enumerate(u):
            if a == 0:
                continue
            for j, b in enumerate(v):
                if b == 0:
                    continue
                cell = self.table[i][j]
                if not is_zero_vec(cell):
                    out = vec_add(out, vec_scale(a * b, cell))
        return out

    def with_entry(self, i: int, j: int, value) -> "SuperBracket2":
        """Patch a single ordered entry, leaving its mirror untouched."""
        rows = [list(r) for r in self.table]
        rows[i][j] = vec(value)
        return SuperBracket2(self.space, tuple(tuple(r) for r in rows))

    def canonical_coeffs(self) -> dict:
        sb = skew_basis(2, self.space)
        return {t: self.table[t[0]][t[1]] for t in sb.tuples
                if not is_zero_vec(self.table[t[0]][t[1]])}

    def is_zero(self) -> bool:
        return all(is_zero_vec(c) for row in self.table for c in row)


@dataclass(frozen=True)
class HomLieSuper:
    space: GradedSpace
    bracket: SuperBracket2
    alpha: GradedMap

    def __post_init__(self):
        if self.bracket.space != self.space:
            raise InputError("bracket space mismatch")
        if self.alpha.domain != self.space or self.alpha.codomain != self.space:
            raise InputError("twist must be an endomorphism of the algebra")
        if self.alpha.parity != 0:
            raise InputError("twist must be even")

    @staticmethod
    def validated(space, bracket, alpha) -> "HomLieSuper":
        a = HomLieSuper(space, bracket, alpha)
        for rep in (verify_skew(a), verify_hom_jacobi(a)):
            if not rep.ok:
                f = rep.findings[0]
                raise InputError(f"{f.check} fails at {f.witness}")
        return a

    @property
    def dim(self) -> int:
        return self.space.dim

    def bracket_eval(self, i: int, j: int) -> Vec:
        return self.bracket.value(i, j)


def bracket_eval(a: HomLieSuper, i: int, j: int) -> Vec:
    """Structure vector of [e_i, e_j], signs included for any order."""
    return a.bracket.value(i, j)


def verify_skew(a: HomLieSuper) -> Report:
    """Super-skew symmetry and the parity law, on every ordered basis pair."""
    rep = Report("verify_skew")
    sp = a.space
    for i in range(sp.dim):
        for j in range(i, sp.dim):
            sign = 1 if (sp.parities[i] and sp.parities[j]) else -1
            # [e_i,e_j] + (-1)^{|i||j|}[e_j,e_i] must vanish
            resid = vec_sub_signed(a.bracket.value(i, j), a.bracket.value(j, i), -sign)
            if not is_zero_vec(resid):
                rep.fail("skew", witness=(sp.names[i], sp.names[j]),
                         residual=tuple(fmt_vec(resid)))
            want = (sp.parities[i] + sp.parities[j]) % 2
            bad = _parity_law_violations(sp, a.bracket.value(i, j), want)
            if bad:
                rep.fail("parity-law", witness=(sp.names[i], sp.names[j]),
                         detail=f"output hits {bad}")
    rep.metrics["pairs_checked"] = sp.dim * (sp.dim + 1) // 2
    return rep


def vec_sub_signed(u: Vec, v: Vec, c) -> Vec:
    return vec_add(u, vec_scale(c, v))


def hom_jacobi_residual(a: HomLieSuper, x: int, y: int, z: int) -> Vec:
    """Cyclic residual (-1)^{|x||z|}[a(x),[y,z]] + cycled, zero when Jacobi holds."""
    p = a.space.parities
    out = zero_vec(a.space.dim)
    for (u, v, w) in ((x, y, z), (y, z, x), (z, x, y)):
        sign = -1 if (p[u] and p[w]) else 1
        inner = a.bracket.value(v, w)
        term = a.bracket.eval_vectors(a.alpha.column(u), inner)
        out = vec_add(out, vec_scale(sign, term))
    return out


def verify_hom_jacobi(a: HomLieSuper) -> Report:
    """Hom-Jacobi on all canonical basis triples (skew is assumed)."""
    rep = Report("verify_hom_jacobi")
    sb = skew_basis(3, a.space)
    for (x, y, z) in sb.tuples:
        resid = hom_jacobi_residual(a, x, y, z)
        if not is_zero_vec(resid):
            rep.fail("hom-jacobi",
                     witness=(a.space.names[x], a.space.names[y], a.space.names[z]),
                     residual=tuple(fmt_vec(resid)))
    rep.metrics["triples_checked"] = len(sb.tuples)
    return rep


def verify_multiplicative(a: HomLieSuper) -> Report:
    """alpha[x,y] = [alpha x, alpha y] on all basis pairs."""
    rep = Report("verify_multiplicative")
    for i in range(a.dim):
        for j in range(a.dim):
            lhs = a.alpha.apply(a.bracket.value(i, j))
            rhs = a.bracket.eval_vectors(a.alpha.column(i), a.alpha.column(j))
            resid = vec_sub_signed(lhs, rhs, -1)
            if not is_zero_vec(resid):
                rep.fail("multiplicative",
                         witness=(a.space.names[i], a.space.names[j]),
                         residual=tuple(fmt_vec(resid)))
    return rep


def verify_morphism(f: GradedMap, a: HomLieSuper, b: HomLieSuper) -> Report:
    """f[x,y]_a = [f x, f y]_b and f o alpha_a = alpha_b o f."""
    rep = Report("verify_morphism")
    if f.domain != a.space or f.codomain != b.space:
        raise InputError("morphism endpoints do not match the algebras")
    for i in range(a.dim):
        for j in range(a.dim):
            lhs = f.apply(a.bracket.value(i, j))
            rhs = b.bracket.eval_vectors(f.column(i), f.column(j))
            resid = vec_sub_signed(lhs, rhs, -1)
            if not is_zero_vec(resid):
                rep.fail("bracket-compat",
                         witness=(a.space.names[i], a.space.names[j]),
                         residual=tuple(fmt_vec(resid)))
    lhs = f.matrix.mul(a.alpha.matrix)
    rhs = b.alpha.matrix.mul(f.matrix)
    if lhs != rhs:
        for j in range(a.dim):
            resid = vec_sub_signed(lhs.col(j), rhs.col(j), -1)
            if not is_zero_vec(resid):
                rep.fail("twist-compat", witness=(a.space.names[j],),
                         residual=tuple(fmt_vec(resid)))
    return rep


def yau_twist(lie: HomLieSuper, morphism: GradedMap) -> HomLieSuper:
    """Twist a Lie superalgebra (alpha = id) along one of its morphisms."""
    if not lie.alpha.is_identity():
        raise PreconditionError("yau_twist expects an untwisted algebra")
    if morphism.domain != lie.space or morphism.codomain != lie.space:
        raise PreconditionError("twisting map must be an endomorphism")
    for i in range(lie.dim):
        for j in range(lie.dim):
            lhs = morphism.apply(lie.bracket.value(i, j))
            rhs = lie.bracket.eval_vectors(morphism.column(i), morphism.column(j))
            if lhs != rhs:
                raise PreconditionError(
                    f"twisting map is not a morphism at "
                    f"({lie.space.names[i]},{lie.space.names[j]})")
    dim = lie.dim
    table = tuple(tuple(morphism.apply(lie.bracket.value(i, j))
                        for j in range(dim)) for i in range(dim))
    twisted = HomLieSuper(lie.space, SuperBracket2(lie.space, table), morphism)
    assert verify_hom_jacobi(twisted).ok
    return twisted


def is_subalgebra(a: HomLieSuper, s: Subspace) -> bool:
    """alpha(s) in s and [s,s] in s."""
    if s.ambient_dim != a.dim:
        raise InputError("subspace ambient dimension mismatch")
    basis = s.vectors()
    for u in basis:
        if not s.contains(a.alpha.apply(u)):
            return False
    for u in basis:
        for v in basis:
            if not s.contains(a.bracket.eval_vectors(u, v)):
                return False
    return True


def is_ideal(a: HomLieSuper, s: Subspace) -> bool:
    """Subalgebra condition plus [s, g] in s."""
    if not is_subalgebra(a, s):
        return False
    dim = a.dim
    for u in s.vectors():
        for j in range(dim):
            ej = tuple(1 if k == j else 0 for k in range(dim))
            if not s.contains(a.bracket.eval_vectors(u, vec(ej))):
                return False
    return True


def derived_subspace(a: HomLieSuper, s1: Subspace, s2: Subspace) -> Subspace:
    """Span of [s1, s2] over echelon bases."""
    vecs = []
    for u in s1.vectors():
        for v in s2.vectors():
            w = a.bracket.eval_vectors(u, v)
            if not is_zero_vec(w):
                vecs.append(w)
    return Subspace.from_vectors(a.dim, vecs)


def change_of_basis(a: HomLieSuper, s: Matrix) -> HomLieSuper:
    """Conjugate the whole structure by an invertible even matrix.

    Column j of s holds the new basis vector e'_j in old coordinates.
    """
    from .linalg import invert
    sinv = invert(s)
    if sinv is None:
        raise PreconditionError("basis change matrix is singular")
    dim = a.dim
    for i in range(dim):
        for j in range(dim):
            if s.entries[i][j] != 0 and a.space.parities[i] != a.space.parities[j]:
                raise PreconditionError("basis change must be even")
    table = []
    for i in range(dim):
        row = []
        for j in range(dim):
            w = a.bracket.eval_vectors(s.col(i), s.col(j))
            row.append(sinv.apply(w))
        table.append(tuple(row))
    alpha2 = GradedMap(a.space, a.space, sinv.mul(a.alpha.matrix.mul(s)))
    return HomLieSuper(a.space, SuperBracket2(a.space, tuple(table)), alpha2)
