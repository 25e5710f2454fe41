"""Worked example algebras used across the test suite and the CLI corpus.

Each positive fixture returns an (algebra, representation) pair; the
negative fixtures return whatever broken object their verifier expects.
The negatives are built through the raw constructors on purpose.
"""

from fractions import Fraction

from .binary import HomLieSuper, SuperBracket2, change_of_basis, yau_twist
from .graded import GradedMap, graded_space, identity_map
from .linalg import Matrix, invert
from .reps import (Representation, adjoint_representation, trace_functional,
                   zero_representation)
from .ternary import TernaryHomLieSuper, induce_ternary


def a0():
    """Two-dimensional abelian algebra with one even and one odd generator."""
    sp = graded_space(("e1", "e2"), (0, 1))
    lie = HomLieSuper(sp, SuperBracket2.from_canonical(sp, {}), identity_map(sp))
    return lie, zero_representation(lie)


def aff1():
    """The affine line: [e1,e2] = e2, purely even, adjoint representation."""
    sp = graded_space(("e1", "e2"), (0, 0))
    bracket = SuperBracket2.from_canonical(sp, {(0, 1): (0, 1)})
    lie = HomLieSuper(sp, bracket, identity_map(sp))
    return lie, adjoint_representation(lie)


GL11_COEFFS = {
    (0, 2): (0, 0, 1, 0),    # [h1,q] = q
    (0, 3): (0, 0, 0, -1),   # [h1,p] = -p
    (1, 2): (0, 0, -1, 0),   # [h2,q] = -q
    (1, 3): (0, 0, 0, 1),    # [h2,p] = p
    (2, 3): (1, 1, 0, 0),    # [q,p] = h1 + h2
}


def gl11():
    """gl(1|1) on basis (h1, h2, q, p) with its defining representation.

    The supertrace of the defining representation is (1, -1, 0, 0), which
    is what makes this the workhorse fixture: the induced ternary bracket
    is nonzero but small enough to check by hand.
    """
    sp = graded_space(("h1", "h2", "q", "p"), (0, 0, 1, 1))
    bracket = SuperBracket2.from_canonical(sp, GL11_COEFFS)
    lie = HomLieSuper(sp, bracket, identity_map(sp))
    v = graded_space(("v0", "v1"), (0, 1))
    mk = lambda grid, par: GradedMap(v, v, Matrix.build(grid), par)
    mats = (
        mk([[1, 0], [0, 0]], 0),
        mk([[0, 0], [0, 1]], 0),
        mk([[0, 1], [0, 0]], 1),
        mk([[0, 0], [1, 0]], 1),
    )
    rep = Representation(lie, v, mats, identity_map(v))
    return lie, rep


def gl11_tau():
    lie, rep = gl11()
    return lie, trace_functional(rep)


def induced_gl11() -> TernaryHomLieSuper:
    lie, tau = gl11_tau()
    return induce_ternary(lie, tau, lie.alpha, lie.alpha)


def alpha_t(space, t):
    """diag(1, 1, t, 1/t): an automorphism of gl(1|1) for any nonzero t."""
    t = Fraction(t)
    d = [Fraction(1), Fraction(1), t, 1 / t]
    m = Matrix.build([[d[i] if i == j else 0 for j in range(4)] for i in range(4)])
    return GradedMap(space, space, m)


def gl11t(t=Fraction(2)):
    """Yau twist of gl(1|1) along alpha_t, with its adjoint representation.

    The defining representation does not survive the twist (no even beta
    on the 2-dimensional module intertwines it), so the twisted fixture
    ships the adjoint action instead.  Its supertrace functional is
    (-t + 1/t, t - 1/t, 0, 0), still alpha_t-invariant.
    """
    base, _ = gl11()
    twisted = yau_twist(base, alpha_t(base.space, t))
    return twisted, adjoint_representation(twisted)


# --- negative controls -----------------------------------------------------
# Each one breaks exactly the axiom named in its function, with the
# witness tuple the verifier is expected to report.


def neg_skew():
    """[q,p] and [p,q] forced antisymmetric; odd-odd pairs must be symmetric.

    verify_skew fails at witness (q, p).
    """
    lie, _ = gl11()
    b = lie.bracket.with_entry(2, 3, (1, 0, 0, 0)).with_entry(3, 2, (-1, 0, 0, 0))
    return HomLieSuper(lie.space, b, lie.alpha)


def neg_jacobi():
    """[q,p] = h1 consistently (mirror included): skew holds, Jacobi breaks.

    verify_hom_jacobi fails at witness (q, q, p) with residual 2q.
    """
    sp = graded_space(("h1", "h2", "q", "p"), (0, 0, 1, 1))
    coeffs = dict(GL11_COEFFS)
    coeffs[(2, 3)] = (1, 0, 0, 0)
    return HomLieSuper(sp, SuperBracket2.from_canonical(sp, coeffs), identity_map(sp))


def neg_mult():
    """alpha swapping h1 and h2 is not a morphism of gl(1|1).

    verify_multiplicative fails at witness (h1, q).
    """
    lie, _ = gl11()
    m = Matrix.build([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    return HomLieSuper(lie.space, lie.bracket, GradedMap(lie.space, lie.space, m))


def neg_rep():
    """beta = diag(1,2) breaks the intertwining axiom.

    verify_representation fails axiom 1 at witness (q,).
    """
    lie, rep = gl11()
    beta = GradedMap(rep.module_space, rep.module_space,
                     Matrix.build([[1, 0], [0, 2]]))
    return Representation(lie, rep.module_space, rep.matrices, beta)


def neg_ternary_skew():
    """One stored ternary coefficient bumped by +1, permuted copies stale."""
    t = induced_gl11()
    v = t.bracket.value(0, 2, 3)
    bumped = (v[0] + 1,) + v[1:]
    return TernaryHomLieSuper(t.space, t.bracket.with_entry(0, 2, 3, bumped),
                              t.alpha1, t.alpha2)


def neg_nambu():
    """[h1,q,p] doubled consistently: skew survives, Hom-Nambu does not."""
    t = induced_gl11()
    b = t.bracket.with_canonical((0, 2, 3), (2, 2, 0, 0))
    return TernaryHomLieSuper(t.space, b, t.alpha1, t.alpha2)


def neg_ternary_mult():
    """Induced bracket with a non-morphism even twist in both slots."""
    t = induced_gl11()
    m = Matrix.build([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    a = GradedMap(t.space, t.space, m)
    return TernaryHomLieSuper(t.space, t.bracket, a, a)


# --- randomization helpers --------------------------------------------------


def random_even_invertible(rng, space) -> Matrix:
    """Random invertible parity-preserving matrix with entries in [-2, 2]."""
    dim = space.dim
    while True:
        rows = []
        for i in range(dim):
            rows.append(tuple(
                Fraction(rng.randint(-2, 2))
                if space.parities[i] == space.parities[j] else Fraction(0)
                for j in range(dim)))
        m = Matrix(dim, dim, tuple(rows))
        if invert(m) is not None:
            return m


def conjugate_pair(lie, rep, s: Matrix):
    """Transport (lie, rep) along the basis change e'_j = s e_j.

    The module and beta stay put; rho'(e'_j) = rho(s e_j) by linearity.
    """
    lie2 = change_of_basis(lie, s)
    mats = tuple(
        GradedMap(rep.module_space, rep.module_space,
                  rep.rho_of_vector(s.col(j)), lie.space.parities[j])
        for j in range(lie.dim))
    rep2 = Representation(lie2, rep.module_space, mats, rep.beta)
    return lie2, rep2


def conjugate_gl11(rng):
    lie, rep = gl11()
    return conjugate_pair(lie, rep, random_even_invertible(rng, lie.space))
