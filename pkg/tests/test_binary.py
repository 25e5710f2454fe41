"""Binary bracket axioms, negatives with pinned witnesses, twists."""

import random
from fractions import Fraction

import pytest

from homnambu.binary import (HomLieSuper, InputError, SuperBracket2,
                             change_of_basis, derived_subspace,
                             hom_jacobi_residual, is_ideal, is_subalgebra,
                             verify_hom_jacobi, verify_morphism,
                             verify_multiplicative, verify_skew, yau_twist)
from homnambu.fixtures import (gl11, neg_jacobi, neg_mult, neg_skew,
                               random_even_invertible)
from homnambu.graded import GradedMap, graded_space, identity_map
from homnambu.linalg import Matrix, Subspace, frac, unit_vec


def test_all_fixtures_satisfy_binary_axioms(all_binary):
    for name, lie, _ in all_binary:
        assert verify_skew(lie).verdict == "pass", name
        assert verify_hom_jacobi(lie).verdict == "pass", name
        assert verify_multiplicative(lie).verdict == "pass", name


def test_gl11_structure_constants(g11):
    names = g11.space.names
    assert names == ("h1", "h2", "q", "p")
    assert g11.bracket.value(0, 2) == (0, 0, 1, 0)     # [h1,q] = q
    assert g11.bracket.value(0, 3) == (0, 0, 0, -1)    # [h1,p] = -p
    assert g11.bracket.value(2, 3) == (1, 1, 0, 0)     # [q,p] = h1+h2
    assert g11.bracket.value(2, 2) == (0, 0, 0, 0)
    # mirror entries carry the super sign: [q,h1] = -q, [p,q] = h1+h2
    assert g11.bracket.value(2, 0) == (0, 0, -1, 0)
    assert g11.bracket.value(3, 2) == (1, 1, 0, 0)


def test_neg_skew_witness():
    rep = verify_skew(neg_skew())
    assert rep.verdict == "fail"
    f = rep.findings[0]
    assert f.witness == ("q", "p")
    assert f.residual == ("2", "0", "0", "0")


def test_neg_jacobi_witness():
    rep = verify_hom_jacobi(neg_jacobi())
    assert rep.verdict == "fail"
    f = rep.findings[0]
    assert f.witness == ("q", "q", "p")
    assert f.residual == ("0", "0", "2", "0")


def test_neg_mult_witness():
    rep = verify_multiplicative(neg_mult())
    assert rep.verdict == "fail"
    assert rep.findings[0].witness == ("h1", "q")


def test_hom_jacobi_residual_is_super_symmetric_under_first_two(g11):
    # residual(x,y,z) + (-1)^{|x||y|} residual(y,x,z) = 0 by construction
    p = g11.space.parities
    for x in range(4):
        for y in range(4):
            for z in range(4):
                r1 = hom_jacobi_residual(g11, x, y, z)
                r2 = hom_jacobi_residual(g11, y, x, z)
                s = -1 if p[x] and p[y] else 1
                assert all(a + s * b == 0 for a, b in zip(r1, r2))


def test_from_canonical_rejects_parity_breaking_values():
    sp = graded_space(("e", "x"), (0, 1))
    with pytest.raises(InputError):
        # [e,x] must be odd, so an e component is illegal
        SuperBracket2.from_canonical(sp, {(0, 1): (1, 0)})


def test_from_canonical_rejects_non_canonical_keys():
    sp = graded_space(("e", "x"), (0, 1))
    with pytest.raises(InputError):
        SuperBracket2.from_canonical(sp, {(1, 0): (0, 1)})


def test_identity_morphism_and_projection_negative(g11):
    ident = identity_map(g11.space)
    assert verify_morphism(ident, g11, g11).verdict == "pass"
    proj = GradedMap(g11.space, g11.space,
                     Matrix.build([[1, 0, 0, 0], [0, 1, 0, 0],
                                   [0, 0, 0, 0], [0, 0, 0, 0]]))
    rep = verify_morphism(proj, g11, g11)
    assert rep.verdict == "fail"
    assert rep.findings[0].witness == ("q", "p")


def test_yau_twist_stays_hom_lie(g11):
    rng = random.Random(21)
    for _ in range(10):
        s = random_even_invertible(rng, g11.space)
        a = GradedMap(g11.space, g11.space, s)
        if verify_morphism(a, g11, g11).verdict != "pass":
            continue
        tw = yau_twist(g11, a)
        assert verify_skew(tw).verdict == "pass"
        assert verify_hom_jacobi(tw).verdict == "pass"
        assert verify_multiplicative(tw).verdict == "pass"


def test_yau_twist_requires_morphism(g11):
    bad = GradedMap(g11.space, g11.space,
                    Matrix.build([[0, 1, 0, 0], [1, 0, 0, 0],
                                  [0, 0, 1, 0], [0, 0, 0, 1]]))
    with pytest.raises(Exception):
        yau_twist(g11, bad)


def test_change_of_basis_preserves_axioms(g11):
    rng = random.Random(22)
    for _ in range(10):
        s = random_even_invertible(rng, g11.space)
        conj = change_of_basis(g11, s)
        assert verify_skew(conj).verdict == "pass"
        assert verify_hom_jacobi(conj).verdict == "pass"


def test_ideal_and_subalgebra(g11):
    full = Subspace.full(4)
    d1 = derived_subspace(g11, full, full)
    # [g,g] = span{h1+h2, q, p}
    assert d1.dim == 3
    assert d1.contains((1, 1, 0, 0))
    assert is_ideal(g11, d1)
    assert is_subalgebra(g11, d1)
    span_q = Subspace.from_vectors(4, [unit_vec(4, 2)])
    assert is_subalgebra(g11, span_q)      # [q,q] = 0
    assert not is_ideal(g11, span_q)       # [q,p] escapes
