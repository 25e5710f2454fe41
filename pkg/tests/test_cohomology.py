"""Cochain complexes, coboundaries, and cocycle transfer to the induced side."""

import random
from fractions import Fraction

import pytest

from homnambu.cohomology import (Cochain, apply_coboundary,
                                 binary_adjoint_cocycle_matrix,
                                 binary_adjoint_cocycle_space,
                                 binary_adjoint_d1_matrix, binary_pair_eval,
                                 bracket_cochain, coboundary_matrix,
                                 cochain_length, cohomology_dims,
                                 delta1_matrix, delta2_matrix, ds_matrix,
                                 induce_cocycle, infer_parity,
                                 is_binary_cocycle, make_cochain,
                                 parity_support, verify_1cocycle_transfer,
                                 verify_bracket_cocycle, verify_class_transfer,
                                 verify_lemma_identity)
from homnambu.graded import skew_basis
from homnambu.linalg import (InputError, PreconditionError, is_zero_vec,
                             submatrix)
from homnambu.reps import trace_functional
from homnambu.ternary import induce_ternary


def induced(lie, rep):
    tau = trace_functional(rep)
    return tau, induce_ternary(lie, tau, lie.alpha, lie.alpha)


def kernel_combination(rng, vecs, n):
    cs = [Fraction(rng.randint(-3, 3)) for _ in vecs]
    return tuple(sum((c * v[i] for c, v in zip(cs, vecs)), Fraction(0))
                 for i in range(n))


def random_cochain(rng, cx, degree, space, parity):
    sel = parity_support(cx, degree, space, parity)
    n = cochain_length(cx, degree, space)
    coords = [Fraction(0)] * n
    for pos in sel:
        coords[pos] = Fraction(rng.randint(-3, 3))
    return Cochain(cx, degree, parity, space, tuple(coords))


def test_scalar_coboundary_shapes(g11):
    assert (ds_matrix(g11, 1).rows, ds_matrix(g11, 1).cols) == (8, 4)
    assert (ds_matrix(g11, 2).rows, ds_matrix(g11, 2).cols) == (12, 8)
    assert (ds_matrix(g11, 3).rows, ds_matrix(g11, 3).cols) == (16, 12)


def test_ds1_matches_direct_formula(all_binary):
    rng = random.Random(71)
    for name, lie, rep in all_binary:
        sb2 = skew_basis(2, lie.space)
        for parity in (0, 1):
            f = random_cochain(rng, "binary-scalar", 1, lie.space, parity)
            out = ds_matrix(lie, 1).apply(f.coords)
            for pos, (i, j) in enumerate(sb2.tuples):
                direct = -sum(c * fc for c, fc in
                              zip(lie.bracket.value(i, j), f.coords))
                assert out[pos] == direct, (name, i, j)


def test_scalar_complex_squares_to_zero(all_binary):
    for name, lie, rep in all_binary:
        assert ds_matrix(lie, 2).mul(ds_matrix(lie, 1)).is_zero(), name
        assert ds_matrix(lie, 3).mul(ds_matrix(lie, 2)).is_zero(), name


def parity_block(m, cx, deg_in, space, parity, parities_fn=parity_support):
    sel_out = parities_fn(cx, deg_in + 1, space, parity)
    sel_in = parities_fn(cx, deg_in, space, parity)
    return submatrix(m, sel_out, sel_in)


def test_ternary_complexes_square_to_zero(all_binary):
    for name, lie, rep in all_binary:
        tau, t = induced(lie, rep)
        sp = lie.space
        for cx in ("ternary-scalar", "ternary-adjoint"):
            d1 = delta1_matrix(t, cx)
            assert delta2_matrix(t, cx, 0).mul(d1).is_zero(), (name, cx)
            for parity in (0, 1):
                b2 = parity_block(delta2_matrix(t, cx, parity), cx, 2,
                                  sp, parity)
                b1 = parity_block(d1, cx, 1, sp, parity)
                assert b2.mul(b1).is_zero(), (name, cx, parity)


def test_cohomology_dimension_table(g11, t11):
    assert cohomology_dims(g11, "binary-scalar", 1) == (1, 0, 1)
    assert cohomology_dims(g11, "binary-scalar", 2) == (1, 1, 0)
    assert cohomology_dims(t11, "ternary-scalar", 1) == (1, 0, 1)
    assert cohomology_dims(t11, "ternary-scalar", 2) == (7, 1, 6)
    assert cohomology_dims(t11, "ternary-adjoint", 1) == (6, 0, 6)
    assert cohomology_dims(t11, "ternary-adjoint", 2) == (30, 2, 28)


def test_bracket_is_cyclic_cocycle(all_binary):
    for name, lie, rep in all_binary:
        r = verify_bracket_cocycle(lie)
        assert r.verdict == "pass", name
    for parity in (0, 1):
        space = binary_adjoint_cocycle_space(all_binary[2][1], parity)
        assert space.dim == 6, parity


def test_adjoint_d1_lands_in_cyclic_kernel(g11):
    m = binary_adjoint_cocycle_matrix(g11)
    assert m.mul(binary_adjoint_d1_matrix(g11)).is_zero()


def test_coboundary_matrix_dispatch(g11, t11):
    assert coboundary_matrix(g11, "binary-scalar", 2).entries == \
        ds_matrix(g11, 2).entries
    assert coboundary_matrix(t11, "ternary-scalar", 1).entries == \
        delta1_matrix(t11, "ternary-scalar").entries
    with pytest.raises(InputError):
        coboundary_matrix(g11, "ternary-scalar", 1)


def test_apply_coboundary_round(g11, t11):
    rng = random.Random(72)
    f = random_cochain(rng, "binary-scalar", 1, g11.space, 0)
    out = apply_coboundary(g11, f)
    assert out.degree == 2 and out.parity == 0
    assert out.coords == ds_matrix(g11, 1).apply(f.coords)
    h = random_cochain(rng, "ternary-adjoint", 2, t11.space, 1)
    out = apply_coboundary(t11, h)
    assert out.coords == delta2_matrix(t11, "ternary-adjoint", 1).apply(h.coords)


def test_cochain_parity_support_enforced(g11):
    n = cochain_length("binary-scalar", 2, g11.space)
    odd_pos = parity_support("binary-scalar", 2, g11.space, 1)[0]
    coords = [Fraction(0)] * n
    coords[odd_pos] = Fraction(1)
    with pytest.raises(InputError):
        Cochain("binary-scalar", 2, 0, g11.space, tuple(coords))
    assert infer_parity("binary-scalar", 2, g11.space, tuple(coords)) == 1


def test_make_cochain_keys(g11):
    c = make_cochain("binary-scalar", 2, g11.space, {(2, 3): Fraction(1)},
                     parity=0)
    assert binary_pair_eval(c, 2, 3) == 1
    assert binary_pair_eval(c, 3, 2) == 1    # (q,p) mirrors with a plus sign
    assert binary_pair_eval(c, 0, 0) == 0


def test_scalar_cocycle_transfer_all_fixtures(all_binary):
    for name, lie, rep in all_binary:
        tau, t = induced(lie, rep)
        r = verify_1cocycle_transfer(lie, tau, t)
        assert r.verdict == "pass", name


def test_induce_cocycle_scalar_oracle(g11, tau11, t11):
    # the q,p dual is a binary cocycle; its transfer must hit exactly the
    # triples whose tau-weighted pair collapses onto (q,p)
    phi = make_cochain("binary-scalar", 2, g11.space, {(2, 3): Fraction(1)},
                       parity=0)
    assert is_binary_cocycle(g11, phi)
    out = induce_cocycle(g11, tau11, phi, t11)
    sb2 = skew_basis(2, g11.space)
    tauv = tau11.values
    p = g11.space.parities
    for pos, pair in enumerate(sb2.tuples):
        x1, x2 = pair
        s12 = -1 if (p[x1] and p[x2]) else 1
        for k in range(g11.dim):
            s3 = -1 if (p[k] and (p[x1] ^ p[x2])) else 1
            want = (tauv[x1] * binary_pair_eval(phi, x2, k)
                    - s12 * tauv[x2] * binary_pair_eval(phi, x1, k)
                    + s3 * tauv[k] * binary_pair_eval(phi, x1, x2))
            assert out.coords[pos * g11.dim + k] == want


def test_induce_cocycle_rejects_non_cocycle(g11, tau11):
    bad = random_cochain(random.Random(73), "binary-scalar", 2, g11.space, 0)
    assert not is_binary_cocycle(g11, bad)
    with pytest.raises(PreconditionError):
        induce_cocycle(g11, tau11, bad)


def test_adjoint_cocycles_transfer(g11, tau11, t11):
    # twisted 2-cocycles with values in the algebra keep satisfying the
    # cocycle identity after induction; the constructor re-checks delta2
    rng = random.Random(74)
    n = cochain_length("binary-adjoint", 2, g11.space)
    for parity in (0, 1):
        vecs = binary_adjoint_cocycle_space(g11, parity).vectors()
        assert len(vecs) == 6
        for _ in range(10):
            coords = kernel_combination(rng, vecs, n)
            phi = Cochain("binary-adjoint", 2, parity, g11.space, coords)
            out = induce_cocycle(g11, tau11, phi, t11)
            assert out.complex == "ternary-adjoint"
            resid = delta2_matrix(t11, "ternary-adjoint",
                                  parity).apply(out.coords)
            assert is_zero_vec(resid)


def test_lemma_identity_random(g11, tau11, t11):
    rng = random.Random(75)
    for parity in (0, 1):
        for _ in range(10):
            om = random_cochain(rng, "binary-scalar", 1, g11.space, parity)
            r = verify_lemma_identity(g11, tau11, om, t11)
            assert r.verdict == "pass"


def test_class_transfer_random(g11, tau11):
    rng = random.Random(76)
    n = cochain_length("binary-scalar", 2, g11.space)
    sel_in = parity_support("binary-scalar", 2, g11.space, 0)
    sel_out = parity_support("binary-scalar", 3, g11.space, 0)
    zblock = submatrix(ds_matrix(g11, 2), sel_out, sel_in)
    from homnambu.linalg import kernel
    lifted = []
    for v in kernel(zblock).vectors():
        full = [Fraction(0)] * n
        for pos, x in zip(sel_in, v):
            full[pos] = x
        lifted.append(tuple(full))
    m1 = ds_matrix(g11, 1)
    for _ in range(10):
        phi1 = Cochain("binary-scalar", 2, 0, g11.space,
                       kernel_combination(rng, lifted, n))
        eta = random_cochain(rng, "binary-scalar", 1, g11.space, 0)
        shift = m1.apply(eta.coords)
        phi2 = Cochain("binary-scalar", 2, 0, g11.space,
                       tuple(a + b for a, b in zip(phi1.coords, shift)))
        r = verify_class_transfer(g11, tau11, phi1, phi2)
        assert r.verdict == "pass"


def test_class_transfer_demands_cohomologous_pair(all_binary, g11, tau11):
    a0 = next(lie for name, lie, rep in all_binary if name == "a0")
    rep0 = next(rep for name, lie, rep in all_binary if name == "a0")
    tau0 = trace_functional(rep0)
    sel = parity_support("binary-scalar", 2, a0.space, 0)
    n = cochain_length("binary-scalar", 2, a0.space)
    coords = [Fraction(0)] * n
    coords[sel[0]] = Fraction(1)
    nontrivial = Cochain("binary-scalar", 2, 0, a0.space, tuple(coords))
    zero = Cochain.zero("binary-scalar", 2, a0.space)
    with pytest.raises(PreconditionError):
        verify_class_transfer(a0, tau0, zero, nontrivial)
