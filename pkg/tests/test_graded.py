"""Graded spaces, Koszul signs and the canonical skew basis."""

import random
from fractions import Fraction
from itertools import permutations

import pytest

from homnambu.graded import (GradedMap, GradedSpace, InputError, canonicalize,
                             graded_space, identity_map, koszul_sign,
                             skew_basis, supertrace, tuple_parity,
                             wedge2_expand)
from homnambu.linalg import Matrix, frac


def bfs_koszul(perm, parities):
    """Reference sign: undo the permutation by adjacent swaps, counting
    odd-odd crossings one at a time."""
    perm = list(perm)
    sign = 1
    for i in range(len(perm)):
        for j in range(len(perm) - 1):
            if perm[j] > perm[j + 1]:
                if parities[perm[j]] and parities[perm[j + 1]]:
                    sign = -sign
                perm[j], perm[j + 1] = perm[j + 1], perm[j]
    return sign


def test_koszul_sign_matches_adjacent_swap_oracle():
    for n in range(1, 5):
        for bits in range(2 ** n):
            parities = tuple((bits >> k) & 1 for k in range(n))
            for perm in permutations(range(n)):
                assert koszul_sign(perm, parities) == bfs_koszul(perm, parities)


def test_koszul_sign_rejects_non_permutations():
    with pytest.raises(InputError):
        koszul_sign((0, 0, 1), (0, 0, 0))


def test_canonicalize_properties():
    rng = random.Random(11)
    for _ in range(300):
        n = rng.randint(2, 5)
        parities = tuple(rng.randint(0, 1) for _ in range(n))
        deg = rng.randint(2, 4)
        idx = tuple(rng.randrange(n) for _ in range(deg))
        out, sign, zero = canonicalize(idx, parities)
        assert sign in (1, -1)
        assert sorted(out) == list(out)
        assert sorted(out) == sorted(idx)
        if any(idx.count(i) > 1 and parities[i] == 0 for i in idx):
            assert zero
        if zero:
            assert any(out[k] == out[k + 1] and parities[out[k]] == 0
                       for k in range(deg - 1))


def test_canonicalize_is_already_canonical_fixed_point():
    parities = (0, 0, 1, 1)
    out, sign, zero = canonicalize((0, 2, 3), parities)
    assert (out, sign, zero) == ((0, 2, 3), 1, False)
    out, sign, zero = canonicalize((2, 2), parities)
    assert (out, sign, zero) == ((2, 2), 1, False)
    out, sign, zero = canonicalize((0, 0), parities)
    assert zero


def test_canonicalize_swap_signs():
    parities = (0, 0, 1, 1)
    # even-odd swap: plain antisymmetry minus
    assert canonicalize((2, 0), parities)[1] == -1
    # odd-odd swap: the two minuses cancel
    assert canonicalize((3, 2), parities)[1] == 1


def test_skew_basis_counts():
    sp = graded_space(("h1", "h2", "q", "p"), (0, 0, 1, 1))
    assert len(skew_basis(1, sp)) == 4
    # 6 strict pairs plus (q,q) and (p,p)
    assert len(skew_basis(2, sp)) == 8
    sb3 = skew_basis(3, sp)
    assert len(sb3) == 12
    for t in sb3.tuples:
        assert list(t) == sorted(t)
        for k in range(2):
            assert t[k] != t[k + 1] or sp.parities[t[k]] == 1


def test_skew_basis_index_roundtrip():
    sp = graded_space(("a", "b", "x"), (0, 0, 1))
    sb = skew_basis(2, sp)
    for k, t in enumerate(sb.tuples):
        assert sb.index_of(t) == k
    with pytest.raises(InputError):
        sb.index_of((1, 0))


def test_tuple_parity():
    parities = (0, 1, 1)
    assert tuple_parity((0, 1), parities) == 1
    assert tuple_parity((1, 2), parities) == 0


def test_supertrace_signs():
    sp = graded_space(("e", "f"), (0, 1))
    m = GradedMap(sp, sp, Matrix.build([[3, 0], [0, 5]]))
    assert supertrace(m) == Fraction(-2)


def test_supertrace_needs_endomorphism():
    a = graded_space(("e",), (0,))
    b = graded_space(("f", "g"), (0, 1))
    with pytest.raises(InputError):
        supertrace(GradedMap(a, b, Matrix.build([[1], [0]]), 0))


def test_graded_map_parity_enforced():
    sp = graded_space(("e", "x"), (0, 1))
    with pytest.raises(InputError):
        GradedMap(sp, sp, Matrix.build([[0, 1], [1, 0]]), 0)
    GradedMap(sp, sp, Matrix.build([[0, 1], [1, 0]]), 1)


def test_wedge2_expand_against_canonicalize():
    rng = random.Random(12)
    sp = graded_space(("h1", "h2", "q", "p"), (0, 0, 1, 1))
    sb2 = skew_basis(2, sp)
    for _ in range(40):
        a = tuple(frac(rng.randint(-3, 3)) for _ in range(4))
        b = tuple(frac(rng.randint(-3, 3)) for _ in range(4))
        got = wedge2_expand(a, b, sp, sb2)
        want = [Fraction(0)] * len(sb2)
        for i in range(4):
            for j in range(4):
                t, sign, zero = canonicalize((i, j), sp.parities)
                if not zero:
                    want[sb2.index_of(t)] += sign * a[i] * b[j]
        assert got == tuple(want)


def test_wedge2_super_antisymmetry():
    # b wedge a = -(-1)^{|a||b|} a wedge b for homogeneous arguments
    sp = graded_space(("h1", "h2", "q", "p"), (0, 0, 1, 1))
    sb2 = skew_basis(2, sp)
    rng = random.Random(13)
    for pa in (0, 1):
        for pb in (0, 1):
            idx_a = [i for i in range(4) if sp.parities[i] == pa]
            idx_b = [i for i in range(4) if sp.parities[i] == pb]
            a = tuple(frac(rng.randint(-3, 3)) if i in idx_a else frac(0)
                      for i in range(4))
            b = tuple(frac(rng.randint(-3, 3)) if i in idx_b else frac(0)
                      for i in range(4))
            lhs = wedge2_expand(b, a, sp, sb2)
            sgn = -1 if not (pa and pb) else 1
            rhs = tuple(sgn * x for x in wedge2_expand(a, b, sp, sb2))
            assert lhs == rhs


def test_graded_space_validation():
    with pytest.raises(InputError):
        graded_space(("x", "x"), (0, 0))
    with pytest.raises(InputError):
        graded_space(("x", "y"), (0, 2))
    sp = graded_space(("x", "y"), (0, 1))
    assert sp.index("y") == 1
    with pytest.raises(InputError):
        sp.index("z")
    assert list(sp.even_indices()) == [0]
    assert list(sp.odd_indices()) == [1]
