"""Z2-graded spaces, homogeneous maps, Koszul signs and the supertrace.

Sign conventions used throughout the package:

* swapping two adjacent arguments a, b of a super-skew multilinear form
  multiplies its value by -(-1)^{|a||b|}: the antisymmetry minus times the
  Koszul factor;
* koszul_sign is the Koszul factor alone, the product of (-1)^{|a||b|}
  over the inversions of the permutation;
* a canonical index tuple is weakly increasing and repeats an index only
  when that index is odd; a tuple repeating an even index spans zero.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations_with_replacement

from .linalg import InputError, Matrix, Vec, frac


@dataclass(frozen=True)
class GradedSpace:
    names: tuple
    parities: tuple

    def __post_init__(self):
        if len(self.names) != len(self.parities):
            raise InputError("names and parities must have equal length")
        if len(set(self.names)) != len(self.names):
            raise InputError("duplicate basis names")
        if any(p not in (0, 1) for p in self.parities):
            raise InputError("parities must be bits")

    @property
    def dim(self) -> int:
        return len(self.names)

    def parity(self, i: int) -> int:
        return self.parities[i]

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise InputError(f"unknown basis element {name!r}") from None

    def even_indices(self):
        return [i for i, p in enumerate(self.parities) if p == 0]

    def odd_indices(self):
        return [i for i, p in enumerate(self.parities) if p == 1]


def graded_space(names, parities) -> GradedSpace:
    return GradedSpace(tuple(names), tuple(int(p) for p in parities))


@dataclass(frozen=True)
class GradedMap:
    """A homogeneous linear map between graded spaces.

    The matrix acts on coordinate columns.  A map of parity s may only
    have entries (r, c) with parity(r) = parity(c) + s mod 2; anything
    else is rejected at construction rather than silently projected.
    """

    domain: GradedSpace
    codomain: GradedSpace
    matrix: Matrix
    parity: int = 0

    def __post_init__(self):
        if self.matrix.rows != self.codomain.dim or self.matrix.cols != self.domain.dim:
            raise InputError("graded map matrix shape mismatch")
        if self.parity not in (0, 1):
            raise InputError("map parity must be a bit")
        for r in range(self.matrix.rows):
            pr = self.codomain.parities[r]
            for c in range(self.matrix.cols):
                if self.matrix.entries[r][c] != 0:
                    if pr != (self.domain.parities[c] + self.parity) % 2:
                        raise InputError(
                            f"entry ({self.codomain.names[r]},{self.domain.names[c]}) "
                            f"violates declared parity {self.parity}")

    def apply(self, v: Vec) -> Vec:
        return self.matrix.apply(v)

    def column(self, j: int) -> Vec:
        return self.matrix.col(j)

    def compose(self, inner: "GradedMap") -> "GradedMap":
        if inner.codomain != self.domain:
            raise InputError("graded map composition domain mismatch")
        return GradedMap(inner.domain, self.codomain,
                         self.matrix.mul(inner.matrix),
                         (self.parity + inner.parity) % 2)

    def is_identity(self) -> bool:
        return (self.domain == self.codomain
                and self.matrix == Matrix.identity(self.domain.dim))


def identity_map(space: GradedSpace) -> GradedMap:
    return GradedMap(space, space, Matrix.identity(space.dim))


def zero_map(domain: GradedSpace, codomain: GradedSpace, parity: int = 0) -> GradedMap:
    return GradedMap(domain, codomain, Matrix.zero(codomain.dim, domain.dim), parity)


def koszul_sign(perm, parities) -> int:
    """Koszul reordering factor of a permutation of homogeneous objects.

    perm[t] is the original position of the object landing at slot t; the
    sign is the product of (-1)^{|a||b|} over crossing pairs.  Antisymmetry
    minuses are the caller's business.
    """
    perm = list(perm)
    if sorted(perm) != list(range(len(perm))):
        raise InputError("not a permutation of 0..n-1")
    oddcross = 0
    for s in range(len(perm)):
        for t in range(s + 1, len(perm)):
            if perm[s] > perm[t] and parities[perm[s]] and parities[perm[t]]:
                oddcross += 1
    return -1 if oddcross % 2 else 1


def supertrace(m: GradedMap) -> Fraction:
    """Even-block trace minus odd-block trace; zero on odd maps."""
    if m.domain != m.codomain:
        raise InputError("supertrace needs an endomorphism")
    total = Fraction(0)
    for i in range(m.domain.dim):
        d = m.matrix.entries[i][i]
        total += -d if m.domain.parities[i] else d
    return total


def canonicalize(indices, parities):
    """Sort an index tuple into canonical order for a super-skew form.

    Returns (tuple, sign, is_zero).  Each executed adjacent swap of
    entries a > b contributes -(-1)^{p_a p_b}.  is_zero is True exactly
    when an even index repeats.
    """
    idx = list(indices)
    sign = 1
    n = len(idx)
    for i in range(n):
        for j in range(n - 1 - i):
            a, b = idx[j], idx[j + 1]
            if a > b:
                idx[j], idx[j + 1] = b, a
                sign *= 1 if (parities[a] and parities[b]) else -1
    zero = any(idx[k] == idx[k + 1] and parities[idx[k]] == 0
               for k in range(n - 1))
    return tuple(idx), sign, zero


@dataclass(frozen=True)
class SkewBasis:
    """Canonical index tuples of a fixed degree, in lexicographic order."""

    degree: int
    tuples: tuple

    def __len__(self):
        return len(self.tuples)

    @cached_property
    def index(self) -> dict:
        return {t: k for k, t in enumerate(self.tuples)}

    def index_of(self, t) -> int:
        t = tuple(t)
        if t not in self.index:
            raise InputError(f"tuple {t} is not canonical")
        return self.index[t]


def skew_basis(degree: int, space: GradedSpace) -> SkewBasis:
    if degree < 1:
        raise InputError("degree must be positive")
    good = []
    for t in combinations_with_replacement(range(space.dim), degree):
        if all(t[k] != t[k + 1] or space.parities[t[k]] == 1
               for k in range(degree - 1)):
            good.append(t)
    return SkewBasis(degree, tuple(good))


def tuple_parity(t, parities) -> int:
    return sum(parities[i] for i in t) % 2


def wedge2_expand(a: Vec, b: Vec, space: GradedSpace, sb2: SkewBasis) -> Vec:
    """Expand a wedge b over the canonical degree-2 tuple basis."""
    out = [Fraction(0)] * len(sb2.tuples)
    lookup = sb2.index
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            if bj == 0:
                continue
            t, sign, zero = canonicalize((i, j), space.parities)
            if zero:
                continue
            out[lookup[t]] += sign * frac(ai) * frac(bj)
    return tuple(out)
