"""Cochain spaces and coboundary operators.

Three complexes are materialized as exact matrices over the canonical
cochain coordinates:

  binary-scalar   d_s: super-skew multilinear functionals on g, coordinates
                  on canonical tuples, the displayed sum over i<j of signed
                  f([x_i,x_j], alpha(...)) terms;
  ternary-scalar  delta1 f(X,z) = -f(X.z) and the three-term delta2;
  ternary-adjoint the same delta1, and the six-term delta2 whose extra
                  terms are again evaluations of f with |f|-dependent
                  signs (an even cochain sees the scalar operator
                  doubled; values never enter a bracket).

Binary adjoint 2-cochains (g-valued, super-skew) get the cyclic cocycle
operator phi(a x,[y,z]) + signed cyclic terms; its kernel feeds the
induced-cocycle transfer.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cache

from .binary import HomLieSuper
from .graded import (GradedSpace, canonicalize, skew_basis, tuple_parity,
                     wedge2_expand)
from .linalg import (InputError, Matrix, PreconditionError, Subspace, frac,
                     image, kernel, solve, submatrix, vec, vec_add, vec_scale,
                     zero_vec, is_zero_vec, ZERO)
from .report import Report, fmt_scalar
from .reps import TraceFunctional
from .ternary import TernaryHomLieSuper, induce_ternary

COMPLEXES = ("binary-scalar", "binary-adjoint", "ternary-scalar",
             "ternary-adjoint")


def cochain_length(cx: str, degree: int, space: GradedSpace) -> int:
    dim = space.dim
    if cx == "binary-scalar":
        if degree < 1 or degree > 4:
            raise InputError(f"unsupported degree {degree} for {cx}")
        return len(skew_basis(degree, space).tuples)
    s2 = len(skew_basis(2, space).tuples)
    if cx == "binary-adjoint":
        if degree != 2:
            raise InputError(f"unsupported degree {degree} for {cx}")
        return s2 * dim
    if cx == "ternary-scalar":
        sizes = {1: dim, 2: s2 * dim, 3: s2 * s2 * dim}
    elif cx == "ternary-adjoint":
        sizes = {1: dim * dim, 2: s2 * dim * dim, 3: s2 * s2 * dim * dim}
    else:
        raise InputError(f"unknown complex {cx}")
    if degree not in sizes:
        raise InputError(f"unsupported degree {degree} for {cx}")
    return sizes[degree]


def coordinate_parities(cx: str, degree: int, space: GradedSpace) -> tuple:
    """Per coordinate: argument-tuple parity, plus output parity for the
    adjoint complexes.  A cochain of parity |f| is supported exactly on the
    coordinates whose entry here equals |f|."""
    p = space.parities
    dim = space.dim
    if cx == "binary-scalar":
        return tuple(tuple_parity(t, p) for t in skew_basis(degree, space).tuples)
    sb2 = skew_basis(2, space)
    pairp = [tuple_parity(t, p) for t in sb2.tuples]
    out = []
    if cx == "binary-adjoint":
        for pp in pairp:
            for o in range(dim):
                out.append((pp + p[o]) % 2)
    elif cx == "ternary-scalar":
        if degree == 1:
            return tuple(p)
        if degree == 2:
            for pp in pairp:
                for k in range(dim):
                    out.append((pp + p[k]) % 2)
        else:
            for pp in pairp:
                for qq in pairp:
                    for k in range(dim):
                        out.append((pp + qq + p[k]) % 2)
    elif cx == "ternary-adjoint":
        base = coordinate_parities("ternary-scalar", degree, space)
        for bp in base:
            for o in range(dim):
                out.append((bp + p[o]) % 2)
    else:
        raise InputError(f"unknown complex {cx}")
    return tuple(out)


def parity_support(cx: str, degree: int, space: GradedSpace, parity: int) -> tuple:
    cps = coordinate_parities(cx, degree, space)
    return tuple(i for i, cp in enumerate(cps) if cp == parity % 2)


@dataclass(frozen=True)
class Cochain:
    complex: str
    degree: int
    parity: int
    space: GradedSpace
    coords: tuple

    def __post_init__(self):
        n = cochain_length(self.complex, self.degree, self.space)
        if len(self.coords) != n:
            raise InputError(f"cochain needs {n} coordinates, got {len(self.coords)}")
        cps = coordinate_parities(self.complex, self.degree, self.space)
        for i, c in enumerate(self.coords):
            if c != 0 and cps[i] != self.parity % 2:
                raise InputError(f"cochain coordinate {i} breaks the parity "
                                 f"support rule")

    @staticmethod
    def zero(cx: str, degree: int, space: GradedSpace, parity: int = 0) -> "Cochain":
        n = cochain_length(cx, degree, space)
        return Cochain(cx, degree, parity, space, zero_vec(n))

    def is_zero(self) -> bool:
        return is_zero_vec(self.coords)

    def add(self, other: "Cochain") -> "Cochain":
        if (self.complex, self.degree, self.parity) != (other.complex, other.degree, other.parity):
            raise InputError("cochain shape mismatch")
        return Cochain(self.complex, self.degree, self.parity, self.space,
                       vec_add(self.coords, other.coords))

    def scale(self, c) -> "Cochain":
        return Cochain(self.complex, self.degree, self.parity, self.space,
                       vec_scale(frac(c), self.coords))

    def sub(self, other: "Cochain") -> "Cochain":
        return self.add(other.scale(-1))


def make_cochain(cx: str, degree: int, space: GradedSpace, values: dict,
                 parity: int | None = None) -> Cochain:
    """Build a cochain from sparse values keyed the natural way per complex.

    binary-scalar: canonical index tuple -> scalar.  binary-adjoint: canonical
    pair -> vector.  ternary-scalar degree 2: (pair, element) -> scalar.
    ternary-adjoint degree 2: (pair, element) -> vector.
    """
    dim = space.dim
    n = cochain_length(cx, degree, space)
    coords = [ZERO] * n
    sb2 = skew_basis(2, space)
    if cx == "binary-scalar":
        sb = skew_basis(degree, space)
        for key, val in values.items():
            key = tuple(key)
            if key not in sb.index:
                raise InputError(f"non-canonical cochain key {key}")
            coords[sb.index[key]] = frac(val)
    elif cx == "binary-adjoint":
        if degree != 2:
            raise InputError("binary-adjoint cochains are degree 2 only")
        for key, val in values.items():
            key = tuple(key)
            if key not in sb2.index:
                raise InputError(f"non-canonical cochain key {key}")
            v = vec(val)
            base = sb2.index[key] * dim
            for o, c in enumerate(v):
                coords[base + o] = c
    elif degree == 2 and cx in ("ternary-scalar", "ternary-adjoint"):
        for (pair, k), val in values.items():
            pair = tuple(pair)
            if pair not in sb2.index:
                raise InputError(f"non-canonical cochain key {pair}")
            base = sb2.index[pair] * dim + k
            if cx == "ternary-scalar":
                coords[base] = frac(val)
            else:
                for o, c in enumerate(vec(val)):
                    coords[base * dim + o] = c
    elif degree == 1:
        for key, val in values.items():
            if cx == "ternary-scalar":
                coords[key] = frac(val)
            else:
                for o, c in enumerate(vec(val)):
                    coords[key * dim + o] = c
    else:
        raise InputError(f"make_cochain does not support {cx} degree {degree}")
    if parity is None:
        parity = infer_parity(cx, degree, space, tuple(coords))
    return Cochain(cx, degree, parity, space, tuple(coords))


def infer_parity(cx: str, degree: int, space: GradedSpace, coords: tuple) -> int:
    cps = coordinate_parities(cx, degree, space)
    seen = {cps[i] for i, c in enumerate(coords) if c != 0}
    if len(seen) > 1:
        raise InputError("cochain support mixes parities")
    return seen.pop() if seen else 0


def binary_pair_eval(c: Cochain, i: int, j: int):
    """phi(e_i, e_j) for a degree-2 binary cochain, canonicalization signs
    applied.  Scalar complexes return a Fraction, adjoint ones a vector."""
    sp = c.space
    t, sign, zero_flag = canonicalize((i, j), sp.parities)
    sb2 = skew_basis(2, sp)
    if c.complex == "binary-scalar":
        if zero_flag:
            return ZERO
        return sign * c.coords[sb2.index[t]]
    if c.complex == "binary-adjoint":
        if zero_flag:
            return zero_vec(sp.dim)
        base = sb2.index[t] * sp.dim
        return vec_scale(sign, c.coords[base:base + sp.dim])
    raise InputError("binary_pair_eval needs a binary degree-2 cochain")


def _matrix(rows_list, ncols) -> Matrix:
    if not rows_list:
        return Matrix(0, ncols, ())
    return Matrix(len(rows_list), ncols, tuple(tuple(r) for r in rows_list))


def _expand_eval(row, sign, head: tuple, rest_cols: list, sb, parities):
    """row[idx(canon)] += sign * coeff for every basis expansion of
    f(head_vector, rest_1, ..., rest_r)."""
    combos = [((), Fraction(1))]
    for col in rest_cols:
        nxt = []
        for (idx_tuple, coeff) in combos:
            for m, c in enumerate(col):
                if c != 0:
                    nxt.append((idx_tuple + (m,), coeff * c))
        combos = nxt
        if not combos:
            return
    for m, c in enumerate(head):
        if c == 0:
            continue
        for (idx_tuple, coeff) in combos:
            full = (m,) + idx_tuple
            canon, csign, zero_flag = canonicalize(full, parities)
            if zero_flag:
                continue
            pos = sb.index.get(canon)
            if pos is None:
                continue
            row[pos] += sign * csign * c * coeff


ONE_ = Fraction(1)


@cache
def ds_matrix(g: HomLieSuper, p: int) -> Matrix:
    """Matrix of the scalar coboundary on canonical cochain coordinates."""
    if p not in (1, 2, 3):
        raise InputError(f"unsupported degree {p}")
    sp = g.space
    par = sp.parities
    sb_in = skew_basis(p, sp)
    sb_out = skew_basis(p + 1, sp)
    acols = [g.alpha.column(i) for i in range(g.dim)]
    rows = []
    for X in sb_out.tuples:
        row = [ZERO] * len(sb_in.tuples)
        k = p + 1
        for i in range(k):
            for j in range(i + 1, k):
                s = 1 if (i + j) % 2 == 0 else -1
                pre_i = sum(par[X[t]] for t in range(i)) & 1
                pre_j = sum(par[X[t]] for t in range(j)) & 1
                if pre_i and par[X[i]]:
                    s = -s
                if pre_j and par[X[j]]:
                    s = -s
                if par[X[i]] and par[X[j]]:
                    s = -s
                bvec = g.bracket.value(X[i], X[j])
                rest = [acols[X[t]] for t in range(k) if t != i and t != j]
                _expand_eval(row, Fraction(s), bvec, rest, sb_in, par)
        rows.append(row)
    return _matrix(rows, len(sb_in.tuples))


@cache
def binary_adjoint_cocycle_matrix(g: HomLieSuper) -> Matrix:
    """Cyclic cocycle operator on g-valued super-skew 2-cochains.

    Rows run over all ordered basis triples times output component; any
    composite psi o bracket is annihilated, so coboundaries and the bracket
    itself land in the kernel whenever Hom-Jacobi holds.
    """
    sp = g.space
    p = sp.parities
    dim = g.dim
    sb2 = skew_basis(2, sp)
    s2 = len(sb2.tuples)
    acols = [g.alpha.column(i) for i in range(dim)]
    rows = []
    for x in range(dim):
        for y in range(dim):
            for z in range(dim):
                pair_coeffs = [ZERO] * s2
                w1 = wedge2_expand(acols[x], g.bracket.value(y, z), sp, sb2)
                sa = -1 if (p[x] and (p[y] ^ p[z])) else 1
                w2 = wedge2_expand(acols[y], g.bracket.value(z, x), sp, sb2)
                sb_ = -1 if (p[z] and (p[x] ^ p[y])) else 1
                w3 = wedge2_expand(acols[z], g.bracket.value(x, y), sp, sb2)
                for r in range(s2):
                    pair_coeffs[r] = w1[r] + sa * w2[r] + sb_ * w3[r]
                for o in range(dim):
                    row = [ZERO] * (s2 * dim)
                    for r in range(s2):
                        if pair_coeffs[r] != 0:
                            row[r * dim + o] = pair_coeffs[r]
                    rows.append(row)
    return _matrix(rows, s2 * dim)


def binary_adjoint_cocycle_space(g: HomLieSuper, parity: int | None = None) -> Subspace:
    ker = kernel(binary_adjoint_cocycle_matrix(g))
    if parity is None:
        return ker
    sel = parity_support("binary-adjoint", 2, g.space, parity)
    n = cochain_length("binary-adjoint", 2, g.space)
    axes = [tuple(ONE_ if i == s else ZERO for i in range(n)) for s in sel]
    from .linalg import subspace_intersection
    return subspace_intersection(ker, Subspace.from_vectors(n, axes))


def binary_adjoint_d1_matrix(g: HomLieSuper) -> Matrix:
    """psi -> -psi o bracket, mapping g->g maps to adjoint 2-cochains."""
    sp = g.space
    dim = g.dim
    sb2 = skew_basis(2, sp)
    rows = []
    for t in sb2.tuples:
        b = g.bracket.value(t[0], t[1])
        for o in range(dim):
            row = [ZERO] * (dim * dim)
            for m, c in enumerate(b):
                if c != 0:
                    row[m * dim + o] = -c
            rows.append(row)
    return _matrix(rows, dim * dim)


def bracket_cochain(g: HomLieSuper) -> Cochain:
    """The bracket packaged as an even g-valued 2-cochain."""
    sb2 = skew_basis(2, g.space)
    values = {t: g.bracket.value(t[0], t[1]) for t in sb2.tuples}
    return make_cochain("binary-adjoint", 2, g.space, values, parity=0)


def verify_bracket_cocycle(g: HomLieSuper) -> Report:
    rep = Report("verify_bracket_cocycle")
    m = binary_adjoint_cocycle_matrix(g)
    resid = m.apply(bracket_cochain(g).coords)
    if not is_zero_vec(resid):
        idx = next(i for i, c in enumerate(resid) if c != 0)
        dim = g.dim
        triple = idx // dim
        x, rem = divmod(triple, dim * dim)
        y, z = divmod(rem, dim)
        rep.fail("bracket-cocycle",
                 witness=(g.space.names[x], g.space.names[y], g.space.names[z]))
    return rep


def _single_twist(t: TernaryHomLieSuper):
    if not t.same_twists():
        raise PreconditionError("ternary cohomology needs alpha1 = alpha2")
    return t.alpha1


def fundamental_action(t: TernaryHomLieSuper, pair: tuple, z: int) -> tuple:
    return t.bracket.value(pair[0], pair[1], z)


def fundamental_bracket(t: TernaryHomLieSuper, pair_x: tuple, pair_y: tuple) -> tuple:
    """[X,Y]_alpha over the canonical pair basis."""
    a = _single_twist(t)
    sp = t.space
    sb2 = skew_basis(2, sp)
    x1, x2 = pair_x
    y1, y2 = pair_y
    v1 = wedge2_expand(t.bracket.value(x1, x2, y1), a.column(y2), sp, sb2)
    v2 = wedge2_expand(a.column(y1), t.bracket.value(x1, x2, y2), sp, sb2)
    px = tuple_parity(pair_x, sp.parities)
    s = -1 if (px and sp.parities[y1]) else 1
    return vec_add(v1, vec_scale(s, v2))


@cache
def pair_twist_matrix(t: TernaryHomLieSuper) -> Matrix:
    """alpha acting on the canonical pair basis (wedge square of alpha)."""
    a = _single_twist(t)
    sp = t.space
    sb2 = skew_basis(2, sp)
    cols = [wedge2_expand(a.column(i), a.column(j), sp, sb2)
            for (i, j) in sb2.tuples]
    return Matrix.from_columns(cols, len(sb2.tuples))


@cache
def delta1_matrix(t: TernaryHomLieSuper, cx: str) -> Matrix:
    """f -> ((X,z) -> -f(X.z)) for the scalar and adjoint complexes."""
    _single_twist(t)
    sp = t.space
    dim = sp.dim
    sb2 = skew_basis(2, sp)
    rows = []
    if cx == "ternary-scalar":
        for pair in sb2.tuples:
            for k in range(dim):
                act = t.bracket.value(pair[0], pair[1], k)
                rows.append([-c for c in act])
        return _matrix(rows, dim)
    if cx == "ternary-adjoint":
        for pair in sb2.tuples:
            for k in range(dim):
                act = t.bracket.value(pair[0], pair[1], k)
                for o in range(dim):
                    row = [ZERO] * (dim * dim)
                    for m, c in enumerate(act):
                        if c != 0:
                            row[m * dim + o] = -c
                    rows.append(row)
        return _matrix(rows, dim * dim)
    raise InputError(f"unknown ternary complex {cx}")


@cache
def delta2_matrix(t: TernaryHomLieSuper, cx: str, parity: int = 0) -> Matrix:
    """The 2-coboundary on (pair, element) cochains.

    Scalar: -f([X,Y]_a, a z) - (-1)^{|X||Y|} f(aY, X.z) + f(aX, Y.z).
    Adjoint appends the three extra terms, each again an evaluation of f
    (the theorem's expansion pairs them off against the scalar ones):

        - f(X.y1 ^ a(y2), a z) - (-1)^{(|f|+|X|)|y1|} f(a(y1) ^ X.y2, a z)
        - (-1)^{|Y|(|X|+|f|)} f(aY, X.z) + (-1)^{|X||f|} f(aX, Y.z)

    so an even cochain sees the scalar operator doubled.  Values never
    enter a bracket; the matrix is block-diagonal across the value index
    but depends on the cochain parity through the extra signs.
    """
    a = _single_twist(t)
    sp = t.space
    p = sp.parities
    dim = sp.dim
    sb2 = skew_basis(2, sp)
    s2 = len(sb2.tuples)
    pairp = [tuple_parity(q, p) for q in sb2.tuples]
    acols = [a.column(i) for i in range(dim)]
    atw = pair_twist_matrix(t)
    apairs = [atw.col(P) for P in range(s2)]
    fb = [[fundamental_bracket(t, sb2.tuples[P], sb2.tuples[Q])
           for Q in range(s2)] for P in range(s2)]
    adjoint = cx == "ternary-adjoint"
    if not adjoint and cx != "ternary-scalar":
        raise InputError(f"unknown ternary complex {cx}")
    fpar = parity % 2
    ncols = cochain_length(cx, 2, sp)
    rows = []
    for P in range(s2):
        p1, p2 = sb2.tuples[P]
        for Qp in range(s2):
            q1, q2 = sb2.tuples[Qp]
            sxy = -1 if (pairp[P] and pairp[Qp]) else 1
            s4 = -1 if (((fpar + pairp[P]) & 1) and p[q1]) else 1
            s5 = -1 if (pairp[Qp] and ((pairp[P] + fpar) & 1)) else 1
            s6 = -1 if (pairp[P] and fpar) else 1
            fbv = fb[P][Qp]
            if adjoint:
                w41 = wedge2_expand(t.bracket.value(p1, p2, q1),
                                    acols[q2], sp, sb2)
                w42 = wedge2_expand(acols[q1],
                                    t.bracket.value(p1, p2, q2), sp, sb2)
            for k in range(dim):
                base_row = [ZERO] * (s2 * dim)
                az = acols[k]
                xz = t.bracket.value(p1, p2, k)
                yz = t.bracket.value(q1, q2, k)

                def add(pair_coeffs, elem_vec, coef):
                    for R in range(s2):
                        cr = pair_coeffs[R]
                        if cr == 0:
                            continue
                        for m, cm in enumerate(elem_vec):
                            if cm != 0:
                                base_row[R * dim + m] += coef * cr * cm

                add(fbv, az, -ONE_)
                add(apairs[Qp], xz, frac(-sxy))
                add(apairs[P], yz, ONE_)
                if not adjoint:
                    rows.append(base_row)
                    continue
                add(w41, az, -ONE_)
                add(w42, az, frac(-s4))
                add(apairs[Qp], xz, frac(-s5))
                add(apairs[P], yz, frac(s6))
                for o in range(dim):
                    row = [ZERO] * ncols
                    for base, c in enumerate(base_row):
                        if c != 0:
                            row[base * dim + o] = c
                    rows.append(row)
    return _matrix(rows, ncols)


def coboundary_matrix(obj, cx: str, degree: int, parity: int = 0) -> Matrix:
    if cx.startswith("ternary") != isinstance(obj, TernaryHomLieSuper):
        raise InputError(f"complex {cx} does not match the given algebra")
    if cx == "binary-scalar":
        return ds_matrix(obj, degree)
    if cx == "ternary-scalar":
        if degree == 1:
            return delta1_matrix(obj, cx)
        if degree == 2:
            return delta2_matrix(obj, cx)
        raise InputError(f"unsupported degree {degree} for {cx}")
    if cx == "ternary-adjoint":
        if degree == 1:
            return delta1_matrix(obj, cx)
        if degree == 2:
            return delta2_matrix(obj, cx, parity)
        raise InputError(f"unsupported degree {degree} for {cx}")
    raise InputError(f"no coboundary matrix for complex {cx}")


def apply_coboundary(obj, c: Cochain) -> Cochain:
    m = coboundary_matrix(obj, c.complex, c.degree, c.parity)
    return Cochain(c.complex, c.degree + 1, c.parity, c.space, m.apply(c.coords))


def cohomology_dims(obj, cx: str, degree: int) -> tuple:
    """(dim Z, dim B, dim H) on the even-parity block."""
    if degree not in (1, 2):
        raise InputError(f"unsupported degree {degree}")
    space = obj.space
    out_m = coboundary_matrix(obj, cx, degree)
    sel_in = parity_support(cx, degree, space, 0)
    sel_out = parity_support(cx, degree + 1, space, 0)
    z = kernel(submatrix(out_m, sel_out, sel_in))
    if degree == 1:
        b = Subspace.zero(len(sel_in))
    else:
        in_m = coboundary_matrix(obj, cx, degree - 1)
        sel_prev = parity_support(cx, degree - 1, space, 0)
        b = image(submatrix(in_m, sel_in, sel_prev))
    for v in b.vectors():
        if not z.contains(v):
            raise InputError("coboundary escaped the cocycle space")
    return (z.dim, b.dim, z.dim - b.dim)


def is_binary_cocycle(g: HomLieSuper, phi: Cochain) -> bool:
    if phi.degree != 2:
        raise InputError("cocycle test expects degree 2")
    if phi.complex == "binary-scalar":
        return is_zero_vec(ds_matrix(g, 2).apply(phi.coords))
    if phi.complex == "binary-adjoint":
        return is_zero_vec(binary_adjoint_cocycle_matrix(g).apply(phi.coords))
    raise InputError("cocycle test expects a binary cochain")


def induce_cocycle(g: HomLieSuper, tau: TraceFunctional, phi: Cochain,
                   t: TernaryHomLieSuper | None = None) -> Cochain:
    """Transfer a binary 2-cocycle to the induced ternary complex.

    phi_rho(X,z) = tau(x1) phi(x2,z) - (-1)^{|x1||x2|} tau(x2) phi(x1,z)
                 + (-1)^{|z|(|x1|+|x2|)} tau(z) phi(x1,x2).
    The result is checked against the matching ternary delta2.
    """
    if phi.complex not in ("binary-scalar", "binary-adjoint") or phi.degree != 2:
        raise PreconditionError("induce_cocycle expects a binary 2-cochain")
    if not is_binary_cocycle(g, phi):
        raise PreconditionError("induce_cocycle expects a 2-cocycle")
    for j in range(g.dim):
        if tau.apply(g.alpha.column(j)) != tau.values[j]:
            raise PreconditionError("trace functional is not twist invariant")
    if t is None:
        t = induce_ternary(g, tau, g.alpha, g.alpha)
    sp = g.space
    p = sp.parities
    dim = sp.dim
    sb2 = skew_basis(2, sp)
    scalar = phi.complex == "binary-scalar"
    out_cx = "ternary-scalar" if scalar else "ternary-adjoint"
    values = {}
    for pair in sb2.tuples:
        x1, x2 = pair
        s12 = -1 if (p[x1] and p[x2]) else 1
        for k in range(dim):
            s3 = -1 if (p[k] and (p[x1] ^ p[x2])) else 1
            if scalar:
                val = (tau.values[x1] * binary_pair_eval(phi, x2, k)
                       - s12 * tau.values[x2] * binary_pair_eval(phi, x1, k)
                       + s3 * tau.values[k] * binary_pair_eval(phi, x1, x2))
                if val != 0:
                    values[(pair, k)] = val
            else:
                val = vec_scale(tau.values[x1], binary_pair_eval(phi, x2, k))
                val = vec_add(val, vec_scale(-s12 * tau.values[x2],
                                             binary_pair_eval(phi, x1, k)))
                val = vec_add(val, vec_scale(s3 * tau.values[k],
                                             binary_pair_eval(phi, x1, x2)))
                if not is_zero_vec(val):
                    values[(pair, k)] = val
    induced = make_cochain(out_cx, 2, sp, values, parity=phi.parity)
    resid = delta2_matrix(t, out_cx, induced.parity).apply(induced.coords)
    if not is_zero_vec(resid):
        raise PreconditionError("induced cochain is not a ternary cocycle")
    return induced


def verify_1cocycle_transfer(g: HomLieSuper, tau: TraceFunctional,
                             t: TernaryHomLieSuper) -> Report:
    """Scalar 1-cocycles of g annihilate the induced triple brackets."""
    rep = Report("verify_1cocycle_transfer")
    ker = kernel(ds_matrix(g, 1))
    sb3 = skew_basis(3, g.space)
    rep.metrics["cocycle_space_dim"] = ker.dim
    for w in ker.vectors():
        for key in sb3.tuples:
            val = sum(wc * bc for wc, bc in
                      zip(w, t.bracket.value(key[0], key[1], key[2])))
            if val != 0:
                rep.fail("induced-1cocycle",
                         witness=tuple(g.space.names[i] for i in key),
                         residual=(fmt_scalar(val),))
    rep.metrics["triples_checked"] = len(sb3.tuples) * ker.dim
    return rep


def verify_lemma_identity(g: HomLieSuper, tau: TraceFunctional,
                          omega: Cochain,
                          t: TernaryHomLieSuper | None = None) -> Report:
    """delta1 of the induced complex agrees with the tau-combination of the
    binary coboundary: delta_rho^1(omega) = (d_s^1 omega)_rho, coordinatewise."""
    rep = Report("verify_lemma_identity")
    if omega.complex != "binary-scalar" or omega.degree != 1:
        raise PreconditionError("lemma identity expects a scalar 1-cochain")
    if t is None:
        t = induce_ternary(g, tau, g.alpha, g.alpha)
    lhs = delta1_matrix(t, "ternary-scalar").apply(omega.coords)
    dphi = Cochain("binary-scalar", 2, omega.parity, g.space,
                   ds_matrix(g, 1).apply(omega.coords))
    rhs = induce_cocycle(g, tau, dphi, t).coords
    if lhs != rhs:
        sb2 = skew_basis(2, g.space)
        dim = g.dim
        for i, (a, b) in enumerate(zip(lhs, rhs)):
            if a != b:
                pair, k = divmod(i, dim)
                names = tuple(g.space.names[m] for m in sb2.tuples[pair])
                rep.fail("lemma-identity", witness=names + (g.space.names[k],),
                         residual=(fmt_scalar(a - b),))
    rep.metrics["coordinates"] = len(lhs)
    return rep


def verify_class_transfer(g: HomLieSuper, tau: TraceFunctional,
                          phi1: Cochain, phi2: Cochain) -> Report:
    """Cohomologous binary scalar cocycles induce cohomologous cochains,
    via the same connecting 1-cochain."""
    rep = Report("verify_class_transfer")
    for phi in (phi1, phi2):
        if phi.complex != "binary-scalar" or phi.degree != 2:
            raise PreconditionError("class transfer expects binary scalar 2-cochains")
        if not is_binary_cocycle(g, phi):
            raise PreconditionError("class transfer expects 2-cocycles")
    diff = vec_add(phi2.coords, vec_scale(-1, phi1.coords))
    omega = solve(ds_matrix(g, 1), diff)
    if omega is None:
        raise PreconditionError("cocycles are not cohomologous")
    t = induce_ternary(g, tau, g.alpha, g.alpha)
    psi1 = induce_cocycle(g, tau, phi1, t)
    psi2 = induce_cocycle(g, tau, phi2, t)
    lhs = vec_add(psi2.coords, vec_scale(-1, psi1.coords))
    rhs = delta1_matrix(t, "ternary-scalar").apply(omega)
    if lhs != rhs:
        idx = next(i for i, (a, b) in enumerate(zip(lhs, rhs)) if a != b)
        rep.fail("class-transfer", witness=(idx,),
                 residual=(fmt_scalar(lhs[idx] - rhs[idx]),))
    rep.metrics["connecting_cochain"] = [fmt_scalar(c) for c in omega]
    return rep
