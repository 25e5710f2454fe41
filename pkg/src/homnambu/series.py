"""Derived series, central descending series, centers, and their transfer.

Series terms are spans, not twisted subalgebras; each step closes the raw
bracket image into a subspace and the twists are only consulted by the
ideality checks.
"""

from dataclasses import dataclass

from .binary import HomLieSuper, derived_subspace
from .linalg import (Matrix, Subspace, is_zero_vec, kernel, rank, solve,
                     subspace_equal, subspace_intersection)
from .report import Report
from .reps import TraceFunctional, trace_kernel
from .ternary import TernaryHomLieSuper, ternary_is_ideal


@dataclass(frozen=True)
class SeriesResult:
    kind: str
    terms: tuple          # Subspace per step, terms[0] = whole space
    stabilized: bool
    class_index: int | None  # smallest r with terms[r] = 0, None otherwise

    def dims(self) -> tuple:
        return tuple(t.dim for t in self.terms)


def triple_bracket_span(t: TernaryHomLieSuper, s1: Subspace, s2: Subspace,
                        s3: Subspace) -> Subspace:
    vecs = []
    for a in s1.vectors():
        for b in s2.vectors():
            for c in s3.vectors():
                v = t.bracket.eval_vectors(a, b, c)
                if not is_zero_vec(v):
                    vecs.append(v)
    return Subspace.from_vectors(t.dim, vecs)


def _run_series(start: Subspace, step, rmax: int, kind: str) -> SeriesResult:
    terms = [start]
    class_index = 0 if start.is_zero() else None
    stabilized = start.is_zero()
    while len(terms) <= rmax:
        nxt = step(terms[-1])
        terms.append(nxt)
        if nxt.is_zero() and class_index is None:
            class_index = len(terms) - 1
        if subspace_equal(nxt, terms[-2]):
            stabilized = True
            break
    return SeriesResult(kind, tuple(terms), stabilized, class_index)


def derived_series(t: TernaryHomLieSuper, ideal: Subspace = None,
                   rmax: int = 12) -> SeriesResult:
    start = ideal if ideal is not None else Subspace.full(t.dim)
    return _run_series(start, lambda s: triple_bracket_span(t, s, s, s),
                       rmax, "derived")


def central_series(t: TernaryHomLieSuper, ideal: Subspace = None,
                   rmax: int = 12) -> SeriesResult:
    # step brackets against the starting ideal, not the whole algebra
    start = ideal if ideal is not None else Subspace.full(t.dim)
    return _run_series(start, lambda s: triple_bracket_span(t, s, start, start),
                       rmax, "central")


def binary_derived_series(g: HomLieSuper, ideal: Subspace = None,
                          rmax: int = 12) -> SeriesResult:
    start = ideal if ideal is not None else Subspace.full(g.dim)
    return _run_series(start, lambda s: derived_subspace(g, s, s),
                       rmax, "derived")


def binary_central_series(g: HomLieSuper, ideal: Subspace = None,
                          rmax: int = 12) -> SeriesResult:
    start = ideal if ideal is not None else Subspace.full(g.dim)
    return _run_series(start, lambda s: derived_subspace(g, s, start),
                       rmax, "central")


def ternary_center(t: TernaryHomLieSuper) -> Subspace:
    """Solutions z of [e_i, e_j, z] = 0 for all i, j."""
    dim = t.dim
    rows = []
    for i in range(dim):
        for j in range(dim):
            block = Matrix.from_columns(
                [t.bracket.value(i, j, k) for k in range(dim)], dim)
            rows.extend(block.entries)
    return kernel(Matrix(dim * dim * dim, dim, tuple(rows)))


def binary_center(g: HomLieSuper) -> Subspace:
    dim = g.dim
    rows = []
    for i in range(dim):
        block = Matrix.from_columns(
            [g.bracket.value(i, k) for k in range(dim)], dim)
        rows.extend(block.entries)
    return kernel(Matrix(dim * dim, dim, tuple(rows)))


def verify_center_transfer(g: HomLieSuper, tau: TraceFunctional,
                           t: TernaryHomLieSuper) -> Report:
    """Z(g) cap ker tau sits inside the ternary center; when g is nonabelian,
    a vector central on both sides must be killed by tau."""
    rep = Report("verify_center_transfer")
    zb = binary_center(g)
    zt = ternary_center(t)
    ker_tau = trace_kernel(tau)
    meet = subspace_intersection(zb, ker_tau)
    rep.metrics["binary_center_dim"] = zb.dim
    rep.metrics["ternary_center_dim"] = zt.dim
    rep.metrics["restricted_center_dim"] = meet.dim
    if not zt.contains_subspace(meet):
        rep.fail("forward-inclusion",
                 detail="Z(g) cap ker tau escapes the ternary center")
    abelian = g.bracket.is_zero()
    rep.metrics["binary_abelian"] = abelian
    if not abelian:
        both = subspace_intersection(zb, zt)
        if not ker_tau.contains_subspace(both):
            rep.fail("doubly-central-trace",
                     detail="doubly central vector carries nonzero trace")
    return rep


def find_unit(g: HomLieSuper, t: TernaryHomLieSuper) -> tuple | None:
    """Even u with [u, e_i, e_j] = [e_i, e_j] for all pairs, if one exists."""
    dim = t.dim
    rows = []
    rhs_col = []
    for i in range(dim):
        for j in range(dim):
            b = g.bracket.value(i, j)
            for comp in range(dim):
                rows.append(tuple(t.bracket.value(k, i, j)[comp]
                                  for k in range(dim)))
                rhs_col.append(b[comp])
    m = Matrix(len(rows), dim, tuple(tuple(r) for r in rows))
    sol = solve(m, tuple(rhs_col))
    if sol is None:
        return None
    for k, c in enumerate(sol):
        if c != 0 and t.space.parities[k] == 1:
            return None
    return sol


def compare_central_series(g: HomLieSuper, t: TernaryHomLieSuper,
                           rmax: int = 12) -> Report:
    """Ternary central series terms sit inside the binary ones termwise.

    When some even u with [u, x, y] = [x, y] exists the two series agree
    from step 1 on, so the comparison upgrades to equality.
    """
    rep = Report("compare_central_series")
    bs = binary_central_series(g, rmax=rmax)
    ts = central_series(t, rmax=rmax)
    n = min(len(bs.terms), len(ts.terms))
    unit = find_unit(g, t)
    rep.metrics["binary_dims"] = list(bs.dims())[:n]
    rep.metrics["ternary_dims"] = list(ts.dims())[:n]
    rep.metrics["unit_exists"] = unit is not None
    for r in range(1, n):
        if not bs.terms[r].contains_subspace(ts.terms[r]):
            rep.fail("termwise-inclusion", witness=(r,))
        if unit is not None and not subspace_equal(bs.terms[r], ts.terms[r]):
            rep.fail("termwise-equality", witness=(r,))
    return rep


def verify_solvability_theorem(t: TernaryHomLieSuper) -> Report:
    """Induced algebras are 2-step solvable: the second derived term is 0."""
    rep = Report("verify_solvability_theorem")
    ds = derived_series(t, rmax=3)
    rep.metrics["derived_dims"] = list(ds.dims())
    if len(ds.terms) < 3 or not ds.terms[2].is_zero():
        rep.fail("second-derived-nonzero", detail=f"dims {list(ds.dims())}")
    rep.metrics["solvability_class"] = ds.class_index
    return rep


def ideality_of_series(t: TernaryHomLieSuper, result: SeriesResult) -> Report:
    """Each term past the first should be a ternary Hom-ideal.

    Needs a single surjective twist; reported not-applicable otherwise.
    """
    rep = Report("ideality_of_series")
    if not t.same_twists():
        rep.applicable = False
        rep.note("twists-differ", detail="ideality argument needs alpha1 = alpha2")
        return rep
    if rank(t.alpha1.matrix) < t.dim:
        rep.applicable = False
        rep.note("twist-not-surjective")
        return rep
    for r, term in enumerate(result.terms):
        if r == 0:
            continue
        if not ternary_is_ideal(t, term):
            rep.fail("term-not-ideal", witness=(r,))
    rep.metrics["terms_checked"] = max(len(result.terms) - 1, 0)
    return rep
