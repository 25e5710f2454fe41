"""Command line front end.

Every subcommand reads JSON documents, prints a single report document on
standard output and exits 0 when every check passed, 1 when a verification
failed, 2 on malformed input or unmet preconditions.
"""

import argparse
import json
import random
import sys
from fractions import Fraction

from .binary import (derived_subspace, is_ideal, verify_hom_jacobi,
                     verify_multiplicative, verify_skew)
from .cohomology import (Cochain, cohomology_dims, ds_matrix, induce_cocycle,
                         parity_support, verify_1cocycle_transfer,
                         verify_class_transfer, verify_lemma_identity)
from .extensions import (CentralExtensionData, build_central_extension,
                         verify_extension)
from .formats import (DocumentBundle, load_cochain, load_functional,
                      read_document, read_json_file, serialize_cochain,
                      write_document)
from .linalg import (InputError, PreconditionError, Subspace, kernel,
                     submatrix, unit_vec)
from .report import Report, fmt_vec
from .reps import trace_functional, verify_representation
from .series import (binary_center, binary_central_series,
                     binary_derived_series, central_series,
                     compare_central_series, derived_series, ternary_center,
                     verify_solvability_theorem)
from .ternary import (ideal_criterion, induce_ternary, ternary_is_ideal,
                      verify_hom_nambu, verify_ternary_multiplicative,
                      verify_ternary_skew)


def _require_rep(bundle: DocumentBundle):
    if bundle.rep is None:
        raise InputError("document carries no representation")
    return bundle.rep


def _ternary_of(bundle: DocumentBundle):
    """The document's ternary algebra, or the one induced from its rep."""
    if bundle.ternary is not None:
        return bundle.ternary
    rep = _require_rep(bundle)
    tau = trace_functional(rep)
    lie = bundle.lie
    return induce_ternary(lie, tau, lie.alpha, lie.alpha)


def _ideal_from_ids(bundle: DocumentBundle, spec: str) -> Subspace:
    dim = bundle.lie.dim
    idx = [bundle.lie.space.index(name.strip()) for name in spec.split(",")]
    return Subspace.from_vectors(dim, [unit_vec(dim, i) for i in idx])


def cmd_check(args) -> Report:
    bundle = read_document(args.file)
    rep = Report(f"check {args.what}")
    if args.what == "binary":
        lie = bundle.lie
        rep.absorb(verify_skew(lie))
        rep.absorb(verify_hom_jacobi(lie))
        rep.absorb(verify_multiplicative(lie))
    elif args.what == "rep":
        r = _require_rep(bundle)
        rep.absorb(verify_representation(r))
        tau = trace_functional(r)
        rep.metrics["tau"] = fmt_vec(tau.values)
    else:
        if bundle.ternary is None:
            raise InputError("document carries no ternary bracket")
        t = bundle.ternary
        rep.absorb(verify_ternary_skew(t))
        rep.absorb(verify_hom_nambu(t))
        rep.absorb(verify_ternary_multiplicative(t))
    return rep


def cmd_induce(args) -> Report:
    bundle = read_document(args.file)
    r = _require_rep(bundle)
    tau = trace_functional(r)
    lie = bundle.lie
    t = induce_ternary(lie, tau, lie.alpha, lie.alpha)
    rep = Report("induce")
    rep.metrics["tau"] = fmt_vec(tau.values)
    rep.metrics["ternary_entries"] = len(t.bracket.canonical_coeffs())
    rep.absorb(verify_ternary_skew(t))
    rep.absorb(verify_hom_nambu(t))
    out = DocumentBundle(bundle.name + "-induced", lie, bundle.rep, t)
    write_document(args.output, out)
    return rep


def cmd_series(args) -> Report:
    bundle = read_document(args.file)
    rep = Report(f"series {args.kind}")
    rmax = args.rmax if args.rmax is not None else bundle.lie.dim + 1
    ideal = _ideal_from_ids(bundle, args.ideal) if args.ideal else None
    if bundle.ternary is not None:
        t = bundle.ternary
        if ideal is not None and not ternary_is_ideal(t, ideal):
            rep.note("not-an-ideal", detail="series still computed")
        run = derived_series if args.kind == "derived" else central_series
        res = run(t, ideal, rmax=rmax)
    else:
        g = bundle.lie
        if ideal is not None and not is_ideal(g, ideal):
            rep.note("not-an-ideal", detail="series still computed")
        run = (binary_derived_series if args.kind == "derived"
               else binary_central_series)
        res = run(g, ideal, rmax=rmax)
    rep.metrics["dims"] = list(res.dims())
    rep.metrics["stabilized"] = res.stabilized
    rep.metrics["class_index"] = res.class_index
    return rep


def cmd_center(args) -> Report:
    bundle = read_document(args.file)
    rep = Report("center")
    z = (ternary_center(bundle.ternary) if bundle.ternary is not None
         else binary_center(bundle.lie))
    rep.metrics["dim"] = z.dim
    rep.metrics["basis"] = [fmt_vec(v) for v in z.vectors()]
    return rep


def cmd_solvability(args) -> Report:
    bundle = read_document(args.file)
    t = _ternary_of(bundle)
    rep = Report("solvability")
    rep.absorb(verify_solvability_theorem(t))
    dims = rep.metrics.get("derived_dims", [])
    rep.metrics["D1_dim"] = dims[1] if len(dims) > 1 else None
    rep.metrics["D2_dim"] = dims[2] if len(dims) > 2 else None
    return rep


def cmd_extend(args) -> Report:
    bundle = read_document(args.file)
    lie = bundle.lie
    omega = load_cochain(read_json_file(args.omega), lie.space)
    lam = None
    if args.lam is not None:
        from .extensions import extended_space
        lam = load_functional(read_json_file(args.lam), extended_space(lie))
    data = CentralExtensionData(lie, omega, lam)
    rep = verify_extension(data)
    if args.output:
        ext = build_central_extension(data)
        write_document(args.output,
                       DocumentBundle(bundle.name + "-extended", ext))
    return rep


def cmd_cohomology(args) -> Report:
    bundle = read_document(args.file)
    obj = bundle.lie if args.complex == "binary-scalar" else _ternary_of(bundle)
    z, b, h = cohomology_dims(obj, args.complex, args.degree)
    rep = Report("cohomology")
    rep.metrics.update({"Z": z, "B": b, "H": h,
                        "complex": args.complex, "degree": args.degree})
    return rep


def cmd_induce_cocycle(args) -> Report:
    bundle = read_document(args.file)
    r = _require_rep(bundle)
    tau = trace_functional(r)
    lie = bundle.lie
    phi = load_cochain(read_json_file(args.phi), lie.space)
    psi = induce_cocycle(lie, tau, phi, bundle.ternary)
    rep = Report("induce-cocycle")
    rep.metrics["complex"] = psi.complex
    rep.metrics["parity"] = psi.parity
    rep.metrics["values"] = serialize_cochain(psi)["values"]
    return rep


def _random_cochain(rng, g, degree: int, parity: int) -> Cochain:
    sel = parity_support("binary-scalar", degree, g.space, parity)
    from .cohomology import cochain_length
    n = cochain_length("binary-scalar", degree, g.space)
    coords = [Fraction(0)] * n
    for i in sel:
        coords[i] = Fraction(rng.randint(-3, 3))
    return Cochain("binary-scalar", degree, parity, g.space, tuple(coords))


def _random_even_cocycle(rng, g) -> Cochain:
    sel_in = parity_support("binary-scalar", 2, g.space, 0)
    sel_out = parity_support("binary-scalar", 3, g.space, 0)
    zk = kernel(submatrix(ds_matrix(g, 2), sel_out, sel_in))
    from .cohomology import cochain_length
    n = cochain_length("binary-scalar", 2, g.space)
    coords = [Fraction(0)] * n
    for v in zk.vectors():
        c = Fraction(rng.randint(-3, 3))
        for pos, x in zip(sel_in, v):
            coords[pos] += c * x
    return Cochain("binary-scalar", 2, 0, g.space, tuple(coords))


def cmd_transfer_checks(args) -> Report:
    bundle = read_document(args.file)
    r = _require_rep(bundle)
    tau = trace_functional(r)
    lie = bundle.lie
    t = _ternary_of(bundle)
    rng = random.Random(args.seed)
    rep = Report("transfer-checks")
    rep.absorb(compare_central_series(lie, t), prefix="series.")
    from .series import verify_center_transfer
    rep.absorb(verify_center_transfer(lie, tau, t), prefix="center.")
    rep.absorb(verify_1cocycle_transfer(lie, tau, t), prefix="cocycle1.")
    full = Subspace.full(lie.dim)
    rep.absorb(ideal_criterion(lie, tau, derived_subspace(lie, full, full), t),
               prefix="ideal.")
    for k in range(3):
        for parity in (0, 1):
            sub = verify_lemma_identity(lie, tau,
                                        _random_cochain(rng, lie, 1, parity), t)
            rep.absorb(sub, prefix=f"lemma{k}p{parity}.")
    for k in range(3):
        phi1 = _random_even_cocycle(rng, lie)
        eta = _random_cochain(rng, lie, 1, 0)
        dphi = Cochain("binary-scalar", 2, 0, lie.space,
                       ds_matrix(lie, 1).apply(eta.coords))
        sub = verify_class_transfer(lie, tau, phi1, phi1.add(dphi))
        rep.absorb(sub, prefix=f"class{k}.")
    return rep


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="homnambu")
    subs = top.add_subparsers(dest="cmd", required=True)

    def common(p):
        p.add_argument("--pretty", action="store_true")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--rmax", type=int, default=None)

    p = subs.add_parser("check")
    p.add_argument("what", choices=("binary", "rep", "ternary"))
    p.add_argument("file")
    common(p)
    p.set_defaults(run=cmd_check)

    p = subs.add_parser("induce")
    p.add_argument("file")
    p.add_argument("-o", "--output", required=True)
    common(p)
    p.set_defaults(run=cmd_induce)

    p = subs.add_parser("series")
    p.add_argument("kind", choices=("derived", "central"))
    p.add_argument("file")
    p.add_argument("--ideal", default=None)
    common(p)
    p.set_defaults(run=cmd_series)

    p = subs.add_parser("center")
    p.add_argument("file")
    common(p)
    p.set_defaults(run=cmd_center)

    p = subs.add_parser("solvability")
    p.add_argument("file")
    common(p)
    p.set_defaults(run=cmd_solvability)

    p = subs.add_parser("extend")
    p.add_argument("file")
    p.add_argument("--omega", required=True)
    p.add_argument("--lambda", dest="lam", default=None)
    p.add_argument("-o", "--output", default=None)
    common(p)
    p.set_defaults(run=cmd_extend)

    p = subs.add_parser("cohomology")
    p.add_argument("file")
    p.add_argument("--complex", required=True,
                   choices=("binary-scalar", "ternary-scalar", "ternary-adjoint"))
    p.add_argument("--degree", type=int, required=True)
    common(p)
    p.set_defaults(run=cmd_cohomology)

    p = subs.add_parser("induce-cocycle")
    p.add_argument("file")
    p.add_argument("--phi", required=True)
    common(p)
    p.set_defaults(run=cmd_induce_cocycle)

    p = subs.add_parser("transfer-checks")
    p.add_argument("file")
    common(p)
    p.set_defaults(run=cmd_transfer_checks)

    return top


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    cmd = args.cmd if args.cmd != "check" else f"check {args.what}"
    try:
        rep = args.run(args)
    except (InputError, PreconditionError) as exc:
        doc = {"command": cmd, "error": str(exc)}
        sys.stdout.write(json.dumps(doc, sort_keys=True,
                                    separators=(",", ":")) + "\n")
        return 2
    sys.stdout.write(rep.render(args.pretty))
    return 0 if rep.verdict != "fail" else 1


if __name__ == "__main__":
    raise SystemExit(main())
