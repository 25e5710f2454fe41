"""Reading and writing the JSON documents the CLI trades in.

An algebra document carries a named basis, the binary bracket on canonical
pairs, the twist map, and optionally a representation and a ternary
bracket with its second twist.  Coefficients are exact rationals written
as strings "n" or "n/d" with d > 0; bare integers are accepted on input.
Bracket keys are comma-joined basis ids in canonical order; anything
non-canonical is an input error naming the key.

Cochain documents are {"complex", "degree", "values"} with values keyed
by canonical tuples of basis ids; degree-2 ternary cochains separate the
fundamental pair from the element with a bar, as in "q,p|h1".
"""

import json
import re
from dataclasses import dataclass
from fractions import Fraction

from .binary import HomLieSuper, SuperBracket2
from .cohomology import COMPLEXES, Cochain, make_cochain
from .graded import GradedMap, GradedSpace, graded_space, skew_basis
from .linalg import InputError, Matrix, is_zero_vec
from .report import fmt_scalar
from .reps import Representation
from .ternary import SuperBracket3, TernaryHomLieSuper

RATIONAL_RE = re.compile(r"^-?\d+(/[1-9]\d*)?$")


def parse_scalar(x, where: str) -> Fraction:
    if isinstance(x, bool):
        raise InputError(f"bad rational {x!r} at {where}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str) and RATIONAL_RE.match(x):
        return Fraction(x)
    raise InputError(f"bad rational {x!r} at {where}")


@dataclass
class DocumentBundle:
    name: str
    lie: HomLieSuper
    rep: Representation = None
    ternary: TernaryHomLieSuper = None


def parse_json(text: str, where: str = "document") -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON in {where}: {exc}") from None
    if not isinstance(doc, dict):
        raise InputError(f"{where} must be a JSON object")
    return doc


def _split_key(key: str, arity: int, space: GradedSpace) -> tuple:
    parts = key.split(",")
    if len(parts) != arity:
        raise InputError(f"bracket key {key!r} must join {arity} basis ids")
    return tuple(space.index(p) for p in parts)


def _check_canonical(key: str, idx: tuple, space: GradedSpace):
    from .graded import canonicalize
    canon, _, zero = canonicalize(idx, space.parities)
    if zero or canon != idx:
        raise InputError(f"bracket key {key!r} is not canonical")


def _vec_from_map(m, space: GradedSpace, where: str) -> tuple:
    if not isinstance(m, dict):
        raise InputError(f"{where} must map basis ids to rationals")
    out = [Fraction(0)] * space.dim
    for name, val in m.items():
        out[space.index(name)] = parse_scalar(val, f"{where}[{name}]")
    return tuple(out)


def _grid_to_matrix(grid, rows: int, cols: int, where: str) -> Matrix:
    if (not isinstance(grid, list) or len(grid) != rows
            or any(not isinstance(r, list) or len(r) != cols for r in grid)):
        raise InputError(f"{where} must be a {rows}x{cols} grid")
    return Matrix.build([[parse_scalar(x, where) for x in row] for row in grid])


def _column_map_to_graded(m, space: GradedSpace, where: str) -> GradedMap:
    if not isinstance(m, dict):
        raise InputError(f"{where} must map basis ids to column maps")
    cols = []
    for j, name in enumerate(space.names):
        cols.append(_vec_from_map(m.get(name, {}), space, f"{where}[{name}]"))
    for name in m:
        space.index(name)  # unknown source ids are errors too
    return GradedMap(space, space, Matrix.from_columns(cols, space.dim))


def load_document(doc: dict) -> DocumentBundle:
    name = doc.get("name", "algebra")
    basis = doc.get("basis")
    if not isinstance(basis, list) or not basis:
        raise InputError("document needs a nonempty basis list")
    ids, parities = [], []
    for entry in basis:
        if not isinstance(entry, dict) or "id" not in entry or "parity" not in entry:
            raise InputError("basis entries need id and parity")
        if entry["parity"] not in (0, 1):
            raise InputError(f"basis parity for {entry.get('id')!r} must be 0 or 1")
        ids.append(str(entry["id"]))
        parities.append(entry["parity"])
    space = graded_space(ids, parities)

    coeffs = {}
    for key, val in doc.get("bracket", {}).items():
        idx = _split_key(key, 2, space)
        _check_canonical(key, idx, space)
        coeffs[idx] = _vec_from_map(val, space, f"bracket[{key}]")
    bracket = SuperBracket2.from_canonical(space, coeffs)

    if "alpha" in doc:
        alpha = _column_map_to_graded(doc["alpha"], space, "alpha")
    else:
        from .graded import identity_map
        alpha = identity_map(space)
    lie = HomLieSuper(space, bracket, alpha)

    rep = None
    if "representation" in doc:
        rdoc = doc["representation"]
        mod_par = rdoc.get("space")
        if not isinstance(mod_par, list) or any(p not in (0, 1) for p in mod_par):
            raise InputError("representation.space must list parities")
        module = graded_space(tuple(f"v{i}" for i in range(len(mod_par))), mod_par)
        n = module.dim
        mats = []
        matdocs = rdoc.get("matrices", {})
        for i, bid in enumerate(space.names):
            if bid not in matdocs:
                raise InputError(f"representation matrix for {bid!r} missing")
            m = _grid_to_matrix(matdocs[bid], n, n, f"matrices[{bid}]")
            mats.append(GradedMap(module, module, m, space.parities[i]))
        beta = GradedMap(module, module,
                         _grid_to_matrix(rdoc.get("beta"), n, n, "beta"))
        rep = Representation(lie, module, tuple(mats), beta)

    ternary = None
    if "ternary" in doc:
        tco = {}
        for key, val in doc["ternary"].items():
            idx = _split_key(key, 3, space)
            _check_canonical(key, idx, space)
            tco[idx] = _vec_from_map(val, space, f"ternary[{key}]")
        b3 = SuperBracket3.from_canonical(space, tco)
        alpha2 = (_column_map_to_graded(doc["alpha2"], space, "alpha2")
                  if "alpha2" in doc else alpha)
        ternary = TernaryHomLieSuper(space, b3, alpha, alpha2)

    return DocumentBundle(name, lie, rep, ternary)


def read_document(path) -> DocumentBundle:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    return load_document(parse_json(text, str(path)))


# --- serialization ----------------------------------------------------------


def _vec_to_map(v, space: GradedSpace) -> dict:
    return {space.names[i]: fmt_scalar(c) for i, c in enumerate(v) if c != 0}


def _matrix_to_grid(m: Matrix) -> list:
    return [[fmt_scalar(x) for x in row] for row in m.entries]


def _graded_to_column_map(g: GradedMap) -> dict:
    out = {}
    for j, name in enumerate(g.domain.names):
        col = g.matrix.col(j)
        if not is_zero_vec(col):
            out[name] = _vec_to_map(col, g.codomain)
    return out


def serialize_document(bundle: DocumentBundle) -> dict:
    lie = bundle.lie
    space = lie.space
    doc = {
        "name": bundle.name,
        "basis": [{"id": n, "parity": p}
                  for n, p in zip(space.names, space.parities)],
        "bracket": {f"{space.names[i]},{space.names[j]}": _vec_to_map(v, space)
                    for (i, j), v in sorted(lie.bracket.canonical_coeffs().items())},
        "alpha": _graded_to_column_map(lie.alpha),
    }
    if bundle.rep is not None:
        rep = bundle.rep
        doc["representation"] = {
            "space": list(rep.module_space.parities),
            "matrices": {space.names[i]: _matrix_to_grid(rep.rho_matrix(i))
                         for i in range(space.dim)},
            "beta": _matrix_to_grid(rep.beta.matrix),
        }
    if bundle.ternary is not None:
        t = bundle.ternary
        doc["ternary"] = {
            ",".join(space.names[i] for i in key): _vec_to_map(v, space)
            for key, v in sorted(t.bracket.canonical_coeffs().items())}
        doc["alpha2"] = _graded_to_column_map(t.alpha2)
    return doc


def dumps_document(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=1) + "\n"


def write_document(path, bundle: DocumentBundle):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_document(serialize_document(bundle)))


# --- cochain and functional documents ---------------------------------------


def load_cochain(doc: dict, space: GradedSpace) -> Cochain:
    cx = doc.get("complex")
    if cx not in COMPLEXES:
        raise InputError(f"unknown complex {cx!r}")
    degree = doc.get("degree")
    if not isinstance(degree, int):
        raise InputError("cochain degree must be an integer")
    raw = doc.get("values", {})
    if not isinstance(raw, dict):
        raise InputError("cochain values must be a map")
    adjoint = cx.endswith("adjoint")
    values = {}
    for key, val in raw.items():
        where = f"values[{key}]"
        if cx.startswith("binary"):
            idx = _split_key(key, degree, space)
            _check_canonical(key, idx, space)
            values[idx] = (_vec_from_map(val, space, where) if adjoint
                           else parse_scalar(val, where))
        elif degree == 1:
            k = space.index(key)
            values[k] = (_vec_from_map(val, space, where) if adjoint
                         else parse_scalar(val, where))
        elif degree == 2:
            if "|" not in key:
                raise InputError(f"cochain key {key!r} needs a pair|element shape")
            pair_s, elem = key.split("|", 1)
            pair = _split_key(pair_s, 2, space)
            _check_canonical(pair_s, pair, space)
            values[(pair, space.index(elem))] = (
                _vec_from_map(val, space, where) if adjoint
                else parse_scalar(val, where))
        else:
            raise InputError(f"unsupported cochain degree {degree} for {cx}")
    parity = doc.get("parity")
    return make_cochain(cx, degree, space, values, parity)


def serialize_cochain(c: Cochain) -> dict:
    space = c.space
    dim = space.dim
    values = {}
    if c.complex.startswith("binary"):
        sb = skew_basis(c.degree if c.complex == "binary-scalar" else 2, space)
        for r, key in enumerate(sb.tuples):
            name = ",".join(space.names[i] for i in key)
            if c.complex == "binary-scalar":
                if c.coords[r] != 0:
                    values[name] = fmt_scalar(c.coords[r])
            else:
                v = c.coords[r * dim:(r + 1) * dim]
                if not is_zero_vec(v):
                    values[name] = _vec_to_map(v, space)
    elif c.degree == 1:
        for k in range(dim):
            if c.complex == "ternary-scalar":
                if c.coords[k] != 0:
                    values[space.names[k]] = fmt_scalar(c.coords[k])
            else:
                v = c.coords[k * dim:(k + 1) * dim]
                if not is_zero_vec(v):
                    values[space.names[k]] = _vec_to_map(v, space)
    else:
        sb2 = skew_basis(2, space)
        for r, pair in enumerate(sb2.tuples):
            for k in range(dim):
                name = (f"{space.names[pair[0]]},{space.names[pair[1]]}"
                        f"|{space.names[k]}")
                base = r * dim + k
                if c.complex == "ternary-scalar":
                    if c.coords[base] != 0:
                        values[name] = fmt_scalar(c.coords[base])
                else:
                    v = c.coords[base * dim:(base + 1) * dim]
                    if not is_zero_vec(v):
                        values[name] = _vec_to_map(v, space)
    return {"complex": c.complex, "degree": c.degree, "values": values}


def load_functional(doc: dict, space: GradedSpace) -> tuple:
    """A linear functional as {"values": {basis-id: rational}}."""
    raw = doc.get("values", {})
    if not isinstance(raw, dict):
        raise InputError("functional values must be a map")
    return _vec_from_map(raw, space, "values")


def read_json_file(path) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            return parse_json(fh.read(), str(path))
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
