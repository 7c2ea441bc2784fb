"""JSON file formats for algebras, morphisms and extensions.

Coefficients are strings ("4", "-2/3") so the format is exact and
field-agnostic; product indices are 1-based to match the basis labels as a
person would write them.  Saving always inlines the domain and codomain of a
morphism; loading also accepts file-path references relative to the file
being read.
"""

from __future__ import annotations

import json
from pathlib import Path

from .algebras import Algebra, LinearMap
from .errors import InputError
from .extensions import Extension
from .fields import GF, QQ, Field
from .laws import BUILTIN_VARIETIES, Variety, parse_law, variety_by_name


def field_to_json(field: Field):
    if field == QQ:
        return "Q"
    return {"Fp": field.char}


def field_from_json(data) -> Field:
    if data == "Q":
        return QQ
    if isinstance(data, dict) and set(data) == {"Fp"}:
        p = data["Fp"]
        if not isinstance(p, int):
            raise InputError("Fp modulus must be an integer")
        return GF(p)
    raise InputError(f"bad field spec {data!r}; expected \"Q\" or {{\"Fp\": p}}")


def variety_to_json(v: Variety):
    if v.name in BUILTIN_VARIETIES and BUILTIN_VARIETIES[v.name] == v:
        return v.name
    return {"name": v.name, "laws": [str(law) for law in v.laws]}


def variety_from_json(data) -> Variety:
    if isinstance(data, str):
        return variety_by_name(data)
    if isinstance(data, dict) and set(data) <= {"name", "laws"}:
        name = data.get("name", "custom")
        laws = tuple(parse_law(s) for s in data.get("laws", []))
        return Variety(name, laws)
    raise InputError(f"bad variety spec {data!r}")


def algebra_to_json(a: Algebra, variety: Variety | None = None):
    f = a.field
    products = []
    for i in range(a.dim):
        for j in range(a.dim):
            for k in range(a.dim):
                c = a.sc[i][j][k]
                if c != f.zero:
                    products.append([i + 1, j + 1, k + 1, f.fmt(c)])
    out = {
        "field": field_to_json(f),
        "dim": a.dim,
        "basis": list(a.basis_labels),
        "products": products,
    }
    if variety is not None:
        out["variety"] = variety_to_json(variety)
    return out


def algebra_from_json(data):
    """Returns (algebra, attached variety or None)."""
    if not isinstance(data, dict):
        raise InputError("algebra file must be a JSON object")
    allowed = {"field", "dim", "basis", "products", "variety"}
    unknown = set(data) - allowed
    if unknown:
        raise InputError(f"unknown keys in algebra file: {', '.join(sorted(unknown))}")
    for key in ("field", "dim", "basis", "products"):
        if key not in data:
            raise InputError(f"algebra file is missing the {key!r} key")
    field = field_from_json(data["field"])
    dim = data["dim"]
    basis = data["basis"]
    if not isinstance(dim, int) or dim < 0:
        raise InputError("dim must be a nonnegative integer")
    if not isinstance(basis, list) or len(basis) != dim:
        raise InputError("basis must list exactly dim labels")
    products = {}
    for entry in data["products"]:
        if not (isinstance(entry, list) and len(entry) == 4):
            raise InputError(f"bad product entry {entry!r}; expected [i, j, k, coefficient]")
        i, j, k, coeff = entry
        for idx in (i, j, k):
            if not isinstance(idx, int) or not (1 <= idx <= dim):
                raise InputError(f"product index {idx} out of range 1..{dim}")
        key = (i - 1, j - 1, k - 1)
        if key in products:
            raise InputError(f"duplicate product entry for indices [{i}, {j}, {k}]")
        products[key] = field.parse(str(coeff))
    algebra = Algebra.from_products(field, tuple(basis), products)
    variety = variety_from_json(data["variety"]) if "variety" in data else None
    return algebra, variety


def _algebra_ref_from_json(data, base_dir: Path | None):
    if isinstance(data, str):
        path = Path(data)
        if base_dir is not None and not path.is_absolute():
            path = base_dir / path
        algebra, _ = load_algebra(path)
        return algebra
    algebra, _ = algebra_from_json(data)
    return algebra


def morphism_to_json(f: LinearMap):
    fld = f.matrix.field
    return {
        "domain": algebra_to_json(f.domain),
        "codomain": algebra_to_json(f.codomain),
        "matrix": [[fld.fmt(x) for x in row] for row in f.matrix.entries],
    }


def morphism_from_json(data, base_dir: Path | None = None) -> LinearMap:
    if not isinstance(data, dict):
        raise InputError("morphism file must be a JSON object")
    allowed = {"domain", "codomain", "matrix", "ambient", "coefficient"}
    unknown = set(data) - allowed
    if unknown:
        raise InputError(f"unknown keys in morphism file: {', '.join(sorted(unknown))}")
    for key in ("domain", "codomain", "matrix"):
        if key not in data:
            raise InputError(f"morphism file is missing the {key!r} key")
    domain = _algebra_ref_from_json(data["domain"], base_dir)
    codomain = _algebra_ref_from_json(data["codomain"], base_dir)
    raw = data["matrix"]
    if not isinstance(raw, list) or len(raw) != domain.dim:
        raise InputError("matrix must have one row per domain basis vector")
    fld = domain.field
    rows = []
    for row in raw:
        if not isinstance(row, list) or len(row) != codomain.dim:
            raise InputError("matrix row length must match the codomain dimension")
        rows.append([fld.parse(str(x)) for x in row])
    return LinearMap.from_rows(domain, codomain, rows).certified()


def extension_to_json(e: Extension):
    out = morphism_to_json(e.f)
    out["ambient"] = variety_to_json(e.ambient)
    out["coefficient"] = variety_to_json(e.coefficient)
    return out


def extension_from_json(data, base_dir: Path | None = None,
                        ambient: Variety | None = None,
                        coefficient: Variety | None = None) -> Extension:
    """Build an extension from a file; explicit arguments override the file."""
    f = morphism_from_json(data, base_dir)
    if ambient is None:
        if "ambient" not in data:
            raise InputError("extension needs an ambient variety (file key or flag)")
        ambient = variety_from_json(data["ambient"])
    if coefficient is None:
        if "coefficient" not in data:
            raise InputError("extension needs a coefficient variety (file key or flag)")
        coefficient = variety_from_json(data["coefficient"])
    return Extension.make(f, ambient, coefficient)


def dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def load_json(path):
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror or e}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"{path}:{e.lineno}:{e.colno}: {e.msg}") from None


def save_json(path, obj):
    Path(path).write_text(dumps(obj), encoding="utf-8")


def load_algebra(path):
    data = load_json(path)
    try:
        return algebra_from_json(data)
    except InputError as e:
        if str(path) in str(e):
            raise
        raise InputError(f"{path}: {e}") from None


def save_algebra(path, a: Algebra, variety: Variety | None = None):
    save_json(path, algebra_to_json(a, variety))


def load_morphism(path) -> LinearMap:
    return morphism_from_json(load_json(path), Path(path).parent)


def save_morphism(path, f: LinearMap):
    save_json(path, morphism_to_json(f))


def load_extension(path, ambient: Variety | None = None,
                   coefficient: Variety | None = None) -> Extension:
    return extension_from_json(load_json(path), Path(path).parent,
                               ambient, coefficient)


def save_extension(path, e: Extension):
    save_json(path, extension_to_json(e))


def violation_to_json(v):
    return {
        "trial": v.trial,
        "outer": extension_to_json(v.outer),
        "inner": extension_to_json(v.inner),
        "composite_commutator_dim": v.composite_commutator_dim,
    }
