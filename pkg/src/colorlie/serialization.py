"""Strict JSON container for structures, with exact scalar strings.

Scalars are serialized as canonical "p/q" strings (lowest terms,
denominator omitted when 1) or residue strings over a prime field;
never floats.  The schema is strict: unknown keys, dangling labels,
malformed scalars and degree-violating entries are each rejected with
a distinct error code.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Optional

from .cartier_context import CartierContext, ContextError
from .fields import Field, FieldError
from .graded_linalg import (
    TENSOR_SEP,
    GradedSpace,
    LinalgError,
    Morphism,
    tensor_morphism,
    tensor_space,
)
from .lie_structures import LieBialgebraData, StructureError
from .lie_structures import abelian_coabelian as _abelian
from .crossed_modules import CrossedLieBialgebra, CrossedModuleData

FORMAT_VERSION = 1

MALFORMED_SCALAR = "malformed-scalar"
DEGREE_VIOLATION = "degree-violation"
DANGLING_LABEL = "dangling-label"
SCHEMA_VIOLATION = "schema-violation"

_TOP_KEYS = {"format_version", "field", "rank", "tau", "eta", "spaces", "maps", "roles"}
_ROLE_KEYS = {
    "base",
    "module_space",
    "alpha",
    "lambda",
    "beta",
    "delta",
    "beta_base",
    "delta_base",
    "pi",
    "gamma",
}


class ParseError(ValueError):
    def __init__(self, code: str, message: str):
        super().__init__(f"{code}: {message}")
        self.code = code


@dataclass
class ParsedStructure:
    """Either a crossed Lie bialgebra or a plain one, plus optional
    biproduct tags (base with pi and gamma)."""

    kind: str  # "crossed" | "plain"
    crossed: Optional[CrossedLieBialgebra]
    plain: Optional[LieBialgebraData]
    base: Optional[LieBialgebraData]
    pi: Optional[Morphism]
    gamma: Optional[Morphism]
    document: dict


def _fail(code: str, message: str):
    raise ParseError(code, message)


def _expect(cond: bool, code: str, message: str) -> None:
    if not cond:
        _fail(code, message)


def _parse_scalar(field: Field, text: Any, where: str):
    _expect(isinstance(text, str), MALFORMED_SCALAR, f"{where}: scalar must be a string")
    try:
        return field.parse(text)
    except FieldError as exc:
        _fail(MALFORMED_SCALAR, f"{where}: {exc}")


def _parse_matrix(field: Field, rank: int, raw: Any, name: str):
    _expect(
        isinstance(raw, list) and len(raw) == rank,
        SCHEMA_VIOLATION,
        f"{name} must be a {rank}x{rank} matrix",
    )
    rows = []
    for i, row in enumerate(raw):
        _expect(
            isinstance(row, list) and len(row) == rank,
            SCHEMA_VIOLATION,
            f"{name} row {i} must have {rank} entries",
        )
        rows.append(tuple(_parse_scalar(field, x, f"{name}[{i}]") for x in row))
    return tuple(rows)


def _parse_space(rank: int, name: str, raw: Any) -> GradedSpace:
    _expect(isinstance(raw, list), SCHEMA_VIOLATION, f"space {name} must be a list")
    basis = []
    seen = set()
    for item in raw:
        _expect(
            isinstance(item, list) and len(item) == 2,
            SCHEMA_VIOLATION,
            f"space {name}: basis items are [label, degree]",
        )
        label, degree = item
        _expect(
            isinstance(label, str) and label and TENSOR_SEP not in label,
            SCHEMA_VIOLATION,
            f"space {name}: bad label {label!r}",
        )
        _expect(label not in seen, SCHEMA_VIOLATION, f"space {name}: duplicate label {label!r}")
        seen.add(label)
        _expect(
            isinstance(degree, list)
            and len(degree) == rank
            and all(isinstance(x, int) for x in degree),
            SCHEMA_VIOLATION,
            f"space {name}: degree of {label!r} must be {rank} integers",
        )
        basis.append((label, tuple(degree)))
    return GradedSpace.build(rank, basis)


def _slot_index(slot: Any, spaces: tuple[GradedSpace, ...], where: str) -> int:
    """Index of a label (or label pair) in a declared space (or product)."""
    if len(spaces) == 1:
        _expect(isinstance(slot, str), SCHEMA_VIOLATION, f"{where}: expected a label")
        try:
            return spaces[0].index(slot)
        except LinalgError:
            _fail(DANGLING_LABEL, f"{where}: unknown label {slot!r}")
    _expect(
        isinstance(slot, list) and len(slot) == 2 and all(isinstance(x, str) for x in slot),
        SCHEMA_VIOLATION,
        f"{where}: expected a [label, label] pair",
    )
    try:
        i = spaces[0].index(slot[0])
        j = spaces[1].index(slot[1])
    except LinalgError:
        _fail(DANGLING_LABEL, f"{where}: unknown label in {slot!r}")
    return i * spaces[1].dim + j


def _parse_map(
    field: Field,
    name: str,
    raw: Any,
    source_parts: tuple[GradedSpace, ...],
    target_parts: tuple[GradedSpace, ...],
) -> Morphism:
    _expect(isinstance(raw, list), SCHEMA_VIOLATION, f"map {name} must be a list of triples")
    source = source_parts[0] if len(source_parts) == 1 else tensor_space(*source_parts)
    target = target_parts[0] if len(target_parts) == 1 else tensor_space(*target_parts)
    entries = []
    for n, item in enumerate(raw):
        where = f"map {name}[{n}]"
        _expect(
            isinstance(item, list) and len(item) == 3,
            SCHEMA_VIOLATION,
            f"{where}: entries are [target, source, scalar]",
        )
        tgt, src, scalar = item
        i = _slot_index(tgt, target_parts, where)
        j = _slot_index(src, source_parts, where)
        entries.append((i, j, _parse_scalar(field, scalar, where)))
    try:
        return Morphism.build(field, source, target, entries)
    except LinalgError as exc:
        _fail(DEGREE_VIOLATION, f"map {name}: {exc}")


def parse_document(doc: Any) -> ParsedStructure:
    _expect(isinstance(doc, dict), SCHEMA_VIOLATION, "document must be an object")
    extra = set(doc) - _TOP_KEYS
    missing = _TOP_KEYS - set(doc)
    _expect(not extra, SCHEMA_VIOLATION, f"unknown keys {sorted(extra)}")
    _expect(not missing, SCHEMA_VIOLATION, f"missing keys {sorted(missing)}")
    _expect(
        doc["format_version"] == FORMAT_VERSION,
        SCHEMA_VIOLATION,
        f"unsupported format_version {doc['format_version']!r}",
    )
    try:
        field = Field.from_description(doc["field"])
    except (FieldError, AttributeError, TypeError):
        _fail(SCHEMA_VIOLATION, f"bad field descriptor {doc['field']!r}")
    rank = doc["rank"]
    _expect(isinstance(rank, int) and rank >= 1, SCHEMA_VIOLATION, "rank must be a positive integer")

    tau = _parse_matrix(field, rank, doc["tau"], "tau")
    eta = _parse_matrix(field, rank, doc["eta"], "eta")
    try:
        ctx = CartierContext.make(field, tau, eta)
    except ContextError as exc:
        _fail(SCHEMA_VIOLATION, str(exc))

    _expect(isinstance(doc["spaces"], dict), SCHEMA_VIOLATION, "spaces must be an object")
    spaces = {
        name: _parse_space(rank, name, raw) for name, raw in doc["spaces"].items()
    }
    _expect(isinstance(doc["maps"], dict), SCHEMA_VIOLATION, "maps must be an object")
    raw_maps = doc["maps"]
    roles = doc["roles"]
    _expect(isinstance(roles, dict), SCHEMA_VIOLATION, "roles must be an object")
    bad_roles = set(roles) - _ROLE_KEYS
    _expect(not bad_roles, SCHEMA_VIOLATION, f"unknown roles {sorted(bad_roles)}")

    def role_space(role: str) -> GradedSpace:
        name = roles.get(role)
        _expect(isinstance(name, str), SCHEMA_VIOLATION, f"role {role} must name a space")
        _expect(name in spaces, SCHEMA_VIOLATION, f"role {role}: unknown space {name!r}")
        return spaces[name]

    used_maps: set[str] = set()

    def role_map(role: str, source_parts, target_parts, required: bool):
        name = roles.get(role)
        if name is None:
            _expect(not required, SCHEMA_VIOLATION, f"role {role} is required")
            return None
        _expect(isinstance(name, str), SCHEMA_VIOLATION, f"role {role} must name a map")
        _expect(name in raw_maps, SCHEMA_VIOLATION, f"role {role}: unknown map {name!r}")
        used_maps.add(name)
        return _parse_map(field, name, raw_maps[name], source_parts, target_parts)

    crossed_kind = "alpha" in roles or "lambda" in roles

    if crossed_kind:
        base_space = role_space("base")
        v = role_space("module_space")
        alpha = role_map("alpha", (base_space, v), (v,), required=True)
        lam = role_map("lambda", (v,), (base_space, v), required=True)
        beta = role_map("beta", (v, v), (v,), required=False)
        delta = role_map("delta", (v,), (v, v), required=False)
        beta_base = role_map("beta_base", (base_space, base_space), (base_space,), required=False)
        delta_base = role_map("delta_base", (base_space,), (base_space, base_space), required=False)
        _expect(
            roles.get("pi") is None and roles.get("gamma") is None,
            SCHEMA_VIOLATION,
            "pi/gamma tags only apply to plain structures",
        )
        _check_unused(raw_maps, used_maps)
        base = _with_structure(ctx, base_space, beta_base, delta_base)
        sq = tensor_space(v, v)
        if beta is None:
            beta = Morphism.zero(field, sq, v)
        if delta is None:
            delta = Morphism.zero(field, v, sq)
        k = CrossedLieBialgebra(CrossedModuleData(base, v, alpha, lam), beta, delta)
        return ParsedStructure("crossed", k, None, base, None, None, doc)

    v = role_space("module_space")
    beta = role_map("beta", (v, v), (v,), required=True)
    delta = role_map("delta", (v,), (v, v), required=True)
    plain = LieBialgebraData(ctx, v, beta, delta)
    base = None
    pi = gamma = None
    tagged = [r for r in ("base", "pi", "gamma") if roles.get(r) is not None]
    if tagged:
        _expect(
            len(tagged) == 3,
            SCHEMA_VIOLATION,
            "base, pi and gamma must be tagged together",
        )
        base_space = role_space("base")
        pi = role_map("pi", (v,), (base_space,), required=True)
        gamma = role_map("gamma", (base_space,), (v,), required=True)
        beta_base = role_map("beta_base", (base_space, base_space), (base_space,), required=False)
        delta_base = role_map("delta_base", (base_space,), (base_space, base_space), required=False)
        if beta_base is None and delta_base is None:
            # derive the retract structure through the splitting
            beta_base = pi @ plain.beta @ _tensor2(gamma)
            delta_base = _tensor2(pi) @ plain.delta @ gamma
        base = _with_structure(ctx, base_space, beta_base, delta_base)
    _check_unused(raw_maps, used_maps)
    return ParsedStructure("plain", None, plain, base, pi, gamma, doc)


def _tensor2(m: Morphism) -> Morphism:
    return tensor_morphism(m, m)


def _with_structure(ctx, space, beta, delta) -> LieBialgebraData:
    if beta is None and delta is None:
        return _abelian(ctx, space)
    sq = tensor_space(space, space)
    if beta is None:
        beta = Morphism.zero(ctx.field, sq, space)
    if delta is None:
        delta = Morphism.zero(ctx.field, space, sq)
    try:
        return LieBialgebraData(ctx, space, beta, delta)
    except StructureError as exc:
        raise ParseError(SCHEMA_VIOLATION, str(exc)) from None


def _check_unused(raw_maps: dict, used: set[str]) -> None:
    unused = set(raw_maps) - used
    _expect(not unused, SCHEMA_VIOLATION, f"maps without a role: {sorted(unused)}")


def parse_bytes(data: bytes) -> ParsedStructure:
    try:
        doc = json.loads(data.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise ParseError(SCHEMA_VIOLATION, f"not valid UTF-8 JSON: {exc}") from None
    return parse_document(doc)


def parse_path(path) -> ParsedStructure:
    with open(path, "rb") as handle:
        return parse_bytes(handle.read())


# -- serialization ------------------------------------------------------


def _space_doc(space: GradedSpace) -> list:
    return [[label, list(deg)] for label, deg in space.basis()]


def _matrix_doc(field: Field, matrix) -> list:
    return [[field.format(x) for x in row] for row in matrix]


def _map_doc(m: Morphism, source_parts, target_parts) -> list:
    field = m.field

    def slot(parts, index):
        if len(parts) == 1:
            return parts[0].labels[index]
        return [parts[0].labels[index // parts[1].dim], parts[1].labels[index % parts[1].dim]]

    out = []
    for j in range(m.source.dim):
        for i, v in m.cols[j]:
            out.append([slot(target_parts, i), slot(source_parts, j), field.format(v)])
    return out


def _header(ctx: CartierContext) -> dict:
    return {
        "format_version": FORMAT_VERSION,
        "field": ctx.field.describe(),
        "rank": ctx.rank,
        "tau": _matrix_doc(ctx.field, ctx.tau.matrix),
        "eta": _matrix_doc(ctx.field, ctx.eta.matrix),
    }


def serialize_crossed(k: CrossedLieBialgebra) -> dict:
    ctx = k.ctx
    f, v = k.base.space, k.space
    doc = _header(ctx)
    doc["spaces"] = {"base": _space_doc(f), "module": _space_doc(v)}
    doc["maps"] = {
        "alpha": _map_doc(k.cm.alpha, (f, v), (v,)),
        "lambda": _map_doc(k.cm.lam, (v,), (f, v)),
        "beta": _map_doc(k.beta, (v, v), (v,)),
        "delta": _map_doc(k.delta, (v,), (v, v)),
    }
    doc["roles"] = {
        "base": "base",
        "module_space": "module",
        "alpha": "alpha",
        "lambda": "lambda",
        "beta": "beta",
        "delta": "delta",
    }
    if not k.base.beta.is_zero():
        doc["maps"]["beta_base"] = _map_doc(k.base.beta, (f, f), (f,))
        doc["roles"]["beta_base"] = "beta_base"
    if not k.base.delta.is_zero():
        doc["maps"]["delta_base"] = _map_doc(k.base.delta, (f,), (f, f))
        doc["roles"]["delta_base"] = "delta_base"
    return doc


def serialize_plain(
    L: LieBialgebraData,
    base: Optional[LieBialgebraData] = None,
    pi: Optional[Morphism] = None,
    gamma: Optional[Morphism] = None,
) -> dict:
    doc = _header(L.ctx)
    v = L.space
    doc["spaces"] = {"total": _space_doc(v)}
    doc["maps"] = {
        "beta": _map_doc(L.beta, (v, v), (v,)),
        "delta": _map_doc(L.delta, (v,), (v, v)),
    }
    doc["roles"] = {"module_space": "total", "beta": "beta", "delta": "delta"}
    if base is not None:
        if pi is None or gamma is None:
            raise ValueError("base tags require pi and gamma")
        f = base.space
        doc["spaces"]["base"] = _space_doc(f)
        doc["maps"]["pi"] = _map_doc(pi, (v,), (f,))
        doc["maps"]["gamma"] = _map_doc(gamma, (f,), (v,))
        doc["roles"].update({"base": "base", "pi": "pi", "gamma": "gamma"})
        if not base.beta.is_zero():
            doc["maps"]["beta_base"] = _map_doc(base.beta, (f, f), (f,))
            doc["roles"]["beta_base"] = "beta_base"
        if not base.delta.is_zero():
            doc["maps"]["delta_base"] = _map_doc(base.delta, (f,), (f, f))
            doc["roles"]["delta_base"] = "delta_base"
    return doc


def canonical_json(doc: dict) -> bytes:
    """Stable-keyed, deterministic byte encoding."""
    return (json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n").encode(
        "utf-8"
    )
