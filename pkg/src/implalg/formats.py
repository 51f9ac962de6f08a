"""JSON file formats for hypergraphs, profiles and polymatroid tables.

Subset keys are decimal bitmask strings (index i <-> bit i). Output is
byte-stable: keys sorted, fixed separators.
"""

from __future__ import annotations

import json
from typing import Any

from .algebra import ImplicationAlgebra
from .errors import ImplAlgError
from .hypergraph import EdgeFamily, Hypergraph, new_hypergraph
from .polymatroid import PolymatroidFn
from .profile import Profile


class InputError(ImplAlgError):
    """Malformed or invalid input file."""


def _no_duplicate_keys(pairs):
    out = {}
    for k, v in pairs:
        if k in out:
            raise InputError(f"duplicate key {k!r}")
        out[k] = v
    return out


def loads(text: str) -> Any:
    try:
        return json.loads(text, object_pairs_hook=_no_duplicate_keys)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from exc


def dumps(obj: Any, pretty: bool = False) -> str:
    if pretty:
        return json.dumps(obj, sort_keys=True, indent=2)
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _int(v, what):
    if isinstance(v, bool) or not isinstance(v, int):
        raise InputError(f"{what} must be an integer, got {v!r}")
    return v


def hypergraph_to_json(h: Hypergraph, as_algebra: bool = False) -> dict:
    doc = {"vertices": list(h.vertex_names), "edges": h.edge_labels()}
    if as_algebra:
        doc["as"] = "algebra"
    return doc


def algebra_to_json(alg: ImplicationAlgebra) -> dict:
    return hypergraph_to_json(Hypergraph(alg.ground, alg.min_edges), as_algebra=True)


def family_to_json(family: EdgeFamily, prefix: str = "v") -> list[list[str]]:
    return [[f"{prefix}{i}" for i in range(family.n_vertices) if e >> i & 1] for e in family.edges]


def hypergraph_from_json(doc: Any) -> Hypergraph:
    if not isinstance(doc, dict) or "vertices" not in doc or "edges" not in doc:
        raise InputError('hypergraph must be an object with "vertices" and "edges"')
    extra = set(doc) - {"vertices", "edges", "as"}
    if extra:
        raise InputError(f"unexpected keys {sorted(extra)}")
    if doc.get("as", "hypergraph") not in ("hypergraph", "algebra"):
        raise InputError(f'"as" must be "hypergraph" or "algebra", got {doc["as"]!r}')
    vertices, edges = doc["vertices"], doc["edges"]
    if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
        raise InputError('"vertices" must be a list of strings')
    if not isinstance(edges, list) or not all(isinstance(e, list) for e in edges):
        raise InputError('"edges" must be a list of lists')
    for e in edges:
        if not all(isinstance(v, str) for v in e):
            raise InputError("edge members must be strings")
        if len(set(e)) != len(e):
            raise InputError(f"edge {e} repeats a vertex")
    try:
        return new_hypergraph(vertices, edges)
    except ImplAlgError as exc:
        raise InputError(str(exc)) from exc
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def _table(doc: Any, what: str) -> tuple[int, dict[int, Any]]:
    if not isinstance(doc, dict) or set(doc) != {"m", "values"}:
        raise InputError(f'{what} must be an object with exactly "m" and "values"')
    m = _int(doc["m"], '"m"')
    if not 0 <= m <= 20:
        raise InputError(f'"m" must be in 0..20, got {m}')
    values = doc["values"]
    if not isinstance(values, dict):
        raise InputError('"values" must be an object')
    table = {}
    for k, v in values.items():
        if not k.isdigit() or (k != "0" and k.startswith("0")):
            raise InputError(f"bad subset key {k!r}")
        table[int(k)] = _int(v, f"value at {k}")
    return m, table


def profile_from_json(doc: Any) -> Profile:
    m, table = _table(doc, "profile")
    if m < 1:
        raise InputError("a profile needs m >= 1")
    if set(table) != set(range(1, 1 << m)):
        raise InputError(f"profile keys must be exactly 1..{(1 << m) - 1}")
    try:
        return Profile.from_mapping(m, table)
    except ImplAlgError as exc:
        raise InputError(str(exc)) from exc


def profile_to_json(p: Profile) -> dict:
    return {"m": p.m, "values": {str(s): v for s, v in p.as_dict().items()}}


def rho_from_json(doc: Any) -> PolymatroidFn:
    m, table = _table(doc, "polymatroid")
    if set(table) != set(range(1 << m)):
        raise InputError(f"polymatroid keys must be exactly 0..{(1 << m) - 1}")
    if table[0] != 0:
        raise InputError('key "0" must map to 0')
    if any(v < 0 for v in table.values()):
        raise InputError("polymatroid values must be nonnegative")
    return PolymatroidFn(m, tuple(table[s] for s in range(1 << m)))


def rho_to_json(r: PolymatroidFn) -> dict:
    return {"m": r.m, "values": {str(s): v for s, v in enumerate(r.values)}}


def to_dot(h: Hypergraph, name: str = "H") -> str:
    """Bipartite vertex/edge incidence graph in Graphviz syntax."""
    lines = [f"graph {name} {{"]
    for v in h.vertex_names:
        lines.append(f'  "{v}" [shape=circle];')
    for i, labels in enumerate(h.edge_labels()):
        lines.append(f'  "e{i}" [shape=box];')
        for v in labels:
            lines.append(f'  "e{i}" -- "{v}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
