"""JSON manifold documents.

Rationals are strings (``"3"``, ``"-4/7"``) so documents stay exact.
Brackets are listed once per unordered pair with ``i < j`` (1-based); the
antisymmetric partner is implied. ``contact.phi`` uses the column-action
convention ``phi(e_j) = sum_i phi[i][j] e_i``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

import jsonschema

from . import exact
from .contact import AlmostContactStructure
from .errors import AsymmetricMetricInput, IndexOutOfRange, ParseError
from .frame import LieFrameManifold

_RATIONAL = {"type": "string", "pattern": r"^[+-]?[0-9]+(/[0-9]+)?$"}
_MATRIX = {"type": "array", "items": {"type": "array", "items": _RATIONAL}}

SCHEMA: dict[str, Any] = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "type": "object",
    "additionalProperties": False,
    "required": ["name", "dim", "brackets", "metric"],
    "properties": {
        "name": {"type": "string"},
        "dim": {"type": "integer", "minimum": 1},
        "brackets": {
            "type": "array",
            "items": {
                "type": "object",
                "additionalProperties": False,
                "required": ["i", "j", "terms"],
                "properties": {
                    "i": {"type": "integer"},
                    "j": {"type": "integer"},
                    "terms": {
                        "type": "array",
                        "items": {
                            "type": "object",
                            "additionalProperties": False,
                            "required": ["k", "coef"],
                            "properties": {"k": {"type": "integer"}, "coef": _RATIONAL},
                        },
                    },
                },
            },
        },
        "metric": {"oneOf": [{"const": "identity"}, _MATRIX]},
        "contact": {
            "type": "object",
            "additionalProperties": False,
            "required": ["phi", "xi"],
            "properties": {"phi": _MATRIX, "xi": {"type": "array", "items": _RATIONAL}},
        },
        "catalog_tag": {"type": "string"},
    },
}

Matrix = tuple[tuple[Fraction, ...], ...]
Bracket = tuple[int, int, tuple[tuple[int, Fraction], ...]]


@dataclass(frozen=True)
class ContactBlock:
    phi: Matrix
    xi: tuple[Fraction, ...]


@dataclass(frozen=True)
class ManifoldDocument:
    name: str
    dim: int
    brackets: tuple[Bracket, ...]
    metric: str | Matrix
    contact: ContactBlock | None = None
    catalog_tag: str | None = None

    def to_manifold(self) -> LieFrameManifold:
        table = {(i, j): dict(terms) for i, j, terms in self.brackets}
        metric = None if self.metric == "identity" else self.metric
        return LieFrameManifold.from_brackets(self.dim, table, metric)

    def to_structures(self) -> tuple[LieFrameManifold, AlmostContactStructure | None]:
        m = self.to_manifold()
        if self.contact is None:
            return m, None
        return m, AlmostContactStructure.build(m, self.contact.phi, self.contact.xi)

    @classmethod
    def from_structures(cls, name: str, m: LieFrameManifold,
                        acs: AlmostContactStructure | None = None,
                        catalog_tag: str | None = None) -> "ManifoldDocument":
        n = m.dim
        brackets = []
        for i in range(n):
            for j in range(i + 1, n):
                terms = tuple((k + 1, m.c[i, j, k]) for k in range(n) if m.c[i, j, k] != 0)
                if terms:
                    brackets.append((i + 1, j + 1, terms))
        if exact.exactly_equal(m.g, exact.identity(n)):
            metric: str | Matrix = "identity"
        else:
            metric = tuple(tuple(row) for row in m.g.tolist())
        contact = None
        if acs is not None:
            contact = ContactBlock(tuple(tuple(row) for row in acs.phi.tolist()), tuple(acs.xi.tolist()))
        return cls(name, n, tuple(brackets), metric, contact, catalog_tag)


def _q(text: str, path: str) -> Fraction:
    try:
        return exact.parse_rational(text)
    except ValueError as exc:
        raise ParseError(str(exc), path) from None


def _matrix(rows, dim: int, path: str) -> Matrix:
    if len(rows) != dim or any(len(r) != dim for r in rows):
        raise ParseError(f"expected a {dim}x{dim} matrix", path)
    return tuple(tuple(_q(v, f"{path}[{i}][{j}]") for j, v in enumerate(row))
                 for i, row in enumerate(rows))


def parse_manifold(text: str) -> ManifoldDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno) from None
    try:
        jsonschema.validate(data, SCHEMA)
    except jsonschema.ValidationError as exc:
        path = "$" + "".join(f"[{p!r}]" if isinstance(p, str) else f"[{p}]" for p in exc.absolute_path)
        raise ParseError(exc.message, path) from None

    dim = data["dim"]
    brackets = []
    seen = set()
    for b, entry in enumerate(data["brackets"]):
        here = f"$.brackets[{b}]"
        i, j = entry["i"], entry["j"]
        for key, idx in (("i", i), ("j", j)):
            if not 1 <= idx <= dim:
                raise IndexOutOfRange(f"index {idx} outside 1..{dim}", f"{here}.{key}")
        if i >= j:
            raise ParseError(f"brackets are listed with i < j, got ({i}, {j})", here)
        if (i, j) in seen:
            raise ParseError(f"duplicate bracket ({i}, {j})", here)
        seen.add((i, j))
        terms = {}
        for t, term in enumerate(entry["terms"]):
            tp = f"{here}.terms[{t}]"
            k = term["k"]
            if not 1 <= k <= dim:
                raise IndexOutOfRange(f"index {k} outside 1..{dim}", f"{tp}.k")
            if k in terms:
                raise ParseError(f"duplicate term k={k}", tp)
            terms[k] = _q(term["coef"], f"{tp}.coef")
        brackets.append((i, j, tuple(sorted(terms.items()))))
    brackets.sort(key=lambda x: (x[0], x[1]))

    if data["metric"] == "identity":
        metric: str | Matrix = "identity"
    else:
        metric = _matrix(data["metric"], dim, "$.metric")
        for i in range(dim):
            for j in range(i + 1, dim):
                if metric[i][j] != metric[j][i]:
                    raise AsymmetricMetricInput(
                        f"g[{i + 1}][{j + 1}] = {metric[i][j]} but g[{j + 1}][{i + 1}] = {metric[j][i]}",
                        "$.metric")
    contact = None
    if "contact" in data:
        phi = _matrix(data["contact"]["phi"], dim, "$.contact.phi")
        xi_raw = data["contact"]["xi"]
        if len(xi_raw) != dim:
            raise ParseError(f"xi needs {dim} components", "$.contact.xi")
        xi = tuple(_q(v, f"$.contact.xi[{i}]") for i, v in enumerate(xi_raw))
        contact = ContactBlock(phi, xi)
    return ManifoldDocument(data["name"], dim, tuple(brackets), metric, contact, data.get("catalog_tag"))


def _s(q) -> str:
    return exact.format_rational(q)


def document_to_json(doc: ManifoldDocument) -> dict[str, Any]:
    out: dict[str, Any] = {
        "name": doc.name,
        "dim": doc.dim,
        "brackets": [
            {"i": i, "j": j, "terms": [{"k": k, "coef": _s(c)} for k, c in terms]}
            for i, j, terms in doc.brackets
        ],
        "metric": doc.metric if doc.metric == "identity" else [[_s(v) for v in row] for row in doc.metric],
    }
    if doc.contact is not None:
        out["contact"] = {
            "phi": [[_s(v) for v in row] for row in doc.contact.phi],
            "xi": [_s(v) for v in doc.contact.xi],
        }
    if doc.catalog_tag is not None:
        out["catalog_tag"] = doc.catalog_tag
    return out


def emit_manifold(doc: ManifoldDocument) -> str:
    return json.dumps(document_to_json(doc), indent=2) + "\n"
