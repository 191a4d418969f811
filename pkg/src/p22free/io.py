"""JSON interchange and Graphviz DOT export."""

from __future__ import annotations

import json
from typing import Any, Optional

from .digraph import Digraph, DigraphBuilder, MAX_ORDER


class ParseError(ValueError):
    def __init__(self, message: str, position: str):
        super().__init__(f"{position}: {message}")
        self.position = position


def encode_json(D: Digraph, metadata: Optional[dict[str, Any]] = None) -> str:
    """``{"n": .., "arcs": [[u, v], ..]}`` with arcs in lexicographic order."""
    doc: dict[str, Any] = {"n": D.n, "arcs": [list(a) for a in D.arcs()]}
    if metadata:
        for key, value in metadata.items():
            if key in ("n", "arcs"):
                raise ValueError(f"metadata may not override {key!r}")
            doc[key] = value
    return json.dumps(doc, separators=(",", ":"))


def decode_document(text: str) -> tuple[Digraph, dict[str, Any]]:
    """Parse a document into a digraph and its remaining metadata fields."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, f"line {exc.lineno} column {exc.colno}") from None
    if not isinstance(doc, dict):
        raise ParseError("document must be a JSON object", "$")
    n = doc.get("n")
    if not isinstance(n, int) or isinstance(n, bool) or not 1 <= n <= MAX_ORDER:
        raise ParseError(f"n must be an integer in 1..{MAX_ORDER}", "$.n")
    arcs = doc.get("arcs")
    if not isinstance(arcs, list):
        raise ParseError("arcs must be a list of [u, v] pairs", "$.arcs")
    builder = DigraphBuilder(n)
    seen = set()
    for i, arc in enumerate(arcs):
        where = f"$.arcs[{i}]"
        if (
            not isinstance(arc, list)
            or len(arc) != 2
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in arc)
        ):
            raise ParseError("arc must be a pair of integers", where)
        u, v = arc
        if u == v:
            raise ParseError("loop", where)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError("vertex out of range", where)
        if (u, v) in seen:
            raise ParseError("duplicate arc", where)
        seen.add((u, v))
        builder.add_arc(u, v)
    metadata = {k: val for k, val in doc.items() if k not in ("n", "arcs")}
    return builder.freeze(), metadata


def decode_json(text: str) -> Digraph:
    return decode_document(text)[0]


def encode_dot(D: Digraph, name: str = "D") -> str:
    lines = [f"digraph {name} {{"]
    lines += [f"  v{u} -> v{v};" for u, v in D.arcs()]
    lines.append("}")
    return "\n".join(lines) + "\n"
