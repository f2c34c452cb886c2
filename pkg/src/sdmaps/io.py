"""JSON map documents and DOT export.

A map document is a JSON object with keys in this order::

    {"format_version": "1.0", "darts": 2E, "alpha": [...], "sigma": [...],
     "vertex_labels": [...], "metadata": {...}}

The last two keys are optional.  :func:`serialize_document` always writes
the same text for the same document, so parse/serialize round-trips are
byte-exact.
"""

import json
from dataclasses import dataclass, field

from . import derived
from .errors import MapError, ParseError, ValidationError
from .maps import CombinatorialMap

FORMAT_VERSION = "1.0"
_REQUIRED = ("format_version", "darts", "alpha", "sigma")
_OPTIONAL = ("vertex_labels", "metadata")


@dataclass(frozen=True)
class MapDocument:
    darts: int
    alpha: tuple
    sigma: tuple
    vertex_labels: tuple = None
    metadata: dict = field(default=None, compare=False)
    format_version: str = FORMAT_VERSION

    def to_map(self, allow_nonspherical=False, name=None):
        return document_to_map(self, allow_nonspherical=allow_nonspherical, name=name)

    @classmethod
    def from_map(cls, m, vertex_labels=None, metadata=None):
        if metadata is None and m.name:
            metadata = {"name": m.name}
        labels = tuple(vertex_labels) if vertex_labels is not None else None
        return cls(m.dart_count, tuple(m.alpha), tuple(m.sigma), labels, metadata)


def _is_int(x):
    return isinstance(x, int) and not isinstance(x, bool)


def _validate(obj):
    if not isinstance(obj, dict):
        raise ValidationError("a map document must be a JSON object")
    missing = [k for k in _REQUIRED if k not in obj]
    if missing:
        raise ValidationError(f"missing keys: {', '.join(missing)}")
    unknown = sorted(set(obj) - set(_REQUIRED) - set(_OPTIONAL))
    if unknown:
        raise ValidationError(f"unknown keys: {', '.join(unknown)}")
    if not isinstance(obj["format_version"], str):
        raise ValidationError("format_version must be a string")
    if obj["format_version"].split(".")[0] != FORMAT_VERSION.split(".")[0]:
        raise ValidationError(f"unsupported format_version {obj['format_version']!r}")
    n = obj["darts"]
    if not _is_int(n) or n < 0:
        raise ValidationError("darts must be a non-negative integer")
    if n % 2:
        raise ValidationError(f"darts must be even, got {n}")
    for key in ("alpha", "sigma"):
        seq = obj[key]
        if not isinstance(seq, list) or not all(_is_int(x) for x in seq):
            raise ValidationError(f"{key} must be an array of integers")
        if len(seq) != n:
            raise ValidationError(f"{key} has {len(seq)} entries, expected {n}")
    labels = obj.get("vertex_labels")
    if labels is not None and (not isinstance(labels, list) or not all(isinstance(x, str) for x in labels)):
        raise ValidationError("vertex_labels must be an array of strings")
    meta = obj.get("metadata")
    if meta is not None and not isinstance(meta, dict):
        raise ValidationError("metadata must be an object")
    return MapDocument(n, tuple(obj["alpha"]), tuple(obj["sigma"]),
                       tuple(labels) if labels is not None else None, meta, obj["format_version"])


def parse_document(text):
    """Parse and validate a map document (the permutations are checked by :func:`document_to_map`)."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from exc
    return _validate(obj)


def document_to_map(doc, allow_nonspherical=False, name=None):
    """Build the map of a document (``MapDocument`` or decoded JSON object).

    Raises :class:`ValidationError` when the permutations do not describe a
    valid map; the underlying error is chained.
    """
    if not isinstance(doc, MapDocument):
        doc = _validate(doc)
    if name is None and doc.metadata:
        name = doc.metadata.get("name")
    try:
        m = CombinatorialMap(list(doc.alpha), list(doc.sigma), allow_nonspherical=allow_nonspherical, name=name)
    except MapError as exc:
        raise ValidationError(f"{type(exc).__name__}: {exc}") from exc
    if doc.vertex_labels is not None and len(doc.vertex_labels) != m.num_vertices:
        raise ValidationError(f"vertex_labels has {len(doc.vertex_labels)} entries for {m.num_vertices} vertices")
    return m


def parse_map(text, allow_nonspherical=False):
    return document_to_map(parse_document(text), allow_nonspherical=allow_nonspherical)


def _dump(value):
    return json.dumps(value, separators=(", ", ": "), sort_keys=True, ensure_ascii=False)


def serialize_document(doc):
    parts = [
        ("format_version", doc.format_version),
        ("darts", doc.darts),
        ("alpha", list(doc.alpha)),
        ("sigma", list(doc.sigma)),
    ]
    if doc.vertex_labels is not None:
        parts.append(("vertex_labels", list(doc.vertex_labels)))
    if doc.metadata is not None:
        parts.append(("metadata", doc.metadata))
    body = ",\n".join(f"  {json.dumps(k)}: {_dump(v)}" for k, v in parts)
    return "{\n" + body + "\n}\n"


def serialize_map(m, vertex_labels=None, metadata=None):
    """Canonical text of ``m``; ``metadata`` defaults to the map's name."""
    return serialize_document(MapDocument.from_map(m, vertex_labels, metadata))


def read_map(path, allow_nonspherical=False):
    with open(path, encoding="utf-8") as fh:
        return parse_map(fh.read(), allow_nonspherical=allow_nonspherical)


def write_map(m, path, **kw):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_map(m, **kw))


# -- DOT -------------------------------------------------------------------


def to_dot(m, name="G"):
    """Undirected DOT multigraph; one line per edge, in edge order.

    Passing the ``DerivedMap`` of an incidence graph colours vertices of the
    map black and vertices of the dual white.
    """
    colors = None
    if isinstance(m, derived.DerivedMap):
        if m.construction == "incidence":
            colors = [tag for tag, _ in m.vertex_origin]
        m = m.map
    lines = [f"graph {json.dumps(name)} {{"]
    for v in range(m.num_vertices):
        if colors is None:
            lines.append(f"  {v};")
        elif colors[v] == derived.BLACK:
            lines.append(f'  {v} [style=filled, fillcolor=black, fontcolor=white, color="{derived.BLACK}"];')
        else:
            lines.append(f'  {v} [style=filled, fillcolor=white, fontcolor=black, color="{derived.BLACK}"];')
    for e in range(m.num_edges):
        u, v = m.endpoints(e)
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


__all__ = [
    "FORMAT_VERSION", "MapDocument", "document_to_map", "parse_document", "parse_map", "read_map",
    "serialize_document", "serialize_map", "to_dot", "write_map",
]
