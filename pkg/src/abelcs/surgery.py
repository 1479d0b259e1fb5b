"""Surgery presentations: parsing, serialization and a small catalog.

Plain format::

    # name: m26         (optional; other '#' lines are ignored)
    3
    -3 1 1
    1 3 1
    1 1 -1

JSON format: ``{"name": "...", "linking_matrix": [[...], ...]}``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Iterable

from .errors import AsymmetricMatrix, DimensionMismatch, InvalidParameter, ParseError
from .matrix import IntMatrix

__all__ = [
    "SurgeryPresentation",
    "parse_presentation",
    "serialize",
    "catalog",
    "sphere",
    "lens",
    "m26",
    "block_sum",
    "parse_catalog_spec",
]

_INT = re.compile(r"[+-]?\d+\Z")
_NAME_COMMENT = re.compile(r"\s*#\s*name:\s*(.*?)\s*\Z")


@dataclass(frozen=True)
class SurgeryPresentation:
    linking_matrix: IntMatrix
    name: str | None = None

    def __post_init__(self):
        L = self.linking_matrix
        if not L.is_square:
            raise DimensionMismatch(f"linking matrix must be square, got {L.rows}x{L.cols}")
        if not L.is_symmetric():
            raise AsymmetricMatrix("linking matrix is not symmetric")

    @property
    def m(self) -> int:
        return self.linking_matrix.rows

    @classmethod
    def from_rows(cls, rows, name=None):
        return cls(IntMatrix.from_rows(rows, len(rows)), name)


def _parse_int(tok, line, col):
    if not _INT.match(tok):
        raise ParseError(f"expected an integer, got {tok!r}", line, col)
    return int(tok)


def _parse_plain(text: str, name=None) -> SurgeryPresentation:
    for raw in text.splitlines():
        tag = _NAME_COMMENT.match(raw)
        if tag:
            name = tag.group(1)
            break
    lines = [
        (no, raw) for no, raw in enumerate(text.splitlines(), start=1)
        if raw.strip() and not raw.lstrip().startswith("#")
    ]
    if not lines:
        raise ParseError("missing dimension line", 1, 1)
    no, raw = lines[0]
    toks = raw.split()
    if len(toks) != 1:
        raise ParseError("dimension line must hold a single integer", no, 1)
    m = _parse_int(toks[0], no, raw.index(toks[0]) + 1)
    if m < 0:
        raise ParseError("dimension must be nonnegative", no, 1)
    body = lines[1:]
    if len(body) != m:
        raise DimensionMismatch(f"declared {m} rows, found {len(body)}")
    rows = []
    for no, raw in body:
        row = []
        for match in re.finditer(r"\S+", raw):
            row.append(_parse_int(match.group(), no, match.start() + 1))
        if len(row) != m:
            raise DimensionMismatch(f"line {no}: expected {m} entries, found {len(row)}")
        rows.append(row)
    return SurgeryPresentation(IntMatrix.from_rows(rows, m), name)


def _parse_json(text: str) -> SurgeryPresentation:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(doc, dict) or "linking_matrix" not in doc:
        raise ParseError("expected an object with a 'linking_matrix' key")
    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        raise ParseError("'name' must be a string")
    rows = doc["linking_matrix"]
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise ParseError("'linking_matrix' must be an array of arrays")
    m = len(rows)
    for i, r in enumerate(rows):
        if len(r) != m:
            raise DimensionMismatch(f"row {i} has {len(r)} entries, expected {m}")
        if not all(isinstance(x, int) and not isinstance(x, bool) for x in r):
            raise ParseError(f"row {i} contains a non-integer entry")
    return SurgeryPresentation(IntMatrix.from_rows(rows, m), name)


def parse_presentation(text, format: str = "plain", name: str | None = None) -> SurgeryPresentation:
    """Parse a presentation from ``str`` or ``bytes`` in ``"plain"`` or ``"json"`` format.

    ``name`` is a fallback used when the input does not name itself.
    """
    if isinstance(text, (bytes, bytearray)):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not UTF-8: {exc}") from None
    if format == "plain":
        return _parse_plain(text, name)
    if format == "json":
        pres = _parse_json(text)
        if pres.name is None and name is not None:
            pres = SurgeryPresentation(pres.linking_matrix, name)
        return pres
    raise ValueError(f"unknown format {format!r}")


def serialize(P: SurgeryPresentation, format: str = "plain") -> str:
    if format == "json":
        doc = {"name": P.name, "linking_matrix": P.linking_matrix.to_rows()}
        if P.name is None:
            del doc["name"]
        return json.dumps(doc) + "\n"
    if format != "plain":
        raise ValueError(f"unknown format {format!r}")
    lines = [f"# name: {P.name}"] if P.name else []
    lines.append(str(P.m))
    lines.extend(" ".join(map(str, r)) for r in P.linking_matrix.to_rows())
    return "\n".join(lines) + "\n"


def sphere() -> SurgeryPresentation:
    return SurgeryPresentation(IntMatrix.from_rows([[1]]), "sphere")


def lens(p: int) -> SurgeryPresentation:
    """``L(p, 1)`` as ``p``-framed surgery on the unknot."""
    if isinstance(p, bool) or not isinstance(p, int) or p <= 0:
        raise InvalidParameter(f"lens space needs an integer p >= 1, got {p!r}")
    return SurgeryPresentation(IntMatrix.from_rows([[p]]), f"lens({p})")


def m26() -> SurgeryPresentation:
    return SurgeryPresentation.from_rows([[-3, 1, 1], [1, 3, 1], [1, 1, -1]], "m26")


def block_sum(parts: Iterable[SurgeryPresentation]) -> SurgeryPresentation:
    """Connected sum: block-diagonal concatenation of linking matrices."""
    parts = list(parts)
    L = IntMatrix.zeros(0, 0)
    for P in parts:
        L = L.block_sum(P.linking_matrix)
    name = " # ".join(P.name or "?" for P in parts) if parts else "empty"
    return SurgeryPresentation(L, name)


def catalog(kind: str, *args) -> SurgeryPresentation:
    """Look up a catalog presentation.

    ``catalog("sphere")``, ``catalog("lens", p)``, ``catalog("m26")``,
    ``catalog("block_sum", [P1, P2, ...])``.
    """
    if kind == "sphere":
        return sphere()
    if kind == "lens":
        if len(args) != 1:
            raise InvalidParameter("lens takes exactly one parameter")
        return lens(args[0])
    if kind == "m26":
        return m26()
    if kind == "block_sum":
        (parts,) = args
        return block_sum(parts)
    raise InvalidParameter(f"unknown catalog entry {kind!r}")


def parse_catalog_spec(spec: str) -> SurgeryPresentation:
    """Parse ``sphere``, ``m26``, ``lens:P`` or ``A+B+...`` (block sum)."""
    pieces = [s.strip() for s in spec.split("+")]
    parts = []
    for s in pieces:
        kind, _, arg = s.partition(":")
        if kind == "lens":
            if not _INT.match(arg):
                raise InvalidParameter(f"bad lens parameter in {s!r}")
            parts.append(lens(int(arg)))
        elif kind in ("sphere", "m26") and not arg:
            parts.append(catalog(kind))
        else:
            raise InvalidParameter(f"unknown catalog entry {s!r}")
    return parts[0] if len(parts) == 1 else block_sum(parts)
