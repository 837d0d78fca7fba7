"""Gluing-table text format.

One row per tetrahedron, columns for the faces (012), (013), (023), (123),
i.e. faces 3, 2, 1, 0. An entry ``t (xyz)`` sends the column's vertices in
order to ``x``, ``y``, ``z`` of tetrahedron ``t``; ``bdry`` marks an
unglued face::

    tet | (012)   | (013)   | (023)   | (123)
    0   | 2 (013) | 7 (023) | 1 (102) | 1 (103)
"""

import re
from typing import List, Tuple

from topology_engine.errors import TopologyEngineError
from topology_engine.triangulation.isosig import decode_iso_signature
from topology_engine.triangulation.perm import Perm4
from topology_engine.triangulation.triangulation import Triangulation, build_triangulation

COLUMN_FACES = (3, 2, 1, 0)
BOUNDARY_MARKERS = {"bdry", "-", "∂1", "∂2", "∂"}
_ENTRY = re.compile(r"^\s*(\d+)\s*\(\s*([0-3])\s*([0-3])\s*([0-3])\s*\)\s*$")


class TableFormatError(TopologyEngineError):
    pass


def parse_gluing_table(text: str) -> Triangulation:
    """Parses gluing-table text. Header lines and ``#`` comments are skipped."""
    entries: List[Tuple[int, List[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        cells = [c.strip() for c in line.split("|")]
        if cells[0].lower() in ("tet", "tetrahedron"):
            continue
        if len(cells) != 5 or not cells[0].isdigit():
            raise TableFormatError(f"Line {lineno}: expected 'tet | e | e | e | e', got {raw!r}")
        entries.append((int(cells[0]), cells[1:]))

    tet_count = len(entries)
    rows = []
    for expected, (tet, cells) in enumerate(sorted(entries)):
        if tet != expected:
            raise TableFormatError(f"Rows must number tetrahedra 0..{tet_count - 1}; missing {expected}")
        for face, cell in zip(COLUMN_FACES, cells):
            if cell in BOUNDARY_MARKERS:
                continue
            match = _ENTRY.match(cell)
            if not match:
                raise TableFormatError(f"Tetrahedron {tet}: cannot parse entry {cell!r}")
            partner = int(match.group(1))
            perm = Perm4.from_face_images(face, (int(match.group(i)) for i in (2, 3, 4)))
            rows.append((tet, face, partner, perm))
    return build_triangulation(tet_count, rows)


def format_gluing_table(t: Triangulation) -> str:
    lines = ["tet | (012) | (013) | (023) | (123)"]
    for tet in range(t.tet_count):
        cells = []
        for face in COLUMN_FACES:
            g = t.adjacent(tet, face)
            if g is None:
                cells.append("bdry")
                continue
            partner, perm = g
            verts = "".join(str(perm(v)) for v in range(4) if v != face)
            cells.append(f"{partner} ({verts})")
        lines.append(f"{tet} | " + " | ".join(cells))
    return "\n".join(lines) + "\n"


def read_triangulation(text: str) -> Triangulation:
    """Accepts either gluing-table text or an iso signature."""
    if "|" in text:
        return parse_gluing_table(text)
    return decode_iso_signature(text)
