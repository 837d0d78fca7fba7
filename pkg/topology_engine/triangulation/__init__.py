"""Triangulations of 3-manifolds: gluings, skeleta, signatures and moves."""

from .triangulation import Triangulation, TriangulationBuilder
from .isosig import decode_iso_signature, iso_signature
from .table_format import format_gluing_table, parse_gluing_table, read_triangulation

__all__ = [
    'Triangulation',
    'TriangulationBuilder',
    'decode_iso_signature',
    'iso_signature',
    'format_gluing_table',
    'parse_gluing_table',
    'read_triangulation'
]
