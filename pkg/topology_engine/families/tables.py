"""Literal gluing tables for the named triangulations.

Rows use the gluing-table text format of
``topology_engine.triangulation.table_format``.
"""

from functools import lru_cache

from topology_engine.triangulation.table_format import parse_gluing_table
from topology_engine.triangulation.triangulation import Triangulation

# Ideal triangulation of the three-cusped link exterior; tets 0..3 and 4..7
# are the cones over the two interface tori.
LINK_COMPLEMENT_TABLE = """
tet | (012)   | (013)   | (023)   | (123)
0   | 2 (013) | 7 (023) | 1 (102) | 1 (103)
1   | 0 (203) | 0 (213) | 3 (123) | 4 (120)
2   | 6 (130) | 0 (012) | 3 (021) | 3 (031)
3   | 2 (032) | 2 (132) | 5 (231) | 1 (023)
4   | 1 (312) | 6 (012) | 5 (130) | 5 (120)
5   | 4 (312) | 4 (302) | 7 (123) | 3 (302)
6   | 4 (013) | 2 (201) | 7 (013) | 7 (012)
7   | 6 (123) | 6 (023) | 0 (013) | 5 (023)
"""

# The same exterior with two cusps truncated to one-vertex boundary tori.
TRUNCATED_EXTERIOR_TABLE = """
tet | (012)    | (013)    | (023)    | (123)
0   | 3 (012)  | ∂1       | 2 (023)  | 1 (123)
1   | 5 (012)  | 3 (230)  | 4 (023)  | 0 (123)
2   | 7 (012)  | 3 (321)  | 0 (023)  | 6 (123)
3   | 0 (012)  | ∂1       | 1 (301)  | 2 (310)
4   | 8 (012)  | 7 (230)  | 1 (023)  | 6 (023)
5   | 1 (012)  | 7 (103)  | 9 (023)  | 6 (310)
6   | 10 (012) | 5 (321)  | 4 (123)  | 2 (123)
7   | 2 (012)  | 5 (103)  | 4 (301)  | 11 (123)
8   | 4 (012)  | 13 (013) | 9 (021)  | 12 (123)
9   | 8 (032)  | 10 (230) | 5 (023)  | 13 (210)
10  | 6 (012)  | 14 (013) | 9 (301)  | 11 (120)
11  | 10 (312) | 12 (021) | 14 (201) | 7 (123)
12  | 11 (031) | 16 (013) | 15 (023) | 8 (123)
13  | 9 (321)  | 8 (013)  | 14 (032) | 16 (123)
14  | 11 (230) | 10 (013) | 13 (032) | 15 (210)
15  | 14 (321) | ∂2       | 12 (023) | 16 (012)
16  | 15 (123) | 12 (013) | ∂2       | 13 (123)
"""

# Two copies of T_3 (tets 0, 1, 4 and 5, 7, 6) around the central tets 2, 3.
U33_TABLE = """
tet | (012)   | (013)   | (023)   | (123)
0   | 3 (012) | 1 (102) | 2 (023) | 1 (123)
1   | 0 (103) | 4 (102) | 4 (023) | 0 (123)
2   | 6 (012) | 5 (013) | 0 (023) | 4 (301)
3   | 0 (012) | 4 (231) | 6 (132) | 5 (032)
4   | 1 (103) | 2 (231) | 1 (023) | 3 (301)
5   | 7 (103) | 2 (013) | 3 (132) | 7 (123)
6   | 2 (012) | 7 (320) | 7 (201) | 3 (032)
7   | 6 (230) | 5 (102) | 6 (310) | 5 (123)
"""


@lru_cache(maxsize=None)
def link_complement_table() -> Triangulation:
    return parse_gluing_table(LINK_COMPLEMENT_TABLE)


@lru_cache(maxsize=None)
def truncated_exterior_table() -> Triangulation:
    return parse_gluing_table(TRUNCATED_EXTERIOR_TABLE)


@lru_cache(maxsize=None)
def u33_table() -> Triangulation:
    return parse_gluing_table(U33_TABLE)
