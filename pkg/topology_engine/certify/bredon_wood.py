"""Euler characteristic of one-sided surfaces bounding a curve in a solid torus.

For the curve ``2p * lam + q * mu`` on the boundary of a solid torus, the
smallest negative Euler characteristic of a one-sided surface it bounds is
``N(2p, q)``, with ``N(2p, 1) = p - 1`` and

    N(2p, q) = N(2(p - Q), q - 2m) + 1

where ``Q`` is the least positive integer with ``Q q = 2p m +- 1``.
"""

from __future__ import annotations

import logging
from math import gcd
from typing import List, Tuple

from topology_engine.errors import InvalidSlope

logger = logging.getLogger(__name__)

# Values for 2p <= 8 from one-sided surfaces in layered solid tori. The curve with
# boundary weights (1, 1, 0) has slope (2p, 1) in LST(1, 2p - 1) and (8, 3) in
# LST(3, 5); (2, 1) is (1, 0, 1) in LST(1, 2).
ORACLE = {(2, 1): 0, (4, 1): 1, (6, 1): 2, (8, 1): 3, (8, 3): 1}


class _Unresolved(Exception):
    pass


def _validate(two_p: int, q: int) -> None:
    if two_p < 2 or two_p % 2:
        raise InvalidSlope(f"2p must be a positive even integer, got {two_p}")
    if gcd(two_p, q) != 1:
        raise InvalidSlope(f"Slope ({two_p}, {q}) is not primitive")


def normalize_slope(two_p: int, q: int) -> int:
    """The representative of ``q`` modulo ``2p`` and sign, in ``[0, p]``.

    Twisting along the meridian disc shifts ``q`` by ``2p`` and reflecting
    the solid torus negates it.
    """
    r = q % two_p
    return min(r, two_p - r)


def _step(two_p: int, q: int) -> Tuple[int, int]:
    p = two_p // 2
    for big_q in range(1, two_p):
        residue = (big_q * q) % two_p
        if residue == 1:
            m = (big_q * q - 1) // two_p
            break
        if residue == two_p - 1:
            m = (big_q * q + 1) // two_p
            break
    else:
        raise _Unresolved(f"no inverse of {q} modulo {two_p}")
    if p - big_q < 1 or gcd(2 * (p - big_q), q - 2 * m) != 1:
        raise _Unresolved(f"step from ({two_p}, {q}) reaches ({2 * (p - big_q)}, {q - 2 * m})")
    return 2 * (p - big_q), q - 2 * m


def bredon_wood_path(two_p: int, q: int) -> List[Tuple[int, int]]:
    """Normalized slopes visited by the recursion, ending at ``(2p', 1)``.

    Raises:
        InvalidSlope: the slope is not primitive, ``2p`` is not positive and
            even, or the recursion leaves the range where it is defined.
    """
    _validate(two_p, q)
    path = [(two_p, normalize_slope(two_p, q))]
    while path[-1][1] != 1:
        try:
            nxt = _step(*path[-1])
        except _Unresolved as exc:
            raise InvalidSlope(f"N({two_p}, {q}) unresolved by recursion: {exc}") from None
        path.append((nxt[0], normalize_slope(*nxt)))
    return path


def bredon_wood(two_p: int, q: int) -> int:
    """``N(2p, q)``, e.g. ``bredon_wood(2 * p, 1) == p - 1``.

    Raises:
        InvalidSlope: see :func:`bredon_wood_path`; small slopes that the
            recursion cannot close are answered from ``ORACLE`` instead.
    """
    _validate(two_p, q)
    try:
        path = bredon_wood_path(two_p, q)
    except InvalidSlope:
        key = (two_p, normalize_slope(two_p, q))
        if key not in ORACLE:
            raise
        logger.warning("N%s closed from the oracle table", key)
        return ORACLE[key]
    final_two_p, _ = path[-1]
    value = final_two_p // 2 - 1 + len(path) - 1
    logger.debug("N(%d, %d) = %d via %s", two_p, q, value, path)
    return value
