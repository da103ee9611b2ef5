"""Canonical cascade codes by bottom-up peeling of canonical root vertices.

The canonical code of a projection with n crossings is built in two passes:

* peel: repeatedly remove the canonical root vertex (from the invariant
  root code machinery), recording its pattern and where its legs sat; the
  remainder is again a prime connected projection, so the loop reaches the
  single-crossing start.
* replay: rebuild the code bottom-up.  At each level the recorded vertex is
  attached to the expansion of the code built so far; an isomorphism from the
  actual peeled remainder onto that expansion is maintained as a dihedral
  element on leg positions, and the shift is minimized over the remainder's
  symmetry group.  This realizes the tie-break "generate a code for every
  canonical root, keep the lexicographically smallest" with one peel pass:
  candidate shift sets agree across canonical roots because any two are
  related by an automorphism.

Pattern order X < P < Q (their integer encodings) plus the shift value make
the minimum well defined.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from . import cascade
from .cascade import Code, DELTA, REF_SLOT, UP
from .maps import PlanarMap, is_composite, is_connected
from .rootcode import (
    MapScan,
    ProjectionDefectError,
    Root,
    invariant_root_code,
    symmetries,
)

PATTERN_BY_UP = {1: cascade.P, 2: cascade.X, 3: cascade.Q}


class NotCanonicalError(ValueError):
    """A code expected to be canonical fails re-canonicalization."""

    def __init__(self, prefix_length: int, message: str):
        super().__init__(message)
        self.prefix_length = prefix_length


class NoParentError(ValueError):
    """The single-crossing projection has no parent."""


@dataclass(frozen=True)
class Genealogy:
    """Codes of the nested sub-projections P1 .. Pn."""

    prefixes: Tuple[Code, ...]


def peel(m: PlanarMap, v: int) -> Tuple[PlanarMap, int, int, int, int]:
    """Remove boundary crossing v; its edges into the remainder become legs.

    Returns (remainder, q, d, u, pattern) where q is the first boundary
    position of v's legs, d their count, u = 4 - d the edges into the
    remainder.  The remainder's legs are re-anchored so the new legs (v's old
    up edges, left to right) occupy positions 0..u-1.

    The legs of a non-cut boundary crossing of a prime projection are
    consecutive both around the crossing and along the boundary; anything
    else is rejected.
    """
    n, k, twin = m.n, m.k, m.twin
    base = 4 * n
    twok = 2 * k
    legs = m.legs()
    vpos = [p for p in range(twok) if legs[p] >> 2 == v]
    d = len(vpos)
    if d == 0:
        raise ProjectionDefectError(f"crossing {v} is not a boundary crossing")
    u = 4 - d
    if u == 0:
        raise ProjectionDefectError("cannot peel the last crossing")
    starts = [p for p in vpos if (p - 1) % twok not in vpos]
    if len(starts) != 1:
        raise ProjectionDefectError(
            f"legs of crossing {v} are not consecutive on the boundary"
        )
    q = starts[0]
    d0 = legs[q]
    for j in range(d):
        slot = 4 * v + (((d0 & 3) + j) & 3)
        if legs[(q + j) % twok] != slot:
            raise ProjectionDefectError(
                f"legs of crossing {v} are not consecutive around it"
            )
    # Rotation around v counterclockwise: D_0..D_{d-1} then U_{u-1}..U_0.
    ups = [4 * v + (((d0 & 3) + d + (u - 1 - t)) & 3) for t in range(u)]
    for dart in ups:
        t = twin[dart]
        if t >= base or t >> 2 == v:
            raise ProjectionDefectError(
                f"crossing {v} does not peel into a smaller projection"
            )

    n2 = n - 1
    k2 = (twok - d + u) // 2
    base2 = 4 * n2

    def nd(dart: int) -> int:
        x = dart >> 2
        return dart - 4 if x > v else dart

    new_twin = [-1] * (base2 + 2 * k2)
    for dart in range(base):
        if dart >> 2 == v:
            continue
        t = twin[dart]
        if t < base and t >> 2 != v:
            new_twin[nd(dart)] = nd(t)
    new_legs = [nd(twin[dart]) for dart in ups]
    for s in range(twok - d):
        new_legs.append(nd(legs[(q + d + s) % twok]))
    for pos, s in enumerate(new_legs):
        new_twin[s] = base2 + pos
        new_twin[base2 + pos] = s
    return PlanarMap(n2, k2, tuple(new_twin)), q, d, u, PATTERN_BY_UP[u]


def canonical_code(
    m: PlanarMap,
    irc: Optional[Tuple[Tuple[int, ...], List[Root]]] = None,
    checked: bool = False,
) -> Code:
    """Canonical cascade code of a prime connected projection.

    ``irc`` may pass in a precomputed invariant root code of ``m``;
    ``checked=True`` skips the connectivity/primality precondition test.
    """
    if not checked:
        if not is_connected(m):
            raise ProjectionDefectError("projection is not connected")
        if is_composite(m):
            raise ProjectionDefectError("projection is composite")
    if m.n == 1:
        return ()

    # Peel pass: steps[t] describes the vertex removed from the map with
    # n - t crossings; rem_syms[t] is the symmetry group of what remains.
    steps: List[Tuple[int, int, int, int]] = []
    rem_syms: List[List] = []
    cur = m
    cur_irc = irc
    while cur.n > 1:
        scan = MapScan(cur)
        if cur_irc is None:
            cur_irc = invariant_root_code(cur, scan)
        v = cur_irc[1][0].vertex
        cur, q, d, u, pattern = peel(cur, v)
        steps.append((pattern, q, d, u))
        next_scan = MapScan(cur)
        next_irc = invariant_root_code(cur, next_scan)
        rem_syms.append(symmetries(cur, irc=next_irc, scan=next_scan))
        cur_irc = next_irc

    # Replay pass, bottom-up.  delta is the current isomorphism from the
    # peeled remainder onto the expansion of the code built so far, as a
    # dihedral action on leg positions; ref/w track the expansion layout.
    code: List[Tuple[int, int]] = []
    w = 4
    ref = 0
    drot, dref = 0, False
    for t in range(len(steps) - 1, -1, -1):
        pattern, q, d, u = steps[t]
        best: Optional[Tuple[int, bool]] = None
        for g in rem_syms[t]:
            if dref:
                pc, pr = (drot - g.rotation) % w, not g.reflect
            else:
                pc, pr = (drot + g.rotation) % w, g.reflect
            # The new legs occupy remainder positions 0..u-1; their image is
            # the run starting at pc (or ending there, when reflected).
            left = (pc - u + 1) % w if pr else pc
            shift = (left - ref) % w
            if best is None or shift < best[0]:
                best = (shift, pr)
        assert best is not None
        shift, pr = best
        code.append((pattern, shift))
        w2 = w + DELTA[pattern]
        # Transport the isomorphism one level up: the re-attached vertex's
        # legs start at position q, the expansion anchors them at 0.
        if pr:
            drot, dref = (d - 1 + q) % w2, True
        else:
            drot, dref = (-q) % w2, False
        ref = REF_SLOT[pattern]
        w = w2
    return tuple(code)


def parent(code: Code) -> Code:
    """Code of the projection one peel up; defined for n >= 2."""
    if len(code) == 0:
        raise NoParentError("the single-crossing projection has no parent")
    return code[:-1]


def genealogy(code: Code) -> Genealogy:
    """All prefixes of a canonical code, re-verified to be canonical."""
    for i in range(len(code) + 1):
        prefix = code[:i]
        redone = canonical_code(cascade.expand(prefix))
        if redone != prefix:
            raise NotCanonicalError(
                i + 1,
                f"prefix with {i + 1} crossings re-canonicalizes to a "
                f"different code",
            )
    return Genealogy(tuple(code[:i] for i in range(len(code) + 1)))
