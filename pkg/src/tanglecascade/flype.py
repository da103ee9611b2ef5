"""Flype moves and flype-equivalence classes (alternating tangle counts).

A flype site is a simple closed curve inside the disk crossing exactly four
edges (a cycle through four distinct faces in the dual), whose interior holds
a pivot crossing, incident to two cyclically-adjacent cut edges, plus a
nonempty core.  Applying the flype transports the pivot across the core and
re-embeds the core rotated by half a turn.  On the dart level the move only
re-twins the four cut edges in diagonally-opposite pairs: with cut edges
E1..E4 in cyclic order along the curve, the outside dart of E1 joins the
inside dart of E3 and so on.  All vertex rotations, the pivot-core edges and
the boundary legs stay put, so crossing count, leg count and leg positions
are preserved; every move is re-validated structurally.

Both pivots of the same curve produce the same rewired map, so equivalence
closures can work per curve.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

from . import cascade
from .cascade import Code
from .canonical import canonical_code
from .enumeration import CountsTable
from .maps import (
    PlanarMap,
    face_partition,
    is_composite,
    is_connected,
    validate_structure,
)


class FlypeError(RuntimeError):
    """A flype move produced or received an invalid configuration."""


@dataclass(frozen=True)
class FlypeSite:
    """Cut edges as (inside dart, outside dart) pairs, pivot pair first."""

    cut: Tuple[Tuple[int, int], Tuple[int, int], Tuple[int, int], Tuple[int, int]]
    pivot: int
    core: FrozenSet[int]


def _edges_with_faces(m: PlanarMap):
    """Projection edges as (dart_a, dart_b, face_a, face_b)."""
    n, twin = m.n, m.twin
    base = 4 * n
    face_id, _, _ = face_partition(m)
    edges = []
    for d in range(base):
        t = twin[d]
        if t >= base or d < t:
            edges.append((d, t, face_id[d], face_id[t]))
    return edges


def _dual_four_cycles(m: PlanarMap):
    """Cyclic edge quadruples (by edge index) crossed by simple closed curves.

    Cycles alternate distinct faces and distinct edges; each geometric curve
    is produced once (anchored at its smallest face, orientation fixed by
    comparing the two edges at the anchor).
    """
    edges = _edges_with_faces(m)
    incidence: Dict[int, List[Tuple[int, int]]] = {}
    for idx, (_, _, fa, fb) in enumerate(edges):
        if fa == fb:
            continue
        incidence.setdefault(fa, []).append((idx, fb))
        incidence.setdefault(fb, []).append((idx, fa))
    for f1 in sorted(incidence):
        for e1, f2 in incidence[f1]:
            if f2 <= f1:
                continue
            for e2, f3 in incidence[f2]:
                if f3 <= f1 or f3 == f2 or e2 == e1:
                    continue
                for e3, f4 in incidence[f3]:
                    if f4 <= f1 or f4 in (f2, f3) or e3 in (e1, e2):
                        continue
                    for e4, back in incidence[f4]:
                        if back != f1 or e4 <= e1 or e4 in (e2, e3):
                            continue
                        yield (e1, e2, e3, e4), edges


def _curve_sides(
    m: PlanarMap, cycle: Tuple[int, int, int, int], edges
) -> Optional[Set[int]]:
    """Crossings inside the curve (the side without the boundary node)."""
    n = m.n
    base = 4 * n
    bnode = n
    adj: List[List[Tuple[int, int]]] = [[] for _ in range(n + 1)]
    for idx, (da, db, _, _) in enumerate(edges):
        u = da >> 2
        v = db >> 2 if db < base else bnode
        adj[u].append((idx, v))
        adj[v].append((idx, u))
    banned = set(cycle)
    comp = [-1] * (n + 1)
    ncomp = 0
    for s in range(n + 1):
        if comp[s] >= 0:
            continue
        comp[s] = ncomp
        stack = [s]
        while stack:
            x = stack.pop()
            for idx, y in adj[x]:
                if idx in banned or comp[y] >= 0:
                    continue
                comp[y] = ncomp
                stack.append(y)
        ncomp += 1
    # Two-color components: the curve crosses each cut edge once, so its
    # endpoints lie on opposite sides.
    color = [-1] * ncomp
    color[comp[bnode]] = 0
    constraints = []
    for idx in cycle:
        da, db, _, _ = edges[idx]
        u = comp[da >> 2]
        v = comp[db >> 2 if db < base else bnode]
        if u == v:
            return None
        constraints.append((u, v))
    changed = True
    while changed:
        changed = False
        for u, v in constraints:
            for a, b in ((u, v), (v, u)):
                if color[a] >= 0 and color[b] < 0:
                    color[b] = 1 - color[a]
                    changed = True
                elif color[a] >= 0 and color[b] >= 0 and color[a] == color[b]:
                    return None
    if any(c < 0 for c in color):
        return None
    return {x for x in range(n) if color[comp[x]] == 1}


def flype_sites(m: PlanarMap) -> List[FlypeSite]:
    """All flype sites of a prime connected projection."""
    n = m.n
    base = 4 * n
    sites = []
    for cycle, edges in _dual_four_cycles(m):
        inside = _curve_sides(m, cycle, edges)
        if inside is None or len(inside) < 2:
            continue
        pairs = []
        ok = True
        for idx in cycle:
            da, db, _, _ = edges[idx]
            a_in = da < base and (da >> 2) in inside
            b_in = db < base and (db >> 2) in inside
            if a_in == b_in:
                ok = False
                break
            pairs.append((da, db) if a_in else (db, da))
        if not ok:
            continue
        incident: Dict[int, List[int]] = {}
        for pos, (din, _) in enumerate(pairs):
            incident.setdefault(din >> 2, []).append(pos)
        for c, positions in incident.items():
            if len(positions) != 2:
                continue
            i, j = positions
            if (j - i) % 4 not in (1, 3):
                continue
            first = i if (j - i) % 4 == 1 else j
            core = frozenset(inside - {c})
            cut_darts = {pairs[p][0] for p in positions}
            rest = [d for d in m.crossing_rotation(c) if d not in cut_darts]
            if any(
                m.twin[d] >= base or (m.twin[d] >> 2) not in core for d in rest
            ):
                continue
            rotated = tuple(pairs[(first + s) % 4] for s in range(4))
            sites.append(FlypeSite(cut=rotated, pivot=c, core=core))
    return sites


def apply_flype(m: PlanarMap, site: FlypeSite) -> PlanarMap:
    """Transport the pivot across the core; validated structurally."""
    new_twin = list(m.twin)
    (i1, o1), (i2, o2), (i3, o3), (i4, o4) = site.cut
    for a, b in ((o1, i3), (o3, i1), (o2, i4), (o4, i2)):
        new_twin[a] = b
        new_twin[b] = a
    out = PlanarMap(m.n, m.k, tuple(new_twin))
    try:
        validate_structure(out)
    except Exception as exc:
        raise FlypeError(f"flype broke the map structure: {exc}") from exc
    if not is_connected(out):
        raise FlypeError("flype disconnected the projection")
    if is_composite(out):
        raise FlypeError("flype produced a composite projection")
    return out


def _neighbor_codes(code: Code) -> List[Code]:
    """Canonical codes one flype move away (deduplicated)."""
    m = cascade.expand(code)
    seen_cuts = set()
    out = set()
    for site in flype_sites(m):
        key = frozenset(d for pair in site.cut for d in pair)
        if key in seen_cuts:
            continue
        seen_cuts.add(key)
        moved = apply_flype(m, site)
        out.add(canonical_code(moved, checked=True))
    out.discard(code)
    return sorted(out)


def flype_class(code: Code) -> List[Code]:
    """Full flype orbit of a canonical code (breadth-first closure)."""
    cascade.validate(code)
    start = canonical_code(cascade.expand(code))
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for c in frontier:
            for nb in _neighbor_codes(c):
                if nb not in seen:
                    seen.add(nb)
                    nxt.append(nb)
        frontier = nxt
    return sorted(seen)


def _neighbors_worker(code: Code) -> Tuple[Code, List[Code]]:
    return code, _neighbor_codes(code)


class _UnionFind:
    def __init__(self, items: Iterable):
        self.parent = {x: x for x in items}

    def find(self, x):
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


def alternating_level(
    level_codes: Sequence[Code], workers: int = 1
) -> Dict[Tuple[int, int], int]:
    """Flype orbit counts per (n, k) for one complete level of codes."""
    buckets: Dict[Tuple[int, int], List[Code]] = {}
    for code in level_codes:
        n = len(code) + 1
        k = cascade.code_legs(code)
        buckets.setdefault((n, k), []).append(code)
    counts: Dict[Tuple[int, int], int] = {}
    pool = multiprocessing.Pool(workers) if workers > 1 else None
    try:
        for key, codes in sorted(buckets.items()):
            members = set(codes)
            uf = _UnionFind(codes)
            if pool is not None:
                results = pool.map(_neighbors_worker, codes, chunksize=32)
            else:
                results = [(c, _neighbor_codes(c)) for c in codes]
            for code, neighbors in results:
                for nb in neighbors:
                    if nb not in members:
                        raise FlypeError(
                            "flype left the enumerated level: "
                            f"{cascade.format_code(nb)}"
                        )
                    uf.union(code, nb)
            counts[key] = sum(1 for c in codes if uf.find(c) == c)
    finally:
        if pool is not None:
            pool.close()
            pool.join()
    return counts


def alternating_counts(
    n_max: int,
    levels: Optional[Dict[int, Sequence[Code]]] = None,
    workers: int = 1,
) -> CountsTable:
    """Flype-class counts for every n up to n_max."""
    table = CountsTable("alt")
    if levels is None:
        from .enumeration import generate_levels

        levels = {n: codes for n, codes in generate_levels(n_max, workers=workers)}
    for n in range(1, n_max + 1):
        for (nn, kk), count in alternating_level(levels[n], workers=workers).items():
            table.add(nn, kk, count)
    return table
