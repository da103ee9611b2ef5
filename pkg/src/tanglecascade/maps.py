"""Combinatorial disk maps for tangle projections.

A projection with ``n`` crossings and ``2k`` legs is stored as a rotation
system on darts:

* crossing ``v`` owns the four darts ``4v .. 4v+3``; the implicit vertex
  rotation sends ``4v+i`` to ``4v+((i+1) % 4)`` counterclockwise;
* boundary position ``p`` (``0 <= p < 2k``, counterclockwise along the
  boundary circle) owns the sentinel dart ``4n+p``;
* ``twin`` is the involution pairing the two darts of every edge.  A leg is
  an edge whose twin pair couples a crossing dart with a sentinel dart.

Faces are the orbits of ``next(d) = rotation_successor(twin(d))``.  With the
boundary circle contracted to a single virtual vertex whose rotation is the
legs in clockwise order, this traces every complementary region of the
projection once; the orbit of sentinel dart ``4n+p`` is the boundary face
touching the circle arc from leg ``p`` to leg ``p+1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

BOUNDARY = -1


class MapStructureError(ValueError):
    """The dart data does not describe a valid 4-valent disk map."""


@dataclass(frozen=True)
class PlanarMap:
    """Immutable dart-based map of a projection in a disk.

    Attributes:
        n: number of crossings.
        k: half the number of legs.
        twin: involution over all ``4n + 2k`` darts.
    """

    n: int
    k: int
    twin: Tuple[int, ...]

    def crossing_of(self, dart: int) -> int:
        """Crossing id of a dart, or BOUNDARY for sentinel darts."""
        return dart >> 2 if dart < 4 * self.n else BOUNDARY

    def rotation_next(self, dart: int) -> int:
        """Counterclockwise successor of a dart around its vertex.

        For sentinel darts the virtual boundary vertex is traversed in
        clockwise boundary order, which keeps the global orientation of the
        sphere model consistent.
        """
        base = 4 * self.n
        if dart < base:
            return (dart & ~3) | ((dart + 1) & 3)
        p = dart - base
        return base + (p - 1) % (2 * self.k)

    def rotation_prev(self, dart: int) -> int:
        base = 4 * self.n
        if dart < base:
            return (dart & ~3) | ((dart - 1) & 3)
        p = dart - base
        return base + (p + 1) % (2 * self.k)

    def is_leg_dart(self, dart: int) -> bool:
        """True for a crossing dart whose edge runs to the boundary."""
        return self.twin[dart] >= 4 * self.n

    def legs(self) -> Tuple[int, ...]:
        """Crossing-side leg darts by boundary position 0..2k-1."""
        base = 4 * self.n
        return tuple(self.twin[base + p] for p in range(2 * self.k))

    def leg_counts(self) -> Tuple[int, ...]:
        """Number of legs at each crossing."""
        counts = [0] * self.n
        for d in self.legs():
            counts[d >> 2] += 1
        return tuple(counts)

    def crossing_rotation(self, v: int) -> Tuple[int, int, int, int]:
        return (4 * v, 4 * v + 1, 4 * v + 2, 4 * v + 3)


@dataclass(frozen=True)
class Face:
    """One complementary region of the projection.

    ``darts`` lists the face orbit; ``edge_degree`` counts projection-edge
    incidences along its border (boundary-circle arcs do not count).  For a
    boundary face ``arc`` is the position of the circle arc it touches
    (between legs ``arc`` and ``arc+1``).
    """

    darts: Tuple[int, ...]
    is_boundary: bool
    edge_degree: int
    arc: Optional[int] = None


def face_partition(m: PlanarMap) -> Tuple[List[int], List[int], Tuple[int, ...]]:
    """Orbit data of the face traversal.

    Returns ``(face_id, face_degree, arc_face)`` where ``face_id[d]`` is the
    face index of dart ``d``, ``face_degree[f]`` its edge degree, and
    ``arc_face[p]`` the face index of the boundary face at arc ``p``.
    Boundary faces come first, indexed by arc.
    """
    n, k, twin = m.n, m.k, m.twin
    base = 4 * n
    twok = 2 * k
    total = base + twok
    face_id = [-1] * total
    face_degree: List[int] = []

    def trace(start: int, fid: int) -> int:
        d = start
        size = 0
        while face_id[d] != fid:
            face_id[d] = fid
            size += 1
            t = twin[d]
            if t < base:
                d = (t & ~3) | ((t + 1) & 3)
            else:
                d = base + (t - base - 1) % twok
        return size

    for p in range(twok):
        face_degree.append(trace(base + p, p))
    fid = twok
    for d in range(base):
        if face_id[d] < 0:
            face_degree.append(trace(d, fid))
            fid += 1
    arc_face = tuple(range(twok))
    return face_id, face_degree, arc_face


def faces(m: PlanarMap) -> List[Face]:
    """All faces; boundary faces first, in ccw order starting at arc 0."""
    validate_structure(m)
    face_id, face_degree, _ = face_partition(m)
    members: List[List[int]] = [[] for _ in face_degree]
    for d, f in enumerate(face_id):
        members[f].append(d)
    twok = 2 * m.k
    out = []
    for f, darts in enumerate(members):
        boundary = f < twok
        out.append(
            Face(
                darts=tuple(darts),
                is_boundary=boundary,
                edge_degree=face_degree[f],
                arc=f if boundary else None,
            )
        )
    return out


def validate_structure(m: PlanarMap) -> None:
    """Raise MapStructureError unless the dart data is a genus-0 disk map."""
    n, k, twin = m.n, m.k, m.twin
    base = 4 * n
    twok = 2 * k
    total = base + twok
    if n < 1 or k < 1:
        raise MapStructureError(f"need n >= 1 and k >= 1, got n={n} k={k}")
    if len(twin) != total:
        raise MapStructureError(f"twin has {len(twin)} entries, expected {total}")
    if 4 * n != 2 * (2 * n - k) + twok:
        raise MapStructureError("dart accounting failed")
    if 2 * n - k < 0:
        raise MapStructureError(f"more legs than dart slots: n={n} k={k}")
    for d, t in enumerate(twin):
        if not 0 <= t < total:
            raise MapStructureError(f"twin[{d}]={t} out of range")
        if t == d:
            raise MapStructureError(f"twin fixes dart {d}")
        if twin[t] != d:
            raise MapStructureError(f"twin not an involution at dart {d}")
        if d >= base and t >= base:
            raise MapStructureError(f"sentinel darts {d},{t} paired together")
    # Euler: with the boundary contracted to one vertex, V - E + F = 2 on the
    # sphere forces exactly n + k + 1 faces for a planar embedding.
    _, face_degree, _ = face_partition(m)
    if len(face_degree) != n + k + 1:
        raise MapStructureError(
            f"face count {len(face_degree)} != {n + k + 1}: not a disk map"
        )


def crossing_adjacency(m: PlanarMap) -> List[List[int]]:
    """Neighbor crossings of each crossing via internal edges (with multiplicity)."""
    n, twin = m.n, m.twin
    base = 4 * n
    adj: List[List[int]] = [[] for _ in range(n)]
    for d in range(base):
        t = twin[d]
        if t < base:
            adj[d >> 2].append(t >> 2)
    return adj


def is_connected(m: PlanarMap) -> bool:
    """True when every crossing is reachable along internal edges."""
    n = m.n
    if n <= 1:
        return True
    adj = crossing_adjacency(m)
    seen = [False] * n
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if not seen[w]:
                seen[w] = True
                count += 1
                stack.append(w)
    return count == n


def boundary_vertices(m: PlanarMap) -> frozenset:
    """Crossings with at least one leg."""
    return frozenset(d >> 2 for d in m.legs())


def cut_vertices(m: PlanarMap) -> frozenset:
    """Crossings whose removal disconnects the remaining crossing graph.

    A remainder with at most one crossing never counts as disconnected.
    """
    n = m.n
    if n <= 2:
        return frozenset()
    adj = crossing_adjacency(m)
    cuts = []
    for v in range(n):
        start = 0 if v != 0 else 1
        seen = [False] * n
        seen[v] = True
        seen[start] = True
        stack = [start]
        count = 1
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if not seen[w]:
                    seen[w] = True
                    count += 1
                    stack.append(w)
        if count != n - 1:
            cuts.append(v)
    return frozenset(cuts)


def _edge_list(m: PlanarMap) -> List[Tuple[int, int, int]]:
    """Projection edges as (dart, u, v) with v = n standing for the boundary node."""
    n, twin = m.n, m.twin
    base = 4 * n
    edges = []
    for d in range(base):
        t = twin[d]
        if t >= base:
            edges.append((d, d >> 2, n))
        elif d < t:
            edges.append((d, d >> 2, t >> 2))
    return edges


def is_composite(m: PlanarMap) -> bool:
    """Decide compositeness of a connected projection.

    The projection is composite exactly when some simple closed curve inside
    the disk crosses it in at most two edge points and encloses a crossing.
    Combinatorially: one or two projection edges (legs included) whose removal
    separates a nonempty set of crossings from the boundary node.  Candidate
    edge sets are restricted to duals of closed curves: single edges with the
    same face on both sides, and pairs of edges sharing both faces.
    """
    n, twin = m.n, m.twin
    base = 4 * n
    if m.k == 1:
        return n >= 1
    face_id, _, _ = face_partition(m)

    edges = _edge_list(m)
    adj: List[List[Tuple[int, int]]] = [[] for _ in range(n + 1)]
    for idx, (_, u, v) in enumerate(edges):
        adj[u].append((idx, v))
        adj[v].append((idx, u))

    def separates(banned: Tuple[int, ...]) -> bool:
        seen = [False] * (n + 1)
        seen[n] = True
        stack = [n]
        count = 0
        while stack:
            u = stack.pop()
            for idx, w in adj[u]:
                if idx in banned or seen[w]:
                    continue
                seen[w] = True
                count += 1
                stack.append(w)
        return count < n

    by_face_pair: dict = {}
    for idx, (d, _, _) in enumerate(edges):
        fa = face_id[d]
        fb = face_id[twin[d]]
        if fa == fb:
            # Dual self-loop: the edge alone can be crossed twice by a curve.
            if separates((idx,)):
                return True
        key = (fa, fb) if fa <= fb else (fb, fa)
        by_face_pair.setdefault(key, []).append(idx)
    for group in by_face_pair.values():
        if len(group) < 2:
            continue
        for i in range(len(group)):
            for j in range(i + 1, len(group)):
                if separates((group[i], group[j])):
                    return True
    return False


def is_reduced(m: PlanarMap) -> bool:
    """True when no two distinct internal edges join the same crossing pair.

    For prime connected maps this coincides with the absence of internal
    2-faces; both are computed and a disagreement is reported as a defect.
    """
    n, twin = m.n, m.twin
    base = 4 * n
    pairs = set()
    doubled = False
    for d in range(base):
        t = twin[d]
        if d < t < base:
            key = (min(d >> 2, t >> 2), max(d >> 2, t >> 2))
            if key in pairs:
                doubled = True
                break
            pairs.add(key)
    face_id, face_degree, _ = face_partition(m)
    twok = 2 * m.k
    has_bigon = any(
        deg == 2 for f, deg in enumerate(face_degree) if f >= twok
    )
    if doubled != has_bigon:
        raise MapStructureError(
            "doubled-edge and internal-2-face tests disagree; "
            "input is not a prime connected projection"
        )
    return not doubled


def transform(m: PlanarMap, rotation: int, reflect: bool) -> PlanarMap:
    """Relabel boundary positions by a dihedral element.

    Position ``p`` moves to ``rotation + p`` (or ``rotation - p`` when
    reflecting, which also reverses every crossing rotation so the embedding
    stays consistent).  The result describes the same projection.
    """
    n, k, twin = m.n, m.k, m.twin
    base = 4 * n
    twok = 2 * k

    def new_pos(p: int) -> int:
        return (rotation - p) % twok if reflect else (rotation + p) % twok

    if not reflect:
        new_twin = [0] * len(twin)
        for d in range(base):
            t = twin[d]
            if t < base:
                new_twin[d] = t
            else:
                q = base + new_pos(t - base)
                new_twin[d] = q
                new_twin[q] = d
        return PlanarMap(n, k, tuple(new_twin))

    def nd(d: int) -> int:
        return (d & ~3) | ((-d) & 3)

    new_twin = [0] * len(twin)
    for d in range(base):
        t = twin[d]
        if t < base:
            new_twin[nd(d)] = nd(t)
        else:
            q = base + new_pos(t - base)
            new_twin[nd(d)] = q
            new_twin[q] = nd(d)
    return PlanarMap(n, k, tuple(new_twin))
