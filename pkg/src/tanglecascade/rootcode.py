"""Root-induced labelings, root codes, face codes and boundary symmetries.

A root is a triple (vertex, edge, face): here a crossing dart plus the choice
of one of the two faces along that dart's edge.  The face picks a rotation
sense around the root vertex, the labeling direction: the face to the left of
the dart means counterclockwise, to the right clockwise.

Fixing a root labels all crossings 1..n (breadth-first, neighbors numbered in
the labeling direction, each vertex scanned from the dart through which it
was discovered).  The root code is the concatenated adjacency lines under
that labeling, legs written as 0, every line replaced by the smallest of its
four rotations.  The face code is the cyclic string of boundary-face edge
degrees read in the labeling direction from the root face.

The restricted root set keeps roots at boundary, non-cut crossings of
maximal leg count whose face code is lexicographically minimal; the invariant
root code is the smallest root code over that set, and the roots attaining it
(the canonical roots) encode the boundary symmetry group of the projection.
"""

from __future__ import annotations

from typing import List, NamedTuple, Optional, Sequence, Tuple

from .maps import (
    PlanarMap,
    cut_vertices,
    face_partition,
    is_connected,
)


class ProjectionDefectError(RuntimeError):
    """An invariant of prime connected projections failed."""


class Root(NamedTuple):
    dart: int
    ccw: bool

    @property
    def vertex(self) -> int:
        return self.dart >> 2


class DihedralElement(NamedTuple):
    rotation: int
    reflect: bool


def dihedral_apply(el: DihedralElement, p: int, twok: int) -> int:
    return (el.rotation - p) % twok if el.reflect else (el.rotation + p) % twok


def dihedral_compose(a: DihedralElement, b: DihedralElement, twok: int) -> DihedralElement:
    """Element acting as a after b."""
    if a.reflect:
        return DihedralElement((a.rotation - b.rotation) % twok, not b.reflect)
    return DihedralElement((a.rotation + b.rotation) % twok, b.reflect)


def dihedral_inverse(el: DihedralElement, twok: int) -> DihedralElement:
    if el.reflect:
        return el
    return DihedralElement((-el.rotation) % twok, False)


class MapScan:
    """Per-map data shared by the root computations."""

    __slots__ = ("m", "legcount", "face_id", "bdeg", "cut")

    def __init__(self, m: PlanarMap):
        self.m = m
        self.legcount = m.leg_counts()
        face_id, face_degree, _ = face_partition(m)
        self.face_id = face_id
        self.bdeg = tuple(face_degree[: 2 * m.k])
        self.cut = cut_vertices(m)


def _labeling(m: PlanarMap, root: Root) -> Tuple[List[int], List[int], List[int]]:
    """Vertex labels induced by a root.

    Returns (order, label, entry): crossings in label order, the label of
    each crossing (1-based), and the dart at each crossing from which its
    rotation is scanned (the root dart, or the dart through which the crossing
    was first reached).
    """
    n, twin = m.n, m.twin
    base = 4 * n
    step = 1 if root.ccw else 3
    label = [0] * n
    entry = [0] * n
    v0 = root.dart >> 2
    label[v0] = 1
    entry[v0] = root.dart
    order = [v0]
    qi = 0
    while qi < len(order):
        v = order[qi]
        qi += 1
        d = entry[v]
        for _ in range(4):
            t = twin[d]
            if t < base:
                u = t >> 2
                if not label[u]:
                    label[u] = len(order) + 1
                    entry[u] = t
                    order.append(u)
            d = (d & ~3) | ((d + step) & 3)
    if len(order) != n:
        raise ProjectionDefectError("labeling did not reach every crossing")
    return order, label, entry


def label_vertices(m: PlanarMap, root: Root) -> Tuple[int, ...]:
    """Labels 1..n per crossing id; the root vertex gets 1."""
    if not is_connected(m):
        raise ProjectionDefectError("cannot label a disconnected projection")
    _, label, _ = _labeling(m, root)
    return tuple(label)


def _min_rotation4(line: Sequence[int]) -> Tuple[int, ...]:
    a, b, c, d = line
    return min((a, b, c, d), (b, c, d, a), (c, d, a, b), (d, a, b, c))


def root_code(m: PlanarMap, root: Root) -> Tuple[int, ...]:
    """Flattened adjacency list under the root labeling (0 marks a leg)."""
    n, twin = m.n, m.twin
    base = 4 * n
    step = 1 if root.ccw else 3
    order, label, entry = _labeling(m, root)
    out: List[int] = []
    for v in order:
        d = entry[v]
        line = []
        for _ in range(4):
            t = twin[d]
            line.append(0 if t >= base else label[t >> 2])
            d = (d & ~3) | ((d + step) & 3)
        out.extend(_min_rotation4(line))
    return tuple(out)


def _root_face(m: PlanarMap, scan: MapScan, root: Root) -> int:
    """Face id of the root face: left of the dart for ccw roots, else right."""
    d = m.twin[root.dart] if root.ccw else root.dart
    return scan.face_id[d]


def face_code(m: PlanarMap, root: Root, scan: Optional[MapScan] = None) -> Tuple[int, ...]:
    """Boundary-face degrees from the root face, in the labeling direction."""
    scan = scan or MapScan(m)
    twok = 2 * m.k
    fid = _root_face(m, scan, root)
    if fid >= twok:
        raise ProjectionDefectError("root face is not a boundary face")
    bdeg = scan.bdeg
    if root.ccw:
        return tuple(bdeg[(fid + i) % twok] for i in range(twok))
    return tuple(bdeg[(fid - i) % twok] for i in range(twok))


def candidate_roots(m: PlanarMap, scan: Optional[MapScan] = None) -> List[Root]:
    """The restricted root set.

    Roots whose vertex is a boundary non-cut crossing of maximal leg count
    (among such crossings) and whose face code attains the minimum.  Never
    empty for a prime connected projection: it always has at least two
    non-cut boundary crossings.
    """
    scan = scan or MapScan(m)
    legcount, cut = scan.legcount, scan.cut
    eligible = [v for v in range(m.n) if legcount[v] and v not in cut]
    if not eligible:
        raise ProjectionDefectError(
            "no non-cut boundary crossing; input is not a prime connected projection"
        )
    maxlegs = max(legcount[v] for v in eligible)
    twok = 2 * m.k
    face_id, bdeg = scan.face_id, scan.bdeg
    best: Optional[Tuple[int, ...]] = None
    roots: List[Root] = []
    for v in eligible:
        if legcount[v] != maxlegs:
            continue
        for d in m.crossing_rotation(v):
            for ccw in (False, True):
                fid = face_id[m.twin[d]] if ccw else face_id[d]
                if fid >= twok:
                    continue
                if ccw:
                    fc = tuple(bdeg[(fid + i) % twok] for i in range(twok))
                else:
                    fc = tuple(bdeg[(fid - i) % twok] for i in range(twok))
                if best is None or fc < best:
                    best = fc
                    roots = [Root(d, ccw)]
                elif fc == best:
                    roots.append(Root(d, ccw))
    if not roots:
        raise ProjectionDefectError("restricted root set is empty")
    return roots


def invariant_root_code(
    m: PlanarMap, scan: Optional[MapScan] = None
) -> Tuple[Tuple[int, ...], List[Root]]:
    """Lexicographically minimal root code over the restricted root set.

    Returns the code and the canonical roots attaining it.
    """
    scan = scan or MapScan(m)
    best: Optional[Tuple[int, ...]] = None
    winners: List[Root] = []
    for r in candidate_roots(m, scan):
        code = root_code(m, r)
        if best is None or code < best:
            best = code
            winners = [r]
        elif code == best:
            winners.append(r)
    assert best is not None
    return best, winners


def _frame_element(m: PlanarMap, r0: Root, r0_frames, r1: Root) -> DihedralElement:
    """Dihedral element of the automorphism carrying root r0 to root r1.

    Built by matching the two root labelings dart by dart and read off on the
    legs; the dart map is verified to preserve the twin involution.
    """
    n, twin = m.n, m.twin
    base = 4 * n
    twok = 2 * m.k
    order0, label0, entry0 = r0_frames
    order1, label1, entry1 = _labeling(m, r1)
    step0 = 1 if r0.ccw else 3
    step1 = 1 if r1.ccw else 3
    phi = [0] * base
    for i in range(n):
        v0, v1 = order0[i], order1[i]
        d0, d1 = entry0[v0], entry1[v1]
        for _ in range(4):
            phi[d0] = d1
            d0 = (d0 & ~3) | ((d0 + step0) & 3)
            d1 = (d1 & ~3) | ((d1 + step1) & 3)
    eta = [-1] * twok
    for d in range(base):
        t = twin[d]
        td = twin[phi[d]]
        if t < base:
            if td != phi[t]:
                raise ProjectionDefectError(
                    "equal root codes did not induce an automorphism"
                )
        else:
            if td < base:
                raise ProjectionDefectError("automorphism maps a leg to an edge")
            eta[t - base] = td - base
    reflect = r0.ccw != r1.ccw
    c = eta[0]
    for p in range(twok):
        expected = (c - p) % twok if reflect else (c + p) % twok
        if eta[p] != expected:
            raise ProjectionDefectError("leg action of an automorphism is not dihedral")
    return DihedralElement(c, reflect)


def symmetries(
    m: PlanarMap,
    irc: Optional[Tuple[Tuple[int, ...], List[Root]]] = None,
    scan: Optional[MapScan] = None,
) -> List[DihedralElement]:
    """Boundary symmetry group of the projection.

    One element per canonical root: the dihedral transformation carrying the
    first canonical root to it.  The result is a subgroup of the dihedral
    group on the 2k legs.
    """
    _, croots = irc if irc is not None else invariant_root_code(m, scan)
    r0 = croots[0]
    frames0 = _labeling(m, r0)
    elements = []
    for r in croots:
        elements.append(_frame_element(m, r0, frames0, r))
    unique = sorted(set(elements))
    if len(unique) != len(elements):
        raise ProjectionDefectError("canonical roots induced duplicate symmetries")
    return unique
