"""Level-by-level generation of canonical codes, class filters, count tables.

Children of a projection with 2k legs: each pattern can grab consecutive legs
at every one of the 2k positions, giving 6k raw extension sites.  Sites are
reduced to one representative per orbit of the parent's boundary symmetry
group, each surviving child is kept only when

* the new crossing belongs to the child's restricted root set,
* the child is prime,
* the new crossing is a canonical root vertex of the child, and
* the child's canonical code extends the parent's code by one pair

(the last check plus in-batch dedup makes the symmetry reduction a pure
optimization).  Children of distinct canonical parents are then distinct, so
levels are generated breadth-first without any global sifting.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, NamedTuple, Optional, Sequence, Tuple

from . import cascade
from .cascade import Code, DOWN, UP
from .canonical import canonical_code
from .maps import PlanarMap, is_composite, is_reduced
from .rootcode import (
    DihedralElement,
    MapScan,
    candidate_roots,
    invariant_root_code,
    symmetries,
)


class ExtensionSite(NamedTuple):
    pattern: int
    position: int


def attach(m: PlanarMap, pattern: int, position: int) -> PlanarMap:
    """Add one crossing grabbing ``up`` consecutive legs starting at position.

    The child's boundary is re-anchored at the new crossing's leftmost down
    strand, exactly as in cascade expansion.
    """
    n, k, twin = m.n, m.k, m.twin
    base = 4 * n
    twok = 2 * k
    up, down = UP[pattern], DOWN[pattern]
    legs = m.legs()
    c = n
    base2 = 4 * (n + 1)
    k2 = (twok - up + down) // 2
    new_twin = [-1] * (base2 + 2 * k2)
    for dart in range(base):
        t = twin[dart]
        if t < base:
            new_twin[dart] = t
    for t in range(up):
        dart = 4 * c + (up - 1 - t)
        s = legs[(position + t) % twok]
        new_twin[dart] = s
        new_twin[s] = dart
    new_legs = [4 * c + up + j for j in range(down)]
    for s in range(twok - up):
        new_legs.append(legs[(position + up + s) % twok])
    for pos, s in enumerate(new_legs):
        new_twin[s] = base2 + pos
        new_twin[base2 + pos] = s
    return PlanarMap(n + 1, k2, tuple(new_twin))


def extension_sites(
    m: PlanarMap, syms: Sequence[DihedralElement]
) -> List[ExtensionSite]:
    """One site per orbit of the 6k raw sites under the boundary symmetries.

    Every pattern is mirror symmetric, so a reflection maps a site to the
    site grabbing the reflected leg interval.
    """
    twok = 2 * m.k
    sites: List[ExtensionSite] = []
    for pattern in (cascade.X, cascade.P, cascade.Q):
        up = UP[pattern]
        seen = [False] * twok
        for p in range(twok):
            if seen[p]:
                continue
            orbit = set()
            for g in syms:
                if g.reflect:
                    orbit.add((g.rotation - (p + up - 1)) % twok)
                else:
                    orbit.add((g.rotation + p) % twok)
            for q in orbit:
                seen[q] = True
            sites.append(ExtensionSite(pattern, min(orbit)))
    return sites


def children(parent_code: Code) -> List[Code]:
    """Canonical codes of all children of a canonical parent code."""
    pm = cascade.expand(parent_code)
    syms = symmetries(pm)
    nv = pm.n
    out = set()
    for pattern, position in extension_sites(pm, syms):
        child = attach(pm, pattern, position)
        scan = MapScan(child)
        roots = candidate_roots(child, scan)
        if all(r.dart >> 2 != nv for r in roots):
            continue
        if is_composite(child):
            continue
        root_vertices = {r.dart >> 2 for r in roots}
        irc = None
        if len(root_vertices) > 1:
            irc = invariant_root_code(child, scan)
            if all(r.dart >> 2 != nv for r in irc[1]):
                continue
        ccode = canonical_code(child, irc=irc, checked=True)
        if ccode[:-1] != parent_code:
            continue
        out.add(ccode)
    return sorted(out)


def weak_filter(m: PlanarMap) -> bool:
    """Keep projections in which no crossing carries two or more legs.

    Such a crossing can be untwisted through the boundary sphere, reducing
    the crossing number; the single-crossing projection stays as the trivial
    class representative.
    """
    if m.n == 1:
        return True
    return all(c <= 1 for c in m.leg_counts())


@dataclass
class CountsTable:
    """Counts per (crossings, half-legs) for one projection class."""

    label: str
    entries: Dict[Tuple[int, int], int] = field(default_factory=dict)

    def add(self, n: int, k: int, count: int = 1) -> None:
        key = (n, k)
        self.entries[key] = self.entries.get(key, 0) + count

    def cell(self, n: int, k: int) -> int:
        return self.entries.get((n, k), 0)

    def total(self, n: int) -> int:
        return sum(c for (nn, _), c in self.entries.items() if nn == n)

    def totals(self, n_max: int) -> Tuple[int, ...]:
        return tuple(self.total(n) for n in range(1, n_max + 1))

    def rows(self) -> List[Tuple[int, int, int]]:
        return sorted((n, k, c) for (n, k), c in self.entries.items())


def classify_code(code: Code) -> Tuple[int, int, bool, bool]:
    """(n, k, reduced?, weak-filter?) for one canonical code."""
    m = cascade.expand(code)
    return m.n, m.k, is_reduced(m), weak_filter(m)


def _children_worker(parent_code: Code) -> List[Code]:
    return children(parent_code)


def generate_levels(
    n_max: int,
    workers: int = 1,
    start: Optional[Tuple[int, List[Code]]] = None,
) -> Iterator[Tuple[int, List[Code]]]:
    """Yield (n, sorted canonical codes with n crossings) for n = 1..n_max.

    ``start=(n0, codes)`` resumes from a previously generated level.  Parents
    are independent, so levels may be partitioned across worker processes;
    results do not depend on the partitioning.
    """
    if start is None:
        n0, level = 1, [()]
    else:
        n0, level = start
        level = sorted(level)
    yield n0, level
    pool = multiprocessing.Pool(workers) if workers > 1 else None
    try:
        for n in range(n0 + 1, n_max + 1):
            if pool is not None:
                batches = pool.map(_children_worker, level, chunksize=64)
            else:
                batches = [children(p) for p in level]
            merged: set = set()
            total = 0
            for batch in batches:
                total += len(batch)
                merged.update(batch)
            if len(merged) != total:
                raise AssertionError(
                    f"duplicate canonical codes across parents at n={n}"
                )
            level = sorted(merged)
            yield n, level
    finally:
        if pool is not None:
            pool.close()
            pool.join()


CLASSES = ("proj", "alt", "reduced", "weakfilter")


def enumerate_all(
    n_max: int,
    classes: Sequence[str] = ("proj",),
    sink=None,
    workers: int = 1,
    start: Optional[Tuple[int, List[Code]]] = None,
    legs: Optional[int] = None,
) -> Dict[str, CountsTable]:
    """Generate all levels up to n_max and tabulate the requested classes.

    ``sink(n, codes)`` is called once per completed level with the sorted
    canonical codes.  ``legs`` restricts counting to one k.  The "alt" class
    (flype equivalence) is delegated to the flype module per level.
    """
    for cls in classes:
        if cls not in CLASSES:
            raise ValueError(f"unknown class {cls!r}")
    tables = {cls: CountsTable(cls) for cls in classes}
    for n, level in generate_levels(n_max, workers=workers, start=start):
        for code in level:
            cn, ck, reduced, weak = classify_code(code)
            if legs is not None and ck != legs:
                continue
            if "proj" in tables:
                tables["proj"].add(cn, ck)
            if "reduced" in tables and reduced:
                tables["reduced"].add(cn, ck)
            if "weakfilter" in tables and weak:
                tables["weakfilter"].add(cn, ck)
        if "alt" in tables:
            from .flype import alternating_level

            for (cn, ck), count in alternating_level(level, workers=workers).items():
                if legs is not None and ck != legs:
                    continue
                tables["alt"].add(cn, ck, count)
        if sink is not None:
            sink(n, level)
    return tables
