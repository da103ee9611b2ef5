"""Reference count tables used by the verify command.

Known-good counts of prime connected tangle projections per (crossing count
n, half-leg count k), for the plain class, the flype-equivalence (alternating
tangle) class and the reduced (no doubled edge) class, up to n = 12.
"""

from __future__ import annotations

from typing import Dict, Tuple

MAX_N = 12


def _table(rows: Dict[int, Dict[int, int]]) -> Dict[Tuple[int, int], int]:
    return {(n, k): c for n, row in rows.items() for k, c in row.items()}


PROJECTIONS = _table({
    1: {2: 1},
    2: {2: 1, 3: 1},
    3: {2: 2, 3: 2, 4: 2},
    4: {2: 6, 3: 8, 4: 8, 5: 5},
    5: {2: 19, 3: 29, 4: 41, 5: 31, 6: 16},
    6: {2: 71, 3: 138, 4: 210, 5: 231, 6: 161, 7: 60},
    7: {2: 293, 3: 638, 4: 1125, 5: 1458, 6: 1406, 7: 840, 8: 261},
    8: {2: 1348, 3: 3237, 4: 6138, 5: 9183, 6: 10572, 7: 8818, 8: 4702,
        9: 1243},
    9: {2: 6568, 3: 16805, 4: 34112, 5: 56084, 6: 74331, 7: 75747, 8: 56199,
        9: 26753, 10: 6257},
    10: {2: 33701, 3: 90239, 4: 192278, 5: 340885, 6: 499902, 7: 591091,
         8: 541570, 9: 361106, 10: 155593, 11: 32721},
    11: {2: 178706, 3: 494151, 4: 1096560, 5: 2060224, 6: 3276104,
         7: 4327816, 8: 4628641, 9: 3846580, 10: 2332512, 11: 916595,
         12: 175760},
    12: {2: 973085, 3: 2756453, 4: 6317363, 5: 12446400, 6: 21112641,
         7: 30451898, 8: 36633417, 9: 35758786, 10: 27199662, 11: 15123600,
         12: 5464661, 13: 963900},
})

ALTERNATING = _table({
    1: {2: 1},
    2: {2: 1, 3: 1},
    3: {2: 2, 3: 2, 4: 2},
    4: {2: 5, 3: 7, 4: 8, 5: 5},
    5: {2: 13, 3: 20, 4: 37, 5: 31, 6: 16},
    6: {2: 36, 3: 77, 4: 157, 5: 209, 6: 161, 7: 60},
    7: {2: 111, 3: 276, 4: 687, 5: 1128, 6: 1294, 7: 840, 8: 261},
    8: {2: 373, 3: 1135, 4: 3052, 5: 5986, 6: 8528, 7: 8206, 8: 4702,
        9: 1243},
    9: {2: 1362, 3: 4823, 4: 13981, 5: 30556, 6: 51475, 7: 62895, 8: 52815,
        9: 26753, 10: 6257},
    10: {2: 5378, 3: 21734, 4: 65797, 5: 155964, 6: 294366, 7: 428254,
         8: 460189, 9: 341878, 10: 155593, 11: 32721},
    11: {2: 22807, 3: 101307, 4: 317506, 5: 795918, 6: 1637855, 7: 2702902,
         8: 3475551, 9: 3327424, 10: 2221544, 11: 916595, 12: 175760},
    12: {2: 102617, 3: 488093, 4: 1565163, 5: 4092027, 6: 8979493,
         7: 16313106, 8: 23979733, 9: 27625056, 10: 23869621, 11: 14473275,
         12: 5464661, 13: 963900},
})

REDUCED = _table({
    1: {2: 1},
    2: {3: 1},
    3: {3: 1, 4: 2},
    4: {3: 1, 4: 2, 5: 5},
    5: {2: 1, 3: 1, 4: 4, 5: 9, 6: 16},
    6: {2: 1, 3: 4, 4: 7, 5: 22, 6: 42, 7: 60},
    7: {2: 3, 3: 7, 4: 21, 5: 49, 6: 126, 7: 228, 8: 261},
    8: {2: 9, 3: 24, 4: 58, 5: 152, 6: 355, 7: 799, 8: 1288, 9: 1243},
    9: {2: 26, 3: 69, 4: 185, 5: 458, 6: 1144, 7: 2586, 8: 5164, 9: 7525,
        10: 6257},
    10: {2: 74, 3: 226, 4: 596, 5: 1545, 6: 3769, 7: 8850, 8: 18745,
         9: 33856, 10: 44482, 11: 32721},
    11: {2: 238, 3: 719, 4: 1998, 5: 5188, 6: 13012, 7: 30754, 8: 68142,
         9: 134834, 10: 222482, 11: 266270, 12: 175760},
    12: {2: 770, 3: 2423, 4: 6753, 5: 17990, 6: 45515, 7: 109843, 8: 248891,
         9: 520884, 10: 962620, 11: 1464500, 12: 1607405, 13: 963900},
})

REFERENCE = {
    "proj": PROJECTIONS,
    "alt": ALTERNATING,
    "reduced": REDUCED,
}


def reference_cells(cls: str, n_max: int) -> Dict[Tuple[int, int], int]:
    """All reference cells of a class with n <= n_max."""
    if cls not in REFERENCE:
        raise KeyError(f"no reference table for class {cls!r}")
    if n_max > MAX_N:
        raise ValueError(f"reference data stops at n = {MAX_N}")
    return {(n, k): c for (n, k), c in REFERENCE[cls].items() if n <= n_max}


def reference_total(cls: str, n: int) -> int:
    return sum(c for (nn, _), c in REFERENCE[cls].items() if nn == n)
