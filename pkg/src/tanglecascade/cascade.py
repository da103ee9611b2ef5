"""Cascade codes: validation, expansion into disk maps, text format.

A cascade diagram stacks one crossing per annular level.  Level 1 is the
start crossing with all four strands running outward; every later level is
one of three patterns, identified by how many strands it grabs from the
previous level (``up``) and how many it emits (``down``):

====  ===  ====  ==========
code  up   down  reference
====  ===  ====  ==========
X      2    2    left down strand
P      1    3    central down strand
Q      3    1    its single down strand
====  ===  ====  ==========

A code is the list of ``(pattern, shift)`` pairs for levels ``2..n``.  The
shift counts strand positions counterclockwise from the previous pattern's
reference strand to the leftmost strand the new pattern grabs.  The first
shift is normalized to 0 (the start crossing is rotation symmetric).
"""

from __future__ import annotations

from typing import List, Sequence, Tuple

from .maps import PlanarMap

Pair = Tuple[int, int]
Code = Tuple[Pair, ...]

X, P, Q = 0, 1, 2
PATTERN_CHARS = "XPQ"
UP = (2, 1, 3)
DOWN = (2, 3, 1)
DELTA = (0, 2, -2)
# Index of the reference strand among a pattern's down strands.
REF_SLOT = (0, 1, 0)

START_WIDTH = 4


class CodeError(ValueError):
    """Base class for cascade-code validation failures."""


class NonzeroFirstShift(CodeError):
    pass


class ShiftOutOfRange(CodeError):
    pass


class WidthUnderflow(CodeError):
    pass


class CodeFormatError(CodeError):
    """Text form of a code cannot be parsed."""


def validate(code: Sequence[Pair], allow_first_shift: bool = False) -> Tuple[int, ...]:
    """Check drawability and return the width profile (w_1 .. w_n).

    ``allow_first_shift`` lifts the first-shift normalization; shifted codes
    expand to rotated copies of the normalized one.
    """
    widths = [START_WIDTH]
    for i, (alpha, shift) in enumerate(code):
        if alpha not in (X, P, Q):
            raise CodeError(f"unknown pattern {alpha!r} at level {i + 2}")
        w = widths[-1]
        if i == 0 and shift != 0 and not allow_first_shift:
            raise NonzeroFirstShift(f"first shift must be 0, got {shift}")
        if not 0 <= shift < w:
            raise ShiftOutOfRange(
                f"shift {shift} at level {i + 2} not in 0..{w - 1}"
            )
        if w < UP[alpha]:
            raise WidthUnderflow(
                f"pattern {PATTERN_CHARS[alpha]} at level {i + 2} needs "
                f"{UP[alpha]} strands, only {w} available"
            )
        w += DELTA[alpha]
        if w < 2:
            raise WidthUnderflow(f"width {w} after level {i + 2}")
        widths.append(w)
    return tuple(widths)


def width_profile(code: Sequence[Pair]) -> Tuple[int, ...]:
    """Width sequence of a valid code (alias of validate)."""
    return validate(code)


def code_crossings(code: Sequence[Pair]) -> int:
    return len(code) + 1


def code_legs(code: Sequence[Pair]) -> int:
    """Half the leg count of the expanded map, from width arithmetic alone."""
    return validate(code)[-1] // 2


def expand_layout(
    code: Sequence[Pair], allow_first_shift: bool = False
) -> Tuple[PlanarMap, int]:
    """Expand a code and also return the final reference strand position.

    The construction keeps the open strand list in counterclockwise order,
    re-anchored after every level at the new pattern's leftmost down strand.
    Grabbed strands are the ``up`` consecutive positions starting at
    ``(ref + shift) mod width``; around the new crossing the counterclockwise
    rotation is the up edges right-to-left followed by the down darts
    left-to-right.
    """
    widths = validate(code, allow_first_shift=allow_first_shift)
    n = len(code) + 1
    twin = [-1] * (4 * n + widths[-1])
    strands = [0, 1, 2, 3]
    ref = 0
    for level, (alpha, shift) in enumerate(code, start=2):
        c = level - 1
        up, down = UP[alpha], DOWN[alpha]
        w = len(strands)
        p = (ref + shift) % w
        for t in range(up):
            dart = 4 * c + (up - 1 - t)
            s = strands[(p + t) % w]
            twin[dart] = s
            twin[s] = dart
        downs = [4 * c + up + j for j in range(down)]
        rest = [strands[(p + up + i) % w] for i in range(w - up)]
        strands = downs + rest
        ref = REF_SLOT[alpha]
    base = 4 * n
    for pos, s in enumerate(strands):
        twin[s] = base + pos
        twin[base + pos] = s
    m = PlanarMap(n, len(strands) // 2, tuple(twin))
    return m, ref


def expand(code: Sequence[Pair], allow_first_shift: bool = False) -> PlanarMap:
    """Build the projection map described by a code."""
    return expand_layout(code, allow_first_shift=allow_first_shift)[0]


def format_code(code: Sequence[Pair]) -> str:
    """Canonical text form, e.g. ``6;X 0;X 0;P 1;X 5;X 2`` (``1;`` for n=1)."""
    n = len(code) + 1
    body = ";".join(f"{PATTERN_CHARS[a]} {s}" for a, s in code)
    return f"{n};{body}"


def parse_code(text: str) -> Code:
    """Parse the text form and validate the result."""
    text = text.strip()
    parts = text.split(";")
    if len(parts) < 2 and not text.endswith(";"):
        raise CodeFormatError(f"missing crossing count in {text!r}")
    head = parts[0]
    try:
        n = int(head)
    except ValueError:
        raise CodeFormatError(f"bad crossing count {head!r}") from None
    body = [p for p in parts[1:] if p.strip()]
    if len(body) != n - 1:
        raise CodeFormatError(
            f"{text!r} declares {n} crossings but has {len(body)} pairs"
        )
    pairs: List[Pair] = []
    for item in body:
        fields = item.split()
        if len(fields) != 2 or fields[0] not in PATTERN_CHARS:
            raise CodeFormatError(f"bad pair {item!r} in {text!r}")
        try:
            shift = int(fields[1])
        except ValueError:
            raise CodeFormatError(f"bad shift in pair {item!r}") from None
        pairs.append((PATTERN_CHARS.index(fields[0]), shift))
    code = tuple(pairs)
    try:
        validate(code)
    except CodeFormatError:
        raise
    except CodeError as exc:
        raise CodeFormatError(f"{text!r} is not drawable: {exc}") from exc
    return code
