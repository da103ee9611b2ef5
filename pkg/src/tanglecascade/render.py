"""Deterministic SVG diagrams of cascade codes, plus report figures.

Two styles:

* ``cascade``: horizontal levels top to bottom, one crossing per level,
  vertical strand segments between levels (left-to-right is the
  counterclockwise direction of the underlying annuli, cut open).
* ``disk``: concentric annuli, the start crossing in the middle, one crossing
  per ring, legs on the boundary circle.

Every level/annulus group carries exactly ``width`` strand elements, so the
drawing can be checked structurally against the code's width profile.  Output
is plain SVG 1.1 text, byte-stable for a fixed input.

``report_figures`` renders matplotlib summaries (counts versus crossing
number) next to the delimited counts output of an enumeration run.
"""

from __future__ import annotations

import math
from pathlib import Path
from typing import Dict, List, Sequence

from .cascade import (
    Code,
    DOWN,
    PATTERN_CHARS,
    REF_SLOT,
    UP,
    validate,
)
from .enumeration import CountsTable

MARGIN = 20.0
COL = 26.0
STRAND_H = 30.0
CONNECT_H = 26.0
GLYPH = 6.0
RING = 42.0

STYLES = ("cascade", "disk")


def _f(x: float) -> str:
    return f"{x:.1f}"


def _svg_document(width: float, height: float, body: List[str]) -> str:
    head = (
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_f(width)}" height="{_f(height)}" '
        f'viewBox="0 0 {_f(width)} {_f(height)}">'
    )
    style = (
        "<style>"
        ".strand{stroke:#1a1a1a;stroke-width:1.6;fill:none}"
        ".grab,.emit,.carry{stroke:#777;stroke-width:1.1;fill:none}"
        ".crossing line{stroke:#b03030;stroke-width:2.0}"
        ".ring{stroke:#ccc;stroke-width:0.8;fill:none;stroke-dasharray:3 3}"
        ".boundary{stroke:#333;stroke-width:1.4;fill:none}"
        ".leg{fill:#1a5fb4}"
        "</style>"
    )
    return "\n".join([head, style] + body + ["</svg>"]) + "\n"


def _attachments(code: Code) -> List[int]:
    """Leftmost grabbed strand position per level 2..n (expansion layout)."""
    widths = validate(code)
    out = []
    ref = 0
    for i, (alpha, shift) in enumerate(code):
        w = widths[i]
        out.append((ref + shift) % w)
        ref = REF_SLOT[alpha]
    return out


def _crossing_glyph(cx: float, cy: float, pattern: str) -> str:
    g = GLYPH
    return (
        f'<g class="crossing" data-pattern="{pattern}" '
        f'transform="translate({_f(cx)},{_f(cy)})">'
        f'<line x1="{_f(-g)}" y1="{_f(-g)}" x2="{_f(g)}" y2="{_f(g)}"/>'
        f'<line x1="{_f(-g)}" y1="{_f(g)}" x2="{_f(g)}" y2="{_f(-g)}"/>'
        "</g>"
    )


def render_cascade_svg(code: Code) -> str:
    widths = validate(code)
    n = len(code) + 1
    att = _attachments(code)
    maxw = max(widths)
    width = 2 * MARGIN + (maxw - 1) * COL
    height = MARGIN + n * (CONNECT_H + STRAND_H) + CONNECT_H

    def x(col: int) -> float:
        return MARGIN + col * COL

    def strand_top(level: int) -> float:
        return MARGIN + CONNECT_H + (level - 1) * (CONNECT_H + STRAND_H)

    body = []
    for level in range(1, n + 1):
        w = widths[level - 1]
        y0 = strand_top(level)
        y1 = y0 + STRAND_H
        parts = [f'<g class="level" data-level="{level}" data-width="{w}">']
        if level == 1:
            cx = (x(0) + x(3)) / 2
            cy = y0 - CONNECT_H / 2
            parts.append(_crossing_glyph(cx, cy, "start"))
            for j in range(4):
                parts.append(
                    f'<line class="emit" x1="{_f(cx)}" y1="{_f(cy)}" '
                    f'x2="{_f(x(j))}" y2="{_f(y0)}"/>'
                )
        else:
            alpha, _ = code[level - 2]
            up, down = UP[alpha], DOWN[alpha]
            wprev = widths[level - 2]
            p = att[level - 2]
            cx = (x(0) + x(down - 1)) / 2
            cy = y0 - CONNECT_H / 2
            prev_bottom = strand_top(level - 1) + STRAND_H
            parts.append(_crossing_glyph(cx, cy, PATTERN_CHARS[alpha]))
            for t in range(up):
                src = (p + t) % wprev
                parts.append(
                    f'<line class="grab" x1="{_f(x(src))}" y1="{_f(prev_bottom)}" '
                    f'x2="{_f(cx)}" y2="{_f(cy)}"/>'
                )
            for j in range(down):
                parts.append(
                    f'<line class="emit" x1="{_f(cx)}" y1="{_f(cy)}" '
                    f'x2="{_f(x(j))}" y2="{_f(y0)}"/>'
                )
            for s in range(wprev - up):
                src = (p + up + s) % wprev
                parts.append(
                    f'<line class="carry" x1="{_f(x(src))}" y1="{_f(prev_bottom)}" '
                    f'x2="{_f(x(down + s))}" y2="{_f(y0)}"/>'
                )
        for j in range(w):
            parts.append(
                f'<line class="strand" x1="{_f(x(j))}" y1="{_f(y0)}" '
                f'x2="{_f(x(j))}" y2="{_f(y1)}"/>'
            )
        parts.append("</g>")
        body.append("".join(parts))
    legs_y = strand_top(n) + STRAND_H
    legs = [f'<g class="legs" data-count="{widths[-1]}">']
    for j in range(widths[-1]):
        legs.append(f'<circle class="leg" cx="{_f(x(j))}" cy="{_f(legs_y)}" r="2.5"/>')
    legs.append("</g>")
    body.append("".join(legs))
    return _svg_document(width, height, body)


def render_disk_svg(code: Code) -> str:
    widths = validate(code)
    n = len(code) + 1
    att = _attachments(code)
    outer = n * RING
    c = MARGIN + outer
    size = 2 * c

    def pt(radius: float, pos: float, w: int) -> tuple:
        theta = 2 * math.pi * (pos + 0.5) / w
        return (c + radius * math.cos(theta), c - radius * math.sin(theta))

    body = [
        f'<circle class="boundary" cx="{_f(c)}" cy="{_f(c)}" r="{_f(outer)}"/>'
    ]
    for level in range(1, n):
        body.append(
            f'<circle class="ring" cx="{_f(c)}" cy="{_f(c)}" '
            f'r="{_f(level * RING)}"/>'
        )

    # Crossing centers: start crossing in the middle, level i on ring i-1.
    centers = [(c, c)]
    for level in range(2, n + 1):
        down = DOWN[code[level - 2][0]]
        w = widths[level - 1]
        centers.append(pt((level - 1) * RING, (down - 1) / 2.0, w))

    for level in range(1, n + 1):
        w = widths[level - 1]
        r_in = (level - 1) * RING
        r_out = level * RING
        parts = [f'<g class="annulus" data-level="{level}" data-width="{w}">']
        if level < n:
            alpha, _ = code[level - 1]
            up, down = UP[alpha], DOWN[alpha]
            p = att[level - 1]
            wnext = widths[level]
            grabbed = {(p + t) % w for t in range(up)}
            carry_dst = {}
            for s in range(w - up):
                carry_dst[(p + up + s) % w] = down + s
            for j in range(w):
                x0, y0 = pt(r_in, j, w) if level > 1 else (c, c)
                if j in grabbed:
                    x1, y1 = centers[level]
                else:
                    x1, y1 = pt(r_out, carry_dst[j], wnext)
                parts.append(
                    f'<line class="strand" x1="{_f(x0)}" y1="{_f(y0)}" '
                    f'x2="{_f(x1)}" y2="{_f(y1)}"/>'
                )
        else:
            for j in range(w):
                x0, y0 = pt(r_in, j, w) if level > 1 else (c, c)
                x1, y1 = pt(outer, j, w)
                parts.append(
                    f'<line class="strand" x1="{_f(x0)}" y1="{_f(y0)}" '
                    f'x2="{_f(x1)}" y2="{_f(y1)}"/>'
                )
        parts.append("</g>")
        body.append("".join(parts))

    for level in range(1, n + 1):
        cx, cy = centers[level - 1]
        pattern = "start" if level == 1 else PATTERN_CHARS[code[level - 2][0]]
        body.append(_crossing_glyph(cx, cy, pattern))
    legs = [f'<g class="legs" data-count="{widths[-1]}">']
    for j in range(widths[-1]):
        lx, ly = pt(outer, j, widths[-1])
        legs.append(f'<circle class="leg" cx="{_f(lx)}" cy="{_f(ly)}" r="2.5"/>')
    legs.append("</g>")
    body.append("".join(legs))
    return _svg_document(size, size, body)


def render_svg(code: Code, style: str = "cascade") -> str:
    """Render a valid code as an SVG document in the given style."""
    if style == "cascade":
        return render_cascade_svg(code)
    if style == "disk":
        return render_disk_svg(code)
    raise ValueError(f"unknown style {style!r}; expected one of {STYLES}")


def report_figures(tables: Dict[str, CountsTable], outdir: Path) -> List[Path]:
    """Write one counts-growth figure per class next to the TSV report."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    outdir.mkdir(parents=True, exist_ok=True)
    written = []
    for cls, table in sorted(tables.items()):
        if not table.entries:
            continue
        ns = sorted({n for n, _ in table.entries})
        ks = sorted({k for _, k in table.entries})
        fig, ax = plt.subplots(figsize=(6.4, 4.2))
        for k in ks:
            xs = [n for n in ns if table.cell(n, k)]
            ys = [table.cell(n, k) for n in xs]
            if xs:
                ax.plot(xs, ys, marker="o", markersize=3, linewidth=1.0,
                        label=f"k={k}")
        totals = [table.total(n) for n in ns]
        ax.plot(ns, totals, marker="s", markersize=4, linewidth=2.0,
                color="black", label="total")
        ax.set_yscale("log")
        ax.set_xlabel("crossings n")
        ax.set_ylabel("count")
        ax.set_title(f"class {cls}")
        ax.grid(True, which="both", alpha=0.3)
        ax.legend(fontsize=7, ncol=2)
        path = outdir / f"{cls}_counts.png"
        fig.savefig(path, dpi=150, bbox_inches="tight")
        plt.close(fig)
        written.append(path)
    return written
