"""Catalog files and counts TSV input/output."""

from __future__ import annotations

from pathlib import Path
from typing import Dict, Iterable, List, Sequence, Tuple

from .cascade import Code, format_code, parse_code
from .enumeration import CountsTable

CATALOG_HEADER = "# tangle-catalog v1"


def write_catalog(path: Path, codes: Iterable[Code]) -> None:
    tmp = path.with_suffix(path.suffix + ".tmp")
    with tmp.open("w", encoding="ascii") as out:
        out.write(CATALOG_HEADER + "\n")
        for code in codes:
            out.write(format_code(code) + "\n")
    tmp.replace(path)


def read_catalog(path: Path) -> List[Code]:
    lines = path.read_text(encoding="ascii").splitlines()
    if not lines or lines[0].strip() != CATALOG_HEADER:
        raise ValueError(f"{path} is not a catalog file")
    return [parse_code(line) for line in lines[1:] if line.strip()]


def counts_tsv_lines(tables: Dict[str, CountsTable]) -> List[str]:
    """One ``class<TAB>n<TAB>k<TAB>count`` line per cell."""
    lines = []
    for cls in sorted(tables):
        for n, k, count in tables[cls].rows():
            lines.append(f"{cls}\t{n}\t{k}\t{count}")
    return lines


def write_counts_tsv(path: Path, tables: Dict[str, CountsTable]) -> None:
    path.write_text("\n".join(counts_tsv_lines(tables)) + "\n", encoding="ascii")


def read_counts_tsv(path: Path) -> Dict[str, Dict[Tuple[int, int], int]]:
    out: Dict[str, Dict[Tuple[int, int], int]] = {}
    for ln, line in enumerate(path.read_text(encoding="ascii").splitlines(), 1):
        if not line.strip() or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 4:
            raise ValueError(f"{path}:{ln}: expected 4 tab-separated fields")
        cls, n, k, count = fields
        out.setdefault(cls, {})[(int(n), int(k))] = int(count)
    return out
