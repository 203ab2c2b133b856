"""Deterministic SVG picture of a plane slice |b| = d*j (m = 2 only).

Each degree is a dot in the triangle b_0 + b_1 + b_2 = d*j.  Bound lines
b_s = A_j (orange) and b_s = l~_j (green) are drawn for every coordinate s.
Status and values travel in ``data-*`` attributes so tests need not parse
geometry.
"""

from __future__ import annotations

from math import sqrt
from typing import Sequence
from xml.sax.saxutils import quoteattr

from .theorems import Classification, ScanRow

COLORS = {
    Classification.VANISH_UPPER: "black",
    Classification.VANISH_LOWER: "black",
    Classification.THEOREM: "red",
    Classification.ORACLE: "red",
    Classification.UNKNOWN: "purple",
}

_STEP = 24.0
_MARGIN = 30.0
_H = sqrt(3) / 2


def _xy(b: Sequence[int], total: int) -> tuple[float, float]:
    x = _MARGIN + (b[2] + b[0] / 2) * _STEP
    y = _MARGIN + (total - b[0]) * _H * _STEP
    return round(x, 2), round(y, 2)


def _bound_line(kind: str, color: str, s: int, value: int, total: int) -> str | None:
    if not 0 <= value <= total:
        return None
    t1, t2 = [t for t in range(3) if t != s]
    ends = []
    for hi, lo in ((t1, t2), (t2, t1)):
        b = [0, 0, 0]
        b[s], b[hi], b[lo] = value, total - value, 0
        ends.append(_xy(b, total))
    (x1, y1), (x2, y2) = ends
    return (
        f'<line class="bound-{kind}" data-coord="{s}" data-value="{value}" '
        f'x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="{color}" stroke-width="2"/>'
    )


def render_slice(rows: list[ScanRow], d: int, j: int, p: int,
                 a_bound: int, l_bound: int | None) -> str:
    total = d * j
    width = round(2 * _MARGIN + total * _STEP, 2)
    height = round(2 * _MARGIN + total * _H * _STEP, 2)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'data-d="{d}" data-j="{j}" data-p="{p}">',
        f"<title>beta_{p},b for |b| = {total}</title>",
    ]
    for s in range(3):
        line = _bound_line("upper", "orange", s, a_bound, total)
        if line:
            out.append(line)
    if l_bound is not None:
        for s in range(3):
            line = _bound_line("lower", "green", s, l_bound, total)
            if line:
                out.append(line)
    for row in rows:
        if row.p != p:
            continue
        x, y = _xy(row.b, total)
        label = ",".join(map(str, row.b))
        value = "" if row.value is None else str(row.value)
        out.append(
            f'<circle cx="{x}" cy="{y}" r="4" fill="{COLORS[row.classification]}" '
            f"data-b={quoteattr(label)} data-classification=\"{row.classification.value}\" "
            f'data-value="{value}" data-provenance="{row.provenance}"/>'
        )
        if row.classification in (Classification.THEOREM, Classification.ORACLE) and row.value:
            out.append(f'<text x="{round(x + 5, 2)}" y="{round(y - 5, 2)}" font-size="10">{row.value}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
