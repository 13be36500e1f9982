"""Deterministic SVG rendering of a plane drawing with its covering lines.

Output bytes depend only on the input (fixed viewport policy, fixed
formatting, sorted iteration), so exports are directly diffable.
"""

from __future__ import annotations

from fractions import Fraction

from .primitives import Line2, Point2

_SIZE = 640
_MARGIN = 40


def _fmt(x: float) -> str:
    return f"{x:.3f}"


def export_svg(positions: dict[int, Point2], edges, lines=(), labels: bool = True) -> str:
    pts = [positions[v] for v in sorted(positions)]
    if pts:
        xs = [float(p.x) for p in pts]
        ys = [float(p.y) for p in pts]
        lo_x, hi_x = min(xs), max(xs)
        lo_y, hi_y = min(ys), max(ys)
    else:
        lo_x = hi_x = lo_y = hi_y = 0.0
    span = max(hi_x - lo_x, hi_y - lo_y, 1.0)
    scale = (_SIZE - 2 * _MARGIN) / span

    def sx(x: float) -> float:
        return _MARGIN + (x - lo_x) * scale

    def sy(y: float) -> float:
        return _SIZE - _MARGIN - (y - lo_y) * scale

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {_SIZE} {_SIZE}">',
        f'  <rect width="{_SIZE}" height="{_SIZE}" fill="white"/>',
    ]

    pad = span * 0.08
    for line in sorted(lines):
        seg = _clip_line(line, lo_x - pad, hi_x + pad, lo_y - pad, hi_y + pad)
        if seg is None:
            continue
        (x1, y1), (x2, y2) = seg
        out.append(f'  <line x1="{_fmt(sx(x1))}" y1="{_fmt(sy(y1))}" '
                   f'x2="{_fmt(sx(x2))}" y2="{_fmt(sy(y2))}" '
                   'stroke="#c0392b" stroke-width="1" stroke-dasharray="6 4"/>')

    for u, v in sorted(edges):
        p, q = positions[u], positions[v]
        out.append(f'  <line x1="{_fmt(sx(float(p.x)))}" y1="{_fmt(sy(float(p.y)))}" '
                   f'x2="{_fmt(sx(float(q.x)))}" y2="{_fmt(sy(float(q.y)))}" '
                   'stroke="#2c3e50" stroke-width="2"/>')

    for v in sorted(positions):
        p = positions[v]
        cx, cy = sx(float(p.x)), sy(float(p.y))
        out.append(f'  <circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="4" fill="#2980b9"/>')
        if labels:
            out.append(f'  <text x="{_fmt(cx + 6)}" y="{_fmt(cy - 6)}" '
                       f'font-family="monospace" font-size="11">{v}</text>')

    out.append("</svg>")
    return "\n".join(out) + "\n"


def _clip_line(line: Line2, lo_x, hi_x, lo_y, hi_y):
    """Clip an infinite line to a box, in float, for rendering only."""
    a, b, c = float(line.a), float(line.b), float(line.c)
    hits = []
    if b != 0:
        for x in (lo_x, hi_x):
            y = (c - a * x) / b
            if lo_y - 1e-9 <= y <= hi_y + 1e-9:
                hits.append((x, y))
    if a != 0:
        for y in (lo_y, hi_y):
            x = (c - b * y) / a
            if lo_x - 1e-9 <= x <= hi_x + 1e-9:
                hits.append((x, y))
    uniq = []
    for h in hits:
        if not any(abs(h[0] - u[0]) < 1e-9 and abs(h[1] - u[1]) < 1e-9 for u in uniq):
            uniq.append(h)
    if len(uniq) < 2:
        return None
    return uniq[0], uniq[1]
