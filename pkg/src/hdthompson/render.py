"""SVG drawings of numbered patterns (y axis pointing up)."""

from __future__ import annotations

from .pattern import DyadicRect, NumberedPattern

SCALE = 120
MARGIN = 10


def _fmt(x: float) -> str:
    s = f"{x:.3f}".rstrip("0").rstrip(".")
    return s or "0"


def render_pattern(p: NumberedPattern, squares: int = 3) -> str:
    """Squares S_0..S_{squares-1} side by side, S_i drawn at x = 2i."""
    if squares < 1:
        raise ValueError("need at least one square")
    width = (2 * squares - 1) * SCALE + 2 * MARGIN
    height = SCALE + 2 * MARGIN + 20
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        '<g font-family="sans-serif" text-anchor="middle" dominant-baseline="middle">',
    ]
    items = []
    for n, r in enumerate(p.rects):
        if r[0] < squares:
            items.append((n, DyadicRect(*r)))
    for i in range(p.tail_start, squares):
        items.append((i + p.tail_offset, DyadicRect(i)))
    for i in range(squares):
        x = MARGIN + 2 * i * SCALE
        out.append(f'<rect x="{x}" y="{MARGIN}" width="{SCALE}" height="{SCALE}" '
                   'fill="none" stroke="black" stroke-width="2"/>')
        out.append(f'<text x="{_fmt(x + SCALE / 2)}" y="{MARGIN + SCALE + 12}" '
                   f'font-size="11">S{i}</text>')
    for n, r in sorted(items, key=lambda t: t[0]):
        x0, x1, y0, y1 = (float(b) for b in r.bounds())
        left = MARGIN + 2 * r.square * SCALE + x0 * SCALE
        top = MARGIN + (1 - y1) * SCALE
        w, h = (x1 - x0) * SCALE, (y1 - y0) * SCALE
        size = max(6.0, min(16.0, 0.45 * min(w, h)))
        out.append(f'<rect x="{_fmt(left)}" y="{_fmt(top)}" width="{_fmt(w)}" height="{_fmt(h)}" '
                   'fill="none" stroke="black" stroke-width="1"/>')
        out.append(f'<text x="{_fmt(left + w / 2)}" y="{_fmt(top + h / 2)}" '
                   f'font-size="{_fmt(size)}">{n}</text>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def rectangles_per_square(p: NumberedPattern, squares: int) -> list:
    counts = [0] * squares
    for r in p.rects:
        if r[0] < squares:
            counts[r[0]] += 1
    for i in range(p.tail_start, squares):
        counts[i] += 1
    return counts
