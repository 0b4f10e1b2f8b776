"""Deterministic SVG drawings of lattice paths.

Output is plain text built by hand so the same input always produces the
same bytes; there is no dependency on a plotting library.
"""

from __future__ import annotations

from xml.sax.saxutils import escape

from .paths import LatticePath

UNIT = 24
MARGIN = 28
PANEL_GAP = 36


def _panel(p: LatticePath, x0: float, y0: float, landmarks: dict | None, caption: str | None):
    """SVG elements for one path whose origin row sits at ``y0``; returns (elements, height)."""
    lv = p.levels
    top, bottom = max(lv), min(lv)
    width = max(len(p), 1)
    rows = max(top - bottom, 1)
    els = []

    def xy(j: int) -> tuple[float, float]:
        return x0 + j * UNIT, y0 + (top - lv[j]) * UNIT

    # unit-square grid
    for i in range(width + 1):
        x = x0 + i * UNIT
        els.append(f'<line x1="{x}" y1="{y0}" x2="{x}" y2="{y0 + rows * UNIT}" class="grid"/>')
    for k in range(rows + 1):
        y = y0 + k * UNIT
        els.append(f'<line x1="{x0}" y1="{y}" x2="{x0 + width * UNIT}" y2="{y}" class="grid"/>')
    # the x-axis (level 0)
    if bottom <= 0 <= top:
        y = y0 + top * UNIT
        els.append(f'<line x1="{x0}" y1="{y}" x2="{x0 + width * UNIT}" y2="{y}" class="axis"/>')
    for j in range(len(p)):
        (ax, ay), (bx, by) = xy(j), xy(j + 1)
        kind = "up" if p.steps[j] == 0 else "down"
        els.append(f'<line x1="{ax}" y1="{ay}" x2="{bx}" y2="{by}" class="edge {kind}"/>')
    for j in range(len(p) + 1):
        cx, cy = xy(j)
        els.append(f'<circle cx="{cx}" cy="{cy}" r="2.5" class="pt"/>')
    if landmarks:
        for label in sorted(landmarks):
            pos = landmarks[label]
            if isinstance(pos, (tuple, list)):
                a, b = pos
                if a == b:
                    continue
                (ax, ay), (bx, by) = xy(a), xy(b)
                mid_y = min(ay, by) - 6
                els.append(f'<line x1="{ax}" y1="{mid_y}" x2="{bx}" y2="{mid_y}" class="span"/>')
                els.append(f'<text x="{(ax + bx) / 2}" y="{mid_y - 3}" class="lbl">{escape(label)}</text>')
                continue
            if pos is None or not 0 <= pos <= len(p):
                continue
            cx, cy = xy(pos)
            els.append(f'<circle cx="{cx}" cy="{cy}" r="4" class="mark"/>')
            els.append(f'<text x="{cx + 4}" y="{cy - 6}" class="lbl">{escape(label)}</text>')
    height = rows * UNIT
    if caption:
        els.append(f'<text x="{x0}" y="{y0 + height + 16}" class="cap">{escape(caption)}</text>')
        height += 20
    return els, height, width * UNIT


def render_svg(panels: list[tuple[LatticePath, dict | None, str | None]]) -> str:
    """Stack one or more ``(path, landmarks, caption)`` panels vertically."""
    body = []
    y = MARGIN
    max_w = 0
    for p, marks, caption in panels:
        els, h, w = _panel(p, MARGIN, y, marks, caption)
        body.extend(els)
        y += h + PANEL_GAP
        max_w = max(max_w, w)
    total_w = max_w + 2 * MARGIN
    total_h = y - PANEL_GAP + MARGIN
    style = (
        ".grid{stroke:#ddd;stroke-width:1}"
        ".axis{stroke:#888;stroke-width:1.2}"
        ".edge{stroke:#000;stroke-width:2.5;stroke-linecap:round}"
        ".pt{fill:#000}"
        ".mark{fill:none;stroke:#c00;stroke-width:1.5}"
        ".span{stroke:#06c;stroke-width:2}"
        ".lbl{font:12px sans-serif;fill:#c00}"
        ".cap{font:12px monospace;fill:#333}"
    )
    head = (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{total_w}" height="{total_h}" '
        f'viewBox="0 0 {total_w} {total_h}">'
    )
    return "\n".join([head, f"<style>{style}</style>", *body, "</svg>"]) + "\n"


def path_svg(p: LatticePath, landmarks: dict | None = None, caption: str | None = None) -> str:
    return render_svg([(p, landmarks, caption if caption is not None else str(p))])
