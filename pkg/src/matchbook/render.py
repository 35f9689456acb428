"""SVG arc diagrams: vertices on a horizontal spine, edges as semicircular
arcs colored by page, with pages 0 and 1 above the spine and page 2 below.
"""

from __future__ import annotations

from .embedding import BookEmbedding
from .graphs import Graph

PAGE_PALETTE = ("#d1495b", "#00798c", "#edae49")
_ABOVE = (True, True, False)  # per page

_STEP = 36
_MARGIN = 30


def render_svg(g: Graph, be: BookEmbedding) -> str:
    n = g.n
    pos = be.spine.position
    width = 2 * _MARGIN + _STEP * max(n - 1, 1)
    max_span = max((abs(pos[u] - pos[v]) for u, v in g.edges), default=1)
    depth = max_span * _STEP / 2 + 20
    mid = depth + 20
    height = mid + depth / 2 + 40

    def x(v: int) -> float:
        return _MARGIN + _STEP * pos[v]

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0f}" '
        f'height="{height:.0f}" viewBox="0 0 {width:.0f} {height:.0f}">',
        f'<line x1="{_MARGIN / 2}" y1="{mid}" x2="{width - _MARGIN / 2}" y2="{mid}" '
        'stroke="#888" stroke-width="1"/>',
    ]
    for e in sorted(g.edges):
        u, v = e
        page = be.pages[e]
        x1, x2 = sorted((x(u), x(v)))
        r = (x2 - x1) / 2
        sweep = 1 if _ABOVE[page % 3] else 0
        color = PAGE_PALETTE[page % 3]
        parts.append(
            f'<path d="M {x1:.1f} {mid} A {r:.1f} {r / 2:.1f} 0 0 {sweep} {x2:.1f} {mid}" '
            f'fill="none" stroke="{color}" stroke-width="1.6">'
            f'<title>{u}-{v} page {page}</title></path>'
        )
    for v in be.spine.order:
        parts.append(f'<circle cx="{x(v):.1f}" cy="{mid}" r="3.2" fill="#222"/>')
        parts.append(
            f'<text x="{x(v):.1f}" y="{mid + 16}" font-size="10" '
            f'text-anchor="middle" font-family="sans-serif">{v}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts)
