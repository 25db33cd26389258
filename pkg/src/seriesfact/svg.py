"""Static SVG drawing of a Newton polygon."""

from __future__ import annotations

from .newton import NewtonPolygon

_W, _H, _PAD = 480, 320, 32


def polygon_svg(points, poly: NewtonPolygon) -> str:
    xs = [p[0] for p in points] or [0]
    ys = [p[1] for p in points] or [0]
    x0, x1 = min(0, min(xs)), max(max(xs), 1)
    y0, y1 = min(0, min(ys)), max(max(ys), 1)

    def sx(x):
        return _PAD + (x - x0) * (_W - 2 * _PAD) / (x1 - x0)

    def sy(y):
        return _H - _PAD - (y - y0) * (_H - 2 * _PAD) / (y1 - y0)

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_W}" height="{_H}" viewBox="0 0 {_W} {_H}">',
        f'<line x1="{sx(x0)}" y1="{sy(0)}" x2="{sx(x1)}" y2="{sy(0)}" stroke="#999"/>',
        f'<line x1="{sx(0)}" y1="{sy(y0)}" x2="{sx(0)}" y2="{sy(y1)}" stroke="#999"/>',
    ]
    for x, y in points:
        out.append(f'<circle cx="{sx(x):.1f}" cy="{sy(y):.1f}" r="3" fill="#444"/>')
    for e in poly.edges:
        dash = ' stroke-dasharray="6 4"' if poly.censored and e is poly.edges[-1] else ""
        out.append(
            f'<line x1="{sx(e.start[0]):.1f}" y1="{sy(e.start[1]):.1f}" '
            f'x2="{sx(e.end[0]):.1f}" y2="{sy(e.end[1]):.1f}" stroke="#c33" stroke-width="2"{dash}/>'
        )
    out.append(f'<text x="{_PAD}" y="16" font-size="12">window {poly.window}'
               f'{" (censored)" if poly.censored else ""}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
