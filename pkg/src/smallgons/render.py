"""SVG drawings: dashed polygon boundary, solid unit-distance (diameter graph) edges."""

from __future__ import annotations

from .geometry import DEFAULT_TOL, Polygon, ToleranceConfig, diameter_graph

SCALE = 400.0  # pixels per unit of diameter
MARGIN = 0.05


def render_svg(
    poly: Polygon,
    show_diameter_graph: bool = True,
    tol: ToleranceConfig = DEFAULT_TOL,
    title: str | None = None,
) -> str:
    xs = [v.x for v in poly]
    ys = [v.y for v in poly]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    pad = MARGIN * max(x1 - x0, y1 - y0)
    x0, x1, y0, y1 = x0 - pad, x1 + pad, y0 - pad, y1 + pad
    width, height = SCALE * (x1 - x0), SCALE * (y1 - y0)

    def px(v):
        # flip y so the polygon is drawn the right way up
        return f"{SCALE * (v.x - x0):.3f},{SCALE * (y1 - v.y):.3f}"

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.3f}" height="{height:.3f}" '
        f'viewBox="0 0 {width:.3f} {height:.3f}">'
    ]
    if title:
        out.append(f"  <title>{title}</title>")
    out.append(
        f'  <polygon class="boundary" points="{" ".join(px(v) for v in poly)}" '
        'fill="none" stroke="black" stroke-width="1" stroke-dasharray="4,3"/>'
    )
    if show_diameter_graph:
        for i, j in diameter_graph(poly, tol):
            a, b = poly[i], poly[j]
            (ax, ay), (bx, by) = (px(a).split(","), px(b).split(","))
            out.append(
                f'  <line class="diameter" x1="{ax}" y1="{ay}" x2="{bx}" y2="{by}" '
                'stroke="blue" stroke-width="1.5"/>'
            )
    out.append("</svg>")
    return "\n".join(out) + "\n"
