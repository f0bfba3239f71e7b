"""Deterministic SVG 1.1 output for squares, folded pieces and tiling patches.

Coordinates are exact until the very end; the decimals written to the file
are for display only.
"""
import colorsys

from .exact_field import qx_ceil, qx_floor


def _color(index):
    hue = (index * 0.618033988749895) % 1.0
    r, g, b = colorsys.hls_to_rgb(hue, 0.65, 0.55)
    return "#{:02x}{:02x}{:02x}".format(round(r * 255), round(g * 255), round(b * 255))


def _num(value, precision):
    text = f"{float(value):.{precision}g}"
    return "0" if text == "-0" else text


def render_svg(shapes, path=None, colors=None, outline=None, nodes=(),
               precision=12, scale=100):
    """Write polygons to ``path`` (or return the text when path is None).

    ``shapes`` is a list of vertex sequences; ``colors`` gives a color index
    per shape (default: its position). ``outline`` is an optional extra
    polygon drawn unfilled; ``nodes`` are points drawn as dots.
    """
    shapes = [list(s) for s in shapes]
    if not shapes:
        raise ValueError("nothing to render")
    if colors is None:
        colors = list(range(len(shapes)))
    pts = [v for s in shapes for v in s] + list(outline or []) + list(nodes)
    x0 = qx_floor(min(p[0] for p in pts))
    x1 = qx_ceil(max(p[0] for p in pts))
    y0 = qx_floor(min(p[1] for p in pts))
    y1 = qx_ceil(max(p[1] for p in pts))
    width, height = max(x1 - x0, 1), max(y1 - y0, 1)
    stroke = max(width, height) / 500

    def poly(verts):
        return " ".join(f"{_num(x, precision)},{_num(y, precision)}" for x, y in verts)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width * scale}" height="{height * scale}" '
        f'viewBox="{x0} {-y1} {width} {height}">',
        # y axis up
        f'<g transform="scale(1,-1)" stroke="#333333" stroke-width="{stroke:.6g}">',
    ]
    for verts, c in zip(shapes, colors):
        out.append(f'<polygon points="{poly(verts)}" fill="{_color(c)}"/>')
    if outline:
        out.append(f'<polygon points="{poly(outline)}" fill="none" stroke="#000000" '
                   f'stroke-width="{3 * stroke:.6g}"/>')
    for x, y in nodes:
        out.append(f'<circle cx="{_num(x, precision)}" cy="{_num(y, precision)}" '
                   f'r="{4 * stroke:.6g}" fill="#000000" stroke="none"/>')
    out.append("</g>")
    out.append("</svg>")
    text = "\n".join(out) + "\n"
    if path is None:
        return text
    with open(path, "w") as fh:
        fh.write(text)
    return text
