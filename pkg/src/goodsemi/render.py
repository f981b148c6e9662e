"""Deterministic renderings of boxed ideals as marker grids.

Members are filled markers ('*' in text, black circles in SVG),
non-members open ones ('o', white circles).  The vertical axis points
upward.  Output is a pure function of (ideal, window, format): byte
identical across runs and platforms.
"""

from __future__ import annotations


def render_grid(rep, window, fmt="text"):
    if fmt not in ("text", "svg"):
        raise ValueError(f"unknown format {fmt!r} (use text or svg)")
    if rep.branches > 2:
        return render_listing(rep, window)
    if fmt == "text":
        return render_text(rep, window)
    return render_svg(rep, window)


def render_listing(rep, window):
    """Fallback for more than two branches: one member per line."""
    lines = [format_header(rep, window)]
    lines.extend(
        ",".join(str(c) for c in p) for p in rep.members_within(window.lo, window.hi)
    )
    return "\n".join(lines) + "\n"


def format_header(rep, window):
    return (
        f"# branches={rep.branches} mu={rep.mu} gamma={rep.gamma} "
        f"window=[{window.lo}..{window.hi}]"
    )


def render_text(rep, window):
    lo, hi = window.lo, window.hi
    xs = range(lo[0], hi[0] + 1)
    if rep.branches == 1:
        ys = [None]
    else:
        ys = range(hi[1], lo[1] - 1, -1)
    cell = max(len(str(x)) for x in xs) + 1
    ywidth = 0 if rep.branches == 1 else max(len(str(y)) for y in ys)
    lines = []
    for y in ys:
        row = []
        for x in xs:
            p = (x,) if y is None else (x, y)
            row.append(("*" if rep.contains(p) else "o").rjust(cell))
        label = "" if y is None else str(y).rjust(ywidth)
        lines.append(f"{label} |" + "".join(row))
    lines.append(" " * ywidth + " +" + "-" * (cell * len(list(xs))))
    lines.append(" " * ywidth + "  " + "".join(str(x).rjust(cell) for x in xs))
    return "\n".join(lines) + "\n"


_SVG_CELL = 18
_SVG_R = 5
_SVG_PAD = 24


def render_svg(rep, window):
    if rep.branches > 2:
        raise ValueError("svg rendering supports one or two branches")
    lo, hi = window.lo, window.hi
    nx = hi[0] - lo[0] + 1
    ny = 1 if rep.branches == 1 else hi[1] - lo[1] + 1
    width = 2 * _SVG_PAD + (nx - 1) * _SVG_CELL + 12
    height = 2 * _SVG_PAD + (ny - 1) * _SVG_CELL + 12

    def cx(x):
        return _SVG_PAD + (x - lo[0]) * _SVG_CELL

    def cy(y):
        return height - _SVG_PAD - (y - (lo[1] if rep.branches == 2 else 0)) * _SVG_CELL

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">',
        f'<line x1="{cx(lo[0]) - 12}" y1="{cy(0 if rep.branches == 1 else lo[1])}" '
        f'x2="{cx(hi[0]) + 12}" y2="{cy(0 if rep.branches == 1 else lo[1])}" '
        'stroke="black" stroke-width="1"/>',
    ]
    if rep.branches == 2:
        parts.append(
            f'<line x1="{cx(lo[0]) - 12}" y1="{cy(lo[1]) + 12}" '
            f'x2="{cx(lo[0]) - 12}" y2="{cy(hi[1]) - 12}" '
            'stroke="black" stroke-width="1"/>'
        )
    for y in range(lo[1], hi[1] + 1) if rep.branches == 2 else [None]:
        for x in range(lo[0], hi[0] + 1):
            p = (x,) if y is None else (x, y)
            fill = "black" if rep.contains(p) else "white"
            parts.append(
                f'<circle cx="{cx(x)}" cy="{cy(0 if y is None else y)}" '
                f'r="{_SVG_R}" fill="{fill}" stroke="black" stroke-width="1"/>'
            )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
