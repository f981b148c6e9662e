"""Matplotlib figures for the report path of the CLI.

These mirror the text/SVG grid conventions (filled members, open
non-members, vertical axis upward) but go through matplotlib so the
output drops into documents and notebooks; byte-level stability across
matplotlib versions is not promised here, use render_svg for that.
"""

from __future__ import annotations


def save_figure(rep, window, path, title=None):
    from matplotlib.figure import Figure

    lo, hi = window.lo, window.hi
    fig = Figure(figsize=(max(3.0, 0.3 * (hi[0] - lo[0] + 3)),
                          max(1.2, 0.3 * ((hi[1] - lo[1] + 3) if rep.branches == 2 else 3))))
    ax = fig.add_subplot(111)
    filled_x, filled_y, open_x, open_y = [], [], [], []
    ys = range(lo[1], hi[1] + 1) if rep.branches == 2 else [0]
    for y in ys:
        for x in range(lo[0], hi[0] + 1):
            p = (x,) if rep.branches == 1 else (x, y)
            if rep.contains(p):
                filled_x.append(x)
                filled_y.append(y)
            else:
                open_x.append(x)
                open_y.append(y)
    ax.scatter(open_x, open_y, s=36, facecolors="none", edgecolors="black")
    ax.scatter(filled_x, filled_y, s=36, facecolors="black", edgecolors="black")
    ax.set_aspect("equal")
    ax.set_xlim(lo[0] - 1, hi[0] + 1)
    if rep.branches == 2:
        ax.set_ylim(lo[1] - 1, hi[1] + 1)
    else:
        ax.set_ylim(-1, 1)
        ax.get_yaxis().set_visible(False)
    for spine in ("top", "right"):
        ax.spines[spine].set_visible(False)
    if title:
        ax.set_title(title)
    fig.tight_layout()
    metadata = {"Date": None} if str(path).endswith(".svg") else None
    fig.savefig(path, metadata=metadata)
    return path
