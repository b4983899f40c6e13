"""Two-row pictures of linkings: plain text, SVG, and matplotlib figures.

Left vertices sit on the top row and right vertices on the bottom row, as in
the usual diagram-monoid pictures.  Output is a pure function of the
linking, so text and SVG renders can be compared byte for byte.
"""
from __future__ import annotations

from .linking import Link, Linking

_PITCH = 3
_MARGIN = 3


def _col(i: int) -> int:
    return _MARGIN + _PITCH * i


def _is_vertical(link: Link) -> bool:
    return len(link.left) == 1 and link.right == link.left


def _loop_badge(k: int) -> str:
    return f"({k} loop{'s' if k != 1 else ''})"


def render_ascii(L: Linking) -> str:
    """Text picture; one horizontal track per link that is not a straight vertical.

    ``+`` marks where a foot meets its link's track, ``*`` a link with a
    single vertex, ``:`` a downward stroke sharing a column with an upward one.
    """
    m, n = L.left.size, L.right.size
    tracked = [l for l in L.links if not _is_vertical(l)]
    height = max(len(tracked), 1) + 2
    width = _col(max(m, n, 1)) + 1
    grid = [[" "] * width for _ in range(height)]
    bottom = height - 1
    grid[0][0], grid[bottom][0] = "X", "Y"
    for i in range(m):
        grid[0][_col(i)] = "o"
    for j in range(n):
        grid[bottom][_col(j)] = "o"
    for l in L.links:
        if _is_vertical(l):
            for r in range(1, bottom):
                grid[r][_col(l.left[0])] = "|"
    for t, l in enumerate(tracked):
        r = 1 + t
        cols = [_col(i) for i in l.left] + [_col(j) for j in l.right]
        for c in range(min(cols), max(cols) + 1):
            if grid[r][c] == " ":
                grid[r][c] = "-"
    for t, l in enumerate(tracked):
        r = 1 + t
        for i in l.left:
            for rr in range(1, r):
                grid[rr][_col(i)] = "|"
    for t, l in enumerate(tracked):
        r = 1 + t
        for j in l.right:
            for rr in range(r + 1, bottom):
                c = _col(j)
                grid[rr][c] = ":" if grid[rr][c] == "|" else "|"
    for t, l in enumerate(tracked):
        r = 1 + t
        mark = "*" if l.size == 1 else "+"
        for c in [_col(i) for i in l.left] + [_col(j) for j in l.right]:
            grid[r][c] = mark
    lines = ["".join(row).rstrip() for row in grid]
    if L.loops:
        lines.append(_loop_badge(L.loops))
    return "\n".join(lines) + "\n"


# -- geometry shared by the SVG and matplotlib renderers --------------------

_DX = 40.0
_TOP = 30.0
_BOTTOM = 150.0
_MID = (_TOP + _BOTTOM) / 2


def _x(i: int) -> float:
    return 30.0 + _DX * i


def _layout(L: Linking):
    """Drawing primitives: ('line', x1, y1, x2, y2), ('curve', ...), ('node', x, y)."""
    prims = []
    for l in L.links:
        feet = [(_x(i), _TOP) for i in l.left] + [(_x(j), _BOTTOM) for j in l.right]
        if l.size == 2:
            (x1, y1), (x2, y2) = feet
            if y1 != y2:
                prims.append(("line", x1, y1, x2, y2))
            else:
                # cup under the top row or cap over the bottom row
                depth = min(50.0, 14.0 + 0.25 * abs(x2 - x1))
                ctrl = y1 + depth if y1 == _TOP else y1 - depth
                prims.append(("curve", x1, y1, x1, ctrl, x2, ctrl, x2, y2))
            continue
        cx = sum(x for x, _ in feet) / len(feet)
        if l.left and l.right:
            cy = _MID
        elif l.left:
            cy = _TOP + 35.0
        else:
            cy = _BOTTOM - 35.0
        for x, y in feet:
            prims.append(("line", cx, cy, x, y))
        prims.append(("node", cx, cy))
    return prims


def _canvas(L: Linking) -> tuple[float, float]:
    width = _x(max(L.left.size, L.right.size, 1)) + (70.0 if L.loops else 10.0)
    return width, _BOTTOM + 30.0


def _f(v: float) -> str:
    return f"{v:.1f}"


def render_svg(L: Linking) -> str:
    width, height = _canvas(L)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_f(width)}" height="{_f(height)}" viewBox="0 0 {_f(width)} {_f(height)}">',
        '<g fill="none" stroke="black" stroke-width="1.5">',
    ]
    nodes = []
    for p in _layout(L):
        if p[0] == "line":
            out.append(f'<line x1="{_f(p[1])}" y1="{_f(p[2])}" x2="{_f(p[3])}" y2="{_f(p[4])}"/>')
        elif p[0] == "curve":
            x1, y1, c1x, c1y, c2x, c2y, x2, y2 = map(_f, p[1:])
            out.append(f'<path d="M {x1} {y1} C {c1x} {c1y} {c2x} {c2y} {x2} {y2}"/>')
        else:
            nodes.append(p)
    out.append("</g>")
    out.append('<g fill="white" stroke="black" stroke-width="1.5">')
    for _, x, y in nodes:
        out.append(f'<circle cx="{_f(x)}" cy="{_f(y)}" r="5.0"/>')
    out.append("</g>")
    out.append('<g fill="black">')
    for i in range(L.left.size):
        out.append(f'<circle cx="{_f(_x(i))}" cy="{_f(_TOP)}" r="3.5"/>')
    for j in range(L.right.size):
        out.append(f'<circle cx="{_f(_x(j))}" cy="{_f(_BOTTOM)}" r="3.5"/>')
    out.append("</g>")
    if L.loops:
        lx = width - 40.0
        out.append(f'<circle cx="{_f(lx)}" cy="{_f(_MID)}" r="9.0" fill="none" '
                   f'stroke="black" stroke-width="1.5"/>')
        out.append(f'<text x="{_f(lx)}" y="{_f(_MID + 26.0)}" font-family="monospace" '
                   f'font-size="11" text-anchor="middle">{_loop_badge(L.loops)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_figure(L: Linking, path: str, dpi: int = 150) -> None:
    """Write the picture to ``path`` with matplotlib (format from the suffix)."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    from matplotlib.patches import Circle, PathPatch
    from matplotlib.path import Path as MPath

    width, height = _canvas(L)
    fig, ax = plt.subplots(figsize=(width / 60.0, height / 60.0))
    ax.set_xlim(0, width)
    ax.set_ylim(height, 0)
    ax.set_aspect("equal")
    ax.axis("off")
    for p in _layout(L):
        if p[0] == "line":
            ax.plot([p[1], p[3]], [p[2], p[4]], color="black", lw=1.2, zorder=1)
        elif p[0] == "curve":
            verts = [(p[1], p[2]), (p[3], p[4]), (p[5], p[6]), (p[7], p[8])]
            codes = [MPath.MOVETO, MPath.CURVE4, MPath.CURVE4, MPath.CURVE4]
            ax.add_patch(PathPatch(MPath(verts, codes), fill=False, lw=1.2, zorder=1))
        else:
            ax.add_patch(Circle((p[1], p[2]), 5.0, facecolor="white",
                                edgecolor="black", lw=1.2, zorder=2))
    for i in range(L.left.size):
        ax.add_patch(Circle((_x(i), _TOP), 3.5, color="black", zorder=3))
    for j in range(L.right.size):
        ax.add_patch(Circle((_x(j), _BOTTOM), 3.5, color="black", zorder=3))
    if L.loops:
        lx = width - 40.0
        ax.add_patch(Circle((lx, _MID), 9.0, fill=False, lw=1.2))
        ax.text(lx, _MID + 26.0, _loop_badge(L.loops), ha="center",
                va="center", family="monospace", fontsize=7)
    fig.savefig(path, dpi=dpi, bbox_inches="tight")
    plt.close(fig)
