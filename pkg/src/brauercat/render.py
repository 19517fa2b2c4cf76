"""
Deterministic text renderings of diagrams.

ASCII pictures use rows of `*` for the vertex rows and `/ \\ | ( )` for
threads: straight strands are bars, slanted strands are slash staircases,
and cap/cup arcs converge as slashes closed off by a parenthesis pair.
The TikZ style emits a standalone document with one node per vertex and
Bezier arcs.  Both styles depend only on the canonical form of the
diagram, so equal diagrams always render to identical bytes.
"""

from __future__ import annotations

from .diagrams import BOTTOM, TOP, Diagram

_SPACING = 4


def _arc_cells(ca: int, cb: int) -> tuple[list[tuple[int, int, str]], int]:
    """Cells for an arc between columns ca < cb at rows 1, 2, ...

    Slash pairs step inward until two columns apart, then a parenthesis
    pair closes the arc.  Returns (cells, depth).
    """
    cells = []
    r = 0
    while True:
        r += 1
        left, right = ca + r, cb - r
        if right - left == 2:
            cells.append((r, left, "("))
            cells.append((r, right, ")"))
            return cells, r
        cells.append((r, left, "\\"))
        cells.append((r, right, "/"))


def render_ascii(d: Diagram) -> str:
    """Plain-text picture of a diagram.

    >>> from .diagrams import identity
    >>> print(render_ascii(identity(2)))
    *   *
    |   |
    |   |
    |   |
    *   *
    """
    m, n = d.top, d.bottom
    ncols = (max(m, n, 1) - 1) * _SPACING + 1

    def col(i: int) -> int:
        return (i - 1) * _SPACING

    caps = [(col(a[1]), col(b[1])) for a, b in d.pairs if a[0] == TOP and b[0] == TOP]
    cups = [(col(a[1]), col(b[1])) for a, b in d.pairs if a[0] == BOTTOM and b[0] == BOTTOM]
    throughs = [(col(a[1]), col(b[1])) for a, b in d.pairs if a[0] == TOP and b[0] == BOTTOM]

    cap_cells = [_arc_cells(ca, cb) for ca, cb in caps]
    cup_cells = [_arc_cells(ca, cb) for ca, cb in cups]
    cap_depth = max((depth for _, depth in cap_cells), default=0)
    cup_depth = max((depth for _, depth in cup_cells), default=0)
    height = max(3, cap_depth + cup_depth + 1)

    grid = [[" "] * ncols for _ in range(height + 2)]
    for i in range(1, m + 1):
        grid[0][col(i)] = "*"
    for j in range(1, n + 1):
        grid[height + 1][col(j)] = "*"

    for cells, _ in cap_cells:
        for r, c, ch in cells:
            grid[r][c] = ch
    flip = {"\\": "/", "/": "\\"}
    for cells, _ in cup_cells:
        for r, c, ch in cells:
            grid[height + 1 - r][c] = flip.get(ch, ch)
    for ci, cj in throughs:
        prev = ci
        for r in range(1, height + 1):
            cur = round(ci + (cj - ci) * r / height)
            if cur == prev:
                grid[r][cur] = "|"
            elif cur > prev:
                for c in range(prev + 1, cur + 1):
                    grid[r][c] = "\\"
            else:
                for c in range(cur, prev):
                    grid[r][c] = "/"
            prev = cur

    return "\n".join("".join(row).rstrip() for row in grid).strip("\n")


def render_tikz(d: Diagram) -> str:
    """Standalone TikZ document with vertex nodes and Bezier threads."""
    m, n = d.top, d.bottom
    lines = [
        r"\documentclass[tikz]{standalone}",
        r"\begin{document}",
        r"\begin{tikzpicture}[vertex/.style={circle, fill, inner sep=1.2pt}]",
    ]
    for i in range(1, m + 1):
        lines.append(rf"  \node[vertex] (t{i}) at ({i - 1}, 1.5) {{}};")
    for j in range(1, n + 1):
        lines.append(rf"  \node[vertex] (b{j}) at ({j - 1}, 0) {{}};")
    for a, b in d.pairs:
        if a[0] == TOP and b[0] == TOP:
            h = 0.4 + 0.3 * (b[1] - a[1])
            lines.append(rf"  \draw (t{a[1]}) .. controls +(0,{-h:.2f}) and +(0,{-h:.2f}) .. (t{b[1]});")
        elif a[0] == BOTTOM and b[0] == BOTTOM:
            h = 0.4 + 0.3 * (b[1] - a[1])
            lines.append(rf"  \draw (b{a[1]}) .. controls +(0,{h:.2f}) and +(0,{h:.2f}) .. (b{b[1]});")
        else:
            lines.append(rf"  \draw (t{a[1]}) .. controls +(0,-0.6) and +(0,0.6) .. (b{b[1]});")
    lines.append(r"\end{tikzpicture}")
    lines.append(r"\end{document}")
    return "\n".join(lines)
