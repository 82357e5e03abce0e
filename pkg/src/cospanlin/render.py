"""Pure-ASCII wire diagrams of 1-cell terms.

Strand ``k`` runs along row ``2k``; odd rows carry the diagonals.  Each
slice of the term is drawn in a five-column block, left to right, so
identical terms always give byte-identical pictures.
"""

from __future__ import annotations

from .freeterm import OneCellTerm, Slice, to_slices

BLOCK = 5


class _Canvas:
    def __init__(self, rows: int, cols: int):
        self.grid = [[" "] * cols for _ in range(rows)]

    def put(self, row: int, col: int, text: str):
        for k, ch in enumerate(text):
            self.grid[row][col + k] = ch

    def text(self) -> str:
        lines = ["".join(r).rstrip() for r in self.grid]
        return "\n".join(lines)


def _straight(c: _Canvas, x: int, k: int):
    c.put(2 * k, x, "-" * BLOCK)


def _up(c: _Canvas, x: int, k: int):
    """Strand ``k`` moves to position ``k - 1``."""
    c.put(2 * k, x, "-")
    c.put(2 * k - 1, x + 1, "/")
    c.put(2 * k - 2, x + 2, "---")


def _down(c: _Canvas, x: int, k: int):
    """Strand ``k`` moves to position ``k + 1``."""
    c.put(2 * k, x, "---")
    c.put(2 * k + 1, x + 3, "\\")
    c.put(2 * k + 2, x + 4, "-")


def _draw(c: _Canvas, x: int, sl: Slice):
    a, width = sl.left_pad, sl.domain
    for k in range(a):
        _straight(c, x, k)
    if sl.gen == "m":
        c.put(2 * a, x, "--+--")
        c.put(2 * a + 1, x + 1, "/")
        c.put(2 * a + 2, x, "-")
        for k in range(a + 2, width):
            _up(c, x, k)
    elif sl.gen == "d":
        c.put(2 * a, x, "--+--")
        c.put(2 * a + 1, x + 3, "\\")
        c.put(2 * a + 2, x + 4, "-")
        for k in range(a + 1, width):
            _down(c, x, k)
    elif sl.gen == "s":
        c.put(2 * a, x + 4, "o")
        for k in range(a, width):
            _down(c, x, k)
    else:
        c.put(2 * a, x, "o")
        for k in range(a + 1, width):
            _up(c, x, k)


def render(t: OneCellTerm) -> str:
    """ASCII drawing of ``t``; an empty string for the identity on 0."""
    form = to_slices(t)
    widths = [form.domain] + [s.codomain for s in form.slices]
    height = max(widths)
    if height == 0:
        return ""
    blocks = max(len(form.slices), 1)
    c = _Canvas(2 * height - 1, BLOCK * blocks)
    if not form.slices:
        for k in range(form.domain):
            _straight(c, 0, k)
    for i, sl in enumerate(form.slices):
        _draw(c, BLOCK * i, sl)
    return c.text()
