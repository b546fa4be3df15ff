"""Two-dimensional order-preserving matching.

Coordinates are ``(x, y)``: ``x`` is the column counted left to right and
``y`` the row counted top to bottom, both 1-based.  A match is reported by
the top-left corner of the matching block.

The direct matcher mirrors the 1D one: a witness table over all offsets
``(a, b)`` with ``0 <= a < w`` and ``-h < b < h``, a dueling stage that
leaves pairwise consistent candidates, and a sweep that verifies each
column of candidates on the serialized width-``w`` strip of the text.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .core import (
    Counter,
    PrevNext,
    cmp,
    is_order_isomorphic_bruteforce,
    prev_next_from_order,
    z_array,
    z_array_against,
)
from .match1d import (
    NO_WITNESS,
    Pattern1D,
    kmp_match_1d,
    match_1d,
    pick_partner,
    sweeping_stage,
)

Cell = tuple[int, int]
Witness2D = Optional[tuple[Cell, Cell]]


@dataclass(frozen=True)
class Matrix:
    width: int
    height: int
    cells: tuple[int, ...]  # row-major

    def __post_init__(self):
        if self.width < 0 or self.height < 0:
            raise ValueError("negative dimension")
        if len(self.cells) != self.width * self.height:
            raise ValueError(
                f"{len(self.cells)} cells for a {self.width}x{self.height} matrix"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "Matrix":
        rows = [tuple(r) for r in rows]
        width = len(rows[0]) if rows else 0
        if any(len(r) != width for r in rows):
            raise ValueError("ragged rows")
        return cls(width, len(rows), tuple(v for r in rows for v in r))

    def __getitem__(self, xy: Cell) -> int:
        x, y = xy
        if not (1 <= x <= self.width and 1 <= y <= self.height):
            raise IndexError(xy)
        return self.cells[(y - 1) * self.width + x - 1]

    def rows(self) -> list[tuple[int, ...]]:
        w = self.width
        return [self.cells[r * w : (r + 1) * w] for r in range(self.height)]

    def block(self, x: int, y: int, w: int, h: int) -> "Matrix":
        """Sub-block of size ``w`` x ``h`` with top-left corner ``(x, y)``."""
        cells, width = self.cells, self.width
        out: list[int] = []
        for r in range(y - 1, y - 1 + h):
            start = r * width + x - 1
            out.extend(cells[start : start + w])
        return Matrix(w, h, tuple(out))

    def flipped(self) -> "Matrix":
        """Rows in reverse order."""
        return Matrix.from_rows(self.rows()[::-1]) if self.height else self


def as_matrix(m) -> Matrix:
    return m if isinstance(m, Matrix) else Matrix.from_rows(m)


def serialize(m: Matrix) -> tuple[int, ...]:
    """Row-major flattening (left to right, top to bottom)."""
    return as_matrix(m).cells


def _column_strip(m: Matrix, x: int, w: int) -> tuple[int, ...]:
    # serialize(m.block(x, 1, w, m.height)) without building the block
    cells, width = m.cells, m.width
    out: list[int] = []
    for r in range(m.height):
        start = r * width + x - 1
        out.extend(cells[start : start + w])
    return tuple(out)


def _pos_to_cell(s: int, width: int) -> Cell:
    return ((s - 1) % width + 1, (s - 1) // width + 1)


@dataclass(frozen=True)
class Strip:
    """Overlap strips of a pattern against itself at horizontal offset ``a``.

    ``left`` serializes columns ``1..w-a`` and ``right`` columns
    ``a+1..w``; ``z[i]`` is the longest prefix of ``left`` that is
    order-isomorphic to ``right`` starting at ``i`` (1-based).
    """

    a: int
    width: int
    left: tuple[int, ...]
    right: tuple[int, ...]
    pn: PrevNext = field(repr=False)
    z: tuple[int, ...]


def _strip_order(p: Matrix, a: int, by_value: Sequence[int]) -> list[int]:
    # restrict a value-sorted list of serial positions of p to columns
    # 1..w-a, renumbered as serial positions of that strip
    w = p.width
    keep = w - a
    out = []
    for s in by_value:
        x = (s - 1) % w
        if x < keep:
            out.append((s - 1) // w * keep + x + 1)
    return out


def _value_order(p: Matrix) -> list[int]:
    cells = p.cells
    return sorted(range(1, len(cells) + 1), key=lambda s: cells[s - 1])


def strip_z(p, a: int, by_value: Sequence[int] | None = None) -> Strip:
    """Build the offset-``a`` strips of ``p`` and their Z-array.

    ``by_value`` is the value-sorted serial order of ``p``'s cells; pass it
    to avoid re-sorting for every ``a``.
    """
    p = as_matrix(p)
    if not 0 <= a < p.width:
        raise ValueError(f"offset {a} outside [0, {p.width})")
    if by_value is None:
        by_value = _value_order(p)
    keep = p.width - a
    left = _column_strip(p, 1, keep)
    right = _column_strip(p, a + 1, keep)
    pn = prev_next_from_order(left, _strip_order(p, a, by_value))
    z = z_array_against(left, pn, z_array(left, pn), right)
    return Strip(a, keep, left, right, pn, z)


def witness_at(p, a: int, b: int, strip: Strip | None = None) -> Witness2D:
    """Witness pair for offset ``(a, b)`` or ``NO_WITNESS``.

    For ``b >= 0`` the value is read off ``strip`` (built from ``p`` when
    omitted).  For ``b < 0`` the pattern is flipped upside down, where the
    offset becomes ``(a, -b)``; ``strip`` must then come from the flipped
    pattern.
    """
    p = as_matrix(p)
    h = p.height
    if not -h < b < h:
        raise ValueError(f"offset {b} outside (-{h}, {h})")
    if b < 0:
        if strip is None:
            strip = strip_z(p.flipped(), a)
        return _unflip(_strip_witness(strip, h, -b), h)
    if strip is None:
        strip = strip_z(p, a)
    return _strip_witness(strip, h, b)


def _unflip(pair: Witness2D, h: int) -> Witness2D:
    if pair is NO_WITNESS:
        return NO_WITNESS
    (ix, iy), (jx, jy) = pair
    return ((ix, h + 1 - iy), (jx, h + 1 - jy))


def _strip_witness(strip: Strip, h: int, b: int) -> Witness2D:
    width = strip.width
    shift = b * width
    z = strip.z[shift]
    if z == width * (h - b):
        return NO_WITNESS
    j = z + 1
    i = pick_partner(strip.left, strip.pn, strip.right, shift, j)
    return (_pos_to_cell(i, width), _pos_to_cell(j, width))


class WitnessTable2D:
    """Witness pairs for every offset ``(a, b)``, ``0 <= a < w``, ``|b| < h``.

    ``table[a, b]`` is a pair of ``(x, y)`` cells or ``NO_WITNESS``;
    ``table.z[a, b]`` keeps the prefix length the entry was derived from.
    """

    def __init__(self, p):
        p = as_matrix(p)
        self.width = w = p.width
        self.height = h = p.height
        self._wit: dict[Cell, Witness2D] = {}
        self.z: dict[Cell, int] = {}
        flipped = p.flipped()
        order = _value_order(p)
        order_flipped = _value_order(flipped)
        for a in range(w):
            down = strip_z(p, a, order)
            up = strip_z(flipped, a, order_flipped)
            for b in range(h):
                self._wit[a, b] = _strip_witness(down, h, b)
                self.z[a, b] = down.z[b * down.width]
                if b:
                    self._wit[a, -b] = _unflip(_strip_witness(up, h, b), h)
                    self.z[a, -b] = up.z[b * up.width]

    def __getitem__(self, ab: Cell) -> Witness2D:
        return self._wit[ab]

    def items(self):
        return self._wit.items()


def witness_table_2d(p) -> WitnessTable2D:
    return WitnessTable2D(p)


@dataclass
class Pattern2D:
    """Pattern preprocessed for 2D matching."""

    matrix: Matrix
    wit: WitnessTable2D = field(repr=False)
    serial: Pattern1D = field(repr=False)

    @classmethod
    def build(cls, p) -> "Pattern2D":
        p = as_matrix(p)
        if p.width == 0 or p.height == 0:
            raise ValueError("pattern must be non-empty")
        return cls(p, WitnessTable2D(p), Pattern1D.build(p.cells))

    @property
    def width(self) -> int:
        return self.matrix.width

    @property
    def height(self) -> int:
        return self.matrix.height


def _as_pattern(p) -> Pattern2D:
    return p if isinstance(p, Pattern2D) else Pattern2D.build(p)


def _loser(t: Matrix, pat: Pattern2D, first: Cell, second: Cell) -> Cell:
    # `second` lies at offset (a, b) from `first`, a >= 0
    a = second[0] - first[0]
    b = second[1] - first[1]
    (ix, iy), (jx, jy) = pat.wit[a, b]
    p = pat.matrix
    # cell (x, y) of a row-major matrix of width W is cells[(y-1)*W + x-1]
    cells, width = t.cells, t.width
    corner = (second[1] - 2) * width + second[0] - 2
    u = cells[corner + iy * width + ix]
    v = cells[corner + jy * width + jx]
    if cmp(u, v) != cmp(p[ix, iy], p[jx, jy]):
        return second
    return first


def dueling_stage_2d(t, p, counter: Counter | None = None) -> list[Cell]:
    """Prune candidates to a pairwise consistent set containing every match.

    First a stack scan down each column, as in 1D, then every pair of
    overlapping survivors in different columns is dueled once.  The second
    pass costs O(w*h) lookups per candidate.
    """
    t = as_matrix(t)
    pat = _as_pattern(p)
    w, h = pat.width, pat.height
    cols = t.width - w + 1
    rows = t.height - h + 1
    if cols <= 0 or rows <= 0:
        return []
    wit = pat.wit
    duels = 0
    alive = [[False] * (rows + 1) for _ in range(cols + 1)]
    for x in range(1, cols + 1):
        stack: list[int] = []
        for y in range(1, rows + 1):
            keep = True
            while stack:
                top = stack[-1]
                b = y - top
                if b >= h or wit[0, b] is NO_WITNESS:
                    break
                duels += 1
                if _loser(t, pat, (x, top), (x, y)) == (x, y):
                    keep = False
                    break
                stack.pop()
            if keep:
                stack.append(y)
        for y in stack:
            alive[x][y] = True

    for x in range(2, cols + 1):
        for y in range(1, rows + 1):
            if not alive[x][y]:
                continue
            for x0 in range(max(1, x - w + 1), x):
                col = alive[x0]
                for y0 in range(max(1, y - h + 1), min(rows, y + h - 1) + 1):
                    if not col[y0] or wit[x - x0, y - y0] is NO_WITNESS:
                        continue
                    duels += 1
                    if _loser(t, pat, (x0, y0), (x, y)) == (x, y):
                        alive[x][y] = False
                        break
                    col[y0] = False
                if not alive[x][y]:
                    break
    if counter is not None:
        counter.comparisons += duels
        counter.duels += duels
    return [(x, y) for x in range(1, cols + 1) for y in range(1, rows + 1) if alive[x][y]]


def sweeping_stage_2d(t, p, candidates: Iterable[Cell], counter: Counter | None = None) -> list[Cell]:
    """Verify pairwise consistent candidates column by column.

    Candidates in column ``x`` sit at serial positions ``w*(y-1)+1`` of the
    serialized strip ``t[x:x+w-1, 1:H]``, and vertical consistency is 1D
    consistency of the serialized pattern there, so the 1D sweep applies.
    """
    t = as_matrix(t)
    pat = _as_pattern(p)
    w = pat.width
    by_column: dict[int, list[int]] = {}
    for x, y in candidates:
        by_column.setdefault(x, []).append(y)
    out: list[Cell] = []
    for x in sorted(by_column):
        ys = sorted(by_column[x])
        strip = _column_strip(t, x, w)
        found = sweeping_stage(strip, pat.serial, [w * (y - 1) + 1 for y in ys], counter)
        out.extend((x, (s - 1) // w + 1) for s in found)
    return out


def match_2d(t, p, counter: Counter | None = None) -> list[Cell]:
    """Occurrences of ``p`` in ``t`` by duel-and-sweep, sorted by (x, y)."""
    t = as_matrix(t)
    pat = _as_pattern(p)
    survivors = dueling_stage_2d(t, pat, counter)
    return sweeping_stage_2d(t, pat, survivors, counter)


def match_2d_reduction(t, p, counter: Counter | None = None, engine: str = "duel") -> list[Cell]:
    """Occurrences found by 1D matching on each serialized column strip.

    Only serial matches at row boundaries ``w*(y-1)+1`` are occurrences.
    ``engine`` picks the 1D matcher: ``"duel"`` or ``"kmp"``.
    """
    if engine not in ("duel", "kmp"):
        raise ValueError(f"unknown engine {engine!r}")
    t = as_matrix(t)
    if isinstance(p, Pattern2D):
        p, serial = p.matrix, p.serial
    else:
        p = as_matrix(p)
        serial = None
    w, h = p.width, p.height
    if w == 0 or h == 0:
        raise ValueError("pattern must be non-empty")
    if w > t.width or h > t.height:
        return []
    if serial is None:
        serial = Pattern1D.build(p.cells)
    run = match_1d if engine == "duel" else kmp_match_1d
    last = t.height - h + 1
    out: list[Cell] = []
    for x in range(1, t.width - w + 2):
        for s in run(_column_strip(t, x, w), serial, counter):
            if (s - 1) % w == 0 and (s - 1) // w < last:
                out.append((x, (s - 1) // w + 1))
    return out


def naive_match_2d(t, p, counter: Counter | None = None) -> list[Cell]:
    """Reference matcher: all-pairs check of every serialized window."""
    t = as_matrix(t)
    p = as_matrix(p)
    w, h = p.width, p.height
    if w == 0 or h == 0:
        raise ValueError("pattern must be non-empty")
    return [
        (x, y)
        for x in range(1, t.width - w + 2)
        for y in range(1, t.height - h + 2)
        if is_order_isomorphic_bruteforce(p.cells, t.block(x, y, w, h).cells, counter)
    ]
