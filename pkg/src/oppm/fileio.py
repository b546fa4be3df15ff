"""Plain-text sequence and matrix files.

A sequence file holds whitespace-separated signed integers.  A matrix file
starts with a ``w h`` line followed by ``h`` lines of ``w`` integers.
"""

from __future__ import annotations

from pathlib import Path

from .match2d import Matrix


class ParseError(ValueError):
    def __init__(self, path, line: int, message: str):
        super().__init__(f"{path}:{line}: {message}")
        self.path = path
        self.line = line


def _ints(path, lineno: int, text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split()]
    except ValueError as exc:
        raise ParseError(path, lineno, str(exc)) from None


def read_sequence(path) -> list[int]:
    out: list[int] = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            out.extend(_ints(path, lineno, line))
    return out


def read_matrix(path) -> Matrix:
    with open(path, encoding="utf-8") as fh:
        lines = [(n, line) for n, line in enumerate(fh, 1) if line.strip()]
    if not lines:
        raise ParseError(path, 1, "missing 'w h' header")
    lineno, header = lines[0]
    dims = _ints(path, lineno, header)
    if len(dims) != 2 or min(dims) < 0:
        raise ParseError(path, lineno, "header must be two non-negative integers 'w h'")
    w, h = dims
    body = lines[1:]
    if len(body) != h:
        where = body[h][0] if len(body) > h else lineno + len(body)
        raise ParseError(path, where, f"expected {h} rows, found {len(body)}")
    cells: list[int] = []
    for n, line in body:
        row = _ints(path, n, line)
        if len(row) != w:
            raise ParseError(path, n, f"expected {w} values, found {len(row)}")
        cells.extend(row)
    return Matrix(w, h, tuple(cells))


def write_sequence(path, seq) -> None:
    Path(path).write_text(" ".join(map(str, seq)) + "\n", encoding="utf-8")


def write_matrix(path, m: Matrix) -> None:
    lines = [f"{m.width} {m.height}"]
    lines += [" ".join(map(str, row)) for row in m.rows()]
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")
