"""Plain-text game format: header "m n", then m rows of A, then m rows of B.

Entries are integers or fractions like ``-3/4``; ``#`` starts a comment.
"""

from __future__ import annotations

from .errors import GameFileError
from .games import BimatrixGame
from .linalg import rat


def parse_game(text: str) -> BimatrixGame:
    lines = []
    for raw in text.splitlines():
        body = raw.split("#", 1)[0].strip()
        if body:
            lines.append(body)
    if not lines:
        raise GameFileError("empty game file")
    head = lines[0].split()
    if len(head) != 2:
        raise GameFileError(f"header must be 'm n', got {lines[0]!r}")
    try:
        m, n = int(head[0]), int(head[1])
    except ValueError as exc:
        raise GameFileError(f"bad header {lines[0]!r}") from exc
    if m < 1 or n < 1:
        raise GameFileError("m and n must be positive")
    if len(lines) != 1 + 2 * m:
        raise GameFileError(
            f"expected {2 * m} payoff rows after the header, got {len(lines) - 1}"
        )

    def parse_row(line: str, label: str):
        parts = line.split()
        if len(parts) != n:
            raise GameFileError(f"{label}: expected {n} entries, got {len(parts)}")
        row = []
        for p in parts:
            try:
                row.append(rat(p))
            except (ValueError, ZeroDivisionError) as exc:
                raise GameFileError(f"{label}: bad entry {p!r}") from exc
        return row

    a = [parse_row(lines[1 + i], f"A row {i + 1}") for i in range(m)]
    b = [parse_row(lines[1 + m + i], f"B row {i + 1}") for i in range(m)]
    return BimatrixGame.from_payoffs(a, b)


def load_game(path: str) -> BimatrixGame:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise GameFileError(f"cannot read {path}: {exc}") from exc
    return parse_game(text)


def format_game(g: BimatrixGame, comment: str | None = None) -> str:
    out = []
    if comment:
        out.extend(f"# {line}" for line in comment.splitlines())
    out.append(f"{g.m} {g.n}")
    for row in g.A:
        out.append(" ".join(str(v) for v in row))
    for row in g.B:
        out.append(" ".join(str(v) for v in row))
    return "\n".join(out) + "\n"
