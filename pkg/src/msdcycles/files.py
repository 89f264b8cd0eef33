"""Plain-text digraph files: header line "n <count>", one arc "u v" per line.

Lines starting with '#' and blank lines are ignored.  Parse errors carry the
offending 1-based line number; duplicate arcs and self-loops are errors.
"""

from __future__ import annotations

from pathlib import Path

from .digraph import Digraph


class DigraphParseError(ValueError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}" if line > 0 else message)
        self.line = line


def parse_digraph(text: str) -> Digraph:
    n: int | None = None
    arcs: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n":
                raise DigraphParseError(
                    f"expected header 'n <count>', got {line!r}", lineno
                )
            try:
                n = int(parts[1])
            except ValueError:
                raise DigraphParseError(
                    f"vertex count {parts[1]!r} is not an integer", lineno
                ) from None
            if n < 0:
                raise DigraphParseError("vertex count must be >= 0", lineno)
            continue
        if len(parts) != 2:
            raise DigraphParseError(f"expected arc 'u v', got {line!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise DigraphParseError(f"non-integer arc {line!r}", lineno) from None
        if u == v:
            raise DigraphParseError(f"self-loop {u} {v} not allowed", lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise DigraphParseError(
                f"arc {u} {v} out of range for n={n}", lineno
            )
        if (u, v) in arcs:
            raise DigraphParseError(f"duplicate arc {u} {v}", lineno)
        arcs.add((u, v))
    if n is None:
        raise DigraphParseError("missing header 'n <count>'", 1)
    return Digraph.of(n, arcs)


def format_digraph(d: Digraph, comments: tuple[str, ...] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"n {d.n}")
    lines.extend(f"{u} {v}" for u, v in d.sorted_arcs())
    return "\n".join(lines) + "\n"


def load_digraph(path: str | Path) -> Digraph:
    return parse_digraph(Path(path).read_text(encoding="utf-8"))


def write_digraph(path: str | Path, d: Digraph, comments: tuple[str, ...] = ()) -> None:
    Path(path).write_text(format_digraph(d, comments), encoding="utf-8")
