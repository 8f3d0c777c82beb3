"""ASCII box drawing shared by tableaux, ribbon tableaux and rigged
configurations.

Rows are left justified.  The separator between two consecutive rows is
wide enough to close off whichever row is longer:

    +---+---+
    | 1 | 2 |
    +---+---+
    | 3 |
    +---+
"""

from __future__ import annotations


def boxed_rows(rows: list[list[str]], suffixes: list[str] | None = None) -> str:
    """Render left-justified rows of cell labels as a boxed diagram.

    An optional suffix is printed to the right of each cell row, which
    rigged configurations use for their rigging numbers.
    """
    if not rows:
        return "(empty)"
    width = max((len(s) for row in rows for s in row), default=1)
    cell = width + 2

    def border(n: int) -> str:
        return "+" + ("-" * cell + "+") * n

    lines: list[str] = [border(len(rows[0]))]
    for i, row in enumerate(rows):
        body = "|" + "|".join(f" {s:>{width}} " for s in row) + "|"
        if suffixes and suffixes[i]:
            body += " " + suffixes[i]
        lines.append(body)
        next_len = len(rows[i + 1]) if i + 1 < len(rows) else 0
        lines.append(border(max(len(row), next_len)))
    return "\n".join(lines)
