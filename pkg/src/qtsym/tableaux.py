"""Semistandard tableaux, the charge statistic, Kostka polynomials.

Diagrams are drawn in English notation: row 1 on top, rows left
justified.  The reading word concatenates rows left to right starting
from the bottom row.  Charge follows the cyclic subword extraction rule:
repeatedly extract a standard subword (scan for the rightmost 1, then for
each next letter scan leftward, wrapping around), score each extracted
word, and sum the scores.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence

from .coeffs import ONE, T, ZERO, Coeff
from .errors import TableauError
from .partitions import Partition, horizontal_strip_extensions
from .render import boxed_rows


class Tableau:
    """A semistandard filling of a partition shape with positive integers."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Sequence[int]]):
        rows = tuple(tuple(int(x) for x in row) for row in rows)
        lengths = [len(r) for r in rows]
        if any(x <= 0 for row in rows for x in row):
            raise TableauError("entries must be positive integers")
        if any(lengths[i] < lengths[i + 1] for i in range(len(lengths) - 1)) or 0 in lengths:
            raise TableauError("row lengths must form a partition")
        for row in rows:
            if any(row[j] > row[j + 1] for j in range(len(row) - 1)):
                raise TableauError("rows must weakly increase")
        for i in range(len(rows) - 1):
            upper, lower = rows[i], rows[i + 1]
            if any(upper[j] >= lower[j] for j in range(len(lower))):
                raise TableauError("columns must strictly increase")
        self.rows = rows

    @property
    def shape(self) -> Partition:
        return Partition(len(r) for r in self.rows)

    def content(self) -> tuple[int, ...]:
        """Multiplicity vector of the letters 1..max."""
        if not self.rows:
            return ()
        top = max(max(r) for r in self.rows)
        counts = [0] * top
        for row in self.rows:
            for x in row:
                counts[x - 1] += 1
        return tuple(counts)

    def reading_word(self) -> tuple[int, ...]:
        word: list[int] = []
        for row in reversed(self.rows):
            word.extend(row)
        return tuple(word)

    def __eq__(self, other) -> bool:
        if isinstance(other, Tableau):
            return self.rows == other.rows
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"Tableau({list(map(list, self.rows))!r})"

    def render(self) -> str:
        return boxed_rows([[str(x) for x in row] for row in self.rows])

    def to_json(self) -> dict:
        return {
            "shape": list(self.shape.parts),
            "rows": [list(r) for r in self.rows],
        }


def ssyt(shape: Partition, content: Sequence[int]) -> list[Tableau]:
    """All semistandard tableaux of the given shape and content vector.

    The content may be any sequence of nonnegative integers whose sum is
    the size of the shape; entry i appears content[i-1] times.
    """
    content = tuple(int(c) for c in content)
    if any(c < 0 for c in content):
        raise TableauError("content entries must be nonnegative")
    if sum(content) != shape.size:
        raise TableauError(
            f"content {list(content)} does not fill shape {shape} "
            f"({sum(content)} cells vs {shape.size})"
        )
    out: list[Tableau] = []

    def rec(chain: list[Partition], letter: int):
        if letter == len(content):
            if chain[-1] == shape:
                out.append(_tableau_from_chain(chain))
            return
        for nxt in horizontal_strip_extensions(chain[-1], content[letter], within=shape):
            chain.append(nxt)
            rec(chain, letter + 1)
            chain.pop()

    rec([Partition()], 0)
    return out


def _tableau_from_chain(chain: list[Partition]) -> Tableau:
    rows: list[list[int]] = []
    for letter in range(1, len(chain)):
        prev, cur = chain[letter - 1], chain[letter]
        for i, length in enumerate(cur.parts):
            while len(rows) <= i:
                rows.append([])
            old = prev.parts[i] if i < len(prev) else 0
            rows[i].extend([letter] * (length - old))
    return Tableau(rows)


@lru_cache(maxsize=None)
def kostka_number(shape: Partition, content: tuple[int, ...]) -> int:
    """Count of semistandard tableaux, computed by a chain recursion."""
    if sum(content) != shape.size:
        return 0

    @lru_cache(maxsize=None)
    def count(cur: Partition, letter: int) -> int:
        if letter == len(content):
            return 1 if cur == shape else 0
        return sum(
            count(nxt, letter + 1)
            for nxt in horizontal_strip_extensions(cur, content[letter], within=shape)
        )

    result = count(Partition(), 0)
    count.cache_clear()
    return result


def content_exchange(word: Sequence[int], i: int) -> tuple[int, ...]:
    """Swap the multiplicities of i and i+1 by the parenthesis-matching rule.

    Letters i+1 open, letters i close; matched pairs stay put and the
    unmatched run i^a (i+1)^b is rewritten as i^b (i+1)^a.
    """
    open_stack: list[int] = []
    matched: set[int] = set()
    for pos, letter in enumerate(word):
        if letter == i + 1:
            open_stack.append(pos)
        elif letter == i:
            if open_stack:
                matched.add(open_stack.pop())
                matched.add(pos)
    free = [pos for pos, letter in enumerate(word) if letter in (i, i + 1) and pos not in matched]
    a = sum(1 for pos in free if word[pos] == i)
    b = len(free) - a
    out = list(word)
    for idx, pos in enumerate(free):
        out[pos] = i if idx < b else i + 1
    return tuple(out)


def word_charge(word: Sequence[int]) -> int:
    """Charge of a word with arbitrary content.

    Non-partition content is first sorted with content exchanges, which
    do not change the charge, then the cyclic extraction rule applies.
    """
    word = tuple(int(x) for x in word)
    if any(x <= 0 for x in word):
        raise TableauError("words must use positive letters")
    if not word:
        return 0
    top = max(word)
    counts = [0] * top
    for x in word:
        counts[x - 1] += 1
    # bubble the content vector into weakly decreasing order
    while True:
        bad = next(
            (i for i in range(top - 1) if counts[i] < counts[i + 1]), None
        )
        if bad is None:
            break
        word = content_exchange(word, bad + 1)
        counts[bad], counts[bad + 1] = counts[bad + 1], counts[bad]
    return _partition_word_charge(word)


def _partition_word_charge(word: tuple[int, ...]) -> int:
    total = 0
    remaining = list(word)
    while remaining:
        positions = _extract_standard_subword(remaining)
        total += _standard_charge(positions)
        for pos in sorted(positions.values(), reverse=True):
            del remaining[pos]
    return total


def _extract_standard_subword(word: list[int]) -> dict[int, int]:
    """Positions of the standard subword 1,2,...: rightmost 1, then each
    next letter found scanning leftward and wrapping cyclically."""
    pos: dict[int, int] = {}
    start = None
    for i in range(len(word) - 1, -1, -1):
        if word[i] == 1:
            start = i
            break
    if start is None:
        raise TableauError("charge needs words with partition content")
    pos[1] = start
    letter = 2
    cursor = start
    while True:
        found = None
        for i in range(cursor - 1, -1, -1):
            if word[i] == letter:
                found = i
                break
        if found is None:
            for i in range(len(word) - 1, cursor, -1):
                if word[i] == letter:
                    found = i
                    break
        if found is None:
            break
        pos[letter] = found
        cursor = found
        letter += 1
    return pos


def _standard_charge(pos: dict[int, int]) -> int:
    index = 0
    total = 0
    for letter in range(2, len(pos) + 1):
        if pos[letter] > pos[letter - 1]:
            index += 1
        total += index
    return total


def charge(tableau: Tableau) -> int:
    """Charge of a tableau whose content is a partition."""
    content = tableau.content()
    if any(
        content[i] < content[i + 1] for i in range(len(content) - 1)
    ) or 0 in content:
        raise TableauError(
            f"charge is defined for partition content, got {list(content)}"
        )
    return _partition_word_charge(tableau.reading_word())


def kostka_poly(shape: Partition, weight: Sequence[int]) -> Coeff:
    """The charge generating polynomial K_{shape,weight}(t).

    The weight may be given as any rearrangement; it is sorted into a
    partition first, which leaves the polynomial unchanged.
    """
    weight = tuple(sorted((int(w) for w in weight), reverse=True))
    if any(w < 0 for w in weight):
        raise TableauError("weights must be nonnegative")
    if sum(weight) != shape.size:
        raise TableauError(
            f"weight of size {sum(weight)} cannot fill shape {shape} of size {shape.size}"
        )
    total = ZERO
    for tab in ssyt(shape, weight):
        total = total + T ** charge(tab)
    return total
