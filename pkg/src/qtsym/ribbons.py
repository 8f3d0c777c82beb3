"""k-cores, k-quotients, and k-ribbon tableaux via bead positions.

A partition with at most L rows corresponds to the bead set
{parts[i] + L - 1 - i : i < L} (rows padded with zeros).  Adding a
k-ribbon moves one bead from position p to the free position p + k; the
spin of that ribbon is the number of beads strictly between the two
positions, which is one less than the number of rows the ribbon spans.

A horizontal k-ribbon strip is a sequence of such moves whose source
positions strictly increase.  Ribbon tableaux are chains of horizontal
strips starting at the empty partition.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from .errors import PartitionError, TableauError
from .partitions import Partition
from .render import boxed_rows


def _beads(p: Partition, length: int) -> tuple[int, ...]:
    padded = p.padded(length)
    return tuple(padded[i] + length - 1 - i for i in range(length))


def _partition_from_beads(beads) -> Partition:
    desc = sorted(beads, reverse=True)
    length = len(desc)
    parts = [desc[i] - (length - 1 - i) for i in range(length)]
    return Partition([x for x in parts if x])


def core_and_quotient(p: Partition, k: int) -> tuple[Partition, tuple[Partition, ...]]:
    """Split a partition into its k-core and ordered k-quotient.

    Bead positions are taken with a bead count that is a multiple of k,
    which makes the labelling of the quotient components canonical.
    """
    if k < 1:
        raise PartitionError("ribbon size must be a positive integer")
    length = max(k, ((len(p) + k - 1) // k) * k)
    beads = _beads(p, length)
    runners: list[list[int]] = [[] for _ in range(k)]
    for b in beads:
        runners[b % k].append(b // k)
    quotient = tuple(_partition_from_beads(r) for r in runners)
    core_beads = [
        r + k * j for r, runner in enumerate(runners) for j in range(len(runner))
    ]
    core = _partition_from_beads(core_beads)
    return core, quotient


def from_core_and_quotient(
    core: Partition, quotient: Sequence[Partition], k: int
) -> Partition:
    """Rebuild the partition with the given k-core and k-quotient."""
    if k < 1:
        raise PartitionError("ribbon size must be a positive integer")
    if len(quotient) != k:
        raise PartitionError(f"a {k}-quotient needs exactly {k} components")
    rows_needed = len(core) + k * (sum(q.size for q in quotient) + 1)
    length = ((rows_needed + k - 1) // k) * k
    core_check, _ = core_and_quotient(core, k)
    if core_check != core:
        raise PartitionError(f"{core} is not a {k}-core")
    runners: list[list[int]] = [[] for _ in range(k)]
    for b in _beads(core, length):
        runners[b % k].append(b // k)
    beads: list[int] = []
    for r, runner in enumerate(runners):
        count = len(runner)
        rows = quotient[r].padded(count)
        beads.extend(r + k * (rows[i] + count - 1 - i) for i in range(count))
    return _partition_from_beads(beads)


def ribbon_cells(before: Partition, after: Partition) -> tuple[tuple[int, int], ...]:
    """Cells of after/before as (row, col) pairs, 1-indexed."""
    rows = len(after)
    old = before.padded(rows)
    return tuple(
        (i + 1, j + 1)
        for i in range(rows)
        for j in range(old[i], after.parts[i])
    )


class RibbonTableau:
    """A tiling of a partition by labelled k-ribbons, one horizontal strip
    of ribbons per letter."""

    __slots__ = ("k", "shape", "weight", "chain", "ribbons", "spin")

    def __init__(self, k, shape, weight, chain, ribbons):
        self.k = k
        self.shape = shape
        self.weight = tuple(weight)
        self.chain = tuple(chain)
        self.ribbons = tuple(ribbons)  # (label, cells, spin) triples
        self.spin = sum(r[2] for r in ribbons)

    def cell_labels(self) -> dict[tuple[int, int], int]:
        return {cell: label for label, cells, _ in self.ribbons for cell in cells}

    def render(self) -> str:
        labels = self.cell_labels()
        rows = [
            [str(labels[(i + 1, j + 1)]) for j in range(length)]
            for i, length in enumerate(self.shape.parts)
        ]
        return boxed_rows(rows)

    def to_json(self) -> dict:
        return {
            "shape": list(self.shape.parts),
            "k": self.k,
            "weight": list(self.weight),
            "spin": self.spin,
            "chain": [list(p.parts) for p in self.chain],
            "ribbons": [
                {"label": label, "cells": [list(c) for c in cells], "spin": spin}
                for label, cells, spin in self.ribbons
            ],
        }

    def __repr__(self) -> str:
        return f"RibbonTableau(shape={self.shape}, k={self.k}, spin={self.spin})"


def _strip_moves(
    beads: tuple[int, ...], k: int, count: int, within: Partition
) -> Iterator[tuple[tuple[int, ...], list[tuple[int, int]]]]:
    """All ways to add `count` ribbons as a horizontal strip.

    Yields the final bead tuple and the list of moves (source, spin), with
    sources strictly increasing.  Intermediate shapes are pruned against
    the ambient diagram since cells are only ever added.
    """

    def rec(cur: frozenset, last: int, left: int, moves: list[tuple[int, int]]):
        if left == 0:
            yield tuple(sorted(cur)), list(moves)
            return
        for b in sorted(cur):
            if b <= last or b + k in cur:
                continue
            spin = sum(1 for c in cur if b < c < b + k)
            nxt = (cur - {b}) | {b + k}
            if not within.contains(_partition_from_beads(nxt)):
                continue
            moves.append((b, spin))
            yield from rec(nxt, b, left - 1, moves)
            moves.pop()

    yield from rec(frozenset(beads), -1, count, [])


def ribbon_tableaux(
    shape: Partition, weight: Sequence[int], k: int
) -> list[RibbonTableau]:
    """All k-ribbon tableaux of the given shape and weight.

    The weight lists how many ribbons carry each letter; letters with
    weight zero are allowed.  The shape must hold exactly k times the
    total weight in cells.
    """
    if k < 1:
        raise TableauError("ribbon size must be a positive integer")
    weight = tuple(int(w) for w in weight)
    if any(w < 0 for w in weight):
        raise TableauError("ribbon weights must be nonnegative")
    if shape.size != k * sum(weight):
        raise TableauError(
            f"shape {shape} has {shape.size} cells but the weight needs "
            f"{k * sum(weight)}"
        )
    length = max(k, len(shape) + k)
    start = _beads(Partition(), length)
    out: list[RibbonTableau] = []

    def rec(beads, letter, chain, ribbons):
        if letter == len(weight):
            if chain[-1] == shape:
                out.append(RibbonTableau(k, shape, weight, chain, ribbons))
            return
        for nxt_beads, moves in _strip_moves(beads, k, weight[letter], shape):
            cur = beads
            new_ribbons = list(ribbons)
            new_chain = list(chain)
            for src, spin in moves:
                stepped = tuple(sorted(set(cur) - {src} | {src + k}))
                cells = ribbon_cells(
                    _partition_from_beads(cur), _partition_from_beads(stepped)
                )
                new_ribbons.append((letter + 1, cells, spin))
                cur = stepped
            new_chain.append(_partition_from_beads(nxt_beads))
            rec(nxt_beads, letter + 1, new_chain, new_ribbons)

    rec(start, 0, [Partition()], [])
    return out


def ribbon_strip_spins(
    base: Partition, cells: int, k: int, within: Partition
) -> list[tuple[Partition, int]]:
    """Horizontal strip extensions by `cells` ribbons with their spins."""
    length = max(k, len(within) + k)
    beads = _beads(base, length)
    out = []
    for nxt, moves in _strip_moves(beads, k, cells, within):
        out.append((_partition_from_beads(nxt), sum(s for _, s in moves)))
    return out
