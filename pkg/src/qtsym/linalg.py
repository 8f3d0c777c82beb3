"""Exact linear algebra over Q(q,t) with labelled rows and columns.

Basis-change matrices are small and dense at desk scale, so entries live
in row-major lists of Coeff.  Rows and columns are keyed by arbitrary
hashable labels (partitions in practice); keys travel with the matrix so
composition and inversion cannot silently misalign bases.
"""

from __future__ import annotations

from typing import Hashable, Iterable, Mapping

from .coeffs import ONE, ZERO, Coeff
from .errors import SingularMatrixError

Key = Hashable


class CoeffMatrix:
    """A rectangular matrix over Q(q,t) with keyed rows and columns."""

    __slots__ = ("row_keys", "col_keys", "rows", "_row_index", "_col_index")

    def __init__(self, row_keys: Iterable[Key], col_keys: Iterable[Key], rows):
        self.row_keys = tuple(row_keys)
        self.col_keys = tuple(col_keys)
        self.rows = [list(r) for r in rows]
        if len(self.rows) != len(self.row_keys) or any(
            len(r) != len(self.col_keys) for r in self.rows
        ):
            raise ValueError("matrix shape does not match its keys")
        self._row_index = {k: i for i, k in enumerate(self.row_keys)}
        self._col_index = {k: j for j, k in enumerate(self.col_keys)}

    @classmethod
    def identity(cls, keys: Iterable[Key]) -> "CoeffMatrix":
        keys = tuple(keys)
        n = len(keys)
        rows = [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]
        return cls(keys, keys, rows)

    @classmethod
    def from_columns(
        cls,
        row_keys: Iterable[Key],
        col_keys: Iterable[Key],
        columns: Mapping[Key, Mapping[Key, Coeff]],
    ) -> "CoeffMatrix":
        row_keys = tuple(row_keys)
        col_keys = tuple(col_keys)
        row_index = {k: i for i, k in enumerate(row_keys)}
        rows = [[ZERO] * len(col_keys) for _ in row_keys]
        for j, ck in enumerate(col_keys):
            for rk, value in columns[ck].items():
                rows[row_index[rk]][j] = value
        return cls(row_keys, col_keys, rows)

    def entry(self, row_key: Key, col_key: Key) -> Coeff:
        return self.rows[self._row_index[row_key]][self._col_index[col_key]]

    def column(self, col_key: Key) -> dict[Key, Coeff]:
        j = self._col_index[col_key]
        return {
            rk: self.rows[i][j]
            for i, rk in enumerate(self.row_keys)
            if not self.rows[i][j].is_zero()
        }

    def __eq__(self, other) -> bool:
        if not isinstance(other, CoeffMatrix):
            return NotImplemented
        return (
            self.row_keys == other.row_keys
            and self.col_keys == other.col_keys
            and self.rows == other.rows
        )

    def __matmul__(self, other: "CoeffMatrix") -> "CoeffMatrix":
        if self.col_keys != other.row_keys:
            raise ValueError("matrix composition with mismatched keys")
        n, mid, m = len(self.row_keys), len(self.col_keys), len(other.col_keys)
        rows = [[ZERO] * m for _ in range(n)]
        for i in range(n):
            left = self.rows[i]
            out = rows[i]
            for k in range(mid):
                c = left[k]
                if c.is_zero():
                    continue
                right = other.rows[k]
                for j in range(m):
                    if not right[j].is_zero():
                        out[j] = out[j] + c * right[j]
        return CoeffMatrix(self.row_keys, other.col_keys, rows)

    def transpose(self) -> "CoeffMatrix":
        rows = [
            [self.rows[i][j] for i in range(len(self.row_keys))]
            for j in range(len(self.col_keys))
        ]
        return CoeffMatrix(self.col_keys, self.row_keys, rows)

    def apply(self, vector: Mapping[Key, Coeff]) -> dict[Key, Coeff]:
        """Matrix-vector product; vectors are sparse dicts on column keys."""
        out: dict[Key, Coeff] = {}
        for ck, value in vector.items():
            j = self._col_index[ck]
            if value.is_zero():
                continue
            for i, rk in enumerate(self.row_keys):
                e = self.rows[i][j]
                if e.is_zero():
                    continue
                s = out.get(rk, ZERO) + e * value
                if s.is_zero():
                    out.pop(rk, None)
                else:
                    out[rk] = s
        return out

    def invert(self, label: str = "") -> "CoeffMatrix":
        """Exact inverse via Gauss-Jordan elimination."""
        if len(self.row_keys) != len(self.col_keys):
            raise SingularMatrixError(f"matrix {label or '?'} is not square")
        n = len(self.row_keys)
        work = [list(r) for r in self.rows]
        inv = [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]
        for col in range(n):
            pivot = next(
                (r for r in range(col, n) if not work[r][col].is_zero()), None
            )
            if pivot is None:
                raise SingularMatrixError(
                    f"singular basis-change matrix{': ' + label if label else ''}"
                )
            if pivot != col:
                work[col], work[pivot] = work[pivot], work[col]
                inv[col], inv[pivot] = inv[pivot], inv[col]
            p = work[col][col]
            if not p.is_one():
                pinv = ONE / p
                work[col] = [x * pinv for x in work[col]]
                inv[col] = [x * pinv for x in inv[col]]
            for r in range(n):
                if r == col:
                    continue
                f = work[r][col]
                if f.is_zero():
                    continue
                work[r] = [a - f * b for a, b in zip(work[r], work[col])]
                inv[r] = [a - f * b for a, b in zip(inv[r], inv[col])]
        # row keys and column keys swap roles in the inverse
        return CoeffMatrix(self.col_keys, self.row_keys, inv)

    def solve(self, rhs: Mapping[Key, Coeff]) -> dict[Key, Coeff]:
        """Solve self @ x = rhs for a single sparse right-hand side."""
        return self.invert().apply(rhs)

    def is_identity(self) -> bool:
        if self.row_keys != self.col_keys:
            return False
        return all(
            (self.rows[i][j].is_one() if i == j else self.rows[i][j].is_zero())
            for i in range(len(self.rows))
            for j in range(len(self.rows))
        )

    def __repr__(self) -> str:
        return f"CoeffMatrix({len(self.row_keys)}x{len(self.col_keys)})"
