"""Exact rational matrices and an exact positive-semidefiniteness test.

Storage is sparse (row -> column -> Fraction, zeros omitted) because the
operators we build are 0/1 partial permutations; the interface is that of a
dense matrix.  Instances are treated as immutable.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence


class RationalMatrix:
    __slots__ = ("rows", "cols", "_data")

    def __init__(self, rows: int, cols: int, data: dict[int, dict[int, Fraction]] | None = None):
        self.rows = rows
        self.cols = cols
        self._data = {}
        if data:
            for i, row in data.items():
                clean = {j: Fraction(v) for j, v in row.items() if v != 0}
                if clean:
                    self._data[i] = clean

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "RationalMatrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), ncols, {i: {j: Fraction(v) for j, v in enumerate(r)} for i, r in enumerate(rows)})

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "RationalMatrix":
        return cls(rows, rows if cols is None else cols)

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls(n, n, {i: {i: Fraction(1)} for i in range(n)})

    @classmethod
    def diagonal(cls, values: Iterable) -> "RationalMatrix":
        values = list(values)
        return cls(len(values), len(values), {i: {i: v} for i, v in enumerate(values)})

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self._data.get(i, {}).get(j, Fraction(0))

    def items(self):
        """Nonzero entries as ((i, j), value), row-major."""
        for i in sorted(self._data):
            row = self._data[i]
            for j in sorted(row):
                yield (i, j), row[j]

    def to_rows(self) -> list[list[Fraction]]:
        out = [[Fraction(0)] * self.cols for _ in range(self.rows)]
        for (i, j), v in self.items():
            out[i][j] = v
        return out

    def column(self, j: int) -> dict[int, Fraction]:
        return {i: row[j] for i, row in self._data.items() if j in row}

    @property
    def T(self) -> "RationalMatrix":
        data: dict[int, dict[int, Fraction]] = {}
        for i, row in self._data.items():
            for j, v in row.items():
                data.setdefault(j, {})[i] = v
        return RationalMatrix(self.cols, self.rows, data)

    def _check_same(self, other: "RationalMatrix"):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        self._check_same(other)
        data = {i: dict(r) for i, r in self._data.items()}
        for i, row in other._data.items():
            target = data.setdefault(i, {})
            for j, v in row.items():
                target[j] = target.get(j, 0) + v
        return RationalMatrix(self.rows, self.cols, data)

    def __neg__(self) -> "RationalMatrix":
        return RationalMatrix(self.rows, self.cols, {i: {j: -v for j, v in r.items()} for i, r in self._data.items()})

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        return self + (-other)

    def scale(self, c) -> "RationalMatrix":
        c = Fraction(c)
        return RationalMatrix(self.rows, self.cols, {i: {j: c * v for j, v in r.items()} for i, r in self._data.items()})

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        data = {}
        odata = other._data
        for i, row in self._data.items():
            acc: dict[int, Fraction] = {}
            for k, a in row.items():
                orow = odata.get(k)
                if orow:
                    for j, b in orow.items():
                        acc[j] = acc.get(j, 0) + a * b
            data[i] = acc
        return RationalMatrix(self.rows, other.cols, data)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    __hash__ = None

    def is_zero(self) -> bool:
        return not self._data

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and self == self.T

    def is_diagonal(self) -> bool:
        return all(set(r) <= {i} for i, r in self._data.items())

    def kron(self, other: "RationalMatrix") -> "RationalMatrix":
        data: dict[int, dict[int, Fraction]] = {}
        for (i, j), a in self.items():
            for (k, l), b in other.items():
                data.setdefault(i * other.rows + k, {})[j * other.cols + l] = a * b
        return RationalMatrix(self.rows * other.rows, self.cols * other.cols, data)

    def restrict_columns(self, cols: Iterable[int]) -> "RationalMatrix":
        """Same shape, with every column outside ``cols`` zeroed."""
        keep = set(cols)
        return RationalMatrix(self.rows, self.cols,
                              {i: {j: v for j, v in r.items() if j in keep} for i, r in self._data.items()})

    def to_json(self) -> list[list[str]]:
        return [[_fmt(v) for v in row] for row in self.to_rows()]

    def __repr__(self) -> str:
        return f"RationalMatrix({self.rows}x{self.cols}, nnz={sum(len(r) for r in self._data.values())})"


def _fmt(v: Fraction) -> str:
    return f"{v.numerator}/{v.denominator}"


def psd(A: RationalMatrix) -> bool:
    """Exact test for positive semidefiniteness.

    Symmetric elimination, always pivoting on the largest remaining diagonal
    entry.  A negative diagonal entry, or a zero diagonal entry whose row still
    has a nonzero off-diagonal entry, certifies that A is not PSD.
    """
    if not A.is_symmetric():
        raise ValueError("psd needs a symmetric matrix")
    a = {i: dict(r) for i, r in A._data.items()}
    remaining = set(range(A.rows))
    while remaining:
        diag = {i: a.get(i, {}).get(i, Fraction(0)) for i in remaining}
        p = max(sorted(remaining), key=lambda i: diag[i])
        d = diag[p]
        if min(diag.values()) < 0:
            return False
        if d == 0:
            # every remaining diagonal entry is zero: the residual must vanish
            return not any(j != i and v != 0 for i in remaining
                           for j, v in a.get(i, {}).items() if j in remaining)
        col = {i: v for i, v in a.get(p, {}).items() if i in remaining and i != p and v != 0}
        remaining.discard(p)
        for i, vi in col.items():
            row = a.setdefault(i, {})
            f = vi / d
            for j, vj in col.items():
                row[j] = row.get(j, 0) - f * vj
    return True
