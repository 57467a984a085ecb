"""
Dense GF(2) linear algebra on bit-packed rows.

A vector is a Python ``int`` whose bit ``j`` holds coordinate ``j``; a matrix
is a tuple of such row integers together with its column count.  Elimination
scans columns from 0 upward and takes the smallest available row index as
pivot, so echelon forms are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Iterable, Sequence

import numpy as np


def popcount(x: int) -> int:
    return bin(x).count("1")


def parity(x: int) -> int:
    return bin(x).count("1") & 1


def bits(x: int):
    """Yield the indices of the set bits of ``x`` in increasing order."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def echelon(rows: Iterable[int]) -> tuple[list[int], list[int]]:
    """Reduced row-echelon form of the span of ``rows``.

    Returns ``(basis, pivots)``: ``basis[k]`` has lowest set bit
    ``pivots[k]``, pivots are strictly increasing, and every pivot column is
    zero in all other basis rows.  The result depends only on the span.
    """
    work = [r for r in rows if r]
    basis: list[int] = []
    pivots: list[int] = []
    while work:
        col = min((r & -r).bit_length() - 1 for r in work)
        bit = 1 << col
        idx = next(i for i, r in enumerate(work) if r & bit)
        p = work.pop(idx)
        work = [r ^ p if r & bit else r for r in work]
        work = [r for r in work if r]
        basis = [b ^ p if b & bit else b for b in basis]
        basis.append(p)
        pivots.append(col)
    return basis, pivots


def rank_rows(rows: Iterable[int]) -> int:
    # xor-basis keyed by leading bit; cheaper than a full echelon form
    basis: dict[int, int] = {}
    for r in rows:
        while r:
            top = r.bit_length() - 1
            b = basis.get(top)
            if b is None:
                basis[top] = r
                break
            r ^= b
    return len(basis)


def in_span(v: int, rows: Iterable[int]) -> bool:
    rows = list(rows)
    return rank_rows(rows + [v]) == rank_rows(rows)


def span_elements(rows: Sequence[int]) -> list[int]:
    """All ``2**k`` vectors of the span of ``k`` independent rows."""
    out = [0]
    for r in rows:
        out += [x ^ r for x in out]
    return out


@dataclass(frozen=True)
class BitMatrix:
    """An immutable matrix over GF(2).

    ``rows[i]`` packs row ``i``; bit ``j`` is the entry in column ``j``.
    Row and column labels default to ``0..n-1``.
    """

    rows: tuple[int, ...]
    ncols: int
    row_labels: tuple[Hashable, ...] | None = None
    col_labels: tuple[Hashable, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(int(r) for r in self.rows))
        limit = 1 << self.ncols
        for r in self.rows:
            if r < 0 or r >= limit:
                raise ValueError(f"row {r:b} does not fit in {self.ncols} columns")
        if self.row_labels is None:
            object.__setattr__(self, "row_labels", tuple(range(self.nrows)))
        if self.col_labels is None:
            object.__setattr__(self, "col_labels", tuple(range(self.ncols)))
        if len(self.row_labels) != self.nrows or len(set(self.row_labels)) != self.nrows:
            raise ValueError("row labels must be distinct, one per row")
        if len(self.col_labels) != self.ncols or len(set(self.col_labels)) != self.ncols:
            raise ValueError("column labels must be distinct, one per column")

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return (self.rows[i] >> j) & 1

    @classmethod
    def from_lists(cls, entries: Sequence[Sequence[int]], ncols: int | None = None, **labels) -> "BitMatrix":
        if ncols is None:
            ncols = len(entries[0]) if entries else 0
        rows = []
        for row in entries:
            if len(row) != ncols:
                raise ValueError("ragged matrix")
            rows.append(mask_of(j for j, x in enumerate(row) if int(x) & 1))
        return cls(tuple(rows), ncols, **labels)

    @classmethod
    def from_array(cls, a, **labels) -> "BitMatrix":
        a = np.asarray(a, dtype=np.uint8) % 2
        if a.ndim != 2:
            raise ValueError("expected a 2-d array")
        return cls.from_lists(a.tolist(), ncols=a.shape[1], **labels)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(tuple(1 << i for i in range(n)), n)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "BitMatrix":
        return cls((0,) * nrows, ncols)

    def to_array(self) -> np.ndarray:
        return np.array(self.to_lists(), dtype=np.uint8).reshape(self.nrows, self.ncols)

    def to_lists(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.ncols)] for r in self.rows]

    def transpose(self) -> "BitMatrix":
        cols = tuple(
            mask_of(i for i, r in enumerate(self.rows) if (r >> j) & 1) for j in range(self.ncols)
        )
        return BitMatrix(cols, self.nrows, self.col_labels, self.row_labels)

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def is_symmetric(self) -> bool:
        return self.is_square() and self.transpose().rows == self.rows

    def __str__(self) -> str:
        return "\n".join("".join(str(x) for x in row) for row in self.to_lists())


def rank(m: BitMatrix) -> int:
    return rank_rows(m.rows)


def det(m: BitMatrix) -> int:
    """Determinant over GF(2); the empty matrix has determinant 1."""
    if not m.is_square():
        raise ValueError(f"determinant of a non-square {m.nrows}x{m.ncols} matrix")
    return int(rank_rows(m.rows) == m.nrows)


def kernel(m: BitMatrix) -> list[int]:
    """Basis of the right null space ``{x : m x = 0}``, as packed column vectors."""
    basis, pivots = echelon(m.rows)
    pivot_set = set(pivots)
    out = []
    for free in range(m.ncols):
        if free in pivot_set:
            continue
        x = 1 << free
        for b, p in zip(basis, pivots):
            if (b >> free) & 1:
                x |= 1 << p
        out.append(x)
    return out


def principal_submatrix(m: BitMatrix, subset: Iterable[Hashable]) -> BitMatrix:
    """Restrict a square matrix to the rows and columns labelled by ``subset``.

    Label order of ``m`` is kept regardless of the order of ``subset``.
    """
    if not m.is_square():
        raise ValueError("principal submatrix of a non-square matrix")
    wanted = set(subset)
    index = {lab: i for i, lab in enumerate(m.row_labels)}
    missing = wanted - index.keys()
    if missing:
        raise KeyError(f"labels not in matrix: {sorted(map(str, missing))}")
    keep = [i for i, lab in enumerate(m.row_labels) if lab in wanted]
    return submatrix_by_mask(m, mask_of(keep))


def submatrix_by_mask(m: BitMatrix, keep: int) -> BitMatrix:
    idx = list(bits(keep))
    rows = tuple(compress(m.rows[i], idx) for i in idx)
    labels = tuple(m.row_labels[i] for i in idx)
    return BitMatrix(rows, len(idx), labels, labels)


def compress(x: int, positions: Sequence[int]) -> int:
    """Gather bits of ``x`` at ``positions`` into consecutive low bits."""
    out = 0
    for k, p in enumerate(positions):
        if (x >> p) & 1:
            out |= 1 << k
    return out


def scatter(x: int, positions: Sequence[int]) -> int:
    """Inverse of :func:`compress`: spread low bits of ``x`` to ``positions``."""
    out = 0
    for k, p in enumerate(positions):
        if (x >> k) & 1:
            out |= 1 << p
    return out


def matmul(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    if a.ncols != b.nrows:
        raise ValueError("shape mismatch")
    rows = []
    for r in a.rows:
        acc = 0
        for k in bits(r):
            acc ^= b.rows[k]
        rows.append(acc)
    return BitMatrix(tuple(rows), b.ncols)


def apply_columns(a: BitMatrix, v: int) -> int:
    """Compute ``a @ v`` for a packed column vector ``v``."""
    out = 0
    for i, r in enumerate(a.rows):
        if parity(r & v):
            out |= 1 << i
    return out
