"""GF(2) matrices for classical linear codes and CSS compatibility tests.

Rows are stored as packed integers (bit ``j`` = column ``j``), so a matrix
product over GF(2) reduces to AND + popcount parity per entry.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import DimensionError

BitVector = tuple[int, ...]


def pack_bits(bits: Iterable[int]) -> int:
    word = 0
    for j, b in enumerate(bits):
        if b not in (0, 1):
            raise ValueError(f"bit values must be 0 or 1, got {b!r}")
        if b:
            word |= 1 << j
    return word


def unpack_bits(word: int, length: int) -> BitVector:
    return tuple((word >> j) & 1 for j in range(length))


class GF2Span:
    """Incremental span of packed vectors; supports membership and insertion.

    :meth:`reduce` returns the canonical coset representative (zero at every
    pivot position), so two vectors share a coset iff their reductions agree.
    """

    def __init__(self, rows: Iterable[int] = ()):
        self._basis: dict[int, int] = {}
        self._order: list[int] = []
        for row in rows:
            self.add(row)

    def reduce(self, v: int) -> int:
        basis = self._basis
        for pivot in self._order:
            if (v >> pivot) & 1:
                v ^= basis[pivot]
        return v

    def add(self, v: int) -> bool:
        """Insert ``v``; returns False when it was already in the span."""
        r = self.reduce(v)
        if not r:
            return False
        self._basis[r.bit_length() - 1] = r
        self._order = sorted(self._basis, reverse=True)
        return True

    def __contains__(self, v: int) -> bool:
        return self.reduce(v) == 0

    @property
    def rank(self) -> int:
        return len(self._basis)


def gf2_rank(rows: Iterable[int]) -> int:
    """Rank of a set of packed row vectors over GF(2)."""
    return GF2Span(rows).rank


def gf2_nullspace(rows: Sequence[int], ncols: int) -> list[int]:
    """Basis of ``{v : row·v = 0 for every row}`` as packed vectors.

    Plain Gauss-Jordan elimination; basis vectors are returned in increasing
    order of their free column.
    """
    pivots: list[tuple[int, int]] = []  # (column, row) in reduced form
    for row in rows:
        v = row
        for col, prow in pivots:
            if (v >> col) & 1:
                v ^= prow
        if not v:
            continue
        col = (v & -v).bit_length() - 1
        pivots = [(c, r ^ v if (r >> col) & 1 else r) for c, r in pivots]
        pivots.append((col, v))
    pivot_cols = {c for c, _ in pivots}
    basis = []
    for free in range(ncols):
        if free in pivot_cols:
            continue
        v = 1 << free
        for col, prow in pivots:
            if (prow >> free) & 1:
                v |= 1 << col
        basis.append(v)
    return basis


@dataclass(frozen=True)
class BinaryMatrix:
    """Row-major GF(2) matrix with bit-packed rows."""

    rows: int
    cols: int
    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.bits) != self.rows:
            raise DimensionError(f"expected {self.rows} rows, got {len(self.bits)}")
        limit = 1 << self.cols
        for i, r in enumerate(self.bits):
            if not 0 <= r < limit:
                raise DimensionError(f"row {i} does not fit in {self.cols} columns")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> BinaryMatrix:
        if cols is None:
            if not rows:
                raise DimensionError("column count is required for an empty matrix")
            cols = len(rows[0])
        for i, r in enumerate(rows):
            if len(r) != cols:
                raise DimensionError(f"row {i} has {len(r)} entries, expected {cols}")
        return cls(len(rows), cols, tuple(pack_bits(r) for r in rows))

    @classmethod
    def from_array(cls, array: np.ndarray) -> BinaryMatrix:
        a = np.asarray(array, dtype=np.int64) % 2
        if a.ndim != 2:
            raise DimensionError("expected a 2-D array")
        return cls.from_rows(a.tolist(), cols=a.shape[1])

    @classmethod
    def identity(cls, size: int) -> BinaryMatrix:
        return cls(size, size, tuple(1 << i for i in range(size)))

    @classmethod
    def empty(cls, cols: int) -> BinaryMatrix:
        return cls(0, cols, ())

    @classmethod
    def parse(cls, text: str) -> BinaryMatrix:
        """Parse the text format: one row per line of 0/1, spaces allowed, '#' comments."""
        rows: list[list[int]] = []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].replace(" ", "").replace("\t", "")
            if not line:
                continue
            if set(line) - {"0", "1"}:
                raise ValueError(f"line {lineno}: expected only 0/1 characters, got {raw.strip()!r}")
            rows.append([int(c) for c in line])
        if not rows:
            raise ValueError("matrix file contains no rows")
        return cls.from_rows(rows)

    @classmethod
    def load(cls, path: str | Path) -> BinaryMatrix:
        return cls.parse(Path(path).read_text())

    def row(self, i: int) -> BitVector:
        return unpack_bits(self.bits[i], self.cols)

    def tolist(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def to_array(self) -> np.ndarray:
        return np.array(self.tolist(), dtype=np.uint8).reshape(self.rows, self.cols)

    def column(self, j: int) -> BitVector:
        return tuple((r >> j) & 1 for r in self.bits)

    def transpose(self) -> BinaryMatrix:
        return BinaryMatrix(
            self.cols, self.rows, tuple(pack_bits(self.column(j)) for j in range(self.cols))
        )

    @property
    def T(self) -> BinaryMatrix:
        return self.transpose()

    def __matmul__(self, other: BinaryMatrix) -> BinaryMatrix:
        if self.cols != other.rows:
            raise DimensionError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        other_cols = [pack_bits(other.column(j)) for j in range(other.cols)]
        bits = tuple(
            sum((((r & c).bit_count() & 1) << j) for j, c in enumerate(other_cols))
            for r in self.bits
        )
        return BinaryMatrix(self.rows, other.cols, bits)

    def is_zero(self) -> bool:
        return not any(self.bits)

    def rank(self) -> int:
        return gf2_rank(self.bits)

    def format(self) -> str:
        return "\n".join("".join(map(str, self.row(i))) for i in range(self.rows))


# Parity-check matrices exactly as printed for the 3-bit repetition code and
# the [7,4,3] Hamming code (column j is the binary expansion of j + 1).
REPETITION_3 = BinaryMatrix.from_rows([[1, 1, 0], [0, 1, 1]])
HAMMING_7 = BinaryMatrix.from_rows(
    [
        [0, 0, 0, 1, 1, 1, 1],
        [0, 1, 1, 0, 0, 1, 1],
        [1, 0, 1, 0, 1, 0, 1],
    ]
)


def parity_syndrome(H: BinaryMatrix, e: Sequence[int]) -> BitVector:
    """``H·e`` over GF(2); all zeros means no error was detected."""
    if len(e) != H.cols:
        raise DimensionError(f"error vector has length {len(e)}, matrix has {H.cols} columns")
    ev = pack_bits(e)
    return tuple((r & ev).bit_count() & 1 for r in H.bits)


def check_duality(H: BinaryMatrix, G: BinaryMatrix) -> bool:
    """True iff ``H·G = 0``, i.e. every column of ``G`` is a codeword of ``H``."""
    if H.cols != G.rows:
        raise DimensionError(f"H has {H.cols} columns but G has {G.rows} rows")
    return (H @ G).is_zero()


def css_compatible(Hx: BinaryMatrix, Hz: BinaryMatrix) -> bool:
    """True iff ``Hx·Hz^T = 0`` over GF(2)."""
    return first_incompatible_pair(Hx, Hz) is None


def first_incompatible_pair(Hx: BinaryMatrix, Hz: BinaryMatrix) -> tuple[int, int] | None:
    """First ``(i, j)`` with ``Hx[i]·Hz[j] = 1``, or None when compatible."""
    if Hx.cols != Hz.cols:
        raise DimensionError(f"Hx has {Hx.cols} columns but Hz has {Hz.cols}")
    for i, rx in enumerate(Hx.bits):
        for j, rz in enumerate(Hz.bits):
            if (rx & rz).bit_count() & 1:
                return i, j
    return None
