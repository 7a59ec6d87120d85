"""Heffter array data model, axiom verification, and column reordering.

An m x n Heffter array holds canonical nonzero residues mod v = 2mn + 1 such
that every row and every column sums to 0 mod v and the mn entries form a
half-set of Z_v.  Rows are checked for simplicity left to right and columns
top to bottom; no other orders are ever used by the verifier.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import InvalidEntryError, InvalidPermutationError
from .modmath import is_canonical, is_half_set, is_simple

MIN_DIMENSION = 3  # everything in scope has at least 3 rows and 3 columns


@dataclass(frozen=True)
class HeffterArray:
    """Immutable m x n grid of canonical residues mod v = 2mn + 1.

    Construction validates shape and entry ranges only; the Heffter axioms
    (zero sums, half-set) are checked by :func:`verify_heffter` so that
    broken candidate arrays remain representable.
    """

    cells: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.cells) < MIN_DIMENSION:
            raise InvalidEntryError(f"need at least {MIN_DIMENSION} rows")
        widths = {len(row) for row in self.cells}
        if len(widths) != 1:
            raise InvalidEntryError("ragged rows")
        if min(widths) < MIN_DIMENSION:
            raise InvalidEntryError(f"need at least {MIN_DIMENSION} columns")
        v = self.modulus
        for i, row in enumerate(self.cells):
            for j, x in enumerate(row):
                if not is_canonical(x, v):
                    raise InvalidEntryError(
                        f"cell ({i + 1},{j + 1}) = {x} is not a canonical "
                        f"nonzero residue mod {v}"
                    )

    @property
    def m(self) -> int:
        return len(self.cells)

    @property
    def n(self) -> int:
        return len(self.cells[0])

    @property
    def modulus(self) -> int:
        return 2 * len(self.cells) * len(self.cells[0]) + 1

    def row(self, i: int) -> tuple[int, ...]:
        return self.cells[i]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.cells)

    def entries(self) -> Iterator[int]:
        for row in self.cells:
            yield from row


def from_rows(rows: Sequence[Sequence[int]]) -> HeffterArray:
    """Build a HeffterArray from any nested integer sequences."""
    return HeffterArray(tuple(tuple(int(x) for x in row) for row in rows))


@dataclass(frozen=True)
class VerificationReport:
    """Per-row / per-column outcome of every Heffter axiom and simplicity check."""

    row_sum_ok: tuple[bool, ...]
    col_sum_ok: tuple[bool, ...]
    half_set_ok: bool
    row_simple: tuple[bool, ...]
    col_simple: tuple[bool, ...]

    @property
    def is_heffter(self) -> bool:
        """True iff the sum and half-set axioms all hold."""
        return all(self.row_sum_ok) and all(self.col_sum_ok) and self.half_set_ok

    @property
    def is_simple(self) -> bool:
        """True iff every row (left to right) and column (top to bottom) is simple."""
        return all(self.row_simple) and all(self.col_simple)

    @property
    def all_ok(self) -> bool:
        return self.is_heffter and self.is_simple


def verify_heffter(H: HeffterArray) -> VerificationReport:
    """Check every Heffter axiom of H and report each flag separately."""
    v = H.modulus
    rows = [H.row(i) for i in range(H.m)]
    cols = [H.column(j) for j in range(H.n)]
    return VerificationReport(
        row_sum_ok=tuple(sum(r) % v == 0 for r in rows),
        col_sum_ok=tuple(sum(c) % v == 0 for c in cols),
        half_set_ok=is_half_set(H.entries(), v),
        row_simple=tuple(is_simple(r, v) for r in rows),
        col_simple=tuple(is_simple(c, v) for c in cols),
    )


def is_simple_array(H: HeffterArray) -> bool:
    """True iff every row and every column of H has distinct partial sums."""
    v = H.modulus
    return all(is_simple(H.row(i), v) for i in range(H.m)) and all(
        is_simple(H.column(j), v) for j in range(H.n)
    )


def check_permutation(order: Sequence[int], n: int) -> tuple[int, ...]:
    """Validate a 1-based column order; return it as a tuple."""
    perm = tuple(order)
    if sorted(perm) != list(range(1, n + 1)):
        raise InvalidPermutationError(
            f"{perm!r} is not a permutation of 1..{n}"
        )
    return perm


def reorder_columns(H: HeffterArray, order: Sequence[int]) -> HeffterArray:
    """Apply the column reordering (a_1, ..., a_n).

    Column a_j of H becomes column j of the result, so each row is reordered
    by the same permutation while columns move as unbroken units.
    """
    perm = check_permutation(order, H.n)
    return HeffterArray(
        tuple(tuple(row[a - 1] for a in perm) for row in H.cells)
    )


def transpose(H: HeffterArray) -> HeffterArray:
    """The n x m array with cells[j][i] = H.cells[i][j]; same modulus."""
    return HeffterArray(tuple(zip(*H.cells)))
