from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from heffter.core import (
    HeffterArray,
    from_rows,
    is_simple_array,
    reorder_columns,
    transpose,
    verify_heffter,
)
from heffter.errors import InvalidEntryError, InvalidPermutationError
from heffter.h3 import H33, H34

H35 = ((6, 7, -10, -4, 1), (-9, 5, 2, -11, 13), (3, -12, 8, 15, -14))
H38 = (
    (-13, -11, 6, 3, 10, -8, 14, -1),
    (4, -7, 17, 19, 5, -16, -2, -20),
    (9, 18, -23, -22, -15, 24, -12, 21),
)
H38_REORDERED = (
    (-13, -11, -8, -1, 10, 6, 3, 14),
    (4, -7, -16, -20, 5, 17, 19, -2),
    (9, 18, 24, 21, -15, -23, -22, -12),
)


def test_array_metadata() -> None:
    H = from_rows(H35)
    assert (H.m, H.n, H.modulus) == (3, 5, 31)
    assert H.row(0) == (6, 7, -10, -4, 1)
    assert H.column(2) == (-10, 2, 8)


def test_construction_rejects_bad_entries() -> None:
    with pytest.raises(InvalidEntryError):
        from_rows([[0, 1, 2], [3, 4, 5], [6, 7, 8]])  # zero cell
    with pytest.raises(InvalidEntryError):
        from_rows([[1, 2, 99], [3, 4, 5], [6, 7, 8]])  # out of range mod 19
    with pytest.raises(InvalidEntryError):
        from_rows([[1, 2], [3, 4]])  # below minimum dimensions
    with pytest.raises(InvalidEntryError):
        from_rows([[1, 2, 3], [4, 5], [6, 7, 8]])  # ragged


def test_verify_published_arrays() -> None:
    for rows in (H35, H33, H34, H38, H38_REORDERED):
        report = verify_heffter(from_rows(rows))
        assert report.is_heffter


def test_verify_h33_simple_everywhere() -> None:
    report = verify_heffter(from_rows(H33))
    assert report.is_heffter and report.is_simple
    assert report.row_simple == (True, True, True)
    assert report.col_simple == (True, True, True)


def test_single_perturbation_breaks_sums_and_half_set() -> None:
    rows = [list(r) for r in H35]
    rows[0][0] = 5  # was 6: duplicates |5| and unbalances row 1, column 1
    report = verify_heffter(from_rows(rows))
    assert not report.half_set_ok
    assert report.row_sum_ok == (False, True, True)
    assert report.col_sum_ok == (False, True, True, True, True)
    assert not report.is_heffter


def test_is_simple_array_published_examples() -> None:
    assert is_simple_array(from_rows(H38_REORDERED))
    assert not is_simple_array(from_rows(H38))
    assert is_simple_array(from_rows(H34))


def test_reorder_columns_published_example() -> None:
    assert reorder_columns(from_rows(H38), (1, 2, 6, 8, 5, 3, 4, 7)).cells == H38_REORDERED


def test_reorder_columns_identity_and_gather() -> None:
    H = from_rows(H35)
    assert reorder_columns(H, (1, 2, 3, 4, 5)) == H
    assert reorder_columns(H, (5, 3, 1, 4, 2)).row(0) == (1, -10, 6, -4, 7)


def test_reorder_columns_rejects_non_permutations() -> None:
    H = from_rows(H35)
    for bad in ((1, 2, 3), (1, 1, 2, 3, 4), (0, 1, 2, 3, 4), (2, 3, 4, 5, 6)):
        with pytest.raises(InvalidPermutationError):
            reorder_columns(H, bad)


def test_transpose_involution_and_flags() -> None:
    H = from_rows(H35)
    assert transpose(transpose(H)) == H
    T = transpose(H)
    assert (T.m, T.n, T.modulus) == (5, 3, 31)
    report_h = verify_heffter(H)
    report_t = verify_heffter(T)
    assert report_t.row_sum_ok == report_h.col_sum_ok
    assert report_t.col_sum_ok == report_h.row_sum_ok
    assert report_t.row_simple == report_h.col_simple
    assert report_t.half_set_ok == report_h.half_set_ok


def test_transpose_of_h33_still_verifies() -> None:
    assert verify_heffter(transpose(from_rows(H33))).is_heffter


@given(st.permutations(list(range(1, 9))))
def test_reorder_preserves_heffter_axioms(perm: list[int]) -> None:
    H = from_rows(H38)
    report = verify_heffter(reorder_columns(H, perm))
    assert report.is_heffter


def test_cells_are_immutable() -> None:
    H = from_rows(H35)
    assert isinstance(H.cells, tuple)
    with pytest.raises(TypeError):
        H.cells[0][0] = 3  # type: ignore[index]
