from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from heffter.errors import ModulusMismatchError, ZeroResidueError
from heffter.modmath import canon, is_half_set, is_simple, partial_sums

# Rows of the published H(3,5) over Z_31 and the reordered H(3,8) over Z_49.
H35_ROW1 = (6, 7, -10, -4, 1)
H35_ENTRIES = [6, 7, -10, -4, 1, -9, 5, 2, -11, 13, 3, -12, 8, 15, -14]
H38_REORDERED_ROW1 = (-13, -11, -8, -1, 10, 6, 3, 14)
H38_ORIGINAL_ROW1 = (-13, -11, 6, 3, 10, -8, 14, -1)


def test_canon_reduces_into_symmetric_range() -> None:
    assert canon(36, 31) == 5
    assert canon(-16, 31) == 15
    assert canon(16, 31) == -15
    assert canon(1, 7) == 1


def test_canon_rejects_zero_class() -> None:
    with pytest.raises(ZeroResidueError):
        canon(62, 31)
    with pytest.raises(ZeroResidueError):
        canon(0, 7)


@given(st.integers(-10**6, 10**6), st.sampled_from([7, 19, 31, 49, 121]))
def test_canon_idempotent(x: int, v: int) -> None:
    if x % v == 0:
        return
    assert canon(canon(x, v), v) == canon(x, v)


def test_half_set_examples() -> None:
    assert is_half_set(H35_ENTRIES, 31)
    assert is_half_set({1, 2, 3}, 7)
    assert not is_half_set({1, -1, 2}, 7)
    assert not is_half_set({1, 2}, 7)  # wrong cardinality


def test_half_set_rejects_out_of_range_elements() -> None:
    with pytest.raises(ModulusMismatchError):
        is_half_set({1, 2, 16}, 31)


def test_partial_sums_published_row() -> None:
    assert partial_sums(H38_REORDERED_ROW1, 49) == [36, 25, 17, 16, 26, 32, 35, 0]


def test_partial_sums_small_cases() -> None:
    assert partial_sums((1, -1), 31) == [1, 0]
    assert partial_sums(H35_ROW1, 31) == [6, 13, 3, 30, 0]


def test_partial_sums_requires_nonempty_canonical_input() -> None:
    with pytest.raises(ValueError):
        partial_sums((), 31)
    with pytest.raises(ModulusMismatchError):
        partial_sums((1, 40), 31)


def test_is_simple_published_examples() -> None:
    assert is_simple(H38_REORDERED_ROW1, 49)
    # s_1 = s_6 = 36 in the original first row
    sums = partial_sums(H38_ORIGINAL_ROW1, 49)
    assert sums[0] == sums[5] == 36
    assert not is_simple(H38_ORIGINAL_ROW1, 49)


def test_short_sequences_are_simple() -> None:
    assert is_simple((5,), 31)
    assert is_simple((5, 7), 31)


def test_zero_total_iff_last_sum_zero() -> None:
    assert partial_sums((6, 7, -10, -4, 1), 31)[-1] == 0
    assert partial_sums((6, 7), 31)[-1] != 0


def _close_to_zero_sum(seq: list[int], v: int) -> list[int]:
    """Append the balancing element so the sequence sums to 0 mod v."""
    t = (-sum(seq)) % v
    if t == 0:
        return seq
    return seq + [canon(t, v)]


# Cyclic orderings of zero-sum parts: the setting where rotation/reversal
# invariance holds (for a nonzero total, wrapping breaks both).
_zero_sum_seqs = st.lists(
    st.integers(-24, 24).filter(lambda x: x != 0), min_size=1, max_size=12
).map(lambda seq: _close_to_zero_sum(seq, 49))


@given(_zero_sum_seqs)
def test_simplicity_invariant_under_rotation(seq: list[int]) -> None:
    # Rotating shifts every partial sum by a constant, preserving distinctness.
    rotated = seq[1:] + seq[:1]
    assert is_simple(seq, 49) == is_simple(rotated, 49)


@given(_zero_sum_seqs)
def test_simplicity_invariant_under_reversal(seq: list[int]) -> None:
    # Reversed partial sums are -s_{k-i}, a bijection of the originals.
    assert is_simple(seq, 49) == is_simple(seq[::-1], 49)


def test_invariances_need_the_zero_sum_hypothesis() -> None:
    # (3, -3, 5) mod 31 is simple but its reversal repeats a partial sum.
    assert is_simple((3, -3, 5), 31)
    assert not is_simple((5, -3, 3), 31)
