"""Search for simple reorderings of Heffter arrays, and a generic generator.

A single column permutation reorders every row simultaneously while moving
columns as units, so the columns of a column-simple array stay simple and
only row simplicity has to be searched.  Partial sums of a fixed prefix of
columns never change when the prefix is extended, so a prefix with a
repeated sum in any row can be pruned exactly: no completion can repair it.
The pruned depth-first search therefore finds the lexicographically least
valid permutation, or proves that none exists.

``generate_heffter`` builds m x n Heffter arrays from scratch by
backtracking over signed value placements on the free (m-1) x (n-1)
subgrid; the last cell of every row and column is forced by a zero-sum
constraint the moment its line fills, following a schedule that spreads
those forced closures as evenly as possible through the search.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import permutations
from typing import Iterator, Sequence

from .core import (
    HeffterArray,
    VerificationReport,
    from_rows,
    reorder_columns,
    verify_heffter,
)
from .errors import BudgetExceededError, OutOfRangeError, TooLargeError
from .modmath import half_bound

ORACLE_MAX_COLUMNS = 9  # n! complete checks beyond this are not desk-scale


@dataclass(frozen=True)
class SearchConfig:
    """Search strategy and resource limits.

    ``strategy`` selects pruned backtracking or plain exhaustive enumeration
    (both complete; both return the lexicographically least solution).  The
    seed only randomizes value order in ``generate_heffter``; permutation
    search is always deterministic.
    """

    strategy: str = "backtracking"
    node_budget: int = 5_000_000
    seed: int | None = None

    def __post_init__(self) -> None:
        if self.strategy not in ("backtracking", "exhaustive"):
            raise ValueError(f"unknown strategy {self.strategy!r}")
        if self.node_budget <= 0:
            raise ValueError("node_budget must be positive")


@dataclass(frozen=True)
class SearchOutcome:
    """Result of a permutation search.

    ``permutation`` is None when the search space was exhausted without a
    solution (a nonexistence verdict, not an error); ``report`` re-verifies
    the reordered array through the independent axiom checker.
    """

    permutation: tuple[int, ...] | None
    nodes: int
    report: VerificationReport | None


def _search_backtracking(H: HeffterArray, budget: int) -> tuple[tuple[int, ...] | None, int]:
    v = H.modulus
    rows = H.cells
    n = H.n
    nodes = 0
    prefix: list[int] = []
    used = [False] * (n + 1)
    sums = [0] * len(rows)
    seen: list[set[int]] = [set() for _ in rows]

    def extend() -> tuple[int, ...] | None:
        nonlocal nodes
        if len(prefix) == n:
            return tuple(prefix)
        for col in range(1, n + 1):
            if used[col]:
                continue
            nodes += 1
            if nodes > budget:
                raise BudgetExceededError(
                    f"permutation search exceeded {budget} nodes"
                )
            new = [(s + row[col - 1]) % v for s, row in zip(sums, rows)]
            if any(x in seen_i for x, seen_i in zip(new, seen)):
                continue  # a repeated partial sum can never be repaired
            old = sums[:]
            for i, x in enumerate(new):
                sums[i] = x
                seen[i].add(x)
            used[col] = True
            prefix.append(col)
            found = extend()
            if found is not None:
                return found
            prefix.pop()
            used[col] = False
            for i, x in enumerate(new):
                sums[i] = old[i]
                seen[i].remove(x)
        return None

    return extend(), nodes


def _rows_simple(rows: Sequence[Sequence[int]], order: Sequence[int], v: int) -> bool:
    for row in rows:
        acc = 0
        sums = set()
        for col in order:
            acc = (acc + row[col - 1]) % v
            if acc in sums:
                return False
            sums.add(acc)
    return True


def _search_exhaustive(H: HeffterArray, budget: int) -> tuple[tuple[int, ...] | None, int]:
    v = H.modulus
    nodes = 0
    for perm in permutations(range(1, H.n + 1)):
        nodes += 1
        if nodes > budget:
            raise BudgetExceededError(f"exhaustive search exceeded {budget} permutations")
        if _rows_simple(H.cells, perm, v):
            return perm, nodes
    return None, nodes


def find_simple_column_permutation(
    H: HeffterArray, cfg: SearchConfig = SearchConfig()
) -> SearchOutcome:
    """Find a column permutation making every row of H simple.

    Deterministic for a fixed configuration: both strategies explore columns
    in ascending order and return the lexicographically least valid
    permutation.  The returned permutation is re-verified through
    ``verify_heffter`` (soundness is checked, never trusted); ``permutation``
    is None when the full space was exhausted without a solution.  Raises
    BudgetExceededError when the node budget runs out first.
    """
    if cfg.strategy == "exhaustive":
        perm, nodes = _search_exhaustive(H, cfg.node_budget)
    else:
        perm, nodes = _search_backtracking(H, cfg.node_budget)
    if perm is None:
        return SearchOutcome(permutation=None, nodes=nodes, report=None)
    report = verify_heffter(reorder_columns(H, perm))
    if not (report.is_heffter and report.is_simple):
        raise AssertionError(
            f"search returned {perm} but re-verification failed"
        )
    return SearchOutcome(permutation=perm, nodes=nodes, report=report)


def brute_force_oracle(H: HeffterArray) -> list[tuple[int, ...]]:
    """Every valid column permutation of H, in lexicographic order.

    Independent of the pruned search: enumerates all n! permutations and
    checks each one's rows from scratch.  Restricted to n <= 9.
    """
    if H.n > ORACLE_MAX_COLUMNS:
        raise TooLargeError(f"oracle enumerates n! permutations; n={H.n} > {ORACLE_MAX_COLUMNS}")
    v = H.modulus
    return [
        perm
        for perm in permutations(range(1, H.n + 1))
        if _rows_simple(H.cells, perm, v)
    ]


def _fill_schedule(m: int, n: int) -> list[tuple[str, int, int]]:
    """Cell schedule for the generator: early, evenly spread line closures.

    Free cells live in the (m-1) x (n-1) top-left subgrid; the last cell of
    every row and column is forced by a zero-sum axiom.  Unevenly many rows
    and columns would otherwise pile several forced cells at the end of the
    search, where they act as a nearly unsatisfiable wall, so the surplus
    lines of the longer dimension are filled and closed one by one first and
    the remaining square subgrid is walked in L-shaped bands (a row strip,
    close that row, a column strip, close that column).  Every forced value
    is then reserved as high up the search tree as possible, and the only
    consecutive closures left are the final row, column, and corner.
    """
    R, C = m - 1, n - 1
    schedule: list[tuple[str, int, int]] = []
    extra_cols = max(0, C - R)
    extra_rows = max(0, R - C)
    for j in range(extra_cols):
        schedule.extend(("free", i, j) for i in range(R))
        schedule.append(("close-col", m - 1, j))
    for i in range(extra_rows):
        schedule.extend(("free", i, j) for j in range(C))
        schedule.append(("close-row", i, n - 1))
    # L-shaped bands over the remaining square block.
    size = min(R, C)
    for b in range(size):
        i0 = extra_rows + b
        j0 = extra_cols + b
        schedule.extend(("free", i0, j) for j in range(j0, C))
        schedule.append(("close-row", i0, n - 1))
        schedule.extend(("free", i, j0) for i in range(i0 + 1, R))
        schedule.append(("close-col", m - 1, j0))
    schedule.append(("close-row", m - 1, n - 1))  # corner; column n-1 then sums to 0
    return schedule


class _Exhausted(Exception):
    """One generator attempt searched its whole (pruned) space: no array exists."""


def _generate_attempt(
    m: int, n: int, values: list[int], budget: int
) -> list[list[int]] | None:
    """One bounded depth-first pass over the fill schedule.

    Returns the solved grid, None when ``budget`` nodes were spent, and
    raises _Exhausted when the space was searched completely (value order
    does not affect completeness, so one exhausted attempt settles
    nonexistence).
    """
    v = 2 * m * n + 1
    bound = half_bound(v)  # == m*n
    schedule = _fill_schedule(m, n)
    grid = [[0] * n for _ in range(m)]
    used = [False] * (bound + 1)
    row_sums = [0] * m
    col_sums = [0] * n
    nodes = 0

    def place(i: int, j: int, x: int) -> None:
        grid[i][j] = x
        used[abs(x)] = True
        row_sums[i] += x
        col_sums[j] += x

    def unplace(i: int, j: int, x: int) -> None:
        grid[i][j] = 0
        used[abs(x)] = False
        row_sums[i] -= x
        col_sums[j] -= x

    def forced_value(deficit: int) -> int | None:
        """The canonical value completing a line to 0 mod v, if placeable."""
        r = (-deficit) % v
        if r == 0:
            return None
        x = r if r <= bound else r - v
        return None if used[abs(x)] else x

    def fill(step: int) -> bool:
        nonlocal nodes
        if step == len(schedule):
            return True
        kind, i, j = schedule[step]
        if kind != "free":
            x = forced_value(row_sums[i] if kind == "close-row" else col_sums[j])
            if x is None:
                return False
            place(i, j, x)
            if fill(step + 1):
                return True
            unplace(i, j, x)
            return False
        for x in values:
            if used[abs(x)]:
                continue
            nodes += 1
            if nodes > budget:
                raise BudgetExceededError(f"attempt exceeded {budget} nodes")
            place(i, j, x)
            if fill(step + 1):
                return True
            unplace(i, j, x)
        return False

    try:
        if fill(0):
            assert col_sums[n - 1] % v == 0  # implied by the other 0-sums
            return grid
        raise _Exhausted
    except BudgetExceededError:
        return None


def generate_heffter(
    m: int, n: int, cfg: SearchConfig = SearchConfig()
) -> HeffterArray | None:
    """Backtracking construction of an m x n Heffter array over Z_{2mn+1}.

    Places signed values of distinct absolute value 1..mn on the free
    (m-1) x (n-1) subgrid following :func:`_fill_schedule`; every other cell
    is forced by a row or column zero sum the moment its line completes.

    With ``cfg.seed`` set, a single pass is run with that seed's shuffled
    value order and the full node budget.  Otherwise a fixed restart ladder
    is used: the plain ascending order first, then value orders shuffled
    with seeds 0, 1, 2, ..., each capped at a slice of the budget.  Both
    modes are fully deterministic for a fixed configuration.  Returns None
    if the search space is exhausted (no array exists); raises
    BudgetExceededError when the budget runs out first.
    """
    if m < 3 or n < 3:
        raise OutOfRangeError(f"Heffter arrays need m, n >= 3, got {m} x {n}")
    v = 2 * m * n + 1
    ascending = [s * a for a in range(1, half_bound(v) + 1) for s in (1, -1)]

    def restart_ladder() -> Iterator[tuple[list[int], int]]:
        per_restart = max(20_000, cfg.node_budget // 25)
        remaining = cfg.node_budget
        restart = -1  # first attempt: plain ascending order
        while remaining > 0:
            values = list(ascending)
            if restart >= 0:
                random.Random(restart).shuffle(values)
            slice_budget = min(per_restart, remaining)
            yield values, slice_budget
            remaining -= slice_budget
            restart += 1

    if cfg.seed is not None:
        seeded = list(ascending)
        random.Random(cfg.seed).shuffle(seeded)
        attempts: Iterator[tuple[list[int], int]] = iter([(seeded, cfg.node_budget)])
    else:
        attempts = restart_ladder()

    grid: list[list[int]] | None = None
    try:
        for values, budget in attempts:
            grid = _generate_attempt(m, n, values, budget)
            if grid is not None:
                break
    except _Exhausted:
        return None
    if grid is None:
        raise BudgetExceededError(
            f"generator exceeded {cfg.node_budget} nodes for {m} x {n}"
        )
    H = from_rows(grid)
    report = verify_heffter(H)
    if not report.is_heffter:
        raise AssertionError("generator produced a grid failing the axiom checker")
    return H
