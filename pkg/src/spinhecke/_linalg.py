"""Exact Gaussian elimination over the scalar field."""

from __future__ import annotations

from .scalars import Scalar, ZERO


def solve_exact(rows, rhs):
    """Solve an (possibly overdetermined) exact linear system.

    rows: list of coefficient rows, rhs: right-hand sides.  Returns the unique
    solution vector.  Raises ValueError("inconsistent linear system") when no
    solution exists and ValueError("underdetermined linear system") when the
    columns are dependent.
    """
    if not rows:
        raise ValueError("empty linear system")
    ncols = len(rows[0])
    aug = [list(row) + [b] for row, b in zip(rows, rhs)]
    pivots = []
    r = 0
    for col in range(ncols):
        pivot_row = next(
            (k for k in range(r, len(aug)) if not aug[k][col].is_zero()), None
        )
        if pivot_row is None:
            continue
        aug[r], aug[pivot_row] = aug[pivot_row], aug[r]
        inv = aug[r][col].inverse()
        aug[r] = [x * inv for x in aug[r]]
        for k in range(len(aug)):
            if k != r and not aug[k][col].is_zero():
                factor = aug[k][col]
                aug[k] = [a - factor * b for a, b in zip(aug[k], aug[r])]
        pivots.append(col)
        r += 1
        if r == len(aug):
            break
    for k in range(r, len(aug)):
        if not aug[k][ncols].is_zero():
            raise ValueError("inconsistent linear system")
    if len(pivots) < ncols:
        raise ValueError("underdetermined linear system")
    sol = [ZERO] * ncols
    for idx, col in enumerate(pivots):
        sol[col] = aug[idx][ncols]
    return sol


def column_rank(rows) -> int:
    if not rows:
        return 0
    ncols = len(rows[0])
    work = [list(row) for row in rows]
    rank = 0
    for col in range(ncols):
        pivot_row = next(
            (k for k in range(rank, len(work)) if not work[k][col].is_zero()), None
        )
        if pivot_row is None:
            continue
        work[rank], work[pivot_row] = work[pivot_row], work[rank]
        inv = work[rank][col].inverse()
        work[rank] = [x * inv for x in work[rank]]
        for k in range(rank + 1, len(work)):
            if not work[k][col].is_zero():
                factor = work[k][col]
                work[k] = [a - factor * b for a, b in zip(work[k], work[rank])]
        rank += 1
        if rank == len(work):
            break
    return rank
