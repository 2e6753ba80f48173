"""Small exact linear algebra helpers over Fraction.

Rows are sparse dicts {column key: nonzero Fraction}; column keys are
ints ordered naturally.  Nothing here knows about blades — callers map
blade masks to columns.
"""

from __future__ import annotations

from fractions import Fraction


class RowBasis:
    """Incremental row-echelon basis for sparse rational vectors."""

    def __init__(self) -> None:
        self._pivots: dict[int, dict[int, Fraction]] = {}

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def _reduce(self, row: dict[int, Fraction]) -> dict[int, Fraction]:
        row = {k: v for k, v in row.items() if v}
        while row:
            lead = min(row)
            pivot = self._pivots.get(lead)
            if pivot is None:
                return row
            factor = row[lead]  # pivots are normalized to leading 1
            for col, val in pivot.items():
                new = row.get(col, Fraction(0)) - factor * val
                if new:
                    row[col] = new
                else:
                    row.pop(col, None)
        return row

    def add(self, row: dict[int, Fraction]) -> bool:
        """Insert a vector; True iff it enlarged the span."""
        residue = self._reduce(row)
        if not residue:
            return False
        lead = min(residue)
        inv = 1 / residue[lead]
        self._pivots[lead] = {k: v * inv for k, v in residue.items()}
        return True

    def contains(self, row: dict[int, Fraction]) -> bool:
        return not self._reduce(row)


def det(matrix: list[list[Fraction]]) -> Fraction:
    """Determinant by fraction Gaussian elimination with row pivoting."""
    n = len(matrix)
    m = [list(map(Fraction, row)) for row in matrix]
    if any(len(row) != n for row in m):
        raise ValueError("matrix must be square")
    result = Fraction(1)
    for i in range(n):
        pivot_row = next((r for r in range(i, n) if m[r][i]), None)
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != i:
            m[i], m[pivot_row] = m[pivot_row], m[i]
            result = -result
        result *= m[i][i]
        for r in range(i + 1, n):
            if m[r][i]:
                factor = m[r][i] / m[i][i]
                for c in range(i, n):
                    m[r][c] -= factor * m[i][c]
    return result


def leading_principal_minors(matrix: list[list[Fraction]]) -> list[Fraction]:
    """Determinants of the upper-left k x k blocks, k = 1..n."""
    n = len(matrix)
    return [det([row[: k + 1] for row in matrix[: k + 1]]) for k in range(n)]
