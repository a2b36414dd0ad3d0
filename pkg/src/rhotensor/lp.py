"""Exact rational linear programming (two-phase tableau simplex, Bland's rule).

Problems are in standard form::

    minimize c.x  subject to  A x = b,  x >= 0

Input may be ints or :class:`fractions.Fraction`; there are no tolerances.
The tableau is kept integral with fraction-free (Edmonds) pivoting: the stored
entries are the true entries times a common positive denominator ``det``.
Infeasible problems come back with a Farkas certificate ``y`` satisfying
``y.A <= 0`` componentwise and ``y.b > 0``, which callers can re-check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


@dataclass
class LPResult:
    status: str  # "optimal" | "infeasible" | "unbounded"
    x: tuple[Fraction, ...] | None = None
    value: Fraction | None = None
    farkas: tuple[Fraction, ...] | None = None

    @property
    def feasible(self) -> bool:
        return self.status != "infeasible"


class _Tableau:
    def __init__(self, rows, basis):
        self.M = rows
        self.basis = basis
        self.det = 1

    def pivot(self, row, col):
        M = self.M
        p = M[row][col]
        det = self.det
        pr = M[row]
        for i, Mi in enumerate(M):
            if i == row:
                continue
            f = Mi[col]
            if f:
                M[i] = [(a * p - f * b) // det for a, b in zip(Mi, pr)]
            elif p != det:
                M[i] = [(a * p) // det for a in Mi]
        self.det = p
        if p < 0:
            self.M = [[-a for a in Mi] for Mi in self.M]
            self.det = -p
        self.basis[row] = col

    def run(self, cost_row, allowed) -> bool:
        """Bland's rule until optimal (True) or unbounded (False)."""
        m = len(self.basis)
        while True:
            M = self.M
            z = M[cost_row]
            col = next((j for j in allowed if z[j] < 0), None)
            if col is None:
                return True
            best = None
            for i in range(m):
                a = M[i][col]
                if a > 0:
                    if best is None:
                        best = i
                        continue
                    # compare M[i][-1]/a with the incumbent, ties by basis index
                    bi = best
                    lhs = M[i][-1] * M[bi][col]
                    rhs = M[bi][-1] * a
                    if lhs < rhs or (lhs == rhs and self.basis[i] < self.basis[bi]):
                        best = i
            if best is None:
                return False
            self.pivot(best, col)

    def value(self, i, j) -> Fraction:
        return Fraction(self.M[i][j], self.det)


def _integral_row(values) -> tuple[list[int], int]:
    fr = [Fraction(v) for v in values]
    s = math.lcm(*(v.denominator for v in fr)) if fr else 1
    return [int(v * s) for v in fr], s


def solve_lp(A: Sequence[Sequence], b: Sequence, c: Sequence | None = None) -> LPResult:
    m = len(A)
    n = len(A[0]) if m else len(c or ())
    c = [Fraction(v) for v in (c if c is not None else [0] * n)]
    if m == 0:
        if any(v < 0 for v in c):
            return LPResult("unbounded")
        return LPResult("optimal", tuple(Fraction(0) for _ in range(n)), Fraction(0))

    rows, factor = [], []
    for i in range(m):
        ints, s = _integral_row(list(A[i]) + [b[i]])
        if ints[-1] < 0:
            ints, s = [-v for v in ints], -s
        factor.append(s)
        # columns: x_0..x_{n-1}, artificials n..n+m-1, rhs
        rows.append(ints[:n] + [int(k == i) for k in range(m)] + [ints[-1]])
    cost, _ = _integral_row(c)
    phase2 = cost + [0] * (m + 1)
    phase1 = [-sum(rows[i][j] for i in range(m)) for j in range(n)] + [0] * m
    phase1.append(-sum(rows[i][-1] for i in range(m)))
    T = _Tableau(rows + [phase2, phase1], list(range(n, n + m)))
    T.run(m + 1, range(n))
    if T.M[m + 1][-1] < 0:
        # dual y_i = 1 - reduced cost of artificial i, mapped back to the input rows
        y = tuple((1 - T.value(m + 1, n + i)) * factor[i] for i in range(m))
        return LPResult("infeasible", farkas=y)

    if not any(c):
        # feasibility only: artificials left in the basis sit at zero
        x = [Fraction(0)] * n
        for i, j in enumerate(T.basis):
            if j < n:
                x[j] = T.value(i, -1)
        return LPResult("optimal", tuple(x), Fraction(0))

    # drive remaining artificials out of the basis, dropping redundant rows
    i = 0
    while i < len(T.basis):
        if T.basis[i] >= n:
            col = next((j for j in range(n) if T.M[i][j] != 0), None)
            if col is None:
                del T.M[i]
                del T.basis[i]
                continue
            T.pivot(i, col)
        i += 1
    k = len(T.basis)
    del T.M[k + 1]  # phase-1 cost row
    if not T.run(k, range(n)):
        return LPResult("unbounded")
    x = [Fraction(0)] * n
    for i, j in enumerate(T.basis):
        x[j] = T.value(i, -1)
    return LPResult("optimal", tuple(x), sum((ci * xi for ci, xi in zip(c, x)), Fraction(0)))


def is_feasible(A, b) -> bool:
    return solve_lp(A, b).feasible


def check_farkas(A, b, y) -> bool:
    """Verify an infeasibility certificate exactly."""
    n = len(A[0])
    ya = [sum(y[i] * A[i][j] for i in range(len(A))) for j in range(n)]
    return all(v <= 0 for v in ya) and sum(yi * bi for yi, bi in zip(y, b)) > 0


def check_solution(A, b, x) -> bool:
    return all(v >= 0 for v in x) and all(
        sum(a * xi for a, xi in zip(row, x)) == bi for row, bi in zip(A, b))
