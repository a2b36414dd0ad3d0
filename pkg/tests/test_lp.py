import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.optimize import linprog

from rhotensor.lp import check_farkas, check_solution, is_feasible, solve_lp


def test_small_examples():
    res = solve_lp([[1, 1]], [2], [1, 2])
    assert res.status == "optimal" and res.value == 2 and res.x == (2, 0)
    res = solve_lp([[1, 1]], [-1])
    assert res.status == "infeasible" and check_farkas([[1, 1]], [-1], res.farkas)
    assert solve_lp([[1, -1]], [0], [-1, 0]).status == "unbounded"
    assert solve_lp([], [], [1, 1]).value == 0
    assert not is_feasible([[1, 0], [1, 0]], [1, 2])


def test_rational_data_and_redundant_rows():
    A = [[Fraction(1, 3), Fraction(2, 3)], [Fraction(2, 3), Fraction(4, 3)]]
    res = solve_lp(A, [1, 2], [1, 1])
    assert res.status == "optimal" and check_solution(A, [1, 2], res.x)
    assert res.value == Fraction(3, 2)


def test_degenerate_cycle_prone_instance():
    # Beale's example in equality form; Bland's rule must terminate
    A = [[Fraction(1, 4), -8, -1, 9, 1, 0, 0],
         [Fraction(1, 2), -12, Fraction(-1, 2), 3, 0, 1, 0],
         [0, 0, 1, 0, 0, 0, 1]]
    b = [0, 0, 1]
    c = [Fraction(-3, 4), 20, Fraction(-1, 2), 6, 0, 0, 0]
    res = solve_lp(A, b, c)
    assert res.status == "optimal" and res.value == Fraction(-5, 4)


def _random_instance(rng, m, n):
    A = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(m)]
    b = [rng.randint(-5, 5) for _ in range(m)]
    c = [rng.randint(-3, 5) for _ in range(n)]
    return A, b, c


@pytest.mark.parametrize("seed", range(300))
def test_against_scipy(seed):
    rng = random.Random(seed)
    m, n = rng.randint(1, 4), rng.randint(1, 6)
    A, b, c = _random_instance(rng, m, n)
    # box the variables so scipy and we agree on boundedness
    if seed % 2:
        A = [row + [0] * n for row in A] + [[int(i == j) for j in range(n)] + [int(i == j) for j in range(n)]
                                            for i in range(n)]
        b = b + [6] * n
        c = c + [0] * n
    ours = solve_lp(A, b, c)
    ref = linprog(c, A_eq=A, b_eq=b, bounds=(0, None), method="highs")
    if ref.status == 2:
        assert ours.status == "infeasible"
        assert check_farkas(A, b, ours.farkas)
    elif ref.status == 3:
        assert ours.status == "unbounded"
    else:
        assert ours.status == "optimal"
        assert check_solution(A, b, ours.x)
        assert abs(float(ours.value) - ref.fun) < 1e-7


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_feasibility_verdicts_are_certified(data):
    m = data.draw(st.integers(1, 5))
    n = data.draw(st.integers(1, 5))
    A = [data.draw(st.lists(st.integers(-3, 3), min_size=n, max_size=n)) for _ in range(m)]
    b = data.draw(st.lists(st.integers(-4, 4), min_size=m, max_size=m))
    res = solve_lp(A, b)
    if res.feasible:
        assert check_solution(A, b, res.x)
    else:
        assert check_farkas(A, b, res.farkas)
