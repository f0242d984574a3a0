from fractions import Fraction

from bracketwidth import linalg


def F(x):
    return Fraction(x)


def test_rank():
    assert linalg.rank([[F(1), F(2)], [F(2), F(4)]]) == 1
    assert linalg.rank([[F(1), F(0)], [F(0), F(1)]]) == 2
    assert linalg.rank([]) == 0
    assert linalg.rank([[F(0), F(0)]]) == 0


def test_solve_consistent():
    a = [[F(1), F(1)], [F(1), F(-1)]]
    x = linalg.solve(a, [F(3), F(1)])
    assert x == [F(2), F(1)]


def test_solve_inconsistent():
    a = [[F(1), F(1)], [F(2), F(2)]]
    assert linalg.solve(a, [F(1), F(3)]) is None


def test_solve_underdetermined_picks_one():
    a = [[F(1), F(1)]]
    x = linalg.solve(a, [F(5)])
    assert x is not None and x[0] + x[1] == 5


def test_solve_with_ranks():
    a = [[F(1), F(2)], [F(2), F(4)], [F(0), F(0)]]
    sol, rank_a, rank_aug = linalg.solve_with_ranks(a, [F(1), F(2), F(0)])
    assert sol is not None and rank_a == rank_aug == 1
    sol, rank_a, rank_aug = linalg.solve_with_ranks(a, [F(1), F(3), F(0)])
    assert sol is None and rank_aug == rank_a + 1
