from fractions import Fraction

from hypothesis import given
import hypothesis.strategies as st

from cuntzsum.linalg import RHS, Echelon, is_positive_semidefinite, solve
from cuntzsum.scalars import gauss


def test_solve_unique():
    # x + y = 3, x - y = 1
    sol = solve([{"x": 1, "y": 1, RHS: 3}, {"x": 1, "y": -1, RHS: 1}], ["x", "y"])
    assert sol.consistent and sol.unique
    assert sol.particular == {"x": 2, "y": 1}


def test_solve_underdetermined_and_inconsistent():
    sol = solve([{"x": 1, "y": 1}], ["x", "y"])
    assert sol.consistent and not sol.unique and sol.dimension == 1
    bad = solve([{"x": 1, RHS: 1}, {"x": 2, RHS: 3}], ["x"])
    assert not bad.consistent


def test_echelon_exact_and_complex():
    ech = Echelon()
    assert ech.add({"a": gauss(0, 1), "b": 1})
    assert not ech.add({"a": 1, "b": gauss(0, -1)})  # -i times the first
    assert ech.contains({"a": 2, "b": gauss(0, -2)})
    assert not ech.contains({"a": 1})
    assert ech.rank == 1


@given(st.lists(st.lists(st.integers(-3, 3), min_size=3, max_size=3), min_size=1, max_size=4))
def test_rank_matches_gram_psd(rows):
    # A^T A is always positive semidefinite
    gram = [[sum(Fraction(r[i] * r[j]) for r in rows) for j in range(3)] for i in range(3)]
    assert is_positive_semidefinite(gram)
    ech = Echelon()
    for r in rows:
        ech.add({k: v for k, v in enumerate(r) if v})
    assert ech.rank <= min(len(rows), 3)


def test_psd_rejects_indefinite():
    assert not is_positive_semidefinite([[1, 2], [2, 1]])
    assert is_positive_semidefinite([[0, 0], [0, 0]])
    assert not is_positive_semidefinite([[0, 1], [1, 0]])
    assert is_positive_semidefinite([[1, gauss(0, 1)], [gauss(0, -1), 1]])
