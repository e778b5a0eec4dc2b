from fractions import Fraction

from orbitstar import linalg
from orbitstar.scalars import GR_ZERO, GaussianRational


def test_det_and_invert():
    m = linalg.mat([[1, 2], [3, 4]])
    assert linalg.det(m) == GaussianRational(-2)
    inv = linalg.invert(m)
    assert linalg.mat_eq(linalg.mat_mul(m, inv), linalg.mat_identity(2))
    singular = linalg.mat([[1, 2], [2, 4]])
    assert linalg.det(singular) == GR_ZERO
    assert linalg.invert(singular) is None


def test_det_with_imaginary_entries():
    i = GaussianRational(0, 1)
    m = linalg.mat([[i, 0], [0, i]])
    assert linalg.det(m) == GaussianRational(-1)


def test_solve_dense():
    sol = linalg.solve_dense(
        [[1, 1], [1, -1]],
        [GaussianRational(3), GaussianRational(1)],
    )
    assert sol == [GaussianRational(2), GaussianRational(1)]


def test_infeasible_system():
    system = linalg.LinearSystem(1)
    assert system.add({0: 1}, GaussianRational(1))
    assert not system.add({0: 1}, GaussianRational(2), tag="clash")
    assert system.conflict == "clash"
    assert system.solve() is None


def test_free_variables_default_to_zero():
    system = linalg.LinearSystem(3)
    system.add({0: 1, 2: 1}, GaussianRational(5))
    sol = system.solve()
    assert sol[0] == GaussianRational(5)
    assert sol[1] == GR_ZERO
    assert sol[2] == GR_ZERO


def test_rank():
    assert linalg.rank_dense([[1, 2], [2, 4], [0, 1]]) == 2
    assert linalg.rank_dense([[0, 0]]) == 0


def test_scalar_matrix_detection():
    m = linalg.mat_scale(Fraction(-3, 4), linalg.mat_identity(3))
    assert linalg.mat_is_scalar(m) == GaussianRational(Fraction(-3, 4))
    m2 = linalg.mat([[1, 1], [0, 1]])
    assert linalg.mat_is_scalar(m2) is None
