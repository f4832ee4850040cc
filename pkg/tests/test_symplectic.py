import pytest

from meyer.errors import DimensionMismatch, GenusDecrease, NotSymplectic, NotUpperTriangular, NotUrSp
from meyer.exactlin import Matrix
from meyer.symplectic import (SpElement, UrSpElement, is_symplectic, random_ursp, split_ursp,
                              stabilize, standard_form, symplectic_pairing)


def test_standard_form_g1():
    assert standard_form(1).tolist() == [[0, 1], [-1, 0]]


def test_pairing_is_alternating():
    assert symplectic_pairing((1, 0, 0, 0), (0, 0, 1, 0), 2) == 1
    assert symplectic_pairing((0, 0, 1, 0), (1, 0, 0, 0), 2) == -1
    assert symplectic_pairing((1, 2, 3, 4), (1, 2, 3, 4), 2) == 0


def test_is_symplectic():
    assert is_symplectic(Matrix([[1, 1], [0, 1]]), 1)
    assert not is_symplectic(Matrix([[2, 0], [0, 1]]), 1)
    with pytest.raises(DimensionMismatch):
        is_symplectic(Matrix.identity(3), 1)


def test_sp_element_validates():
    with pytest.raises(NotSymplectic):
        SpElement(1, Matrix([[1, 1], [1, 1]]))
    a = SpElement(1, Matrix([[2, 1], [1, 1]]))
    assert (a @ a.inverse()).is_identity()
    assert (a ** -3) @ (a ** 3) == SpElement.identity(1)


def test_ursp_validates():
    with pytest.raises(NotUrSp):
        UrSpElement(1, Matrix([[2]]), Matrix([[0]]), Matrix([[1]]))
    with pytest.raises(NotUrSp):
        UrSpElement(2, Matrix.identity(2), Matrix([[0, 1], [0, 0]]), Matrix.identity(2))
    with pytest.raises(DimensionMismatch):
        UrSpElement(2, Matrix.identity(1), Matrix.zeros(1), Matrix.identity(1))


def test_split_ursp():
    a = split_ursp(SpElement(1, Matrix([[1, 3], [0, 1]])))
    assert (a.P[0, 0], a.Q[0, 0], a.S[0, 0]) == (1, 3, 1)
    with pytest.raises(NotUpperTriangular):
        split_ursp(SpElement(1, Matrix([[1, 0], [1, 1]])))


@pytest.mark.parametrize("g", [1, 2, 3, 4])
def test_random_ursp_contract(g):
    for seed in range(30):
        a = random_ursp(g, seed, 4)
        assert a == random_ursp(g, seed, 4)
        assert is_symplectic(a.matrix, g)
        assert a.Q.T @ a.S == a.S.T @ a.Q
        inv = a.inverse()
        assert (a @ inv).is_identity() and (inv @ a).is_identity()
        assert (a @ inv).matrix == (a.to_sp() @ inv.to_sp()).matrix


def test_random_ursp_zero_complexity_is_identity():
    a = random_ursp(2, 0, 0)
    assert a.P == Matrix.identity(2) and a.S == Matrix.identity(2) and a.Q.is_zero()


def test_block_product_matches_matrix_product():
    a, b = random_ursp(3, 1, 4), random_ursp(3, 2, 4)
    assert (a @ b).matrix == a.matrix @ b.matrix


def test_stabilize_ursp():
    a = random_ursp(2, 5, 3)
    s = stabilize(a, 4)
    assert s.genus == 4
    assert s.P.submatrix(range(2), range(2)) == a.P
    assert s.P[3, 3] == 1 and s.Q[3, 3] == 0 and s.S[2, 2] == 1
    assert stabilize(a, 2) == a
    with pytest.raises(GenusDecrease):
        stabilize(a, 1)


def test_stabilize_sp_matches_ursp():
    a = random_ursp(2, 9, 3)
    assert stabilize(a.to_sp(), 3).matrix == stabilize(a, 3).matrix
