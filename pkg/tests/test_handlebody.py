import pytest

from meyer.cocycle import tau
from meyer.errors import GenusMismatch
from meyer.exactlin import Matrix
from meyer.handlebody import invariant_form, mapping_torus_homology, phi_v, verify_cobounding
from meyer.symplectic import UrSpElement, random_ursp, stabilize
from meyer.words import evaluate_handlebody_word


def test_phi_v_of_identity_is_zero():
    assert phi_v(UrSpElement.identity(3)) == 0


def test_pure_shear_is_signature_of_q():
    # P = S = I: the invariant space is everything and the form is Q itself
    q = Matrix([[1, 0, 0], [0, -2, 1], [0, 1, 3]])
    a = UrSpElement(3, Matrix.identity(3), q, Matrix.identity(3))
    assert phi_v(a) == 1
    assert invariant_form(a).gram == q


def test_phi_v_bounded_by_genus():
    for g in (1, 2, 3):
        for seed in range(40):
            assert abs(phi_v(random_ursp(g, seed, 4))) <= g


@pytest.mark.parametrize("m", [1, 2, 5])
def test_powers_of_first_twist(m):
    for g in (1, 3):
        assert phi_v(evaluate_handlebody_word(f"t1^{m}", g)) == 1
        assert phi_v(evaluate_handlebody_word(f"t1^-{m}", g)) == -1


def test_cobounding():
    for g in (1, 2, 3):
        for k in range(20):
            a, b = random_ursp(g, 2 * k, 4), random_ursp(g, 2 * k + 1, 4)
            assert verify_cobounding(a, b)
            assert tau(a, b) == phi_v(a) + phi_v(b) - phi_v(a @ b)


def test_cobounding_genus_mismatch():
    with pytest.raises(GenusMismatch):
        verify_cobounding(UrSpElement.identity(1), UrSpElement.identity(2))


def test_stability():
    for seed in range(20):
        a = random_ursp(2, seed, 4)
        assert phi_v(stabilize(a, 3)) == phi_v(a) == phi_v(stabilize(a, 5))


class TestTorusReport:
    def test_s1_genus_two(self):
        rep = mapping_torus_homology(evaluate_handlebody_word("s1", 2))
        assert rep.h2_rank == rep.h2rel_rank == 1
        assert rep.h2_basis in (((1, 2),), ((-1, -2),))
        assert rep.intersection_gram.tolist() == [[2]]
        assert rep.signature == 1
        assert rep.h1_torsion is None

    def test_identity(self):
        rep = mapping_torus_homology(UrSpElement.identity(2))
        assert rep.h2_rank == rep.h2rel_rank == 2
        assert rep.h2rel_torsion == ()
        assert rep.intersection_gram.is_zero() and rep.signature == 0

    def test_torsion_is_reported(self):
        # P = -I on one coordinate gives coker(P - I) = Z/2
        p = Matrix([[-1, 0], [0, 1]])
        a = UrSpElement(2, p, Matrix.zeros(2), p)
        rep = mapping_torus_homology(a, with_h1_torsion=True)
        assert rep.h2rel_torsion == (2,)
        assert rep.h1_torsion == (2,)
        assert rep.h2_rank == rep.h2rel_rank == 1

    def test_random_consistency(self):
        for g in (1, 2, 3):
            for seed in range(30):
                a = random_ursp(g, seed, 4)
                rep = mapping_torus_homology(a)
                assert rep.h2_rank == rep.h2rel_rank
                assert rep.signature == phi_v(a)
                for v in rep.h2_basis:
                    assert (a.S - Matrix.identity(g)).apply(v) == (0,) * g

    def test_as_dict_is_json_ready(self):
        import json
        rep = mapping_torus_homology(evaluate_handlebody_word("t1^2 s1", 2), True)
        json.dumps(rep.as_dict())
