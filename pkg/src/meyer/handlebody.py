"""Signature of handlebody mapping tori from the homological monodromy.

For a handlebody mapping class acting on H_1 by ``[[P, Q], [0, S]]`` the
second homology of its mapping torus is ``Ker(S - I)`` and the intersection
form there is ``<x, y> = tx tQ y``.  The signature of that form is the
handlebody Meyer function ``phi_v``.
"""

from dataclasses import dataclass, field
from typing import Optional

from .cocycle import tau
from .errors import GenusMismatch, NonSymmetricInput
from .exactlin import (Matrix, SignatureTriple, integer_kernel_basis, kernel_basis,
                       signature_of_symmetric, smith_normal_form)
from .symplectic import split_ursp


@dataclass(frozen=True)
class InvariantForm:
    genus: int
    basis: tuple
    gram: Matrix
    signature: SignatureTriple


def _gram(vectors, qt):
    if not vectors:
        return Matrix.zeros(0)
    x = Matrix.from_columns(vectors, qt.nrows)
    return x.T @ qt @ x


def invariant_form(a) -> InvariantForm:
    """The form tx tQ y on U = Ker(S - I) in the RREF primitive basis."""
    a = split_ursp(a)
    g = a.genus
    basis = kernel_basis(a.S - Matrix.identity(g))
    gram = _gram(basis, a.Q.T)
    # symmetric because tQ S is, and S y = y on the kernel
    if not gram.is_symmetric():
        raise NonSymmetricInput("invariant form is not symmetric; input is not in urSp")
    return InvariantForm(g, tuple(basis), gram, signature_of_symmetric(gram))


def phi_v(a) -> int:
    """Handlebody Meyer function: signature of the mapping torus."""
    return invariant_form(a).signature.signature


@dataclass(frozen=True)
class TorusHomologyReport:
    """Integral homological data of a handlebody mapping torus M.

    ``h2_basis`` is a Z-basis of H_2(M) = Ker(S - I).  H_2(M, dM) is the
    coinvariant module coker(P - I) = Z^h2rel_rank + torsion; its coordinates
    are the rows of ``coinvariant_transform`` (the left Smith transform U of
    P - I), and generators are the columns of U^{-1}.  ``d_matrix`` sends
    x in Ker(S - I) to the coinvariant coordinates of the boundary class Qx,
    each coordinate reduced modulo its elementary divisor.
    ``intersection_gram`` pairs d(x_i) with x_j over the ``invariant_form``
    basis x_1, ..., x_k.
    """

    genus: int
    h2_rank: int
    h2_basis: tuple
    h2rel_rank: int
    h2rel_torsion: tuple
    elementary_divisors: tuple
    coinvariant_transform: Matrix
    d_matrix: Matrix
    intersection_gram: Matrix
    signature: int
    h1_torsion: Optional[tuple] = field(default=None)

    def as_dict(self):
        return {
            "genus": self.genus,
            "h2_rank": self.h2_rank,
            "h2_basis": [list(v) for v in self.h2_basis],
            "h2rel_rank": self.h2rel_rank,
            "h2rel_torsion": list(self.h2rel_torsion),
            "d_matrix": self.d_matrix.tolist(),
            "intersection_gram": [[str(x) for x in r] for r in self.intersection_gram.rows],
            "signature": self.signature,
            "h1_torsion": None if self.h1_torsion is None else list(self.h1_torsion),
        }


def mapping_torus_homology(a, with_h1_torsion: bool = False) -> TorusHomologyReport:
    a = split_ursp(a)
    g = a.genus
    eye = Matrix.identity(g)
    h2_basis = tuple(integer_kernel_basis(a.S - eye))

    snf = smith_normal_form(a.P - eye)
    divisors = snf.diagonal
    h2rel_rank = sum(1 for d in divisors if d == 0)
    torsion = tuple(d for d in divisors if d > 1)

    # x -> Qx in D-coordinates, then into coinvariant coordinates
    dq = (snf.U @ a.Q).tolist()
    for i, d in enumerate(divisors):
        if d == 1:
            dq[i] = [0] * g
        elif d > 1:
            dq[i] = [x % d for x in dq[i]]
    d_matrix = Matrix.from_ints(dq, g)

    # pair lifted boundary classes with invariant cycles: <D_i, beta_j> = delta_ij
    form = invariant_form(a)
    lift = snf.U.inverse()
    if form.basis:
        x = Matrix.from_columns(form.basis, g)
        gram = (lift @ d_matrix @ x).T @ x
    else:
        gram = Matrix.zeros(0)
    if not gram.is_symmetric():
        raise NonSymmetricInput("intersection form on H_2(M) is not symmetric")
    sig = signature_of_symmetric(gram).signature

    h1 = None
    if with_h1_torsion:
        h1 = tuple(d for d in smith_normal_form(a.S - eye).diagonal if d > 1)
    return TorusHomologyReport(
        genus=g, h2_rank=len(h2_basis), h2_basis=h2_basis, h2rel_rank=h2rel_rank,
        h2rel_torsion=torsion, elementary_divisors=divisors, coinvariant_transform=snf.U,
        d_matrix=d_matrix, intersection_gram=gram, signature=sig, h1_torsion=h1)


def verify_cobounding(a, b) -> bool:
    """tau(A, B) == phi_v(A) + phi_v(B) - phi_v(AB)."""
    a, b = split_ursp(a), split_ursp(b)
    if a.genus != b.genus:
        raise GenusMismatch(f"genus {a.genus} vs {b.genus}")
    return tau(a, b) == phi_v(a) + phi_v(b) - phi_v(a @ b)

