"""Meyer's signature cocycle on Sp(2g; Z).

For A, B in Sp(2g; Z) let V be the space of pairs (x, y) in Q^2g + Q^2g with
(A^{-1} - I) x + (B - I) y = 0, carrying the form

    <(x, y), (x', y')> = t(x + y) J (I - B) y'.

The form is symmetric and tau(A, B) is its signature.  Working over Q
instead of R changes nothing: the defining system and the form are
rational, and inertia is preserved under field extension.
"""

from dataclasses import dataclass

from .errors import GenusMismatch, NonSymmetricInput
from .exactlin import Matrix, kernel_basis, signature_of_symmetric
from .symplectic import as_sp, standard_form


@dataclass(frozen=True)
class CocycleSpace:
    genus: int
    A: object
    B: object
    basis: tuple
    gram: Matrix

    @property
    def dimension(self):
        return len(self.basis)


def _same_genus(*elements):
    gs = {e.genus for e in elements}
    if len(gs) != 1:
        raise GenusMismatch(f"elements have different genera: {sorted(gs)}")
    return gs.pop()


def cocycle_space(a, b) -> CocycleSpace:
    """Basis of V_{A,B} (as 4g-vectors (x, y)) and the Gram matrix of its form."""
    a, b = as_sp(a), as_sp(b)
    g = _same_genus(a, b)
    n = 2 * g
    eye = Matrix.identity(n)
    system = Matrix.block([[a.inverse().matrix - eye, b.matrix - eye]])
    basis = kernel_basis(system)
    k = len(basis)
    if k == 0:
        return CocycleSpace(g, a, b, (), Matrix.zeros(0))
    xs = Matrix.from_columns([v[:n] for v in basis], n)
    ys = Matrix.from_columns([v[n:] for v in basis], n)
    w = standard_form(g) @ (eye - b.matrix) @ ys
    gram = (xs + ys).T @ w
    if not gram.is_symmetric():
        raise NonSymmetricInput("Meyer form came out non-symmetric; check conventions")
    return CocycleSpace(g, a, b, tuple(basis), gram)


def tau(a, b) -> int:
    """Meyer's signature cocycle tau_g(A, B)."""
    space = cocycle_space(a, b)
    return signature_of_symmetric(space.gram).signature


def check_cocycle_identity(a, b, c) -> bool:
    """tau(A, B) + tau(AB, C) == tau(B, C) + tau(A, BC)."""
    a, b, c = as_sp(a), as_sp(b), as_sp(c)
    _same_genus(a, b, c)
    return tau(a, b) + tau(a @ b, c) == tau(b, c) + tau(a, b @ c)
