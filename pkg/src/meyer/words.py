"""Words in the Dehn twists t1, t2, t3 and the composites r1, s1.

Text format::

    word := "" | term (sep term)*
    sep  := whitespace | "*"
    term := gen ("^" signed-integer)?
    gen  := "t1" | "t2" | "t3" | "r1" | "s1"

with ``r1 = t2^-1 t3^-1 t1 t2`` and ``s1 = t2 t3 t1 t2``.  Words act on
H_1 by ``rho(uv) = rho(u) rho(v)``; a right-handed twist along a curve of
class c acts as the transvection ``x -> x + <c, x> c``.
"""

import enum
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .errors import GenusTooSmall, NoSolution, ParseError
from .exactlin import Matrix
from .symplectic import SpElement, UrSpElement, split_ursp, stabilize, symplectic_pairing


class Generator(enum.Enum):
    T1 = "t1"
    T2 = "t2"
    T3 = "t3"
    R1 = "r1"
    S1 = "s1"

    def __str__(self):
        return self.value


HANDLEBODY_GENERATORS = (Generator.T1, Generator.R1, Generator.S1)


@dataclass(frozen=True)
class Word:
    letters: tuple = ()

    def __post_init__(self):
        letters = tuple((Generator(gen), int(e)) for gen, e in self.letters)
        for _, e in letters:
            if e == 0:
                raise ValueError("exponents must be nonzero")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def parse(cls, text):
        return parse_word(text)

    def __str__(self):
        return " ".join(str(gen) if e == 1 else f"{gen}^{e}" for gen, e in self.letters)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __add__(self, other):
        return Word(self.letters + other.letters)

    def inverse(self):
        return Word(tuple((gen, -e) for gen, e in reversed(self.letters)))

    def generators(self):
        return {gen for gen, _ in self.letters}

    def in_handlebody_generators(self):
        return self.generators() <= set(HANDLEBODY_GENERATORS)


class _Parser:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def at_end(self):
        return self.pos >= len(self.text)

    def skip_ws(self):
        start = self.pos
        while not self.at_end() and self.text[self.pos].isspace():
            self.pos += 1
        return self.pos > start

    def word(self):
        letters = []
        self.skip_ws()
        if self.at_end():
            return Word(())
        letters.append(self.term())
        while True:
            spaced = self.skip_ws()
            if self.at_end():
                break
            if self.text[self.pos] == "*":
                self.pos += 1
                self.skip_ws()
                if self.at_end():
                    raise ParseError("expected generator after '*'", self.pos)
            elif not spaced:
                raise ParseError("expected separator", self.pos)
            letters.append(self.term())
        return Word(tuple(letters))

    def term(self):
        name = self.text[self.pos:self.pos + 2]
        try:
            gen = Generator(name)
        except ValueError:
            raise ParseError("expected one of t1, t2, t3, r1, s1", self.pos) from None
        self.pos += 2
        exponent = 1
        if not self.at_end() and self.text[self.pos] == "^":
            self.pos += 1
            exponent = self.integer()
        return gen, exponent

    def integer(self):
        start = self.pos
        if not self.at_end() and self.text[self.pos] in "+-":
            self.pos += 1
        digits = self.pos
        while not self.at_end() and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits:
            raise ParseError("expected integer exponent", self.pos)
        value = int(self.text[start:self.pos])
        if value == 0:
            raise ParseError("exponent must be nonzero", start)
        return value


def parse_word(text) -> Word:
    if isinstance(text, Word):
        return text
    return _Parser(text).word()


# -- homology classes of the chain curves -------------------------------------

# rho(s1) at genus 2 in the basis (alpha1, alpha2, beta1, beta2)
S1_BLOCKS = (((-1, 0), (1, 1)), ((2, -1), (-1, 1)), ((-1, 1), (0, 1)))


def s1_reference_matrix():
    p, q, s = (Matrix(b) for b in S1_BLOCKS)
    return Matrix.block([[p, q], [Matrix.zeros(2), s]])


@dataclass(frozen=True)
class ChainClasses:
    """Classes of C1, C2, C3 in genus-2 coordinates (alpha1, alpha2, beta1, beta2)."""

    c1: tuple
    c2: tuple
    c3: tuple

    def violations(self):
        out = []
        if self.c1 != (1, 0, 0, 0):
            out.append("c1 is not alpha1")
        if abs(symplectic_pairing(self.c1, self.c2, 2)) != 1:
            out.append("<c1, c2> != +-1")
        if abs(symplectic_pairing(self.c2, self.c3, 2)) != 1:
            out.append("<c2, c3> != +-1")
        if symplectic_pairing(self.c1, self.c3, 2) != 0:
            out.append("<c1, c3> != 0")
        t1, t2, t3 = (transvection(c, 2) for c in (self.c1, self.c2, self.c3))
        if (t2 @ t3 @ t1 @ t2).matrix != s1_reference_matrix():
            out.append("t2 t3 t1 t2 does not reproduce rho(s1)")
        r1 = t2.inverse() @ t3.inverse() @ t1 @ t2
        if not r1.blocks()[2].is_zero():
            out.append("r1 is not upper triangular")
        return out


def transvection(c, g) -> SpElement:
    """Action x -> x + <c, x> c of the right-handed twist along a curve of class c."""
    n = 2 * g
    # <c, x> = sum_i c_i x_{g+i} - c_{g+i} x_i  is the row vector  tc J
    row = [-c[g + j] for j in range(g)] + [c[j] for j in range(g)]
    m = [[int(i == j) + c[i] * row[j] for j in range(n)] for i in range(n)]
    return SpElement._trusted(g, Matrix.from_ints(m, n))


def derive_chain_classes(bound: int = 2) -> ChainClasses:
    """Recover [C2], [C3] by exhaustive search against the printed rho(s1).

    Candidates range over integer 4-vectors with entries in ``[-bound, bound]``.
    A pair is accepted when the transvections reproduce rho(s1), the pairing
    pattern of a chain of curves holds, and r1 acts upper-triangularly.  The
    lexicographically smallest accepted (c2, c3) is returned.
    """
    c1 = (1, 0, 0, 0)
    target = s1_reference_matrix()
    t1 = transvection(c1, 2)
    rng = range(-bound, bound + 1)
    c2s = [c for c in product(rng, repeat=4) if abs(symplectic_pairing(c1, c, 2)) == 1]
    c3s = [c for c in product(rng, repeat=4)
           if any(c) and symplectic_pairing(c1, c, 2) == 0]
    for c2 in c2s:
        t2 = transvection(c2, 2)
        for c3 in c3s:
            if abs(symplectic_pairing(c2, c3, 2)) != 1:
                continue
            t3 = transvection(c3, 2)
            if (t2 @ t3 @ t1 @ t2).matrix != target:
                continue
            found = ChainClasses(c1, c2, c3)
            if not found.violations():
                return found
    raise NoSolution("no chain classes reproduce rho(s1); check transvection conventions")


# Output of derive_chain_classes(); tests regenerate and compare.
CHAIN_CLASSES = ChainClasses(c1=(1, 0, 0, 0), c2=(-2, 1, -1, 0), c3=(-1, 1, 0, 0))

_DEFINITIONS = {
    Generator.R1: Word(((Generator.T2, -1), (Generator.T3, -1), (Generator.T1, 1),
                        (Generator.T2, 1))),
    Generator.S1: Word(((Generator.T2, 1), (Generator.T3, 1), (Generator.T1, 1),
                        (Generator.T2, 1))),
}

_TWIST_INDEX = {Generator.T1: 1, Generator.T2: 2, Generator.T3: 3}


def expand(gen) -> Word:
    """Definition of a generator as a word in the twists."""
    gen = Generator(gen)
    if gen in _DEFINITIONS:
        return _DEFINITIONS[gen]
    return Word(((gen, 1),))


def twist_letters(w) -> list:
    """Flatten a word into single twists ``(i, +-1)`` with i in {1, 2, 3}."""
    out = []
    for gen, e in parse_word(w):
        body = [(_TWIST_INDEX[g], s) for g, s in expand(gen)]
        if e < 0:
            body = [(i, -s) for i, s in reversed(body)]
        out.extend(body * abs(e))
    return out


@lru_cache(maxsize=None)
def twist_matrix(i: int, g: int) -> SpElement:
    if i == 1:
        return stabilize(transvection((1, 0), 1), g)
    if g < 2:
        raise GenusTooSmall(f"t{i} needs genus >= 2 (got {g})")
    c = (CHAIN_CLASSES.c2, CHAIN_CLASSES.c3)[i - 2]
    return stabilize(transvection(c, 2), g)


@lru_cache(maxsize=None)
def twist_inverse(i, g):
    return twist_matrix(i, g).inverse()


def generator_matrix(gen, g: int) -> SpElement:
    gen = Generator(gen)
    if gen in _TWIST_INDEX:
        return twist_matrix(_TWIST_INDEX[gen], g)
    if g < 2:
        raise GenusTooSmall(f"{gen} needs genus >= 2 (got {g})")
    return evaluate_word(expand(gen), g)


def evaluate_word(w, g: int) -> SpElement:
    """rho(w) as a product of twist matrices, leftmost letter leftmost."""
    out = SpElement.identity(g)
    for i, s in twist_letters(w):
        out = out @ (twist_matrix(i, g) if s > 0 else twist_inverse(i, g))
    return out


def evaluate_handlebody_word(w, g: int) -> UrSpElement:
    return split_ursp(evaluate_word(w, g))
