"""Meyer function on the hyperelliptic mapping class group and the
homomorphism mu on the hyperelliptic handlebody group.

``phi_h`` is evaluated purely from the cobounding recursion

    phi(uv) = phi(u) + phi(v) - tau(rho(u), rho(v)),
    phi(t_i) = (g + 1) / (2g + 1),
    phi(u^-1) = tau(rho(u), rho(u)^-1) - phi(u),

with r1 and s1 expanded into twists, so no value on a composite generator
is ever stored.
"""

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .cocycle import tau
from .errors import GenusTooSmall, NotInHandlebodyGroup
from .handlebody import phi_v
from .symplectic import SpElement, split_ursp
from .words import (HANDLEBODY_GENERATORS, Generator, Word, parse_word, twist_inverse,
                    twist_letters, twist_matrix)


def format_rational(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def twist_value(g: int) -> Fraction:
    return Fraction(g + 1, 2 * g + 1)


@lru_cache(maxsize=None)
def _letter_value(i, sign, g):
    base = twist_value(g)
    if sign > 0:
        return base
    return tau(twist_matrix(i, g), twist_inverse(i, g)) - base


def _phi_h_with_matrix(w, g):
    letters = twist_letters(w)
    phi = Fraction(0)
    m = SpElement.identity(g)
    for i, s in letters:
        t = twist_matrix(i, g) if s > 0 else twist_inverse(i, g)
        phi += _letter_value(i, s, g) - tau(m, t)
        m = m @ t
    return phi, m


def phi_h(w, g: int, fold: str = "left") -> Fraction:
    """phi_g^H of a word, by the cocycle recursion.

    ``fold="right"`` brackets the word from the other end; both give the same
    value because tau is a cocycle.
    """
    w = parse_word(w)
    if fold == "left":
        return _phi_h_with_matrix(w, g)[0]
    if fold != "right":
        raise ValueError("fold must be 'left' or 'right'")
    phi = Fraction(0)
    m = SpElement.identity(g)
    for i, s in reversed(twist_letters(w)):
        t = twist_matrix(i, g) if s > 0 else twist_inverse(i, g)
        phi += _letter_value(i, s, g) - tau(t, m)
        m = t @ m
    return phi


@dataclass(frozen=True)
class MuConstants:
    """Values of the generator mu of Hom(H(V_g), Z) on t1, s1, r1."""

    genus: int
    mu_t1: Fraction
    mu_s1: Fraction
    mu_r1: Fraction
    scale: Fraction

    @classmethod
    def for_genus(cls, g):
        if g < 1:
            raise GenusTooSmall("genus must be positive")
        if g % 2 == 0:
            c = cls(g, Fraction(-g, 2), Fraction(1), Fraction(0), Fraction(2, 2 * g + 1))
        else:
            c = cls(g, Fraction(-g), Fraction(2), Fraction(0), Fraction(1, 2 * g + 1))
        c.check_relations()
        return c

    def check_relations(self):
        # relations of the abelianization: 4[t1] + 2g[s1] = 0, 2(g+1)[t1] + g(g+1)[s1] = 0
        g = self.genus
        if 4 * self.mu_t1 + 2 * g * self.mu_s1 != 0:
            raise AssertionError("mu does not kill 4[t1] + 2g[s1]")
        if 2 * (g + 1) * self.mu_t1 + g * (g + 1) * self.mu_s1 != 0:
            raise AssertionError("mu does not kill 2(g+1)[t1] + g(g+1)[s1]")

    def value(self, gen):
        return {Generator.T1: self.mu_t1, Generator.S1: self.mu_s1,
                Generator.R1: self.mu_r1}[gen]


def _require_handlebody(w):
    bad = w.generators() - set(HANDLEBODY_GENERATORS)
    if bad:
        names = ", ".join(sorted(str(b) for b in bad))
        raise NotInHandlebodyGroup(f"word uses {names}; mu is defined on words in t1, r1, s1")


def mu(w, g: int) -> Fraction:
    w = parse_word(w)
    _require_handlebody(w)
    consts = MuConstants.for_genus(g)
    return sum((e * consts.value(gen) for gen, e in w), Fraction(0))


def difference(w, g: int) -> Fraction:
    """(phi_h - phi_v)(w) for a word in t1, r1, s1."""
    w = parse_word(w)
    _require_handlebody(w)
    ph, m = _phi_h_with_matrix(w, g)
    return ph - phi_v(split_ursp(m))


@dataclass(frozen=True)
class ComparisonRow:
    word: Word
    phi_h: Fraction
    phi_v: int
    difference: Fraction
    scaled_mu: Fraction

    @property
    def passed(self):
        return self.difference == self.scaled_mu

    def line(self):
        return " | ".join([str(self.word) or "1", format_rational(self.phi_h), str(self.phi_v),
                           format_rational(self.difference), format_rational(self.scaled_mu),
                           "pass" if self.passed else "FAIL"])

    def as_dict(self):
        return {"word": str(self.word), "phi_h": format_rational(self.phi_h),
                "phi_v": self.phi_v, "difference": format_rational(self.difference),
                "c_g_mu": format_rational(self.scaled_mu), "pass": self.passed}


@dataclass(frozen=True)
class MainTheoremReport:
    genus: int
    scale: Fraction
    rows: tuple = field(default=())

    @property
    def passed(self):
        return all(r.passed for r in self.rows)

    def lines(self):
        yield "word | phi_h | phi_v | difference | c_g*mu | pass"
        for r in self.rows:
            yield r.line()

    def as_dict(self):
        return {"genus": self.genus, "c_g": format_rational(self.scale), "pass": self.passed,
                "rows": [r.as_dict() for r in self.rows]}


def random_handlebody_word(rng, max_length=12) -> Word:
    n = rng.randint(1, max_length)
    return Word(tuple((rng.choice(HANDLEBODY_GENERATORS), rng.choice((-1, 1)))
                      for _ in range(n)))


def compare(w, g) -> ComparisonRow:
    w = parse_word(w)
    _require_handlebody(w)
    ph, m = _phi_h_with_matrix(w, g)
    pv = phi_v(split_ursp(m))
    consts = MuConstants.for_genus(g)
    return ComparisonRow(w, ph, pv, ph - pv, consts.scale * mu(w, g))


def verify_main_theorem(g: int, sample_words=(), seed: int = 0, n_random: int = 50,
                        max_length: int = 12) -> MainTheoremReport:
    """Check phi_h - phi_v == c_g * mu on the given words plus random ones."""
    if g < 2:
        raise GenusTooSmall("the main theorem is verified for g >= 2 only")
    rng = random.Random(f"words:{g}:{seed}")
    words = [parse_word(w) for w in sample_words]
    words += [random_handlebody_word(rng, max_length) for _ in range(n_random)]
    consts = MuConstants.for_genus(g)
    return MainTheoremReport(g, consts.scale, tuple(compare(w, g) for w in words))
