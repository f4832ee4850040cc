"""Seeded verification suites shared by the ``verify`` command and the tests.

Each suite returns a :class:`SuiteResult` holding one :class:`Check` per
comparison.  Samples are pure functions of ``(genus, seed, case index)`` so a
rerun reproduces every line.
"""

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .cocycle import check_cocycle_identity, cocycle_space, tau
from .errors import GenusTooSmall
from .functions import (MuConstants, compare, format_rational, phi_h, twist_value,
                        verify_main_theorem)
from .handlebody import mapping_torus_homology, phi_v, verify_cobounding
from .symplectic import SpElement, random_ursp, split_ursp, stabilize
from .words import (S1_BLOCKS, evaluate_handlebody_word, evaluate_word, twist_matrix)

COMPLEXITY = 4


@dataclass(frozen=True)
class Check:
    label: str
    passed: bool
    detail: str = ""

    def as_dict(self):
        return {"label": self.label, "pass": self.passed, "detail": self.detail}


@dataclass
class SuiteResult:
    suite: str
    genus: int
    checks: list = field(default_factory=list)
    skipped: str = ""

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def add(self, label, passed, detail=""):
        self.checks.append(Check(label, bool(passed), detail))

    def failures(self):
        return [c for c in self.checks if not c.passed]

    def summary(self):
        if self.skipped:
            return f"{self.suite} g={self.genus}: skipped ({self.skipped})"
        n = len(self.checks)
        bad = len(self.failures())
        status = "PASS" if not bad else "FAIL"
        return f"{self.suite} g={self.genus}: {status} ({n - bad}/{n} checks)"

    def as_dict(self):
        return {"suite": self.suite, "genus": self.genus, "pass": self.passed,
                "skipped": self.skipped or None, "checks": [c.as_dict() for c in self.checks]}


def sample_ursp(g, seed, index):
    return random_ursp(g, seed * 100_003 + index, COMPLEXITY)


def _sample_twist_word_sp(g, rng, length=6):
    out = SpElement.identity(g)
    for _ in range(length):
        t = twist_matrix(rng.choice((1, 2, 3)), g)
        out = out @ (t if rng.random() < 0.5 else t.inverse())
    return out


def _require(g, minimum, suite):
    if g < minimum:
        raise GenusTooSmall(f"suite {suite} needs genus >= {minimum} (got {g})")


def suite_cocycle(g, seed=0, cases=100):
    res = SuiteResult("cocycle", g)
    eye = SpElement.identity(g)
    for k in range(cases):
        a, b, c = (sample_ursp(g, seed, 3 * k + j) for j in range(3))
        res.add(f"identity urSp triple {k}", check_cocycle_identity(a, b, c))
        res.add(f"normalization {k}", tau(eye, a) == 0 and tau(a, eye) == 0)
    if g >= 2:
        rng = random.Random(f"cocycle-twists:{g}:{seed}")
        for k in range(max(1, cases // 5)):
            a, b, c = (_sample_twist_word_sp(g, rng) for _ in range(3))
            res.add(f"identity twist triple {k}", check_cocycle_identity(a, b, c))
            ai = a.inverse()
            res.add(f"tau(A, A^-1) = tau(A^-1, A) twist {k}", tau(a, ai) == tau(ai, a))
    return res


def suite_cobounding(g, seed=0, cases=100):
    """Cobounding identity plus mapping-torus report consistency on each sample."""
    res = SuiteResult("cobounding", g)
    for k in range(cases):
        a, b = sample_ursp(g, seed, 2 * k), sample_ursp(g, seed, 2 * k + 1)
        res.add(f"cobounding pair {k}", verify_cobounding(a, b))
        for name, x in (("A", a), ("B", b)):
            rep = mapping_torus_homology(x)
            res.add(f"torus {name}{k}", rep.h2_rank == rep.h2rel_rank
                    and rep.signature == phi_v(x),
                    f"h2={rep.h2_rank} h2rel={rep.h2rel_rank} sign={rep.signature}")
    return res


def suite_bound(g, seed=0, cases=100):
    res = SuiteResult("bound", g)
    samples = [sample_ursp(g, seed, k) for k in range(cases)]
    for k, a in enumerate(samples):
        v = phi_v(a)
        res.add(f"|phi_v| <= g sample {k}", abs(v) <= g, f"phi_v={v}")
    for k in range(len(samples) - 1):
        space = cocycle_space(samples[k], samples[k + 1])
        t = tau(samples[k], samples[k + 1])
        res.add(f"|tau| <= dim V <= 4g pair {k}",
                abs(t) <= space.dimension <= 4 * g, f"tau={t} dim={space.dimension}")
    return res


def suite_stability(g, seed=0, cases=100):
    res = SuiteResult("stability", g)
    for k in range(cases):
        a = sample_ursp(g, seed, k)
        v = phi_v(a)
        one, two = stabilize(a, g + 1), stabilize(a, g + 2)
        res.add(f"phi_(g+1)(iota A) = phi_g(A) sample {k}", phi_v(one) == v)
        res.add(f"iterated stabilization {k}", stabilize(one, g + 2) == two and phi_v(two) == v)
    return res


def suite_lemma41(g, seed=0, cases=0):
    _require(g, 2, "lemma41")
    res = SuiteResult("lemma41", g)
    t1, t2, t3 = (twist_matrix(i, g) for i in (1, 2, 3))
    for label, got, want in (("tau(T1, T2)", tau(t1, t2), 0),
                             ("tau(T3, T1T2)", tau(t3, t1 @ t2), 0),
                             ("tau(T2, T3T1T2)", tau(t2, t3 @ t1 @ t2), 1)):
        res.add(f"{label} = {want}", got == want, f"got {got}")
    for i in (1, 2, 3):
        v = phi_h(f"t{i}", g)
        res.add(f"phi_h(t{i}) = (g+1)/(2g+1)", v == twist_value(g), format_rational(v))
    want = Fraction(2 * g + 3, 2 * g + 1)
    for word in ("s1", "t2 t3 t1 t2"):
        for fold in ("left", "right"):
            v = phi_h(word, g, fold)
            res.add(f"phi_h({word}) = (2g+3)/(2g+1) [{fold}]", v == want, format_rational(v))
    return res


def suite_lemma44(g, seed=0, cases=0):
    res = SuiteResult("lemma44", g)
    for m in range(1, 11):
        a = evaluate_handlebody_word(f"t1^{m}", g)
        res.add(f"phi_v(t1^{m}) = 1", phi_v(a) == 1)
        ok = (a.P[0, 0] == 1 and a.Q[0, 0] == m and a.S[0, 0] == 1
              and sum(abs(x) for r in a.Q.rows for x in r) == m)
        res.add(f"rho(t1^{m}) = [[1, {m}], [0, 1]] + stabilization", ok)
    return res


def suite_lemma45(g, seed=0, cases=0):
    _require(g, 2, "lemma45")
    res = SuiteResult("lemma45", g)
    s1 = evaluate_handlebody_word("s1", 2)
    p, q, s = S1_BLOCKS
    res.add("rho(s1) blocks at g=2", (s1.P.tolist(), s1.Q.tolist(), s1.S.tolist())
            == ([list(r) for r in p], [list(r) for r in q], [list(r) for r in s]))
    res.add("s1 equals t2 t3 t1 t2", evaluate_word("s1", g) == evaluate_word("t2 t3 t1 t2", g))
    v = phi_v(evaluate_handlebody_word("s1", g))
    res.add("phi_v(s1) = 1", v == 1, f"got {v}")
    return res


def suite_main_theorem(g, seed=0, cases=50):
    _require(g, 2, "main-theorem")
    res = SuiteResult("main-theorem", g)
    if g % 2 == 0:
        key, want = "s1", Fraction(2, 2 * g + 1)
    else:
        key, want = f"t1 s1^{(g + 1) // 2}", Fraction(1, 2 * g + 1)
    row = compare(key, g)
    res.add(f"(phi_h - phi_v)({key}) = {format_rational(want)}", row.difference == want,
            row.line())
    consts = MuConstants.for_genus(g)
    res.add(f"mu({key}) = 1", row.scaled_mu == consts.scale, row.line())
    report = verify_main_theorem(g, ["r1", "t1", "s1", "t1 s1"], seed, n_random=cases)
    for r in report.rows:
        res.add(f"difference = c_g*mu on {r.word}", r.passed, r.line())
    r1 = compare("r1", g)
    res.add("r1: both sides 0", r1.difference == 0 and r1.scaled_mu == 0, r1.line())
    return res


SUITES = {
    "cocycle": suite_cocycle,
    "cobounding": suite_cobounding,
    "bound": suite_bound,
    "stability": suite_stability,
    "lemma41": suite_lemma41,
    "lemma44": suite_lemma44,
    "lemma45": suite_lemma45,
    "main-theorem": suite_main_theorem,
}

MIN_GENUS = {"lemma41": 2, "lemma45": 2, "main-theorem": 2}


def run_suite(name, g, seed=0, cases=100):
    if name == "all":
        out = []
        for key, fn in SUITES.items():
            if g < MIN_GENUS.get(key, 1):
                out.append(SuiteResult(key, g, skipped=f"needs genus >= {MIN_GENUS[key]}"))
            else:
                out.append(fn(g, seed, cases))
        return out
    return [SUITES[name](g, seed, cases)]
