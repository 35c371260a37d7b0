"""Named invariant suites behind the ``verify`` command.

Every suite draws seeded random instances, checks one mathematical
identity or inequality at a fixed tolerance, and reports the worst slack
together with a minimal counterexample when something fails (which would
mean a bug, not new mathematics).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from . import engine
from .bounds import W, fact21_check, lemma3_envelope, phi_coeff, random_admissible_profile
from .circle import complement, measure
from .constructions import blowup
from .discrete import mono_edges
from .errors import DomainError
from .sampling import random_arcset, random_colouring, rng_from_seed

TOL_IDENTITY = 1e-9
TOL_LIPSCHITZ = 1e-12


@dataclass
class SuiteResult:
    suite: str
    samples: int
    seed: int
    passed: bool
    checked: int
    worst: float  # most adverse slack seen (>= -tol when passing)
    counterexample: dict | None = field(default=None)

    def to_json_dict(self) -> dict:
        out = {
            "suite": self.suite,
            "samples": self.samples,
            "seed": self.seed,
            "passed": self.passed,
            "checked": self.checked,
            "worst": self.worst,
        }
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


def _scan(suite, samples, seed, items) -> SuiteResult:
    worst = math.inf
    bad = None
    checked = 0
    for slack, ce in items:
        checked += 1
        if slack < worst:
            worst = slack
            if slack < 0.0 and bad is None:
                bad = ce
    return SuiteResult(
        suite=suite, samples=samples, seed=seed,
        passed=bad is None, checked=checked,
        worst=worst if checked else 0.0, counterexample=bad,
    )


def suite_fubini(samples: int, seed: int) -> SuiteResult:
    """Measure identities: circle integral of f equals the measure, and the
    integral of g over the set equals twice the pair functional."""
    rng = rng_from_seed(seed)

    def items():
        for _ in range(samples):
            A = random_arcset(rng)
            lam = measure(A)
            s1 = TOL_IDENTITY - abs(engine.integral_f_circle(A) - lam)
            s2 = TOL_IDENTITY - abs(engine.integral_g_over_set(A) - 2.0 * engine.phi(A))
            yield min(s1, s2), A.to_json_dict()

    return _scan("fubini", samples, seed, items())


def suite_complement(samples: int, seed: int) -> SuiteResult:
    """eta(A) equals eta of the complement."""
    rng = rng_from_seed(seed)

    def items():
        for _ in range(samples):
            A = random_arcset(rng)
            slack = TOL_IDENTITY - abs(engine.eta(A) - engine.eta(complement(A)))
            yield slack, A.to_json_dict()

    return _scan("complement", samples, seed, items())


def suite_lipschitz(samples: int, seed: int) -> SuiteResult:
    """g is 1-Lipschitz in the circle metric."""
    rng = rng_from_seed(seed)

    def items():
        for _ in range(samples):
            A = random_arcset(rng)
            L = A.L
            for _ in range(16):
                x = float(rng.random() * L)
                y = float(rng.random() * L)
                d = abs(x - y)
                d = min(d, L - d)
                slack = d + TOL_LIPSCHITZ - abs(engine.eval_g(A, x) - engine.eval_g(A, y))
                yield slack, {"arcset": A.to_json_dict(), "x": x, "y": y}

    return _scan("lipschitz", samples, seed, items())


def suite_fact21(samples: int, seed: int) -> SuiteResult:
    """Kernel estimate 2 W(xi) <= 2 - xi on a dense grid."""
    rep = fact21_check(max(samples, 2))
    return SuiteResult(
        suite="fact21", samples=samples, seed=seed,
        passed=rep.passes, checked=max(samples, 2),
        worst=rep.slack + 1e-12,
        counterexample=None if rep.passes else rep.detail,
    )


def suite_lemma3(samples: int, seed: int) -> SuiteResult:
    """Envelope certificates on a feasibility grid plus random profiles."""
    rng = rng_from_seed(seed)
    grid = max(8, int(math.isqrt(max(samples, 64))))

    def items():
        for i in range(1, grid + 1):
            xi = 0.5 * i / grid
            phi0 = phi_coeff(xi)
            for j in range(grid):
                alpha = min(phi0 * j / (grid - 1), phi0) if grid > 1 else 0.0
                case = lemma3_envelope(xi, alpha)
                yield case.integral - case.required + 1e-9, {
                    "xi": xi, "alpha": alpha, "case": case.case_id}
        for _ in range(10):
            xi = float(rng.uniform(0.05, 0.5))
            alpha = float(rng.uniform(0.0, phi_coeff(xi)))
            case = lemma3_envelope(xi, alpha)
            for _ in range(100):
                h = random_admissible_profile(xi, alpha, rng)
                yield h.integral() - case.required + 1e-9, {
                    "xi": xi, "alpha": alpha, "kind": "random-profile"}

    return _scan("lemma3", samples, seed, items())


def suite_minkowski(samples: int, seed: int) -> SuiteResult:
    """Sum of W over a density simplex is at least sqrt(k^2+1)."""
    rng = rng_from_seed(seed)

    def items():
        for _ in range(samples):
            k = int(rng.integers(0, 6))
            u = rng.dirichlet([1.0] * (k + 1))
            total = float(sum(W(float(x)) for x in u))
            target = math.sqrt(k * k + 1.0)
            yield total - target + 1e-9, {"k": k, "xis": [float(x) for x in u]}

    return _scan("minkowski", samples, seed, items())


def suite_thm2_random(samples: int, seed: int) -> SuiteResult:
    """The density bound is never violated: eta >= 0 on random arc sets."""
    rng = rng_from_seed(seed)

    def items():
        for _ in range(samples):
            A = random_arcset(rng)
            yield engine.eta(A) + 1e-9, A.to_json_dict()

    return _scan("thm2-random", samples, seed, items())


def suite_blowup_bridge(samples: int, seed: int) -> SuiteResult:
    """Per-cell accounting of the discrete-to-continuous blow-up.

    For any colouring, the blown-up partition satisfies
    sum phi(B_i) <= sum psi_m(A_i)/m^2 + n/(2 m^2) + 1/2.
    """
    rng = rng_from_seed(seed)

    def items():
        for _ in range(samples):
            k = int(rng.integers(0, 4))
            m = int(rng.integers(1, 5))
            n = int(rng.integers(m, 41))
            c = random_colouring(rng, k, n)
            part, _circle = blowup(c, m)
            lhs = sum(engine.phi(p) for p in part.parts)
            rhs = mono_edges(c, m) / (m * m) + n / (2.0 * m * m) + 0.5
            yield rhs - lhs + 1e-9, {"k": k, "m": m, "n": n,
                                     "colors": list(c.colors)}

    return _scan("blowup-bridge", samples, seed, items())


SUITES = {
    "fubini": suite_fubini,
    "complement": suite_complement,
    "lipschitz": suite_lipschitz,
    "fact21": suite_fact21,
    "lemma3": suite_lemma3,
    "minkowski": suite_minkowski,
    "thm2-random": suite_thm2_random,
    "blowup-bridge": suite_blowup_bridge,
}


def run_suite(name: str, samples: int, seed: int) -> SuiteResult:
    if name not in SUITES:
        raise DomainError(
            f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    return SUITES[name](samples, seed)
