"""Exact audit of the lattice arithmetic behind the d(S^3_{-1}) genus bound.

The 4-manifold W-bar obtained from punctured n CP^2-bar # S^2 x S^2 by a
(-1)-framed 2-handle has intersection form (n+1)<-1> + H in the basis
gamma_0, ..., gamma_n, alpha, beta.  A closed surface Sigma of genus g lives
in the class

    gamma_0 + sum_{i<=j} 2 a_i gamma_i + sum_{i>j} (2 a_i + 1) gamma_i + 2 alpha + b beta

and a Spin^c structure is picked through a characteristic vector.  Every
quantity is an integer or a Fraction; nothing here touches floating point.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .bounds import symmetric_signature
from .engine import ConsistencyError


@dataclass(frozen=True)
class QuadraticForm:
    matrix: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...]

    def __post_init__(self):
        n = len(self.matrix)
        if len(self.labels) != n or any(len(r) != n for r in self.matrix):
            raise ValueError("form must be square and labelled")
        for r in range(n):
            for c in range(r):
                if self.matrix[r][c] != self.matrix[c][r]:
                    raise ValueError("form must be symmetric")

    @property
    def rank(self) -> int:
        return len(self.matrix)

    def pair(self, u: Sequence[int], v: Sequence[int]) -> int:
        m = self.matrix
        return sum(u[r] * m[r][c] * v[c] for r in range(len(u)) if u[r] for c in range(len(v)) if v[c])

    def square(self, v: Sequence[int]) -> int:
        return self.pair(v, v)

    def signature(self) -> int:
        return symmetric_signature(self.matrix)

    def basis(self) -> list[tuple[int, ...]]:
        n = self.rank
        return [tuple(int(r == c) for c in range(n)) for r in range(n)]

    def is_characteristic(self, v: Sequence[int]) -> bool:
        return all((self.pair(v, w) - self.square(w)) % 2 == 0 for w in self.basis())


def q_wbar(n: int) -> QuadraticForm:
    """(n+1) copies of <-1> followed by the hyperbolic plane."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    size = n + 3
    rows = [[0] * size for _ in range(size)]
    for k in range(n + 1):
        rows[k][k] = -1
    rows[n + 1][n + 2] = rows[n + 2][n + 1] = 1
    labels = tuple(f"gamma{k}" for k in range(n + 1)) + ("alpha", "beta")
    return QuadraticForm(tuple(map(tuple, rows)), labels)


@dataclass(frozen=True)
class SpincParameters:
    n: int
    j: int
    a: tuple[int, ...]
    b: int
    g: int

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(self.a))
        if self.n < 0 or len(self.a) != self.n:
            raise ValueError(f"need n >= 0 and exactly n coefficients, got n={self.n}, a={self.a}")
        if not 0 <= self.j <= self.n:
            raise ValueError(f"j={self.j} outside 0..{self.n}")
        if self.g < 0:
            raise ValueError("genus must be nonnegative")

    @property
    def beta1(self) -> int:
        """beta_1 of the original non-orientable surface, 2g + 1."""
        return 2 * self.g + 1

    def as_dict(self) -> dict:
        return {"n": self.n, "j": self.j, "a": list(self.a), "b": self.b, "g": self.g}


def surface_class(p: SpincParameters) -> tuple[int, ...]:
    """Coordinates of [Sigma] in the basis gamma_0..gamma_n, alpha, beta."""
    coeffs = [2 * a if i <= p.j else 2 * a + 1 for i, a in enumerate(p.a, start=1)]
    return (1, *coeffs, 2, p.b)


def euler_from_class(p: SpincParameters) -> int:
    """Normal Euler number of the orientable surface F': the square of its class."""
    even = sum(4 * a * a for a in p.a[: p.j])
    odd = sum((2 * a + 1) ** 2 for a in p.a[p.j :])
    return -even - odd + 4 * p.b


def self_intersection_m(p: SpincParameters) -> int:
    """Self-intersection of the capped-off surface, checked against the form."""
    m = -1 + euler_from_class(p)
    if q_wbar(p.n).square(surface_class(p)) != m:
        raise ConsistencyError("self-intersection disagrees with the form")
    return m


def euler_of_f(p: SpincParameters) -> int:
    """e(F) of the non-orientable surface: m - 1, i.e. e(F') - 2."""
    return self_intersection_m(p) - 1


def choose_epsilon(p: SpincParameters, sum_to: int | None = None) -> tuple[int, int]:
    """The sign epsilon making x = (sum 2a_i + 2(b - g) - 1 + epsilon) / 4 integral.

    The sum runs over i = 1..j; ``sum_to`` overrides the upper index.
    """
    top = p.j if sum_to is None else sum_to
    base = sum(2 * a for a in p.a[:top]) + 2 * (p.b - p.g) - 1
    good = [eps for eps in (1, -1) if (base + eps) % 4 == 0]
    if len(good) != 1:
        raise ConsistencyError(f"{len(good)} admissible epsilons for numerator {base} + eps")
    eps = good[0]
    return eps, (base + eps) // 4


def c1_vector(p: SpincParameters) -> tuple[int, ...]:
    """PD(c_1(s_t)) = eps gamma_0 + sum (2a_i + 1) gamma_i + 2 alpha + 2x beta."""
    eps, x = choose_epsilon(p)
    return (eps, *(2 * a + 1 for a in p.a), 2, 2 * x)


def c1_squared_closed_form(p: SpincParameters) -> int:
    eps, _ = choose_epsilon(p)
    return euler_of_f(p) - p.j - 1 + 2 * eps - 4 * p.g


def c1_squared(p: SpincParameters) -> int:
    """c_1(s_t)^2, evaluated on the form and by the closed form, which must agree."""
    if self_intersection_m(p) <= 0:
        raise ValueError("needs m > 0")
    value = q_wbar(p.n).square(c1_vector(p))
    closed = c1_squared_closed_form(p)
    if value != closed:
        raise ConsistencyError(f"c1^2 = {value} on the form but {closed} in closed form for {p}")
    return value


def d_b_circle_bundle(g: int, m: int) -> Fraction:
    """Bottom-tower d-invariant 1/4 - g^2/m - m/4 of the Euler number -m bundle."""
    if m <= 0:
        raise ValueError("needs m > 0")
    if m - 2 * g <= 0:
        raise ValueError(f"needs m - 2g > 0, got m={m}, g={g}")
    return Fraction(1, 4) - Fraction(g * g, m) - Fraction(m, 4)


def _fmt(q: Fraction | int) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class AuditReport:
    params: SpincParameters
    d_minus: int
    epsilon: int
    x: int
    m: int
    e: int
    c1_squared: int
    c1_squared_closed_form: int
    characteristic: bool
    pairing: int
    beta2_minus: int
    c1_restricted_squared: Fraction
    d_b: Fraction
    ineq2_lhs: Fraction
    ineq2_rhs: Fraction
    ineq3_lhs: int
    ineq3_rhs: int
    ineq5_lhs: Fraction
    ineq5_rhs: int
    alt_epsilon: int
    alt_x: int
    alt_closed_form_matches: bool

    @property
    def holds(self) -> bool:
        return self.ineq3_lhs <= self.ineq3_rhs

    @property
    def ineq5_holds(self) -> bool:
        return self.ineq5_lhs <= self.ineq5_rhs

    @property
    def consistent(self) -> bool:
        """Every identity the derivation relies on holds for these parameters."""
        return (
            self.c1_squared == self.c1_squared_closed_form
            and self.characteristic
            and self.pairing == self.m - 2 * self.params.g
            and self.beta2_minus == self.params.n + 2
            and (self.ineq2_rhs - self.ineq2_lhs) == (self.ineq3_rhs - self.ineq3_lhs)
            and (not self.holds or self.ineq5_holds)
        )

    def as_dict(self) -> dict:
        return {
            "params": self.params.as_dict(),
            "d_minus": self.d_minus,
            "epsilon": self.epsilon,
            "x": self.x,
            "m": self.m,
            "e": self.e,
            "c1_squared": self.c1_squared,
            "c1_squared_closed_form": self.c1_squared_closed_form,
            "characteristic": self.characteristic,
            "pairing_with_sigma": self.pairing,
            "beta2_minus": self.beta2_minus,
            "c1_restricted_squared": _fmt(self.c1_restricted_squared),
            "d_b": _fmt(self.d_b),
            "ineq2_lhs": _fmt(self.ineq2_lhs),
            "ineq2_rhs": _fmt(self.ineq2_rhs),
            "ineq3_lhs": self.ineq3_lhs,
            "ineq3_rhs": self.ineq3_rhs,
            "holds": self.holds,
            "ineq5_lhs": _fmt(self.ineq5_lhs),
            "ineq5_rhs": self.ineq5_rhs,
            "ineq5_holds": self.ineq5_holds,
            "alternative_sum_to_n": {
                "epsilon": self.alt_epsilon,
                "x": self.alt_x,
                "closed_form_matches": self.alt_closed_form_matches,
            },
            "consistent": self.consistent,
        }


def audit_inequality_chain(p: SpincParameters, d_minus: int) -> AuditReport:
    """Evaluate every quantity in the chain from the circle-bundle inequality
    down to e(F)/2 - 2d <= beta_1(F) for the given d(S^3_{-1}(K))."""
    m = self_intersection_m(p)
    if m <= 0 or m - 2 * p.g <= 0:
        raise ValueError(f"needs m > 0 and m - 2g > 0, got m={m}, g={p.g}")
    form = q_wbar(p.n)
    eps, x = choose_epsilon(p)
    c1 = c1_vector(p)
    c1_sq = form.square(c1)
    closed = c1_squared_closed_form(p)
    beta2_minus = p.n + 2
    if (form.rank - form.signature()) // 2 != beta2_minus:
        raise ConsistencyError("beta_2^- of the form is not n + 2")
    e = m - 1
    pairing = form.pair(c1, surface_class(p))
    restricted = c1_sq - Fraction((m - 2 * p.g) ** 2, m)
    d_b = d_b_circle_bundle(p.g, m)
    # The circle bundle has beta_1 = 2g and the homology sphere contributes 0.
    ineq2_rhs = 4 * d_b + 4 * d_minus + 2 * (2 * p.g)
    alt_eps, alt_x = choose_epsilon(p, sum_to=p.n)
    alt_vector = (alt_eps, *(2 * a + 1 for a in p.a), 2, 2 * alt_x)
    alt_closed = e - p.j - 1 + 2 * alt_eps - 4 * p.g
    return AuditReport(
        params=p,
        d_minus=d_minus,
        epsilon=eps,
        x=x,
        m=m,
        e=e,
        c1_squared=c1_sq,
        c1_squared_closed_form=closed,
        characteristic=form.is_characteristic(c1),
        pairing=pairing,
        beta2_minus=beta2_minus,
        c1_restricted_squared=restricted,
        d_b=d_b,
        ineq2_lhs=restricted + beta2_minus,
        ineq2_rhs=ineq2_rhs,
        ineq3_lhs=c1_sq + beta2_minus,
        ineq3_rhs=1 + 4 * d_minus,
        ineq5_lhs=Fraction(e, 2) - 2 * d_minus,
        ineq5_rhs=p.beta1,
        alt_epsilon=alt_eps,
        alt_x=alt_x,
        alt_closed_form_matches=form.square(alt_vector) == alt_closed,
    )


def random_parameters(rng: random.Random, max_n: int = 6, bound: int = 10) -> SpincParameters:
    """Parameters with |a_i|, |b| <= bound, n <= max_n, m > 0 and m - 2g > 0.

    Each a_i is drawn from a randomly sized window around 0, so small and
    large coefficients both occur while m > 0 stays reachable.
    """
    while True:
        n = rng.randint(0, max_n)
        j = rng.randint(0, n)
        reach = rng.randint(0, bound)
        a = tuple(rng.randint(-reach, reach) for _ in range(n))
        probe = SpincParameters(n, j, a, 0, 0)
        base = euler_from_class(probe) - 1  # m at b = 0
        b_min = max(-bound, (-base) // 4 + 1)
        if b_min > bound:
            continue
        b = rng.randint(b_min, bound)
        m = base + 4 * b
        g = rng.randint(0, (m - 1) // 2)
        return SpincParameters(n, j, a, b, g)


def run_audit(seed: int, trials: int, max_n: int = 6, bound: int = 10, max_d: int = 10) -> dict:
    """Audit ``trials`` pseudorandom parameter sets; deterministic in ``seed``."""
    rng = random.Random(seed)
    counts = {
        "unique_epsilon": 0,
        "characteristic": 0,
        "c1_squared_dual_route": 0,
        "pairing": 0,
        "implication_3_to_5": 0,
        "ineq2_equals_ineq3": 0,
        "internal": 0,
    }
    holds3 = holds5 = 0
    failures = []
    for trial in range(trials):
        p = random_parameters(rng, max_n, bound)
        d_minus = rng.randint(0, max_d)
        try:
            r = audit_inequality_chain(p, d_minus)
        except ConsistencyError as exc:
            counts["unique_epsilon" if "epsilon" in str(exc) else "internal"] += 1
            failures.append({"trial": trial, "params": p.as_dict(), "error": str(exc)})
            continue
        checks = {
            "characteristic": r.characteristic,
            "c1_squared_dual_route": r.c1_squared == r.c1_squared_closed_form,
            "pairing": r.pairing == r.m - 2 * p.g,
            "implication_3_to_5": not r.holds or r.ineq5_holds,
            "ineq2_equals_ineq3": r.ineq2_rhs - r.ineq2_lhs == r.ineq3_rhs - r.ineq3_lhs,
        }
        bad = [k for k, ok in checks.items() if not ok]
        for k in bad:
            counts[k] += 1
        if bad:
            failures.append({"trial": trial, "params": p.as_dict(), "failed": bad})
        holds3 += r.holds
        holds5 += r.ineq5_holds
    return {
        "seed": seed,
        "trials": trials,
        "ineq3_holds": holds3,
        "ineq5_holds": holds5,
        "failure_counts": counts,
        "failures": failures,
        "passed": not failures,
    }
