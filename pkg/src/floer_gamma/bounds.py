"""Knot signatures and lower bounds for non-orientable genera.

All bound formulas take plain integers.  ``library_invariants`` resolves the
built-in knots to (signature, d(S^3_{+1}), d(S^3_{-1})).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace
from fractions import Fraction
from functools import lru_cache
from typing import Literal, Sequence

from . import engine, model


class SeifertError(ValueError):
    pass


def _det(rows: Sequence[Sequence[int]]) -> int:
    """Exact integer determinant by fraction-free (Bareiss) elimination."""
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for r in range(k + 1, n):
            for c in range(k + 1, n):
                a[r][c] = (a[r][c] * a[k][k] - a[r][k] * a[k][c]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


@dataclass(frozen=True)
class SeifertMatrix:
    v: tuple[tuple[int, ...], ...]
    name: str = ""

    def __post_init__(self):
        v = tuple(tuple(int(x) for x in row) for row in self.v)
        object.__setattr__(self, "v", v)
        n = len(v)
        if any(len(row) != n for row in v):
            raise SeifertError("Seifert matrix must be square")
        if n % 2:
            raise SeifertError("Seifert matrix of a knot has even size")
        if abs(_det(self.antisymmetric())) != 1:
            raise SeifertError(f"det(V - V^T) = {_det(self.antisymmetric())}, not +-1")

    @property
    def genus(self) -> int:
        return len(self.v) // 2

    def antisymmetric(self) -> list[list[int]]:
        n = len(self.v)
        return [[self.v[r][c] - self.v[c][r] for c in range(n)] for r in range(n)]

    def symmetrized(self) -> list[list[int]]:
        n = len(self.v)
        return [[self.v[r][c] + self.v[c][r] for c in range(n)] for r in range(n)]

    def mirror(self) -> "SeifertMatrix":
        """Seifert matrix of the mirror image, -V^T."""
        n = len(self.v)
        return SeifertMatrix(tuple(tuple(-self.v[c][r] for c in range(n)) for r in range(n)), self.name)


def symmetric_signature(a: Sequence[Sequence[int | Fraction]]) -> int:
    """Signature of a symmetric matrix by exact LDL^T with symmetric pivoting.

    A nonzero diagonal entry is used as a 1x1 pivot.  When the remaining
    diagonal vanishes, a nonzero off-diagonal entry a_pq gives a hyperbolic
    2x2 pivot [[0, a_pq], [a_pq, 0]], which contributes one positive and one
    negative square.
    """
    m = [[Fraction(x) for x in row] for row in a]
    n = len(m)
    for r in range(n):
        for c in range(r):
            if m[r][c] != m[c][r]:
                raise ValueError("matrix is not symmetric")
    active = list(range(n))
    sig = 0
    while active:
        p = next((k for k in active if m[k][k] != 0), None)
        if p is not None:
            piv = m[p][p]
            sig += 1 if piv > 0 else -1
            rest = [k for k in active if k != p]
            for r in rest:
                f = m[r][p] / piv
                if f:
                    for c in rest:
                        m[r][c] -= f * m[p][c]
            active = rest
            continue
        pair = next(((p, q) for p in active for q in active if p < q and m[p][q] != 0), None)
        if pair is None:
            break  # the rest is the zero form
        p, q = pair
        b = m[p][q]
        # Inverse of [[0, b], [b, 0]] is [[0, 1/b], [1/b, 0]].
        rest = [k for k in active if k not in pair]
        new = {}
        for r in rest:
            for c in rest:
                new[r, c] = m[r][c] - (m[r][p] * m[q][c] + m[r][q] * m[p][c]) / b
        for (r, c), val in new.items():
            m[r][c] = val
        active = rest
    return sig


def signature(v: SeifertMatrix) -> int:
    """Knot signature: the signature of V + V^T."""
    return symmetric_signature(v.symmetrized())


def signature_connected_sum(sigmas: Sequence[int]) -> int:
    return sum(sigmas)


def _even(value: int, what: str) -> None:
    if value % 2:
        raise ValueError(f"{what} must be even, got {value}")


def batson_bound(sigma: int, d_plus: int) -> int:
    """Lower bound -sigma/2 + d(S^3_1(K)) for the non-orientable 4-genus."""
    _even(sigma, "signature")
    return -sigma // 2 + d_plus


def cp2_bound(sigma: int, d_plus: int, n: int) -> int:
    """Lower bound for gamma^0 in punctured n CP^2."""
    _even(sigma, "signature")
    if n < 0:
        raise ValueError("n must be nonnegative")
    return -sigma // 2 + d_plus - n


def cp2bar_bound(sigma: int, d_minus: int, n: int) -> int:
    """Lower bound sigma/2 - d(S^3_{-1}(K)) - n for gamma^0 in punctured n CP^2-bar."""
    _even(sigma, "signature")
    return sigma // 2 - d_minus - n


def prop14_bound(euler: int, d_minus: int) -> int:
    """beta_1(F) >= e(F)/2 - 2 d(S^3_{-1}(K)) for F in punctured n CP^2-bar."""
    _even(euler, "normal Euler number")
    return euler // 2 - 2 * d_minus


def yasuhara_check(sigma_k: int, sigma_m: int, euler: int, beta2_m: int, beta1_f: int) -> bool:
    """|sigma(K) + sigma(M) - e(F)/2| <= beta_2(M) + beta_1(F)."""
    _even(euler, "normal Euler number")
    return abs(sigma_k + sigma_m - euler // 2) <= beta2_m + beta1_f


@dataclass(frozen=True)
class SurfaceState:
    beta1: int
    euler: int
    ambient_beta2: int = 0
    ambient_sigma: int = 0
    null_homologous_mod2: bool = True

    def __post_init__(self):
        if self.beta1 < 0 or self.ambient_beta2 < 0:
            raise ValueError("Betti numbers are nonnegative")


def surface_move(state: SurfaceState, move: Literal["resolve_mobius", "add_rp2"]) -> SurfaceState:
    """Bookkeeping for the two surface modifications.

    ``resolve_mobius`` trades a Mobius band for an orientable piece in an
    extra S^2 x S^2 summand; ``add_rp2`` takes the connected sum with the
    standard RP^2 of normal Euler number +2 in S^4.
    """
    if move == "resolve_mobius":
        if state.beta1 % 2 == 0:
            raise ValueError("resolving a Mobius band needs odd beta_1")
        return replace(
            state,
            beta1=state.beta1 - 1,
            euler=state.euler + 2,
            ambient_beta2=state.ambient_beta2 + 2,
        )
    if move == "add_rp2":
        return replace(state, beta1=state.beta1 + 1, euler=state.euler + 2)
    raise ValueError(f"unknown move {move!r}")


@dataclass(frozen=True)
class BoundReport:
    knot: str
    sigma: int
    d_plus: int
    d_minus: int
    bound_value: int
    bound_kind: str
    formula: str

    def as_dict(self) -> dict:
        return {
            "knot": self.knot,
            "sigma": self.sigma,
            "d_plus": self.d_plus,
            "d_minus": self.d_minus,
            "bound": self.bound_value,
            "bound_kind": self.bound_kind,
            "formula": self.formula,
        }


def bound_report(knot: str, sigma: int, d_plus: int, d_minus: int, manifold: str, n: int = 0) -> BoundReport:
    if manifold == "s4":
        value = batson_bound(sigma, d_plus)
        return BoundReport(knot, sigma, d_plus, d_minus, value, "batson", "-sigma/2 + d(S^3_1(K))")
    if manifold == "ncp2":
        value = cp2_bound(sigma, d_plus, n)
        return BoundReport(knot, sigma, d_plus, d_minus, value, f"cp2({n})", "-sigma/2 + d(S^3_1(K)) - n")
    raise ValueError(f"unknown manifold {manifold!r}")


# -- Seifert fixture format ----------------------------------------------------------

_HEADER = re.compile(r"seifert\s+(\S+)\s+g=(\d+)")


def parse_seifert(text: str) -> dict[str, SeifertMatrix]:
    out: dict[str, SeifertMatrix] = {}
    lines = [(k, raw.split("#", 1)[0].strip()) for k, raw in enumerate(text.splitlines(), start=1)]
    lines = [(k, s) for k, s in lines if s]
    pos = 0
    while pos < len(lines):
        lineno, line = lines[pos]
        m = _HEADER.fullmatch(line)
        if not m:
            raise SeifertError(f"line {lineno}: expected 'seifert <name> g=<genus>'")
        name, g = m.group(1), int(m.group(2))
        rows = []
        for k in range(2 * g):
            if pos + 1 + k >= len(lines):
                raise SeifertError(f"line {lineno}: {name} needs {2 * g} rows")
            rlineno, rline = lines[pos + 1 + k]
            try:
                row = [int(x) for x in rline.split()]
            except ValueError:
                raise SeifertError(f"line {rlineno}: not a row of integers") from None
            if len(row) != 2 * g:
                raise SeifertError(f"line {rlineno}: expected {2 * g} entries")
            rows.append(tuple(row))
        out[name] = SeifertMatrix(tuple(rows), name)
        pos += 1 + 2 * g
    return out


def serialize_seifert(matrices: Sequence[SeifertMatrix]) -> str:
    lines = []
    for v in matrices:
        lines.append(f"seifert {v.name} g={v.genus}")
        lines.extend(" ".join(str(x) for x in row) for row in v.v)
    return "\n".join(lines) + "\n"


# -- the built-in knots ----------------------------------------------------------------

def builtin_seifert() -> dict[str, SeifertMatrix]:
    from .fixtures import read_fixture

    return parse_seifert(read_fixture("seifert.txt"))


@lru_cache(maxsize=None)
def nine_42_power_d_plus(m: int) -> int:
    """d(S^3_1) of the m-fold connected sum of 9_42."""
    return engine.d_plus_one_surgery(engine.tensor_power(model.build_9_42(), m))


@lru_cache(maxsize=None)
def nine_42_power_d_minus(m: int) -> int:
    return engine.d_minus_one_surgery(engine.tensor_power(model.build_9_42(), m))


def theorem13_table(n: int, k: int) -> tuple[int, int]:
    """Lower and upper bounds for gamma^0 in n CP^2 of the (n+k)-fold sum of 9_42.

    The upper bound counts the surface built from n disks in punctured CP^2
    and k Mobius bands in B^4, one Mobius band per extra summand.
    """
    if n < 0 or k < 1:
        raise ValueError("need n >= 0 and k >= 1")
    sigma_942 = signature(builtin_seifert()["9_42"])
    sigma = signature_connected_sum([sigma_942] * (n + k))
    lower = cp2_bound(sigma, nine_42_power_d_plus(n + k), n)
    upper = k
    if lower != upper:
        raise engine.ConsistencyError(f"n={n}, k={k}: lower bound {lower} != upper bound {upper}")
    return lower, upper
