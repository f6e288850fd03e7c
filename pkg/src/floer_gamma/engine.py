"""Operations on fundamental parts: products, mirrors, truncation, homology,
and the correction terms of +1 and -1 surgery.

The full complex is the direct sum of the translates U^{-l} G_0 and the
differential preserves each translate, so everything here works one
translate at a time.  The quotient complex C{max(i, j) >= 0} splits the same
way, and its tower (the image of the homology of the whole complex) is read
off translate by translate.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Literal

from .f2linalg import PivotBasis, bits_of, kernel_masks, rank_of_columns, rref
from .model import Chain, FundamentalComplex, Generator, build_9_42, build_trefoil


class NonStandardComplex(ValueError):
    """The homology of a translate is not one-dimensional."""


class TowerNotFound(RuntimeError):
    pass


class ConsistencyError(AssertionError):
    """A computed object disagrees with what the construction guarantees."""


# -- regions ----------------------------------------------------------------------

RegionKind = Literal["max_ge", "max_eq", "band_i", "band_j"]


@dataclass(frozen=True)
class Region:
    """Subsets of the (i, j) plane.

    ``max_ge(c)`` is {max(i, j) >= c}, ``max_eq(c)`` is {max(i, j) = c},
    ``band_i(c)`` is {i = c, j <= c} and ``band_j(c)`` is {j = c, i <= c}.
    """

    kind: RegionKind
    c: int = 0

    def contains(self, i: int, j: int) -> bool:
        c = self.c
        if self.kind == "max_ge":
            return max(i, j) >= c
        if self.kind == "max_eq":
            return max(i, j) == c
        if self.kind == "band_i":
            return i == c and j <= c
        if self.kind == "band_j":
            return j == c and i <= c
        raise ValueError(f"unknown region kind {self.kind!r}")

    @classmethod
    def max_ge(cls, c: int = 0) -> "Region":
        return cls("max_ge", c)

    @classmethod
    def max_eq(cls, c: int = 0) -> "Region":
        return cls("max_eq", c)

    @classmethod
    def band_i(cls, c: int = 0) -> "Region":
        return cls("band_i", c)

    @classmethod
    def band_j(cls, c: int = 0) -> "Region":
        return cls("band_j", c)


# -- constructions ----------------------------------------------------------------

def translate(c: FundamentalComplex, l: int) -> FundamentalComplex:
    """The translate U^{-l} c; names are kept."""
    if l == 0:
        return c
    return FundamentalComplex(tuple(g.translated(l) for g in c.generators), c.arrows)


def shift_grading(c: FundamentalComplex, shift: int) -> FundamentalComplex:
    gens = tuple(Generator(g.name, g.i, g.j, g.maslov + shift) for g in c.generators)
    return FundamentalComplex(gens, c.arrows)


def tensor(a: FundamentalComplex, b: FundamentalComplex) -> FundamentalComplex:
    """Tensor product; the generator x (x) y is named ``x|y``."""
    gens = tuple(
        Generator(f"{x.name}|{y.name}", x.i + y.i, x.j + y.j, x.maslov + y.maslov)
        for x in a.generators
        for y in b.generators
    )
    arrows = set()
    b_names = [y.name for y in b.generators]
    a_names = [x.name for x in a.generators]
    for src, dst in a.arrows:
        arrows.update((f"{src}|{y}", f"{dst}|{y}") for y in b_names)
    for src, dst in b.arrows:
        arrows.update((f"{x}|{src}", f"{x}|{dst}") for x in a_names)
    return FundamentalComplex(gens, frozenset(arrows))


def tensor_power(c: FundamentalComplex, m: int) -> FundamentalComplex:
    if m < 1:
        raise ValueError("tensor power needs m >= 1; the empty product is the unknot")
    out = c
    for _ in range(m - 1):
        out = tensor(out, c)
    return out


def _star(name: str) -> str:
    return name[:-1] if name.endswith("*") else name + "*"


def mirror(c: FundamentalComplex) -> FundamentalComplex:
    """Dual complex: positions and gradings negated, arrows reversed.

    Names toggle a trailing ``*`` so that mirroring twice is the identity.
    """
    gens = tuple(Generator(_star(g.name), -g.i, -g.j, -g.maslov) for g in c.generators)
    arrows = frozenset((_star(dst), _star(src)) for src, dst in c.arrows)
    return FundamentalComplex(gens, arrows)


def truncate(c: FundamentalComplex, l: int, region: Region) -> FundamentalComplex:
    """Generators of U^{-l} c lying in ``region`` with the arrows between them.

    For an upward closed region this is the quotient of the translate by the
    subcomplex outside the region.
    """
    gens = tuple(g.translated(l) for g in c.generators if region.contains(g.i + l, g.j + l))
    keep = {g.name for g in gens}
    arrows = frozenset((s, t) for s, t in c.arrows if s in keep and t in keep)
    return FundamentalComplex(gens, arrows)


def column_complex(c: FundamentalComplex) -> FundamentalComplex:
    """The {i = 0} column of the full complex.

    Every generator has exactly one translate with i = 0; the arrows that
    survive are the vertical ones (those preserving i).
    """
    gens = tuple(g.translated(-g.i) for g in c.generators)
    arrows = frozenset((s, t) for s, t in c.arrows if c[s].i == c[t].i)
    return FundamentalComplex(gens, arrows)


def row_complex(c: FundamentalComplex) -> FundamentalComplex:
    """The {j = 0} row of the full complex, with the horizontal arrows."""
    gens = tuple(g.translated(-g.j) for g in c.generators)
    arrows = frozenset((s, t) for s, t in c.arrows if c[s].j == c[t].j)
    return FundamentalComplex(gens, arrows)


# -- homology -----------------------------------------------------------------------

def _boundary_columns(c: FundamentalComplex, grading: int, members: set[str] | None = None) -> list[int]:
    """Columns of d from the given grading, as bitsets over the block below.

    With ``members`` given, both ends are restricted to that set.
    """
    below = c.block_index
    cols = []
    for name in c.blocks.get(grading, ()):
        if members is not None and name not in members:
            continue
        mask = 0
        for y in c.boundary_map[name]:
            if members is None or y in members:
                mask ^= 1 << below[y]
        cols.append(mask)
    return cols


def _chain_mask(c: FundamentalComplex, names: Iterable[str]) -> int:
    idx = c.block_index
    mask = 0
    for n in names:
        mask ^= 1 << idx[n]
    return mask


@dataclass(frozen=True)
class GradedHomology:
    dims: dict[int, int]
    representatives: dict[int, tuple[Chain, ...]] = field(default_factory=dict)

    @property
    def total_dim(self) -> int:
        return sum(self.dims.values())

    def dim(self, grading: int) -> int:
        return self.dims.get(grading, 0)

    @property
    def support(self) -> list[int]:
        return [k for k, d in sorted(self.dims.items()) if d]


def homology(c: FundamentalComplex, representatives: bool = True) -> GradedHomology:
    """Graded homology with canonical cycle representatives.

    Representatives in each grading are normal forms modulo boundaries,
    brought to reduced echelon form, so they do not depend on elimination
    accidents.
    """
    blocks = c.blocks
    columns = {k: _boundary_columns(c, k) for k in blocks}
    ranks = {k: rank_of_columns(cols) for k, cols in columns.items()}
    dims = {}
    reps: dict[int, tuple[Chain, ...]] = {}
    for k, names in blocks.items():
        d = len(names) - ranks[k] - ranks.get(k + 1, 0)
        dims[k] = d
        if d and representatives:
            image = PivotBasis()
            for col in columns.get(k + 1, ()):
                image.add(col)
            normal = rref(image.reduce_fully(z) for z in kernel_masks(columns[k]))
            if len(normal) != d:
                raise ConsistencyError(f"grading {k}: {len(normal)} representatives for dimension {d}")
            reps[k] = tuple(Chain.from_names(names[b] for b in bits_of(z)) for z in normal)
    return GradedHomology({k: v for k, v in dims.items() if v}, reps)


def is_boundary(c: FundamentalComplex, chain: Chain) -> bool:
    """Whether a homogeneous chain of translate-0 terms is a boundary in ``c``."""
    if not chain:
        return True
    (grading,) = chain.gradings(c)
    image = PivotBasis()
    for col in _boundary_columns(c, grading + 1):
        image.add(col)
    return _chain_mask(c, chain.names) in image


def standard_generator(c: FundamentalComplex) -> tuple[Chain, int]:
    """The cycle generating H(c) and its grading; c must have rank-one homology."""
    h = homology(c)
    if h.total_dim != 1:
        raise NonStandardComplex(f"homology has dimension {h.total_dim}, expected 1 (dims {h.dims})")
    (k,) = h.support
    return h.representatives[k][0], k


@dataclass(frozen=True)
class StandardReport:
    standard: bool
    homology_dim: int
    generator: Chain | None
    grading: int | None
    column_dim: int
    column_generator: Chain | None
    column_grading: int | None
    row_dim: int
    row_generator: Chain | None
    row_grading: int | None
    problems: tuple[str, ...] = ()


def _single_class(c: FundamentalComplex, base: FundamentalComplex, axis: str):
    h = homology(c)
    if h.total_dim != 1:
        return h.total_dim, None, None
    (k,) = h.support
    rep = h.representatives[k][0]
    # Record which translate of the base generator each term came from.
    terms = frozenset((n, -getattr(base[n], axis)) for n in rep.names)
    return 1, Chain(terms), k


def validate_standard(c: FundamentalComplex) -> StandardReport:
    """Check that c looks like the fundamental part of a knot in S^3.

    H(c) must be one-dimensional, and so must the homology of the {i = 0}
    column and the {j = 0} row of the full complex, both in grading 0.
    A failure is reported, not raised.
    """
    problems = []
    h = homology(c)
    gen = grading = None
    if h.total_dim == 1:
        (grading,) = h.support
        gen = h.representatives[grading][0]
    else:
        problems.append(f"H(G_0) has dimension {h.total_dim}")
    col = _single_class(column_complex(c), c, "i")
    row = _single_class(row_complex(c), c, "j")
    for label, (dim, _, k) in (("column", col), ("row", row)):
        if dim != 1:
            problems.append(f"{label} homology has dimension {dim}")
        elif k != 0:
            problems.append(f"{label} homology sits in grading {k}, not 0")
    return StandardReport(
        standard=not problems,
        homology_dim=h.total_dim,
        generator=gen,
        grading=grading,
        column_dim=col[0],
        column_generator=col[1],
        column_grading=col[2],
        row_dim=row[0],
        row_generator=row[1],
        row_grading=row[2],
        problems=tuple(problems),
    )


# -- towers and correction terms ---------------------------------------------------------

def _image_nonzero(c: FundamentalComplex, cycle: Chain, grading: int, l: int, region: Region) -> bool:
    members = {g.name for g in c.generators if region.contains(g.i + l, g.j + l)}
    kept = [n for n in cycle.names if n in members]
    if not kept:
        return False
    z = _chain_mask(c, kept)
    if any(y in members for y in c.boundary(kept)):
        raise ConsistencyError("truncated cycle is not a cycle in the quotient complex")
    image = PivotBasis()
    for col in _boundary_columns(c, grading + 1, members):
        image.add(col)
    return z not in image


def tower_image(c: FundamentalComplex, l: int, region: Region = Region.max_ge(0)) -> tuple[bool, int | None]:
    """Whether U^{-l} of the homology generator survives in the truncation.

    Returns (nonzero, grading) where grading is that of U^{-l} times the
    generator, or None when its image vanishes.
    """
    if region.kind != "max_ge":
        raise ValueError("the tower is only defined for {max(i, j) >= c} regions")
    cycle, grading = standard_generator(c)
    if _image_nonzero(c, cycle, grading, l, region):
        return True, grading + 2 * l
    return False, None


def scan_window(c: FundamentalComplex) -> tuple[int, int]:
    """Translates between which the tower image can first appear.

    Below the window every term of U^{-l} c lies in {max(i, j) < 0}; at its
    top the whole translate lies in {max(i, j) >= 0}.
    """
    peaks = [max(g.i, g.j) for g in c.generators]
    return -max(peaks) - 1, -min(peaks)


@dataclass(frozen=True)
class SurgeryTrace:
    d: int
    translate: int
    trace: tuple[tuple[int, bool, int | None], ...]


def surgery_trace(c: FundamentalComplex) -> SurgeryTrace:
    """Correction term of +1 surgery with the per-translate evidence.

    The value is the least grading of a nonzero tower element in
    H(C{max(i, j) >= 0}).  Each translate contributes at most one tower
    element, of grading gr + 2l, so the minimum over the window is the
    minimum over all translates.
    """
    cycle, grading = standard_generator(c)
    lo, hi = scan_window(c)
    region = Region.max_ge(0)
    trace = []
    for l in range(lo, hi + 1):
        nonzero = _image_nonzero(c, cycle, grading, l, region)
        trace.append((l, nonzero, grading + 2 * l if nonzero else None))
    hits = [t for t in trace if t[1]]
    if not hits:
        raise TowerNotFound(f"no nonzero tower image for translates {lo}..{hi}")
    l, _, d = min(hits, key=lambda t: t[2])
    return SurgeryTrace(d, l, tuple(trace))


def d_plus_one_surgery(c: FundamentalComplex) -> int:
    return surgery_trace(c).d


def d_minus_one_surgery(c: FundamentalComplex) -> int:
    """d(S^3_{-1}(K)) = -d(S^3_{+1}(mirror K)), by reversing orientation."""
    return -d_plus_one_surgery(mirror(c))


# -- the 9_42 computations ----------------------------------------------------------------

def words(letters: Iterable[str], m: int) -> list[str]:
    out = [""]
    letters = list(letters)
    for _ in range(m):
        out = [f"{w}|{x}" if w else x for w in out for x in letters]
    return out


def alpha_power(m: int) -> Chain:
    """(x1 + x5 + x9)^{(x) m}."""
    return Chain.from_names(words(["x1", "x5", "x9"], m))


def beta_chain(m: int) -> Chain:
    """(x5 + x9)^{(x) m} + (x5 + x1)^{(x) m} + x5^{(x) m}, summed over GF(2)."""
    return (
        Chain.from_names(words(["x5", "x9"], m))
        + Chain.from_names(words(["x5", "x1"], m))
        + Chain.from_names(words(["x5"], m))
    )


@dataclass(frozen=True)
class BetaReport:
    m: int
    beta: Chain
    components: int
    boundary_zero: bool
    class_nonzero: bool
    grading: int
    homology_dim: int
    equals_truncated_alpha: bool

    @property
    def ok(self) -> bool:
        return (
            self.boundary_zero
            and self.class_nonzero
            and self.grading == 0
            and self.homology_dim == 1
            and self.equals_truncated_alpha
        )


def verify_beta(m: int, power: FundamentalComplex | None = None) -> BetaReport:
    """Check that beta generates H(G_0^{(m)}{max(i, j) >= 0}) in grading 0."""
    if m < 1:
        raise ValueError("m must be positive")
    power = power if power is not None else tensor_power(build_9_42(), m)
    trunc = truncate(power, 0, Region.max_ge(0))
    beta = beta_chain(m)
    if not beta.names <= set(trunc.by_name):
        missing = sorted(beta.names - set(trunc.by_name))[:5]
        raise ConsistencyError(f"beta has terms outside the truncation: {missing}")
    gradings = beta.gradings(trunc)
    if len(gradings) != 1:
        raise ConsistencyError(f"beta is not homogeneous: gradings {sorted(gradings)}")
    (grading,) = gradings
    d_beta = beta.boundary(trunc)
    h = homology(trunc, representatives=False)
    alpha_cut = Chain.from_names(n for n in alpha_power(m).names if n in trunc.by_name)
    report = BetaReport(
        m=m,
        beta=beta,
        components=len(beta),
        boundary_zero=not d_beta,
        class_nonzero=not d_beta and not is_boundary(trunc, beta),
        grading=grading,
        homology_dim=h.total_dim,
        equals_truncated_alpha=alpha_cut == beta,
    )
    if not report.ok:
        diff = []
        if d_beta:
            diff.append(f"d(beta) = {d_beta}")
        if alpha_cut != beta:
            diff.append(f"alpha cut - beta = {alpha_cut + beta}")
        if report.homology_dim != 1:
            diff.append(f"homology dims {h.dims}")
        if grading != 0:
            diff.append(f"grading {grading}")
        if not report.class_nonzero:
            diff.append("beta is a boundary")
        raise ConsistencyError(f"beta check failed for m={m}: " + "; ".join(diff))
    return report


def trefoil_column_model() -> FundamentalComplex:
    """The two-arrows-into-a-corner trefoil piece with top grading 0."""
    return shift_grading(build_trefoil("left"), -2)


def column_model_check(m: int, power: FundamentalComplex | None = None) -> bool:
    """Compare G_0^{(m)}{i = 0, j <= 0} with the m-th power of the trefoil piece."""
    power = power if power is not None else tensor_power(build_9_42(), m)
    column = truncate(power, 0, Region.band_i(0))
    model = tensor_power(trefoil_column_model(), m)
    if column.gradings() != model.gradings():
        return False
    return homology(column, False).dims == homology(model, False).dims
