"""Finite models of the knot Floer complex CFK^infinity.

A knot's full complex is the direct sum of the U-translates of one finite
piece, the fundamental part.  Each generator sits at a filtration position
(i, j) and has a Maslov grading; U moves it to (i - 1, j - 1) and lowers the
grading by 2.  Only the fundamental part is ever stored.

The text format is line oriented::

    # comment
    gen x5 i=0 j=0 m=0
    arrow x5 x4

An arrow ``x y`` means y appears in the boundary of x.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable, Literal


class ComplexError(ValueError):
    """A complex violates one of the structural invariants.

    ``code`` is one of ``syntax``, ``duplicate``, ``unknown``, ``d_squared``,
    ``filtration``, ``maslov``.
    """

    def __init__(self, code: str, message: str, line: int | None = None):
        self.code = code
        self.line = line
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}{message}")


@dataclass(frozen=True, order=True)
class Generator:
    name: str
    i: int
    j: int
    maslov: int

    @property
    def alexander(self) -> int:
        return self.j - self.i

    def translated(self, l: int) -> "Generator":
        """The generator U^{-l} x."""
        return Generator(self.name, self.i + l, self.j + l, self.maslov + 2 * l)


@dataclass(frozen=True, eq=False)
class FundamentalComplex:
    generators: tuple[Generator, ...]
    arrows: frozenset[tuple[str, str]] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "arrows", frozenset(self.arrows))

    # Equality ignores generator order: two complexes are equal when they
    # have the same named generators and the same arrows.
    def __eq__(self, other):
        if not isinstance(other, FundamentalComplex):
            return NotImplemented
        return self.by_name == other.by_name and self.arrows == other.arrows

    def __hash__(self):
        return hash((frozenset(self.generators), self.arrows))

    def __len__(self) -> int:
        return len(self.generators)

    def __repr__(self) -> str:
        return f"FundamentalComplex({len(self.generators)} generators, {len(self.arrows)} arrows)"

    @cached_property
    def by_name(self) -> dict[str, Generator]:
        return {g.name: g for g in self.generators}

    @cached_property
    def index(self) -> dict[str, int]:
        return {g.name: k for k, g in enumerate(self.generators)}

    @cached_property
    def boundary_map(self) -> dict[str, tuple[str, ...]]:
        out: dict[str, list[str]] = {g.name: [] for g in self.generators}
        for src, dst in sorted(self.arrows):
            out[src].append(dst)
        return {k: tuple(v) for k, v in out.items()}

    @cached_property
    def blocks(self) -> dict[int, tuple[str, ...]]:
        """Generator names grouped by Maslov grading, in complex order."""
        out: dict[int, list[str]] = {}
        for g in self.generators:
            out.setdefault(g.maslov, []).append(g.name)
        return {k: tuple(v) for k, v in sorted(out.items())}

    @cached_property
    def block_index(self) -> dict[str, int]:
        """Position of each generator inside its grading block."""
        return {name: k for names in self.blocks.values() for k, name in enumerate(names)}

    def __getitem__(self, name: str) -> Generator:
        return self.by_name[name]

    def boundary(self, names: Iterable[str]) -> frozenset[str]:
        """Boundary of the GF(2) sum of the named generators."""
        out: set[str] = set()
        for name in names:
            out.symmetric_difference_update(self.boundary_map[name])
        return frozenset(out)

    @property
    def extent(self) -> tuple[int, int, int, int]:
        """(min i, max i, min j, max j)."""
        iis = [g.i for g in self.generators]
        jjs = [g.j for g in self.generators]
        return min(iis), max(iis), min(jjs), max(jjs)

    @property
    def width(self) -> int:
        if not self.generators:
            return 0
        i0, i1, j0, j1 = self.extent
        return max(i1 - i0, j1 - j0)

    def gradings(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for g in self.generators:
            counts[g.maslov] = counts.get(g.maslov, 0) + 1
        return dict(sorted(counts.items()))


@dataclass(frozen=True)
class Chain:
    """A GF(2) chain: a set of (generator name, translate index) terms.

    The term (x, l) stands for U^{-l} x.
    """

    terms: frozenset[tuple[str, int]] = frozenset()

    @classmethod
    def of(cls, *names: str, translate: int = 0) -> "Chain":
        return cls(_xor_terms((n, translate) for n in names))

    @classmethod
    def from_names(cls, names: Iterable[str], translate: int = 0) -> "Chain":
        return cls(_xor_terms((n, translate) for n in names))

    def __add__(self, other: "Chain") -> "Chain":
        return Chain(self.terms ^ other.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    @property
    def names(self) -> frozenset[str]:
        return frozenset(n for n, _ in self.terms)

    def gradings(self, complex_: FundamentalComplex) -> set[int]:
        return {complex_[n].maslov + 2 * l for n, l in self.terms}

    def is_homogeneous(self, complex_: FundamentalComplex) -> bool:
        return len(self.gradings(complex_)) <= 1

    def boundary(self, complex_: FundamentalComplex) -> "Chain":
        out: set[tuple[str, int]] = set()
        for n, l in self.terms:
            out.symmetric_difference_update((y, l) for y in complex_.boundary_map[n])
        return Chain(frozenset(out))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for n, l in sorted(self.terms, key=lambda t: (t[1], t[0])):
            parts.append(n if l == 0 else f"U^{-l}*{n}")
        return " + ".join(parts)


def _xor_terms(terms: Iterable[tuple[str, int]]) -> frozenset[tuple[str, int]]:
    out: set[tuple[str, int]] = set()
    for t in terms:
        out.symmetric_difference_update((t,))
    return frozenset(out)


# -- validation ---------------------------------------------------------------

def check_structure(c: FundamentalComplex) -> None:
    """Raise ComplexError unless ``c`` is a filtered, graded complex with d^2 = 0."""
    seen: set[str] = set()
    for g in c.generators:
        if g.name in seen:
            raise ComplexError("duplicate", f"duplicate generator name {g.name!r}")
        seen.add(g.name)
    for src, dst in sorted(c.arrows):
        for name in (src, dst):
            if name not in seen:
                raise ComplexError("unknown", f"arrow mentions unknown generator {name!r}")
        x, y = c[src], c[dst]
        if x.i < y.i or x.j < y.j:
            raise ComplexError(
                "filtration", f"arrow {src} -> {dst} raises the filtration ({x.i},{x.j}) -> ({y.i},{y.j})"
            )
        if x.maslov != y.maslov + 1:
            raise ComplexError(
                "maslov", f"arrow {src} -> {dst} changes Maslov grading by {x.maslov - y.maslov}, not 1"
            )
    for g in c.generators:
        dd = c.boundary(c.boundary_map[g.name])
        if dd:
            raise ComplexError("d_squared", f"d^2({g.name}) = {' + '.join(sorted(dd))} != 0")


def is_valid(c: FundamentalComplex) -> bool:
    try:
        check_structure(c)
    except ComplexError:
        return False
    return True


# -- built-in complexes ---------------------------------------------------------

def build_9_42() -> FundamentalComplex:
    """Fundamental part of CFK^infinity(9_42).

    Positions and arrows follow the standard picture of this complex.  The Maslov
    gradings of x2, x3, x4, x6, x7, x8 are not drawn there; they are forced by
    the arrows lowering the grading by one once x1, x5, x9 sit in grading 0.
    """
    gens = [
        Generator("x5", 0, 0, 0),
        Generator("x9", -1, 0, 0),
        Generator("x6", -2, 0, -1),
        Generator("x1", 0, -1, 0),
        Generator("x8", -1, -1, -1),
        Generator("x2", -1, -1, -1),
        Generator("x7", -2, -1, -2),
        Generator("x4", 0, -2, -1),
        Generator("x3", -1, -2, -2),
    ]
    arrows = {
        ("x5", "x2"), ("x5", "x4"), ("x5", "x6"), ("x5", "x8"),
        ("x9", "x6"), ("x9", "x8"),
        ("x1", "x2"), ("x1", "x4"),
        ("x2", "x3"), ("x4", "x3"),
        ("x6", "x7"), ("x8", "x7"),
    }
    return FundamentalComplex(tuple(gens), frozenset(arrows))


def build_trefoil(hand: Literal["left", "right"] = "left") -> FundamentalComplex:
    """The three-generator staircase of a trefoil.

    ``left`` has two arrows into the corner generator c; ``right`` is its dual.
    """
    if hand == "left":
        gens = (Generator("a", 0, 1, 2), Generator("c", 0, 0, 1), Generator("b", 1, 0, 2))
        arrows = {("a", "c"), ("b", "c")}
    elif hand == "right":
        gens = (Generator("c", 0, 0, -1), Generator("a", 0, -1, -2), Generator("b", -1, 0, -2))
        arrows = {("c", "a"), ("c", "b")}
    else:
        raise ValueError(f"hand must be 'left' or 'right', not {hand!r}")
    return FundamentalComplex(gens, frozenset(arrows))


def build_unknot() -> FundamentalComplex:
    return FundamentalComplex((Generator("u", 0, 0, 0),), frozenset())


def rename(c: FundamentalComplex, fn: Callable[[str], str]) -> FundamentalComplex:
    gens = tuple(Generator(fn(g.name), g.i, g.j, g.maslov) for g in c.generators)
    return FundamentalComplex(gens, frozenset((fn(a), fn(b)) for a, b in c.arrows))


# -- file format ----------------------------------------------------------------

# Tensor products name generators ``x|y`` and mirrors append ``*``, so both
# characters are accepted on top of the word characters.
NAME = r"[A-Za-z0-9_|*]+"
_GEN_RE = re.compile(rf"gen\s+({NAME})\s+i=(-?\d+)\s+j=(-?\d+)\s+m=(-?\d+)")
_ARROW_RE = re.compile(rf"arrow\s+({NAME})\s+({NAME})")


def parse_complex(text: str) -> FundamentalComplex:
    gens: list[Generator] = []
    names: set[str] = set()
    arrows: set[tuple[str, str]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if m := _GEN_RE.fullmatch(line):
            name = m.group(1)
            if name in names:
                raise ComplexError("duplicate", f"duplicate generator name {name!r}", lineno)
            names.add(name)
            gens.append(Generator(name, int(m.group(2)), int(m.group(3)), int(m.group(4))))
        elif m := _ARROW_RE.fullmatch(line):
            src, dst = m.groups()
            for name in (src, dst):
                if name not in names:
                    raise ComplexError("unknown", f"arrow mentions undeclared generator {name!r}", lineno)
            if (src, dst) in arrows:
                raise ComplexError("duplicate", f"repeated arrow {src} -> {dst}", lineno)
            arrows.add((src, dst))
        else:
            raise ComplexError("syntax", f"cannot parse {raw.strip()!r}", lineno)
    c = FundamentalComplex(tuple(gens), frozenset(arrows))
    check_structure(c)
    return c


def serialize_complex(c: FundamentalComplex) -> str:
    lines = []
    for g in sorted(c.generators, key=lambda g: (-g.i, -g.j, g.name)):
        lines.append(f"gen {g.name} i={g.i} j={g.j} m={g.maslov}")
    for src, dst in sorted(c.arrows):
        lines.append(f"arrow {src} {dst}")
    return "\n".join(lines) + "\n"


def canonical_order(c: FundamentalComplex) -> FundamentalComplex:
    """Same complex with generators in serialization order."""
    gens = tuple(sorted(c.generators, key=lambda g: (-g.i, -g.j, g.name)))
    return FundamentalComplex(gens, c.arrows)
