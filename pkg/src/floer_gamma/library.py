"""Resolution of knot references to complexes and Seifert matrices.

A reference is a built-in name (``unknot``, ``trefoil_l``, ``trefoil_r``,
``9_42``), a connected sum ``connsum:<base>:<m>``, or a path to a complex
file, optionally paired with a Seifert fixture file.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path
from typing import Callable

from . import bounds, engine, model
from .fixtures import read_fixture

BUILTINS: dict[str, Callable[[], model.FundamentalComplex]] = {
    "unknot": model.build_unknot,
    "trefoil_l": lambda: model.build_trefoil("left"),
    "trefoil_r": lambda: model.build_trefoil("right"),
    "9_42": model.build_9_42,
}


class UnknownKnot(ValueError):
    pass


@dataclass(frozen=True)
class KnotRef:
    label: str
    base: str | None = None
    copies: int = 1
    path: Path | None = None
    seifert_path: Path | None = None


def parse_knot_ref(text: str, seifert: str | os.PathLike | None = None) -> KnotRef:
    seifert_path = Path(seifert) if seifert is not None else None
    if text.startswith("connsum:"):
        parts = text.split(":")
        if len(parts) != 3 or parts[1] not in BUILTINS:
            raise UnknownKnot(f"bad connected sum {text!r}; expected connsum:<builtin>:<m>")
        try:
            copies = int(parts[2])
        except ValueError:
            raise UnknownKnot(f"bad copy count in {text!r}") from None
        if copies < 1:
            raise UnknownKnot("a connected sum needs at least one copy")
        return KnotRef(text, parts[1], copies, seifert_path=seifert_path)
    if text in BUILTINS:
        return KnotRef(text, text, seifert_path=seifert_path)
    path = Path(text)
    if path.exists():
        return KnotRef(text, path=path, seifert_path=seifert_path)
    raise UnknownKnot(f"{text!r} is neither a built-in knot nor an existing file")


@dataclass(frozen=True)
class ResolvedKnot:
    label: str
    complex: model.FundamentalComplex
    sigma: int | None

    def require_sigma(self) -> int:
        if self.sigma is None:
            raise bounds.SeifertError(f"no Seifert matrix available for {self.label}")
        return self.sigma


def resolve(ref: KnotRef, fixtures: str | os.PathLike | None = None) -> ResolvedKnot:
    """Build the complex and, when Seifert data exists, the signature.

    Connected sums combine complexes by tensor power and signatures by
    addition.  Parsing errors from files propagate as ComplexError or
    SeifertError.
    """
    if ref.path is not None:
        c = model.parse_complex(ref.path.read_text(encoding="utf-8"))
        sigma = None
        if ref.seifert_path is not None:
            table = bounds.parse_seifert(ref.seifert_path.read_text(encoding="utf-8"))
            if not table:
                raise bounds.SeifertError(f"{ref.seifert_path} holds no Seifert matrix")
            v = table.get(ref.path.stem, next(iter(table.values())))
            sigma = bounds.signature(v)
        return ResolvedKnot(ref.label, c, sigma)
    base = BUILTINS[ref.base]()
    c = engine.tensor_power(base, ref.copies) if ref.copies > 1 else base
    if ref.seifert_path is not None:
        table = bounds.parse_seifert(ref.seifert_path.read_text(encoding="utf-8"))
    else:
        table = bounds.parse_seifert(read_fixture("seifert.txt", fixtures))
    sigma = None
    if ref.base in table:
        sigma = bounds.signature_connected_sum([bounds.signature(table[ref.base])] * ref.copies)
    return ResolvedKnot(ref.label, c, sigma)


def library_invariants(name: str, fixtures: str | os.PathLike | None = None) -> tuple[int, int, int]:
    """(signature, d(S^3_{+1}), d(S^3_{-1})) of a built-in knot reference."""
    knot = resolve(parse_knot_ref(name), fixtures)
    return (
        knot.require_sigma(),
        engine.d_plus_one_surgery(knot.complex),
        engine.d_minus_one_surgery(knot.complex),
    )
