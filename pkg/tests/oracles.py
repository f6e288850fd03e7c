"""Independent dense reference implementations used to check the engine.

Nothing here imports the elimination code under test: matrices are numpy
uint8 arrays reduced row by row.
"""

from __future__ import annotations

import itertools

import numpy as np


def dense_rank(a: np.ndarray) -> int:
    a = (np.array(a, dtype=np.uint8) & 1).copy()
    rows, cols = a.shape
    r = 0
    for c in range(cols):
        pivot = next((k for k in range(r, rows) if a[k, c]), None)
        if pivot is None:
            continue
        a[[r, pivot]] = a[[pivot, r]]
        hits = np.nonzero(a[:, c])[0]
        for k in hits:
            if k != r:
                a[k] ^= a[r]
        r += 1
        if r == rows:
            break
    return r


def dense_nullspace(a: np.ndarray) -> list[np.ndarray]:
    """Basis of {v : a v = 0} by reduction to row echelon form."""
    a = (np.array(a, dtype=np.uint8) & 1).copy()
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        pivot = next((k for k in range(r, rows) if a[k, c]), None)
        if pivot is None:
            continue
        a[[r, pivot]] = a[[pivot, r]]
        for k in range(rows):
            if k != r and a[k, c]:
                a[k] ^= a[r]
        pivots.append(c)
        r += 1
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = np.zeros(cols, dtype=np.uint8)
        v[f] = 1
        for row, pc in enumerate(pivots):
            v[pc] = a[row, f]
        basis.append(v)
    return basis


class DenseComplex:
    """Dense boundary matrix of a complex, indexed by generator order."""

    def __init__(self, c):
        self.c = c
        self.names = [g.name for g in c.generators]
        self.index = {n: k for k, n in enumerate(self.names)}
        self.grading = np.array([g.maslov for g in c.generators])
        self.pos = [(g.i, g.j) for g in c.generators]
        n = len(self.names)
        self.d = np.zeros((n, n), dtype=np.uint8)
        for s, t in c.arrows:
            self.d[self.index[t], self.index[s]] ^= 1

    def block(self, k: int, members=None) -> tuple[list[int], list[int], np.ndarray]:
        keep = np.ones(len(self.names), bool) if members is None else members
        src = [x for x in range(len(self.names)) if self.grading[x] == k and keep[x]]
        dst = [x for x in range(len(self.names)) if self.grading[x] == k - 1 and keep[x]]
        return src, dst, self.d[np.ix_(dst, src)]

    def betti(self) -> dict[int, int]:
        out = {}
        for k in sorted(set(self.grading.tolist())):
            src, _, dk = self.block(k)
            _, _, dk1 = self.block(k + 1)
            dim = len(src) - (dense_rank(dk) if dk.size else 0) - (dense_rank(dk1) if dk1.size else 0)
            if dim:
                out[k] = dim
        return out

    def d_squared_zero(self) -> bool:
        return not ((self.d.astype(np.int64) @ self.d.astype(np.int64)) % 2).any()

    def in_image(self, vec: np.ndarray, k: int, members=None) -> bool:
        """Whether a chain supported in grading k is a boundary."""
        src, dst, d = self.block(k + 1, members)
        v = vec[dst]
        if not v.any():
            return True
        if not src:
            return False
        return dense_rank(np.column_stack([d, v])) == dense_rank(d)

    def generator_cycle(self) -> tuple[np.ndarray, int]:
        """A cycle spanning rank-one homology, found from the dense kernel."""
        betti = self.betti()
        assert sum(betti.values()) == 1, betti
        (k,) = betti
        src, _, d = self.block(k)
        kernel = dense_nullspace(d) if d.size else [np.eye(len(src), dtype=np.uint8)[x] for x in range(len(src))]
        for z in kernel:
            full = np.zeros(len(self.names), np.uint8)
            full[src] = z
            if not self.in_image(full, k):
                return full, k
        raise AssertionError("no cycle outside the image")


def oracle_d_plus(c, window: int = 20) -> int:
    """Least grading of a nonzero tower image, by dense linear algebra over
    a fixed wide range of translates."""
    dc = DenseComplex(c)
    z, k = dc.generator_cycle()
    best = None
    for l in range(-window, window + 1):
        members = np.array([max(i + l, j + l) >= 0 for i, j in dc.pos])
        zl = z & members.astype(np.uint8)
        if not zl.any():
            continue
        if not dc.in_image(zl, k, members):
            g = k + 2 * l
            best = g if best is None else min(best, g)
    assert best is not None
    return best


def brute_force_cycles(c, k: int) -> list[frozenset[str]]:
    """All nonzero cycles in grading k by enumeration; only for tiny complexes."""
    names = [g.name for g in c.generators if g.maslov == k]
    out = []
    for r in range(1, len(names) + 1):
        for combo in itertools.combinations(names, r):
            if not c.boundary(combo):
                out.append(frozenset(combo))
    return out
