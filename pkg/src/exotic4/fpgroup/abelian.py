"""Integer Smith normal form and abelian invariants of a presentation."""

from __future__ import annotations

from dataclasses import dataclass, field

from .presentation import Presentation
from .words import exponent_vector


@dataclass(frozen=True)
class AbelianInvariants:
    """``Z^free_rank + Z/d1 + Z/d2 + ...`` with ``d1 | d2 | ...`` and every ``di >= 2``."""

    free_rank: int
    torsion: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(self.torsion))
        if self.free_rank < 0:
            raise ValueError("free rank must be non-negative")
        for d in self.torsion:
            if d < 2:
                raise ValueError(f"torsion coefficients must be >= 2, got {d}")
        for d, e in zip(self.torsion, self.torsion[1:]):
            if e % d:
                raise ValueError(f"torsion {self.torsion} is not a divisibility chain")

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def __str__(self) -> str:
        parts = []
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        parts += [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"

    def to_json(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}


def smith_normal_form(matrix) -> list[int]:
    """Invariant factors of an integer matrix.

    Returns the ``min(rows, cols)`` diagonal entries ``d1 | d2 | ...`` with
    every ``di >= 0`` (zeros last).
    """
    A = [[int(x) for x in row] for row in matrix]
    m = len(A)
    n = len(A[0]) if m else 0
    if any(len(row) != n for row in A):
        raise ValueError("ragged matrix")
    diag = []
    t = 0
    while t < min(m, n):
        # pivot: smallest nonzero absolute value in the remaining block
        pivot = None
        for i in range(t, m):
            for j in range(t, n):
                v = A[i][j]
                if v and (pivot is None or abs(v) < pivot[0]):
                    pivot = (abs(v), i, j)
                    if pivot[0] == 1:
                        break
            if pivot and pivot[0] == 1:
                break
        if pivot is None:
            break
        _, pi, pj = pivot
        A[t], A[pi] = A[pi], A[t]
        for row in A:
            row[t], row[pj] = row[pj], row[t]
        while True:
            p = A[t][t]
            dirty = False
            for i in range(t + 1, m):
                q = A[i][t] // p
                if q:
                    ri, rt = A[i], A[t]
                    for j in range(t, n):
                        ri[j] -= q * rt[j]
                if A[i][t]:
                    dirty = True
            for j in range(t + 1, n):
                q = A[t][j] // p
                if q:
                    for row in A:
                        row[j] -= q * row[t]
                if A[t][j]:
                    dirty = True
            if not dirty:
                # enforce divisibility of the remaining block by the pivot
                bad = next(
                    (i for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % p),
                    None,
                )
                if bad is None:
                    break
                rb, rt = A[bad], A[t]
                for j in range(t, n):
                    rt[j] += rb[j]
                continue
            # move the smallest nonzero entry of row/column t to the pivot
            best = (abs(p), t, t)
            for i in range(t + 1, m):
                if A[i][t] and abs(A[i][t]) < best[0]:
                    best = (abs(A[i][t]), i, t)
            for j in range(t + 1, n):
                if A[t][j] and abs(A[t][j]) < best[0]:
                    best = (abs(A[t][j]), t, j)
            _, bi, bj = best
            if bi != t:
                A[t], A[bi] = A[bi], A[t]
            if bj != t:
                for row in A:
                    row[t], row[bj] = row[bj], row[t]
        diag.append(abs(A[t][t]))
        t += 1
    diag += [0] * (min(m, n) - len(diag))
    return diag


def relation_matrix(P: Presentation) -> list[list[int]]:
    return [exponent_vector(r, P.generators) for r in P.relators]


def abelianize(P: Presentation) -> AbelianInvariants:
    """H_1 of the presented group."""
    if not P.generators:
        return AbelianInvariants(0)
    M = relation_matrix(P)
    if not M:
        return AbelianInvariants(P.rank)
    diag = smith_normal_form(M)
    rank = sum(1 for d in diag if d)
    torsion = tuple(d for d in diag if d > 1)
    return AbelianInvariants(P.rank - rank, torsion)
