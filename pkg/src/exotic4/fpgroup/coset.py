"""Todd-Coxeter coset enumeration (HLT relator tracing with lookahead)."""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Sequence

from .presentation import Presentation
from .words import Word

DEFAULT_COSET_CAP = 1_000_000
CAP_ENV_VAR = "EXOTIC4_COSET_CAP"


def default_coset_cap() -> int:
    value = os.environ.get(CAP_ENV_VAR)
    return int(value) if value else DEFAULT_COSET_CAP


@dataclass(frozen=True)
class Complete:
    index: int


@dataclass(frozen=True)
class Overflow:
    cap: int


@dataclass(frozen=True)
class CosetTable:
    """Action of the generators on the cosets of a subgroup.

    ``rows[c][2*i]`` is the image of coset ``c`` under generator ``i`` and
    ``rows[c][2*i+1]`` under its inverse. Only a ``Complete`` table carries
    rows; an ``Overflow`` means the enumeration was abandoned at the cap and
    says nothing about the group.
    """

    generators: tuple
    rows: tuple
    status: Complete | Overflow
    cosets_defined: int = 0

    @property
    def complete(self) -> bool:
        return isinstance(self.status, Complete)

    @property
    def index(self) -> int | None:
        return self.status.index if self.complete else None

    def act(self, coset: int, w: Word) -> int:
        col = {g: 2 * i for i, g in enumerate(self.generators)}
        for g, s in w.letters:
            coset = self.rows[coset][col[g] + (0 if s > 0 else 1)]
        return coset

    def is_closed(self, P: Presentation) -> bool:
        """Every entry defined, inverse columns consistent, and every relator
        traced from every coset returns to its start."""
        if not self.complete:
            return False
        n = len(self.rows)
        for c, row in enumerate(self.rows):
            for x, d in enumerate(row):
                if not 0 <= d < n or self.rows[d][x ^ 1] != c:
                    return False
        return all(self.act(c, r) == c for r in P.relators for c in range(n))


class _Enumerator:
    def __init__(self, ngens: int, cap: int):
        self.ncols = 2 * ngens
        self.cap = cap
        self.table: list[list[int]] = [[-1] * self.ncols]
        self.parent = [0]
        self.live = 1
        self.defined = 1

    def find(self, c: int) -> int:
        parent = self.parent
        root = c
        while parent[root] != root:
            root = parent[root]
        while parent[c] != root:
            parent[c], c = root, parent[c]
        return root

    def define(self, c: int, x: int) -> None:
        n = len(self.table)
        self.table.append([-1] * self.ncols)
        self.parent.append(n)
        self.table[c][x] = n
        self.table[n][x ^ 1] = c
        self.live += 1
        self.defined += 1

    def _merge(self, a: int, b: int, queue: list) -> None:
        a, b = self.find(a), self.find(b)
        if a == b:
            return
        lo, hi = (a, b) if a < b else (b, a)
        self.parent[hi] = lo
        self.live -= 1
        queue.append(hi)

    def coincidence(self, a: int, b: int) -> None:
        table = self.table
        queue: list[int] = []
        self._merge(a, b, queue)
        i = 0
        while i < len(queue):
            e = queue[i]
            i += 1
            row = table[e]
            for x in range(self.ncols):
                f = row[x]
                if f < 0:
                    continue
                table[f][x ^ 1] = -1
                e1, f1 = self.find(e), self.find(f)
                if table[e1][x] >= 0:
                    self._merge(f1, table[e1][x], queue)
                elif table[f1][x ^ 1] >= 0:
                    self._merge(e1, table[f1][x ^ 1], queue)
                else:
                    table[e1][x] = f1
                    table[f1][x ^ 1] = e1

    def scan(self, c: int, w: Sequence[int], fill: bool) -> bool:
        """Trace ``w`` from ``c``; returns False if a fill was needed past the cap."""
        table = self.table
        f, i = c, 0
        b, j = c, len(w) - 1
        while True:
            while i <= j and table[f][w[i]] >= 0:
                f = table[f][w[i]]
                i += 1
            if i > j:
                if f != c:
                    self.coincidence(f, c)
                return True
            while j >= i and table[b][w[j] ^ 1] >= 0:
                b = table[b][w[j] ^ 1]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return True
            if i == j:
                table[f][w[i]] = b
                table[b][w[i] ^ 1] = f
                return True
            if not fill:
                return True
            if self.live >= self.cap:
                return False
            self.define(f, w[i])

    def alive(self, c: int) -> bool:
        return self.parent[c] == c

    def lookahead(self, relators) -> None:
        c = 0
        while c < len(self.table):
            if self.alive(c):
                for r in relators:
                    self.scan(c, r, fill=False)
                    if not self.alive(c):
                        break
            c += 1


def _columns(code: Sequence[int]) -> list[int]:
    return [2 * (x - 1) if x > 0 else 2 * (-x - 1) + 1 for x in code]


def todd_coxeter(
    P: Presentation,
    subgroup_gens: Sequence[Word] = (),
    coset_cap: int | None = None,
) -> CosetTable:
    """Enumerate the cosets of ``<subgroup_gens>`` in the group ``P``.

    Deterministic: cosets are defined in first-undefined, smallest-column
    order. When the number of live cosets reaches ``coset_cap`` a lookahead
    pass (deductions only) runs; if that frees nothing the result is
    ``Overflow(cap)``.
    """
    cap = default_coset_cap() if coset_cap is None else coset_cap
    if cap < 1:
        raise ValueError("coset_cap must be >= 1")
    gens = P.generators
    relators = [_columns(r) for r in P.encode()]
    subgroup = [_columns(P.encode_word(h)) for h in subgroup_gens]
    en = _Enumerator(len(gens), cap)
    ncols = en.ncols

    def fill_or_lookahead(c: int, w) -> bool:
        while not en.scan(c, w, fill=True):
            before = en.live
            en.lookahead(relators)
            if en.live >= before or en.live >= cap:
                return False
            if not en.alive(c):
                return True
        return True

    ok = True
    for h in subgroup:
        if not fill_or_lookahead(en.find(0), h):
            ok = False
            break
    c = 0
    while ok and c < len(en.table):
        if en.alive(c):
            for r in relators:
                if not fill_or_lookahead(c, r):
                    ok = False
                    break
                if not en.alive(c):
                    break
            if ok and en.alive(c):
                for x in range(ncols):
                    if en.table[c][x] < 0:
                        if en.live >= cap:
                            before = en.live
                            en.lookahead(relators)
                            if not en.alive(c):
                                break
                            if en.table[c][x] >= 0:
                                continue
                            if en.live >= before or en.live >= cap:
                                ok = False
                                break
                        en.define(c, x)
        c += 1
    if not ok:
        return CosetTable(gens, (), Overflow(cap), en.defined)
    return CosetTable(gens, _standardize(en), Complete(en.live), en.defined)


def _standardize(en: _Enumerator) -> tuple:
    """Renumber live cosets in breadth-first order from coset 0."""
    start = en.find(0)
    order = {start: 0}
    queue = [start]
    i = 0
    while i < len(queue):
        c = queue[i]
        i += 1
        for d in en.table[c]:
            d = en.find(d)
            if d not in order:
                order[d] = len(queue)
                queue.append(d)
    return tuple(tuple(order[en.find(d)] for d in en.table[c]) for c in queue)
