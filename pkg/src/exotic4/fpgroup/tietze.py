"""Tietze simplification of presentations.

Two kinds of moves are applied until neither makes progress:

* shortening: if a relator ``s`` contains a subword ``u`` that is more than
  half of a cyclic rotation ``u*t`` of another relator (or its inverse),
  replace ``u`` by ``t^-1``;
* elimination: if some generator occurs exactly once in a relator, solve
  for it and substitute it away. Candidates are tried shortest relator
  first; ties eliminate the later generator so the earliest names survive.

Duplicate relators (equal up to rotation and inversion) are dropped.
"""

from __future__ import annotations

from dataclasses import dataclass

from .presentation import Presentation
from .words import Word

DEFAULT_TIETZE_BUDGET = 10_000


@dataclass(frozen=True)
class TietzeResult:
    presentation: Presentation
    trace: tuple
    eliminations: tuple = ()  # (generator name, solving relator) in order


def _free_reduce(word) -> list:
    out: list = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return out


def _cyclic_reduce(word) -> tuple:
    w = _free_reduce(word)
    i, j = 0, len(w) - 1
    while i < j and w[i] == -w[j]:
        i += 1
        j -= 1
    return tuple(w[i : j + 1])


def _inverse(word) -> tuple:
    return tuple(-x for x in reversed(word))


def _key(word: tuple) -> tuple:
    best = None
    for cand in (word, _inverse(word)):
        for i in range(len(cand)):
            rot = cand[i:] + cand[:i]
            if best is None or rot < best:
                best = rot
    return best or ()


def _normalize(rels: list) -> list:
    seen = set()
    out = []
    for r in rels:
        r = _cyclic_reduce(r)
        if not r:
            continue
        k = _key(r)
        if k in seen:
            continue
        seen.add(k)
        out.append(r)
    return out


def _rule_index(rels: list) -> dict:
    """first letter -> list of (relator index, rotation)"""
    index: dict = {}
    for ri, r in enumerate(rels):
        for cand in (r, _inverse(r)):
            for i in range(len(cand)):
                rot = cand[i:] + cand[:i]
                index.setdefault(rot[0], []).append((ri, rot))
    return index


def _shorten_once(rels: list) -> bool:
    index = _rule_index(rels)
    changed = False
    for si in range(len(rels)):
        s = rels[si]
        touched = False
        while s:
            n = len(s)
            best = None  # (gain, pos, match length, rotation)
            for pos in range(n):
                for ri, rot in index.get(s[pos], ()):
                    if ri == si:
                        continue
                    L = len(rot)
                    limit = min(L, n)
                    m = 1
                    while m < limit and s[(pos + m) % n] == rot[m]:
                        m += 1
                    if 2 * m <= L:
                        continue
                    gain = 2 * m - L
                    if best is None or gain > best[0]:
                        best = (gain, pos, m, rot)
            if best is None:
                break
            _, pos, m, rot = best
            cyc = s[pos:] + s[:pos]
            s = _cyclic_reduce(_inverse(rot[m:]) + cyc[m:])
            touched = True
        if touched:
            # rules from the old version of this relator must not be reused
            rels[si] = s
            index = _rule_index(rels)
            changed = True
    return changed


def _occurrences(r: tuple, g: int) -> int:
    return sum(1 for x in r if x == g or x == -g)


def _eliminate(rels: list, live: list, budget: int):
    """Try one elimination; returns (generator, solving relator) or None."""
    cands = []
    for ri, r in enumerate(rels):
        counts: dict = {}
        for x in r:
            counts[abs(x)] = counts.get(abs(x), 0) + 1
        for g, c in counts.items():
            if c == 1:
                cands.append((len(r), -live.index(g), ri, g))
    cands.sort()
    for _, _, ri, g in cands:
        r = rels[ri]
        pos = next(i for i, x in enumerate(r) if abs(x) == g)
        rot = r[pos:] + r[:pos]
        # rot = g^e * w  =>  g = w^-1 when e = +1, g = w when e = -1
        rest = rot[1:]
        image = _inverse(rest) if rot[0] > 0 else tuple(rest)
        inv_image = _inverse(image)
        new = []
        ok = True
        for rj, s in enumerate(rels):
            if rj == ri:
                continue
            if _occurrences(s, g):
                out = []
                for x in s:
                    if x == g:
                        out.extend(image)
                    elif x == -g:
                        out.extend(inv_image)
                    else:
                        out.append(x)
                s = _cyclic_reduce(out)
                if len(s) > budget:
                    ok = False
                    break
            new.append(s)
        if ok:
            return g, r, new
    return None


def tietze_reduce(P: Presentation, budget: int = DEFAULT_TIETZE_BUDGET) -> TietzeResult:
    """Simplify ``P`` by Tietze moves, recording each elimination.

    Never adds generators; a substitution that would push any relator past
    ``budget`` letters is skipped. Running out of moves returns the best
    presentation found so far.
    """
    rels = _normalize([tuple(r) for r in P.encode()])
    live = list(range(1, P.rank + 1))
    trace = []
    elims = []
    while True:
        while _shorten_once(rels):
            rels = _normalize(rels)
        rels = _normalize(rels)
        step = _eliminate(rels, live, budget)
        if step is None:
            break
        g, solver, rels = step
        live.remove(g)
        rels = _normalize(rels)
        solver_word = P.decode_word(solver)
        elims.append((P.generators[g - 1], solver_word))
        trace.append(f"eliminate {P.generators[g - 1]} via {solver_word}")
    names = [P.generators[g - 1] for g in live]
    renumber = {g: i + 1 for i, g in enumerate(live)}
    out_rels = []
    for r in rels:
        out_rels.append(
            tuple((names[renumber[abs(x)] - 1], 1 if x > 0 else -1) for x in r)
        )
    Q = Presentation(
        tuple(names),
        tuple(Word(r) for r in out_rels),
        f"tietze({P.label})" if P.label else "tietze",
    )
    return TietzeResult(Q, tuple(trace), tuple(elims))


def tietze_simplify(P: Presentation, budget: int = DEFAULT_TIETZE_BUDGET) -> Presentation:
    return tietze_reduce(P, budget).presentation
