"""Closed surface groups, Dehn's algorithm, and the named vanishing-cycle words.

Generators of the genus ``g`` surface group are ``a1, b1, ..., ag, bg`` and
the relator is ``[a1,b1][a2,b2]...[ag,bg]``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .fpgroup.presentation import Presentation
from .fpgroup.words import Word, commutator, reduce


def gen(name: str) -> Word:
    return Word.gen(name)


def surface_generators(g: int, a: str = "a", b: str = "b") -> tuple:
    return tuple(name for i in range(1, g + 1) for name in (f"{a}{i}", f"{b}{i}"))


def commutator_product(pairs) -> Word:
    """``[x1,y1][x2,y2]...`` for generator-name pairs."""
    return Word.product(commutator(gen(x), gen(y)) for x, y in pairs)


def partial_commutator(j: int, a: str = "a", b: str = "b") -> Word:
    """``c_j = [a1,b1]...[aj,bj]``."""
    return commutator_product((f"{a}{i}", f"{b}{i}") for i in range(1, j + 1))


@dataclass(frozen=True)
class SurfaceGroup:
    genus: int

    def __post_init__(self):
        if self.genus < 1:
            raise ValueError("surface genus must be >= 1")

    @property
    def generators(self) -> tuple:
        return surface_generators(self.genus)

    @property
    def relator(self) -> Word:
        return partial_commutator(self.genus)

    @property
    def presentation(self) -> Presentation:
        return Presentation(self.generators, (self.relator,), f"pi1(Sigma_{self.genus})")


def standard_presentation(g: int) -> Presentation:
    return SurfaceGroup(g).presentation


def _symmetrized(g: int) -> dict:
    S = SurfaceGroup(g)
    P = S.presentation
    r = P.encode_word(S.relator)
    rinv = [-x for x in reversed(r)]
    rules: dict = {}
    for cand in (r, rinv):
        for i in range(len(cand)):
            rot = cand[i:] + cand[:i]
            rules.setdefault(rot[0], []).append(rot)
    return rules


def dehn_is_trivial(w: Word, g: int) -> bool:
    """Decide ``w = 1`` in the genus ``g`` surface group.

    For ``g >= 2`` this is Dehn's algorithm: any subword that is more than
    half of a cyclic rotation of the relator (or its inverse) is replaced
    by the inverse of the remaining part, until no such subword exists.
    Genus one is abelian, so exponent sums decide.
    """
    S = SurfaceGroup(g)
    P = S.presentation
    code = P.encode_word(reduce(w))
    if g == 1:
        return all(sum(1 if x == i else -1 if x == -i else 0 for x in code) == 0 for i in (1, 2))
    rules = _symmetrized(g)
    L = 4 * g
    word = list(code)
    changed = True
    while word and changed:
        changed = False
        for pos in range(len(word)):
            for rot in rules.get(word[pos], ()):
                m = 1
                limit = min(L, len(word) - pos)
                while m < limit and word[pos + m] == rot[m]:
                    m += 1
                if 2 * m > L:
                    repl = [-x for x in reversed(rot[m:])]
                    merged = word[:pos] + repl + word[pos + m :]
                    out: list = []
                    for x in merged:
                        if out and out[-1] == -x:
                            out.pop()
                        else:
                            out.append(x)
                    word = out
                    changed = True
                    break
            if changed:
                break
    trivial = not word
    if trivial:
        # soundness gate: a trivial element has vanishing exponent sums
        assert all(sum(s for name, s in w.letters if name == x) == 0 for x in S.generators)
    return trivial


@dataclass(frozen=True)
class CurveWordCatalog:
    """Words for the named curves on the fiber of the ``Y(n,k)`` fibration.

    The ``B`` curves live on the ``a1..a2k, b1..b2k`` part of the fiber;
    the extra loops ``e1 .. e(2n-2)`` are generators in their own right.
    """

    k: int
    n: int
    words: dict = field(default_factory=dict)

    @property
    def genus(self) -> int:
        return 2 * self.k + self.n - 1

    @property
    def generators(self) -> tuple:
        extra = tuple(f"e{j}" for j in range(1, 2 * self.n - 1))
        return surface_generators(2 * self.k) + extra

    def B(self, i: int) -> Word:
        return self.words[f"B{i}"]

    def dump(self) -> list:
        return [f"{label} -> {w}" for label, w in self.words.items()]


def _b_run(lo: int, hi: int) -> Word:
    return Word.product(gen(f"b{i}") for i in range(lo, hi + 1))


def curve_words(k: int, n: int = 1) -> CurveWordCatalog:
    """Vanishing-cycle words ``B0 .. B2k``, ``c = c_k``, every ``c_r``, and the ``e`` loops."""
    if k < 1 or n < 1:
        raise ValueError("curve_words needs k >= 1 and n >= 1")
    G = 2 * k

    def a(i):
        return gen(f"a{i}")

    c = partial_commutator
    words: dict = {"B0": _b_run(1, G)}
    for i in range(1, k + 1):
        words[f"B{2 * i - 1}"] = a(i) * _b_run(i, G + 1 - i) * c(G + 1 - i) * a(G + 1 - i)
        if i < k:
            words[f"B{2 * i}"] = a(i) * _b_run(i + 1, G - i) * c(G - i) * a(G + 1 - i)
    words[f"B{G}"] = a(k) * c(k) * a(k + 1)
    words = {f"B{i}": words[f"B{i}"] for i in range(G + 1)}
    words["c"] = c(k)
    for r in range(1, G + 1):
        words[f"c_{r}"] = c(r)
    for j in range(1, 2 * n - 1):
        words[f"e{j}"] = gen(f"e{j}")
    return CurveWordCatalog(k, n, words)


__all__ = [
    "CurveWordCatalog",
    "SurfaceGroup",
    "commutator_product",
    "curve_words",
    "dehn_is_trivial",
    "partial_commutator",
    "standard_presentation",
    "surface_generators",
]
