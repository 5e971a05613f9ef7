"""Small permutation quotients: checkable evidence that a group is *not* something.

A homomorphism onto a nonabelian permutation group shows the group is not
abelian (in particular not cyclic). Images are found by brute force on a
presentation with few generators, then lifted back through a Tietze
elimination record and checked against the original relators, so the
witness does not depend on the simplifier being correct.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .presentation import Presentation
from .words import Word

Perm = tuple


def _compose(p: Perm, q: Perm) -> Perm:
    """``p`` then ``q``."""
    return tuple(q[i] for i in p)


def _inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def evaluate(w: Word, images: dict, degree: int) -> Perm:
    out = tuple(range(degree))
    for name, sign in w.letters:
        x = images[name]
        out = _compose(out, x if sign > 0 else _inverse(x))
    return out


@dataclass(frozen=True)
class PermutationQuotient:
    degree: int
    images: tuple  # (generator name, permutation) pairs

    def image_map(self) -> dict:
        return dict(self.images)

    def is_homomorphism(self, P: Presentation) -> bool:
        imgs = self.image_map()
        if set(imgs) != set(P.generators):
            return False
        e = tuple(range(self.degree))
        return all(evaluate(r, imgs, self.degree) == e for r in P.relators)

    def is_nonabelian(self) -> bool:
        perms = [p for _, p in self.images]
        return any(_compose(x, y) != _compose(y, x) for x, y in itertools.combinations(perms, 2))

    def to_json(self) -> dict:
        return {"degree": self.degree, "images": {g: list(p) for g, p in self.images}}


def find_nonabelian_quotient(P: Presentation, max_degree: int = 4, max_tries: int = 500_000):
    """First homomorphism (in a fixed order) from ``P`` onto a nonabelian
    subgroup of some ``S_d``, ``d <= max_degree``; ``None`` if none is found
    within ``max_tries`` assignments."""
    tries = 0
    for d in range(3, max_degree + 1):
        perms = list(itertools.permutations(range(d)))
        if len(perms) ** P.rank > max_tries - tries:
            break
        e = perms[0]
        for combo in itertools.product(perms, repeat=P.rank):
            tries += 1
            imgs = dict(zip(P.generators, combo))
            if all(evaluate(r, imgs, d) == e for r in P.relators):
                q = PermutationQuotient(d, tuple(zip(P.generators, combo)))
                if q.is_nonabelian():
                    return q
    return None


def lift_quotient(q: PermutationQuotient, original: Presentation, eliminations) -> PermutationQuotient:
    """Extend ``q`` to the generators removed by ``eliminations`` (replayed
    backwards, each solving relator contains its generator once)."""
    imgs = q.image_map()
    for name, solver in reversed(tuple(eliminations)):
        letters = solver.letters
        i = next(j for j, (x, _) in enumerate(letters) if x == name)
        u = evaluate(Word(letters[:i]), imgs, q.degree)
        v = evaluate(Word(letters[i + 1 :]), imgs, q.degree)
        # u x^s v = 1  =>  x^s = u^-1 v^-1
        xs = _compose(_inverse(u), _inverse(v))
        imgs[name] = xs if letters[i][1] > 0 else _inverse(xs)
    return PermutationQuotient(q.degree, tuple((g, imgs[g]) for g in original.generators))


__all__ = [
    "PermutationQuotient",
    "evaluate",
    "find_nonabelian_quotient",
    "lift_quotient",
]
