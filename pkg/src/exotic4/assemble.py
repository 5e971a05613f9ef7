"""Fiber sums as Van Kampen amalgamations, and torus surgeries as relator edits."""

from __future__ import annotations

import re
from dataclasses import dataclass, field, replace

from .blocks import BlockDescriptor, CharNumbers
from .fpgroup.abelian import abelianize
from .fpgroup.presentation import Presentation, relator_key
from .fpgroup.words import IDENTITY, AlphabetError, Word, invert, map_word, power


@dataclass(frozen=True)
class GluingMap:
    """``pairs[i] = (x, w)``: the i-th marking word of A goes to ``w`` in B's alphabet."""

    pairs: tuple
    meridian_rule: bool = True

    @classmethod
    def positional(cls, A: BlockDescriptor, B: BlockDescriptor) -> "GluingMap":
        """Send the i-th marking word of A to the i-th marking word of B."""
        if len(A.boundary_marking) != len(B.boundary_marking):
            raise ValueError("markings have different lengths")
        return cls(tuple(zip(A.boundary_marking, B.boundary_marking)))

    def reordered(self, order) -> "GluingMap":
        return GluingMap(tuple(self.pairs[i] for i in order), self.meridian_rule)


@dataclass(frozen=True)
class AssembledManifold:
    label: str
    presentation: Presentation
    char: CharNumbers
    symplectic: bool
    recipe: dict = field(default_factory=dict, compare=False)
    identifications: tuple = ()
    notes: tuple = ()
    claim: str = ""


def _rename_map(A: Presentation, B: Presentation, tag: str) -> dict:
    taken = set(A.generators)
    out = {}
    for g in B.generators:
        name = g
        if name in taken:
            name = f"{g}_{tag}"
            while name in taken or name in B.generators:
                name += "_"
        out[g] = name
        taken.add(name)
    return out


def fiber_sum(A: BlockDescriptor, B: BlockDescriptor, psi: GluingMap | None = None,
              label: str = "") -> AssembledManifold:
    """Van Kampen presentation and characteristic numbers of ``A #_psi B``.

    Generators of B that clash with A's are renamed ``name_<tag>``.
    Relators: those of A, those of B, ``x * psi(x)^-1`` for each pair and,
    under the meridian rule, ``muA * muB^-1`` (which is just the nonempty
    meridian when the other is trivial).
    """
    g = A.boundary_genus
    if B.boundary_genus != g:
        raise ValueError(f"boundary genera differ: {g} != {B.boundary_genus}")
    if psi is None:
        psi = GluingMap.positional(A, B)
    PA, PB = A.presentation, B.presentation
    if len(psi.pairs) != 2 * g:
        raise ValueError(f"gluing map has {len(psi.pairs)} pairs, need {2 * g}")
    if sorted(map(str, (x for x, _ in psi.pairs))) != sorted(map(str, A.boundary_marking)):
        raise ValueError("gluing map does not cover the marking of A")
    if sorted(map(str, (y for _, y in psi.pairs))) != sorted(map(str, B.boundary_marking)):
        raise ValueError("gluing map is not onto the marking of B")
    names = _rename_map(PA, PB, B.tag)
    phi = {x: Word.gen(y) for x, y in names.items()}
    rels = list(PA.relators) + [map_word(r, phi) for r in PB.relators]
    idents = []
    for x, y in psi.pairs:
        y2 = map_word(y, phi)
        idents.append((x, y2))
        rels.append(x * invert(y2))
    if psi.meridian_rule:
        rels.append(A.meridian * invert(map_word(B.meridian, phi)))
    gens = PA.generators + tuple(names[x] for x in PB.generators)
    P = Presentation(gens, tuple(rels), label or f"{A.label} # {B.label}")
    e = A.char.e + B.char.e + 4 * (g - 1)
    sigma = A.char.sigma + B.char.sigma
    char = CharNumbers.from_e_sigma(e, sigma, b1=abelianize(P).free_rank)
    assert char.c1sq == A.char.c1sq + B.char.c1sq + 8 * (g - 1)
    assert char.chi_h == A.char.chi_h + B.char.chi_h + (g - 1)
    return AssembledManifold(
        label=P.label,
        presentation=P,
        char=char,
        symplectic=A.symplectic and B.symplectic,
        recipe={"fiber_sum": [A.recipe, B.recipe], "genus": g},
        identifications=tuple(idents),
        notes=tuple(dict.fromkeys(A.notes + B.notes)),
    )


def apply_torus_surgery(M, meridian: Word, direction: Word, m: int, *, replaces: Word | None = None,
                        luttinger: bool | None = None):
    """Add the relator ``meridian * direction^m``; e and sigma are unchanged.

    ``replaces`` names a relator (up to rotation and inversion) that the new
    one supersedes. The symplectic flag survives only a Luttinger surgery,
    by default ``|m| <= 1``.
    """
    P = M.presentation
    allowed = set(P.generators)
    for w in (meridian, direction):
        if not w.generators() <= allowed:
            raise AlphabetError(f"{w} is not a word in the alphabet of {P.label}")
    rels = list(P.relators)
    if replaces is not None:
        key = relator_key(replaces)
        hits = [i for i, r in enumerate(rels) if relator_key(r) == key]
        if not hits:
            raise ValueError(f"{replaces} is not a relator of {P.label}")
        del rels[hits[0]]
        at = hits[0]
    else:
        at = len(rels)
    new = meridian * power(direction, m)
    if new != IDENTITY:
        rels.insert(at, new)
    Q = Presentation(P.generators, tuple(rels), P.label)
    if luttinger is None:
        luttinger = abs(m) <= 1
    symplectic = M.symplectic and luttinger
    old = M.char
    char = CharNumbers.from_e_sigma(old.e, old.sigma, b1=abelianize(Q).free_rank)
    assert char.core() == old.core()
    surgery = {"meridian": str(meridian), "direction": str(direction), "m": m}
    if isinstance(M, BlockDescriptor):
        if M.complement is None:
            raise ValueError("metadata-only block has no presentation to edit")
        recipe = dict(M.recipe, surgeries=M.recipe.get("surgeries", []) + [surgery])
        return replace(M, complement=Q, char=char, symplectic=symplectic, recipe=recipe)
    recipe = dict(M.recipe, surgeries=M.recipe.get("surgeries", []) + [surgery])
    return replace(M, presentation=Q, char=char, symplectic=symplectic, recipe=recipe)


_TAG = re.compile(r"_[A-Za-z]+_*$")


def substitute_identifications(M: AssembledManifold) -> Presentation:
    """Eliminate each glued generator of A via its identification relator and
    strip the collision suffixes, giving the presentation as one writes it
    by hand. Identification relators themselves disappear."""
    P = M.presentation
    images = {}
    for x, y in M.identifications:
        if len(x) != 1:
            continue
        (name, sign), = x.letters
        images[name] = y if sign > 0 else invert(y)
    gens = [g for g in P.generators if g not in images]
    strip = {g: _TAG.sub("", g) for g in gens}
    if len(set(strip.values())) != len(gens):
        strip = {g: g for g in gens}
    phi = {g: Word.gen(strip[g]) for g in gens}
    for name, y in images.items():
        phi[name] = map_word(y, phi)
    rels = [map_word(r, phi) for r in P.relators]
    return Presentation(tuple(strip[g] for g in gens), tuple(rels), P.label)


__all__ = [
    "AssembledManifold",
    "GluingMap",
    "apply_torus_surgery",
    "fiber_sum",
    "substitute_identifications",
]
