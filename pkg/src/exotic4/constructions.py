"""End-to-end constructions of the X(n,k) families and their verification.

Each ``build_*`` returns an :class:`AssembledManifold`;
:func:`verify_simply_connected` gathers group-theoretic evidence and
:func:`classify_homeo` turns a trivial verdict into a homeomorphism type.
"""

from __future__ import annotations

from dataclasses import dataclass

from .assemble import AssembledManifold, apply_torus_surgery, fiber_sum
from .blocks import (
    build_gurtas,
    build_luttinger_family_A,
    build_luttinger_family_B,
    family_B_d_relator,
)
from .fpgroup.abelian import AbelianInvariants, abelianize
from .fpgroup.coset import Complete, Overflow, todd_coxeter
from .fpgroup.presentation import Presentation
from .fpgroup.quotients import PermutationQuotient, find_nonabelian_quotient, lift_quotient
from .fpgroup.tietze import DEFAULT_TIETZE_BUDGET, TietzeResult, tietze_reduce
from .fpgroup.words import Word, commutator, invert

MINIMALITY_NOTE = "minimal per Usher criteria, not machine-checked"
E_IDENT_NOTE = (
    "for n >= 2 the gluing identifies e1 .. e(2n-2), already trivial in the "
    "Y(n,k) complement, with the last {count} boundary generators of the "
    "second block, which therefore die as well"
)
INDEX_NOTE = (
    "the hand-written presentation of this family indexes c, d only up to 2k "
    "while the gluing surface has genus l = 2k+n-1; here c(2k+1) .. d(l) are "
    "kept and are killed through the identification with the e-loops"
)
CYCLIC_NOTE = "no explicit group is claimed for this family; only H1 is reported"


def _check(n: int, k: int):
    for name, v in (("n", n), ("k", k)):
        if not isinstance(v, int) or isinstance(v, bool) or v < 1:
            raise ValueError(f"{name} must be an integer >= 1, got {v!r}")


def fiber_genus(n: int, k: int) -> int:
    return 2 * k + n - 1


def _assemble(A, B, label, recipe, claim, extra_notes=()) -> AssembledManifold:
    M = fiber_sum(A, B, label=label)
    n = recipe.get("n", 1)
    notes = list(M.notes)
    if n >= 2:
        notes.append(E_IDENT_NOTE.format(count=2 * n - 2))
    notes.extend(extra_notes)
    return AssembledManifold(
        label=label,
        presentation=M.presentation,
        char=M.char,
        symplectic=M.symplectic,
        recipe=recipe,
        identifications=M.identifications,
        notes=tuple(dict.fromkeys(notes)),
        claim=claim,
    )


def build_X(n: int, k: int, relations: str = "vanishing") -> AssembledManifold:
    """``X(n,k) = Y(n,k) #_psi Y_g(1,1)`` with ``g = 2k+n-1``."""
    return build_X_m(n, k, 1, relations=relations)


def build_X_m(n: int, k: int, m: int, relations: str = "vanishing") -> AssembledManifold:
    """``X(n,k,m)``: the ``Y_g(1,m)`` block in place of ``Y_g(1,1)``."""
    _check(n, k)
    if m == 0:
        raise ValueError("m = 0 is the X(n,k)_0 construction; use build_X0")
    A = build_gurtas(n, k, relations)
    B = build_luttinger_family_B(fiber_genus(n, k), 1, m, 1)
    label = f"X({n},{k})" if m == 1 else f"X({n},{k},{m})"
    recipe = {"family": "X" if m == 1 else "Xm", "n": n, "k": k, "m": m, "relations": relations}
    notes = (MINIMALITY_NOTE,) if m == 1 else ()
    return _assemble(A, B, label, recipe, "simply connected", notes)


def build_X0(n: int, k: int, relations: str = "vanishing") -> AssembledManifold:
    """``X(n,k)_0``: the ``d`` surgery of ``Y_g(1,1)`` redone with coefficient ``0/1``."""
    _check(n, k)
    g = fiber_genus(n, k)
    B = build_luttinger_family_B(g, 1, 1, 1)
    c, d, bg = Word.gen("c"), Word.gen("d"), Word.gen(f"b{g}")
    B0 = apply_torus_surgery(
        B, commutator(invert(c), bg), d, 0, replaces=family_B_d_relator(g, 1, 1), luttinger=True
    )
    A = build_gurtas(n, k, relations)
    recipe = {"family": "X0", "n": n, "k": k, "relations": relations}
    return _assemble(A, B0, f"X({n},{k})_0", recipe, "infinite cyclic")


def free_pattern(l: int) -> tuple:
    """``p = (1, 1, 0, ..., 0)`` and ``q = (1, ..., 1)``."""
    return (1, 1) + (0,) * (l - 2), (1,) * l


def build_X_free(n: int, k: int, p=None, q=None, relations: str = "vanishing") -> AssembledManifold:
    """``X(n,k,p,q) = Y(n,k) #_psi Y_l(1/p1, 1/q1, ..., 1/pl, 1/ql)`` with ``l = 2k+n-1``.

    Without ``p``/``q`` the free-group pattern of :func:`free_pattern` is used.
    """
    _check(n, k)
    l = fiber_genus(n, k)
    dp, dq = free_pattern(l)
    p = dp if p is None else tuple(p)
    q = dq if q is None else tuple(q)
    if len(p) != l or len(q) != l:
        raise ValueError(f"p and q must have length l = {l}")
    A = build_gurtas(n, k, relations)
    B = build_luttinger_family_A(l, p, q)
    free = p == dp and q == dq
    claim = f"free of rank {k - 2}" if free and k >= 3 else ""
    recipe = {"family": "Xfree", "n": n, "k": k, "p": list(p), "q": list(q), "relations": relations}
    notes = (INDEX_NOTE,) if n >= 2 else ()
    return _assemble(A, B, f"X({n},{k},p={list(p)},q={list(q)})", recipe, claim, notes)


def build_X_cyclic(n: int, k: int, q, relations: str = "vanishing") -> AssembledManifold:
    """Free-product-of-cyclic-groups pattern: ``p = (1,1,0,...,0)`` with the given ``q >= 1``."""
    _check(n, k)
    l = fiber_genus(n, k)
    q = tuple(q)
    if len(q) != l:
        raise ValueError(f"q must have length l = {l}")
    if any(x < 1 for x in q):
        raise ValueError("q entries must be >= 1")
    M = build_X_free(n, k, free_pattern(l)[0], q, relations)
    recipe = dict(M.recipe, family="Xcyclic")
    return AssembledManifold(
        label=f"Xcyclic({n},{k},q={list(q)})",
        presentation=M.presentation,
        char=M.char,
        symplectic=M.symplectic,
        recipe=recipe,
        identifications=M.identifications,
        notes=M.notes + (CYCLIC_NOTE,),
        claim="",
    )


# -- verdicts -----------------------------------------------------------------

TRIVIAL = "Trivial"
INFINITE_CYCLIC = "InfiniteCyclic"
FREE = "FreeOfRank"
FINITE = "Finite"
ABELIAN_EVIDENCE = "AbelianEvidence"
UNDECIDED = "Undecided"


@dataclass(frozen=True)
class Pi1Verdict:
    status: str
    abelian: AbelianInvariants
    tietze: TietzeResult | None = None
    cosets: object = None  # Complete | Overflow | None when not run
    rank: int | None = None
    quotient: PermutationQuotient | None = None  # lifted to the input presentation

    def __post_init__(self):
        if self.status == TRIVIAL:
            if not (isinstance(self.cosets, Complete) and self.cosets.index == 1):
                raise ValueError("Trivial needs a complete coset table of index 1")
            if not self.abelian.is_trivial:
                raise ValueError("Trivial needs trivial abelianization")
        if self.quotient is not None and not self.quotient.is_nonabelian():
            raise ValueError("quotient evidence must be nonabelian")
        if self.status in (FREE, INFINITE_CYCLIC):
            T = self.tietze.presentation if self.tietze else None
            r = self.rank
            if T is None or T.rank != r or T.relators:
                raise ValueError("a free verdict needs a Tietze presentation with r generators and no relators")
            if self.abelian != AbelianInvariants(r, ()):
                raise ValueError("a free verdict needs abelianization Z^r")

    @property
    def free_rank(self):
        return self.rank if self.status in (FREE, INFINITE_CYCLIC) else None

    def summary(self) -> str:
        if self.status == TRIVIAL:
            return f"Trivial; cosets={self.cosets.index}"
        if self.status == INFINITE_CYCLIC:
            return "InfiniteCyclic (FreeOfRank(1))"
        if self.status == FREE:
            return f"FreeOfRank({self.rank})"
        if self.status == FINITE:
            return f"Finite; cosets={self.cosets.index}; H1={self.abelian}"
        if self.status == ABELIAN_EVIDENCE:
            extra = f"; nonabelian quotient in S{self.quotient.degree}" if self.quotient else ""
            return f"AbelianEvidence; H1={self.abelian}{extra}"
        cap = self.cosets.cap if isinstance(self.cosets, Overflow) else None
        return f"Undecided; H1={self.abelian}" + (f"; coset cap {cap} reached" if cap else "")

    def to_json(self) -> dict:
        out = {
            "status": self.status,
            "summary": self.summary(),
            "abelianization": self.abelian.to_json(),
        }
        if self.rank is not None:
            out["rank"] = self.rank
        if self.tietze is not None:
            T = self.tietze.presentation
            out["tietze"] = {"presentation": str(T), "generators": T.rank,
                             "relators": len(T.relators), "trace": list(self.tietze.trace)}
        if isinstance(self.cosets, Complete):
            out["cosets"] = {"status": "Complete", "index": self.cosets.index}
        elif isinstance(self.cosets, Overflow):
            out["cosets"] = {"status": "Overflow", "cap": self.cosets.cap}
        if self.quotient is not None:
            out["nonabelian_quotient"] = self.quotient.to_json()
        return out


def _presentation_of(M) -> Presentation:
    return M if isinstance(M, Presentation) else M.presentation


def _quotient_evidence(P: Presentation, T: TietzeResult, max_generators: int = 3):
    Q = T.presentation
    if not 1 <= Q.rank <= max_generators:
        return None
    q = find_nonabelian_quotient(Q)
    if q is None:
        return None
    lifted = lift_quotient(q, P, T.eliminations)
    # checked against the input, independently of the simplifier
    return lifted if lifted.is_homomorphism(P) and lifted.is_nonabelian() else None


def verify_simply_connected(M, coset_cap: int | None = None,
                            tietze_budget: int = DEFAULT_TIETZE_BUDGET) -> Pi1Verdict:
    """Abelianize, Tietze-simplify, then (only if H1 vanishes) enumerate cosets
    of the trivial subgroup in the original presentation.

    Overflow yields ``Undecided``; nothing is concluded from it.
    """
    P = _presentation_of(M)
    ab = abelianize(P)
    T = tietze_reduce(P, tietze_budget)
    Q = T.presentation
    if not Q.relators and ab == AbelianInvariants(Q.rank, ()) and Q.rank >= 1:
        status = INFINITE_CYCLIC if Q.rank == 1 else FREE
        return Pi1Verdict(status, ab, T, None, Q.rank)
    if not ab.is_trivial:
        return Pi1Verdict(ABELIAN_EVIDENCE, ab, T, quotient=_quotient_evidence(P, T))
    table = todd_coxeter(P, coset_cap=coset_cap)
    if isinstance(table.status, Overflow):
        return Pi1Verdict(UNDECIDED, ab, T, table.status)
    assert table.is_closed(P)
    if table.index == 1:
        return Pi1Verdict(TRIVIAL, ab, T, table.status)
    return Pi1Verdict(FINITE, ab, T, table.status)


VERIFIED, UNDECIDED_CLAIM, REFUTED = "verified", "undecided", "refuted"


def check_claim(claim: str, verdict: Pi1Verdict) -> str:
    """Compare a stated fundamental-group claim with the evidence."""
    s = verdict.status
    if claim == "":
        return VERIFIED
    if claim == "simply connected":
        if s == TRIVIAL:
            return VERIFIED
        if s == UNDECIDED:
            return UNDECIDED_CLAIM
        return REFUTED
    if claim == "infinite cyclic":
        if s == INFINITE_CYCLIC:
            return VERIFIED
        if verdict.abelian != AbelianInvariants(1, ()) or verdict.quotient is not None:
            return REFUTED
        return UNDECIDED_CLAIM
    if claim.startswith("free of rank "):
        r = int(claim.rsplit(" ", 1)[1])
        if s in (FREE, INFINITE_CYCLIC) and verdict.rank == r:
            return VERIFIED
        if verdict.abelian != AbelianInvariants(r, ()):
            return REFUTED
        if r == 1 and verdict.quotient is not None:
            return REFUTED
        return UNDECIDED_CLAIM
    raise ValueError(f"unknown claim {claim!r}")


@dataclass(frozen=True)
class HomeoType:
    b2plus: int
    b2minus: int
    parity: str = "odd"

    def render(self) -> str:
        return f"{self.b2plus} CP2 # {self.b2minus} CP2bar"

    def to_json(self) -> dict:
        return {"b2plus": self.b2plus, "b2minus": self.b2minus, "parity": self.parity,
                "type": self.render()}


def classify_homeo(M: AssembledManifold, verdict: Pi1Verdict) -> HomeoType:
    """Freedman's rule for a simply connected manifold with odd form.

    Oddness is taken from the construction (blow-ups are present), not computed.
    """
    if verdict.status != TRIVIAL:
        raise ValueError(f"homeomorphism type needs a Trivial verdict, got {verdict.status}")
    b2p = 2 * M.char.chi_h - 1
    return HomeoType(b2p, b2p - M.char.sigma)


__all__ = [
    "HomeoType",
    "Pi1Verdict",
    "build_X",
    "build_X0",
    "build_X_cyclic",
    "build_X_free",
    "build_X_m",
    "check_claim",
    "classify_homeo",
    "fiber_genus",
    "free_pattern",
    "verify_simply_connected",
]
