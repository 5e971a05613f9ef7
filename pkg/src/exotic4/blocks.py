"""Building blocks: Lefschetz-fibration total spaces and Luttinger-surgered products.

Each constructor returns a :class:`BlockDescriptor` carrying a presentation
of the block with the gluing surface removed, the words of that surface's
standard generators, the meridian word, and the characteristic numbers.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .fpgroup.abelian import abelianize
from .fpgroup.certificates import Derivation
from .fpgroup.presentation import Presentation
from .fpgroup.words import IDENTITY, Word, commutator, invert, power
from .surface import commutator_product, curve_words, gen, partial_commutator

Y_NK_CHAR_NOTE = (
    "Y(n,k) uses e = 4+4n-4k, sigma = -4n, c1^2 = 8-8k-4n, chi_h = 1-k. "
    "The alternative values sigma = -4(n+2k-1), e = 4n-4k+8, chi_h = 1-3k, "
    "c1^2 = -4(n+4k-3) that also circulate for this fibration violate "
    "c1^2 = 3 sigma + 2e and chi_h = (e + sigma)/4 and are not used."
)
E_LAST_NOTE = (
    "e(2n-1) is not a generator of the genus 2k+n-1 fiber presentation; "
    "only e1 .. e(2n-2) enter, each killed by its own relator."
)


@dataclass(frozen=True)
class CharNumbers:
    """Euler characteristic, signature and derived numbers of a closed 4-manifold.

    ``b2plus = 2*chi_h - 1 + b1`` assumes a connected closed oriented manifold
    (so ``b3 = b1``); with ``b1 = 0`` it is the familiar ``2*chi_h - 1``.
    """

    e: int
    sigma: int
    c1sq: int
    chi_h: int
    b1: int
    b2plus: int
    b2minus: int

    def __post_init__(self):
        if self.c1sq != 3 * self.sigma + 2 * self.e:
            raise ValueError(f"c1^2 = {self.c1sq} but 3 sigma + 2e = {3 * self.sigma + 2 * self.e}")
        if (self.e + self.sigma) % 4:
            raise ValueError(f"(e + sigma)/4 is not an integer for e={self.e}, sigma={self.sigma}")
        if self.chi_h != (self.e + self.sigma) // 4:
            raise ValueError("chi_h must equal (e + sigma)/4")
        if self.b2plus != 2 * self.chi_h - 1 + self.b1:
            raise ValueError("b2plus must equal 2 chi_h - 1 + b1")
        if self.b2minus != self.b2plus - self.sigma:
            raise ValueError("b2minus must equal b2plus - sigma")

    @classmethod
    def from_e_sigma(cls, e: int, sigma: int, b1: int = 0) -> "CharNumbers":
        chi, rem = divmod(e + sigma, 4)
        if rem:
            raise ValueError(f"(e + sigma)/4 is not an integer for e={e}, sigma={sigma}")
        b2p = 2 * chi - 1 + b1
        return cls(e, sigma, 3 * sigma + 2 * e, chi, b1, b2p, b2p - sigma)

    def core(self) -> tuple:
        return (self.e, self.sigma, self.c1sq, self.chi_h)

    def to_json(self) -> dict:
        return {
            "e": self.e,
            "sigma": self.sigma,
            "c1sq": self.c1sq,
            "chi_h": self.chi_h,
            "b1": self.b1,
            "b2plus": self.b2plus,
            "b2minus": self.b2minus,
        }


@dataclass(frozen=True)
class BlockDescriptor:
    label: str
    tag: str
    complement: Presentation | None
    boundary_genus: int
    boundary_marking: tuple
    meridian: Word
    char: CharNumbers
    symplectic: bool
    sections: int = 0
    notes: tuple = ()
    recipe: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if len(self.boundary_marking) != 2 * self.boundary_genus:
            raise ValueError("boundary marking must have 2*genus words")
        if self.complement is not None:
            allowed = set(self.complement.generators)
            for w in (*self.boundary_marking, self.meridian):
                if not w.generators() <= allowed:
                    raise ValueError(f"{w} is not a word in the block alphabet")

    @property
    def presentation(self) -> Presentation:
        if self.complement is None:
            raise ValueError(f"{self.label} carries metadata only, no presentation")
        return self.complement


def _g(name: str) -> Word:
    return gen(name)


def _rel(lhs: Word, rhs: Word = IDENTITY) -> Word:
    """The relator for ``lhs = rhs``."""
    return lhs * invert(rhs)


def _h1_rank(P: Presentation) -> int:
    return abelianize(P).free_rank


# -- Lefschetz blocks ---------------------------------------------------------


def _fiber_names(n: int, k: int) -> tuple:
    names = tuple(x for i in range(1, 2 * k + 1) for x in (f"a{i}", f"b{i}"))
    return names + tuple(f"e{j}" for j in range(1, 2 * n - 1))


def _fiber_relator(n: int, k: int) -> Word:
    pairs = [(f"a{i}", f"b{i}") for i in range(1, 2 * k + 1)]
    pairs += [(f"e{2 * j - 1}", f"e{2 * j}") for j in range(1, n)]
    return commutator_product(pairs)


def _tail_commutators(k: int, i: int) -> Word:
    """``[a_(2k-i+1), b_(2k-i+1)] ... [a_2k, b_2k]``."""
    G = 2 * k
    return commutator_product((f"a{j}", f"b{j}") for j in range(G - i + 1, G + 1))


def _b_run(lo: int, hi: int) -> Word:
    return Word.product(_g(f"b{j}") for j in range(lo, hi + 1))


def lemma_relators(n: int, k: int) -> dict:
    """The consequences ``a_i a_(2k+1-i) = 1``, ``b1..b2k = 1``,
    ``b_(i+1)..b_(2k-i) = [a_(2k-i+1),b_(2k-i+1)]..[a_2k,b_2k]`` and ``e_j = 1``."""
    G = 2 * k
    out = {}
    for j in range(1, 2 * n - 1):
        out[f"e{j}"] = _g(f"e{j}")
    for i in range(1, k + 1):
        out[f"a{i}a{G + 1 - i}"] = _g(f"a{i}") * _g(f"a{G + 1 - i}")
    out["b1..b2k"] = _b_run(1, G)
    for i in range(1, k + 1):
        out[f"tail{i}"] = _rel(_b_run(i + 1, G - i), _tail_commutators(k, i))
    return out


def _lefschetz_block(n: int, k: int, relations: str) -> BlockDescriptor:
    if k < 1 or n < 1:
        raise ValueError("Y(n,k) needs n >= 1 and k >= 1")
    cat = curve_words(k, n)
    gens = _fiber_names(n, k)
    surface = _fiber_relator(n, k)
    if relations == "vanishing":
        rels = [surface] + [cat.B(i) for i in range(2 * k + 1)] + [cat.words["c"]]
        rels += [cat.words[f"e{j}"] for j in range(1, 2 * n - 1)]
    elif relations == "lemma":
        lem = lemma_relators(n, k)
        rels = [surface] + list(lem.values()) + [partial_commutator(k)]
    else:
        raise ValueError(f"unknown relation form {relations!r}")
    label = f"Y({k})" if n == 1 else f"Y({n},{k})"
    P = Presentation(gens, tuple(rels), label)
    g = 2 * k + n - 1
    notes = [Y_NK_CHAR_NOTE]
    if n >= 2:
        notes.append(E_LAST_NOTE)
    return BlockDescriptor(
        label=label,
        tag="Y",
        complement=P,
        boundary_genus=g,
        boundary_marking=tuple(_g(x) for x in gens),
        meridian=IDENTITY,
        char=CharNumbers.from_e_sigma(4 + 4 * n - 4 * k, -4 * n, b1=2 * k),
        symplectic=True,
        sections=4 * n,
        notes=tuple(notes),
        recipe={"block": "gurtas" if n > 1 else "korkmaz", "n": n, "k": k, "relations": relations},
    )


def build_korkmaz(k: int, relations: str = "vanishing") -> BlockDescriptor:
    """``Y(k) = Sigma_k x S^2 # 4 CP2bar`` with its genus ``2k`` fibration.

    ``relations="vanishing"`` uses the vanishing-cycle words ``B0..B2k, c``;
    ``relations="lemma"`` uses their derived consequences instead (an
    equivalent presentation, see :func:`lemma_derivations`).
    """
    if k < 1:
        raise ValueError("Y(k) needs k >= 1")
    return _lefschetz_block(1, k, relations)


def build_gurtas(n: int, k: int, relations: str = "vanishing") -> BlockDescriptor:
    """``Y(n,k) = Sigma_k x S^2 # 4n CP2bar`` with its genus ``2k+n-1`` fibration."""
    if n == 1:
        return build_korkmaz(k, relations)
    return _lefschetz_block(n, k, relations)


def build_hyperelliptic_metadata(g: int) -> BlockDescriptor:
    """``X(g,1) = CP2 # (4g+5) CP2bar``; characteristic numbers and section count only."""
    if g < 1:
        raise ValueError("genus must be >= 1")
    b2minus = 4 * g + 5
    e = 2 + 1 + b2minus
    sigma = 1 - b2minus
    return BlockDescriptor(
        label=f"X({g},1)",
        tag="X",
        complement=None,
        boundary_genus=g,
        boundary_marking=tuple(_g(x) for i in range(1, g + 1) for x in (f"a{i}", f"b{i}")),
        meridian=IDENTITY,
        char=CharNumbers.from_e_sigma(e, sigma, b1=0),
        symplectic=True,
        sections=4 * g + 4,
        recipe={"block": "hyperelliptic", "g": g},
    )


# -- Luttinger-surgered products ---------------------------------------------


def build_luttinger_family_A(n: int, p, q) -> BlockDescriptor:
    """``Y_n(1/p1, 1/q1, ..., 1/pn, 1/qn)``: ``2n+4`` Luttinger surgeries on ``Sigma_2 x Sigma_n``.

    Glued along the image of ``Sigma_n`` (marking ``c1, d1, ..., cn, dn``);
    the meridian is ``[a1,b1][a2,b2]``. A zero exponent collapses the
    corresponding power to the identity.
    """
    p, q = tuple(p), tuple(q)
    if n < 2:
        raise ValueError("family A needs n >= 2")
    if len(p) != n or len(q) != n:
        raise ValueError(f"family A needs {n} values of p and of q, got {len(p)} and {len(q)}")
    if any(x < 0 for x in p + q):
        raise ValueError("p and q must be non-negative")
    a1, a2, b1, b2 = (_g(x) for x in ("a1", "a2", "b1", "b2"))
    c = [None] + [_g(f"c{j}") for j in range(1, n + 1)]
    d = [None] + [_g(f"d{j}") for j in range(1, n + 1)]
    inv = invert
    rels = [
        _rel(commutator(inv(b1), inv(d[1])), a1),
        _rel(commutator(inv(a1), d[1]), b1),
        _rel(commutator(inv(b2), inv(d[2])), a2),
        _rel(commutator(inv(a2), d[2]), b2),
        _rel(commutator(inv(d[1]), inv(b2)), power(c[1], p[0])),
        _rel(commutator(inv(c[1]), b2), power(d[1], q[0])),
        _rel(commutator(inv(d[2]), inv(b1)), power(c[2], p[1])),
        _rel(commutator(inv(c[2]), b1), power(d[2], q[1])),
        commutator(a1, c[1]),
        commutator(a1, c[2]),
        commutator(a1, d[2]),
        commutator(b1, c[1]),
        commutator(a2, c[1]),
        commutator(a2, c[2]),
        commutator(a2, d[1]),
        commutator(b2, c[2]),
        commutator(a1, b1) * commutator(a2, b2),
        commutator_product((f"c{j}", f"d{j}") for j in range(1, n + 1)),
    ]
    for j in range(3, n + 1):
        rels.append(_rel(commutator(inv(a1), inv(d[j])), power(c[j], p[j - 1])))
        rels.append(_rel(commutator(inv(a2), inv(c[j])), power(d[j], q[j - 1])))
    for j in range(3, n + 1):
        rels.append(commutator(b1, c[j]))
        rels.append(commutator(b2, d[j]))
    gens = ("a1", "b1", "a2", "b2") + tuple(x for j in range(1, n + 1) for x in (f"c{j}", f"d{j}"))
    label = f"Y_{n}(p={list(p)}, q={list(q)})"
    P = Presentation(gens, tuple(rels), label)
    return BlockDescriptor(
        label=label,
        tag="L",
        complement=P,
        boundary_genus=n,
        boundary_marking=tuple(_g(x) for j in range(1, n + 1) for x in (f"c{j}", f"d{j}")),
        meridian=commutator(a1, b1) * commutator(a2, b2),
        char=CharNumbers.from_e_sigma(4 * n - 4, 0, b1=_h1_rank(P)),
        symplectic=True,
        recipe={"block": "familyA", "n": n, "p": list(p), "q": list(q)},
    )


def family_B_d_relator(n: int, m: int = 1, q: int = 1) -> Word:
    """``[c^-1, b_n]^-m = d^q`` as a relator."""
    return _rel(power(commutator(invert(_g("c")), _g(f"b{n}")), -m), power(_g("d"), q))


def build_luttinger_family_B(n: int, p: int = 1, m: int = 1, q: int = 1) -> BlockDescriptor:
    """``Y_n(1/p, m/q)``: ``2n`` torus surgeries on ``Sigma_n x T^2``.

    Glued along the image of ``Sigma_n`` (marking ``a1, b1, ..., an, bn``);
    the meridian is ``[c,d]``. Only ``m = 1`` is a Luttinger surgery
    throughout, so only then is the block flagged symplectic.
    """
    if n < 2:
        raise ValueError("family B needs n >= 2")
    if p < 1 or q < 1:
        raise ValueError("family B needs p >= 1 and q >= 1")
    if m == 0:
        raise ValueError("m = 0 is not a surgery of this family; see build_X0 for the 0/1 surgery")
    c, d = _g("c"), _g("d")
    a = [None] + [_g(f"a{i}") for i in range(1, n + 1)]
    b = [None] + [_g(f"b{i}") for i in range(1, n + 1)]
    rels = []
    for i in range(1, n):
        rels.append(_rel(commutator(invert(b[i]), invert(d)), a[i]))
        rels.append(_rel(commutator(invert(a[i]), d), b[i]))
    rels.append(_rel(commutator(invert(d), invert(b[n])), power(c, p)))
    rels.append(family_B_d_relator(n, m, q))
    for i in range(1, n):
        rels.append(commutator(a[i], c))
        rels.append(commutator(b[i], c))
    rels.append(commutator(a[n], c))
    rels.append(commutator(a[n], d))
    rels.append(partial_commutator(n))
    rels.append(commutator(c, d))
    gens = tuple(x for i in range(1, n + 1) for x in (f"a{i}", f"b{i}")) + ("c", "d")
    label = f"Y_{n}(1/{p}, {m}/{q})"
    P = Presentation(gens, tuple(rels), label)
    return BlockDescriptor(
        label=label,
        tag="L",
        complement=P,
        boundary_genus=n,
        boundary_marking=tuple(_g(x) for i in range(1, n + 1) for x in (f"a{i}", f"b{i}")),
        meridian=commutator(c, d),
        char=CharNumbers.from_e_sigma(0, 0, b1=_h1_rank(P)),
        symplectic=(m == 1),
        recipe={"block": "familyB", "n": n, "p": p, "m": m, "q": q},
    )


# -- certified relations ------------------------------------------------------


def lemma_derivations(block: BlockDescriptor) -> dict:
    """Certificates, read off the standard substitution chain, that each
    relation of :func:`lemma_relators` holds in the vanishing-cycle
    presentation of ``Y(n,k)``.

    ``a1 a2k`` comes from ``B0``, ``B1`` and ``c_2k = 1``; each later
    ``a_i a_(2k+1-i)`` from ``B_(2i-2)``, ``B_(2i-1)`` and the previous one;
    each commutator tail from ``B_2i`` and ``a_i a_(2k+1-i)``.
    """
    rec = block.recipe
    if rec.get("relations") != "vanishing":
        raise ValueError("lemma derivations need the vanishing-cycle presentation")
    n, k = rec["n"], rec["k"]
    P = block.complement
    G = 2 * k
    cat = curve_words(k, n)
    idx = {}
    # relator order: surface, B0..B2k, c, e1..e(2n-2)
    for i in range(G + 1):
        idx[f"B{i}"] = 1 + i
    idx["c"] = G + 2
    for j in range(1, 2 * n - 1):
        idx[f"e{j}"] = G + 2 + j

    def R(name, sign=1):
        return Derivation.relator(P, idx[name], sign)

    a = lambda i: _g(f"a{i}")  # noqa: E731
    c = partial_commutator

    # c_2k from the fiber relator with the e-commutators stripped off
    cG = Derivation.relator(P, 0)
    for j in range(n - 1, 0, -1):
        e1, e2 = R(f"e{2 * j - 1}"), R(f"e{2 * j}")
        comm = e1 * e2 * e1.inverse() * e2.inverse()
        cG = cG * comm.inverse()
    assert cG.word == c(G)

    out = {}
    for j in range(1, 2 * n - 1):
        out[f"e{j}"] = R(f"e{j}")

    def middle(prev, i_prev, B_name):
        # B = a_ip * M * a_(G+1-ip) and a_ip a_(G+1-ip) = 1  =>  M = 1
        return R(B_name).conjugate(invert(a(i_prev))) * prev.conjugate(invert(a(i_prev))).inverse()

    # a1 a_G
    M1 = R("B0") * cG
    aa = {1: M1.inverse().conjugate(a(1)) * R("B1")}
    for i in range(2, k + 1):
        M = middle(aa[i - 1], i - 1, f"B{2 * i - 2}")
        aa[i] = M.inverse().conjugate(a(i)) * R(f"B{2 * i - 1}")
    for i in range(1, k + 1):
        out[f"a{i}a{G + 1 - i}"] = aa[i]
    out["b1..b2k"] = R("B0")
    for i in range(1, k + 1):
        Yc = middle(aa[i], i, f"B{2 * i}")
        # Y * tail^-1 = (Y c_(G-i)) * (tail c_(G-i))^-1 and tail c_(G-i) ~ c_G
        out[f"tail{i}"] = Yc * cG.conjugate(invert(c(G - i))).inverse()
    expected = lemma_relators(n, k)
    for name, der in out.items():
        assert der.word == expected[name], name
    return out


__all__ = [
    "BlockDescriptor",
    "CharNumbers",
    "build_gurtas",
    "build_hyperelliptic_metadata",
    "build_korkmaz",
    "build_luttinger_family_A",
    "build_luttinger_family_B",
    "family_B_d_relator",
    "lemma_derivations",
    "lemma_relators",
]
