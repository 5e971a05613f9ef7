"""Finite witnesses that a word lies in the normal closure of the relators.

A certificate is a list of steps ``(i, u, s)``; it proves ``target = 1`` when
the product of the ``u * r_i^s * u^-1`` freely reduces to ``target``.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .presentation import Presentation
from .words import IDENTITY, Word, cyclic_reduce, exponent_vector, invert, reduce


@dataclass(frozen=True)
class CertStep:
    relator: int
    conjugator: Word
    sign: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")


@dataclass(frozen=True)
class ConsequenceCertificate:
    steps: tuple = ()

    def __len__(self) -> int:
        return len(self.steps)

    def flip_sign(self, i: int) -> "ConsequenceCertificate":
        s = self.steps[i]
        steps = list(self.steps)
        steps[i] = CertStep(s.relator, s.conjugator, -s.sign)
        return ConsequenceCertificate(tuple(steps))

    def to_json(self) -> list:
        return [[s.relator, str(s.conjugator), s.sign] for s in self.steps]


def certificate_product(P: Presentation, cert: ConsequenceCertificate) -> Word:
    parts = []
    for step in cert.steps:
        if not 0 <= step.relator < len(P.relators):
            raise IndexError(f"relator index {step.relator} out of range")
        r = P.relators[step.relator]
        parts += [step.conjugator, r if step.sign > 0 else invert(r), invert(step.conjugator)]
    return Word.product(parts)


def verify_certificate(P: Presentation, target: Word, cert: ConsequenceCertificate) -> bool:
    """True iff ``cert`` witnesses ``target = 1`` in ``P``.

    Raises IndexError for a step naming a nonexistent relator.
    """
    for step in cert.steps:
        if not 0 <= step.relator < len(P.relators):
            raise IndexError(f"relator index {step.relator} out of range")
    allowed = set(P.generators)
    if not target.generators() <= allowed:
        return False
    if any(not s.conjugator.generators() <= allowed for s in cert.steps):
        return False
    # exponent sums must already agree before any free reduction is attempted
    expected = exponent_vector(target, P.generators)
    got = [0] * P.rank
    for step in cert.steps:
        for i, v in enumerate(exponent_vector(P.relators[step.relator], P.generators)):
            got[i] += step.sign * v
    if got != expected:
        return False
    return certificate_product(P, cert) == reduce(target)


@dataclass(frozen=True)
class Derivation:
    """A word together with a certificate that it is trivial.

    Closed under products, inverses and conjugation, which is how a
    chain of hand substitutions is transcribed into a certificate.
    """

    word: Word
    steps: tuple = ()

    @classmethod
    def relator(cls, P: Presentation, i: int, sign: int = 1) -> "Derivation":
        r = P.relators[i]
        return cls(r if sign > 0 else invert(r), (CertStep(i, IDENTITY, sign),))

    @classmethod
    def of_word(cls, P: Presentation, word: Word) -> "Derivation":
        """Derive ``word`` when it is a conjugate of a relator or its inverse."""
        word = reduce(word)
        core = cyclic_reduce(word)
        k = (len(word) - len(core)) // 2
        outer = Word(word.letters[:k])
        for i, r in enumerate(P.relators):
            if len(r) != len(core):
                continue
            for sign, rs in ((1, r), (-1, invert(r))):
                for j in range(len(rs)):
                    if rs.letters[j:] + rs.letters[:j] == core.letters:
                        # core = p^-1 rs p with p = rs[:j]
                        u = reduce(outer * invert(Word(rs.letters[:j])))
                        return cls(word, (CertStep(i, u, sign),))
        raise ValueError(f"{word} is not a conjugate of a relator")

    def __mul__(self, other: "Derivation") -> "Derivation":
        return Derivation(self.word * other.word, self.steps + other.steps)

    def inverse(self) -> "Derivation":
        return Derivation(
            invert(self.word),
            tuple(CertStep(s.relator, s.conjugator, -s.sign) for s in reversed(self.steps)),
        )

    def conjugate(self, by: Word) -> "Derivation":
        return Derivation(
            reduce(by * self.word * invert(by)),
            tuple(CertStep(s.relator, reduce(by * s.conjugator), s.sign) for s in self.steps),
        )

    @property
    def certificate(self) -> ConsequenceCertificate:
        return ConsequenceCertificate(self.steps)


def derive_product(P: Presentation, words) -> Derivation:
    """Derivation of the product of ``words``, each a conjugate of a relator."""
    out = Derivation(IDENTITY)
    for w in words:
        out = out * Derivation.of_word(P, w)
    return out


def _inv(code):
    return tuple(-x for x in reversed(code))


def _free_reduce(code) -> tuple:
    out: list = []
    for x in code:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def search_certificate(
    P: Presentation,
    target: Word,
    max_steps: int,
    max_conjugator_length: int,
    max_nodes: int = 20_000,
) -> ConsequenceCertificate | None:
    """Bounded best-first search for a certificate; ``None`` is inconclusive.

    The residual ``w`` (with ``target = (steps so far) * w``) is rewritten by
    replacing a subword ``v`` of ``w`` that starts a cyclic rotation
    ``v*t`` of a relator (or inverse) with ``t^-1``; shorter residuals are
    explored first.
    """
    if max_steps < 1 or max_conjugator_length < 1:
        raise ValueError("search bounds must be >= 1")
    start = tuple(P.encode_word(reduce(target)))
    if not start:
        return ConsequenceCertificate()
    rules: dict = {}
    for i, r in enumerate(P.encode()):
        for sign, rs in ((1, tuple(r)), (-1, _inv(r))):
            for j in range(len(rs)):
                rot = rs[j:] + rs[:j]
                rules.setdefault(rot[0], []).append((i, sign, rs[:j], rot))
    counter = 0
    heap = [(len(start), 0, counter, start, ())]
    best_depth = {start: 0}
    expanded = 0
    while heap and expanded < max_nodes:
        _, depth, _, w, steps = heapq.heappop(heap)
        if best_depth.get(w, depth) < depth:
            continue
        expanded += 1
        if depth >= max_steps:
            continue
        for pos in range(len(w)):
            x = w[:pos]
            for i, sign, prefix, rot in rules.get(w[pos], ()):
                m = 1
                limit = min(len(rot), len(w) - pos)
                while m < limit and w[pos + m] == rot[m]:
                    m += 1
                u = _free_reduce(x + _inv(prefix))
                if len(u) > max_conjugator_length:
                    continue
                nxt = _free_reduce(x + _inv(rot[m:]) + w[pos + m :])
                new_steps = steps + ((i, u, sign),)
                if not nxt:
                    cert = ConsequenceCertificate(
                        tuple(CertStep(ri, P.decode_word(uc), s) for ri, uc, s in new_steps)
                    )
                    assert verify_certificate(P, target, cert)
                    return cert
                if best_depth.get(nxt, max_steps + 1) <= depth + 1:
                    continue
                best_depth[nxt] = depth + 1
                counter += 1
                heapq.heappush(heap, (len(nxt), depth + 1, counter, nxt, new_steps))
    return None
