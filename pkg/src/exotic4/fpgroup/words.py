"""Words in a free group on named generators."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Mapping, Tuple

Letter = Tuple[str, int]


class AlphabetError(ValueError):
    """A word uses a generator outside the expected alphabet."""


@dataclass(frozen=True)
class Word:
    """An ordered sequence of signed generator letters.

    Words are not reduced on construction; every operation below that
    builds a new word (``*``, ``**``, :func:`multiply`, ...) returns the
    freely reduced result.
    """

    letters: Tuple[Letter, ...] = ()

    def __post_init__(self):
        for name, sign in self.letters:
            if sign not in (1, -1):
                raise ValueError(f"letter sign must be +1 or -1, got {sign!r} for {name!r}")

    @classmethod
    def gen(cls, name: str, power: int = 1) -> "Word":
        sign = 1 if power >= 0 else -1
        return cls(((name, sign),) * abs(power))

    @classmethod
    def product(cls, words: Iterable["Word"]) -> "Word":
        out: list[Letter] = []
        for w in words:
            _push_all(out, w.letters)
        return cls(tuple(out))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return multiply(self, other)

    def __pow__(self, k: int) -> "Word":
        return power(self, k)

    def inverse(self) -> "Word":
        return invert(self)

    def generators(self) -> frozenset:
        return frozenset(name for name, _ in self.letters)

    def exponent_sum(self, name: str) -> int:
        return sum(s for g, s in self.letters if g == name)

    def __str__(self) -> str:
        return format_word(self)

    def __repr__(self) -> str:
        return f"Word({format_word(self)!r})"


IDENTITY = Word()


def _push_all(out: list, letters: Iterable[Letter]) -> None:
    for letter in letters:
        if out and out[-1][0] == letter[0] and out[-1][1] == -letter[1]:
            out.pop()
        else:
            out.append(letter)


def reduce(w: Word) -> Word:
    """Freely reduce ``w``."""
    out: list[Letter] = []
    _push_all(out, w.letters)
    if len(out) == len(w.letters):
        return w
    return Word(tuple(out))


def is_reduced(w: Word) -> bool:
    return all(
        not (x[0] == y[0] and x[1] == -y[1]) for x, y in zip(w.letters, w.letters[1:])
    )


def cyclic_reduce(w: Word) -> Word:
    letters = reduce(w).letters
    i, j = 0, len(letters) - 1
    while i < j and letters[i][0] == letters[j][0] and letters[i][1] == -letters[j][1]:
        i += 1
        j -= 1
    return Word(letters[i : j + 1])


def _check_alphabet(alphabet, *words: Word) -> None:
    if alphabet is None:
        return
    allowed = set(alphabet)
    for w in words:
        extra = w.generators() - allowed
        if extra:
            raise AlphabetError(f"generators {sorted(extra)} not in alphabet")


def multiply(u: Word, v: Word, alphabet=None) -> Word:
    _check_alphabet(alphabet, u, v)
    out: list[Letter] = list(reduce(u).letters)
    _push_all(out, v.letters)
    return Word(tuple(out))


def invert(w: Word) -> Word:
    return Word(tuple((name, -sign) for name, sign in reversed(w.letters)))


def power(w: Word, k: int) -> Word:
    """``w**k``; ``k = 0`` gives the identity."""
    if k == 0:
        return IDENTITY
    base = reduce(w) if k > 0 else invert(reduce(w))
    return Word.product([base] * abs(k))


def commutator(u: Word, v: Word, alphabet=None) -> Word:
    """``[u, v] = u v u^-1 v^-1``."""
    _check_alphabet(alphabet, u, v)
    return Word.product([u, v, invert(u), invert(v)])


def conjugate(w: Word, by: Word) -> Word:
    """``by * w * by^-1``."""
    return Word.product([by, w, invert(by)])


def map_word(w: Word, images: Mapping[str, Word] | Callable[[str], Word]) -> Word:
    """Apply the homomorphism sending each generator to ``images[name]``."""
    lookup = images if callable(images) else images.__getitem__
    out: list[Letter] = []
    for name, sign in w.letters:
        try:
            img = lookup(name)
        except KeyError:
            raise AlphabetError(f"no image given for generator {name!r}") from None
        _push_all(out, img.letters if sign > 0 else invert(img).letters)
    return Word(tuple(out))


def rename(w: Word, names: Mapping[str, str]) -> Word:
    return Word(tuple((names.get(g, g), s) for g, s in w.letters))


def exponent_vector(w: Word, generators) -> list[int]:
    index = {g: i for i, g in enumerate(generators)}
    vec = [0] * len(index)
    for name, sign in w.letters:
        vec[index[name]] += sign
    return vec


def format_word(w: Word) -> str:
    """Render in the ``a*b^-1*c^3`` grammar; the identity prints as ``1``."""
    if not w.letters:
        return "1"
    parts = []
    i = 0
    letters = w.letters
    while i < len(letters):
        name, sign = letters[i]
        j = i
        while j < len(letters) and letters[j] == (name, sign):
            j += 1
        exp = sign * (j - i)
        parts.append(name if exp == 1 else f"{name}^{exp}")
        i = j
    return "*".join(parts)
