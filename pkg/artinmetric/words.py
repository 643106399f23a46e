"""Alphabets, words, parsing/formatting and free reduction for both presentations.

Artin words are strings over {a, b, A, B} (uppercase = inverse).  Dual words
are whitespace-separated tokens ``s<i>`` / ``S<i>`` with 1 <= i <= k.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Union

ARTIN = "artin"
DUAL = "dual"
ALPHABETS = (ARTIN, DUAL)

_DUAL_TOKEN = re.compile(r"\S+")
_DUAL_LETTER = re.compile(r"([sS])([0-9]+)")


class DomainError(Exception):
    """Base class for every error raised by artinmetric operations."""


class WordParseError(DomainError):
    """Raised when word text does not conform to the alphabet grammar."""

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True, slots=True)
class GroupParams:
    """Parameters of the dihedral Artin group A_k."""

    k: int

    def __post_init__(self) -> None:
        if self.k < 3:
            raise DomainError(f"k must be at least 3, got {self.k}")


# ── Letters ───────────────────────────────────────────────────────────────────

@dataclass(frozen=True, slots=True)
class ArtinLetter:
    base: str   # "a" | "b"
    sign: int   # +1 | -1

    def __post_init__(self) -> None:
        if self.base not in ("a", "b") or self.sign not in (1, -1):
            raise ValueError(f"bad Artin letter {self.base!r}/{self.sign}")

    @property
    def positive(self) -> bool:
        return self.sign > 0

    def inverse(self) -> ArtinLetter:
        return ArtinLetter(self.base, -self.sign)

    def __str__(self) -> str:
        return self.base if self.sign > 0 else self.base.upper()


@dataclass(frozen=True, slots=True)
class DualLetter:
    index: int  # 1..k
    sign: int   # +1 | -1

    def __post_init__(self) -> None:
        if self.index < 1 or self.sign not in (1, -1):
            raise ValueError(f"bad dual letter {self.index}/{self.sign}")

    @property
    def positive(self) -> bool:
        return self.sign > 0

    def inverse(self) -> DualLetter:
        return DualLetter(self.index, -self.sign)

    def __str__(self) -> str:
        return f"{'s' if self.sign > 0 else 'S'}{self.index}"


Letter = Union[ArtinLetter, DualLetter]

A = ArtinLetter("a", 1)
B = ArtinLetter("b", 1)
A_INV = ArtinLetter("a", -1)
B_INV = ArtinLetter("b", -1)


def other_base(base: str) -> str:
    return "b" if base == "a" else "a"


def succ(index: int, k: int) -> int:
    """Cyclic successor on 1..k; sigma_i sigma_succ(i) is delta."""
    return index % k + 1


def shift_index(index: int, offset: int, k: int) -> int:
    return (index - 1 + offset) % k + 1


# ── Words ─────────────────────────────────────────────────────────────────────

@dataclass(frozen=True, slots=True)
class Word:
    """An immutable word over one of the two alphabets."""

    alphabet: str
    letters: tuple[Letter, ...] = ()

    def __post_init__(self) -> None:
        if self.alphabet not in ALPHABETS:
            raise ValueError(f"unknown alphabet {self.alphabet!r}")
        kind = ArtinLetter if self.alphabet == ARTIN else DualLetter
        for letter in self.letters:
            if not isinstance(letter, kind):
                raise ValueError(f"letter {letter!r} does not belong to the {self.alphabet} alphabet")

    @classmethod
    def of(cls, alphabet: str, letters: Iterable[Letter]) -> Word:
        return cls(alphabet, tuple(letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __getitem__(self, item: int | slice):
        if isinstance(item, slice):
            return Word(self.alphabet, self.letters[item])
        return self.letters[item]

    def __add__(self, other: Word) -> Word:
        if other.alphabet != self.alphabet:
            raise ValueError("cannot concatenate words over different alphabets")
        return Word(self.alphabet, self.letters + other.letters)

    def __mul__(self, times: int) -> Word:
        return Word(self.alphabet, self.letters * times)

    def __str__(self) -> str:
        return format_word(self)


def artin_word(letters: Iterable[ArtinLetter] = ()) -> Word:
    return Word(ARTIN, tuple(letters))


def dual_word(letters: Iterable[DualLetter] = ()) -> Word:
    return Word(DUAL, tuple(letters))


def parse_word(text: str, alphabet: str, params: GroupParams) -> Word:
    """Parse *text* in the grammar of *alphabet*.

    Raises:
        WordParseError: on an unknown symbol or a dual index outside 1..k.
    """
    if alphabet == ARTIN:
        letters: list[Letter] = []
        for pos, ch in enumerate(text):
            if ch in "ab":
                letters.append(ArtinLetter(ch, 1))
            elif ch in "AB":
                letters.append(ArtinLetter(ch.lower(), -1))
            elif ch.isspace():
                continue
            else:
                raise WordParseError(f"unexpected symbol {ch!r} in Artin word", pos)
        return Word(ARTIN, tuple(letters))

    if alphabet == DUAL:
        letters = []
        for match in _DUAL_TOKEN.finditer(text):
            token = match.group(0)
            m = _DUAL_LETTER.fullmatch(token)
            if m is None:
                raise WordParseError(f"unexpected token {token!r} in dual word", match.start())
            index = int(m.group(2))
            if not 1 <= index <= params.k:
                raise WordParseError(
                    f"dual index {index} out of range 1..{params.k}", match.start()
                )
            letters.append(DualLetter(index, 1 if m.group(1) == "s" else -1))
        return Word(DUAL, tuple(letters))

    raise ValueError(f"unknown alphabet {alphabet!r}")


def format_word(w: Word) -> str:
    """Inverse of parse_word: Artin letters are concatenated, dual tokens space-separated."""
    sep = "" if w.alphabet == ARTIN else " "
    return sep.join(str(letter) for letter in w.letters)


def free_reduce(w: Word) -> Word:
    """Cancel adjacent mutually inverse letters (single stack pass)."""
    stack: list[Letter] = []
    for letter in w.letters:
        if stack and stack[-1] == letter.inverse():
            stack.pop()
        else:
            stack.append(letter)
    return Word(w.alphabet, tuple(stack))


def is_freely_reduced(w: Word) -> bool:
    return all(w.letters[i + 1] != w.letters[i].inverse() for i in range(len(w) - 1))


def invert_word(w: Word) -> Word:
    return Word(w.alphabet, tuple(letter.inverse() for letter in reversed(w.letters)))


def prodd(x: ArtinLetter | str, y: ArtinLetter | str, n: int) -> Word:
    """The alternating Artin word x y x y ... with n letters."""
    if n < 0:
        raise ValueError("prodd needs n >= 0")
    x = _as_letter(x)
    y = _as_letter(y)
    return Word(ARTIN, tuple(x if i % 2 == 0 else y for i in range(n)))


def _as_letter(x: ArtinLetter | str) -> ArtinLetter:
    if isinstance(x, ArtinLetter):
        return x
    if x in ("a", "b"):
        return ArtinLetter(x, 1)
    if x in ("A", "B"):
        return ArtinLetter(x.lower(), -1)
    raise ValueError(f"not an Artin letter: {x!r}")


def exponent_sum(w: Word) -> int:
    return sum(letter.sign for letter in w.letters)


def generators(alphabet: str, params: GroupParams) -> tuple[Letter, ...]:
    """Generators and their inverses in the fixed order used for shortlex."""
    if alphabet == ARTIN:
        return (A, B, A_INV, B_INV)
    pos = tuple(DualLetter(i, 1) for i in range(1, params.k + 1))
    return pos + tuple(letter.inverse() for letter in pos)


def freely_reduced_words(alphabet: str, params: GroupParams, length: int) -> Iterator[Word]:
    """Yield every freely reduced word of exactly *length* letters, in shortlex order."""
    gens = generators(alphabet, params)

    def _extend(prefix: tuple[Letter, ...]) -> Iterator[tuple[Letter, ...]]:
        if len(prefix) == length:
            yield prefix
            return
        for g in gens:
            if prefix and prefix[-1] == g.inverse():
                continue
            yield from _extend(prefix + (g,))

    for letters in _extend(()):
        yield Word(alphabet, letters)
