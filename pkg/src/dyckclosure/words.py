"""Paired alphabets, words of the free monoid, text I/O and enumeration.

Letters are small integers. Pair ``i`` owns letter ``2*i`` (its opener) and
``2*i + 1`` (its closer), so lexicographic letter-index order reads
``a < A < b < B < ...`` in the default display.
"""
from __future__ import annotations

import itertools
import string
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import ResourceBound, UnknownSymbol

DEFAULT_CAP = 10**8

LETTER = "letter"
BRACKET = "bracket"
MODES = (LETTER, BRACKET)

_BRACKETS = ("()", "[]", "{}")


def opener(pair: int) -> int:
    return 2 * pair


def closer(pair: int) -> int:
    return 2 * pair + 1


def pair_of(letter: int) -> int:
    return letter >> 1


def is_opener(letter: int) -> bool:
    return not letter & 1


def partner(letter: int) -> int:
    """The formal inverse of ``letter`` (opener <-> closer of the same pair)."""
    return letter ^ 1


@dataclass(frozen=True)
class PairedAlphabet:
    pair_count: int = 2

    def __post_init__(self):
        if not 1 <= self.pair_count <= 26:
            raise ValueError(f"pair_count must be in 1..26, got {self.pair_count}")

    @property
    def size(self) -> int:
        return 2 * self.pair_count

    @property
    def letters(self) -> range:
        return range(self.size)

    def symbol(self, letter: int, mode: str = LETTER) -> str:
        pair = pair_of(letter)
        if mode == BRACKET:
            self._check_bracket()
            return _BRACKETS[pair][letter & 1]
        ch = string.ascii_lowercase[pair]
        return ch if is_opener(letter) else ch.upper()

    def display_map(self, mode: str = LETTER) -> dict[str, int]:
        return {self.symbol(x, mode): x for x in self.letters}

    def _check_bracket(self) -> None:
        if self.pair_count > len(_BRACKETS):
            raise ValueError("bracket mode supports at most 3 pairs")


@dataclass(frozen=True, slots=True)
class Word:
    """An element of the free monoid over ``alphabet``."""

    alphabet: PairedAlphabet
    letters: tuple[int, ...] = ()

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, idx):
        if isinstance(idx, slice):
            return Word(self.alphabet, self.letters[idx])
        return self.letters[idx]

    def __add__(self, other: Word) -> Word:
        return Word(self.alphabet, self.letters + other.letters)

    def __str__(self) -> str:
        return format_word(self)

    @classmethod
    def of(cls, letters: Sequence[int], alphabet: PairedAlphabet | None = None) -> Word:
        alphabet = alphabet or PairedAlphabet()
        letters = tuple(letters)
        for x in letters:
            if not 0 <= x < alphabet.size:
                raise ValueError(f"letter {x} outside alphabet of {alphabet.pair_count} pairs")
        return cls(alphabet, letters)


def parse_word(text: str, alphabet: PairedAlphabet | None = None, mode: str = LETTER) -> Word:
    """Parse ``text`` into a word; whitespace is ignored.

    ``UnknownSymbol.position`` is the index of the offending character in ``text``.
    """
    alphabet = alphabet or PairedAlphabet()
    table = alphabet.display_map(mode)
    letters = []
    for pos, ch in enumerate(text):
        if ch.isspace():
            continue
        try:
            letters.append(table[ch])
        except KeyError:
            raise UnknownSymbol(pos, ch) from None
    return Word(alphabet, tuple(letters))


def format_word(w: Word, mode: str = LETTER) -> str:
    alphabet = w.alphabet
    return "".join(alphabet.symbol(x, mode) for x in w.letters)


def check_cap(count: int, cap: int = DEFAULT_CAP) -> None:
    if count > cap:
        raise ResourceBound(f"enumeration of {count} words exceeds cap {cap}")


def enumerate_words(alphabet: PairedAlphabet, length: int, cap: int = DEFAULT_CAP) -> Iterator[Word]:
    """All words of exactly ``length`` letters in lexicographic letter-index order."""
    if length < 0:
        raise ValueError("length must be non-negative")
    check_cap(alphabet.size**length, cap)
    return (Word(alphabet, letters) for letters in itertools.product(alphabet.letters, repeat=length))
