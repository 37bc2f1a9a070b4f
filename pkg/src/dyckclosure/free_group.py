"""The rank-n free group and the homomorphism from the 2n-letter free monoid onto it.

Opener ``i`` maps to the generator ``x_i`` and closer ``i`` to its inverse.
Group words are kept freely reduced at all times, so the identity test is a
length check.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .words import Word

GENERATOR_SYMBOLS = "xyzwvutsrqponmlkjihgfedcba"


def _reduce(entries: Iterable[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    out: list[tuple[int, int]] = []
    for gen, sign in entries:
        if out and out[-1][0] == gen and out[-1][1] == -sign:
            out.pop()
        else:
            out.append((gen, sign))
    return tuple(out)


@dataclass(frozen=True)
class GroupWord:
    """A freely reduced word of (generator index, sign) entries."""

    entries: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        for gen, sign in self.entries:
            if gen < 0 or sign not in (1, -1):
                raise ValueError(f"bad entry {(gen, sign)}")
        object.__setattr__(self, "entries", _reduce(self.entries))

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __mul__(self, other: GroupWord) -> GroupWord:
        return free_multiply(self, other)

    def inverse(self) -> GroupWord:
        return GroupWord(tuple((g, -s) for g, s in reversed(self.entries)))

    @property
    def is_identity(self) -> bool:
        return not self.entries

    def __str__(self) -> str:
        return "".join(
            GENERATOR_SYMBOLS[g] if s > 0 else GENERATOR_SYMBOLS[g].upper() for g, s in self.entries
        )

    @classmethod
    def parse(cls, text: str) -> GroupWord:
        entries = []
        for ch in text.strip():
            idx = GENERATOR_SYMBOLS.find(ch.lower())
            if idx < 0:
                raise ValueError(f"unknown generator symbol {ch!r}")
            entries.append((idx, 1 if ch.islower() else -1))
        return cls(tuple(entries))


def _trusted(entries: tuple[tuple[int, int], ...]) -> GroupWord:
    """Wrap entries already known to be valid and reduced."""
    gw = object.__new__(GroupWord)
    object.__setattr__(gw, "entries", entries)
    return gw


_SIGNED = [(i >> 1, -1 if i & 1 else 1) for i in range(52)]


def phi(w: Word) -> GroupWord:
    out: list[tuple[int, int]] = []
    for x in w.letters:
        if out and out[-1] == _SIGNED[x ^ 1]:
            out.pop()
        else:
            out.append(_SIGNED[x])
    return _trusted(tuple(out))


def free_multiply(u: GroupWord, v: GroupWord) -> GroupWord:
    return _trusted(_reduce(u.entries + v.entries))


def kernel_member(w: Word) -> bool:
    return phi(w).is_identity
