"""Finite quotients of the free group F as permutation assignments.

Every letter of the alphabet (openers and closers alike) gets its own
permutation of ``0..k-1``; a word evaluates to the product of its letter
images with the leftmost letter applied first, i.e. a point ``p`` is sent to
``image[w[-1]][ ... image[w[0]][p] ... ]``.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import reduce
from typing import Sequence

import numpy as np

from .errors import FormatError
from .words import PairedAlphabet, Word, closer, opener


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"{images} is not a permutation")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, degree: int, *cycles: Sequence[int]) -> Permutation:
        images = list(range(degree))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                images[a] = b
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def then(self, other: Permutation) -> Permutation:
        """Apply ``self`` first, then ``other``."""
        o = other.images
        return Permutation(tuple(o[i] for i in self.images))

    __mul__ = then

    def inverse(self) -> Permutation:
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    def __pow__(self, exponent: int) -> Permutation:
        if exponent < 0:
            return self.inverse() ** -exponent
        result = Permutation.identity(self.degree)
        base = self
        while exponent:
            if exponent & 1:
                result = result.then(base)
            base = base.then(base)
            exponent >>= 1
        return result

    @property
    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = []
            p = start
            while not seen[p]:
                seen[p] = True
                cyc.append(p)
                p = self.images[p]
            out.append(tuple(cyc))
        return out

    def __str__(self) -> str:
        cycs = [c for c in self.cycles() if len(c) > 1]
        if not cycs:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycs)


def permutation_order(p: Permutation) -> int:
    return reduce(math.lcm, (len(c) for c in p.cycles()), 1)


@dataclass(frozen=True)
class FiniteQuotient:
    """A homomorphism from F to Sym(degree), one image per letter."""

    alphabet: PairedAlphabet
    images: tuple[Permutation, ...]

    def __post_init__(self):
        if len(self.images) != self.alphabet.size:
            raise ValueError(f"need {self.alphabet.size} images, got {len(self.images)}")
        degrees = {p.degree for p in self.images}
        if len(degrees) != 1 or min(degrees) < 1:
            raise ValueError("all images must share one positive degree")

    @property
    def degree(self) -> int:
        return self.images[0].degree

    def image(self, letter: int) -> Permutation:
        return self.images[letter]

    def to_text(self) -> str:
        lines = [f"degree {self.degree}", f"pairs {self.alphabet.pair_count}"]
        for x in self.alphabet.letters:
            lines.append(f"{self.alphabet.symbol(x)}: " + " ".join(map(str, self.images[x].images)))
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {
            "degree": self.degree,
            "pairs": self.alphabet.pair_count,
            "images": {self.alphabet.symbol(x): list(self.images[x].images) for x in self.alphabet.letters},
        }

    @classmethod
    def from_text(cls, text: str) -> FiniteQuotient:
        quotient, _ = parse_quotient_lines(text.splitlines())
        return quotient


def parse_quotient_lines(lines: list[str]) -> tuple[FiniteQuotient, list[str]]:
    """Parse the quotient header and letter lines; return the unparsed trailer."""
    lines = [ln for ln in lines if ln.strip()]
    try:
        key, k = lines[0].split()
        if key != "degree":
            raise FormatError("line 1 must be 'degree K'")
        key, n = lines[1].split()
        if key != "pairs":
            raise FormatError("line 2 must be 'pairs N'")
        degree, pairs = int(k), int(n)
    except (IndexError, ValueError) as exc:
        raise FormatError(f"bad quotient header: {exc}") from None
    alphabet = PairedAlphabet(pairs)
    images = []
    body = lines[2 : 2 + alphabet.size]
    if len(body) != alphabet.size:
        raise FormatError(f"expected {alphabet.size} letter lines, got {len(body)}")
    for x, line in zip(alphabet.letters, body):
        sym, _, rest = line.partition(":")
        if sym.strip() != alphabet.symbol(x):
            raise FormatError(f"expected letter {alphabet.symbol(x)!r}, got {sym.strip()!r}")
        try:
            perm = Permutation(tuple(int(t) for t in rest.split()))
        except ValueError as exc:
            raise FormatError(str(exc)) from None
        if perm.degree != degree:
            raise FormatError(f"image of {sym.strip()} has degree {perm.degree}, expected {degree}")
        images.append(perm)
    return FiniteQuotient(alphabet, tuple(images)), lines[2 + alphabet.size :]


def evaluate(q: FiniteQuotient, w: Word) -> Permutation:
    state = list(range(q.degree))
    tables = [p.images for p in q.images]
    for x in w.letters:
        t = tables[x]
        state = [t[i] for i in state]
    return Permutation(tuple(state))


def evaluate_many(q: FiniteQuotient, words: Sequence[Word]) -> np.ndarray:
    """Evaluate a batch of words at once; row ``r`` is the image list of ``words[r]``.

    Shorter words are padded with an extra identity letter.
    """
    k = q.degree
    if not words:
        return np.empty((0, k), dtype=np.int64)
    pad = q.alphabet.size
    width = max(len(w) for w in words)
    letters = np.full((len(words), width), pad, dtype=np.int64)
    for r, w in enumerate(words):
        letters[r, : len(w)] = w.letters
    table = np.array([p.images for p in q.images] + [list(range(k))], dtype=np.int64)
    state = np.tile(np.arange(k), (len(words), 1))
    for t in range(width):
        state = table[letters[:, t][:, None], state]
    return state


def letter_order(q: FiniteQuotient, letter: int) -> int:
    return permutation_order(q.image(letter))


def pair_exponent(q: FiniteQuotient, pair_index: int) -> int:
    return math.lcm(letter_order(q, opener(pair_index)), letter_order(q, closer(pair_index)))


def fisher_yates(rng: random.Random, k: int) -> Permutation:
    items = list(range(k))
    for i in range(k - 1, 0, -1):
        j = rng.randrange(i + 1)
        items[i], items[j] = items[j], items[i]
    return Permutation(tuple(items))


def random_quotient(alphabet: PairedAlphabet, degree: int, seed: int) -> FiniteQuotient:
    """Uniform random images, one Fisher-Yates shuffle per letter in order a, A, b, B, ...

    The random source is ``random.Random(seed)`` (MT19937) and each swap index is
    drawn with ``randrange(i + 1)`` for ``i = k-1 .. 1``.
    """
    if degree < 1:
        raise ValueError("degree must be at least 1")
    rng = random.Random(seed)
    return FiniteQuotient(alphabet, tuple(fisher_yates(rng, degree) for _ in alphabet.letters))


def constant_quotient(alphabet: PairedAlphabet, perm: Permutation) -> FiniteQuotient:
    return FiniteQuotient(alphabet, (perm,) * alphabet.size)


def trivial_quotient(alphabet: PairedAlphabet | None = None) -> FiniteQuotient:
    return constant_quotient(alphabet or PairedAlphabet(), Permutation.identity(1))


def mod2_quotient(alphabet: PairedAlphabet | None = None) -> FiniteQuotient:
    return constant_quotient(alphabet or PairedAlphabet(), Permutation((1, 0)))


def cyclic3_quotient(alphabet: PairedAlphabet | None = None) -> FiniteQuotient:
    """``a`` and ``A`` both act as the 3-cycle (0 1 2); the other pairs act as transpositions."""
    alphabet = alphabet or PairedAlphabet()
    c3 = Permutation.from_cycles(3, (0, 1, 2))
    images = [c3, c3]
    for _ in range(1, alphabet.pair_count):
        images += [Permutation.from_cycles(3, (0, 1)), Permutation.from_cycles(3, (0, 2))]
    return FiniteQuotient(alphabet, tuple(images))


def suite_quotients(alphabet: PairedAlphabet | None = None, random_count: int = 20) -> list[tuple[str, FiniteQuotient]]:
    """The fixed test suite: trivial, mod-2, cyclic-3 and seeded random quotients of degree 2..5."""
    alphabet = alphabet or PairedAlphabet()
    suite = [
        ("trivial", trivial_quotient(alphabet)),
        ("mod2", mod2_quotient(alphabet)),
        ("cyclic3", cyclic3_quotient(alphabet)),
    ]
    for seed in range(random_count):
        degree = 2 + seed % 4
        suite.append((f"random(k={degree},seed={seed})", random_quotient(alphabet, degree, seed)))
    return suite


def factors_through_phi(q: FiniteQuotient) -> bool:
    """True when every closer image is the inverse of its opener's image."""
    return all(
        q.image(opener(i)).then(q.image(closer(i))).is_identity for i in range(q.alphabet.pair_count)
    )

