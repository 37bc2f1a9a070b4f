"""Brute-force ground truth: counts by enumeration, closed forms, walk DP, BFS witnesses."""
from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import Iterator

from .dyck import is_one_sided, is_two_sided
from .errors import NotFound, NotTwoSided
from .free_group import kernel_member
from .quotients import FiniteQuotient, evaluate
from .words import DEFAULT_CAP, PairedAlphabet, Word, check_cap, enumerate_words, format_word

ONE_SIDED = "one_sided"
TWO_SIDED = "two_sided"


def catalan(k: int) -> int:
    return math.comb(2 * k, k) // (k + 1)


def one_sided_closed_form(n: int, length: int) -> int:
    """Catalan(k) * n^k for length 2k, zero for odd lengths."""
    if length & 1:
        return 0
    k = length // 2
    return catalan(k) * n**k


def closed_walks(n: int, length: int) -> int:
    """Closed walks at the root of the 2n-regular tree, by DP over distance from the root.

    These count words whose image under phi is trivial, since the Cayley graph
    of the rank-n free group is that tree.
    """
    degree = 2 * n
    dist = [1] + [0] * length
    for _ in range(length):
        nxt = [0] * (length + 1)
        for d, ways in enumerate(dist):
            if not ways:
                continue
            if d == 0:
                nxt[1] += ways * degree
            else:
                nxt[d - 1] += ways
                if d + 1 <= length:
                    nxt[d + 1] += ways * (degree - 1)
        dist = nxt
    return dist[0]


@dataclass(frozen=True)
class CountTable:
    kind: str
    pair_count: int
    rows: tuple[tuple[int, int], ...]

    def expected(self, length: int) -> int:
        if self.kind == ONE_SIDED:
            return one_sided_closed_form(self.pair_count, length)
        return closed_walks(self.pair_count, length)

    def mismatches(self) -> list[tuple[int, int, int]]:
        return [(L, c, self.expected(L)) for L, c in self.rows if c != self.expected(L)]

    def to_text(self) -> str:
        lines = [f"{self.kind} n={self.pair_count}", f"{'length':>6}  {'count':>10}  {'expected':>10}"]
        lines += [f"{L:>6}  {c:>10}  {self.expected(L):>10}" for L, c in self.rows]
        return "\n".join(lines) + "\n"

    def to_csv(self) -> str:
        return "".join(f"{self.kind},{self.pair_count},{L},{c}\n" for L, c in self.rows)


def count_members(kind: str, n: int, max_length: int, cap: int = DEFAULT_CAP) -> CountTable:
    """Exact member counts for every positive even length up to ``max_length``."""
    if kind not in (ONE_SIDED, TWO_SIDED):
        raise ValueError(f"unknown kind {kind!r}")
    alphabet = PairedAlphabet(n)
    check_cap(sum(alphabet.size**L for L in range(2, max_length + 1, 2)), cap)
    test = is_one_sided if kind == ONE_SIDED else is_two_sided
    rows = []
    for length in range(2, max_length + 1, 2):
        rows.append((length, sum(1 for w in enumerate_words(alphabet, length, cap) if test(w).accepted)))
    return CountTable(kind, n, tuple(rows))


def _one_sided_of_length(alphabet: PairedAlphabet, length: int) -> Iterator[tuple[int, ...]]:
    """One-sided words of exactly ``length`` letters, lexicographic, generated by a grammar walk."""
    size = alphabet.size
    out: list[int] = []
    stack: list[int] = []

    def walk():
        remaining = length - len(out)
        if remaining == 0:
            yield tuple(out)
            return
        for x in range(size):
            if not x & 1:
                if len(stack) + 1 > remaining - 1:
                    continue
                stack.append(x)
                out.append(x)
                yield from walk()
                out.pop()
                stack.pop()
            elif stack and stack[-1] == x ^ 1:
                stack.pop()
                out.append(x)
                yield from walk()
                out.pop()
                stack.append(x ^ 1)

    return walk()


@functools.lru_cache(maxsize=32)
def one_sided_words(alphabet: PairedAlphabet, max_length: int) -> tuple[Word, ...]:
    """Every one-sided word of length <= ``max_length``, shortest first."""
    return tuple(
        Word(alphabet, letters)
        for length in range(0, max_length + 1, 2)
        for letters in _one_sided_of_length(alphabet, length)
    )


def bfs_minimal_witness(q: FiniteQuotient, w: Word, max_length: int) -> Word:
    """Shortest one-sided word with the same image as ``w``; ties go to the lexicographically first.

    Lengths 0, 2, 4, ... are tried in turn. Within a length the candidates are
    walked depth-first in letter order with the permutation of each prefix
    carried along, so shared prefixes are evaluated once.
    """
    if not is_two_sided(w):
        raise NotTwoSided(f"{w} is not in the two-sided language")
    target = evaluate(q, w).images
    tables = [p.images for p in q.images]
    size = q.alphabet.size
    identity = tuple(range(q.degree))

    for length in range(0, max_length + 1, 2):
        out: list[int] = []
        stack: list[int] = []

        def walk(state):
            remaining = length - len(out)
            if remaining == 0:
                return state == target
            for x in range(size):
                t = tables[x]
                if not x & 1:
                    if len(stack) + 1 > remaining - 1:
                        continue
                    stack.append(x)
                    out.append(x)
                    if walk(tuple(t[i] for i in state)):
                        return True
                    out.pop()
                    stack.pop()
                elif stack and stack[-1] == x ^ 1:
                    stack.pop()
                    out.append(x)
                    if walk(tuple(t[i] for i in state)):
                        return True
                    out.pop()
                    stack.append(x ^ 1)
            return False

        if walk(identity):
            return Word(q.alphabet, tuple(out))
    raise NotFound(f"no one-sided witness for {format_word(w)} up to length {max_length}")


@dataclass(frozen=True)
class EquivalenceReport:
    max_length: int
    pair_count: int
    checked: int
    discrepancy: Word | None = None

    @property
    def passed(self) -> bool:
        return self.discrepancy is None

    def __bool__(self) -> bool:
        return self.passed


def exhaustive_equivalence(max_length: int, n: int = 2, cap: int = DEFAULT_CAP) -> EquivalenceReport:
    """Compare the two-sided recognizer with the kernel test on every word up to ``max_length``."""
    alphabet = PairedAlphabet(n)
    check_cap(sum(alphabet.size**L for L in range(max_length + 1)), cap)
    checked = 0
    for length in range(max_length + 1):
        for w in enumerate_words(alphabet, length, cap):
            checked += 1
            if is_two_sided(w).accepted != kernel_member(w):
                return EquivalenceReport(max_length, n, checked, w)
    return EquivalenceReport(max_length, n, checked)
