"""Recognizers for the one-sided and two-sided Dyck languages.

Both recognizers return certificates: a non-crossing perfect matching of
positions for members, a failure position (one-sided) or an irreducible
residual word (two-sided) otherwise.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass, field
from typing import NamedTuple

from .errors import NotMember
from .words import LETTER, Word, is_opener


class MatchedPair(NamedTuple):
    left: int
    right: int
    opening: bool  # True: opener at ``left``; False: closer at ``left``


@dataclass(frozen=True)
class MatchingCertificate:
    pairs: tuple[MatchedPair, ...]

    def __post_init__(self):
        object.__setattr__(self, "pairs", tuple(sorted(MatchedPair(*p) for p in self.pairs)))

    @property
    def one_sided(self) -> bool:
        return all(p.opening for p in self.pairs)

    def to_text(self) -> str:
        return "".join(f"{p.left} {p.right} {'O' if p.opening else 'C'}\n" for p in self.pairs)

    @classmethod
    def from_text(cls, text: str) -> MatchingCertificate:
        pairs = []
        for line in text.splitlines():
            if not line.strip():
                continue
            i, j, flag = line.split()
            if flag not in ("O", "C"):
                raise ValueError(f"bad orientation flag {flag!r}")
            pairs.append(MatchedPair(int(i), int(j), flag == "O"))
        return cls(tuple(pairs))


class Step(NamedTuple):
    position: int
    left: int
    right: int


@dataclass(frozen=True)
class ReductionTrace:
    word: Word
    steps: tuple[Step, ...]
    residual: Word
    # original positions of each deleted couple, parallel to ``steps``
    origins: tuple[tuple[int, int], ...] = field(repr=False, default=())

    @property
    def empty(self) -> bool:
        return not self.residual.letters

    def to_text(self, mode: str = LETTER) -> str:
        sym = self.word.alphabet.symbol
        lines = [
            f"step {k}: delete ({sym(s.left, mode)},{sym(s.right, mode)}) at {s.position}"
            for k, s in enumerate(self.steps, 1)
        ]
        return "".join(line + "\n" for line in lines)


@dataclass(frozen=True)
class OneSidedResult:
    accepted: bool
    certificate: MatchingCertificate | None = None
    failure_position: int | None = None

    def __bool__(self) -> bool:
        return self.accepted


@dataclass(frozen=True)
class TwoSidedResult:
    word: Word
    accepted: bool
    certificate: MatchingCertificate | None = None

    def __bool__(self) -> bool:
        return self.accepted

    @functools.cached_property
    def residual(self) -> Word:
        if self.accepted:
            return Word(self.word.alphabet)
        return reduce_trace(self.word).residual


def one_sided_scan(letters: tuple[int, ...]) -> tuple[list[tuple[int, int]] | None, int | None]:
    """Stack discipline on raw letters: (matched position pairs, None) or (None, failure)."""
    stack: list[int] = []
    pairs = []
    for pos, x in enumerate(letters):
        if not x & 1:
            stack.append(pos)
        elif stack and letters[stack[-1]] == x ^ 1:
            pairs.append((stack.pop(), pos))
        else:
            return None, pos
    if stack:
        return None, stack[0]
    return pairs, None


def two_sided_reduces(letters: tuple[int, ...]) -> bool:
    """Fast membership test: stack-based deletion of adjacent inverse couples."""
    if len(letters) & 1:
        return False
    stack: list[int] = []
    for x in letters:
        if stack and stack[-1] == x ^ 1:
            stack.pop()
        else:
            stack.append(x)
    return not stack


def is_one_sided(w: Word) -> OneSidedResult:
    pairs, failure = one_sided_scan(w.letters)
    if pairs is None:
        return OneSidedResult(False, failure_position=failure)
    cert = MatchingCertificate(tuple(MatchedPair(i, j, True) for i, j in pairs))
    return OneSidedResult(True, certificate=cert)


def reduce_trace(w: Word) -> ReductionTrace:
    """Leftmost-innermost reduction.

    The processed prefix is kept on a stack; the current word at any moment is
    the stack followed by the unread suffix, so the left letter of a deleted
    couple sits at index ``len(stack) - 1`` of the current word.
    """
    letters = w.letters
    stack: list[int] = []  # original positions
    steps = []
    origins = []
    for pos, x in enumerate(letters):
        if stack and letters[stack[-1]] == x ^ 1:
            left = stack.pop()
            steps.append(Step(len(stack), letters[left], x))
            origins.append((left, pos))
        else:
            stack.append(pos)
    residual = Word(w.alphabet, tuple(letters[p] for p in stack))
    return ReductionTrace(w, tuple(steps), residual, tuple(origins))


def replay_trace(trace: ReductionTrace) -> Word:
    """Apply the recorded deletions to the input word, checking each one."""
    current = list(trace.word.letters)
    for k, s in enumerate(trace.steps, 1):
        p = s.position
        if not (0 <= p < len(current) - 1) or (current[p], current[p + 1]) != (s.left, s.right):
            raise ValueError(f"step {k} does not match the current word")
        if current[p] != current[p + 1] ^ 1:
            raise ValueError(f"step {k} deletes a non-inverse couple")
        del current[p : p + 2]
    return Word(trace.word.alphabet, tuple(current))


def _matching_from_origins(w: Word, origins) -> MatchingCertificate:
    return MatchingCertificate(tuple(MatchedPair(i, j, is_opener(w.letters[i])) for i, j in origins))


def is_two_sided(w: Word) -> TwoSidedResult:
    if len(w) & 1:
        return TwoSidedResult(w, False)
    trace = reduce_trace(w)
    if not trace.empty:
        result = TwoSidedResult(w, False)
        result.__dict__["residual"] = trace.residual
        return result
    return TwoSidedResult(w, True, _matching_from_origins(w, trace.origins))


def noncrossing_matching(w: Word) -> MatchingCertificate:
    trace = reduce_trace(w)
    if not trace.empty:
        raise NotMember(f"word {w} is not in the two-sided language", residual=trace.residual)
    return _matching_from_origins(w, trace.origins)


def check_matching(w: Word, cert: MatchingCertificate, one_sided: bool = False) -> list[str]:
    """Validate ``cert`` against ``w`` from scratch; returns a list of violations."""
    problems = []
    n = len(w)
    seen = [0] * n
    for i, j, opening in cert.pairs:
        if not 0 <= i < j < n:
            problems.append(f"pair ({i},{j}) out of range")
            continue
        seen[i] += 1
        seen[j] += 1
        x, y = w.letters[i], w.letters[j]
        if x >> 1 != y >> 1 or x == y:
            problems.append(f"pair ({i},{j}) is not an opener/closer couple of one pair")
        if opening != is_opener(x):
            problems.append(f"pair ({i},{j}) has a wrong orientation flag")
        if one_sided and not opening:
            problems.append(f"pair ({i},{j}) is closing-order in a one-sided certificate")
    if any(c != 1 for c in seen):
        problems.append("matching is not perfect")
    ps = cert.pairs
    for a in range(len(ps)):
        for b in range(len(ps)):
            i, j = ps[a][:2]
            k, l = ps[b][:2]
            if i < k < j < l:
                problems.append(f"pairs ({i},{j}) and ({k},{l}) cross")
    return problems
