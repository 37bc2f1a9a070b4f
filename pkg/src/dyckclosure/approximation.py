"""One-sided witnesses for two-sided Dyck words modulo a finite quotient.

For a pair with exponent N (so ``letter^(N-1)`` acts as the inverse of
``letter``) the positive word ``opener^(N-1) closer^(N-1)`` acts as the
inverse of the closing-order couple ``closer opener``. Raising it to
``M - 1``, where M is its order, inverts it once more, which gives the gadget
``g``: a one-sided word acting exactly like ``closer opener``.

``g1 = g opener^(N-1)`` acts like ``closer`` and ``g2 = closer^(N-1) g`` acts
like ``opener``; ``g1 g2`` is one-sided, so any one-sided word can sit
between them.
"""
from __future__ import annotations

from dataclasses import dataclass

from .dyck import is_one_sided, is_two_sided
from .errors import NotTwoSided, VerificationFailure
from .quotients import FiniteQuotient, evaluate, pair_exponent, permutation_order
from .words import Word, closer, opener


@dataclass(frozen=True)
class PairGadget:
    pair: int
    exponent: int  # N
    base_order: int  # M
    g: Word
    g1: Word
    g2: Word


@dataclass(frozen=True)
class GadgetSet:
    quotient: FiniteQuotient
    gadgets: tuple[PairGadget, ...]

    def __getitem__(self, pair: int) -> PairGadget:
        return self.gadgets[pair]


def gadget_problems(q: FiniteQuotient, gad: PairGadget) -> list[str]:
    """Check the defining identities of one pair's gadget; empty list when all hold."""
    o, c = opener(gad.pair), closer(gad.pair)
    alphabet = q.alphabet
    n, m = gad.exponent, gad.base_order
    problems = []
    if not is_one_sided(gad.g):
        problems.append("g is not one-sided")
    if len(gad.g) != 2 * (n - 1) * (m - 1):
        problems.append(f"|g| = {len(gad.g)} != 2(N-1)(M-1)")
    if evaluate(q, gad.g) != evaluate(q, Word(alphabet, (c, o))):
        problems.append("g does not act like the closing-order couple")
    if evaluate(q, gad.g1) != q.image(c):
        problems.append("g1 does not act like the closer")
    if evaluate(q, gad.g2) != q.image(o):
        problems.append("g2 does not act like the opener")
    if not is_one_sided(gad.g1 + gad.g2):
        problems.append("g1 g2 is not one-sided")
    return problems


def build_gadgets(q: FiniteQuotient) -> GadgetSet:
    alphabet = q.alphabet
    gadgets = []
    for pair in range(alphabet.pair_count):
        o, c = opener(pair), closer(pair)
        n = pair_exponent(q, pair)
        base = (q.image(o) ** (n - 1)).then(q.image(c) ** (n - 1))
        m = permutation_order(base)
        block = (o,) * (n - 1) + (c,) * (n - 1)
        g = Word(alphabet, block * (m - 1))
        g1 = g + Word(alphabet, (o,) * (n - 1))
        g2 = Word(alphabet, (c,) * (n - 1)) + g
        gad = PairGadget(pair, n, m, g, g1, g2)
        problems = gadget_problems(q, gad)
        if problems:
            raise VerificationFailure(f"gadget for pair {pair}: " + "; ".join(problems))
        gadgets.append(gad)
    return GadgetSet(q, tuple(gadgets))


def approximate(q: FiniteQuotient, w: Word, gadgets: GadgetSet | None = None) -> Word:
    """A one-sided word acting like ``w`` under ``q``.

    Each matched pair of the non-crossing matching of ``w`` is rewritten in
    place: opening-order pairs are kept, a closing-order pair becomes ``g`` at
    its left end when nothing is nested inside it, otherwise ``g1`` at the left
    end and ``g2`` at the right end.
    """
    result = is_two_sided(w)
    if not result:
        raise NotTwoSided(f"{w} is not in the two-sided language", residual=result.residual)
    if result.certificate.one_sided:
        return w
    gadgets = gadgets or build_gadgets(q)
    pieces: list[tuple[int, ...]] = [()] * len(w)
    for i, j, opening in result.certificate.pairs:
        if opening:
            pieces[i], pieces[j] = (w.letters[i],), (w.letters[j],)
            continue
        gad = gadgets[w.letters[i] >> 1]
        if j == i + 1:
            pieces[i] = gad.g.letters
        else:
            pieces[i], pieces[j] = gad.g1.letters, gad.g2.letters
    out = Word(w.alphabet, tuple(x for piece in pieces for x in piece))
    if not is_one_sided(out):
        raise VerificationFailure(f"approximation of {w} is not one-sided")
    if evaluate(q, out) != evaluate(q, w):
        raise VerificationFailure(f"approximation of {w} changes the quotient image")
    return out


@dataclass(frozen=True)
class ApproximationReport:
    input_two_sided: bool
    witness_one_sided: bool
    images_agree: bool

    @property
    def passed(self) -> bool:
        return self.input_two_sided and self.witness_one_sided and self.images_agree

    def __bool__(self) -> bool:
        return self.passed


def verify_approximation(q: FiniteQuotient, w: Word, witness: Word) -> ApproximationReport:
    return ApproximationReport(
        bool(is_two_sided(w)),
        bool(is_one_sided(witness)),
        evaluate(q, w) == evaluate(q, witness),
    )


def length_bound(gadgets: GadgetSet, w: Word) -> int:
    widest = max(2, max(len(g.g1) + len(g.g2) for g in gadgets.gadgets))
    return (len(w) // 2) * widest
