"""Finite quotients separating non-members of the two-sided language.

For ``w`` outside the language, ``phi(w)`` is a nontrivial reduced group word
``r``. The path construction lays ``r`` out on points ``0..|r|`` so that the
generator images walk ``0 -> |r|``; pulling these images back along phi gives a
quotient of F that kills every two-sided (hence every one-sided) Dyck word
but moves point 0 under ``w``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import EmptyWord, FormatError, NotSeparable, VerificationFailure
from .free_group import GroupWord, phi
from .oracle import one_sided_words
from .quotients import FiniteQuotient, Permutation, evaluate, evaluate_many, factors_through_phi, parse_quotient_lines
from .words import LETTER, Word, format_word, parse_word


def residual_witness(r: GroupWord, rank: int | None = None) -> tuple[Permutation, ...]:
    """One permutation per generator of the rank-``rank`` free group, of degree ``|r| + 1``.

    The images send 0 to ``|r|`` along ``r``. Generators that do not occur in
    ``r`` (and the unused parts of the others) are completed by pairing free
    domain points with free codomain points in ascending order.
    """
    if r.is_identity:
        raise EmptyWord("the identity has no separating witness")
    if rank is None:
        rank = max(g for g, _ in r.entries) + 1
    degree = len(r) + 1
    partial: list[dict[int, int]] = [{} for _ in range(rank)]
    preimage: list[dict[int, int]] = [{} for _ in range(rank)]
    for t, (gen, sign) in enumerate(r.entries, 1):
        src, dst = (t - 1, t) if sign > 0 else (t, t - 1)
        if partial[gen].get(src, dst) != dst or preimage[gen].get(dst, src) != src:
            raise ValueError(f"{r} is not freely reduced")
        partial[gen][src] = dst
        preimage[gen][dst] = src
    perms = []
    for m in partial:
        free_dom = [p for p in range(degree) if p not in m]
        used = set(m.values())
        free_cod = [p for p in range(degree) if p not in used]
        images = dict(m)
        images.update(zip(free_dom, free_cod))
        perms.append(Permutation(tuple(images[p] for p in range(degree))))
    return tuple(perms)


@dataclass(frozen=True)
class SeparationCertificate:
    word: Word
    quotient: FiniteQuotient
    moved_point: int = 0
    target: int = field(default=-1)

    @property
    def structural(self) -> bool:
        return factors_through_phi(self.quotient)

    def to_text(self, mode: str = LETTER) -> str:
        return (
            self.quotient.to_text()
            + f"word: {format_word(self.word, mode)}\n"
            + f"moved_point: {self.moved_point}\n"
            + f"image_of_word_moves_point_to: {self.target}\n"
        )

    def to_dict(self, mode: str = LETTER) -> dict:
        d = self.quotient.to_dict()
        d.update(word=format_word(self.word, mode), moved_point=self.moved_point, image_of_word_moves_point_to=self.target)
        return d

    @classmethod
    def from_text(cls, text: str, mode: str = LETTER) -> SeparationCertificate:
        quotient, trailer = parse_quotient_lines(text.splitlines())
        fields = {}
        for line in trailer:
            key, _, value = line.partition(":")
            fields[key.strip()] = value.strip()
        try:
            word = parse_word(fields["word"], quotient.alphabet, mode)
            return cls(word, quotient, int(fields["moved_point"]), int(fields["image_of_word_moves_point_to"]))
        except (KeyError, ValueError) as exc:
            raise FormatError(f"bad certificate trailer: {exc}") from None


def separate(w: Word) -> SeparationCertificate:
    r = phi(w)
    if r.is_identity:
        raise NotSeparable(f"{w} is in the two-sided language")
    alphabet = w.alphabet
    gens = residual_witness(r, alphabet.pair_count)
    images = []
    for p in gens:
        images += [p, p.inverse()]
    q = FiniteQuotient(alphabet, tuple(images))
    target = evaluate(q, w)(0)
    cert = SeparationCertificate(w, q, 0, target)
    if target != len(r) or not cert.structural:
        raise VerificationFailure(f"separating quotient for {w} failed its self-check")
    return cert


@dataclass(frozen=True)
class SeparationReport:
    moves_point: bool
    structural: bool
    one_sided_killed: bool
    checked_words: int

    @property
    def passed(self) -> bool:
        return self.moves_point and self.structural and self.one_sided_killed

    def __bool__(self) -> bool:
        return self.passed


def verify_separation(cert: SeparationCertificate, w: Word, max_length: int = 8) -> SeparationReport:
    """Re-check a certificate from scratch.

    Besides the structural inverse check, every one-sided word up to
    ``max_length`` is evaluated and must act as the identity.
    """
    q = cert.quotient
    p = cert.moved_point
    moves = 0 <= p < q.degree and evaluate(q, w)(p) != p
    words = one_sided_words(q.alphabet, max_length)
    images = evaluate_many(q, words)
    killed = bool((images == np.arange(q.degree)).all())
    return SeparationReport(moves, cert.structural, killed, len(words))

