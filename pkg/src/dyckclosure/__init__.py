"""Dyck languages in the free monoid: recognizers, one-sided witnesses modulo
finite quotients, and separating quotients for non-members."""
from .approximation import GadgetSet, approximate, build_gadgets, verify_approximation
from .dyck import MatchingCertificate, ReductionTrace, is_one_sided, is_two_sided, noncrossing_matching, reduce_trace
from .errors import (
    DyckError,
    EmptyWord,
    NotFound,
    NotMember,
    NotSeparable,
    NotTwoSided,
    ResourceBound,
    UnknownSymbol,
    VerificationFailure,
)
from .free_group import GroupWord, free_multiply, kernel_member, phi
from .oracle import CountTable, bfs_minimal_witness, count_members, exhaustive_equivalence
from .quotients import (
    FiniteQuotient,
    Permutation,
    evaluate,
    letter_order,
    pair_exponent,
    permutation_order,
    random_quotient,
)
from .separation import SeparationCertificate, residual_witness, separate, verify_separation
from .words import PairedAlphabet, Word, enumerate_words, format_word, parse_word

__version__ = "0.1.0"

__all__ = [
    "CountTable",
    "DyckError",
    "EmptyWord",
    "FiniteQuotient",
    "GadgetSet",
    "GroupWord",
    "MatchingCertificate",
    "NotFound",
    "NotMember",
    "NotSeparable",
    "NotTwoSided",
    "PairedAlphabet",
    "Permutation",
    "ReductionTrace",
    "ResourceBound",
    "SeparationCertificate",
    "UnknownSymbol",
    "VerificationFailure",
    "Word",
    "approximate",
    "bfs_minimal_witness",
    "build_gadgets",
    "count_members",
    "enumerate_words",
    "evaluate",
    "exhaustive_equivalence",
    "format_word",
    "free_multiply",
    "is_one_sided",
    "is_two_sided",
    "kernel_member",
    "letter_order",
    "noncrossing_matching",
    "pair_exponent",
    "parse_word",
    "permutation_order",
    "phi",
    "random_quotient",
    "reduce_trace",
    "residual_witness",
    "separate",
    "verify_approximation",
    "verify_separation",
]
