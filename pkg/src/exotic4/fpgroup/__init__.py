"""Words, finite presentations, and the algorithms that act on them."""

from .abelian import AbelianInvariants, abelianize, relation_matrix, smith_normal_form
from .certificates import (
    CertStep,
    ConsequenceCertificate,
    Derivation,
    derive_product,
    search_certificate,
    verify_certificate,
)
from .coset import Complete, CosetTable, Overflow, default_coset_cap, todd_coxeter
from .presentation import (
    ParseError,
    Presentation,
    format_presentation,
    parse_presentation,
    parse_word,
    relator_key,
    same_relator_set,
)
from .quotients import PermutationQuotient, find_nonabelian_quotient, lift_quotient
from .tietze import DEFAULT_TIETZE_BUDGET, TietzeResult, tietze_reduce, tietze_simplify
from .words import (
    IDENTITY,
    AlphabetError,
    Word,
    commutator,
    conjugate,
    cyclic_reduce,
    format_word,
    invert,
    map_word,
    multiply,
    power,
    reduce,
    rename,
)

__all__ = [
    "AbelianInvariants",
    "AlphabetError",
    "CertStep",
    "Complete",
    "ConsequenceCertificate",
    "CosetTable",
    "DEFAULT_TIETZE_BUDGET",
    "Derivation",
    "IDENTITY",
    "Overflow",
    "ParseError",
    "PermutationQuotient",
    "Presentation",
    "TietzeResult",
    "Word",
    "abelianize",
    "commutator",
    "conjugate",
    "cyclic_reduce",
    "default_coset_cap",
    "derive_product",
    "format_presentation",
    "find_nonabelian_quotient",
    "format_word",
    "invert",
    "lift_quotient",
    "map_word",
    "multiply",
    "parse_presentation",
    "parse_word",
    "power",
    "reduce",
    "relation_matrix",
    "relator_key",
    "rename",
    "same_relator_set",
    "search_certificate",
    "smith_normal_form",
    "tietze_reduce",
    "tietze_simplify",
    "todd_coxeter",
    "verify_certificate",
]
