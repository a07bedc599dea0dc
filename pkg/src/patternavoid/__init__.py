"""Avoidability of patterns with variables: Zimin's criterion and an explicit
avoiding sequence on 2*alpha + 4 letters."""

from .construction import (
    BlockSystem,
    JWord,
    PermutationFamily,
    apply_phi0,
    build_blocks,
    build_permutations,
    c_map,
    choose_k,
    j_word,
)
from .words import (
    Occurrence,
    Pattern,
    SearchLimits,
    Substitution,
    Word,
    avoids,
    find_instance,
    make_pattern,
    naive_instance_oracle,
    substitute,
)
from .zimin import BlockingWitness, ZiminWord, is_blocking, zimin

__all__ = [
    "BlockSystem", "BlockingWitness", "JWord", "Occurrence", "Pattern",
    "PermutationFamily", "SearchLimits", "Substitution", "Word", "ZiminWord",
    "apply_phi0", "avoids", "build_blocks", "build_permutations", "c_map",
    "choose_k", "find_instance", "is_blocking", "j_word", "make_pattern",
    "naive_instance_oracle", "substitute", "zimin",
]
