"""Zimin words and the blocking (unavoidability) test.

Z_1 = s1 and Z_{n+1} = Z_n s_{n+1} Z_n.  A pattern is blocking exactly when
some substitution of nonempty words over the xi alphabet sends it to a
factor of some Z_n; by Zimin's theorem it suffices to look at Z_alpha.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .errors import RankError
from .words import XI, Pattern, SearchLimits, Substitution, Word, find_instance

MAX_RANK = 20


@dataclass(frozen=True)
class ZiminWord:
    n: int
    word: Word

    def __len__(self):
        return len(self.word)


@dataclass(frozen=True)
class BlockingWitness:
    rank: int
    mapping: Substitution
    position: int  # 1-based start in Z_rank


@lru_cache(maxsize=None)
def _zimin_letters(n: int) -> tuple[int, ...]:
    if n == 1:
        return (1,)
    prev = _zimin_letters(n - 1)
    return prev + (n,) + prev


def zimin(n: int) -> ZiminWord:
    if not 1 <= n <= MAX_RANK:
        raise RankError(f"Zimin rank must be in 1..{MAX_RANK}, got {n}")
    return ZiminWord(n, Word(_zimin_letters(n), XI))


def ruler(p: int) -> int:
    """1 + the exponent of 2 in ``p``, i.e. the i+1 of p = 2^i + r*2^(i+1)."""
    if p < 1:
        raise ValueError("ruler() is defined for positive integers")
    return (p & -p).bit_length()


def is_blocking(
    u: Pattern, depth: Optional[int] = None, limits: Optional[SearchLimits] = None
) -> tuple[bool, Optional[BlockingWitness]]:
    """Decide whether ``u`` is unavoidable, searching Z_depth (default alpha(u))."""
    rank = u.alpha if depth is None else depth
    z = zimin(rank)
    occ = find_instance(z.word, u, limits)
    if occ is None:
        return False, None
    return True, BlockingWitness(rank, occ.assignment, occ.start)
