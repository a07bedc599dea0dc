"""The avoiding sequence J_m over k = 2*alpha + 2 or 2*alpha + 4 letters.

Permutations are stored in one-line form as 1-based image tuples:
``perm[i - 1]`` is the image of ``i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import (
    AlphabetSizeError,
    ConsistencyError,
    LengthGuardError,
    PermutationDistinctnessError,
    WordError,
)
from .words import X, XI, Word
from .zimin import ruler, zimin

Perm = tuple[int, ...]

DEFAULT_MAX_J_LENGTH = 10**6


def choose_k(alpha: int) -> int:
    """The one of 2*alpha+2, 2*alpha+4 divisible by 4, but never below 8.

    For alpha = 1 the formula gives 4, where the permutation family collapses.
    """
    if alpha < 1:
        raise AlphabetSizeError(f"alpha must be >= 1, got {alpha}")
    k = 2 * alpha + 2 if (2 * alpha + 2) % 4 == 0 else 2 * alpha + 4
    return max(k, 8)


def identity(k: int) -> Perm:
    return tuple(range(1, k + 1))


def cycle(elements: Sequence[int], k: int) -> Perm:
    """Cycle notation: each listed element goes to the next, the last to the first."""
    images = list(range(1, k + 1))
    for a, b in zip(elements, list(elements[1:]) + list(elements[:1])):
        images[a - 1] = b
    return tuple(images)


def compose(p: Perm, q: Perm) -> Perm:
    """``p q``: apply ``q`` first, then ``p``."""
    return tuple(p[q[i] - 1] for i in range(len(q)))


def power(p: Perm, e: int) -> Perm:
    result = identity(len(p))
    for _ in range(e):
        result = compose(p, result)
    return result


@dataclass(frozen=True)
class PermutationFamily:
    k: int
    perms: tuple[Perm, ...]

    def check(self) -> None:
        """Raise if the family breaks any structural invariant."""
        k = self.k
        if len(self.perms) != k:
            raise ConsistencyError(f"expected {k} permutations, got {len(self.perms)}")
        for n, v in enumerate(self.perms, 1):
            if sorted(v) != list(range(1, k + 1)):
                raise ConsistencyError(f"v_{n} is not a bijection of 1..{k}")
            for j in range(1, k + 1):
                if _letter_class(v[j - 1]) != _letter_class(j):
                    raise ConsistencyError(f"v_{n} moves {j} out of its residue class")
        seen: dict[Perm, int] = {}
        for n, v in enumerate(self.perms, 1):
            if v in seen:
                raise PermutationDistinctnessError(
                    f"k={k}: v_{seen[v]} and v_{n} coincide"
                )
            seen[v] = n


def _letter_class(j: int) -> object:
    # odd letters, letters = 2 mod 4, and the fixed letters = 0 mod 4 (each its own class)
    if j % 2 == 1:
        return "odd"
    if j % 4 == 2:
        return "2mod4"
    return j


def build_permutations(k: int) -> PermutationFamily:
    """v_i = f^i for i <= k/2, then v_{k/2+i} = g f^(i-1), with
    f = (1,3,...,k-1) and g = (2,6,...,k-2)."""
    if k < 4 or k % 4:
        raise AlphabetSizeError(f"k must be a positive multiple of 4, got {k}")
    f = cycle(range(1, k, 2), k)
    g = cycle(range(2, k - 1, 4), k)
    if compose(g, f) != compose(f, g):
        raise ConsistencyError("generators with disjoint supports must commute")
    half = k // 2
    perms = [power(f, i) for i in range(1, half + 1)]
    perms += [compose(g, power(f, i - 1)) for i in range(1, half + 1)]
    family = PermutationFamily(k, tuple(perms))
    family.check()
    return family


@dataclass(frozen=True)
class BlockSystem:
    k: int
    family: PermutationFamily
    blocks: tuple[Word, ...]
    t: int
    c_table: tuple[Word, ...]  # c_table[p - 1] = C(x_p)

    def block(self, i: int) -> Word:
        return self.blocks[i - 1]


def system_from_family(family: PermutationFamily, validate: bool = True) -> BlockSystem:
    """Blocks, minimal Zimin rank t and the C table for an arbitrary family.

    ``validate=False`` skips the consistency checks so that deliberately broken
    families can be fed to the property checkers.
    """
    k = family.k
    blocks = tuple(Word(tuple(v), X, k) for v in family.perms)
    head = tuple(ruler(p) for p in range(1, k))
    t = 1
    while True:
        z = zimin(t).word.letters
        if z[:len(head)] == head:
            break
        t += 1
    tail = Word(z[len(head):] + (t + 1,), XI)
    c_table = tuple(Word((c,), XI) for c in head) + (tail,)
    system = BlockSystem(k, family, blocks, t, c_table)
    if validate:
        target = zimin(t).word + Word((t + 1,), XI)
        for i, block in enumerate(blocks, 1):
            if block.letters[-1] != k:
                raise ConsistencyError(f"a_{i} does not end with x_{k}")
            if not c_map(system, block).same_letters(target):
                raise ConsistencyError(f"C(a_{i}) != Z_{t} s{t + 1}")
    return system


def build_blocks(k: Optional[int] = None, alpha: Optional[int] = None) -> BlockSystem:
    if (k is None) == (alpha is None):
        raise ValueError("give exactly one of k or alpha")
    if k is None:
        k = choose_k(alpha)
    return system_from_family(build_permutations(k))


def _check_letters(system: BlockSystem, w: Word) -> None:
    for c in w.letters:
        if not 1 <= c <= system.k:
            raise WordError(f"letter x{c} outside x1..x{system.k}")


def apply_phi0(system: BlockSystem, w: Word) -> Word:
    """Uniform morphism x_i -> a_i."""
    if len(w) == 0:
        raise WordError("apply_phi0 needs a nonempty word")
    _check_letters(system, w)
    blocks = [b.letters for b in system.blocks]
    letters = tuple(c for i in w.letters for c in blocks[i - 1])
    return Word(letters, X, system.k)


@dataclass(frozen=True)
class JWord:
    m: int
    word: Word
    system: BlockSystem

    def __len__(self):
        return len(self.word)


def j_word(system: BlockSystem, m: int, max_length: int = DEFAULT_MAX_J_LENGTH) -> JWord:
    if m < 1:
        raise ValueError(f"iteration count must be >= 1, got {m}")
    if system.k ** m > max_length:
        raise LengthGuardError(
            f"|J_{m}| = {system.k}^{m} exceeds the guard {max_length}"
        )
    word = system.block(1)
    for _ in range(m - 1):
        word = apply_phi0(system, word)
    return JWord(m, word, system)


def c_map(system: BlockSystem, w: Word) -> Word:
    _check_letters(system, w)
    letters: list[int] = []
    for c in w.letters:
        letters.extend(system.c_table[c - 1].letters)
    return Word(tuple(letters), XI)
