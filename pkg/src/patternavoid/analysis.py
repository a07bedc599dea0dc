"""Executable checks of the structural properties of the blocks a_1..a_k.

Each checker returns a :class:`PropertyReport`. A failing report carries a
counterexample that has been re-verified independently before it is
returned.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional

from .construction import BlockSystem, c_map
from .errors import ConsistencyError, LengthGuardError
from .words import XI, Word
from .zimin import zimin

DEFAULT_SQUARE_FREE_GUARD = 10**5


@dataclass(frozen=True)
class PropertyReport:
    name: str
    passed: bool
    counterexample: Optional[dict[str, Any]] = None
    checked: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if not self.passed and self.counterexample is None:
            raise ValueError("a failing report must carry a counterexample")

    def as_dict(self) -> dict[str, Any]:
        return {
            "property": self.name,
            "passed": self.passed,
            "counterexample": self.counterexample,
            "checked": self.checked,
        }


def _fail(name: str, certified: bool, counterexample: dict, checked: dict) -> PropertyReport:
    if not certified:
        raise ConsistencyError(f"{name}: counterexample failed re-validation: {counterexample}")
    return PropertyReport(name, False, counterexample, checked)


def _enc(w: Word) -> str:
    return "".join(map(chr, w.letters))


def _occurs_in(b: Word, host: Word) -> bool:
    # plain window comparison, independent of the str encoding used by the scans
    n = len(b)
    return any(host.letters[i:i + n] == b.letters for i in range(len(host) - n + 1))


def basic_words(system: BlockSystem) -> frozenset[Word]:
    """Factors of blocks containing at least two even-indexed letters."""
    found = set()
    for block in system.blocks:
        for i in range(len(block)):
            evens = 0
            for j in range(i, len(block)):
                if block.letters[j] % 2 == 0:
                    evens += 1
                if evens >= 2:
                    found.add(block[i:j + 1])
    return frozenset(found)


def check_lemma1_a(system: BlockSystem) -> PropertyReport:
    """Every basic word is a factor of exactly one block (as indexed a_i)."""
    name = "basic words determine their block"
    encoded = [_enc(b) for b in system.blocks]
    words = sorted(basic_words(system), key=lambda w: (len(w), w.letters))
    for b in words:
        eb = _enc(b)
        owners = [i for i, blk in enumerate(encoded, 1) if eb in blk]
        if len(owners) != 1:
            ok = len([i for i, blk in enumerate(system.blocks, 1) if _occurs_in(b, blk)]) != 1
            return _fail(name, ok, {"word": str(b), "blocks": owners},
                         {"k": system.k, "basic_words": len(words)})
    return PropertyReport(name, True, checked={"k": system.k, "basic_words": len(words)})


def check_lemma1_b(system: BlockSystem) -> PropertyReport:
    """Blocks sharing a prefix of length >= 2 are equal."""
    name = "length-2 prefixes determine the block"
    blocks = system.blocks
    for i in range(len(blocks)):
        for j in range(i + 1, len(blocks)):
            a, b = blocks[i], blocks[j]
            if a.letters[:2] == b.letters[:2] and a.letters != b.letters:
                ok = a[:2].same_letters(b[:2]) and not a.same_letters(b)
                return _fail(name, ok, {"blocks": [i + 1, j + 1], "prefix": str(a[:2])},
                             {"k": system.k})
    return PropertyReport(name, True, checked={"k": system.k, "pairs": len(blocks) ** 2})


def straddle_words(system: BlockSystem) -> set[Word]:
    """Words b2 c1 with b2 a nonempty proper suffix and c1 a nonempty proper
    prefix of blocks, of total length at most k."""
    k = system.k
    out = set()
    for a in system.blocks:
        for b in system.blocks:
            for ls in range(1, k):
                for lp in range(1, k - ls + 1):
                    out.add(a[k - ls:] + b[:lp])
    return out


def check_lemma1_c(system: BlockSystem) -> PropertyReport:
    """No straddle word is a factor of a block."""
    name = "no straddle word inside a block"
    encoded = [_enc(b) for b in system.blocks]
    words = sorted(straddle_words(system), key=lambda w: (len(w), w.letters))
    for w in words:
        ew = _enc(w)
        hits = [i for i, blk in enumerate(encoded, 1) if ew in blk]
        if hits:
            ok = _occurs_in(w, system.block(hits[0]))
            return _fail(name, ok, {"word": str(w), "block": hits[0]},
                         {"k": system.k, "straddle_words": len(words)})
    return PropertyReport(name, True, checked={"k": system.k, "straddle_words": len(words)})


def find_square(w: Word) -> Optional[tuple[int, Word]]:
    """First (1-based position, D) with DD a factor at that position."""
    text = _enc(w)
    n = len(text)
    for i in range(n):
        for half in range(1, (n - i) // 2 + 1):
            if text.startswith(text[i:i + half], i + half):
                return i + 1, w[i:i + half]
    return None


def check_square_free(w: Word, guard: int = DEFAULT_SQUARE_FREE_GUARD) -> PropertyReport:
    name = "square-free"
    if len(w) > guard:
        raise LengthGuardError(f"word length {len(w)} exceeds square-free guard {guard}")
    hit = find_square(w)
    if hit is None:
        return PropertyReport(name, True, checked={"length": len(w)})
    pos, d = hit
    ok = w.factor(pos + len(d), len(d)).same_letters(d)
    return _fail(name, ok, {"position": pos, "D": str(d)}, {"length": len(w)})


def check_even_surplus(system: BlockSystem, alpha: int) -> PropertyReport:
    """Each block has at least alpha + 1 even-indexed letters."""
    name = "even letters exceed alpha"
    for i, block in enumerate(system.blocks, 1):
        evens = sum(1 for c in block.letters if c % 2 == 0)
        if evens < alpha + 1:
            recount = len([c for c in block if not c & 1])
            return _fail(name, recount < alpha + 1,
                         {"block": i, "even_letters": evens, "needed": alpha + 1},
                         {"k": system.k, "alpha": alpha})
    return PropertyReport(name, True, checked={"k": system.k, "alpha": alpha})


def check_c_remark(system: BlockSystem) -> PropertyReport:
    """C(a_i) = Z_t s_{t+1} for every block."""
    name = "C(a_i) = Z_t s_(t+1)"
    target = zimin(system.t).word + Word((system.t + 1,), XI)
    for i, block in enumerate(system.blocks, 1):
        image = c_map(system, block)
        if not image.same_letters(target):
            ok = image.letters != target.letters
            return _fail(name, ok, {"block": i, "image": str(image), "expected": str(target)},
                         {"k": system.k, "t": system.t})
    return PropertyReport(name, True, checked={"k": system.k, "t": system.t})


def check_class_preservation(system: BlockSystem) -> PropertyReport:
    """Each v_i keeps every letter's C image: C(x_{v_i(j)}) = C(x_j)."""
    name = "permutations preserve C classes"
    table = system.c_table
    for i, v in enumerate(system.family.perms, 1):
        for j, image in enumerate(v, 1):
            if not table[image - 1].same_letters(table[j - 1]):
                ok = table[image - 1].letters != table[j - 1].letters
                return _fail(name, ok, {"perm": i, "position": j, "image": image},
                             {"k": system.k})
    return PropertyReport(name, True, checked={"k": system.k})
