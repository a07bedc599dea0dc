"""Patterns, words, substitutions and the exact matcher for patterns with variables.

A *pattern* is a word over variables (``xyx``); an *instance* of it is obtained
by replacing every variable by a nonempty word, equal variables by equal
words. :func:`find_instance` decides whether a host word contains an instance
as a factor (contiguous substring) and returns the first one in a fixed
canonical order.
"""

from __future__ import annotations

import itertools
import string
import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Optional, Union

from .errors import (
    EmptyPatternError,
    HostTooLongError,
    PatternSyntaxError,
    SearchBudgetExceeded,
    SubstitutionError,
    WordError,
)

X = "x"
XI = "s"

DEFAULT_MAX_HOST_LENGTH = 4096


@dataclass(frozen=True)
class Word:
    """A finite word of positive letter indices.

    ``alphabet`` is ``"x"`` for the finite alphabet x_1..x_size or ``"s"`` for
    the unbounded alphabet xi_1, xi_2, ...  ``size`` bounds the indices of an
    ``"x"`` word when given.
    """

    letters: tuple[int, ...]
    alphabet: str = X
    size: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(c) for c in self.letters))
        if self.alphabet not in (X, XI):
            raise WordError(f"unknown alphabet {self.alphabet!r}")
        if self.alphabet == XI and self.size is not None:
            raise WordError("the xi alphabet is unbounded")
        for c in self.letters:
            if c < 1:
                raise WordError(f"letter index {c} < 1")
            if self.size is not None and c > self.size:
                raise WordError(f"letter index {c} > alphabet size {self.size}")

    @classmethod
    def from_text(cls, text: str) -> "Word":
        """``"abc"`` -> x1 x2 x3 (compact a-z encoding)."""
        letters = []
        for ch in text:
            if ch not in string.ascii_lowercase:
                raise WordError(f"not a lowercase letter: {ch!r}")
            letters.append(ord(ch) - ord("a") + 1)
        return cls(tuple(letters))

    @classmethod
    def xi(cls, *letters: int) -> "Word":
        return cls(tuple(letters), XI)

    def to_text(self) -> str:
        if any(c > 26 for c in self.letters):
            raise WordError("compact encoding needs letter indices <= 26")
        return "".join(chr(ord("a") + c - 1) for c in self.letters)

    def tokens(self) -> list[str]:
        return [f"{self.alphabet}{c}" for c in self.letters]

    def __str__(self) -> str:
        return " ".join(self.tokens())

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return Word(self.letters[item], self.alphabet, self.size)
        return self.letters[item]

    def __add__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        if other.alphabet != self.alphabet:
            raise WordError("cannot concatenate words over different alphabets")
        size = self.size if self.size == other.size else None
        return Word(self.letters + other.letters, self.alphabet, size)

    def same_letters(self, other: "Word") -> bool:
        return self.alphabet == other.alphabet and self.letters == other.letters

    def factor(self, start: int, length: int) -> "Word":
        """Factor at 1-based ``start`` of the given length."""
        return self[start - 1:start - 1 + length]

    def is_factor_of(self, other: "Word") -> bool:
        return _encode(self) in _encode(other)


def as_word(w: Union[Word, str]) -> Word:
    return Word.from_text(w) if isinstance(w, str) else w


@dataclass(frozen=True)
class Pattern:
    symbols: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "symbols", tuple(self.symbols))
        if not self.symbols:
            raise EmptyPatternError("pattern must be nonempty")

    @property
    def variables(self) -> tuple[str, ...]:
        """Distinct variables in order of first appearance."""
        return tuple(dict.fromkeys(self.symbols))

    @property
    def alpha(self) -> int:
        return len(self.variables)

    def __len__(self) -> int:
        return len(self.symbols)

    def __str__(self) -> str:
        return "".join(self.symbols)


def make_pattern(text: str) -> Pattern:
    if not text:
        raise EmptyPatternError("pattern text is empty")
    bad = [ch for ch in text if ch not in string.ascii_lowercase]
    if bad:
        raise PatternSyntaxError(f"pattern must use letters a-z, got {bad[0]!r}")
    return Pattern(tuple(text))


@dataclass(frozen=True)
class Substitution:
    """Map from variables to nonempty words."""

    bindings: Mapping[str, Word] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "bindings", dict(self.bindings))
        for var, image in self.bindings.items():
            if len(image) == 0:
                raise SubstitutionError(f"empty image for variable {var!r}")

    def __getitem__(self, var: str) -> Word:
        return self.bindings[var]

    def __eq__(self, other):
        if not isinstance(other, Substitution):
            return NotImplemented
        return self.bindings == other.bindings

    def __hash__(self):
        return hash(tuple(sorted(self.bindings.items())))

    def render(self) -> str:
        return ", ".join(f"{v}->{w}" for v, w in self.bindings.items())


def substitute(s: Substitution, u: Pattern) -> Word:
    missing = [v for v in u.variables if v not in s.bindings]
    if missing:
        raise SubstitutionError(f"no binding for variable(s) {missing}")
    extra = [v for v in s.bindings if v not in u.variables]
    if extra:
        raise SubstitutionError(f"binding for variable(s) not in pattern: {extra}")
    images = [s[v] for v in u.symbols]
    result = images[0]
    for img in images[1:]:
        result = result + img
    return result


@dataclass(frozen=True)
class Occurrence:
    start: int  # 1-based
    assignment: Substitution
    span: int


@dataclass(frozen=True)
class SearchLimits:
    max_host_length: int = DEFAULT_MAX_HOST_LENGTH
    budget_seconds: Optional[float] = None


def _encode(w: Word) -> str:
    # one code point per letter so that str slicing/startswith run in C
    return "".join(map(chr, w.letters))


def _check_host(w: Word, limits: SearchLimits) -> None:
    if len(w) == 0:
        raise WordError("host word must be nonempty")
    if len(w) > limits.max_host_length:
        raise HostTooLongError(
            f"host length {len(w)} exceeds guard {limits.max_host_length}; "
            "raise max_host_length to override"
        )


def find_instance(
    w: Union[Word, str], u: Pattern, limits: Optional[SearchLimits] = None
) -> Optional[Occurrence]:
    """First instance of ``u`` in ``w``, or None if there is none.

    Order: ascending start; at each start, image lengths of the variables
    (taken in order of first appearance) ascend lexicographically.
    Raises SearchBudgetExceeded when ``limits.budget_seconds`` runs out.
    """
    w = as_word(w)
    limits = limits or SearchLimits()
    _check_host(w, limits)

    text = _encode(w)
    n = len(text)
    symbols = u.symbols
    plen = len(symbols)
    # rest[i]: multiplicity of each variable in symbols[i:]
    rest = [Counter(symbols[i:]) for i in range(plen + 1)]
    deadline = (
        time.monotonic() + limits.budget_seconds
        if limits.budget_seconds is not None
        else None
    )
    steps = 0
    bound: dict[str, str] = {}

    def min_needed(i: int) -> int:
        return sum(c * (len(bound[v]) if v in bound else 1) for v, c in rest[i].items())

    def search(i: int, cursor: int) -> bool:
        nonlocal steps
        if i == plen:
            return True
        steps += 1
        if deadline is not None and steps % 4096 == 0 and time.monotonic() > deadline:
            raise SearchBudgetExceeded(
                f"budget of {limits.budget_seconds}s exhausted after {steps} steps"
            )
        var = symbols[i]
        img = bound.get(var)
        if img is not None:
            return text.startswith(img, cursor) and search(i + 1, cursor + len(img))
        # var is unbound: every later occurrence of it costs the chosen length
        count = rest[i][var]
        others = min_needed(i) - count
        max_len = (n - cursor - others) // count
        for length in _candidate_lengths(i, cursor, max_len):
            bound[var] = text[cursor:cursor + length]
            if search(i + 1, cursor + length):
                return True
        bound.pop(var, None)
        return False

    def _candidate_lengths(i: int, cursor: int, max_len: int):
        # If the next symbol is already bound, only lengths after which its
        # image occurs can succeed; str.find enumerates them in ascending order.
        nxt = bound.get(symbols[i + 1]) if i + 1 < plen else None
        if nxt is None:
            yield from range(1, max_len + 1)
            return
        pos = text.find(nxt, cursor + 1, cursor + max_len + len(nxt))
        while pos != -1:
            yield pos - cursor
            pos = text.find(nxt, pos + 1, cursor + max_len + len(nxt))

    for start in range(n - plen + 1):
        bound.clear()
        if search(0, start):
            images = {}
            for v in u.variables:
                images[v] = Word(tuple(map(ord, bound[v])), w.alphabet, w.size)
            span = sum(len(images[v]) for v in symbols)
            return Occurrence(start + 1, Substitution(images), span)
    return None


def avoids(w: Union[Word, str], u: Pattern, limits: Optional[SearchLimits] = None) -> bool:
    return find_instance(w, u, limits) is None


def naive_instance_oracle(
    w: Union[Word, str], u: Pattern, cap: Optional[int] = None
) -> Optional[Occurrence]:
    """Brute-force counterpart of :func:`find_instance` for tiny inputs.

    Tries every start and every tuple of image lengths in ``[1, cap]``; builds
    the candidate substitution from the first appearance of each variable and
    accepts it only if substituting it back reproduces the host factor.
    """
    w = as_word(w)
    if cap is None:
        cap = len(w)
    if len(w) > 16 or u.alpha > 3 or cap > len(w) or len(w) == 0:
        raise ValueError("oracle limited to |w| <= 16, alpha <= 3, 1 <= cap <= |w|")
    variables = u.variables
    mult = Counter(u.symbols)
    for start in range(1, len(w) + 1):
        for lengths in itertools.product(range(1, cap + 1), repeat=len(variables)):
            size = dict(zip(variables, lengths))
            span = sum(size[v] * mult[v] for v in variables)
            if start - 1 + span > len(w):
                continue
            images: dict[str, Word] = {}
            pos = start
            for v in u.symbols:
                if v not in images:
                    images[v] = w.factor(pos, size[v])
                pos += size[v]
            candidate = Substitution(images)
            if substitute(candidate, u).same_letters(w.factor(start, span)):
                return Occurrence(start, candidate, span)
    return None


def iter_factors(w: Word) -> Iterable[tuple[int, Word]]:
    """All (1-based start, factor) pairs of ``w``, shortest first per start."""
    for i in range(len(w)):
        for j in range(i + 1, len(w) + 1):
            yield i + 1, w[i:j]
