# app/utils/words.py

import re
from dataclasses import dataclass
from enum import IntEnum
from math import gcd
from typing import Iterable, Iterator, NamedTuple

from app.exceptions import ScopeError, WordSyntaxError


class Generator(IntEnum):
    """Generators a, b of Γn. The integer values fix the enumeration order A < B."""

    A = 1
    B = 2


class Sigma(IntEnum):
    """Artin generators of B3; only braid3 gives them meaning."""

    S1 = 3
    S2 = 4


LETTER_NAMES = {
    Generator.A: "a",
    Generator.B: "b",
    Sigma.S1: "s1",
    Sigma.S2: "s2",
}

ALPHABETS = {
    "ab": (Generator.A, Generator.B),
    "sigma": (Sigma.S1, Sigma.S2),
}


class Syllable(NamedTuple):
    gen: IntEnum
    exp: int

    def __str__(self):
        name = LETTER_NAMES[self.gen]
        return name if self.exp == 1 else f"{name}^{self.exp}"


def _free_reduce(pairs):
    # Stack-based: a merge that cancels to zero exposes the previous syllable.
    stack = []
    for gen, exp in pairs:
        if exp == 0:
            continue
        if stack and stack[-1].gen == gen:
            merged = stack.pop().exp + exp
            if merged:
                stack.append(Syllable(gen, merged))
        else:
            stack.append(Syllable(gen, exp))
    return tuple(stack)


@dataclass(frozen=True)
class Word:
    """
    Freely reduced syllable sequence. The empty word is the identity.
    Construct from arbitrary (gen, exp) pairs with Word.from_pairs.
    """

    syllables: tuple = ()

    def __post_init__(self):
        previous = None
        for syllable in self.syllables:
            if not isinstance(syllable, Syllable):
                raise TypeError(f"expected Syllable, got {syllable!r}")
            if syllable.exp == 0:
                raise ValueError("zero exponent in a reduced word")
            if previous is not None and previous.gen == syllable.gen:
                raise ValueError(f"adjacent syllables share generator {LETTER_NAMES[syllable.gen]}")
            previous = syllable

    @classmethod
    def from_pairs(cls, pairs: Iterable):
        return cls(_free_reduce(pairs))

    @classmethod
    def power(cls, gen, exp):
        return cls((Syllable(gen, exp),)) if exp else EMPTY

    @property
    def is_empty(self):
        return not self.syllables

    @property
    def letter_length(self):
        return sum(abs(s.exp) for s in self.syllables)

    @property
    def first(self):
        return self.syllables[0] if self.syllables else None

    @property
    def last(self):
        return self.syllables[-1] if self.syllables else None

    def is_positive(self):
        """Nonempty with every exponent > 0."""
        return bool(self.syllables) and all(s.exp > 0 for s in self.syllables)

    def is_negative(self):
        return bool(self.syllables) and all(s.exp < 0 for s in self.syllables)

    def exponent_sum(self, gen):
        return sum(s.exp for s in self.syllables if s.gen == gen)

    def letters(self) -> Iterator[Syllable]:
        """Yield the word one letter at a time, as syllables of exponent ±1."""
        for gen, exp in self.syllables:
            step = 1 if exp > 0 else -1
            for _ in range(abs(exp)):
                yield Syllable(gen, step)

    def __mul__(self, other):
        return concat(self, other)

    def __pow__(self, k):
        base = self if k >= 0 else invert(self)
        result = EMPTY
        for _ in range(abs(k)):
            result = concat(result, base)
        return result

    def __str__(self):
        return format_word(self)


EMPTY = Word()


@dataclass(frozen=True)
class GroupContext:
    """
    Parameter n of Γn = <a, b : b a^n b = a> plus the data derived from it.
    Build with GroupContext.build(n); instances are immutable and shareable.
    """

    n: int
    q: int
    min_poly: tuple
    phi_a: int
    phi_b: int
    step_cap_factor: int = 10

    @classmethod
    def build(cls, n, max_q=64, step_cap_factor=10):
        from app.utils.hecke_oracle import min_poly_of_2cos_pi_over

        if n < 1:
            raise ScopeError(f"n must be >= 1, got {n}")
        q = n + 1
        d = gcd(n - 1, 2)
        return cls(
            n=n,
            q=q,
            min_poly=min_poly_of_2cos_pi_over(q, max_q=max_q),
            phi_a=2 // d,
            phi_b=-(n - 1) // d,
            step_cap_factor=step_cap_factor,
        )

    @property
    def delta(self):
        return Word.power(Generator.A, self.q)

    def delta_power(self, ell):
        return Word.power(Generator.A, self.q * ell)


def concat(u: Word, v: Word) -> Word:
    if not u.syllables:
        return v
    if not v.syllables:
        return u
    if u.syllables[-1].gen != v.syllables[0].gen:
        return Word(u.syllables + v.syllables)
    return Word(_free_reduce(u.syllables + v.syllables))


def invert(u: Word) -> Word:
    return Word(tuple(Syllable(s.gen, -s.exp) for s in reversed(u.syllables)))


def _term_pattern(alphabet):
    names = "|".join(LETTER_NAMES[g] for g in ALPHABETS[alphabet])
    return re.compile(rf"({names})(?:\^(-?[0-9]+))?")


_TERM_PATTERNS = {alphabet: _term_pattern(alphabet) for alphabet in ALPHABETS}


def parse_word(text: str, alphabet: str = "ab") -> Word:
    """
    word := "1" | term (SP term)*
    term := gen ("^" int)?

    ASCII only. Everything before an error offset is ASCII, so the offset
    counts bytes and characters alike.
    """
    if alphabet not in ALPHABETS:
        raise ValueError(f"unknown alphabet {alphabet!r}")
    by_name = {LETTER_NAMES[g]: g for g in ALPHABETS[alphabet]}
    pattern = _TERM_PATTERNS[alphabet]

    stripped = text.strip(" ")
    if stripped == "1":
        return EMPTY
    if not stripped:
        raise WordSyntaxError("empty word (write 1 for the identity)", text, 0)

    pairs = []
    pos = len(text) - len(text.lstrip(" "))
    while pos < len(text):
        match = pattern.match(text, pos)
        if match is None:
            raise WordSyntaxError(f"unexpected character {text[pos]!r}", text, pos)
        exp = 1
        if match.group(2) is not None:
            exp = int(match.group(2))
            if exp == 0:
                raise WordSyntaxError("zero exponent", text, match.start(2))
        pairs.append((by_name[match.group(1)], exp))
        pos = match.end()
        if pos < len(text) and text[pos] != " ":
            raise WordSyntaxError(f"expected a space, found {text[pos]!r}", text, pos)
        while pos < len(text) and text[pos] == " ":
            pos += 1
    return Word.from_pairs(pairs)


def format_word(w: Word) -> str:
    if not w.syllables:
        return "1"
    return " ".join(str(s) for s in w.syllables)


def enumerate_reduced(max_len: int, signed: bool = True, alphabet: str = "ab") -> Iterator[Word]:
    """
    Every freely reduced word of letter-length <= max_len, exactly once, in
    length-then-lexicographic order. Letter order is g1, g1^-1, g2, g2^-1.
    With signed=False only positive words (and the empty word) are produced.
    """
    letters = []
    for gen in ALPHABETS[alphabet]:
        letters.append(Syllable(gen, 1))
        if signed:
            letters.append(Syllable(gen, -1))

    def extend(prefix, remaining):
        if remaining == 0:
            yield Word(prefix)
            return
        last = prefix[-1] if prefix else None
        for letter in letters:
            if last is not None and last.gen == letter.gen:
                if (last.exp > 0) != (letter.exp > 0):
                    continue
                grown = prefix[:-1] + (Syllable(letter.gen, last.exp + letter.exp),)
            else:
                grown = prefix + (letter,)
            yield from extend(grown, remaining - 1)

    for length in range(max_len + 1):
        yield from extend((), length)


def reduced_word_count(max_len: int) -> int:
    """Closed form 1 + sum 4 * 3^(L-1) for the symmetric two-generator alphabet."""
    return 1 + sum(4 * 3 ** (length - 1) for length in range(1, max_len + 1))
