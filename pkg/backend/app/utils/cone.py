# app/utils/cone.py
"""
Sign decision for Γn: every element is in <a, b>+, in <a^-1, b^-1>+, or is the identity.

The input is first put in normal form u · Δ^ell. When ell >= 0 the word u · Δ^ell
is already positive. Otherwise the negative part is pushed leftwards through u by
three moves on a state P · N · Δ^ell (P positive, N negative, ell <= 0):

    merge   P ends with x^p, N starts with x^-m: cancel min(p, m)
    handle  P ends with b^j, N starts with a^-m: b^j = a^-1 (a^-(n-1) b^-1)^j a
    feed    borrow one Δ^-1 = a^-(n+1) from ell and put it in front of N

until P is empty.
"""

import logging
from dataclasses import dataclass, replace
from enum import Enum

from app.exceptions import ReductionStuck, RewriteCapExceeded
from app.utils.normal_form import to_normal_form
from app.utils.words import EMPTY, Generator, GroupContext, Word, concat, invert

logger = logging.getLogger(__name__)


class Verdict(str, Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"
    IDENTITY = "identity"

    def mirror(self):
        return {
            Verdict.POSITIVE: Verdict.NEGATIVE,
            Verdict.NEGATIVE: Verdict.POSITIVE,
            Verdict.IDENTITY: Verdict.IDENTITY,
        }[self]


class Comparison(str, Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"


@dataclass(frozen=True)
class SignResult:
    verdict: Verdict
    witness: Word
    steps: int = 0

    def is_one_signed(self):
        if self.verdict == Verdict.POSITIVE:
            return self.witness.is_positive()
        if self.verdict == Verdict.NEGATIVE:
            return self.witness.is_negative()
        return self.witness.is_empty


@dataclass(frozen=True)
class ReductionState:
    P: Word
    N: Word = EMPTY
    ell: int = 0

    def as_word(self, ctx):
        return concat(concat(self.P, self.N), ctx.delta_power(self.ell))

    def __str__(self):
        return f"P={self.P} N={self.N} ell={self.ell}"


def expand_handle(j: int, ctx: GroupContext) -> Word:
    """(a^-(n-1) b^-1)^j, the value of a b^j a^-1."""
    if j < 1:
        raise ValueError(f"handle exponent must be >= 1, got {j}")
    unit = Word.from_pairs([(Generator.A, -(ctx.n - 1)), (Generator.B, -1)])
    return unit**j


def _merge(state):
    p_last, n_first = state.P.last, state.N.first
    remaining = p_last.exp + n_first.exp
    p_rest = Word(state.P.syllables[:-1])
    n_rest = Word(state.N.syllables[1:])
    if remaining > 0:
        return replace(state, P=concat(p_rest, Word.power(p_last.gen, remaining)), N=n_rest)
    return replace(state, P=p_rest, N=concat(Word.power(p_last.gen, remaining), n_rest))


def _handle(state, ctx):
    j = state.P.last.exp
    a, a_inv = Word.power(Generator.A, 1), Word.power(Generator.A, -1)
    n_new = a_inv * expand_handle(j, ctx) * a * state.N
    return replace(state, P=Word(state.P.syllables[:-1]), N=n_new)


def _feed(state, ctx):
    return replace(state, N=concat(ctx.delta_power(-1), state.N), ell=state.ell + 1)


def step_cascade(state: ReductionState, ctx: GroupContext):
    """Apply the one move that fits a state with non-empty P. Returns the new state and the move name."""
    p_last, n_first = state.P.last, state.N.first
    if n_first is not None and n_first.gen == p_last.gen:
        return _merge(state), "merge"
    if p_last.gen == Generator.B and n_first is not None and n_first.gen == Generator.A:
        return _handle(state, ctx), "handle"
    if state.ell < 0:
        return _feed(state, ctx), "feed"
    raise ReductionStuck(state)


def _cascade(u: Word, ell: int, ctx: GroupContext):
    state = ReductionState(P=u, N=EMPTY, ell=ell)
    cap = ctx.step_cap_factor * (u.letter_length + abs(ell) + 1) ** 2
    steps = 0
    while not state.P.is_empty:
        steps += 1
        if steps > cap:
            raise RewriteCapExceeded(f"sign cascade exceeded {cap} steps at {state}")
        state, move = step_cascade(state, ctx)
        logger.debug("%s -> %s", move, state)
    return state, steps


def decide_sign(w: Word, ctx: GroupContext) -> SignResult:
    nf = to_normal_form(w, ctx)
    u, ell = nf.prefix, nf.ell

    if u.is_empty:
        if ell > 0:
            return SignResult(Verdict.POSITIVE, ctx.delta_power(ell))
        if ell < 0:
            return SignResult(Verdict.NEGATIVE, ctx.delta_power(ell))
        return SignResult(Verdict.IDENTITY, EMPTY)

    if ell >= 0:
        return SignResult(Verdict.POSITIVE, concat(u, ctx.delta_power(ell)))

    state, steps = _cascade(u, ell, ctx)
    witness = concat(state.N, ctx.delta_power(state.ell))
    if witness.is_empty:
        return SignResult(Verdict.IDENTITY, EMPTY, steps)
    return SignResult(Verdict.NEGATIVE, witness, steps)


def cmp_dd(u: Word, v: Word, ctx: GroupContext) -> Comparison:
    """LESS when u ≺ v, i.e. u^-1 v lies in the positive cone."""
    verdict = decide_sign(concat(invert(u), v), ctx).verdict
    if verdict == Verdict.POSITIVE:
        return Comparison.LESS
    if verdict == Verdict.NEGATIVE:
        return Comparison.GREATER
    return Comparison.EQUAL


def klein_decide(w: Word) -> Verdict:
    """
    Closed-form sign for n = 1. Using b a = a b^-1 every word becomes a^t b^s,
    which is positive iff t > 0, or t = 0 and s > 0.
    """
    t = s = 0
    for gen, exp in w.syllables:
        if gen == Generator.A:
            t += exp
            if exp % 2:
                s = -s
        elif gen == Generator.B:
            s += exp
        else:
            raise ValueError(f"klein_decide is defined on the a, b alphabet only, got {gen!r}")
    if t > 0 or (t == 0 and s > 0):
        return Verdict.POSITIVE
    if t == 0 and s == 0:
        return Verdict.IDENTITY
    return Verdict.NEGATIVE
