# app/utils/normal_form.py

import logging
from dataclasses import dataclass

from app.exceptions import RewriteCapExceeded
from app.utils.words import EMPTY, Generator, GroupContext, Word, concat

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NormalForm:
    """
    prefix · Δ^ell with a non-negative prefix
    b^n0 a^m1 b^n1 ... a^mk b^nk and Δ = a^(n+1) central.
    """

    prefix: Word = EMPTY
    ell: int = 0

    def __str__(self):
        if self.ell == 0:
            return str(self.prefix)
        return f"{self.prefix} · Δ^{self.ell}"


def _eliminate_inverses(w: Word, ctx: GroupContext):
    """
    Rewrite every letter with a non-negative exponent, collecting Δ-powers in ell.
        a^-1 = a^n Δ^-1
        b^-1 = a^n b a^n Δ^-1
    a-syllables are split by divmod so a^(n+1) never survives this pass.
    """
    pairs = []
    ell = 0
    for gen, exp in w.syllables:
        if gen == Generator.A:
            deltas, rest = divmod(exp, ctx.q)
            ell += deltas
            pairs.append((Generator.A, rest))
        elif exp > 0:
            pairs.append((Generator.B, exp))
        else:
            for _ in range(-exp):
                pairs.extend([(Generator.A, ctx.n), (Generator.B, 1), (Generator.A, ctx.n)])
            ell += exp
    return Word.from_pairs(pairs), ell


def _leftmost_redex(syllables, ctx):
    # r1: a^m with m >= n+1; r2: b^s a^n b^t. An a-syllable can match at most one rule.
    for i, (gen, exp) in enumerate(syllables):
        if gen != Generator.A:
            continue
        if exp >= ctx.q:
            return "r1", i
        if exp == ctx.n and 0 < i < len(syllables) - 1:
            return "r2", i
    return None, None


def to_normal_form(w: Word, ctx: GroupContext) -> NormalForm:
    """
    Deterministic rewrite of w into prefix · Δ^ell.

    After inverse elimination the word is positive and two rules are applied
    leftmost-first until neither matches:
        r1  a^m          -> a^(m mod q), ell += m div q
        r2  b^s a^n b^t  -> b^(s-1) a b^(t-1)
    r2 removes two b-letters and r1 only shortens a-syllables, so
    (b-letters, a-letters) decreases lexicographically at every step.
    """
    if any(gen not in (Generator.A, Generator.B) for gen, _ in w.syllables):
        raise ValueError("to_normal_form expects a word over a, b")

    prefix, ell = _eliminate_inverses(w, ctx)
    cap = ctx.step_cap_factor * (w.letter_length + 1) ** 2
    steps = 0

    while True:
        rule, i = _leftmost_redex(prefix.syllables, ctx)
        if rule is None:
            break
        steps += 1
        if steps > cap:
            raise RewriteCapExceeded(f"normal form of {w} did not settle within {cap} steps")

        syllables = prefix.syllables
        if rule == "r1":
            deltas, rest = divmod(syllables[i].exp, ctx.q)
            ell += deltas
            start, end = i, i + 1
            middle = [(Generator.A, rest)]
        else:
            start, end = i - 1, i + 2
            before, after = syllables[i - 1], syllables[i + 1]
            middle = [
                (Generator.B, before.exp - 1),
                (Generator.A, 1),
                (Generator.B, after.exp - 1),
            ]
        prefix = Word.from_pairs(list(syllables[:start]) + middle + list(syllables[end:]))

    logger.debug("normal form of %s: %s, ell=%d after %d steps", w, prefix, ell, steps)
    return NormalForm(prefix=prefix, ell=ell)


def nf_to_word(nf: NormalForm, ctx: GroupContext) -> Word:
    return concat(nf.prefix, ctx.delta_power(nf.ell))


def is_normal_form_shape(nf: NormalForm, ctx: GroupContext) -> bool:
    """
    Every a-exponent lies in 1..n, the prefix is non-negative, and no a^n sits
    between two b-syllables. A trailing or leading a^n next to a single
    b-syllable is allowed: no rule shortens b a^n.
    """
    syllables = nf.prefix.syllables
    for i, syllable in enumerate(syllables):
        if syllable.exp <= 0:
            return False
        if syllable.gen == Generator.A:
            if syllable.exp > ctx.n:
                return False
            if syllable.exp == ctx.n and 0 < i < len(syllables) - 1:
                return False
        elif syllable.gen != Generator.B:
            return False
    return True
