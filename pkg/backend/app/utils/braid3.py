# app/utils/braid3.py
"""
B3 = Γ2 seen through the Artin generators s1, s2 (σ1, σ2).

    a = s1 s2,  b = s2^-1        s1 = a b,  s2 = b^-1

The σ alphabet stays inside this module; everything it hands back to the rest
of the app is a word in a, b.
"""

import logging
from enum import Enum
from functools import lru_cache

from sympy import ImmutableMatrix

from app.exceptions import RewriteCapExceeded
from app.utils.words import Generator, GroupContext, Sigma, Syllable, Word

logger = logging.getLogger(__name__)


class ConeRegion(str, Enum):
    """U = {x > y > 0}, V = {0 < x < y}, both taken up to sign."""

    U = "U"
    V = "V"


_SIGMA_IMAGES = {
    Sigma.S1: ((Generator.A, 1), (Generator.B, 1)),
    Sigma.S2: ((Generator.B, -1),),
}

_AB_IMAGES = {
    Generator.A: ((Sigma.S1, 1), (Sigma.S2, 1)),
    Generator.B: ((Sigma.S2, -1),),
}


def _substitute(w, images):
    pairs = []
    for gen, exp in w.syllables:
        image = images[gen]
        if exp < 0:
            image = tuple((g, -e) for g, e in reversed(image))
        pairs.extend(image * abs(exp))
    return Word.from_pairs(pairs)


def sigma_to_ab(sw: Word) -> Word:
    return _substitute(sw, _SIGMA_IMAGES)


def ab_to_sigma(w: Word) -> Word:
    return _substitute(w, _AB_IMAGES)


def _leftmost_handle(syllables):
    # s1^e s2^k s1^f with e, f of opposite signs; reduced words alternate generators
    for i in range(len(syllables) - 2):
        first, last = syllables[i], syllables[i + 2]
        if first.gen == Sigma.S1 and last.gen == Sigma.S1 and (first.exp > 0) != (last.exp > 0):
            return i
    return None


def dehornoy_reduce(sw: Word, step_cap_factor=100) -> Word:
    """
    Handle reduction in B3. The innermost letters of a handle are rewritten with
        s1^e s2^k s1^-e = s2^-e s1^k s2^e     (e = ±1)
    until the s1-exponents all have one sign.
    """
    cap = step_cap_factor * (sw.letter_length + 1) ** 2
    current = sw
    steps = 0
    while True:
        i = _leftmost_handle(current.syllables)
        if i is None:
            break
        steps += 1
        if steps > cap:
            raise RewriteCapExceeded(f"handle reduction of {sw} exceeded {cap} steps")
        syllables = current.syllables
        first, middle, last = syllables[i], syllables[i + 1], syllables[i + 2]
        e = 1 if first.exp > 0 else -1
        pairs = list(syllables[:i])
        pairs += [
            (Sigma.S1, first.exp - e),
            (Sigma.S2, -e),
            (Sigma.S1, middle.exp),
            (Sigma.S2, e),
            (Sigma.S1, last.exp + e),
        ]
        pairs += syllables[i + 3 :]
        current = Word.from_pairs(pairs)
    logger.debug("handle reduction of %s: %s in %d steps", sw, current, steps)
    return current


def is_d_positive(sw: Word) -> bool:
    """1-positive (every s1-exponent > 0) or 2-positive (s2^k with k > 0)."""
    reduced = dehornoy_reduce(sw)
    s1_exponents = [s.exp for s in reduced.syllables if s.gen == Sigma.S1]
    if s1_exponents:
        return s1_exponents[0] > 0
    return reduced.exponent_sum(Sigma.S2) > 0


A_BAR = ImmutableMatrix([[0, 1], [-1, 1]])
B_BAR = ImmutableMatrix([[1, 0], [1, 1]])

_REGION_RAYS = {
    ConeRegion.U: ((1, 0), (1, 1)),
    ConeRegion.V: ((1, 1), (0, 1)),
}


def matrix_of(w: Word) -> ImmutableMatrix:
    """Integer image of a word in a, b; a^3 maps to ±I."""
    result = ImmutableMatrix.eye(2)
    for gen, exp in w.syllables:
        if gen == Generator.A:
            result = result * A_BAR ** (exp % 3)
        else:
            result = result * B_BAR**exp
    return result


def _in_closed_region(x, y, region):
    if region == ConeRegion.U:
        return x >= y >= 0 and x > 0
    return 0 <= x <= y and y > 0


def maps_into(matrix, rays, target: ConeRegion) -> bool:
    """True when every ray lands in the closed target cone, all with one common sign."""
    images = [matrix * ImmutableMatrix(ray) for ray in rays]
    for sign in (1, -1):
        if all(_in_closed_region(sign * v[0], sign * v[1], target) for v in images):
            return True
    return False


def _psl_syllables(pairs):
    # a^3 is ±I, so a-exponents live in {1, 2}
    w = Word.from_pairs(pairs)
    while any(s.gen == Generator.A and not 0 < s.exp < 3 for s in w.syllables):
        w = Word.from_pairs((g, e % 3 if g == Generator.A else e) for g, e in w.syllables)
    return list(w.syllables)


def _cyclic_reduce(syllables):
    """
    Cyclically reduced form of a positive word in PSL(2, Z): a-exponents mod 3,
    end syllables merged, and b a^2 b -> a applied around the cycle.
    """
    syllables = _psl_syllables(syllables)
    while True:
        while len(syllables) > 1 and syllables[0].gen == syllables[-1].gen:
            last = syllables.pop()
            syllables = _psl_syllables([(last.gen, last.exp)] + syllables)

        squares = [i for i, s in enumerate(syllables) if s.gen == Generator.A and s.exp == 2]
        if not squares or len(syllables) < 2:
            return syllables
        i = squares[0]
        # rotate so the word reads b^s a^2 ...
        syllables = syllables[i - 1 :] + syllables[: i - 1] if i else syllables[-1:] + syllables[:-1]
        if len(syllables) == 2:
            s = syllables[0].exp
            if s < 2:
                return syllables
            syllables = _psl_syllables([(Generator.B, s - 2), (Generator.A, 1)])
            continue
        b_before, b_after = syllables[0], syllables[2]
        pairs = [(Generator.B, b_before.exp - 1), (Generator.A, 1), (Generator.B, b_after.exp - 1)]
        syllables = _psl_syllables(pairs + syllables[3:])


@lru_cache(maxsize=1)
def _braid_context():
    return GroupContext.build(2)


def cone_certify_b3(w: Word, ctx: GroupContext = None):
    """
    Ping-pong certificate that w ≠ id in B3: a conjugate w' of w with
    w'(source) ⊂ target, checked on the integer rays spanning the cones.

    Returns (source, target), or None when w is conjugate to a power of
    s1 = a b, or when its image in PSL(2, Z) is torsion other than a
    conjugate of a or a^-1 (a, a^2, b a^2 b and a^2 b^2 all get certificates).
    """
    from app.utils.cone import Verdict, decide_sign

    if not w.is_positive():
        result = decide_sign(w, ctx or _braid_context())
        if result.verdict != Verdict.POSITIVE:
            return None
        w = result.witness

    syllables = _cyclic_reduce(w.syllables)
    if not syllables:
        return None

    if len(syllables) == 1:
        gen, exp = syllables[0]
        if gen == Generator.B:
            # b^k maps the closure of U ∪ V into V
            source_rays, source, target = ((1, 0), (0, 1)), ConeRegion.U, ConeRegion.V
        elif exp == 1:
            source_rays, source, target = _REGION_RAYS[ConeRegion.V], ConeRegion.V, ConeRegion.U
        else:
            source_rays, source, target = _REGION_RAYS[ConeRegion.U], ConeRegion.U, ConeRegion.V
        candidate = Word(tuple(syllables))
    else:
        if any(s.gen == Generator.A and s.exp != 1 for s in syllables):
            return None
        long_b = next((i for i, s in enumerate(syllables) if s.gen == Generator.B and s.exp >= 2), None)
        if long_b is None:
            logger.debug("%s is conjugate to a power of s1", w)
            return None
        split = syllables[long_b]
        rotated = (
            [Syllable(Generator.B, 1)]
            + syllables[long_b + 1 :]
            + syllables[:long_b]
            + [Syllable(Generator.B, split.exp - 1)]
        )
        candidate = Word.from_pairs(rotated)
        source_rays, source, target = _REGION_RAYS[ConeRegion.U], ConeRegion.U, ConeRegion.V

    if not maps_into(matrix_of(candidate), source_rays, target):
        logger.warning("cone certificate for %s failed on %s", w, candidate)
        return None
    return source, target
