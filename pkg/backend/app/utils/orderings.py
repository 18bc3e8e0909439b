# app/utils/orderings.py

import logging
from dataclasses import dataclass, field
from enum import Enum
from functools import cmp_to_key
from typing import Optional

from app.utils.cone import Comparison, Verdict, decide_sign
from app.utils.hecke_oracle import b_power_of, element_key, oracle_equal
from app.utils.words import (
    EMPTY,
    Generator,
    GroupContext,
    Word,
    concat,
    enumerate_reduced,
    invert,
    parse_word,
)

logger = logging.getLogger(__name__)

MINIMUM_RADIUS = 3


class OrderKind(str, Enum):
    DD = "dd"
    DD_REVERSED = "ddrev"
    DEHORNOY_LIKE = "dlike"
    CONJUGATED = "conj"


@dataclass(frozen=True)
class OrderingSpec:
    """
    A left-ordering of Γn given by its positive cone.
    CONJUGATED orders x ≻ id iff g x g^-1 ≻ id for the base ordering.
    """

    kind: OrderKind
    base: Optional["OrderingSpec"] = None
    conjugator: Word = field(default=EMPTY)

    def __post_init__(self):
        if self.kind == OrderKind.CONJUGATED:
            if self.base is None:
                raise ValueError("a conjugated ordering needs a base ordering")
            if self.base.kind == OrderKind.CONJUGATED:
                raise ValueError("conjugated orderings nest at most one level deep")
        elif self.base is not None:
            raise ValueError(f"{self.kind.value} takes no base ordering")

    @classmethod
    def dd(cls):
        return cls(OrderKind.DD)

    @classmethod
    def dd_reversed(cls):
        return cls(OrderKind.DD_REVERSED)

    @classmethod
    def dehornoy_like(cls):
        return cls(OrderKind.DEHORNOY_LIKE)

    @classmethod
    def conjugated(cls, base, conjugator):
        return cls(OrderKind.CONJUGATED, base=base, conjugator=conjugator)

    def __str__(self):
        if self.kind == OrderKind.CONJUGATED:
            return f"conj({self.base}, {self.conjugator})"
        return self.kind.value


def is_positive(w: Word, spec: OrderingSpec, ctx: GroupContext) -> bool:
    if spec.kind == OrderKind.DD:
        return decide_sign(w, ctx).verdict == Verdict.POSITIVE
    if spec.kind == OrderKind.DD_REVERSED:
        return decide_sign(w, ctx).verdict == Verdict.NEGATIVE
    if spec.kind == OrderKind.DEHORNOY_LIKE:
        # <b> is ordered backwards, everything else as in DD
        k = b_power_of(w, ctx)
        if k is not None:
            return k <= -1
        return decide_sign(w, ctx).verdict == Verdict.POSITIVE
    g = spec.conjugator
    return is_positive(concat(concat(g, w), invert(g)), spec.base, ctx)


def cmp(u: Word, v: Word, spec: OrderingSpec, ctx: GroupContext) -> Comparison:
    difference = concat(invert(u), v)
    if is_positive(difference, spec, ctx):
        return Comparison.LESS
    if is_positive(invert(difference), spec, ctx):
        return Comparison.GREATER
    return Comparison.EQUAL


def positives_in_ball(spec: OrderingSpec, ctx: GroupContext, max_len: int):
    """Positive elements of the ball, one representative per group element."""
    seen = set()
    for w in enumerate_reduced(max_len):
        key = element_key(w, ctx)
        if key in seen:
            continue
        seen.add(key)
        if is_positive(w, spec, ctx):
            yield w


def smallest_positive_in_ball(spec: OrderingSpec, ctx: GroupContext, max_len: int) -> Word:
    if max_len < 1:
        raise ValueError("max_len must be >= 1")
    smallest = None
    for w in positives_in_ball(spec, ctx, max_len):
        if smallest is None or cmp(w, smallest, spec, ctx) == Comparison.LESS:
            smallest = w
    logger.info("smallest %s-positive in ball %d: %s", spec, max_len, smallest)
    return smallest


def sort_words(words, spec: OrderingSpec, ctx: GroupContext):
    """Ascending order of words; group-equal words keep their input order."""
    order = {Comparison.LESS: -1, Comparison.EQUAL: 0, Comparison.GREATER: 1}
    return sorted(words, key=cmp_to_key(lambda u, v: order[cmp(u, v, spec, ctx)]))


@dataclass
class ConvexityReport:
    n: int
    max_len: int
    checked: int = 0
    between: int = 0
    violations: list = field(default_factory=list)

    @property
    def passed(self):
        return not self.violations


def convexity_check(ctx: GroupContext, max_len: int) -> ConvexityReport:
    """
    <b> is DD-convex: any c with b^r ≺ c ≺ b^s lies in <b>. The b-powers in the
    ball are a chain, so it suffices to test b^-L ≺ c ≺ b^L.
    """
    report = ConvexityReport(n=ctx.n, max_len=max_len)
    spec = OrderingSpec.dd()
    lower = Word.power(Generator.B, -max_len)
    upper = Word.power(Generator.B, max_len)
    for c in enumerate_reduced(max_len):
        report.checked += 1
        if cmp(lower, c, spec, ctx) != Comparison.LESS:
            continue
        if cmp(c, upper, spec, ctx) != Comparison.LESS:
            continue
        report.between += 1
        if b_power_of(c, ctx) is None:
            logger.warning("convexity violation: %s lies between b^%d and b^%d", c, -max_len, max_len)
            report.violations.append(
                {"word": c, "check": "convexity", "detail": f"between b^{-max_len} and b^{max_len}"}
            )
    return report


@dataclass
class ConvergenceRow:
    element: Word
    cells: list
    leading_b: int
    bound: int
    stable_from: Optional[int]

    @property
    def stabilized(self):
        return self.stable_from is not None and self.stable_from <= self.bound


@dataclass
class ConvergenceReport:
    n: int
    k_max: int
    rows: list
    smallest_plain: Word
    smallest_conjugated: Word
    minima_distinct: bool

    @property
    def unstable(self):
        return [row.element for row in self.rows if not row.stabilized]


def conjugated_by_bka(ctx: GroupContext, k: int) -> OrderingSpec:
    """The ordering with positive cone (b^k a)^-1 P' (b^k a)."""
    bka = Word.from_pairs([(Generator.B, k), (Generator.A, 1)])
    return OrderingSpec.conjugated(OrderingSpec.dehornoy_like(), invert(bka))


def _leading_b_exponent(c: Word, ctx: GroupContext) -> int:
    """n0 of the positive word b^n0 w̄ representing c; 0 inside <b>."""
    if b_power_of(c, ctx) is not None:
        return 0
    result = decide_sign(c, ctx)
    if result.verdict == Verdict.POSITIVE and result.witness.first.gen == Generator.B:
        return result.witness.first.exp
    return 0


def convergence_experiment(ctx: GroupContext, elements, k_max: int) -> ConvergenceReport:
    """
    For each positive c and 1 <= k <= k_max, whether c is positive for the
    b^k a conjugate of the Dehornoy-like ordering. Each row must be all-true
    from k = n0 + 1 on, n0 being the leading b-exponent of c's positive witness.
    """
    dlike = OrderingSpec.dehornoy_like()
    rows = []
    for c in elements:
        if not is_positive(c, dlike, ctx):
            logger.warning("%s is not positive for the Dehornoy-like ordering", c)
        cells = [is_positive(c, conjugated_by_bka(ctx, k), ctx) for k in range(1, k_max + 1)]
        stable_from = None
        for k in range(k_max, 0, -1):
            if not cells[k - 1]:
                break
            stable_from = k
        n0 = _leading_b_exponent(c, ctx)
        rows.append(ConvergenceRow(c, cells, leading_b=n0, bound=n0 + 1, stable_from=stable_from))
        logger.info("convergence row %s: %s", c, cells)

    # the cone (b a)^-1 P (b a) has smallest element a^-1 b^-1 a, inside the radius-3 ball
    smallest_plain = smallest_positive_in_ball(dlike, ctx, MINIMUM_RADIUS)
    smallest_conjugated = smallest_positive_in_ball(
        OrderingSpec.conjugated(dlike, parse_word("b a")), ctx, MINIMUM_RADIUS
    )
    report = ConvergenceReport(
        n=ctx.n,
        k_max=k_max,
        rows=rows,
        smallest_plain=smallest_plain,
        smallest_conjugated=smallest_conjugated,
        minima_distinct=not oracle_equal(smallest_conjugated, smallest_plain, ctx),
    )
    for element in report.unstable:
        logger.warning("row %s did not stabilize within k <= %d", element, k_max)
    return report


@dataclass(frozen=True)
class NonConradianWitness:
    ordering: str
    f: Word
    g: Word
    product: Word
    f_positive: bool
    g_positive: bool
    product_below: bool

    @property
    def holds(self):
        return self.f_positive and self.g_positive and self.product_below


def non_conradian_witnesses(ctx: GroupContext):
    """
    Pairs f, g ≻ id with f g^k ≺ g. For DD: b a^n ≺ a. For the Dehornoy-like
    ordering: (ab^2)((ab)^2)^2 ≺ (ab)^2 with ab, ab^2 positive (n >= 2).
    """
    dd = OrderingSpec.dd()
    a = Word.power(Generator.A, 1)
    b = Word.power(Generator.B, 1)
    witnesses = [
        NonConradianWitness(
            ordering=str(dd),
            f=b,
            g=a,
            product=b * Word.power(Generator.A, ctx.n),
            f_positive=is_positive(b, dd, ctx),
            g_positive=is_positive(a, dd, ctx),
            product_below=cmp(b * Word.power(Generator.A, ctx.n), a, dd, ctx) == Comparison.LESS,
        )
    ]
    if ctx.n >= 2:
        dlike = OrderingSpec.dehornoy_like()
        ab = parse_word("a b")
        ab2 = parse_word("a b^2")
        g = ab**2
        product = ab2 * g**2
        witnesses.append(
            NonConradianWitness(
                ordering=str(dlike),
                f=ab2,
                g=g,
                product=product,
                f_positive=is_positive(ab2, dlike, ctx),
                g_positive=is_positive(g, dlike, ctx),
                product_below=cmp(product, g, dlike, ctx) == Comparison.LESS,
            )
        )
    return witnesses
