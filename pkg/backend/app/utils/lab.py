# app/utils/lab.py

import logging
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from app.exceptions import DefectError, ScopeError
from app.utils.braid3 import dehornoy_reduce, is_d_positive, sigma_to_ab
from app.utils.cone import Verdict, decide_sign, expand_handle, klein_decide
from app.utils.hecke_oracle import element_key, oracle_equal, oracle_is_identity
from app.utils.orderings import OrderingSpec, convexity_check, is_positive
from app.utils.words import (
    ALPHABETS,
    EMPTY,
    Generator,
    GroupContext,
    Syllable,
    Word,
    enumerate_reduced,
    invert,
    parse_word,
)

logger = logging.getLogger(__name__)

SUITE_KINDS = ("trichotomy", "identities", "closure", "convexity", "dehornoy")

MAX_CAYLEY_RADIUS = 6


@dataclass
class SuiteReport:
    n: int
    max_len: int
    kind: str = "trichotomy"
    counts: Counter = field(default_factory=Counter)
    violations: list = field(default_factory=list)
    scanned: int = 0
    wall_time: float = 0.0

    @property
    def passed(self):
        return not self.violations

    def add_violation(self, word, check, detail=""):
        logger.warning("%s check failed on %s: %s", check, word, detail)
        self.violations.append({"word": word, "check": check, "detail": detail})

    def merge(self, other):
        self.counts.update(other.counts)
        self.violations.extend(other.violations)
        self.scanned += other.scanned
        return self


def _partition_words(max_len, first, alphabet="ab"):
    """Words of the ball whose first letter is `first` (None selects the empty word)."""
    for w in enumerate_reduced(max_len, alphabet=alphabet):
        head = next(w.letters(), None)
        if head == first:
            yield w


def _partitions(alphabet="ab"):
    letters = [None]
    for gen in ALPHABETS[alphabet]:
        letters += [Syllable(gen, 1), Syllable(gen, -1)]
    return letters


def _check_trichotomy(w, ctx, report):
    try:
        result = decide_sign(w, ctx)
        mirrored = decide_sign(invert(w), ctx)
    except DefectError as exc:
        report.add_violation(w, "defect", str(exc))
        return

    report.counts[result.verdict.value] += 1
    if not result.is_one_signed():
        report.add_violation(w, "witness-one-signed", f"{result.verdict.value} witness {result.witness}")
    if mirrored.verdict != result.verdict.mirror():
        report.add_violation(w, "mirror", f"{result.verdict.value} but inverse is {mirrored.verdict.value}")
    if not oracle_equal(w, result.witness, ctx):
        report.add_violation(w, "witness-oracle", f"witness {result.witness} is a different element")
    if (result.verdict == Verdict.IDENTITY) != oracle_is_identity(w, ctx):
        report.add_violation(w, "oracle-identity", f"verdict {result.verdict.value}")
    if ctx.n == 1 and klein_decide(w) != result.verdict:
        report.add_violation(w, "klein-closed-form", f"closed form says {klein_decide(w).value}")


def _check_dehornoy(sw, ctx, report):
    bridged = sigma_to_ab(sw)
    try:
        d_positive = is_d_positive(sw)
        reduced = dehornoy_reduce(sw)
        dlike_positive = is_positive(bridged, OrderingSpec.dehornoy_like(), ctx)
    except DefectError as exc:
        report.add_violation(sw, "defect", str(exc))
        return
    report.counts["d_positive" if d_positive else "not_d_positive"] += 1
    if d_positive != dlike_positive:
        report.add_violation(sw, "dehornoy-equivalence", f"D-positive={d_positive}, dlike={dlike_positive}")
    if reduced.is_empty != oracle_is_identity(bridged, ctx):
        report.add_violation(sw, "bridge", f"reduces to {reduced}")


_PARTITION_CHECKS = {
    "trichotomy": ("ab", _check_trichotomy),
    "dehornoy": ("sigma", _check_dehornoy),
}


def _run_partition(kind, n, max_len, first, max_q=64, step_cap_factor=10):
    ctx = GroupContext.build(n, max_q=max_q, step_cap_factor=step_cap_factor)
    alphabet, check = _PARTITION_CHECKS[kind]
    report = SuiteReport(n=n, max_len=max_len, kind=kind)
    for w in _partition_words(max_len, first, alphabet):
        report.scanned += 1
        check(w, ctx, report)
    return report


def _run_partitioned(kind, ctx, max_len, jobs):
    """
    Scan the ball one first-letter partition at a time. Partial reports merge
    in partition order whatever the number of workers.
    """
    alphabet, _ = _PARTITION_CHECKS[kind]
    firsts = _partitions(alphabet)
    args = [(kind, ctx.n, max_len, first, ctx.q, ctx.step_cap_factor) for first in firsts]

    started = time.perf_counter()
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            partials = list(pool.map(_run_partition, *zip(*args)))
    else:
        partials = [_run_partition(*arg) for arg in args]

    report = SuiteReport(n=ctx.n, max_len=max_len, kind=kind)
    for partial in partials:
        report.merge(partial)
    report.wall_time = time.perf_counter() - started
    logger.info(
        "%s suite n=%d max_len=%d: %d scanned, %d violations",
        kind,
        ctx.n,
        max_len,
        report.scanned,
        len(report.violations),
    )
    return report


def run_trichotomy_suite(n, max_len, ctx=None, jobs=1):
    ctx = ctx or GroupContext.build(n)
    return _run_partitioned("trichotomy", ctx, max_len, jobs)


def run_dehornoy_suite(max_len, ctx=None, jobs=1):
    """is_d_positive against the Dehornoy-like ordering of Γ2 on every σ-word of the ball."""
    ctx = ctx or GroupContext.build(2)
    if ctx.n != 2:
        raise ScopeError("the Dehornoy comparison lives in B3 = Γ2")
    return _run_partitioned("dehornoy", ctx, max_len, jobs)


def run_closure_suite(n, max_len, ctx=None):
    """Products of positive-verdict words u, v with |u| + |v| <= max_len stay positive."""
    ctx = ctx or GroupContext.build(n)
    started = time.perf_counter()
    report = SuiteReport(n=n, max_len=max_len, kind="closure")

    positives = [
        w
        for w in enumerate_reduced(max(max_len - 1, 0))
        if not w.is_empty and decide_sign(w, ctx).verdict == Verdict.POSITIVE
    ]
    for u in positives:
        for v in positives:
            if u.letter_length + v.letter_length > max_len:
                continue
            report.scanned += 1
            verdict = decide_sign(u * v, ctx).verdict
            report.counts[verdict.value] += 1
            if verdict != Verdict.POSITIVE:
                report.add_violation(u * v, "closure", f"{u} · {v} is {verdict.value}")
    report.wall_time = time.perf_counter() - started
    return report


def _identities(ctx):
    n = ctx.n
    a, b = Word.power(Generator.A, 1), Word.power(Generator.B, 1)
    a_inv, b_inv = invert(a), invert(b)
    delta = ctx.delta

    yield "delta-central-a", a * delta, delta * a
    yield "delta-central-b", b * delta, delta * b
    yield "relator", b * Word.power(Generator.A, n) * b, a
    for k in range(1, 6):
        yield f"handle-{k}", a * Word.power(Generator.B, k) * a_inv, expand_handle(k, ctx)
    for r in range(1, 6):
        lhs = a_inv * Word.power(Generator.B, -r) * a
        yield f"conjugation-{r}", lhs, (Word.power(Generator.A, n - 1) * b) ** r
    yield "b-inverse", a_inv * b * Word.power(Generator.A, n), b_inv
    yield "conjugate-b", a_inv * b * a, b_inv * Word.power(Generator.A, -(n - 1))
    if n >= 2:
        ab = a * b
        lhs = ab**-2 * (a * b * b) * ab**4
        m = -(n - 2)
        rhs = Word.from_pairs(
            [
                (Generator.B, -2),
                (Generator.A, m),
                (Generator.B, -1),
                (Generator.A, m),
                (Generator.B, -1),
                (Generator.A, m),
                (Generator.B, -1),
                (Generator.A, -(n - 1)),
                (Generator.B, 1),
            ]
        )
        yield "ab-expansion", lhs, rhs


def run_identity_suite(n, ctx=None):
    """Every identity is checked twice: by the oracle and by the sign procedure."""
    ctx = ctx or GroupContext.build(n)
    started = time.perf_counter()
    report = SuiteReport(n=n, max_len=0, kind="identities")
    for name, lhs, rhs in _identities(ctx):
        report.scanned += 1
        difference = lhs * invert(rhs)
        holds = oracle_is_identity(difference, ctx)
        report.counts["holds" if holds else "fails"] += 1
        if not holds:
            report.add_violation(difference, name, f"{lhs} != {rhs}")
        verdict = decide_sign(difference, ctx).verdict
        if verdict != Verdict.IDENTITY:
            report.add_violation(difference, f"{name}-sign", f"sign procedure says {verdict.value}")
    report.wall_time = time.perf_counter() - started
    return report


def run_convexity_suite(n, max_len, ctx=None):
    ctx = ctx or GroupContext.build(n)
    started = time.perf_counter()
    convexity = convexity_check(ctx, max_len)
    report = SuiteReport(n=n, max_len=max_len, kind="convexity", scanned=convexity.checked)
    report.counts["between"] = convexity.between
    report.counts["outside"] = convexity.checked - convexity.between
    report.violations.extend(convexity.violations)
    report.wall_time = time.perf_counter() - started
    return report


def run_suite(kind, n, max_len, ctx=None, jobs=1):
    if kind == "trichotomy":
        return run_trichotomy_suite(n, max_len, ctx=ctx, jobs=jobs)
    if kind == "identities":
        return run_identity_suite(n, ctx=ctx)
    if kind == "closure":
        return run_closure_suite(n, max_len, ctx=ctx)
    if kind == "convexity":
        return run_convexity_suite(n, max_len, ctx=ctx)
    if kind == "dehornoy":
        return run_dehornoy_suite(max_len, ctx=ctx, jobs=jobs)
    raise ValueError(f"unknown suite {kind!r}")


def property_s_probe(ctx, max_len):
    """
    How many conjugates g s1 g^-1 and g s2 g^-1 (s1 = ab, s2 = b^-1) are
    positive for the Dehornoy-like ordering. Counts only; nothing is asserted.
    """
    started = time.perf_counter()
    report = SuiteReport(n=ctx.n, max_len=max_len, kind="probe")
    dlike = OrderingSpec.dehornoy_like()
    conjugated = {"s1": parse_word("a b"), "s2": parse_word("b^-1")}
    for g in enumerate_reduced(max_len):
        report.scanned += 1
        for name, x in conjugated.items():
            positive = is_positive(g * x * invert(g), dlike, ctx)
            report.counts[f"{name}_{'positive' if positive else 'not_positive'}"] += 1
    report.wall_time = time.perf_counter() - started
    return report


def _gamma_mn_redex(syllables, m):
    # b^-s a^m b^-t with s, t >= 1
    for i in range(1, len(syllables) - 1):
        before, middle, after = syllables[i - 1], syllables[i], syllables[i + 1]
        if middle.gen == Generator.A and middle.exp == m and before.exp < 0 and after.exp < 0:
            return i
    return None


def verify_gamma_mn_identity(m, n, cap=100):
    """
    In <a, b : b a^n b = a^m>, check by free reduction and the rewrite
    b^-1 a^m b^-1 -> a^n that (b a^(n-1))^-1 a^(m+n-1) (b a^(n-1))^-1 = a.
    """
    if m < 1 or n < 1:
        raise ScopeError("m and n must be >= 1")
    target = Word.power(Generator.A, 1)
    c_inv = invert(Word.from_pairs([(Generator.B, 1), (Generator.A, n - 1)]))
    current = c_inv * Word.power(Generator.A, m + n - 1) * c_inv

    for _ in range(cap):
        if current == target:
            return True
        syllables = current.syllables
        i = _gamma_mn_redex(syllables, m)
        if i is None:
            break
        before, after = syllables[i - 1], syllables[i + 1]
        pairs = list(syllables[: i - 1])
        pairs += [(Generator.B, before.exp + 1), (Generator.A, n), (Generator.B, after.exp + 1)]
        pairs += syllables[i + 2 :]
        current = Word.from_pairs(pairs)
    logger.warning("Γ(%d,%d) rewrite stopped at %s", m, n, current)
    return current == target


@dataclass
class CayleyBall:
    n: int
    radius: int
    nodes: list = field(default_factory=list)
    edges: list = field(default_factory=list)


_CAYLEY_LETTERS = (
    Syllable(Generator.A, 1),
    Syllable(Generator.A, -1),
    Syllable(Generator.B, 1),
    Syllable(Generator.B, -1),
)


def build_cayley_ball(ctx, radius):
    """
    Breadth-first ball of the Cayley graph, one node per group element. An edge
    {from, to, generator} means to = from · generator; direction records the
    sign of the letter that first reached it.
    """
    if radius < 0:
        raise ScopeError("radius must be >= 0")
    if radius > MAX_CAYLEY_RADIUS:
        raise ScopeError(f"radius {radius} exceeds {MAX_CAYLEY_RADIUS}")

    ball = CayleyBall(n=ctx.n, radius=radius)
    index = {element_key(EMPTY, ctx): 0}
    words, depth = [EMPTY], [0]
    seen_edges = set()

    position = 0
    while position < len(words):
        node = words[position]
        for letter in _CAYLEY_LETTERS:
            neighbour = node * Word((letter,))
            key = element_key(neighbour, ctx)
            if key not in index:
                if depth[position] == radius:
                    continue
                index[key] = len(words)
                words.append(neighbour)
                depth.append(depth[position] + 1)
            target = index[key]
            source, dest = (position, target) if letter.exp > 0 else (target, position)
            edge_key = (source, dest, letter.gen)
            if edge_key in seen_edges:
                continue
            seen_edges.add(edge_key)
            ball.edges.append(
                {
                    "from": source,
                    "to": dest,
                    "generator": letter.gen,
                    "direction": letter.exp,
                }
            )
        position += 1

    ball.nodes = [{"word": w, "verdict": decide_sign(w, ctx).verdict} for w in words]
    logger.info("Cayley ball n=%d radius=%d: %d nodes, %d edges", ctx.n, radius, len(ball.nodes), len(ball.edges))
    return ball


def cayley_to_dot(ball: CayleyBall) -> str:
    import networkx as nx

    graph = nx.MultiDiGraph(name=f"gamma_{ball.n}_ball_{ball.radius}")
    for i, node in enumerate(ball.nodes):
        attrs = {"label": str(node["word"]), "verdict": node["verdict"].value}
        if node["verdict"] == Verdict.POSITIVE:
            attrs.update(style="filled", fillcolor="black", fontcolor="white")
        graph.add_node(i, **attrs)
    for edge in ball.edges:
        name = "a" if edge["generator"] == Generator.A else "b"
        graph.add_edge(edge["from"], edge["to"], label=name)
    return nx.nx_pydot.to_pydot(graph).to_string()


def export_cayley_ball(n, radius, format="json", ctx=None):
    ctx = ctx or GroupContext.build(n)
    ball = build_cayley_ball(ctx, radius)
    if format == "dot":
        return cayley_to_dot(ball)
    if format == "json":
        from app.serializers.cayley_serializer import CayleyBallSerializer
        from app.serializers.rendering import render_json

        return render_json(CayleyBallSerializer(ball).data)
    raise ValueError(f"unknown format {format!r}")
