import pytest
from app.exceptions import RewriteCapExceeded
from app.utils.cone import (
    Comparison,
    ReductionState,
    SignResult,
    Verdict,
    cmp_dd,
    decide_sign,
    expand_handle,
    klein_decide,
    step_cascade,
)
from app.utils.hecke_oracle import oracle_equal, oracle_is_identity
from app.utils.normal_form import nf_to_word, to_normal_form
from app.utils.words import EMPTY, Generator, GroupContext, Word, enumerate_reduced, invert, parse_word
from hypothesis import given, settings
from hypothesis import strategies as st

words = st.lists(
    st.tuples(st.sampled_from([Generator.A, Generator.B]), st.integers(-4, 4).filter(bool)),
    max_size=8,
).map(Word.from_pairs)


def test_mirror():
    assert Verdict.POSITIVE.mirror() == Verdict.NEGATIVE
    assert Verdict.NEGATIVE.mirror() == Verdict.POSITIVE
    assert Verdict.IDENTITY.mirror() == Verdict.IDENTITY


@pytest.mark.parametrize(
    "word, verdict, witness",
    [
        ("1", Verdict.IDENTITY, "1"),
        ("a", Verdict.POSITIVE, "a"),
        ("b", Verdict.POSITIVE, "b"),
        ("a^3", Verdict.POSITIVE, "a^3"),
        ("a^-3", Verdict.NEGATIVE, "a^-3"),
        ("a b a^-1", Verdict.NEGATIVE, "a^-1 b^-1"),
        ("a^-1 b a^2", Verdict.NEGATIVE, "b^-1"),
        ("b a^2 b a^-1", Verdict.IDENTITY, "1"),
    ],
)
def test_decide_sign_examples_n2(ctx2, word, verdict, witness):
    result = decide_sign(parse_word(word), ctx2)
    assert result.verdict == verdict
    assert result.witness == parse_word(witness)


def test_b_inverse_is_negative(ctx2):
    result = decide_sign(parse_word("b^-1"), ctx2)
    assert result.verdict == Verdict.NEGATIVE
    assert result.witness.is_negative()
    assert oracle_equal(result.witness, parse_word("b^-1"), ctx2)


def test_is_one_signed():
    assert SignResult(Verdict.POSITIVE, parse_word("a b")).is_one_signed()
    assert not SignResult(Verdict.POSITIVE, parse_word("a b^-1")).is_one_signed()
    assert SignResult(Verdict.IDENTITY, EMPTY).is_one_signed()
    assert not SignResult(Verdict.IDENTITY, parse_word("a")).is_one_signed()


def test_trichotomy_on_ball(ctx):
    for w in enumerate_reduced(5):
        result = decide_sign(w, ctx)
        assert result.is_one_signed(), w
        assert oracle_equal(w, result.witness, ctx), w
        assert decide_sign(invert(w), ctx).verdict == result.verdict.mirror(), w
        assert (result.verdict == Verdict.IDENTITY) == oracle_is_identity(w, ctx), w


@pytest.mark.slow
def test_trichotomy_on_ball_length_eight(ctx):
    for w in enumerate_reduced(8):
        result = decide_sign(w, ctx)
        assert result.is_one_signed()
        assert oracle_equal(w, result.witness, ctx)


@settings(max_examples=200, deadline=None)
@given(w=words, n=st.sampled_from([2, 3, 4]))
def test_witness_is_the_same_element(w, n):
    ctx = GroupContext.build(n)
    result = decide_sign(w, ctx)
    assert result.is_one_signed()
    assert oracle_equal(w, result.witness, ctx)


def test_klein_closed_form_agrees(ctx1):
    for w in enumerate_reduced(6):
        assert klein_decide(w) == decide_sign(w, ctx1).verdict, w


@pytest.mark.parametrize(
    "word, verdict",
    [
        ("1", Verdict.IDENTITY),
        ("b a b a^-1", Verdict.IDENTITY),
        ("a b^-5", Verdict.POSITIVE),
        ("a^-1 b^3", Verdict.NEGATIVE),
        ("b^-1 a^2", Verdict.POSITIVE),
        ("a^2 b^-1 a^-2", Verdict.NEGATIVE),
    ],
)
def test_klein_decide_examples(word, verdict):
    assert klein_decide(parse_word(word)) == verdict


def test_klein_decide_rejects_sigma_words():
    with pytest.raises(ValueError):
        klein_decide(parse_word("s1 s2", alphabet="sigma"))


def test_expand_handle(ctx2, ctx3):
    assert expand_handle(1, ctx2) == parse_word("a^-1 b^-1")
    assert expand_handle(2, ctx3) == parse_word("a^-2 b^-1 a^-2 b^-1")
    with pytest.raises(ValueError):
        expand_handle(0, ctx2)


def test_handle_identity_holds(ctx):
    a = parse_word("a")
    for j in range(1, 6):
        lhs = a * Word.power(Generator.B, j) * invert(a)
        assert oracle_equal(lhs, expand_handle(j, ctx), ctx)


def test_cmp_dd(ctx2):
    a, b = parse_word("a"), parse_word("b")
    assert cmp_dd(EMPTY, a, ctx2) == Comparison.LESS
    assert cmp_dd(b, b, ctx2) == Comparison.EQUAL
    assert cmp_dd(a, b, ctx2) == Comparison.GREATER
    assert cmp_dd(parse_word("b a^2"), a, ctx2) == Comparison.LESS


def test_cascade_cap_is_a_tripwire():
    ctx = GroupContext.build(2, step_cap_factor=0)
    with pytest.raises(RewriteCapExceeded):
        decide_sign(parse_word("a^-1"), ctx)


def test_cascade_keeps_the_element_at_every_move(ctx):
    moves = set()
    for w in enumerate_reduced(5):
        nf = to_normal_form(w, ctx)
        if nf.ell >= 0:
            continue
        target = nf_to_word(nf, ctx)
        state = ReductionState(P=nf.prefix, ell=nf.ell)
        while not state.P.is_empty:
            state, move = step_cascade(state, ctx)
            moves.add(move)
            assert oracle_equal(state.as_word(ctx), target, ctx), (w, move, str(state))
            assert state.ell <= 0, (w, str(state))
            assert state.N.is_empty or state.N.is_negative(), (w, str(state))
            assert state.P.is_empty or state.P.is_positive(), (w, str(state))
    assert {"feed", "merge"} <= moves
