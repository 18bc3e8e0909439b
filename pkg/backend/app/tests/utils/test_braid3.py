import pytest
from app.exceptions import RewriteCapExceeded
from app.utils.braid3 import (
    A_BAR,
    B_BAR,
    ConeRegion,
    ab_to_sigma,
    cone_certify_b3,
    dehornoy_reduce,
    is_d_positive,
    maps_into,
    matrix_of,
    sigma_to_ab,
)
from app.utils.hecke_oracle import oracle_equal, oracle_is_identity
from app.utils.words import EMPTY, Generator, Word, enumerate_reduced, invert, parse_word
from sympy import ImmutableMatrix


def sigma(text):
    return parse_word(text, alphabet="sigma")


def test_bridge_images():
    assert sigma_to_ab(sigma("s1")) == parse_word("a b")
    assert sigma_to_ab(sigma("s2^-2")) == parse_word("b^2")
    assert ab_to_sigma(parse_word("a")) == sigma("s1 s2")
    assert ab_to_sigma(parse_word("b^-1")) == sigma("s2")
    assert ab_to_sigma(parse_word("a^-1")) == sigma("s2^-1 s1^-1")


def test_bridge_round_trips_exactly():
    for w in enumerate_reduced(4):
        assert sigma_to_ab(ab_to_sigma(w)) == w
    for sw in enumerate_reduced(4, alphabet="sigma"):
        assert ab_to_sigma(sigma_to_ab(sw)) == sw


def test_braid_relation_holds_in_gamma2(ctx2):
    lhs = sigma_to_ab(sigma("s1 s2 s1"))
    rhs = sigma_to_ab(sigma("s2 s1 s2"))
    assert lhs == parse_word("a^2 b")
    assert oracle_equal(lhs, rhs, ctx2)


@pytest.mark.parametrize(
    "word, reduced",
    [
        ("s1 s2 s1^-1", "s2^-1 s1 s2"),
        ("s1^-1 s2 s1", "s2 s1 s2^-1"),
        ("s1 s2 s1 s2^-1 s1^-1 s2^-1", "1"),
        ("s2^3", "s2^3"),
        ("s1 s1 s2", "s1^2 s2"),
    ],
)
def test_dehornoy_reduce(word, reduced):
    assert dehornoy_reduce(sigma(word)) == sigma(reduced)


@pytest.mark.parametrize(
    "word, positive",
    [
        ("s1", True),
        ("s2", True),
        ("s2^-1", False),
        ("s1^-1 s2", False),
        ("s1 s2 s1^-1", True),
        ("s2 s1^-1", False),
        ("1", False),
    ],
)
def test_is_d_positive(word, positive):
    assert is_d_positive(sigma(word)) is positive


def test_reduction_preserves_the_element(ctx2):
    for sw in enumerate_reduced(4, alphabet="sigma"):
        reduced = dehornoy_reduce(sw)
        assert oracle_equal(sigma_to_ab(sw), sigma_to_ab(reduced), ctx2), sw
        assert reduced.is_empty == oracle_is_identity(sigma_to_ab(sw), ctx2)


def test_reduction_cap_is_a_tripwire():
    with pytest.raises(RewriteCapExceeded):
        dehornoy_reduce(sigma("s1 s2 s1^-1"), step_cap_factor=0)


def test_integer_anchors():
    minus_identity = -ImmutableMatrix.eye(2)
    assert A_BAR**3 == minus_identity
    assert B_BAR * A_BAR**2 * B_BAR == A_BAR
    assert matrix_of(parse_word("b a^2 b")) == A_BAR
    assert matrix_of(parse_word("a^-1")) == A_BAR**2


def test_maps_into():
    assert maps_into(B_BAR, ((1, 0), (0, 1)), ConeRegion.V)
    assert maps_into(A_BAR, ((1, 1), (0, 1)), ConeRegion.U)
    assert not maps_into(A_BAR, ((1, 0), (1, 1)), ConeRegion.U)


@pytest.mark.parametrize("k", range(1, 6))
def test_b_powers_map_everything_into_v(k):
    assert cone_certify_b3(Word.power(Generator.B, k)) == (ConeRegion.U, ConeRegion.V)


@pytest.mark.parametrize(
    "word, certificate",
    [
        ("a", (ConeRegion.V, ConeRegion.U)),
        ("a^2", (ConeRegion.U, ConeRegion.V)),
        ("a b^2", (ConeRegion.U, ConeRegion.V)),
        ("b^2 a b^3 a", (ConeRegion.U, ConeRegion.V)),
        ("a b", None),
        ("a^3", None),
        ("1", None),
    ],
)
def test_cone_certify(word, certificate):
    assert cone_certify_b3(parse_word(word)) == certificate


def test_certificates_imply_non_identity(ctx2):
    for w in enumerate_reduced(5):
        if cone_certify_b3(w, ctx2) is not None:
            assert not oracle_is_identity(w, ctx2), w


def test_certified_conjugates_are_never_empty(ctx2):
    assert cone_certify_b3(invert(parse_word("b^-2")), ctx2) == (ConeRegion.U, ConeRegion.V)
    assert cone_certify_b3(EMPTY, ctx2) is None


@pytest.mark.parametrize("word", ["a", "a^2", "b a^2 b", "a^2 b^2"])
def test_elliptic_conjugates_of_a_are_certified(word):
    assert abs(matrix_of(parse_word(word)).trace()) == 1
    assert cone_certify_b3(parse_word(word)) is not None
