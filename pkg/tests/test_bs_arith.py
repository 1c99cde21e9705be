import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from caianiello.bs_arith import (
    BSCode,
    BSError,
    MAX_WIDTH,
    all_codes,
    bs_increment,
    code_value,
    codes_identical,
    format_code,
    increment_planes,
    make_code,
    parse_code,
    stage_one,
    stage_two,
    truncate,
    zero_code,
)


def P(*pairs):
    """Code from pairs listed most significant first."""
    return BSCode.from_msd_pairs(pairs)


def codes(max_width=8):
    return st.integers(1, max_width).flatmap(
        lambda w: st.builds(
            lambda p, m: make_code(w, p, m),
            st.integers(0, (1 << w) - 1),
            st.integers(0, (1 << w) - 1),
        )
    )


# value

def test_value_examples():
    assert code_value(zero_code(3)) == 0
    assert code_value(P((1, 0), (0, 1), (1, 0))) == 3
    assert code_value(P((0, 0), (1, 0), (1, 1))) == 2


@given(codes())
def test_value_range(c):
    assert abs(code_value(c)) <= 2 ** c.width - 1


def test_value_matches_digit_sum():
    for c in all_codes(4):
        assert code_value(c) == sum(d.value * 2 ** i for i, d in enumerate(c.digits))


# identity

def test_identity_examples():
    assert codes_identical(P((0, 0)), P((0, 0)))
    a, b = P((1, 1), (1, 1)), P((0, 0), (0, 0))
    assert not codes_identical(a, b)
    assert code_value(a) == code_value(b) == 0


def test_identity_width_mismatch():
    with pytest.raises(BSError):
        codes_identical(zero_code(2), zero_code(3))


def test_identity_is_equivalence_and_implies_value():
    cs = list(all_codes(2))
    for a, b in itertools.product(cs, repeat=2):
        same = codes_identical(a, b)
        assert same == codes_identical(b, a)
        assert same == (a == b)
        if same:
            assert code_value(a) == code_value(b)
    for a, b, c in itertools.product(cs[:6], repeat=3):
        if codes_identical(a, b) and codes_identical(b, c):
            assert codes_identical(a, c)


# stage one / stage two

def test_stage_one_examples():
    s = stage_one(P((1, 1), (1, 1)))
    assert s.d_prime_bits == (0, 0) and s.d_second_bits == (0, 0)
    s = stage_one(P((1, 0)))
    assert s.d_prime_bits == (1,) and s.d_second_bits == (0,)
    s = stage_one(P((0, 1), (1, 0)))
    assert s.d_prime_bits == (1, 0) and s.d_second_bits == (0, 1)


def test_stage_one_exclusion():
    for c in all_codes(4):
        s = stage_one(c)
        assert s.d_prime & s.d_second == 0


@pytest.mark.parametrize("width", range(1, 7))
def test_or_form_equals_xor_form(width):
    for c in all_codes(width):
        assert stage_two(stage_one(c)) == bs_increment(c)


# increment

def test_increment_examples():
    assert bs_increment(P((0, 0), (1, 1), (1, 1))) == P((0, 0), (0, 0), (0, 0), (1, 0))
    assert bs_increment(P((0, 0))) == P((0, 0), (1, 0))


def test_increment_exhaustive_width4():
    cs = list(all_codes(4))
    assert len(cs) == 256
    for c in cs:
        assert code_value(bs_increment(c)) == code_value(c) + 1


@given(codes(MAX_WIDTH - 1))
def test_increment_adds_one(c):
    s = bs_increment(c)
    assert s.width == c.width + 1
    assert code_value(s) == code_value(c) + 1
    assert s.plus & 1 == 1
    assert (s.minus >> c.width) & 1 == 0


@pytest.mark.parametrize("width", range(1, 7))
def test_increment_locality(width):
    # changing input digit j only touches output digits j and j+1
    for c in all_codes(width):
        base = bs_increment(c).digits
        for j in range(width):
            for p, m in itertools.product((0, 1), repeat=2):
                plus = (c.plus & ~(1 << j)) | (p << j)
                minus = (c.minus & ~(1 << j)) | (m << j)
                out = bs_increment(make_code(width, plus, minus)).digits
                changed = {i for i in range(width + 1) if out[i] != base[i]}
                assert changed <= {j, j + 1}


def test_array_planes_match_scalar_increment():
    plus, minus = np.divmod(np.arange(256), 16)
    sp, sm = increment_planes(plus, minus)
    for c, p, m in zip(all_codes(4), sp, sm):
        assert bs_increment(c) == BSCode(5, int(p), int(m))


def test_increment_rejects_max_width():
    with pytest.raises(BSError):
        bs_increment(zero_code(MAX_WIDTH))


# truncate

def test_truncate_examples():
    assert truncate(P((1, 0), (0, 0))) == P((0, 0))
    assert truncate(P((0, 0), (0, 0), (0, 0), (1, 0))) == P((0, 0), (0, 0), (1, 0))
    assert truncate(P((1, 1), (0, 1), (1, 0))) == P((0, 1), (1, 0))


def test_truncate_width_one():
    with pytest.raises(BSError):
        truncate(zero_code(1))


@given(codes())
def test_truncate_congruence_for_nonnegative_top(c):
    if c.width < 2:
        return
    top = c.digit(c.width - 1)
    if top.value >= 0:
        assert (code_value(truncate(c)) - code_value(c)) % 2 ** (c.width - 1) == 0


# construction and text

def test_make_code_limits():
    with pytest.raises(BSError):
        make_code(0, 0, 0)
    with pytest.raises(BSError):
        make_code(MAX_WIDTH + 1, 0, 0)
    with pytest.raises(BSError):
        make_code(2, 4, 0)
    with pytest.raises(BSError):
        BSCode.from_digits([(2, 0)])


def test_format_styles():
    c = P((1, 0), (0, 1), (1, 1))
    assert format_code(c) == "1T0"
    assert format_code(c, "pairs") == "((1,0)(0,1)(1,1))"
    with pytest.raises(ValueError):
        format_code(c, "hex")


@given(codes())
def test_pairs_round_trip(c):
    assert parse_code(format_code(c, "pairs")) == c


@given(codes())
def test_digits_round_trip_keeps_value(c):
    assert code_value(parse_code(format_code(c))) == code_value(c)


@pytest.mark.parametrize("bad", ["", "12", "((1,0)x)", "((1,2))"])
def test_parse_rejects(bad):
    with pytest.raises(BSError):
        parse_code(bad)
