"""Borrow-save (BS) signed-digit codes and the carry-free incrementer.

A BS digit is a bit pair ``(plus, minus)`` worth ``plus - minus``. A code of
width ``n`` is stored as two integer bit planes, bit ``i`` of ``plus``/``minus``
holding digit ``i`` (index 0 is least significant). Both ``(0, 0)`` and
``(1, 1)`` encode zero, so two codes can have the same value without being
identical.
"""

from __future__ import annotations

import re
from typing import NamedTuple

MAX_WIDTH = 63


class BSError(ValueError):
    """Malformed or incomparable BS codes."""


class BSDigit(NamedTuple):
    plus: int
    minus: int

    @property
    def value(self) -> int:
        return self.plus - self.minus


class BSCode(NamedTuple):
    """Fixed-width BS word held as two bit planes.

    Tuple equality of two ``BSCode`` values is positional bit-pair equality,
    i.e. code identity, not value equality.
    """

    width: int
    plus: int
    minus: int

    @classmethod
    def from_digits(cls, digits) -> BSCode:
        """Build from ``(plus, minus)`` pairs, least significant digit first."""
        digits = list(digits)
        plus = minus = 0
        for i, (p, m) in enumerate(digits):
            if p not in (0, 1) or m not in (0, 1):
                raise BSError(f"digit {i} has non-bit component: {(p, m)!r}")
            plus |= p << i
            minus |= m << i
        return make_code(len(digits), plus, minus)

    @classmethod
    def from_msd_pairs(cls, pairs) -> BSCode:
        """Build from pairs listed most significant first."""
        return cls.from_digits(list(pairs)[::-1])

    @property
    def digits(self) -> tuple[BSDigit, ...]:
        return tuple(
            BSDigit((self.plus >> i) & 1, (self.minus >> i) & 1) for i in range(self.width)
        )

    def digit(self, i: int) -> BSDigit:
        if not 0 <= i < self.width:
            raise IndexError(i)
        return BSDigit((self.plus >> i) & 1, (self.minus >> i) & 1)

    def __str__(self) -> str:
        return format_code(self, "pairs")


class StageOutputs(NamedTuple):
    """First-stage outputs as bit planes: ``d_prime`` marks +1 digits, ``d_second`` -1 digits."""

    width: int
    d_prime: int
    d_second: int

    @property
    def d_prime_bits(self) -> tuple[int, ...]:
        return tuple((self.d_prime >> i) & 1 for i in range(self.width))

    @property
    def d_second_bits(self) -> tuple[int, ...]:
        return tuple((self.d_second >> i) & 1 for i in range(self.width))


def make_code(width: int, plus: int, minus: int) -> BSCode:
    if not 1 <= width <= MAX_WIDTH:
        raise BSError(f"width must be in 1..{MAX_WIDTH}, got {width}")
    mask = (1 << width) - 1
    if plus & ~mask or minus & ~mask or plus < 0 or minus < 0:
        raise BSError(f"bit planes exceed width {width}")
    return BSCode(width, plus, minus)


def zero_code(width: int) -> BSCode:
    return make_code(width, 0, 0)


def code_value(code: BSCode) -> int:
    """Integer value: sum over digits of (plus_i - minus_i) * 2**i."""
    return code.plus - code.minus


def codes_identical(a: BSCode, b: BSCode) -> bool:
    if a.width != b.width:
        raise BSError(f"cannot compare codes of widths {a.width} and {b.width}")
    return a.plus == b.plus and a.minus == b.minus


def stage_one(code: BSCode) -> StageOutputs:
    p, m = code.plus, code.minus
    return StageOutputs(code.width, p & ~m, ~p & m)


def stage_two(stage: StageOutputs) -> BSCode:
    """Second stage of the incrementer; the output is one digit wider.

    ``s_{i+1}^+ = d'_i`` (shifted) and ``s_i^- = d'_i OR d''_i``, with
    ``s_0^+ = 1`` and ``s_n^- = 0``.
    """
    return BSCode(stage.width + 1, (stage.d_prime << 1) | 1, stage.d_prime | stage.d_second)


def increment_planes(plus, minus):
    """Bit-plane form of the increment; works on ints and integer arrays alike."""
    return ((plus & ~minus) << 1) | 1, plus ^ minus


def bs_increment(code: BSCode) -> BSCode:
    """Add one without carry propagation; result has width ``n + 1``.

    Output digit ``i`` depends only on input digits ``i`` (minus bit) and
    ``i - 1`` (plus bit).
    """
    if code.width >= MAX_WIDTH:
        raise BSError(f"increment of width {code.width} would exceed {MAX_WIDTH}")
    return BSCode(code.width + 1, *increment_planes(code.plus, code.minus))


def truncate(code: BSCode) -> BSCode:
    """Drop the most significant digit."""
    if code.width < 2:
        raise BSError("cannot truncate a width-1 code")
    mask = (1 << (code.width - 1)) - 1
    return BSCode(code.width - 1, code.plus & mask, code.minus & mask)


def all_codes(width: int):
    """Every one of the 4**width codes of the given width."""
    if not 1 <= width <= MAX_WIDTH:
        raise BSError(f"width must be in 1..{MAX_WIDTH}, got {width}")
    size = 1 << width
    for plus in range(size):
        for minus in range(size):
            yield BSCode(width, plus, minus)


# text codec

_DIGIT_CHARS = {1: "1", 0: "0", -1: "T"}
_PAIR_RE = re.compile(r"\(\s*([01])\s*,\s*([01])\s*\)")


def format_code(code: BSCode, style: str = "digits") -> str:
    """Render most significant digit first.

    ``digits`` uses ``1``/``0``/``T`` and is lossy on the two zero encodings;
    ``pairs`` prints ``((p,m)...(p,m))`` and round-trips exactly.
    """
    digits = code.digits[::-1]
    if style == "digits":
        return "".join(_DIGIT_CHARS[d.value] for d in digits)
    if style == "pairs":
        return "(" + "".join(f"({d.plus},{d.minus})" for d in digits) + ")"
    raise ValueError(f"unknown style {style!r}")


def parse_code(text: str) -> BSCode:
    """Parse either text form; ``0`` digits parse as ``(0, 0)``."""
    text = text.strip()
    if text.startswith("("):
        pairs = _PAIR_RE.findall(text)
        leftover = _PAIR_RE.sub("", text).replace("(", "").replace(")", "").strip()
        if not pairs or leftover:
            raise BSError(f"malformed pair code: {text!r}")
        return BSCode.from_msd_pairs((int(p), int(m)) for p, m in pairs)
    table = {"1": (1, 0), "0": (0, 0), "T": (0, 1), "t": (0, 1)}
    try:
        pairs = [table[ch] for ch in text]
    except KeyError as exc:
        raise BSError(f"bad digit {exc.args[0]!r} in {text!r}") from None
    if not pairs:
        raise BSError("empty code")
    return BSCode.from_msd_pairs(pairs)
