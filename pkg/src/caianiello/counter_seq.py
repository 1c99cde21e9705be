"""The BS counter sequence ``U_n`` and its first-stage image ``V_n``.

``U_n`` is the modulo-``2**n`` BS counter: start from a redundant encoding of
zero, increment carry-free, keep the low ``n`` digits. ``V_n`` is the
``2n + 2``-bit word of first-stage outputs fed to the threshold network.

A ``VWord`` stores neuron ``j`` (1-based, ``1 <= j <= 2n + 2``) at bit
``j - 1`` of ``bits``. Component ``c'_i`` is neuron ``2i + 2`` and ``c''_i`` is
neuron ``2i + 1`` for ``0 <= i <= n``.
"""

from __future__ import annotations

from typing import Iterator, NamedTuple

from .bs_arith import BSCode, MAX_WIDTH, bs_increment, make_code, stage_one, truncate


class CounterError(ValueError):
    pass


def _check_n(n: int) -> None:
    if n < 3:
        raise CounterError(f"n must be >= 3, got {n}")


def _interleave(primes: int, seconds: int, n: int) -> int:
    bits = 0
    for i in range(n + 1):
        bits |= ((seconds >> i) & 1) << (2 * i)
        bits |= ((primes >> i) & 1) << (2 * i + 1)
    return bits


class VWord(NamedTuple):
    n: int
    bits: int

    @classmethod
    def from_components(cls, n: int, primes: int, seconds: int) -> VWord:
        """``primes`` holds ``c'_i`` at bit ``i``, ``seconds`` holds ``c''_i``."""
        return cls(n, _interleave(primes, seconds, n))

    @classmethod
    def from_neurons(cls, states) -> VWord:
        """From neuron states listed neuron 1 first (length ``2n + 2``)."""
        states = list(states)
        if len(states) % 2 or len(states) < 8:
            raise CounterError(f"a V word needs 2n+2 >= 8 bits, got {len(states)}")
        bits = 0
        for j, s in enumerate(states):
            bits |= (int(s) & 1) << j
        return cls(len(states) // 2 - 1, bits)

    @classmethod
    def from_table_row(cls, row: str) -> VWord:
        """Parse a row printed neuron ``2n + 2`` first, e.g. ``"0 0 0 0 1 0 1 0"``."""
        return cls.from_neurons(reversed(row.split()))

    @property
    def size(self) -> int:
        return 2 * self.n + 2

    def neuron(self, j: int) -> int:
        if not 1 <= j <= self.size:
            raise IndexError(j)
        return (self.bits >> (j - 1)) & 1

    def c_prime(self, i: int) -> int:
        return self.neuron(2 * i + 2)

    def c_second(self, i: int) -> int:
        return self.neuron(2 * i + 1)

    @property
    def primes(self) -> int:
        out = 0
        for i in range(self.n + 1):
            out |= ((self.bits >> (2 * i + 1)) & 1) << i
        return out

    @property
    def seconds(self) -> int:
        out = 0
        for i in range(self.n + 1):
            out |= ((self.bits >> (2 * i)) & 1) << i
        return out

    def neurons(self) -> tuple[int, ...]:
        """States of neurons 1..2n+2."""
        return tuple((self.bits >> j) & 1 for j in range(self.size))

    def __str__(self) -> str:
        return format_vword(self)


def format_vword(v: VWord) -> str:
    """Space-separated bits, neuron ``2n + 2`` first."""
    return " ".join(str(b) for b in reversed(v.neurons()))


# U_n

def u_initial(n: int) -> BSCode:
    _check_n(n)
    return make_code(n, 0b11, 0b11)


def u_next(code: BSCode) -> BSCode:
    return truncate(bs_increment(code))


def u_term(n: int, j: int) -> BSCode:
    """``U_n(j)`` by ``j`` literal increments from ``U_n(0)``."""
    if j < 0:
        raise CounterError(f"index must be non-negative, got {j}")
    code = u_initial(n)
    for _ in range(j):
        code = u_next(code)
    return code


def u_sequence(n: int, count: int) -> Iterator[BSCode]:
    """``U_n(0), ..., U_n(count - 1)``."""
    code = u_initial(n)
    for _ in range(count):
        yield code
        code = u_next(code)


# V_n

def v_from_u(code: BSCode) -> VWord:
    """Map ``U_n(i)`` to ``V_n(i + 1)``."""
    n = code.width
    _check_n(n)
    if n > MAX_WIDTH:
        raise CounterError(f"width {n} too large")
    stage = stage_one(code)
    primes = (stage.d_prime << 1) | 1  # c'_0 = 1, c'_{j+1} = d'_j
    seconds = stage.d_second  # c''_n = 0
    return VWord.from_components(n, primes, seconds)


def v_forbidden_ok(v: VWord) -> bool:
    """True iff no pair ``(c'_j, c''_{j-1})`` with ``1 <= j <= n`` equals ``(1, 1)``."""
    mask = (1 << v.n) - 1
    return ((v.primes >> 1) & v.seconds & mask) == 0


def check_vword(v: VWord) -> None:
    """Raise unless ``v`` has the boundary bits and no forbidden pair."""
    _check_n(v.n)
    if v.bits >> v.size:
        raise CounterError("bits set beyond neuron 2n+2")
    if v.c_prime(0) != 1:
        raise CounterError("neuron 2 (c'_0) must be 1")
    if v.c_second(v.n) != 0:
        raise CounterError(f"neuron {2 * v.n + 1} (c''_n) must be 0")
    if not v_forbidden_ok(v):
        raise CounterError("word contains a forbidden (c'_j, c''_{j-1}) = (1, 1) pair")


def v_successor(v: VWord) -> VWord:
    """Next term of ``V_n`` computed directly from the current one."""
    check_vword(v)
    n = v.n
    mask = (1 << n) - 1
    cp, cs = v.primes, v.seconds
    either = ((cp >> 1) | cs) & mask  # c'_{i+1} OR c''_i
    primes = (((cp & ~either) & mask) << 1) | 1
    seconds = ~cp & either & mask
    return VWord.from_components(n, primes, seconds)


def u_from_v(v: VWord) -> BSCode:
    """Decode ``V_n(i + 1)`` back to ``U_n(i + 1)``."""
    check_vword(v)
    n = v.n
    mask = (1 << n) - 1
    cp, cs = v.primes, v.seconds
    plus = (cp & mask) | 1
    minus = ((cp >> 1) | cs) & mask
    return make_code(n, plus, minus)


def v_initial(n: int) -> VWord:
    """``V_n(1)``: only neuron 2 set."""
    return v_from_u(u_initial(n))


def predict_wider_successor(a: BSCode, b: BSCode, c: BSCode) -> BSCode:
    """Predict ``U_{n+1}(i+1)`` from ``a = U_n(i)``, ``b = U_n(i+1)``, ``c = U_{n+1}(i)``.

    The top digit is ``(a_{n-1}^+ AND NOT a_{n-1}^-, c_n^+ XOR c_n^-)``; the
    remaining digits are those of ``b`` with the lowest plus bit forced to 1.
    """
    n = a.width
    if b.width != n or c.width != n + 1:
        raise CounterError("widths must be n, n and n+1")
    top_plus = ((a.plus & ~a.minus) >> (n - 1)) & 1
    top_minus = ((c.plus ^ c.minus) >> n) & 1
    plus = b.plus | 1 | (top_plus << n)
    minus = b.minus | (top_minus << n)
    return make_code(n + 1, plus, minus)
