"""Transient and cycle lengths of deterministic orbits over finite state spaces."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Hashable, Sequence

import numpy as np


class OrbitSearchExhausted(RuntimeError):
    """No repeated state within the step budget."""

    def __init__(self, steps: int):
        super().__init__(f"no repeated state within {steps} steps")
        self.steps = steps


class InsufficientEvidence(ValueError):
    """The trace is too short to confirm an eventual period."""


@dataclass
class OrbitSummary:
    transient: int
    cycle: int
    steps: int = 0
    state_bits: int | None = None
    trace: list | None = field(default=None, repr=False)

    def to_dict(self) -> dict:
        return {
            "transient": self.transient,
            "cycle": self.cycle,
            "steps": self.steps,
            "state_bits": self.state_bits,
        }


def state_key(state: Any) -> Hashable:
    """Canonical hashable form; bit arrays are packed."""
    if isinstance(state, np.ndarray):
        return np.packbits(state.ravel()).tobytes() + state.size.to_bytes(4, "little")
    return state


def _state_bits(state: Any) -> int | None:
    if isinstance(state, np.ndarray):
        return int(state.size)
    return None


def detect_orbit(
    step: Callable[[Any], Any],
    init: Any,
    max_steps: int = 1 << 22,
    *,
    key: Callable[[Any], Hashable] = state_key,
    keep_trace: bool = False,
    method: str = "hash",
) -> OrbitSummary:
    """Minimal ``(T, L)`` with ``state(T + L) == state(T)``.

    ``method="hash"`` records each state's first visit time; ``"brent"`` runs
    Brent's two-pointer search in constant memory and recomputes the
    transient by replay. ``keep_trace`` stores ``state(0..T+L)``.
    """
    if method == "hash":
        summary = _detect_hash(step, init, max_steps, key)
    elif method == "brent":
        summary = _detect_brent(step, init, max_steps, key)
    else:
        raise ValueError(f"unknown method {method!r}")
    summary.state_bits = _state_bits(init)
    if keep_trace:
        summary.trace = iterate(step, init, summary.transient + summary.cycle)
    return summary


def _detect_hash(step, init, max_steps, key) -> OrbitSummary:
    seen: dict[Hashable, int] = {}
    state = init
    for t in range(max_steps + 1):
        k = key(state)
        first = seen.get(k)
        if first is not None:
            return OrbitSummary(first, t - first, steps=t)
        seen[k] = t
        state = step(state)
    raise OrbitSearchExhausted(max_steps)


def _detect_brent(step, init, max_steps, key) -> OrbitSummary:
    power = cycle = 1
    tortoise_k = key(init)
    hare = step(init)
    steps = 1
    while tortoise_k != key(hare):
        if power == cycle:
            tortoise_k = key(hare)
            power *= 2
            cycle = 0
        hare = step(hare)
        cycle += 1
        steps += 1
        if steps > max_steps:
            raise OrbitSearchExhausted(max_steps)
    tortoise = hare = init
    for _ in range(cycle):
        hare = step(hare)
    transient = 0
    while key(tortoise) != key(hare):
        tortoise = step(tortoise)
        hare = step(hare)
        transient += 1
    return OrbitSummary(transient, cycle, steps=steps + cycle + transient)


def iterate(step, init, count: int) -> list:
    """``state(0..count)``."""
    out = [init]
    state = init
    for _ in range(count):
        state = step(state)
        out.append(state)
    return out


def _z_function(seq: Sequence[int]) -> list[int]:
    n = len(seq)
    z = [0] * n
    if n:
        z[0] = n
    lo = hi = 0
    for i in range(1, n):
        if i < hi:
            z[i] = min(hi - i, z[i - lo])
        while i + z[i] < n and seq[z[i]] == seq[i + z[i]]:
            z[i] += 1
        if i + z[i] > hi:
            lo, hi = i, i + z[i]
    return z


def sequence_period(
    trace: Sequence[Any], *, repeats: int = 1, key: Callable[[Any], Hashable] = state_key
) -> tuple[int, int]:
    """Eventual period ``(T, L)`` of a recorded sequence.

    A candidate ``(T, L)`` needs ``trace[m] == trace[m + L]`` for all
    ``m >= T`` and must cover ``repeats`` full cycles after ``T`` plus the
    closing element, i.e. ``len(trace) - T >= repeats * L + 1``. Among the
    candidates the smallest ``T`` wins, then the smallest ``L``. For a trace of
    states of a deterministic map this recovers the exact ``(T, L)``; for
    other sequences pass ``repeats >= 2`` to guard against coincidences near
    the end of the trace.
    """
    if repeats < 1:
        raise ValueError("repeats must be >= 1")
    ids: dict[Hashable, int] = {}
    codes = [ids.setdefault(key(s), len(ids)) for s in trace]
    n = len(codes)
    z = _z_function(codes[::-1])
    best = None
    for period in range(1, n):
        run = period + z[period]  # longest suffix with this period
        if run < repeats * period + 1:
            continue
        candidate = (n - run, period)
        if best is None or candidate < best:
            best = candidate
    if best is None:
        raise InsufficientEvidence(
            f"no eventual period confirmed {repeats} time(s) in {n} elements"
        )
    return best
