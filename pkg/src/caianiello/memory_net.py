"""Caianiello threshold networks with memory ``k``.

Each neuron's next state thresholds a weighted sum over the last ``k``
configurations: ``y_i(t+1) = H(sum_j sum_s a_ij(s) y_j(t+1-s) - theta_i)``.
Delay taps are stored sparsely as ``(i, j, s, w)`` with 1-based neurons and
``1 <= s <= k``. With ``size == 1`` this is the single-neuron recurrence.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path

import numpy as np

from .dynamics import OrbitSummary, detect_orbit, sequence_period
from .threshold_net import (
    FamilyParams,
    NetworkError,
    COUNTER_PARAMS,
    build_family_net,
    check_family_initial,
    configuration,
    orbit,
    counter_initial,
    stepper,
)
from .packed import PackedWindowMap


@dataclass(frozen=True)
class MemoryNet:
    size: int
    memory: int
    taps: tuple[tuple[int, int, int, int], ...]
    thresholds: tuple[int, ...]

    def __post_init__(self):
        if self.memory < 1:
            raise NetworkError(f"memory must be >= 1, got {self.memory}")
        if len(self.thresholds) != self.size:
            raise NetworkError(f"need {self.size} thresholds, got {len(self.thresholds)}")
        for i, j, s, _ in self.taps:
            if not (1 <= i <= self.size and 1 <= j <= self.size and 1 <= s <= self.memory):
                raise NetworkError(f"tap ({i}, {j}, {s}) out of range")
        object.__setattr__(self, "taps", tuple(tuple(int(v) for v in t) for t in self.taps))
        object.__setattr__(self, "thresholds", tuple(int(t) for t in self.thresholds))

    def weight(self, i: int, j: int, s: int) -> int:
        """``a_ij(s)``; zero when no tap is stored."""
        return int(self.tensor[s - 1, i - 1, j - 1])

    @cached_property
    def tensor(self) -> np.ndarray:
        """Dense ``(k, M, M)`` array, ``tensor[s-1, i-1, j-1] = a_ij(s)``."""
        t = np.zeros((self.memory, self.size, self.size), dtype=np.int64)
        for i, j, s, w in self.taps:
            t[s - 1, i - 1, j - 1] += w
        t.setflags(write=False)
        return t

    @cached_property
    def flat_weights(self) -> np.ndarray:
        """``(M, k*M)`` matrix acting on a window flattened oldest-first."""
        blocks = [self.tensor[s - 1] for s in range(self.memory, 0, -1)]
        return np.concatenate(blocks, axis=1)

    @cached_property
    def threshold_array(self) -> np.ndarray:
        return np.asarray(self.thresholds, dtype=np.int64)


@dataclass
class MemoryWindow:
    """The last ``k`` configurations, oldest first, in one flat buffer.

    ``push`` shifts in place, so a long run reuses the same storage.
    """

    size: int
    memory: int
    buffer: np.ndarray = field(repr=False)

    @classmethod
    def from_configs(cls, configs) -> MemoryWindow:
        rows = [configuration(c) for c in configs]
        if not rows:
            raise NetworkError("a window needs at least one configuration")
        size = rows[0].shape[0]
        if any(r.shape[0] != size for r in rows):
            raise NetworkError("window configurations differ in length")
        return cls(size, len(rows), np.concatenate(rows).astype(np.uint8))

    def configs(self) -> list[np.ndarray]:
        return [c.copy() for c in self.buffer.reshape(self.memory, self.size)]

    def newest(self) -> np.ndarray:
        return self.buffer[-self.size:]

    def push(self, y) -> None:
        m = self.size
        if self.memory > 1:
            self.buffer[:-m] = self.buffer[m:]
        self.buffer[-m:] = y

    def copy(self) -> MemoryWindow:
        return MemoryWindow(self.size, self.memory, self.buffer.copy())


def caianiello_step(net: MemoryNet, w: MemoryWindow) -> np.ndarray:
    """Next configuration; the caller slides the window."""
    if w.memory != net.memory or w.size != net.size:
        raise NetworkError(
            f"window is {w.memory}x{w.size}, net expects {net.memory}x{net.size}"
        )
    return (net.flat_weights @ w.buffer >= net.threshold_array).astype(np.uint8)


def window_stepper(net: MemoryNet):
    """Step on flat window buffers (oldest first); returns a new buffer."""
    fw, th, m = net.flat_weights, net.threshold_array, net.size

    def step(buf):
        nxt = (fw @ buf >= th).view(np.uint8)
        return np.concatenate((buf[m:], nxt))

    return step


def packed_map(net: MemoryNet) -> PackedWindowMap:
    return PackedWindowMap(net.flat_weights, net.threshold_array, net.size, net.memory)


def window_orbit(net: MemoryNet, window: MemoryWindow, max_steps: int = 1 << 22,
                 *, method: str = "hash") -> OrbitSummary:
    """Transient and cycle of the window-state orbit (packed states)."""
    if window.memory != net.memory or window.size != net.size:
        raise NetworkError("window shape does not match the net")
    fast = packed_map(net)
    summary = detect_orbit(fast.apply, fast.pack(window.buffer), max_steps, method=method)
    summary.state_bits = net.size * net.memory
    return summary


def run(net: MemoryNet, window: MemoryWindow, steps: int) -> list[np.ndarray]:
    """The y-sequence: the window's configurations followed by ``steps`` new ones."""
    w = window.copy()
    out = w.configs()
    for _ in range(steps):
        y = caianiello_step(net, w)
        w.push(y)
        out.append(y)
    return out


def build_simulating_net(n: int, k: int, p: FamilyParams = COUNTER_PARAMS) -> MemoryNet:
    """``2n + 2`` neurons with memory ``k`` running the family net in k-step epochs.

    Every tap has delay ``k`` except neuron 2's read of neuron ``2n + 2``,
    which has delay 1.
    """
    if n < 3:
        raise NetworkError(f"n must be >= 3, got {n}")
    if k < 1:
        raise NetworkError(f"k must be >= 1, got {k}")
    size = 2 * n + 2
    taps = [(2, 2 * n + 1, k, 1), (2, 2 * n + 2, 1, 1)]
    th = [0] * size
    th[1] = 1
    for i in range(1, n + 1):
        even, odd = 2 * i + 2, 2 * i - 1
        for (j, w) in ((2 * i - 1, p.a1), (2 * i, p.a2), (2 * i + 2, p.a3)):
            if w:
                taps.append((even, j, k, w))
        th[even - 1] = p.theta1
        for (j, w) in ((2 * i - 1, p.b1), (2 * i, p.b2), (2 * i + 2, p.b3)):
            if w:
                taps.append((odd, j, k, w))
        th[odd - 1] = p.theta2
    taps.append((2 * n + 1, 2 * n + 1, k, 1))
    th[2 * n] = 1
    return MemoryNet(size, k, tuple(taps), tuple(th))


def build_initial_memory(n: int, k: int, x0=None) -> MemoryWindow:
    """Spread the ``2nk + 2``-neuron initial state over ``k`` configurations.

    Slot ``i`` holds neurons ``2ni + 1 .. 2ni + 2n`` of ``x0`` as neurons
    ``1..2n``, neuron ``2n(i+1) + 2`` as neuron ``2n + 2``, and the phase
    marker neuron ``2n + 1`` is 1 in slot 0 only.
    """
    big = 2 * n * k + 2
    x0 = counter_initial(big) if x0 is None else check_family_initial(x0, big)
    size = 2 * n + 2
    rows = np.zeros((k, size), dtype=np.uint8)
    for i in range(k):
        rows[i, : 2 * n] = x0[2 * n * i: 2 * n * i + 2 * n]
        rows[i, 2 * n + 1] = x0[2 * n * (i + 1) + 1]
    rows[0, 2 * n] = 1
    return MemoryWindow(size, k, rows.ravel())


@dataclass
class AlignmentReport:
    ok: bool
    n: int
    k: int
    horizon: int
    mismatch: dict | None = None

    def __str__(self) -> str:
        if self.ok:
            return f"alignment n={self.n} k={self.k} horizon={self.horizon}: ok"
        return f"alignment n={self.n} k={self.k}: mismatch {self.mismatch}"


def alignment_check(n: int, k: int, p: FamilyParams, x0=None, horizon: int = 64) -> AlignmentReport:
    """Run both networks and compare states under the epoch correspondence.

    Epoch ``t`` of the big net is read off memory-net times ``tk .. tk+k-1``.
    The first disagreement is reported with its ``(t, i, j)`` coordinates.
    """
    mcp, x = build_family_net(n, k, p, x0)
    net = build_simulating_net(n, k, p)
    window = build_initial_memory(n, k, x)
    ys = run(net, window, k * (horizon + 1) - k)
    xs = [x]
    step = stepper(mcp)
    for _ in range(horizon):
        xs.append(step(xs[-1]))

    def fail(t, i, j, expected, observed, rule):
        return AlignmentReport(
            False, n, k, horizon,
            {"t": t, "i": i, "j": j, "expected": int(expected), "observed": int(observed), "rule": rule},
        )

    for t in range(horizon + 1):
        xt = xs[t]
        for i in range(k):
            y = ys[t * k + i]
            for j in range(1, 2 * n + 1):
                if y[j - 1] != xt[2 * n * i + j - 1]:
                    return fail(t, i, j, xt[2 * n * i + j - 1], y[j - 1], "y_j(tk+i) = x_{2ni+j}(t)")
            j = 2 * n + 2
            if y[j - 1] != xt[2 * n * (i + 1) + 1]:
                return fail(t, i, j, xt[2 * n * (i + 1) + 1], y[j - 1], "y_{2n+2}(tk+i) = x_{2n(i+1)+2}(t)")
            marker = 1 if i == 0 else 0
            if y[2 * n] != marker:
                return fail(t, i, 2 * n + 1, marker, y[2 * n], "y_{2n+1}: 1 at tk, 0 otherwise")
            if k > 1 and i == k - 1 and y[2 * n] != xt[2 * n * k]:
                return fail(t, i, 2 * n + 1, xt[2 * n * k], y[2 * n], "y_{2n+1}((t+1)k-1) = x_{2nk+1}(t)")
    return AlignmentReport(True, n, k, horizon)


@dataclass
class SimulationOrbits:
    """Orbit lengths of the big memoryless net and of its memory-k simulator."""

    mcp: OrbitSummary
    window: OrbitSummary
    sequence: tuple[int, int]

    @property
    def agrees(self) -> bool:
        return (self.window.transient, self.window.cycle) == self.sequence


def simulation_orbits(n: int, k: int, p: FamilyParams = COUNTER_PARAMS, x0=None,
                      max_steps: int = 1 << 22) -> SimulationOrbits:
    """Detect ``(T, L)`` on both sides.

    The memory net is measured twice: on window states and on the flat
    y-sequence (covering two full cycles after the transient).
    """
    mcp, x = build_family_net(n, k, p, x0)
    big = orbit(mcp, x, max_steps)
    net = build_simulating_net(n, k, p)
    window = build_initial_memory(n, k, x)
    win = window_orbit(net, window, max_steps)
    ys = run(net, window, win.transient + 2 * win.cycle + 1)
    seq = sequence_period(ys, repeats=2)
    return SimulationOrbits(big, win, seq)


# JSON description files

def net_to_dict(net: MemoryNet, window: MemoryWindow | None = None) -> dict:
    d = {
        "size": net.size,
        "memory": net.memory,
        "taps": [list(t) for t in net.taps],
        "thresholds": list(net.thresholds),
    }
    if window is not None:
        d["window"] = [[int(b) for b in c] for c in window.configs()]
    return d


def net_from_dict(d: dict) -> tuple[MemoryNet, MemoryWindow | None]:
    net = MemoryNet(int(d["size"]), int(d["memory"]), tuple(tuple(t) for t in d["taps"]),
                    tuple(d["thresholds"]))
    window = None
    if "window" in d:
        window = MemoryWindow.from_configs(d["window"])
        if window.memory != net.memory or window.size != net.size:
            raise NetworkError("window shape does not match the net")
    return net, window


def load_net(path) -> tuple[MemoryNet, MemoryWindow | None]:
    return net_from_dict(json.loads(Path(path).read_text(encoding="utf-8")))


def save_net(path, net: MemoryNet, window: MemoryWindow | None = None) -> None:
    Path(path).write_text(json.dumps(net_to_dict(net, window)) + "\n", encoding="utf-8")


__all__ = [
    "AlignmentReport", "MemoryNet", "MemoryWindow", "SimulationOrbits", "alignment_check",
    "build_initial_memory", "build_simulating_net", "caianiello_step",
    "load_net", "net_from_dict", "net_to_dict", "packed_map", "run", "save_net",
    "simulation_orbits", "window_orbit", "window_stepper",
]
