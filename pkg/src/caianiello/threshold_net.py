"""Synchronous McCulloch-Pitts threshold networks.

Neurons are numbered from 1 in every public function, matching the usual
textbook numbering; arrays are 0-based, so neuron ``j`` lives at index ``j - 1``.
Configurations are ``uint8`` arrays of 0/1 values.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from pathlib import Path

import numpy as np

from .dynamics import OrbitSummary, detect_orbit
from .packed import PackedThresholdMap


class NetworkError(ValueError):
    pass


def heaviside(x: int) -> int:
    """1 for ``x >= 0``, else 0."""
    return 1 if x >= 0 else 0


@dataclass(frozen=True)
class FamilyParams:
    """Weights and thresholds shared by every cell of the regular family.

    Even neurons ``2i + 2`` use ``(a1, a2, a3, theta1)`` on
    ``(x_{2i-1}, x_{2i}, x_{2i+2})``; odd neurons ``2i - 1`` use
    ``(b1, b2, b3, theta2)`` on the same inputs.
    """

    a1: int
    a2: int
    a3: int
    theta1: int
    b1: int
    b2: int
    b3: int
    theta2: int

    def as_tuple(self) -> tuple[int, ...]:
        return (self.a1, self.a2, self.a3, self.theta1, self.b1, self.b2, self.b3, self.theta2)

    @classmethod
    def from_dict(cls, d: dict) -> FamilyParams:
        return cls(**{k: int(d[k]) for k in cls.__dataclass_fields__})


# the parameter choice that turns the family into the V-counter network
COUNTER_PARAMS = FamilyParams(a1=-1, a2=1, a3=-1, theta1=1, b1=1, b2=-1, b3=1, theta2=1)


@dataclass(frozen=True, eq=False)
class ThresholdNet:
    weights: np.ndarray
    thresholds: np.ndarray

    def __post_init__(self):
        w = np.array(self.weights, dtype=np.int64)
        th = np.array(self.thresholds, dtype=np.int64)
        if w.ndim != 2 or w.shape[0] != w.shape[1]:
            raise NetworkError(f"weights must be square, got shape {w.shape}")
        if th.shape != (w.shape[0],):
            raise NetworkError(f"need {w.shape[0]} thresholds, got shape {th.shape}")
        w.setflags(write=False)
        th.setflags(write=False)
        object.__setattr__(self, "weights", w)
        object.__setattr__(self, "thresholds", th)

    @property
    def size(self) -> int:
        return self.weights.shape[0]

    def weight(self, i: int, j: int) -> int:
        return int(self.weights[i - 1, j - 1])

    def threshold(self, i: int) -> int:
        return int(self.thresholds[i - 1])

    def is_symmetric(self) -> bool:
        return bool(np.array_equal(self.weights, self.weights.T))

    def __eq__(self, other):
        if not isinstance(other, ThresholdNet):
            return NotImplemented
        return np.array_equal(self.weights, other.weights) and np.array_equal(
            self.thresholds, other.thresholds
        )

    __hash__ = None


def configuration(bits, size: int | None = None) -> np.ndarray:
    """Neuron 1 first."""
    x = np.asarray(bits, dtype=np.uint8)
    if x.ndim != 1 or np.any(x > 1):
        raise NetworkError("a configuration is a 1-d vector of 0/1 values")
    if size is not None and x.shape[0] != size:
        raise NetworkError(f"configuration has {x.shape[0]} neurons, expected {size}")
    return x


def mcp_step(net: ThresholdNet, x) -> np.ndarray:
    """One synchronous update of every neuron from the old configuration."""
    x = configuration(x, net.size)
    return (net.weights @ x >= net.thresholds).astype(np.uint8)


def stepper(net: ThresholdNet):
    """Unchecked step closure for long orbit runs."""
    w, th = net.weights, net.thresholds

    def step(x):
        return (w @ x >= th).view(np.uint8)

    return step


def packed_map(net: ThresholdNet) -> PackedThresholdMap:
    return PackedThresholdMap(net.weights, net.thresholds)


def orbit(net: ThresholdNet, x0, max_steps: int = 1 << 22, *, keep_trace: bool = False,
          method: str = "hash") -> OrbitSummary:
    """Transient and cycle of the orbit from ``x0``, on packed states."""
    x0 = configuration(x0, net.size)
    fast = packed_map(net)
    summary = detect_orbit(fast.apply, fast.pack(x0), max_steps, method=method)
    summary.state_bits = net.size
    if keep_trace:
        summary.trace = run(net, x0, summary.transient + summary.cycle)
    return summary


def run(net: ThresholdNet, x0, steps: int) -> list[np.ndarray]:
    """Configurations at times ``0..steps``."""
    x = configuration(x0, net.size)
    step = stepper(net)
    trace = [x]
    for _ in range(steps):
        x = step(x)
        trace.append(x)
    return trace


def _blank(size: int):
    return np.zeros((size, size), dtype=np.int64), np.zeros(size, dtype=np.int64)


def build_theorem1_net(n: int) -> tuple[ThresholdNet, np.ndarray]:
    """The ``2n + 2``-neuron network whose orbit runs through ``V_n``.

    Returns the net and its initial configuration (only neuron 2 firing).
    """
    if n < 3:
        raise NetworkError(f"n must be >= 3, got {n}")
    size = 2 * n + 2
    w, th = _blank(size)

    def put(i, j, value):
        w[i - 1, j - 1] = value

    put(2, 2, 1)
    for i in range(1, n + 1):
        put(2 * i + 2, 2 * i - 1, -1)
        put(2 * i + 2, 2 * i, 1)
        put(2 * i + 2, 2 * i + 2, -1)
        th[2 * i + 1] = 1
        put(2 * i - 1, 2 * i - 1, 1)
        put(2 * i - 1, 2 * i, -1)
        put(2 * i - 1, 2 * i + 2, 1)
        th[2 * i - 2] = 1
    put(2 * n + 1, 2 * n + 1, 1)
    th[2 * n] = 1
    x0 = np.zeros(size, dtype=np.uint8)
    x0[1] = 1
    return ThresholdNet(w, th), x0


def counter_initial(size: int) -> np.ndarray:
    """Neuron 2 on, everything else off."""
    x0 = np.zeros(size, dtype=np.uint8)
    x0[1] = 1
    return x0


def check_family_initial(x0, size: int) -> np.ndarray:
    x0 = configuration(x0, size)
    if x0[1] != 1:
        raise NetworkError("initial state violates the boundary constraint x_2(0) = 1")
    if x0[size - 2] != 0:
        raise NetworkError(
            f"initial state violates the boundary constraint x_{size - 1}(0) = 0"
        )
    return x0


def build_family_net(
    n: int, k_scale: int, p: FamilyParams, x0=None
) -> tuple[ThresholdNet, np.ndarray]:
    """Regular family network of ``2 n k + 2`` neurons.

    ``x0`` defaults to neuron 2 alone firing. Only the boundary constraints on
    neurons 2 and ``2nk + 1`` are enforced; parameters are not policed.
    """
    if n < 1 or k_scale < 1:
        raise NetworkError(f"need n >= 1 and k_scale >= 1, got {n}, {k_scale}")
    cells = n * k_scale
    size = 2 * cells + 2
    x0 = counter_initial(size) if x0 is None else check_family_initial(x0, size)
    w, th = _blank(size)
    w[1, 1] = 1
    for i in range(1, cells + 1):
        even, odd = 2 * i + 2, 2 * i - 1
        w[even - 1, [2 * i - 2, 2 * i - 1, 2 * i + 1]] = (p.a1, p.a2, p.a3)
        th[even - 1] = p.theta1
        w[odd - 1, [2 * i - 2, 2 * i - 1, 2 * i + 1]] = (p.b1, p.b2, p.b3)
        th[odd - 1] = p.theta2
    w[size - 2, size - 2] = 1
    th[size - 2] = 1
    return ThresholdNet(w, th), x0


def elementary_cell_table():
    """Rows of the elementary-cell table: ``(a, b, d, not_a_and_b_or_d, a_and_nor_bd,
    h(-a+b+d-1), h(a-b-d-1))`` for the six admissible inputs.

    ``(0, 1, 1)`` and ``(1, 1, 1)`` are excluded: they would need ``x_{2i-1}``
    and ``x_{2i+2}`` both set, which the forbidden-pattern property rules out.
    """
    rows = []
    for a in (0, 1):
        for b in (0, 1):
            for d in (0, 1):
                if b and d:
                    continue
                rows.append(
                    (
                        a, b, d,
                        (1 - a) & (b | d),
                        a & (1 - (b | d)),
                        heaviside(-a + b + d - 1),
                        heaviside(a - b - d - 1),
                    )
                )
    return rows


# JSON description files

def net_to_dict(net: ThresholdNet, x0=None) -> dict:
    rows, cols = np.nonzero(net.weights)
    d = {
        "size": net.size,
        "weights": [[int(i) + 1, int(j) + 1, int(net.weights[i, j])] for i, j in zip(rows, cols)],
        "thresholds": [int(t) for t in net.thresholds],
    }
    if x0 is not None:
        d["initial"] = [int(b) for b in configuration(x0, net.size)]
    return d


def net_from_dict(d: dict) -> tuple[ThresholdNet, np.ndarray | None]:
    size = int(d["size"])
    w, _ = _blank(size)
    for i, j, value in d.get("weights", []):
        if not (1 <= i <= size and 1 <= j <= size):
            raise NetworkError(f"weight index ({i}, {j}) outside 1..{size}")
        w[i - 1, j - 1] = value
    net = ThresholdNet(w, d["thresholds"])
    x0 = configuration(d["initial"], size) if "initial" in d else None
    return net, x0


def load_net(path) -> tuple[ThresholdNet, np.ndarray | None]:
    return net_from_dict(json.loads(Path(path).read_text(encoding="utf-8")))


def save_net(path, net: ThresholdNet, x0=None) -> None:
    Path(path).write_text(json.dumps(net_to_dict(net, x0), indent=1) + "\n", encoding="utf-8")


def params_to_dict(p: FamilyParams) -> dict:
    return asdict(p)
