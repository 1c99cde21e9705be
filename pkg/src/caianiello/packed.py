"""Fast threshold maps on packed integer states.

A state of ``n`` bits is held as one Python int with neuron ``i`` at bit
``i * F`` (a "spread" layout, ``F`` a multiple of 8). Each step adds one
precomputed table entry per group of 8 inputs; the entry packs the partial
potentials of every output neuron into ``F``-bit fields. After adding the
biased thresholds every field holds ``potential - theta + 2**(F-1)`` in
``[0, 2**F)``, so its top bit is the Heaviside output. Field borrows in the
intermediate sums are harmless because integer addition is exact.

This is the hot path for orbit searches; ``mcp_step`` is the reference.
"""

from __future__ import annotations

import numpy as np

_GROUP = 8


def _field_width(weights: np.ndarray, thresholds: np.ndarray) -> int:
    pos = np.clip(weights, 0, None).sum(axis=1) - thresholds
    neg = np.clip(weights, None, 0).sum(axis=1) - thresholds
    need = int(max(np.max(np.abs(neg), initial=0), np.max(pos + 1, initial=1)))
    for width in (8, 16, 32, 64):
        if need <= 1 << (width - 1):
            return width
    raise OverflowError("weights too large for packed evaluation")


class PackedThresholdMap:
    """``out_i = H(sum_j W[i, j] in_j - theta_i)`` on spread-packed ints."""

    def __init__(self, weights, thresholds):
        w = np.asarray(weights, dtype=np.int64)
        th = np.asarray(thresholds, dtype=np.int64)
        self.n_out, self.n_in = w.shape
        self.width = max(_field_width(w, th), 8)
        f = self.width
        self.dtype = np.dtype(f"<u{f // 8}")
        self.ones_out = sum(1 << (i * f) for i in range(self.n_out))
        bias = 1 << (f - 1)
        self.base = sum(int(bias - th[i]) << (i * f) for i in range(self.n_out))
        self.tables = []
        for start in range(0, self.n_in, _GROUP):
            count = min(_GROUP, self.n_in - start)
            cols = [
                sum(int(c) << (i * f) for i, c in enumerate(w[:, start + b]) if c)
                for b in range(count)
            ]
            keys = [0] * (1 << count)
            sums = [0] * (1 << count)
            for combo in range(1, 1 << count):
                low = (combo & -combo).bit_length() - 1
                rest = combo & (combo - 1)
                keys[combo] = keys[rest] | (1 << (low * f))
                sums[combo] = sums[rest] + cols[low]
            self.tables.append((start * f, (1 << (_GROUP * f)) - 1, dict(zip(keys, sums))))

    def apply(self, state: int) -> int:
        v = self.base
        for shift, mask, table in self.tables:
            v += table[(state >> shift) & mask]
        return (v >> (self.width - 1)) & self.ones_out

    def pack(self, bits) -> int:
        return int.from_bytes(np.asarray(bits).astype(self.dtype).tobytes(), "little")

    def unpack(self, state: int, count: int) -> np.ndarray:
        raw = state.to_bytes(count * self.width // 8, "little")
        return np.frombuffer(raw, dtype=self.dtype).astype(np.uint8)


class PackedWindowMap:
    """Memory-``k`` update on a packed window of ``k`` configurations, oldest lowest."""

    def __init__(self, flat_weights, thresholds, size: int, memory: int):
        self.core = PackedThresholdMap(flat_weights, thresholds)
        self.size = size
        self.memory = memory
        f = self.core.width
        self._drop = size * f
        self._newest = (memory - 1) * size * f

    def apply(self, window: int) -> int:
        nxt = self.core.apply(window)
        return (window >> self._drop) | (nxt << self._newest)

    def pack(self, buffer) -> int:
        return self.core.pack(buffer)

    def unpack(self, window: int) -> np.ndarray:
        return self.core.unpack(window, self.size * self.memory)
