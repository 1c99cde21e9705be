"""Exact-integer verification checks shared by the CLI and the test suite."""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable

import numpy as np

from . import bs_arith as bs
from . import counter_seq as cs
from .memory_net import alignment_check, simulation_orbits
from .threshold_net import (
    COUNTER_PARAMS,
    FamilyParams,
    build_family_net,
    build_theorem1_net,
    elementary_cell_table,
    orbit,
    run,
)

WORKERS_ENV = "CAIANIELLO_WORKERS"

# the 8-neuron cycle, neuron 8 first, times 0..8
EIGHT_NEURON_CYCLE = (
    "0 0 0 0 0 0 1 0",
    "0 0 0 0 1 0 1 0",
    "0 0 1 0 0 0 1 0",
    "1 0 0 0 1 1 1 0",
    "0 0 0 1 0 0 1 0",
    "0 0 0 1 1 0 1 0",
    "0 0 1 1 0 0 1 0",
    "0 0 0 0 1 1 1 0",
    "0 0 0 0 0 0 1 0",
)

MEMORY_GRID = ((3, 1), (3, 2), (3, 3), (4, 2), (4, 3), (3, 4), (5, 2))


@dataclass
class VerificationReport:
    check: str
    params: dict
    expected: Any
    observed: Any
    claim: str
    passed: bool = field(init=False)
    runtime: float = 0.0
    details: dict | None = None

    def __post_init__(self):
        self.passed = self.expected == self.observed

    def to_dict(self, timing: bool = False) -> dict:
        d = {
            "check": self.check,
            "params": self.params,
            "expected": self.expected,
            "observed": self.observed,
            "claim": self.claim,
            "pass": self.passed,
        }
        if self.details:
            d["details"] = self.details
        if timing:
            d["runtime"] = round(self.runtime, 6)
        return d

    def line(self, timing: bool = False) -> str:
        params = " ".join(f"{k}={v}" for k, v in self.params.items())
        status = "PASS" if self.passed else "FAIL"
        text = f"{self.check} {params}: observed={self.observed} expected={self.expected} {status}"
        if timing:
            text += f" ({self.runtime * 1000:.1f} ms)"
        return text


def _timed(fn: Callable[[], VerificationReport]) -> VerificationReport:
    start = time.perf_counter()
    report = fn()
    report.runtime = time.perf_counter() - start
    return report


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


def fan_out(fn, items: Iterable, workers: int | None = None) -> list:
    """Map ``fn`` over ``items``, keeping input order."""
    items = list(items)
    workers = worker_count() if workers is None else workers
    if workers <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def eight_neuron_trace() -> list[str]:
    net, x0 = build_theorem1_net(3)
    return [" ".join(str(b) for b in x[::-1]) for x in run(net, x0, 8)]


def check_golden_trace() -> VerificationReport:
    return _timed(lambda: VerificationReport(
        "golden-trace", {"n": 3}, list(EIGHT_NEURON_CYCLE), eight_neuron_trace(),
        "8 neurons cycle through 8 distinct states, row 8 equal to row 0",
    ))


def _counter_cycle(n: int) -> VerificationReport:
    def body():
        net, x0 = build_theorem1_net(n)
        s = orbit(net, x0)
        return VerificationReport(
            "counter-cycle", {"n": n}, {"transient": 0, "cycle": 2 ** n},
            {"transient": s.transient, "cycle": s.cycle},
            "transient 0, cycle 2^n on 2n+2 neurons",
        )
    return _timed(body)


def check_counter_cycles(ns: Iterable[int], workers: int | None = None) -> list[VerificationReport]:
    return fan_out(_counter_cycle, ns, workers)


def _memory_cycle(nk: tuple[int, int]) -> VerificationReport:
    n, k = nk

    def body():
        o = simulation_orbits(n, k, COUNTER_PARAMS)
        return VerificationReport(
            "memory-cycle", {"n": n, "k": k},
            {"transient": 0, "cycle": k * 2 ** (n * k)},
            {"transient": o.window.transient, "cycle": o.window.cycle},
            "memory-k net of 2n+2 neurons cycles with length k*2^(nk)",
            details={"sequence": list(o.sequence), "mcp": [o.mcp.transient, o.mcp.cycle]},
        )
    return _timed(body)


def check_memory_cycles(pairs: Iterable[tuple[int, int]], workers: int | None = None):
    return fan_out(_memory_cycle, pairs, workers)


# counter properties

def counter_congruence(n: int) -> VerificationReport:
    def body():
        bad = []
        counter = 0
        for j, code in enumerate(cs.u_sequence(n, 2 ** (n + 1))):
            if (bs.code_value(code) - counter) % 2 ** n:
                bad.append(j)
            counter += 1
        return VerificationReport("counter-congruence", {"n": n}, [], bad,
                                  "value(U_n(j)) = j mod 2^n")
    return _timed(body)


def counter_period(n: int) -> VerificationReport:
    def body():
        codes = list(cs.u_sequence(n, 2 ** n + 1))
        distinct = len(set(codes[:-1]))
        closes = bs.codes_identical(codes[-1], codes[0])
        return VerificationReport(
            "counter-period", {"n": n}, {"distinct": 2 ** n, "closes": True},
            {"distinct": distinct, "closes": closes},
            "first 2^n codes pairwise non-identical; U_n(2^n) identical to U_n(0)",
        )
    return _timed(body)


def wider_successor(n: int) -> VerificationReport:
    def body():
        narrow = list(cs.u_sequence(n, 2 ** n + 1))
        wide = list(cs.u_sequence(n + 1, 2 ** n + 1))
        bad = [
            i for i in range(2 ** n)
            if cs.predict_wider_successor(narrow[i], narrow[i + 1], wide[i]) != wide[i + 1]
        ]
        return VerificationReport("wider-successor", {"n": n}, [], bad,
                                  "U_{n+1}(i+1) assembled from U_n(i), U_n(i+1), U_{n+1}(i)")
    return _timed(body)


def v_orbit(n: int) -> list[cs.VWord]:
    """``V_n(1) .. V_n(2^n + 1)`` by direct successor."""
    v = cs.v_initial(n)
    out = [v]
    for _ in range(2 ** n):
        v = cs.v_successor(v)
        out.append(v)
    return out


def direct_successor(n: int) -> VerificationReport:
    """Direct successor against the route through the decoded counter.

    ``u_from_v`` returns ``U_n(i+1)`` for ``V_n(i+1)``, so re-encoding it gives
    ``V_n(i+2)`` directly; the increment shows up as
    ``u_from_v(v_successor(v)) == u_next(u_from_v(v))``.
    """
    def body():
        bad = []
        for i, v in enumerate(v_orbit(n)[:-1]):
            succ = cs.v_successor(v)
            decoded = cs.u_from_v(v)
            if succ != cs.v_from_u(decoded) or cs.u_from_v(succ) != cs.u_next(decoded):
                bad.append(i + 1)
        return VerificationReport("direct-successor", {"n": n}, [], bad,
                                  "direct V successor equals the decode/re-encode route")
    return _timed(body)


def forbidden_closure(n: int) -> VerificationReport:
    def body():
        bad = [i + 1 for i, v in enumerate(v_orbit(n)) if not cs.v_forbidden_ok(v)]
        return VerificationReport("forbidden-pattern", {"n": n}, [], bad,
                                  "no (c'_j, c''_{j-1}) = (1,1) along the V orbit")
    return _timed(body)


def increment_oracle(max_width: int = 8) -> VerificationReport:
    """Every code of width ``1..max_width`` at once, as arrays of bit planes."""
    def body():
        bad = []
        for width in range(1, max_width + 1):
            plus, minus = np.divmod(np.arange(4 ** width, dtype=np.int64), 1 << width)
            sp, sm = bs.increment_planes(plus, minus)
            for i in np.nonzero(sp - sm != plus - minus + 1)[0]:
                bad.append(str(bs.make_code(width, int(plus[i]), int(minus[i]))))
        return VerificationReport("increment-oracle", {"max_width": max_width}, [], bad,
                                  "value(increment(c)) = value(c) + 1 for every code")
    return _timed(body)


def cell_table() -> VerificationReport:
    def body():
        rows = elementary_cell_table()
        bad = [r[:3] for r in rows if r[3] != r[5] or r[4] != r[6]]
        return VerificationReport("cell-table", {"rows": len(rows)}, [], bad,
                                  "threshold cells equal their Boolean forms on admissible inputs")
    return _timed(body)


def check_counter_laws(ns: Iterable[int]) -> list[VerificationReport]:
    ns = list(ns)
    out = [increment_oracle(), cell_table()]
    for n in ns:
        out += [counter_congruence(n), counter_period(n), wider_successor(n),
                forbidden_closure(n)]
    return out


def check_successor(ns: Iterable[int]) -> list[VerificationReport]:
    out = []
    for n in ns:
        out += [direct_successor(n), forbidden_closure(n)]
    return out


# simulation campaign

@dataclass(frozen=True)
class Instance:
    n: int
    k: int
    params: FamilyParams
    x0: tuple[int, ...]


def random_instances(count: int, seed: int = 20240601, n_range=(3, 4), k_range=(1, 4),
                     weight_range=(-2, 2), threshold_range=(0, 2)) -> list[Instance]:
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        n = int(rng.integers(n_range[0], n_range[1] + 1))
        k = int(rng.integers(k_range[0], k_range[1] + 1))
        w = rng.integers(weight_range[0], weight_range[1] + 1, size=6)
        th = rng.integers(threshold_range[0], threshold_range[1] + 1, size=2)
        p = FamilyParams(int(w[0]), int(w[1]), int(w[2]), int(th[0]),
                         int(w[3]), int(w[4]), int(w[5]), int(th[1]))
        size = 2 * n * k + 2
        x0 = rng.integers(0, 2, size=size).astype(np.uint8)
        x0[1] = 1
        x0[size - 2] = 0
        out.append(Instance(n, k, p, tuple(int(b) for b in x0)))
    return out


def _divergence(inst: Instance, transient: int, cycle: int) -> list[tuple[int, int]]:
    """Positions ``(slot i, memory-net neuron j)`` where the last transient state
    differs from its cycle counterpart."""
    if transient == 0:
        return []
    net, x0 = build_family_net(inst.n, inst.k, inst.params, np.array(inst.x0, dtype=np.uint8))
    xs = run(net, x0, transient + cycle)
    a, b = xs[transient - 1], xs[transient - 1 + cycle]
    n = inst.n
    out = []
    for pos in np.nonzero(a != b)[0]:
        neuron = int(pos) + 1
        if neuron == 2 * n * inst.k + 2:
            out.append((inst.k - 1, 2 * n + 2))
        elif neuron <= 2 * n * inst.k:
            out.append(((neuron - 1) // (2 * n), (neuron - 1) % (2 * n) + 1))
    return out


def simulation_instance(inst: Instance) -> list[VerificationReport]:
    """Alignment of the two nets plus the transient/cycle scaling claim."""
    start = time.perf_counter()
    x0 = np.array(inst.x0, dtype=np.uint8)
    o = simulation_orbits(inst.n, inst.k, inst.params, x0)
    T, L = o.mcp.transient, o.mcp.cycle
    params = {"n": inst.n, "k": inst.k, "params": list(inst.params.as_tuple())}
    horizon = T + 2 * L
    align = alignment_check(inst.n, inst.k, inst.params, x0, horizon)
    align_report = VerificationReport(
        "epoch-alignment", dict(params, horizon=horizon), None, align.mismatch,
        "epoch t of the big net readable at memory-net times tk..tk+k-1",
    )
    observed = {"transient": o.window.transient, "cycle": o.window.cycle,
                "sequence": list(o.sequence)}
    expected = {"transient": inst.k * T, "cycle": inst.k * L,
                "sequence": [inst.k * T, inst.k * L]}
    details = {"mcp": [T, L], "x0": "".join(map(str, inst.x0))}
    if observed != expected:
        details["divergence"] = [list(p) for p in _divergence(inst, T, L)]
        details["transient_shortfall"] = inst.k * T - o.window.transient
        details["cycle_ratio"] = (inst.k * L) / o.window.cycle
    scaling = VerificationReport(
        "orbit-scaling", params, expected, observed,
        "memory net transient k*T and cycle k*L", details=details,
    )
    elapsed = time.perf_counter() - start
    align_report.runtime = scaling.runtime = elapsed / 2
    return [align_report, scaling]


def check_simulation(count: int = 100, seed: int = 20240601, workers: int | None = None,
                **ranges) -> list[VerificationReport]:
    instances = random_instances(count, seed, **ranges)
    nested = fan_out(simulation_instance, instances, workers)
    return [r for group in nested for r in group]


def check_alignment(n: int, k: int, p: FamilyParams = COUNTER_PARAMS, x0=None,
                    horizon: int = 64) -> VerificationReport:
    def body():
        rep = alignment_check(n, k, p, x0, horizon)
        return VerificationReport("alignment", {"n": n, "k": k, "horizon": horizon},
                                  None, rep.mismatch,
                                  "memory net reproduces the big net epoch by epoch")
    return _timed(body)
