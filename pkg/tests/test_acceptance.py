"""Acceptance criteria, one test each, at their stated tolerances and budgets.

Every test prints a single ``[PASS]``/``[FAIL]`` line; pytest repeats them in
an "acceptance criteria" section of the summary. Run the file directly
(``python tests/test_acceptance.py``) for the lines alone.
"""

import time

from caianiello import verify
from caianiello.verify import MEMORY_GRID

MEMORY_CYCLES = {(3, 1): 8, (3, 2): 128, (3, 3): 1536, (4, 2): 512,
                 (4, 3): 12288, (3, 4): 16384, (5, 2): 2048}


def _timed(fn):
    start = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - start


def _verdict(emit, number, title, ok, detail):
    emit(f"[{'PASS' if ok else 'FAIL'}] {number:>2}. {title}: {detail}")
    return ok


def test_01_golden_trace(report_line):
    report, elapsed = _timed(verify.check_golden_trace)
    ok = report.passed and len(report.observed) == 9 and report.observed[8] == report.observed[0]
    ok = _verdict(report_line, 1, "8-neuron golden trace", ok and elapsed < 0.010,
                  f"9 rows bit-exact={report.passed}, {elapsed * 1e3:.2f} ms (< 10 ms)")
    assert ok


def test_02_counter_net_cycles(report_line):
    reports, elapsed = _timed(lambda: verify.check_counter_cycles(range(3, 17), workers=1))
    got = {r.params["n"]: (r.observed["transient"], r.observed["cycle"]) for r in reports}
    ok = got == {n: (0, 2 ** n) for n in range(3, 17)}
    ok = _verdict(report_line, 2, "transient 0, cycle 2^n for n=3..16", ok and elapsed < 1.0,
                  f"n=16 -> {got[16]}, sweep {elapsed:.3f} s (< 1 s)")
    assert ok


def test_03_memory_net_cycles(report_line):
    reports, elapsed = _timed(lambda: verify.check_memory_cycles(MEMORY_GRID, workers=1))
    got = {(r.params["n"], r.params["k"]): (r.details["sequence"][0], r.details["sequence"][1])
           for r in reports}
    ok = got == {nk: (0, c) for nk, c in MEMORY_CYCLES.items()}
    ok = ok and all(r.passed for r in reports)  # window-state orbit agrees as well
    cycles = [got[nk][1] for nk in MEMORY_GRID]
    ok = _verdict(report_line, 3, "memory-k cycle k*2^(nk)", ok and elapsed < 5.0,
                  f"cycles {cycles}, {elapsed:.2f} s (< 5 s)")
    assert ok


def test_04_counter_congruence(report_line):
    reports, elapsed = _timed(lambda: [verify.counter_congruence(n) for n in range(3, 9)])
    bad = {r.params["n"]: r.observed for r in reports if not r.passed}
    ok = _verdict(report_line, 4, "value(U_n(j)) = j mod 2^n, n=3..8", not bad and elapsed < 1.0,
                  f"violations={bad or 'none'}, {elapsed * 1e3:.1f} ms (< 1 s)")
    assert ok


def test_05_counter_period(report_line):
    reports, elapsed = _timed(lambda: [verify.counter_period(n) for n in range(3, 13)])
    bad = {r.params["n"]: r.observed for r in reports if not r.passed}
    ok = _verdict(report_line, 5, "2^n distinct codes, U_n(2^n) = U_n(0), n=3..12",
                  not bad and elapsed < 10.0,
                  f"violations={bad or 'none'}, {elapsed * 1e3:.1f} ms (< 10 s)")
    assert ok


def test_06_direct_successor(report_line):
    reports = [verify.direct_successor(n) for n in range(3, 9)]
    bad = {r.params["n"]: r.observed for r in reports if not r.passed}
    ok = _verdict(report_line, 6, "direct V successor = decode/re-encode route, n=3..8", not bad,
                  f"states checked={sum(2 ** n for n in range(3, 9))}, mismatches={bad or 'none'}")
    assert ok


def test_07_forbidden_pattern(report_line):
    reports = [verify.forbidden_closure(n) for n in range(3, 9)]
    bad = {r.params["n"]: r.observed for r in reports if not r.passed}
    ok = _verdict(report_line, 7, "no forbidden (1,1) pair on any V orbit, n=3..8", not bad,
                  f"violations={bad or 'none'}")
    assert ok


def test_08_simulation_campaign(report_line):
    reports, elapsed = _timed(lambda: verify.check_simulation(100, workers=1))
    align = [r for r in reports if r.check == "epoch-alignment"]
    scaling = [r for r in reports if r.check == "orbit-scaling"]
    align_bad = [r for r in align if not r.passed]
    scale_bad = [r for r in scaling if not r.passed]
    ok = not align_bad and not scale_bad and elapsed < 30.0
    detail = (f"alignment {len(align) - len(align_bad)}/{len(align)}, "
              f"(T',L')=(kT,kL) {len(scaling) - len(scale_bad)}/{len(scaling)}, {elapsed:.2f} s (< 30 s)")
    _verdict(report_line, 8, "random-instance simulation campaign", ok, detail)
    for r in align_bad + scale_bad:
        print("   ", r.line(), r.details)
    assert not align_bad, [r.observed for r in align_bad]
    assert not scale_bad, [(r.params, r.observed, r.expected, r.details) for r in scale_bad]
    assert elapsed < 30.0


def test_09_increment_oracle(report_line):
    report, elapsed = _timed(lambda: verify.increment_oracle(8))
    ok = _verdict(report_line, 9, "value(increment(c)) = value(c)+1, width<=8",
                  report.passed and elapsed < 0.100,
                  f"{sum(4 ** w for w in range(1, 9))} codes, bad={len(report.observed)}, "
                  f"{elapsed * 1e3:.1f} ms (< 100 ms)")
    assert ok


def test_10_cell_table(report_line):
    report = verify.cell_table()
    ok = _verdict(report_line, 10, "threshold cells equal Boolean forms",
                  report.passed and report.params["rows"] == 6,
                  f"{report.params['rows']} admissible triples, mismatches={report.observed or 'none'}")
    assert ok


if __name__ == "__main__":
    import sys

    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_"):
            try:
                fn(print)
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
