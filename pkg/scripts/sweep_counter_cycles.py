"""Cycle lengths of the 2n+2-neuron counter network and of its memory-k simulator.

    python scripts/sweep_counter_cycles.py --n 3..16
    python scripts/sweep_counter_cycles.py --grid 3..5x1..4 --max-states 100000
"""

import argparse
import time

from caianiello.cli import parse_range
from caianiello.memory_net import simulation_orbits
from caianiello.threshold_net import build_theorem1_net, orbit


def main():
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("--n", type=parse_range, default=parse_range("3..16"))
    ap.add_argument("--grid", help="memory-net grid as NxK ranges, e.g. 3..5x1..4")
    ap.add_argument("--max-states", type=int, default=1 << 17,
                    help="skip grid points whose predicted cycle exceeds this")
    args = ap.parse_args()

    print("n\tneurons\ttransient\tcycle\t2^n\tseconds")
    for n in args.n:
        start = time.perf_counter()
        net, x0 = build_theorem1_net(n)
        s = orbit(net, x0)
        print(f"{n}\t{net.size}\t{s.transient}\t{s.cycle}\t{2 ** n}\t{time.perf_counter() - start:.3f}")

    if args.grid:
        ns, ks = (parse_range(part) for part in args.grid.split("x"))
        print("\nn\tk\tT'\tL'\tk*2^(nk)\tseconds")
        for n in ns:
            for k in ks:
                predicted = k * 2 ** (n * k)
                if predicted > args.max_states:
                    print(f"{n}\t{k}\t-\t-\t{predicted}\tskipped")
                    continue
                start = time.perf_counter()
                o = simulation_orbits(n, k)
                print(f"{n}\t{k}\t{o.window.transient}\t{o.window.cycle}\t{predicted}"
                      f"\t{time.perf_counter() - start:.3f}")


if __name__ == "__main__":
    main()
