"""Random-instance campaign comparing the memory-k net with its memoryless model.

For each instance, prints the big-net orbit (T, L), the memory-net orbit
(T', L'), and where the last transient state differs from its cycle partner
(as memory-net (slot, neuron) pairs). Summarises how often T' == k*T and
whether k*(T-1) < T' <= k*T and L' == k*L held throughout.

    python scripts/transient_campaign.py --instances 1000 --seed 1
"""

import argparse
import collections
import json

from caianiello.verify import check_simulation


def main():
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("--instances", type=int, default=100)
    ap.add_argument("--seed", type=int, default=20240601)
    ap.add_argument("--workers", type=int, default=None)
    ap.add_argument("--show", type=int, default=10, help="print this many shortfalls")
    args = ap.parse_args()

    reports = check_simulation(args.instances, args.seed, args.workers)
    align = [r for r in reports if r.check == "epoch-alignment"]
    scaling = [r for r in reports if r.check == "orbit-scaling"]

    exact = bounded = cycles = 0
    shortfalls = collections.Counter()
    shown = 0
    for r in scaling:
        k = r.params["k"]
        T, L = r.details["mcp"]
        Tp, Lp = r.observed["transient"], r.observed["cycle"]
        exact += (Tp, Lp) == (k * T, k * L)
        bounded += k * (T - 1) < Tp <= k * T
        cycles += Lp == k * L
        if Tp != k * T:
            shortfalls[(k, k * T - Tp)] += 1
            if shown < args.show:
                shown += 1
                print(json.dumps({"params": r.params, "mcp": [T, L], "memory": [Tp, Lp],
                                  "x0": r.details["x0"], "divergence": r.details["divergence"]}))

    total = len(scaling)
    print(f"alignment ok           {sum(r.passed for r in align)}/{len(align)}")
    print(f"L' == k*L              {cycles}/{total}")
    print(f"T' == k*T              {exact}/{total}")
    print(f"k(T-1) < T' <= kT      {bounded}/{total}")
    for (k, gap), count in sorted(shortfalls.items()):
        print(f"  k={k} shortfall {gap}: {count}")


if __name__ == "__main__":
    main()
