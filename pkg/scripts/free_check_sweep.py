"""Sweep the free-part divisibility check over primes and degree bounds.

Writes one JSON line per (p, degree) cell with pass counts, orbit statistics and
any failing seeds.
"""

import argparse
import json
import sys
import time
from collections import Counter

from equivariant_sw.oracle import SearchSpec, free_divisibility_check


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--primes", type=int, nargs="+", default=[3, 5, 7])
    ap.add_argument("--degrees", type=int, nargs="+", default=[2, 3, 4])
    ap.add_argument("--trials", type=int, default=50)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--box", type=float, default=2.0)
    ap.add_argument("--out", default="-", help="output file (default stdout)")
    args = ap.parse_args(argv)

    out = sys.stdout if args.out == "-" else open(args.out, "w")
    all_ok = True
    for p in args.primes:
        for deg in args.degrees:
            t0 = time.perf_counter()
            rep = free_divisibility_check(p, args.trials, deg, SearchSpec(box=args.box), seed=args.seed)
            orbits = Counter(len(t.orbit_sizes) for t in rep.trials)
            row = {
                "p": p,
                "degree": deg,
                "trials": len(rep.trials),
                "passed": rep.passed,
                "zeros_mean": sum(t.zeros for t in rep.trials) / max(1, len(rep.trials)),
                "free_orbits_histogram": dict(sorted(orbits.items())),
                "near_singular": sum(t.near_singular for t in rep.trials),
                "failures": [{"seed": list(t.seed), "message": t.message} for t in rep.failures],
                "seconds": round(time.perf_counter() - t0, 2),
            }
            all_ok &= rep.ok
            print(json.dumps(row), file=out, flush=True)
    return 0 if all_ok else 1


if __name__ == "__main__":
    sys.exit(main())
