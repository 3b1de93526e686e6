"""Distribution of the local multiplicity over random consistent strata.

For each prime, samples residual weight multisets of a given size and tabulates
the resulting value of prod(I') / prod(I) in F_p, checking that every matching
of a sample gives the same residue.
"""

import argparse
import sys
from collections import Counter

import numpy as np

from equivariant_sw.localmodel import CancellationData, all_matchings, multiplicity_from_cancellation
from equivariant_sw.modp import PrimeModulus


def sample(rng, p, size):
    weights = rng.permutation(np.arange(1, p))
    cut = int(rng.integers(1, p - 1))
    src = rng.choice(weights[:cut], size=size)
    dst = rng.choice(weights[cut:], size=size)
    m = np.bincount(src, minlength=p)
    n = np.bincount(dst, minlength=p)
    return CancellationData(PrimeModulus(p), (0,) * p, tuple(int(x) for x in m), tuple(int(x) for x in n))


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--primes", type=int, nargs="+", default=[5, 7, 11])
    ap.add_argument("--size", type=int, default=3)
    ap.add_argument("--samples", type=int, default=2000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    rng = np.random.default_rng(args.seed)
    for p in args.primes:
        hist = Counter()
        for _ in range(args.samples):
            data = sample(rng, p, args.size)
            values = {multiplicity_from_cancellation(data, mt).value for mt in all_matchings(data)}
            if len(values) != 1:
                print(f"p={p}: matching dependence on {data}", file=sys.stderr)
                return 1
            hist[values.pop()] += 1
        total = sum(hist.values())
        row = "  ".join(f"{v}:{hist[v] / total:.3f}" for v in range(1, p))
        print(f"p={p:>2} size={args.size}  {row}  (uniform {1 / (p - 1):.3f})")
    return 0


if __name__ == "__main__":
    sys.exit(main())
