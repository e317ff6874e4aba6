#!/usr/bin/env python3
"""Tabulate the three success-probability lower bounds as t_av varies.

Prints a CSV (t_av, ppz, del, combined) over [1, crossover] together with
the crossover point where the deletion-route term meets the permutation
solver's 2^(-2n/3).  Pipe the output to a plotting tool of your choice.

Example:
    python scripts/bound_curves.py --n 30 --steps 100 --log
"""

import argparse
import math
import sys

from satlab.analysis import CROSSOVER_T_AV, delppz_bound, ppz_bound


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, default=30)
    parser.add_argument("--s", type=int, default=1)
    parser.add_argument("--steps", type=int, default=100)
    parser.add_argument("--log", action="store_true",
                        help="emit log10 of each bound")
    args = parser.parse_args(argv)

    def fmt(x):
        return repr(math.log10(x)) if args.log else repr(x)

    print(f"# n={args.n} s={args.s} crossover_t_av={CROSSOVER_T_AV!r}")
    print("t_av,ppz,del,combined")
    for k in range(args.steps + 1):
        t_av = 1.0 + (CROSSOVER_T_AV - 1.0) * k / args.steps
        ppz = ppz_bound(args.n)
        deletion = (2.0 / 3.0) ** (t_av * args.n)
        combined = delppz_bound(args.n, args.s, t_av)
        print(f"{t_av!r},{fmt(ppz)},{fmt(deletion)},{fmt(combined)}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
