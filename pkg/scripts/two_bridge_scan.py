#!/usr/bin/env python3
"""Scan random two-bridge links: white-face censuses of the augmented
polyhedron and the spread between the best upper and lower volume bounds.
"""

import argparse
import random
from collections import Counter

from volbounds.augmented import augment
from volbounds.links import HypothesisFlags, link_report
from volbounds.twists import continued_fraction_value, two_bridge_diagram


def random_fraction(rng, t):
    digits = [rng.randint(1, 6) for _ in range(t)]
    if digits[-1] < 2:
        digits[-1] = 2
    value = continued_fraction_value(digits)
    return value.numerator, value.denominator


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-t", type=int, default=10)
    parser.add_argument("--samples", type=int, default=40)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    flags = HypothesisFlags(
        reduced=True, alternating=True, two_bridge=True,
        not_figure_eight=True, not_borromean=True,
    )

    print(f"{'t':>3} {'distinct censuses':>18} {'best upper':>11} {'best lower':>11} {'ratio':>7}")
    for t in range(2, args.max_t + 1):
        censuses = Counter()
        spreads = []
        for _ in range(args.samples):
            p, q = random_fraction(rng, t)
            diagram = two_bridge_diagram(p, q)
            poly = augment(diagram)
            censuses[tuple(sorted(poly.white_census.items()))] += 1
            rows = link_report(diagram.decomposition(), flags, white_census=poly.white_census)
            upper = min(r.value for r in rows if r.applicable and r.kind == "upper")
            lower = max(r.value for r in rows if r.applicable and r.kind == "lower")
            spreads.append((upper, lower))
        upper, lower = spreads[0]
        print(
            f"{t:>3} {len(censuses):>18} {upper:>11.6f} {lower:>11.6f}"
            f" {upper / max(lower, 1e-9):>7.2f}"
        )
        for census, count in censuses.most_common(3):
            pretty = ", ".join(f"f{n}={f}" for n, f in census)
            print(f"     {count:>3} x  {pretty}")


if __name__ == "__main__":
    main()
