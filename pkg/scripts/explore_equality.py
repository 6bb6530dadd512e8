"""Rank near-equality instances of the block inequality and tally them per family.

    python3 scripts/explore_equality.py [--trials 500] [--top 15] [--n 2 12]
"""

import argparse
from collections import Counter

from chromspec.harness import FuzzConfig, explore_equality


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--trials", type=int, default=500)
    p.add_argument("--top", type=int, default=15)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--n", type=int, nargs=2, default=[2, 12])
    args = p.parse_args()

    res = explore_equality(FuzzConfig(trials=args.trials, seed=args.seed, n_range=tuple(args.n)), top_k=args.top)
    print(f"{'family':<32} {'instances':>9} {'near equality':>14}")
    for family, row in res.per_family.items():
        print(f"{family:<32} {row['instances']:>9} {row['near_equality']:>14}")

    print(f"\ntop {len(res.top)}")
    for rec in res.top:
        t = rec.tags
        print(f"  {rec.kind:<32} trial={rec.trial:<5} gap={rec.gap:+.2e} r={t['r']} "
              f"blocks={t['block_sizes']} support_bipartite={t['support_bipartite']}")

    shapes = Counter((t.tags["b_zero"], t.tags["b_rowsum"], t.tags["support_bipartite"]) for t in res.top)
    print("\n(B = 0, B = rowsum diagonal, support bipartite) among the top:")
    for key, count in shapes.most_common():
        print(f"  {key}: {count}")


if __name__ == "__main__":
    main()
