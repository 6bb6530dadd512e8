"""Hoffman versus Laplacian bound on K_n - e and on large wheels.

    python3 scripts/family_comparisons.py [--max-n 16] [--wheels 50 100 200]
"""

import argparse

from chromspec import graph as gr
from chromspec.bounds import bound_report


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-n", type=int, default=16)
    p.add_argument("--wheels", type=int, nargs="+", default=[50, 100, 200, 400])
    args = p.parse_args()

    print("K_n - e")
    print(f"{'n':>4} {'hoffman':>10} {'ceil':>5} {'laplacian':>10} {'ceil':>5} {'chi':>4}")
    for n in range(4, args.max_n + 1):
        r = bound_report(gr.complete_minus_edge(n))
        print(f"{n:>4} {r.hoffman:>10.4f} {r.hoffman_ceil:>5} {r.nikiforov:>10.4f} {r.nikiforov_ceil:>5} {r.chi_exact:>4}")

    print("\nwheel W_{1,n} (chi = 3 for even n, 4 for odd n)")
    print(f"{'n':>5} {'hoffman':>10} {'ceil':>5} {'laplacian':>10} {'ceil':>5}")
    for n in args.wheels:
        r = bound_report(gr.wheel(n), compute_chi=False)
        print(f"{n:>5} {r.hoffman:>10.4f} {r.hoffman_ceil:>5} {r.nikiforov:>10.4f} {r.nikiforov_ceil:>5}")


if __name__ == "__main__":
    main()
