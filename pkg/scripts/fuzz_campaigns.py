"""Run every fuzz campaign at full size and print a one-line summary each.

    python3 scripts/fuzz_campaigns.py [--seed 1] [--trials 10000] [--json out.json]
"""

import argparse
import json
import time

from chromspec.harness import FuzzConfig, fuzz_bounds_vs_chi, fuzz_lemma1, fuzz_signless, fuzz_theorem1


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--trials", type=int, default=10_000)
    p.add_argument("--json", help="write the full summaries here")
    args = p.parse_args()

    campaigns = [
        ("theorem1", lambda: fuzz_theorem1(FuzzConfig(trials=args.trials, seed=args.seed))),
        ("lemma1", lambda: fuzz_lemma1(FuzzConfig(trials=args.trials, seed=args.seed))),
        ("bounds-vs-chi", lambda: fuzz_bounds_vs_chi(FuzzConfig(trials=200, seed=args.seed, n_range=(7, 12)))),
        ("signless", lambda: fuzz_signless(FuzzConfig(trials=500, seed=args.seed, n_range=(7, 10), r_range=(2, 2)))),
    ]
    out = {}
    for name, run in campaigns:
        start = time.perf_counter()
        s = run()
        elapsed = time.perf_counter() - start
        print(f"{name:<14} trials={s.trials_run:<6} violations={s.violation_count:<3} "
              f"near_equality={len(s.near_equality):<5} min_gap={s.min_gap:+.3e} {elapsed:6.1f}s")
        out[name] = s.to_dict()
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(out, fh, indent=2)


if __name__ == "__main__":
    main()
