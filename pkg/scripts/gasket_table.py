"""Print the table of irreducible integral gaskets with per-bend counts."""

import argparse
from collections import Counter

from apollonian.enumeration import enumerate_gaskets
from apollonian.numerics import rat_str


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--max-bend", type=int, default=32)
    args = parser.parse_args()

    records = enumerate_gaskets(args.max_bend)
    for r in records:
        q = ", ".join(str(b) for b in r.quintet)
        print(f"{r.key.B:4d} {r.key.mu:4d} {r.key.k:5d} {r.key.n:6d}  ({q})  "
              f"shift {rat_str(r.shift):>6}  {r.symmetry}")
    counts = Counter(r.key.B for r in records)
    kinds = Counter(str(r.symmetry) for r in records)
    print()
    print("per root bend:", " ".join(f"{b}:{counts[b]}" for b in sorted(counts)))
    print("by symmetry:", ", ".join(f"{k} {v}" for k, v in sorted(kinds.items())))
    print("total:", len(records))


if __name__ == "__main__":
    main()
