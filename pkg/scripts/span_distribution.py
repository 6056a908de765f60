"""Span histograms over all labeled graphs (or digraphs) of each order.

    python3 scripts/span_distribution.py --rule standard --max-n 7
    python3 scripts/span_distribution.py --rule digraph --max-n 5 --csv
"""
import argparse
from collections import Counter

import numpy as np

from zfspan import kernel
from zfspan.enumeration import universe_size
from zfspan.forcing import Rule


def histogram(rule: Rule, n: int, chunk: int = 1 << 16) -> Counter:
    kind = "digraphs" if rule is Rule.DIRECTED else "graphs"
    size = universe_size(kind, n)
    hist: Counter = Counter()
    for lo in range(0, size, chunk):
        spans = kernel.sweep_labeled(rule, n, lo, min(size, lo + chunk)).span()
        values, counts = np.unique(spans, return_counts=True)
        hist.update(dict(zip(values.tolist(), counts.tolist())))
    return hist


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--rule", default="standard", choices=["standard", "skew", "digraph"])
    ap.add_argument("--max-n", type=int, default=6)
    ap.add_argument("--csv", action="store_true")
    args = ap.parse_args()
    rule = Rule.parse(args.rule)

    if args.csv:
        print("rule,n,span,count")
    for n in range(1, args.max_n + 1):
        hist = histogram(rule, n)
        if args.csv:
            for s, c in sorted(hist.items()):
                print(f"{rule.value},{n},{s},{c}")
        else:
            total = sum(hist.values())
            row = "  ".join(f"{s}:{c}" for s, c in sorted(hist.items()))
            print(f"n={n} ({total} labeled)  {row}")


if __name__ == "__main__":
    main()
