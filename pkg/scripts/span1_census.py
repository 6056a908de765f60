"""Non-isomorphic standard span-1 graphs per order, split by whether a known
span-1 family covers them.  No characterization of span 1 is known, so the
uncovered graphs are the interesting output.

    python3 scripts/span1_census.py --max-n 6
"""
import argparse

from zfspan import kernel
from zfspan.enumeration import labeled_graph, universe_size
from zfspan.forcing import Rule
from zfspan.formats import to_graph6
from zfspan.isomorphism import are_isomorphic
from zfspan.verify import span1_instances


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--max-n", type=int, default=6)
    ap.add_argument("--list", action="store_true", help="print graph6 of uncovered graphs")
    args = ap.parse_args()

    known = span1_instances(args.max_n)
    for n in range(1, args.max_n + 1):
        size = universe_size("graphs", n)
        spans = kernel.sweep_labeled(Rule.STANDARD, n, 0, size).span()
        reps = []
        for idx in (i for i in range(size) if spans[i] == 1):
            g = labeled_graph(n, idx)
            if not any(g.num_edges == r.num_edges and are_isomorphic(g, r) for r in reps):
                reps.append(g)
        family = [g for _, g in known if g.n == n]
        covered = [g for g in reps if any(are_isomorphic(g, h) for h in family)]
        uncovered = [g for g in reps if g not in covered]
        print(f"n={n}: {len(reps)} span-1 graphs up to isomorphism, "
              f"{len(covered)} in known families, {len(uncovered)} other")
        if args.list:
            for g in uncovered:
                print("   ", to_graph6(g))


if __name__ == "__main__":
    main()
