"""Count connected components of AIG(n,k) and Γ(n,T) for single sizes."""

import argparse

from flaggraph.graphs import build_aig, build_kneser, connected_components


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-n", type=int, default=10)
    args = p.parse_args()
    for n in range(2, args.max_n + 1):
        aig = [len(connected_components(build_aig(n, k))) for k in range(1, n)]
        kneser = [len(connected_components(build_kneser(n, k))) for k in range(1, n)]
        print(f"n={n:2d} AIG components {aig}  Kneser components {kneser}")


if __name__ == "__main__":
    main()
