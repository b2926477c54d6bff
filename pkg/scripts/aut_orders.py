"""Compute |Aut(Γ(n,T))| by search for a list of instances and compare with
the closed-form prediction where one applies."""

import argparse
import time
from dataclasses import dataclass

from flaggraph.autsearch import automorphism_group
from flaggraph.formulas import predicted_aut_order
from flaggraph.graphs import build_gpg


@dataclass
class Config:
    instances: tuple = (
        (3, (1, 2)), (4, (1, 3)), (4, (1, 2)), (4, (2,)), (5, (1, 3)), (5, (2, 4)),
        (5, (1, 2)), (6, (1, 4)), (6, (1, 2)), (6, (4, 5)), (7, (1, 5)), (7, (2, 4)),
    )
    max_vertices: int = 512


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--instance", action="append", metavar="N:T1,T2",
                   help="e.g. 7:2,4; may repeat")
    p.add_argument("--max-vertices", type=int, default=Config.max_vertices)
    args = p.parse_args()
    if args.instance:
        instances = []
        for text in args.instance:
            n, sizes = text.split(":")
            instances.append((int(n), tuple(int(x) for x in sizes.split(","))))
    else:
        instances = Config.instances
    for n, T in instances:
        G = build_gpg(n, T)
        start = time.perf_counter()
        result = automorphism_group(G, max_vertices=args.max_vertices)
        elapsed = time.perf_counter() - start
        predicted = predicted_aut_order(n, T)
        verdict = "no formula" if predicted is None else (
            "ok" if predicted == result.order else f"formula {predicted}")
        print(f"Γ({n},{set(T)}) V={G.vertex_count:4d} |Aut|={result.order} "
              f"gens={len(result.generators)} {elapsed:.2f}s  {verdict}")


if __name__ == "__main__":
    main()
