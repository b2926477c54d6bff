"""Tabulate brute-force maximum and second-maximum common-neighbour counts
against the closed forms for every admissible (n, a, b) up to a size bound."""

import argparse
from dataclasses import dataclass

from flaggraph.formulas import n_max, n_second_max
from flaggraph.graphs import build_gpg, common_neighbor_count


@dataclass
class Config:
    max_n: int = 8
    vertex_cap: int = 600


def distinct_counts(G):
    V = G.vertex_count
    return sorted({common_neighbor_count(G, u, v) for u in range(V) for v in range(u + 1, V)},
                  reverse=True)


def run(cfg: Config) -> list[dict]:
    rows = []
    for n in range(3, cfg.max_n + 1):
        for a in range(1, n):
            for b in range(a + 1, n):
                if not (a + b + 1 <= n and 2 * a < n < 2 * b):
                    continue
                G = build_gpg(n, (a, b), cfg.vertex_cap)
                counts = distinct_counts(G)
                value, case = n_max(n, a, b)
                row = {"n": n, "a": a, "b": b, "V": G.vertex_count, "max": counts[0],
                       "formula": value, "case": case.value}
                if 3 * b == 2 * n and n // 3 - 1 >= a:
                    row["second"] = counts[1]
                    row["second_formula"] = n_second_max(n, a)
                rows.append(row)
    return rows


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-n", type=int, default=Config.max_n)
    p.add_argument("--vertex-cap", type=int, default=Config.vertex_cap)
    args = p.parse_args()
    for row in run(Config(args.max_n, args.vertex_cap)):
        ok = row["max"] == row["formula"] and row.get("second") == row.get("second_formula")
        extra = (f"  second {row['second']} vs {row['second_formula']}"
                 if "second" in row else "")
        print(f"n={row['n']} a={row['a']} b={row['b']} V={row['V']:4d} "
              f"max {row['max']} vs {row['formula']} ({row['case']}){extra}"
              f"  {'ok' if ok else 'MISMATCH'}")


if __name__ == "__main__":
    main()
