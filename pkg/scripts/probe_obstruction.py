"""Path-count certificates on random point subsets of PG(2, q).

For each q, samples subsets of size ceil(q'^(1+delta)) with q' = sqrt(n/2) and
prints the spread of m*/|A|^1.5, the certified ceiling on edges that could be
planted inside such a subset.
"""

import argparse

from girth5.analysis import remark_probe
from girth5.finite_geometry import incidence_graph


def main():
    ap = argparse.ArgumentParser(description="subset certificates over several planes")
    ap.add_argument("--q", default="5,7,9,11,13")
    ap.add_argument("--deltas", default="0.1,0.25,0.5")
    ap.add_argument("--trials", type=int, default=20)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    print("q,delta,size,min_ratio,median_ratio,max_ratio,all_pass")
    for q in map(int, args.q.split(",")):
        g = incidence_graph(q)
        for delta in map(float, args.deltas.split(",")):
            rep = remark_probe(g, "X", delta, args.trials, args.seed)
            lo, med, hi = rep.ratio_stats()
            print(f"{q},{delta},{rep.size},{lo:.6f},{med:.6f},{hi:.6f},{rep.all_pass}")


if __name__ == "__main__":
    main()
