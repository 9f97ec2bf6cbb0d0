"""Edge counts of dense_girth5(m) next to z_lower and z_upper for a range of m."""

import argparse

from girth5.augment import dense_girth5
from girth5.bipartite import z_lower_construct, z_upper


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--start", type=int, default=2)
    ap.add_argument("--stop", type=int, default=200)
    ap.add_argument("--step", type=int, default=1)
    args = ap.parse_args()
    print("n,z_upper,e_zlower,e_dense,gain,gain_per_n125")
    for n in range(args.start, args.stop + 1, args.step):
        zl, d = z_lower_construct(n).m, dense_girth5(n).m
        print(f"{n},{z_upper(n)},{zl},{d},{d - zl},{(d - zl) / n ** 1.25:.6f}")


if __name__ == "__main__":
    main()
