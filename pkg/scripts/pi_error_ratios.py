"""Errors of the exact polygon bounds per halving, and how fast they shrink."""
import argparse

from archimedes_sqrt.pi_bounds import halving_errors


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-doublings", type=int, default=6)
    parser.add_argument("--precision", type=int, default=96, help="bits for the sqrt 3 start")
    args = parser.parse_args()
    ks = tuple(range(1, args.max_doublings + 1))
    errors = halving_errors(args.precision, ks)
    print(f"{'sides':>6} {'pi - lower':>14} {'upper - pi':>14} {'ratio lo':>9} {'ratio hi':>9} {'hi/lo':>6}")
    prev = None
    for k in ks:
        lo, hi = errors[k]
        ratios = ("", "") if prev is None else (f"{float(prev[0] / lo):.4f}", f"{float(prev[1] / hi):.4f}")
        print(f"{6 * 2 ** k:>6} {float(lo):>14.6e} {float(hi):>14.6e} {ratios[0]:>9} {ratios[1]:>9} "
              f"{float(hi / lo):>6.3f}")
        prev = (lo, hi)


if __name__ == "__main__":
    main()
