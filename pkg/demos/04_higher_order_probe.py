"""Probing higher-order differences of maximal functions.

For orders k >= 3 no exact tail formula is claimed: the sign structure of
high-order differences of a hyperbola envelope is not pinned down here.
Instead each scan reports a truncated sum together with a rigorous
remainder bound, so the untruncated value is bracketed:

    value  <=  true  <=  value + remainder_bound.

The demo shrinks the bracket by raising the truncation, and compares the
bracketed ||(M chi_A)^(k)||_1 with the exact ||chi_A^(k)||_1 to show what a
higher-order ratio could look like.  For general functions, the second-order
ratio distribution from a seeded random sweep closes the picture.
"""

from maxreg import (
    IndexSet,
    LatticeFunction,
    forward_difference,
    higher_derivative_scan,
    lp_norm,
    random_functions,
)


def bracket(a: IndexSet, k: int, truncations) -> None:
    chi = LatticeFunction.from_set(a)
    exact = lp_norm(forward_difference(chi, k), 1)
    print(f"\nA = {set(a.elements)}, order k = {k}:  ||chi^({k})||_1 = {exact}")
    for t in truncations:
        scan = higher_derivative_scan(a, k, t)
        lo, hi = scan.value, scan.value + scan.remainder_bound
        print(f"  T = {t:>5}: ||(M chi)^({k})||_1 in "
              f"[{float(lo):.9f}, {float(hi):.9f}]  "
              f"(exact bracket width {float(scan.remainder_bound):.3e})")
        print(f"           truncated ratio against the indicator: "
              f"{float(lo / exact):.9f}")


def main() -> None:
    print("=" * 60)
    print("Truncated higher-order scans with rigorous remainder brackets")
    print("=" * 60)
    bracket(IndexSet.from_iterable([0]), 3, (100, 1000, 10_000))
    bracket(IndexSet.from_iterable([0, 1]), 3, (100, 1000))
    bracket(IndexSet.from_iterable([0, 3]), 4, (100, 1000))

    print("\nGeneral integer-valued functions, second-order ratios")
    print("(exploration only; no bound is asserted for general f):")
    summary = random_functions(1000, 16, 4, seed=7, fast=True)
    q = summary.stats["ratio_quantiles"]
    print(f"  {summary.instances_checked} functions, violations "
          f"{len(summary.violations)}")
    print(f"  ratio quantiles: min {q['min']}  median {q['median']}  "
          f"max {q['max']}")
    best = summary.max_record
    print(f"  extremal draw: values {list(best.function_values)} "
          f"(offset {best.offset}) with ratio {best.ratio}")


if __name__ == "__main__":
    main()
