"""Convex/concave decomposition and exact second-difference norms.

A point is convex when the centered second difference is >= 0 (ties convex),
concave otherwise.  Maximal runs of one class form chains; on each chain the
sum of |second difference| telescopes to the four values flanking the run.
Summing chains shows the whole second-difference norm is controlled by the
concave boundary alone: that boundary bound is computed here next to the
exact norm, for an indicator and for its maximal function.

The punchline pair of facts (Theorem 1 / Lemma 1 in the API):

* second norm of M chi_A  <=  3 * second norm of chi_A, and
* M chi_A is concave only at points of A.
"""

from maxreg import (
    AnalyzedFunction,
    IndexSet,
    LatticeFunction,
    chain_sum_check,
    decompose,
    lemma1_violations,
    maximal_profile,
    theorem1_report,
)


def walk(elements) -> None:
    a = IndexSet.from_iterable(elements)
    chi = LatticeFunction.from_set(a)
    print(f"\nA = {set(a.elements)}")
    for label, g in (
        ("chi_A", AnalyzedFunction.from_lattice(chi)),
        ("M chi_A", AnalyzedFunction.from_profile(maximal_profile(chi))),
    ):
        dec = decompose(g)
        print(f"  {label}: window [{g.lo}, {g.hi}]")
        print(f"    chains          "
              + " ".join(f"{c.kind}[{c.start},{c.end}]" for c in dec.chains))
        print(f"    concave set     {set(dec.s_minus.elements) or '{}'}")
        print(f"    boundaries      left {set(dec.left_boundary.elements) or '{}'} "
              f"right {set(dec.right_boundary.elements) or '{}'}")
        print(f"    second norm     {dec.second_norm}")
        print(f"    boundary bound  {dec.funeq_rhs_value}  "
              f"(dominates: {dec.funeq_rhs_value >= dec.second_norm})")
        for c in dec.chains:
            start, end = max(c.start, g.lo + 1), min(c.end, g.hi - 1)
            if start > end:
                continue
            lhs, rhs = chain_sum_check(g, type(c)(c.kind, start, end))
            assert lhs == rhs
        print("    chain telescoping identity holds on every chain")

    record = theorem1_report(a)
    print(f"  ratio ||(M chi)''|| / ||chi''|| = {record.max_second_norm} / "
          f"{record.chi_second_norm} = {record.ratio}   (<= 3)")
    print(f"  concavity outside A: {set(lemma1_violations(a).elements) or 'none'}")


def main() -> None:
    print("=" * 60)
    print("Chains, boundaries, and exact second-difference norms")
    print("=" * 60)
    for elements in ([0], [0, 1], [0, 2], [0, 2, 3, 7], [0, 4, 5, 6, 9]):
        walk(elements)


if __name__ == "__main__":
    main()
