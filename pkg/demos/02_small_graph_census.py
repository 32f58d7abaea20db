"""Sweep every labeled graph up to 5 vertices and audit the chain.

The sweep recomputes each parameter with an unrelated algorithm (kept-set
sweep for delta, bounded deletion search for t_minus, closure search for Z)
so an equality between columns is evidence rather than an echo of shared
code.  The second half tallies how often the chain collapses: for which
graphs the lower and upper deletion scores already agree, and where zero
forcing is exactly the upper score.
"""

import mrbounds as mb

MAX_N = 5


def main() -> None:
    violations = mb.verify_chain_corpus(MAX_N)
    total = sum(2 ** (n * (n - 1) // 2) for n in range(1, MAX_N + 1))
    print(f"chain checked on all {total} labeled graphs with n <= {MAX_N}: "
          f"{len(violations)} violations")
    for v in violations[:5]:
        print("  ", v)

    print()
    survey = mb.survey_open_questions(MAX_N)
    print(f"equality census over the same corpus:")
    for name, bucket in survey["classes"].items():
        eq, st = bucket["equal_count"], bucket["strict_count"]
        print(f"  {name:22} equal on {eq:5}, strict on {st:5}")

    # forests are exactly where the deletion scores collapse at this scale
    forests = equal_forests = 0
    for n in range(1, MAX_N + 1):
        for g in mb.enumerate_small_graphs(n):
            if mb.classify(g).is_forest:
                forests += 1
                if g.graph6() in survey["classes"]["t_minus_eq_t_plus"]["equal"]:
                    equal_forests += 1
    print()
    print(f"forests in the corpus: {forests}; all of them have t_minus = t_plus:"
          f" {equal_forests == forests}")

    strict = survey["classes"]["z_eq_t_plus"]["strict"]
    print(f"graphs with Z strictly below t_plus at n <= {MAX_N}: {len(strict)}")
    if strict:
        g = mb.parse_graph6(strict[0])
        z, _ = mb.zero_forcing_number(g)
        print(f"  first: {strict[0]} with Z = {z}, t_plus = {mb.t_plus(g).value}")


if __name__ == "__main__":
    main()
