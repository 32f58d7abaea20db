"""Walk the parameter chain on a few small graphs.

Five integers bracket the maximum eigenvalue multiplicity M(G) over all
symmetric matrices whose off-diagonal zero pattern matches the graph:

    t_minus = delta  <=  M  <=  Z  <=  t_plus  <=  delta_plus

t_minus/t_plus scan deletion sets whose removal leaves a forest and score
the leftover path cover number minus/plus the deletion count.  delta and
delta_plus do the same but insist the leftover is a disjoint union of
paths.  Z is the zero forcing number.  The first equality always holds;
the rest can be strict, and this script shows both behaviors.
"""

import mrbounds as mb

SHOWCASE = [
    ("path on 6", mb.path_graph(6)),
    ("cycle on 6", mb.cycle_graph(6)),
    ("star on 6", mb.star_graph(6)),
    ("wheel on 6", mb.wheel_graph(6)),
    ("4-sun", mb.sun_graph(4)),
    ("unicyclic example", mb.generate_family("fig1")),
    ("pendant-pair example", mb.generate_family("fig4")),
]


def main() -> None:
    header = f"{'graph':22} {'t-':>3} {'Z':>3} {'t+':>3} {'d+':>3}   witness for t-"
    print(header)
    print("-" * len(header))
    for name, g in SHOWCASE:
        tm = mb.t_minus(g)
        tp = mb.t_plus(g)
        dp = mb.delta_plus(g)
        z, _ = mb.zero_forcing_number(g)
        s = "{" + ",".join(str(v) for v in sorted(tm.s)) + "}"
        print(f"{name:22} {tm.value:>3} {z:>3} {tp.value:>3} {dp.value:>3}   delete {s}")

    print()
    g = mb.generate_family("fig1")
    w = mb.t_minus(g)
    sub, labels = mb.delete_vertices(g, w.s)
    cover = mb.min_path_cover(sub)
    print(f"unicyclic example: deleting {sorted(w.s)} leaves a forest whose")
    print(f"cover needs {cover.size} paths, so t_minus = {cover.size} - {len(w.s)} = {w.value}.")
    for path in cover.paths:
        print("  path:", " - ".join(str(labels[v]) for v in path))


if __name__ == "__main__":
    main()
