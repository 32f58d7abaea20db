"""Zero forcing, one force at a time.

Color some vertices; whenever a colored vertex has exactly one uncolored
neighbor it colors that neighbor.  A set that eventually colors everything
is a forcing set, and the smallest one bounds the maximum eigenvalue
multiplicity from above.  The walkthrough runs the process on an 8-vertex
graph where two well-placed pendants suffice, then builds a forcing set
mechanically from a t_plus deletion witness: delete the witness set, take
one endpoint of each leftover cover path, and put the witness back.
"""

import mrbounds as mb


def main() -> None:
    g = mb.generate_family("fig4")
    print(f"graph: {g.graph6()} with edges {sorted(g.edges)}")

    z, witness = mb.zero_forcing_number(g)
    print(f"zero forcing number: {z}, smallest witness {sorted(witness)}")

    trace = mb.forcing_closure(g, witness)
    print("replay:")
    colored = set(trace.initial)
    for u, v in trace.forces:
        print(f"  {u} colors {v}   (colored so far: {sorted(colored)})")
        colored.add(v)
    print(f"  all {len(trace.final)} vertices colored: {trace.forces_all(g.n)}")

    print()
    w = mb.t_plus(g)
    built = mb.forcing_set_from_tplus(g, w)
    print(f"t_plus witness deletes {sorted(w.s)} (value {w.value})")
    sub, labels = mb.delete_vertices(g, w.s)
    for path in mb.min_path_cover(sub).paths:
        print("  leftover path:", " - ".join(str(labels[v]) for v in path))
    print(f"constructed forcing set {sorted(built)}, size {len(built)} <= {w.value}")
    print(f"it forces everything: {mb.forcing_closure(g, built).forces_all(g.n)}")

    print()
    print("contrast: on a cycle one vertex stalls immediately")
    c = mb.cycle_graph(5)
    stall = mb.forcing_closure(c, [0])
    print(f"  from {{0}} on {c.graph6()}: {len(stall.forces)} forces, "
          f"final {sorted(stall.final)}")
    two = mb.forcing_closure(c, [0, 1])
    print(f"  from {{0, 1}}: forces {list(two.forces)} -> done")


if __name__ == "__main__":
    main()
