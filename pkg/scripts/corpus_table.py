#!/usr/bin/env python3
"""Print the symmetry profile of every corpus construction.

Columns: flags, automorphism order, orbit count, type label, colours
with broken face transitivity, orientability, orientation-preserving
order, chirality.
"""

from maniplex.constructions import construction
from maniplex.oriented import aut_plus, is_chiral_a_la_conway, orientation
from maniplex.stg import classify, quotient, transitivity_profile
from maniplex.symmetry import aut_group

LABELS = (
    [f"polygon:{l}" for l in range(3, 13)]
    + [f"simplex:{d}" for d in range(1, 6)]
    + [f"hypercube:{d}" for d in range(1, 6)]
    + [f"prism:{l}" for l in range(3, 9)]
    + [f"pyramid:{l}" for l in range(3, 9)]
    + ["cube", "tetrahedron", "octahedron", "cuboctahedron", "hemicube"]
    + [f"torus44:{b},{c}" for b in range(6) for c in range(6)
       if (b, c) != (0, 0) and b * b + c * c <= 25]
)


def main() -> None:
    header = (f"{'label':<14} {'flags':>5} {'|Aut|':>5} {'k':>2} "
              f"{'class':<22} {'broken':<9} {'orient':<6} {'|Aut+|':>6} chiral")
    print(header)
    print("-" * len(header))
    for label in LABELS:
        g = construction(label)
        a = aut_group(g)
        t = quotient(g, a)
        cls = classify(t).label()
        broken = ",".join(map(str, sorted(transitivity_profile(t)))) or "-"
        o = orientation(g)
        if o is None:
            orient, plus, chiral = "no", "-", "-"
        else:
            ap = aut_plus(g, o)
            orient = "yes"
            plus = str(ap.order)
            chiral = "yes" if is_chiral_a_la_conway(g, o, aut=a, a_plus=ap, stg=t) else "no"
        print(f"{label:<14} {g.flag_count:>5} {a.order:>5} {a.orbit_count:>2} "
              f"{cls:<22} {broken:<9} {orient:<6} {plus:>6} {chiral}")


if __name__ == "__main__":
    main()
