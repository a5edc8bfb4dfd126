#!/usr/bin/env python3
"""End-to-end torus walkthrough: complex, groups, cup values, ring table."""

from precubical import (
    Cochain,
    Z,
    cohomology_groups,
    cup,
    delta_matrix,
    ring_table,
    serialize,
    torus,
)
from precubical.core import CubeId


def main() -> None:
    x = torus()
    print("document:")
    print(serialize(x))

    print("cochain complex:")
    for n in range(x.maxdim + 1):
        d = delta_matrix(x, n)
        print(f"  C^{n} has rank {x.count(n)}; delta^{n} = {d.to_lists()}")
    print()

    print("cohomology over Z:")
    for g in cohomology_groups(x, Z):
        gens = ", ".join(str(gen.values) for gen in g.generators)
        print(f"  H^{g.dim} = {g.describe()}   generators: {gens}")
    print()

    alpha = Cochain.dual(x, x.find_label(1, "t2"), Z)
    beta = Cochain.dual(x, x.find_label(1, "t1"), Z)
    theta = CubeId(2, 0)
    print("cup products of the basic degree-1 cocycles:")
    print(f"  (alpha . beta)(theta) = {cup(x, alpha, beta)(theta)}")
    print(f"  (beta . alpha)(theta) = {cup(x, beta, alpha)(theta)}")
    print(f"  (alpha . alpha)(theta) = {cup(x, alpha, alpha)(theta)}")
    print(f"  (beta . beta)(theta) = {cup(x, beta, beta)(theta)}")
    print()

    print("ring table in class coordinates:")
    table = ring_table(x, Z)
    for p in range(3):
        for q in range(3):
            for i, row in enumerate(table.products[(p, q)]):
                for j, coords in enumerate(row):
                    print(f"  h{p}_{i} * h{q}_{j} -> {coords}")


if __name__ == "__main__":
    main()
