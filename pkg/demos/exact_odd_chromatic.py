#!/usr/bin/env python3
"""Exact odd chromatic numbers: the solver and its brute-force oracle.

chi_odd is the least k admitting a proper colouring in which every
non-isolated vertex sees some colour an odd number of times.  The
backtracking solver prunes with the two forbidden-colour mechanisms
(properness and "evening-out"); the oracle enumerates and filters.
"""

from oddtorus import (
    PartialColouring,
    TorusParams,
    build_embedded_graph,
    chi_odd,
    chi_odd_bruteforce,
    find_odd_colouring,
    forbidden_colours,
    generate,
)


def cycle(k):
    return build_embedded_graph({v: [(v - 2) % k + 1, v % k + 1] for v in range(1, k + 1)})


print("=" * 64)
print("Anchors")
print("=" * 64)
for name, g in [("C4", cycle(4)), ("C5", cycle(5)), ("C6", cycle(6)), ("C7", cycle(7))]:
    print(f"chi_odd({name}) = {chi_odd(g, 9)}   (oracle: {chi_odd_bruteforce(g, 9)})")

k7 = generate(TorusParams(1, 7, 2))
print(f"chi_odd(K7) = {chi_odd(k7, 9)}  -- at least 7 colours can be needed on the torus")

c5 = cycle(5)
print(f"find_odd_colouring(C5, 4) = {find_odd_colouring(c5, 4)}  (C5 needs 5)")
witness = find_odd_colouring(c5, 5)
print(f"find_odd_colouring(C5, 5) = {[witness[v] for v in range(1, 6)]}")

print()
print("=" * 64)
print("Forbidden colours at a vertex")
print("=" * 64)
# v = 1 hangs off w = 2; w is coloured 1, its other neighbours 2, 3, 3
g = build_embedded_graph({1: [2], 2: [1, 3, 4, 5], 3: [2], 4: [2], 5: [2]})
pc = PartialColouring.on(g, {2: 1, 3: 2, 4: 3, 5: 3})
print("w coloured 1, others 2,3,3:")
print(f"  forbidden at v: {sorted(forbidden_colours(g, pc, 1))}")
print("  1 by properness; 2 by oddness (it would even out w's neighbourhood)")

print()
print("=" * 64)
print("Odd chromatic numbers across the small torus family")
print("=" * 64)
from oddtorus import is_simple  # noqa: E402

for m in range(1, 5):
    for n in range(3, 13):
        if m * n > 12:
            continue
        for t in range(n):
            p = TorusParams(m, n, t)
            if not is_simple(p):
                continue
            print(f"chi_odd(T({m},{n},{t})) = {chi_odd(generate(p), 9)}")
