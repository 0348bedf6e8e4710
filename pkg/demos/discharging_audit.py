#!/usr/bin/env python3
"""Discharging with exact rationals: charges, rules R1-R4, conservation.

Vertices start at d(v) - 6 and faces at 2 d(f) - 6, total 6(E - V - F).
On a 6-regular torus triangulation everything is zero and no rule fires;
on other embeddings the rules move charge around while the exact total
is conserved.
"""

import random
from fractions import Fraction

from oddtorus import (
    TorusParams,
    apply_rules,
    audit,
    blocks,
    build_embedded_graph,
    generate,
    initial_charges,
)
from oddtorus.discharge import rule_transfers
from oddtorus.embedding import trace_faces


def rat(q):
    return f"{q.numerator}/{q.denominator}"


print("=" * 64)
print("Torus triangulations: everything starts and ends at zero")
print("=" * 64)
g = generate(TorusParams(4, 6, 4))
before = initial_charges(g)
report = audit(before, apply_rules(g, before))
print(f"T(4,6,4): totals {rat(report.total_before)} -> {rat(report.total_after)}, "
      f"conserved: {report.conserved}")

print()
print("=" * 64)
print("An 8-vertex with 5-neighbours in blocks of sizes 2, 1, 1")
print("=" * 64)
# centre 1; ring 2..9 with degrees (5,6,5,6,5,5,6,6) pinned by pendants
rotations = {1: list(range(2, 10))}
nxt = 10
for ring, want in zip(range(2, 10), (5, 6, 5, 6, 5, 5, 6, 6)):
    pendants = list(range(nxt, nxt + want - 1))
    nxt += want - 1
    rotations[ring] = [1] + pendants
    for q in pendants:
        rotations[q] = [ring]
g = build_embedded_graph(rotations)
for b in blocks(g, 1):
    print(f"block {b.members} (size {b.size})")
for tr in rule_transfers(g, tuple(trace_faces(g))):
    if tr.rule == "R4":
        print(f"R4: vertex 1 sends {rat(tr.amount)} to {tr.receiver}")

print()
print("=" * 64)
print("Conservation on random cellular embeddings")
print("=" * 64)
rng = random.Random(4)
for trial in range(5):
    n = rng.randint(5, 12)
    verts = list(range(1, n + 1))
    rng.shuffle(verts)
    edges = set()
    for i in range(1, n):
        w = rng.choice(verts[:i])
        edges.add((min(verts[i], w), max(verts[i], w)))
    for _ in range(rng.randint(0, 2 * n)):
        u, v = rng.sample(range(1, n + 1), 2)
        edges.add((min(u, v), max(u, v)))
    adj = {v: [] for v in range(1, n + 1)}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    for v in adj:
        rng.shuffle(adj[v])
    g = build_embedded_graph(adj)
    before = initial_charges(g)
    after = apply_rules(g, before)
    expected = Fraction(6 * (g.edge_count - g.vertex_count - len(before.faces)))
    status = "ok" if before.total == after.total == expected else "MISMATCH"
    print(f"V={g.vertex_count:2d} E={g.edge_count:2d} F={len(before.faces):2d}: "
          f"total {rat(before.total)} -> {rat(after.total)} "
          f"(expected {rat(expected)}) {status}")
