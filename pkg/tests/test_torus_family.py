"""T(m,n,t) generation, simplicity, canonical m=1 parameters."""

from __future__ import annotations

import pytest

from oddtorus.embedding import euler_characteristic, is_6regular_triangulation, trace_faces
from oddtorus.errors import NotSimpleError
from oddtorus.torus import (
    TorusParams,
    canonical_m1,
    generate,
    is_simple,
    simplicity_witness,
    vertex_coords,
    vertex_id,
)


def neighbour_coords(p, i, j):
    g = generate(p)
    return {vertex_coords(p, w) for w in g.rotation(vertex_id(p, i, j))}


class TestGenerate:
    def test_wrap_neighbours_of_t464(self):
        # t=4, n=6: 1-t = -3 = 3 and 1-t-1 = -4 = 2 (mod 6)
        nbrs = neighbour_coords(TorusParams(4, 6, 4), 4, 1)
        assert (1, 3) in nbrs and (1, 2) in nbrs

    def test_t1_13_4_neighbours_of_vertex_one(self):
        g = generate(TorusParams(1, 13, 4))
        assert set(g.rotation(1)) == {2, 13, 5, 10, 6, 9}

    def test_t1_7_2_is_complete(self):
        g = generate(TorusParams(1, 7, 2))
        for u in g.vertices():
            for v in g.vertices():
                if u != v:
                    assert g.has_edge(u, v)

    def test_not_simple_raises_with_witness(self):
        with pytest.raises(NotSimpleError) as exc:
            generate(TorusParams(1, 4, 1))
        assert "twice" in str(exc.value) or "loop" in str(exc.value)

    def test_param_validation(self):
        with pytest.raises(ValueError):
            TorusParams(0, 5, 1)
        with pytest.raises(ValueError):
            TorusParams(2, 5, 5)
        with pytest.raises(ValueError):
            TorusParams(2, 5, -1)


class TestIsSimple:
    def test_m1_shift_too_small(self):
        assert not is_simple(TorusParams(1, 4, 1))

    def test_m1_repeated_neighbour(self):
        # vertex 1 would list 3 twice: 1+2 and 1-(2+1) = 3 (mod 5)
        assert not is_simple(TorusParams(1, 5, 2))
        assert "twice" in simplicity_witness(TorusParams(1, 5, 2))

    def test_known_simple_instances(self):
        for m, n, t in [(4, 6, 4), (2, 5, 2), (1, 13, 4), (7, 7, 5)]:
            assert is_simple(TorusParams(m, n, t))

    def test_every_nonsimple_witness_is_concrete(self):
        for n in range(3, 13):
            for t in range(n):
                p = TorusParams(1, n, t)
                w = simplicity_witness(p)
                if w is not None:
                    assert "twice" in w or "self-loop" in w
                    with pytest.raises(NotSimpleError):
                        generate(p)


class TestStructure:
    def test_counts_and_surface(self):
        for m in range(1, 7):
            for n in range(3, 9):
                for t in range(n):
                    p = TorusParams(m, n, t)
                    if not is_simple(p):
                        continue
                    g = generate(p)
                    faces = trace_faces(g)
                    assert g.vertex_count == m * n
                    assert g.edge_count == 3 * m * n
                    assert len(faces) == 2 * m * n
                    assert all(f.size == 3 for f in faces)
                    assert euler_characteristic(g) == 0
                    assert is_6regular_triangulation(g)


class TestCanonicalM1:
    def test_examples(self):
        assert canonical_m1(13, 8) == (13, 4)
        assert canonical_m1(13, 4) == (13, 4)
        assert canonical_m1(7, 3) == (7, 3)

    def test_mirror_parameters_give_isomorphic_graphs(self):
        # j -> (n+1-j) mod n maps T(1,n,t) onto T(1,n,n-t-1)
        for n in range(3, 16):
            for t in range(n):
                p = TorusParams(1, n, t)
                if not is_simple(p):
                    continue
                q = TorusParams(1, n, n - t - 1)
                assert is_simple(q)
                g, h = generate(p), generate(q)
                phi = lambda j: (n + 1 - j - 1) % n + 1
                for u in g.vertices():
                    assert {phi(w) for w in g.rotation(u)} == set(h.rotation(phi(u)))

    def test_canonical_parameters_generate_same_graph(self):
        for n in range(5, 16):
            for t in range(2, n):
                p = TorusParams(1, n, t)
                if not is_simple(p):
                    continue
                _, tc = canonical_m1(n, t)
                g, h = generate(p), generate(TorusParams(1, n, tc))
                assert {frozenset(e) for e in g.edges()} == {
                    frozenset(e) for e in h.edges()
                }


class TestCoordinates:
    def test_flattening_round_trip(self):
        p = TorusParams(4, 6, 4)
        for i in range(1, 5):
            for j in range(1, 7):
                assert vertex_coords(p, vertex_id(p, i, j)) == (i, j)
        assert vertex_id(p, 1, 1) == 1
        assert vertex_id(p, 4, 6) == 24
