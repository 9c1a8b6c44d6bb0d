from itertools import combinations_with_replacement

import numpy as np
import pytest

from finsub.homology import euler_characteristic, homology_of_sset, normalized_chains
from finsub.simplicial import (CellCapExceeded, SSetMap, SimplicialError,
                               collapse, compose_maps, from_ordered_complex,
                               identity_map, power, quotient, sub_object)
from finsub.spaces import builtin_space


@pytest.fixture(scope="module")
def circle():
    return from_ordered_complex(builtin_space("circle3"), 2)


def test_circle_nondegenerate_counts(circle):
    assert circle.nondeg_counts() == (3, 3, 0)


def test_circle_level2_count_against_enumeration(circle):
    # oracle: monotone triples over {0,1,2} whose support is a simplex
    simplices = builtin_space("circle3").simplex_set
    oracle = [t for t in combinations_with_replacement(range(3), 3)
              if tuple(sorted(set(t))) in simplices]
    assert circle.counts[2] == len(oracle) == 9


def test_sphere_nondegenerate_counts():
    S = from_ordered_complex(builtin_space("sphere2"), 3)
    assert S.nondeg_counts() == (4, 6, 4, 0)


def test_truncation_below_dimension_rejected():
    with pytest.raises(SimplicialError):
        from_ordered_complex(builtin_space("sphere2"), 1)


def test_payloads_are_lex_sorted(circle):
    for k in range(circle.truncation + 1):
        payloads = [circle.payload(k, i) for i in range(circle.counts[k])]
        assert payloads == sorted(payloads)


def test_power_square_of_circle(circle):
    P, projections = power(circle, 2)
    # triangulated torus: nondegenerate cells and Euler characteristic
    assert P.nondeg_counts() == (9, 27, 18)
    assert euler_characteristic(normalized_chains(P)) == 0
    h = homology_of_sset(P)
    assert [str(g) for g in h.groups] == ["Z", "Z^2", "Z"]
    # the top level still carries cells, so degree 2 is flagged
    assert h.unreliable == frozenset({2})
    assert len(projections) == 2
    for proj in projections:
        assert proj.target is circle


def test_power_one_is_identity(circle):
    P, _ = power(circle, 1)
    assert P.same_cells(circle)


def test_power_of_interval_is_contractible():
    I = from_ordered_complex(builtin_space("interval"), 2)
    P, _ = power(I, 2)
    groups = homology_of_sset(P).groups
    assert [str(g) for g in groups] == ["Z", "0", "0"]


def test_power_cell_cap(monkeypatch, circle):
    monkeypatch.setenv("FINSUB_CELL_CAP", "10")
    with pytest.raises(CellCapExceeded, match="cap"):
        power(circle, 3)


def test_quotient_empty_relation(circle):
    Q, proj = quotient(circle, [])
    assert Q.same_cells(circle)
    assert all(np.array_equal(a, np.arange(len(a))) for a in proj.assignment)


def test_quotient_collapse_vertices_gives_wedge(circle):
    # gluing the three vertices of the triangle gives a wedge of 3 circles
    Q, _ = quotient(circle, [((0, 0), (0, 1)), ((0, 1), (0, 2))])
    groups = homology_of_sset(Q).groups
    assert groups[0].betti == 1
    assert groups[1].betti == 3 and not groups[1].torsion
    assert euler_characteristic(normalized_chains(Q)) == -2


def test_quotient_closure_under_faces(circle):
    # seed swaps at the top level only; faces force them all the way down
    P, _ = power(circle, 2)
    M2 = circle.counts[2]
    idx2 = np.arange(P.counts[2], dtype=np.int64)
    swapped2 = (idx2 % M2) * M2 + idx2 // M2
    Q, proj = quotient(P, {2: (idx2, swapped2)})
    for k in (0, 1):
        Mk = circle.counts[k]
        idx = np.arange(P.counts[k], dtype=np.int64)
        swapped = (idx % Mk) * Mk + idx // Mk
        assert np.array_equal(proj.assignment[k], proj.assignment[k][swapped])


def test_quotient_closure_under_degeneracies(circle):
    # seed a vertex swap; its degeneracies must be identified one level up
    P, _ = power(circle, 2)
    M0, M1 = circle.counts[0], circle.counts[1]
    Q, proj = quotient(P, [((0, 0 * M0 + 1), (0, 1 * M0 + 0))])
    s0 = circle.degens[0][0, 0]
    s1 = circle.degens[0][1, 0]
    assert proj.assignment[1][s0 * M1 + s1] == proj.assignment[1][s1 * M1 + s0]


def test_sub_object_closure_violation(circle):
    # a lone edge without its endpoints is not a subcomplex
    with pytest.raises(SimplicialError, match="closed"):
        sub_object(circle, lambda level, payload: level == 1 and payload == (0, 1))


def test_sub_object_vertex_star(circle):
    # cells supported on vertex 0 form a point subobject
    A, incl = sub_object(circle, lambda level, payload: set(payload) == {0})
    assert A.counts[0] == 1
    assert incl.target is circle
    groups = homology_of_sset(A).groups
    assert [str(g) for g in groups] == ["Z", "0", "0"]


def test_collapse_whole_space_is_point(circle):
    A, incl = sub_object(circle, lambda level, payload: True)
    Q, _ = collapse(circle, incl)
    assert Q.counts[0] == 1
    assert Q.nondeg_counts() == (1, 0, 0)


def test_collapse_empty_rejected(circle):
    with pytest.raises(SimplicialError):
        A, incl = sub_object(circle, lambda level, payload: False)
        collapse(circle, incl)


def test_compose_maps_and_identity(circle):
    ident = identity_map(circle)
    comp = compose_maps(ident, ident)
    assert all(np.array_equal(a, b) for a, b in
               zip(comp.assignment, ident.assignment))
    P, projections = power(circle, 2)
    back = compose_maps(ident, projections[0])
    assert all(np.array_equal(a, b) for a, b in
               zip(back.assignment, projections[0].assignment))


def test_compose_maps_mismatch(circle):
    P, projections = power(circle, 2)
    with pytest.raises(SimplicialError, match="source"):
        compose_maps(projections[0], projections[0])


def test_map_validation_catches_noncommuting(circle):
    bad = [np.arange(n, dtype=np.int64) for n in circle.counts]
    bad[0] = np.roll(bad[0], 1)
    with pytest.raises(SimplicialError, match="commute"):
        SSetMap(circle, circle, tuple(bad))


def test_degenerate_tower(circle):
    t0 = circle.degenerate_tower(1, 0)
    assert circle.payload(0, t0) == (1,)
    t2 = circle.degenerate_tower(1, 2)
    assert circle.payload(2, t2) == (1, 1, 1)
    assert not circle.nondegenerate(2)[t2]


def test_dump_smoke(circle, capsys):
    circle.dump()
    out = capsys.readouterr().out
    assert "level 0: 3 cells" in out


def test_validation_rejects_broken_faces(circle):
    faces = [None] + [f.copy() for f in circle.faces[1:]]
    faces[1][0, 0] = (faces[1][0, 0] + 1) % circle.counts[0]
    degens = [s.copy() for s in circle.degens[:-1]]
    with pytest.raises(SimplicialError):
        from finsub.simplicial import TruncatedSimplicialSet
        TruncatedSimplicialSet(circle.truncation, circle.counts, faces, degens,
                               circle.payload)
