"""Point-line space core on hand-checkable fixtures."""

import math

import numpy as np
import pytest

from fingeom import bitset
from fingeom.gf2 import enumerate_subspaces
from fingeom.pointline import SpaceError, build_space, verify_gamma, verify_parapolar, verify_wha


def fano_plane():
    """PG(2,2) as a space: 7 points (1-spaces), 7 lines (2-spaces)."""
    pts = [s.basis[0] for s in enumerate_subspaces(3, 1)]
    index = {v: i for i, v in enumerate(pts)}
    lines = []
    for plane in enumerate_subspaces(3, 2):
        lines.append(tuple(index[v] for v in plane.vectors() if v))
    return build_space(len(pts), lines, labels=pts)


def grid3x3():
    """Rook's 3x3 grid: rows and columns as lines (rank-2 polar space)."""
    lines = [(3 * r, 3 * r + 1, 3 * r + 2) for r in range(3)]
    lines += [(c, c + 3, c + 6) for c in range(3)]
    return build_space(9, lines)


def four_cycle():
    return build_space(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


def test_build_single_line():
    s = build_space(3, [(0, 1, 2)])
    assert s.dist(0, 2) == 1
    assert int(s.distances().max()) == 1


def test_build_rejects_duplicate_pair():
    with pytest.raises(SpaceError, match="not partial linear"):
        build_space(4, [(0, 1, 2), (0, 1, 3)])


def test_build_rejects_short_line():
    with pytest.raises(SpaceError):
        build_space(3, [(0,)])


def test_fano_all_pairs_collinear():
    f = fano_plane()
    assert len(f.lines) == 7
    for p in range(7):
        for q in range(p + 1, 7):
            assert f.classify_pair(p, q).tag == "collinear"
    assert verify_gamma(f).ok


def test_gamma_on_four_cycle():
    assert verify_gamma(four_cycle()).ok


def test_gamma_failure_detected():
    # K4 minus an edge with 2-point lines: perp of 0 meets "line" {1,2,3}?
    # build a 3-point line plus an extra point collinear with exactly 2 of it
    s = build_space(5, [(0, 1, 2), (3, 0), (3, 1), (4, 3)])
    rep = verify_gamma(s)
    assert not rep.ok
    assert rep["gamma"].counterexamples[0]["point"] == 3


def test_classify_pair_distances():
    c = four_cycle()
    assert c.classify_pair(0, 1).tag == "collinear"
    pc = c.classify_pair(0, 2)
    assert pc.tag == "polar" and pc.witness_count == 2
    disc = build_space(4, [(0, 1), (2, 3)])
    far = disc.classify_pair(0, 2)
    assert far.tag == "distant" and far.distance == math.inf


def test_grid_is_polar_space_and_own_symplecton():
    g = grid3x3()
    s = g.symplecton_of(0, 4)  # distinct row and column
    assert s.point_ids == frozenset(range(9))
    assert s.rank == 2
    assert len(g.symplecta()) == 1
    rep = verify_parapolar(g, strong=True)
    assert rep.ok


def test_subspace_checks():
    g = grid3x3()
    assert g.is_subspace({0, 1, 2})
    assert not g.is_subspace({0, 1})
    # two points at distance 2: common neighbours escape the set
    assert not g.is_2convex({0, 4})
    assert g.is_2convex({0, 1, 2})


def test_maximal_singulars_grid():
    g = grid3x3()
    ms = g.maximal_singulars()
    assert len(ms) == 6
    assert all(len(x) == 3 for x in ms)


def test_maximal_singulars_fano():
    # every pair collinear and lines close up: the whole plane is singular
    f = fano_plane()
    ms = f.maximal_singulars()
    assert ms == [frozenset(range(7))]


def test_wha_vacuous_on_diameter_two():
    rep = verify_wha(grid3x3())
    assert rep["wha"].status == "vacuous"
    f = build_space(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    rep2 = verify_wha(f)
    assert rep2["wha"].status == "vacuous"


def test_wha_passes_on_cube():
    # 3-cube: every isometric hexagon is an equator whose alternating
    # triple sees a pole, so the axiom holds non-vacuously
    edges = []
    for v in range(8):
        for b in (1, 2, 4):
            if v < v ^ b:
                edges.append((v, v ^ b))
    cube = build_space(8, edges)
    rep = verify_wha(cube)
    assert rep["wha"].status == "pass"
    assert rep["wha"].counts["cleared_by_witness"] > 0


def test_wha_fails_on_tagged_hexagon():
    # 6-cycle plus one extra common neighbour of (p0, p2), which turns
    # that distance-2 pair polar while no point sees p0, p2 and p4
    edges = [(i, (i + 1) % 6) for i in range(6)] + [(6, 0), (6, 2)]
    s = build_space(7, edges)
    rep = verify_wha(s)
    assert rep["wha"].status == "fail"
    assert rep["wha"].counts["circuits_enumerated"] == 2
    hexagon = rep["wha"].counterexamples[0]
    d = s.distances()
    for i in range(6):
        assert d[hexagon[i], hexagon[(i + 1) % 6]] == 1
        assert d[hexagon[i], hexagon[(i + 2) % 6]] == 2
        assert d[hexagon[i], hexagon[(i + 3) % 6]] == 3


def test_bitset_roundtrip():
    row = bitset.from_ids([0, 5, 64, 100], 128)
    assert list(bitset.to_ids(row)) == [0, 5, 64, 100]
    assert bitset.popcount(row) == 4
