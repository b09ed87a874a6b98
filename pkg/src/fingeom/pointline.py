"""Point-line spaces: collinearity, distances, symplecta, and verifiers.

A materialized :class:`PointLineSpace` keeps its adjacency as dense
bitset rows (numpy uint64), which makes the exhaustive sweeps (gamma
axiom, pair classification, quadrangle uniqueness, hexagon search) cheap
enough to run on every fixture up to a few thousand points.  The big
lazily-built spaces (200k+ points) implement a narrower algebraic
protocol in :mod:`fingeom.builders` and get seeded-sampled sweeps.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from . import bitset
from .backend import njit
from .reports import CENSUS, FAIL, PASS, VACUOUS, Check, Report, timed

EXHAUSTIVE_PAIR_LIMIT = 5000
DEFAULT_SEED = 0xC0FFEE


class SpaceError(ValueError):
    """Raised when input data violates the space axioms at build time."""


@dataclass(frozen=True)
class PairClass:
    tag: str  # collinear | special | polar | distant
    witness_count: int
    distance: float


@dataclass(frozen=True)
class Symplecton:
    point_ids: frozenset
    rank: int
    seed_pair: tuple


class PointLineSpace:
    """Partial linear space with materialized adjacency bitsets."""

    def __init__(self, n_points: int, lines: list[tuple[int, ...]], labels=None):
        self.n = n_points
        self.labels = labels
        self.lines = lines
        self.words = bitset.n_words(n_points)
        self.adj = np.zeros((n_points, self.words), dtype=np.uint64)
        self.line_index: dict[tuple[int, int], int] = {}
        for li, pts in enumerate(lines):
            if len(pts) < 2:
                raise SpaceError(f"line {li} has fewer than 2 points")
            for p in pts:
                if not 0 <= p < n_points:
                    raise SpaceError(f"line {li} references unknown point {p}")
            if len(set(pts)) != len(pts):
                raise SpaceError(f"line {li} repeats a point")
            for i in range(len(pts)):
                for j in range(i + 1, len(pts)):
                    a, b = sorted((pts[i], pts[j]))
                    if (a, b) in self.line_index:
                        raise SpaceError(
                            f"points {a},{b} lie on two lines "
                            f"({self.line_index[(a, b)]} and {li}): not partial linear"
                        )
                    self.line_index[(a, b)] = li
                    bitset.set_bit(self.adj[a], b)
                    bitset.set_bit(self.adj[b], a)
        self._dist: np.ndarray | None = None
        self._symplecta: list[Symplecton] | None = None
        self._symp_membership: np.ndarray | None = None

    # -- basic structure ---------------------------------------------------

    def perp(self, p: int, closed: bool = True) -> np.ndarray:
        row = self.adj[p].copy()
        if closed:
            bitset.set_bit(row, p)
        return row

    def neighbors(self, p: int) -> np.ndarray:
        return bitset.to_ids(self.adj[p])

    def degree(self, p: int) -> int:
        return bitset.popcount(self.adj[p])

    def line_through(self, a: int, b: int) -> int | None:
        return self.line_index.get(tuple(sorted((a, b))))

    def distances(self) -> np.ndarray:
        """All-pairs graph distances, -1 marking unreachable pairs."""
        if self._dist is None:
            self._dist = _bfs_all(self.adj, self.n, self.words)
        return self._dist

    def dist(self, p: int, q: int) -> float:
        d = int(self.distances()[p, q])
        return math.inf if d < 0 else d

    def is_connected(self) -> bool:
        return bool((self.distances()[0] >= 0).all()) if self.n else True

    def dist_mask(self, d: int) -> np.ndarray:
        """Bitset rows of the distance-d relation."""
        return _pack_bool(self.distances() == d)

    # -- pair classification ------------------------------------------------

    def classify_pair(self, p: int, q: int) -> PairClass:
        if p == q:
            raise ValueError("need two distinct points")
        d = self.dist(p, q)
        if d == 1:
            return PairClass("collinear", 0, 1)
        common = int(np.bitwise_count(self.adj[p] & self.adj[q]).sum())
        if d == 2:
            return PairClass("special" if common == 1 else "polar", common, 2)
        return PairClass("distant", common, d)

    # -- subspaces -----------------------------------------------------------

    def as_bitset(self, ids: Iterable[int]) -> np.ndarray:
        return bitset.from_ids(ids, self.n)

    def is_subspace(self, X: Iterable[int]) -> bool:
        """Every line meeting X in >= 2 points lies inside X."""
        mask = self.as_bitset(X)
        for pts in self.lines:
            inside = sum(1 for p in pts if bitset.get_bit(mask, p))
            if inside >= 2 and inside != len(pts):
                return False
        return True

    def subspace_violation(self, X: Iterable[int]):
        mask = self.as_bitset(X)
        for li, pts in enumerate(self.lines):
            inside = sum(1 for p in pts if bitset.get_bit(mask, p))
            if inside >= 2 and inside != len(pts):
                return li
        return None

    def is_2convex(self, X: Iterable[int]) -> bool:
        ids = sorted(set(X))
        mask = self.as_bitset(ids)
        dist = self.distances()
        for i, a in enumerate(ids):
            for b in ids[i + 1 :]:
                if dist[a, b] == 2:
                    common = self.adj[a] & self.adj[b]
                    if np.any(common & ~mask):
                        return False
        return True

    def is_singular(self, X: Iterable[int]) -> bool:
        ids = sorted(set(X))
        for i, a in enumerate(ids):
            for b in ids[i + 1 :]:
                if not bitset.get_bit(self.adj[a], b):
                    return False
        return True

    def singular_closure(self, X: Iterable[int]) -> frozenset:
        """Close a pairwise-collinear set under its internal lines."""
        cur = set(X)
        frontier = list(cur)
        processed: set[tuple[int, int]] = set()
        while frontier:
            nxt = []
            members = sorted(cur)
            for q in frontier:
                for x in members:
                    if x == q:
                        continue
                    key = (min(x, q), max(x, q))
                    if key in processed:
                        continue
                    processed.add(key)
                    li = self.line_index.get(key)
                    if li is None:
                        continue
                    for r in self.lines[li]:
                        if r not in cur:
                            cur.add(r)
                            nxt.append(r)
            frontier = nxt
        return frozenset(cur)

    def maximal_singulars(self) -> list[frozenset]:
        """All maximal singular subspaces, by line-closure expansion.

        Frontier levels are deduplicated closed singular subspaces; each
        level expands by grouping the common-perp candidates of a member
        into the distinct closures they generate.
        """
        frontier = {self.singular_closure(pts) for pts in self.lines}
        if not frontier:
            frontier = {frozenset([p]) for p in range(self.n)}
        maximals: set[frozenset] = set()
        seen: set[frozenset] = set(frontier)
        while frontier:
            nxt: set[frozenset] = set()
            for X in frontier:
                ids = sorted(X)
                common = self.adj[ids[0]].copy()
                for p in ids[1:]:
                    common &= self.adj[p]
                for p in ids:
                    common[p >> 6] &= ~(np.uint64(1) << np.uint64(p & 63))
                cand = bitset.to_ids(common)
                if cand.size == 0:
                    maximals.add(X)
                    continue
                remaining = set(int(c) for c in cand)
                while remaining:
                    q = remaining.pop()
                    child = self.singular_closure(X | {q})
                    remaining -= child
                    if child not in seen:
                        seen.add(child)
                        nxt.add(child)
            frontier = nxt
        return sorted(maximals, key=sorted)

    # -- symplecta -----------------------------------------------------------

    def convex_closure(self, p: int, q: int) -> frozenset:
        """2-convex closure of {p, q}: common neighbours of internal
        distance-2 pairs, then line closure, to a fixed point."""
        dist = self.distances()
        cur = self.as_bitset([p, q])
        members = [p, q]
        done_pairs: set[tuple[int, int]] = set()
        changed = True
        while changed:
            changed = False
            snapshot = list(members)
            for i, a in enumerate(snapshot):
                for b in snapshot[i + 1 :]:
                    key = (min(a, b), max(a, b))
                    if key in done_pairs:
                        continue
                    done_pairs.add(key)
                    if dist[a, b] == 2:
                        add = self.adj[a] & self.adj[b] & ~cur
                        if np.any(add):
                            for r in bitset.to_ids(add):
                                members.append(int(r))
                            cur |= add
                            changed = True
                    elif dist[a, b] == 1:
                        li = self.line_index[key]
                        for r in self.lines[li]:
                            if not bitset.get_bit(cur, r):
                                bitset.set_bit(cur, r)
                                members.append(r)
                                changed = True
        return frozenset(members)

    def certify_polar_space(self, X: frozenset) -> tuple[bool, tuple | None, int]:
        """(is nondegenerate polar space of rank >= 2, witness, rank).

        Checks the one-or-all axiom on the induced space, nondegeneracy,
        and measures the rank by a greedily grown singular chain.
        """
        ids = sorted(X)
        mask = self.as_bitset(ids)
        inner_lines = []
        for li, pts in enumerate(self.lines):
            inside = sum(1 for r in pts if bitset.get_bit(mask, r))
            if inside >= 2:
                if inside != len(pts):
                    return False, (ids[0], ids[min(1, len(ids) - 1)], li), 0
                inner_lines.append(pts)
        for p in ids:
            for pts in inner_lines:
                if p in pts:
                    continue
                hit = sum(1 for r in pts if bitset.get_bit(self.adj[p], r))
                if hit != 1 and hit != len(pts):
                    # one-or-all, with the empty case excluded: that is
                    # what separates polar from mere gamma
                    return False, (p, pts[0], pts[1]), 0
        # nondegeneracy: no point collinear with every other member
        for p in ids:
            if all(bitset.get_bit(self.adj[p], q) for q in ids if q != p):
                return False, (p, p, -1), 0
        # greedy singular chain
        chain = {ids[0]}
        common = self.adj[ids[0]] & mask
        while True:
            cand = bitset.to_ids(common)
            nxt = next((int(c) for c in cand if int(c) not in chain), None)
            if nxt is None:
                break
            chain = set(self.singular_closure(chain | {nxt}))
            common = common & self.adj[nxt]
        rank = _singular_vdim(len(chain))
        return True, None, rank

    def symplecton_of(self, p: int, q: int) -> Symplecton:
        pc = self.classify_pair(p, q)
        if pc.tag != "polar":
            raise SpaceError(f"({p},{q}) is {pc.tag}, not a polar pair")
        X = self.convex_closure(p, q)
        ok, witness, rank = self.certify_polar_space(X)
        if not ok:
            raise SpaceError(f"closure of ({p},{q}) is not a polar space; witness {witness}")
        return Symplecton(X, rank, (p, q))

    def symplecta(self) -> list[Symplecton]:
        """Every symplecton, discovered from polar pairs with dedup."""
        if self._symplecta is not None:
            return self._symplecta
        dist = self.distances()
        found: list[Symplecton] = []
        containing: dict[int, list[int]] = {p: [] for p in range(self.n)}
        for p in range(self.n):
            row = dist[p]
            for q in np.nonzero(row == 2)[0]:
                q = int(q)
                if q <= p:
                    continue
                if int(np.bitwise_count(self.adj[p] & self.adj[q]).sum()) <= 1:
                    continue
                if any(q in found[si].point_ids for si in containing[p]):
                    continue
                s = self.symplecton_of(p, q)
                si = len(found)
                found.append(s)
                for r in s.point_ids:
                    containing[r].append(si)
        self._symplecta = found
        return found

    def symplecton_membership(self) -> np.ndarray:
        """Bitset rows: point -> set of symplecton ids containing it."""
        if self._symp_membership is None:
            symps = self.symplecta()
            w = bitset.n_words(max(len(symps), 1))
            rows = np.zeros((self.n, w), dtype=np.uint64)
            for si, s in enumerate(symps):
                for p in s.point_ids:
                    bitset.set_bit(rows[p], si)
            self._symp_membership = rows
        return self._symp_membership


def build_space(points, lines: Iterable[Sequence[int]], labels=None) -> PointLineSpace:
    """Validate and build; `points` is a count or a list of labels."""
    if isinstance(points, int):
        n = points
    else:
        labels = list(points)
        n = len(labels)
    norm = [tuple(int(p) for p in pts) for pts in lines]
    return PointLineSpace(n, norm, labels=labels)


def _singular_vdim(npoints: int) -> int:
    """Vector-space dimension of a singular subspace with npoints points
    (2^d - 1 points over GF(2); thin cliques measure as their size)."""
    d = (npoints + 1).bit_length() - 1
    if (1 << d) - 1 == npoints:
        return d
    return npoints


# ---------------------------------------------------------------------------
# verifiers


def verify_gamma(space, report: Report | None = None, seed: int = DEFAULT_SEED,
                 sample: int = 1_000_000) -> Report:
    """Gamma axiom: |p^perp ∩ L| ∈ {0, 1, |L|} for every point-line pair.

    Exhaustive below EXHAUSTIVE_PAIR_LIMIT points; seeded sampling above
    (and on the lazily-built algebraic spaces, which supply their own
    sampler).
    """
    rep = report or Report(fixture=getattr(space, "name", "space"))
    if hasattr(space, "sample_gamma"):
        chk = rep.add(Check("gamma", PASS, seed=seed, sample_size=sample))
        with timed(chk):
            bad = space.sample_gamma(seed, sample)
            chk.counts["pairs_checked"] = sample
            if bad:
                chk.status = FAIL
                chk.counterexamples = bad[:16]
        return rep
    chk = rep.add(Check("gamma", PASS))
    with timed(chk):
        flat, indptr = _flatten_lines(space.lines)
        bad = _gamma_sweep(space.adj, space.n, flat, indptr)
        chk.counts["pairs_checked"] = space.n * len(space.lines)
        if bad.size:
            chk.status = FAIL
            chk.counterexamples = [
                {"point": int(bad[i, 0]), "line": int(bad[i, 1]), "hits": int(bad[i, 2])}
                for i in range(min(bad.shape[0], 16))
            ]
    return rep


def verify_parapolar(space: PointLineSpace, strong: bool = False,
                     report: Report | None = None) -> Report:
    """Connected partial-linear gamma space whose lines lie in symplecta
    and whose quadrangles lie in exactly one; optionally every distance-2
    pair polar."""
    rep = report or Report(fixture=getattr(space, "name", "space"))

    chk = rep.add(Check("parapolar.connected_gamma", PASS))
    with timed(chk):
        if not space.is_connected():
            chk.status = FAIL
            chk.counterexamples = ["collinearity graph is disconnected"]
        else:
            sub = verify_gamma(space)
            if not sub.ok:
                chk.status = FAIL
                chk.counterexamples = sub["gamma"].counterexamples

    symps = space.symplecta()
    member = space.symplecton_membership()
    chk = rep.add(Check("parapolar.lines_in_symplecta", PASS))
    with timed(chk):
        chk.counts["symplecta"] = len(symps)
        for li, pts in enumerate(space.lines):
            rows = member[list(pts)]
            common = rows[0].copy()
            for r in rows[1:]:
                common &= r
            if not np.any(common):
                chk.status = FAIL
                chk.counterexamples.append({"line": li})
                if len(chk.counterexamples) >= 16:
                    break

    chk = rep.add(Check("parapolar.quadrangle_unique", PASS))
    with timed(chk):
        dist = space.distances()
        d2 = _pack_bool(dist == 2)
        count, bad = _quadrangle_sweep(space.adj, d2, member, space.n, space.words)
        chk.counts["quadrangles_checked"] = int(count)
        if bad.size:
            chk.status = FAIL
            chk.counterexamples = [[int(x) for x in bad[i]] for i in range(min(len(bad), 16))]

    if strong:
        chk = rep.add(Check("parapolar.strong", PASS))
        with timed(chk):
            bad = _strong_sweep(space.adj, _pack_bool(space.distances() == 2), space.n)
            chk.counts["d2_pairs_checked"] = int(bad[0])
            if bad[1] >= 0:
                chk.status = FAIL
                chk.counterexamples = [{"pair": [int(bad[1]), int(bad[2])]}]
    return rep


def verify_wha(space, report: Report | None = None, seed: int = DEFAULT_SEED,
               sample: int = 20_000) -> Report:
    """Hexagon axiom: every isometrically embedded 6-circuit carrying a
    polar distance-2 pair {p1, p3} admits w collinear with p1, p3, p5.

    Isometric means consecutive pairs collinear, the (i, i+2) pairs at
    distance 2, and opposite pairs at distance 3.  Roots are the pairwise
    distance-2 triples with at least one polar pair; a triple whose three
    perps already share a point clears all its circuits at once, so
    explicit circuit enumeration only happens where counterexamples
    could live.
    """
    rep = report or Report(fixture=getattr(space, "name", "space"))
    if hasattr(space, "sample_wha"):
        chk = rep.add(Check("wha", PASS, seed=seed, sample_size=sample))
        with timed(chk):
            counts, bad = space.sample_wha(seed, sample)
            chk.counts.update(counts)
            if bad:
                chk.status = FAIL
                chk.counterexamples = bad[:16]
        return rep

    chk = rep.add(Check("wha", PASS))
    with timed(chk):
        dist = space.distances()
        diameter = int(dist.max())
        if diameter < 3:
            chk.status = VACUOUS
            chk.counts.update({"triples_examined": 0, "circuits_enumerated": 0,
                               "note": "no distance-3 pairs, so no isometric 6-circuits"})
            return rep
        d2 = _pack_bool(dist == 2)
        d3 = _pack_bool(dist == 3)
        counts, bad = _wha_sweep(space.adj, d2, d3, space.n, space.words)
        chk.counts.update(
            {
                "triples_examined": int(counts[0]),
                "cleared_by_witness": int(counts[1]),
                "circuits_enumerated": int(counts[2]),
            }
        )
        if bad.shape[0]:
            chk.status = FAIL
            chk.counterexamples = [[int(x) for x in bad[i]] for i in range(bad.shape[0])]
    return rep


# ---------------------------------------------------------------------------
# kernels


def _flatten_lines(lines) -> tuple[np.ndarray, np.ndarray]:
    indptr = np.zeros(len(lines) + 1, dtype=np.int64)
    for i, pts in enumerate(lines):
        indptr[i + 1] = indptr[i] + len(pts)
    flat = np.empty(indptr[-1], dtype=np.int64)
    for i, pts in enumerate(lines):
        flat[indptr[i] : indptr[i + 1]] = pts
    return flat, indptr


def _pack_bool(mat: np.ndarray) -> np.ndarray:
    """Pack a boolean matrix into uint64 bitset rows (little bit order)."""
    n, m = mat.shape
    pad = (-m) % 64
    if pad:
        mat = np.concatenate([mat, np.zeros((n, pad), dtype=bool)], axis=1)
    packed = np.packbits(mat, axis=1, bitorder="little")
    return np.ascontiguousarray(packed).view(np.uint64)


@njit(cache=True)
def _bfs_all(adj, n, words):
    dist = np.full((n, n), -1, dtype=np.int16)
    frontier = np.empty(words, dtype=np.uint64)
    visited = np.empty(words, dtype=np.uint64)
    nxt = np.empty(words, dtype=np.uint64)
    for s in range(n):
        for w in range(words):
            frontier[w] = np.uint64(0)
            visited[w] = np.uint64(0)
        frontier[s >> 6] = np.uint64(1) << np.uint64(s & 63)
        visited[s >> 6] = frontier[s >> 6]
        dist[s, s] = 0
        level = 0
        alive = True
        while alive:
            level += 1
            alive = False
            for w in range(words):
                nxt[w] = np.uint64(0)
            for w in range(words):
                word = frontier[w]
                while word:
                    low = word & (~word + np.uint64(1))
                    b = 0
                    while not (low >> np.uint64(b)) & np.uint64(1):
                        b += 1
                    p = (w << 6) + b
                    word ^= low
                    for ww in range(words):
                        nxt[ww] |= adj[p, ww]
            for w in range(words):
                nxt[w] &= ~visited[w]
            for w in range(words):
                if nxt[w]:
                    alive = True
                    visited[w] |= nxt[w]
                    word = nxt[w]
                    while word:
                        low = word & (~word + np.uint64(1))
                        b = 0
                        while not (low >> np.uint64(b)) & np.uint64(1):
                            b += 1
                        dist[s, (w << 6) + b] = level
                        word ^= low
                frontier[w] = nxt[w]
    return dist


@njit(cache=True)
def _gamma_sweep(adj, n, flat, indptr):
    nl = indptr.shape[0] - 1
    bad = np.empty((16, 3), dtype=np.int64)
    nbad = 0
    for li in range(nl):
        a, b = indptr[li], indptr[li + 1]
        size = b - a
        for p in range(n):
            hits = 0
            on_line = False
            for t in range(a, b):
                q = flat[t]
                if q == p:
                    on_line = True
                    break
                if (adj[p, q >> 6] >> np.uint64(q & 63)) & np.uint64(1):
                    hits += 1
            if on_line:
                continue
            if hits != 0 and hits != 1 and hits != size:
                if nbad < 16:
                    bad[nbad, 0] = p
                    bad[nbad, 1] = li
                    bad[nbad, 2] = hits
                    nbad += 1
    return bad[:nbad]


@njit(cache=True)
def _strong_sweep(adj, d2, n):
    out = np.zeros(3, dtype=np.int64)
    out[1] = -1
    out[2] = -1
    words = adj.shape[1]
    for p in range(n):
        for w in range(words):
            word = d2[p, w]
            while word:
                low = word & (~word + np.uint64(1))
                b = 0
                while not (low >> np.uint64(b)) & np.uint64(1):
                    b += 1
                q = (w << 6) + b
                word ^= low
                if q <= p:
                    continue
                out[0] += 1
                c = 0
                for ww in range(words):
                    x = adj[p, ww] & adj[q, ww]
                    while x:
                        x &= x - np.uint64(1)
                        c += 1
                    if c > 1:
                        break
                if c <= 1:
                    out[1] = p
                    out[2] = q
                    return out
    return out


@njit(cache=True)
def _quadrangle_sweep(adj, d2, member, n, words):
    mwords = member.shape[1]
    count = 0
    bad = np.empty((16, 4), dtype=np.int64)
    nbad = 0
    common = np.empty(words, dtype=np.uint64)
    ids = np.empty(n, dtype=np.int64)
    for p in range(n):
        for w in range(words):
            word = d2[p, w]
            while word:
                low = word & (~word + np.uint64(1))
                b = 0
                while not (low >> np.uint64(b)) & np.uint64(1):
                    b += 1
                r = (w << 6) + b
                word ^= low
                if r <= p:
                    continue
                nc = 0
                for ww in range(words):
                    common[ww] = adj[p, ww] & adj[r, ww]
                for ww in range(words):
                    x = common[ww]
                    while x:
                        lo = x & (~x + np.uint64(1))
                        bb = 0
                        while not (lo >> np.uint64(bb)) & np.uint64(1):
                            bb += 1
                        ids[nc] = (ww << 6) + bb
                        nc += 1
                        x ^= lo
                for i in range(nc):
                    x = ids[i]
                    for j in range(i + 1, nc):
                        y = ids[j]
                        if (adj[x, y >> 6] >> np.uint64(y & 63)) & np.uint64(1):
                            continue
                        count += 1
                        hits = 0
                        for mw in range(mwords):
                            z = member[p, mw] & member[r, mw] & member[x, mw] & member[y, mw]
                            while z:
                                z &= z - np.uint64(1)
                                hits += 1
                        if hits != 1 and nbad < 16:
                            bad[nbad, 0] = p
                            bad[nbad, 1] = x
                            bad[nbad, 2] = r
                            bad[nbad, 3] = y
                            nbad += 1
    return count, bad[:nbad]


@njit(cache=True)
def _wha_sweep(adj, d2, d3, n, words):
    counts = np.zeros(3, dtype=np.int64)
    bad = np.empty((16, 6), dtype=np.int64)
    nbad = 0
    c13 = np.empty(words, dtype=np.uint64)
    c15 = np.empty(words, dtype=np.uint64)
    c35 = np.empty(words, dtype=np.uint64)
    a2 = np.empty(n, dtype=np.int64)
    a4 = np.empty(n, dtype=np.int64)
    a6 = np.empty(n, dtype=np.int64)
    for p1 in range(n):
        for w3 in range(words):
            word3 = d2[p1, w3]
            while word3:
                low3 = word3 & (~word3 + np.uint64(1))
                b3 = 0
                while not (low3 >> np.uint64(b3)) & np.uint64(1):
                    b3 += 1
                p3 = (w3 << 6) + b3
                word3 ^= low3
                if p3 <= p1:
                    continue
                pop13 = 0
                for w in range(words):
                    c13[w] = adj[p1, w] & adj[p3, w]
                    x = c13[w]
                    while x:
                        x &= x - np.uint64(1)
                        pop13 += 1
                for w5 in range(words):
                    word5 = d2[p1, w5] & d2[p3, w5]
                    while word5:
                        low5 = word5 & (~word5 + np.uint64(1))
                        b5 = 0
                        while not (low5 >> np.uint64(b5)) & np.uint64(1):
                            b5 += 1
                        p5 = (w5 << 6) + b5
                        word5 ^= low5
                        if p5 <= p3:
                            continue
                        counts[0] += 1
                        pop15 = 0
                        pop35 = 0
                        for w in range(words):
                            c15[w] = adj[p1, w] & adj[p5, w]
                            c35[w] = adj[p3, w] & adj[p5, w]
                            x = c15[w]
                            while x:
                                x &= x - np.uint64(1)
                                pop15 += 1
                            x = c35[w]
                            while x:
                                x &= x - np.uint64(1)
                                pop35 += 1
                        if pop13 < 2 and pop15 < 2 and pop35 < 2:
                            continue
                        haswit = False
                        for w in range(words):
                            if c13[w] & adj[p5, w]:
                                haswit = True
                                break
                        if haswit:
                            counts[1] += 1
                            continue
                        n2 = 0
                        n4 = 0
                        n6 = 0
                        for w in range(words):
                            x = c13[w] & d3[p5, w]
                            base = w << 6
                            while x:
                                lo = x & (~x + np.uint64(1))
                                bb = 0
                                while not (lo >> np.uint64(bb)) & np.uint64(1):
                                    bb += 1
                                a2[n2] = base + bb
                                n2 += 1
                                x ^= lo
                            x = c35[w] & d3[p1, w]
                            while x:
                                lo = x & (~x + np.uint64(1))
                                bb = 0
                                while not (lo >> np.uint64(bb)) & np.uint64(1):
                                    bb += 1
                                a4[n4] = base + bb
                                n4 += 1
                                x ^= lo
                            x = c15[w] & d3[p3, w]
                            while x:
                                lo = x & (~x + np.uint64(1))
                                bb = 0
                                while not (lo >> np.uint64(bb)) & np.uint64(1):
                                    bb += 1
                                a6[n6] = base + bb
                                n6 += 1
                                x ^= lo
                        if n2 == 0 or n4 == 0 or n6 == 0:
                            continue
                        for i2 in range(n2):
                            q2 = a2[i2]
                            for i4 in range(n4):
                                q4 = a4[i4]
                                if (adj[q2, q4 >> 6] >> np.uint64(q4 & 63)) & np.uint64(1):
                                    continue
                                for i6 in range(n6):
                                    q6 = a6[i6]
                                    if (adj[q2, q6 >> 6] >> np.uint64(q6 & 63)) & np.uint64(1):
                                        continue
                                    if (adj[q4, q6 >> 6] >> np.uint64(q6 & 63)) & np.uint64(1):
                                        continue
                                    counts[2] += 1
                                    if nbad < 16:
                                        bad[nbad, 0] = p1
                                        bad[nbad, 1] = q2
                                        bad[nbad, 2] = p3
                                        bad[nbad, 3] = q4
                                        bad[nbad, 4] = p5
                                        bad[nbad, 5] = q6
                                        nbad += 1
    return counts, bad[:nbad]
