"""Ground-truth oracles: broom enumeration, flip-graph BFS, exhaustive
minimization of the distance objective, and uniform broom sampling.

Everything here is desk-scale machinery used to certify the production
pipeline; caps are explicit arguments and exceeding one raises TooLargeError
rather than truncating silently.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations, permutations
from math import comb, factorial
from typing import Iterator

import numpy as np

from .core import Broom, SplitGraphSpec, VertexId
from .errors import SpecMismatchError, TooLargeError
from .model import ModelSets, coefficients
from .rotations import neighbors

DEFAULT_CAP = 10 ** 6
BRUTE_FORCE_MAX_BITS = 24
_BLOCK_BITS = 16  # enumeration chunk size for the exhaustive minimizer


def broom_count(spec: SplitGraphSpec) -> int:
    """Closed-form number of brooms: sum over handle Q-subsets of size k of
    C(q,k) * p * (p+k-1)!  (bottom P-vertex times orderings of the rest)."""
    return sum(
        comb(spec.q, k) * spec.p * factorial(spec.p + k - 1)
        for k in range(spec.q + 1)
    )


def iter_brooms(spec: SplitGraphSpec) -> Iterator[Broom]:
    """All canonical brooms in a fixed deterministic order."""
    pverts = spec.p_vertices()
    qverts = spec.q_vertices()
    all_q = frozenset(qverts)
    for k in range(spec.q + 1):
        for subset in combinations(qverts, k):
            leaves = all_q - set(subset)
            for bottom in pverts:
                rest = sorted((set(pverts) - {bottom}) | set(subset))
                for upper in permutations(rest):
                    yield Broom(spec, upper + (bottom,), leaves)


@dataclass
class FlipGraphIndex:
    """All brooms of a spec with positions, plus a cached adjacency list."""

    spec: SplitGraphSpec
    brooms: tuple[Broom, ...]
    index: dict[Broom, int]
    _adjacency: list[list[int]] | None = field(default=None, repr=False)

    def adjacency(self) -> list[list[int]]:
        if self._adjacency is None:
            self._adjacency = [
                [self.index[nb] for _, nb in neighbors(b)] for b in self.brooms
            ]
        return self._adjacency

    def bfs_from(self, source: int) -> list[int]:
        """Distances from one broom to every other (flip graph is connected)."""
        adj = self.adjacency()
        dist = [-1] * len(self.brooms)
        dist[source] = 0
        queue = deque([source])
        while queue:
            i = queue.popleft()
            for j in adj[i]:
                if dist[j] < 0:
                    dist[j] = dist[i] + 1
                    queue.append(j)
        return dist


def enumerate_brooms(spec: SplitGraphSpec, cap: int = DEFAULT_CAP) -> FlipGraphIndex:
    total = broom_count(spec)
    if total > cap:
        raise TooLargeError(f"{total} brooms exceed the cap of {cap}")
    brooms = tuple(iter_brooms(spec))
    assert len(brooms) == total
    return FlipGraphIndex(spec, brooms, {b: i for i, b in enumerate(brooms)})


def bfs_distance(t1: Broom, t2: Broom, cap: int = DEFAULT_CAP) -> int:
    """Exact shortest-path length in the flip graph, by plain BFS."""
    if t1.spec != t2.spec:
        raise SpecMismatchError(f"{t1.spec} != {t2.spec}")
    total = broom_count(t1.spec)
    if total > cap:
        raise TooLargeError(f"{total} brooms exceed the cap of {cap}")
    if t1 == t2:
        return 0
    dist = {t1: 0}
    queue = deque([t1])
    while queue:
        b = queue.popleft()
        d = dist[b] + 1
        for _, nb in neighbors(b):
            if nb == t2:
                return d
            if nb not in dist:
                dist[nb] = d
                queue.append(nb)
    raise AssertionError("flip graph is connected; unreachable")


def brute_min_objective(
    sets: ModelSets, cap_bits: int = BRUTE_FORCE_MAX_BITS
) -> tuple[int, dict[VertexId, int], bool]:
    """Exhaustive minimum of the objective over all 0/1 assignments.

    Returns (minimum value, first minimizing assignment in counting order,
    whether some minimizer is monotone: x_u <= x_v whenever v lies below u in
    both brooms).  Enumerates 2^|Y| points, so |Y| is capped.
    """
    ynodes = sets.shared
    k = len(ynodes)
    if k > cap_bits:
        raise TooLargeError(f"|Y| = {k} exceeds brute-force cap of {cap_bits} bits")
    coeffs = coefficients(sets)
    if k == 0:
        return coeffs.const, {}, True

    pos = {u: i for i, u in enumerate(ynodes)}
    ell = np.array([coeffs.linear[u] for u in ynodes], dtype=np.int64)
    quad = np.zeros((k, k), dtype=np.int64)
    for (u, v), w in coeffs.quad.items():
        quad[pos[u], pos[v]] = w
        quad[pos[v], pos[u]] = w
    below_pairs = [
        (pos[u], pos[v]) for u in ynodes for v in sets.shared_below_both[u]
    ]
    bit_cols = np.arange(k, dtype=np.uint32)

    def block_values(lo: int, hi: int) -> tuple[np.ndarray, np.ndarray]:
        codes = np.arange(lo, hi, dtype=np.uint32)
        bits = ((codes[:, None] >> bit_cols) & 1).astype(np.int64)
        # quadratic part sums ordered pairs, hence is even; // 2 is exact
        vals = coeffs.const + bits @ ell + ((bits @ quad) * bits).sum(axis=1) // 2
        return bits, vals

    total = 1 << k
    block = 1 << min(k, _BLOCK_BITS)
    best = None
    for lo in range(0, total, block):
        _, vals = block_values(lo, min(lo + block, total))
        m = int(vals.min())
        best = m if best is None else min(best, m)

    witness: dict[VertexId, int] | None = None
    monotone = not below_pairs  # vacuously true when no below-in-both pair exists
    for lo in range(0, total, block):
        bits, vals = block_values(lo, min(lo + block, total))
        hit = np.flatnonzero(vals == best)
        if hit.size == 0:
            continue
        if witness is None:
            row = bits[hit[0]]
            witness = {u: int(row[pos[u]]) for u in ynodes}
        if not monotone:
            ok = np.ones(hit.size, dtype=bool)
            for iu, iv in below_pairs:
                ok &= ~((bits[hit, iu] == 1) & (bits[hit, iv] == 0))
            monotone = bool(ok.any())
        if witness is not None and monotone:
            break
    assert witness is not None
    return int(best), witness, monotone


def random_broom(spec: SplitGraphSpec, rng: random.Random) -> Broom:
    """Uniformly random canonical broom.

    The handle Q-subset size k is drawn proportionally to the number of
    brooms using it, then subset, bottom vertex, and upper ordering are drawn
    uniformly; the product measure is uniform over all brooms.
    """
    weights = [
        comb(spec.q, k) * spec.p * factorial(spec.p + k - 1)
        for k in range(spec.q + 1)
    ]
    total = sum(weights)
    r = rng.randrange(total)
    acc = 0
    for k, w in enumerate(weights):
        acc += w
        if r < acc:
            break
    subset = set(rng.sample(range(1, spec.q + 1), k))
    bottom = VertexId("p", rng.randrange(1, spec.p + 1))
    upper = sorted(
        [v for v in spec.p_vertices() if v != bottom]
        + [VertexId("q", i) for i in subset]
    )
    rng.shuffle(upper)
    leaves = frozenset(v for v in spec.q_vertices() if v.index not in subset)
    return Broom(spec, tuple(upper) + (bottom,), leaves)
