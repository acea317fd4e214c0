"""Explicit rotation sequences realizing the objective value of any assignment.

Given an assignment x over the shared vertices, the path is built in three
phases: sink every chosen or t1-only Q-vertex out of the first handle
(bottom-most first, so no two of them ever meet in a rotation), sort the
surviving handle into the second broom's order with adjacent swaps, and
finally replay, inverted and reversed, the analogous sinking phase computed
from the second broom.  The result has length exactly equal to the objective
at x; at a minimizing assignment it is a geodesic of the flip graph.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Broom, VertexId
from .errors import DomainMismatchError, SpecMismatchError
from .model import Assignment
from .rotations import Rotation, SinkToLeaf, SwapHandle, apply, inverse, rotation_to_doc

Step = tuple[Rotation, Broom]


@dataclass(frozen=True, eq=False)
class GeodesicPlan:
    """A rotation sequence from start to end with its phase bookkeeping.

    to_leaf is the set of shared vertices sent to the leaves (x = 1);
    t1_only/t2_only are the Q-vertices sitting in only that handle, which
    must sink regardless of x.  handle_perm is the permutation the middle
    phase sorts, contributing its inversion count in swaps.
    """

    start: Broom
    to_leaf: frozenset
    t1_only: frozenset
    t2_only: frozenset
    handle_perm: tuple[int, ...]
    steps: tuple[Step, ...]

    @property
    def end(self) -> Broom:
        return self.steps[-1][1] if self.steps else self.start

    def __len__(self) -> int:
        return len(self.steps)

    def states(self) -> list[Broom]:
        """All brooms along the path, endpoints included."""
        return [self.start] + [b for _, b in self.steps]

    def to_doc(self, trace: bool = False) -> dict:
        doc: dict = {"length": len(self.steps), "rotations": [rotation_to_doc(r) for r, _ in self.steps]}
        if trace:
            doc["states"] = [b.to_doc() for b in self.states()]
        return doc


def _sink_members(start: Broom, members: set[VertexId]) -> tuple[list[Step], Broom]:
    """Sink each member to the leaves, bottom-most member first.

    Processing order guarantees no rotation involves two members: the
    current bottom-most member only passes non-members on its way down.
    """
    steps: list[Step] = []
    cur = start
    order = sorted(members, key=lambda v: -start.handle.index(v))
    for v in order:
        pos = cur.handle.index(v) + 1  # 1-based; v is never the bottom (it is in Q)
        while pos < len(cur.handle) - 1:
            r = SwapHandle(pos)
            cur = apply(cur, r)
            steps.append((r, cur))
            pos += 1
        r = SinkToLeaf()
        cur = apply(cur, r)
        steps.append((r, cur))
    return steps, cur


def _sort_handle(start: Broom, target: Broom) -> tuple[list[Step], Broom]:
    """Adjacent-swap sort of start's handle into target's order.

    Fills slots bottom-up: bubble the target's bottom vertex (in P) down
    first, then recurse above it.  This realizes the minimum number of swaps
    (the permutation's inversion count) and never moves a Q-vertex into the
    bottom slot.
    """
    assert sorted(start.handle) == sorted(target.handle)
    steps: list[Step] = []
    cur = start
    k = len(cur.handle)
    for slot in range(k, 1, -1):
        v = target.handle[slot - 1]
        pos = cur.handle.index(v) + 1
        while pos < slot:
            r = SwapHandle(pos)
            cur = apply(cur, r)
            steps.append((r, cur))
            pos += 1
    return steps, cur


def construct_path(t1: Broom, t2: Broom, x: Assignment) -> GeodesicPlan:
    """Rotation sequence from t1 to t2 whose length is the objective at x.

    A shared vertex appears as a leaf somewhere along the path iff its
    assignment is 1.
    """
    if t1.spec != t2.spec:
        raise SpecMismatchError(f"{t1.spec} != {t2.spec}")
    handle_q1 = {v for v in t1.handle if v.part == "q"}
    handle_q2 = {v for v in t2.handle if v.part == "q"}
    shared = handle_q1 & handle_q2
    if set(x) != shared:
        raise DomainMismatchError("assignment domain differs from the shared vertex set")

    chosen = {u for u in shared if x[u]}
    t1_only = handle_q1 - shared
    t2_only = handle_q2 - shared

    head, t1_sunk = _sink_members(t1, chosen | t1_only)
    tail_fwd, t2_sunk = _sink_members(t2, chosen | t2_only)

    label = {v: j + 1 for j, v in enumerate(t1_sunk.handle)}
    handle_perm = tuple(label[v] for v in t2_sunk.handle)

    middle, cur = _sort_handle(t1_sunk, t2_sunk)
    assert cur == t2_sunk

    # Replay the second sinking phase backwards to climb from t2_sunk to t2.
    tail: list[Step] = []
    states = [t2] + [b for _, b in tail_fwd]
    for i in range(len(tail_fwd) - 1, -1, -1):
        r, _ = tail_fwd[i]
        tail.append((inverse(r, states[i]), states[i]))

    return GeodesicPlan(
        start=t1,
        to_leaf=frozenset(chosen),
        t1_only=frozenset(t1_only),
        t2_only=frozenset(t2_only),
        handle_perm=handle_perm,
        steps=tuple(head + middle + tail),
    )


def geodesic(t1: Broom, t2: Broom) -> GeodesicPlan:
    """A shortest rotation sequence from t1 to t2."""
    from .mincut import rotation_distance

    distance, xstar = rotation_distance(t1, t2)
    plan = construct_path(t1, t2, xstar)
    assert len(plan) == distance
    return plan
