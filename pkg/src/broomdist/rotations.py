"""The three rotation moves between brooms, i.e. the edges of the flip graph.

On a complete split graph every rotation between search trees is one of:
  * swap of two consecutive handle vertices (a swap into the bottom slot is
    only legal between two clique vertices),
  * sinking the Q-vertex sitting directly above the bottom into the leaves,
  * lifting a leaf into the handle directly above the bottom (the inverse of
    sinking).

Rotations are positional descriptors on the canonical handle, so applying
one is O(n) and legality is a couple of comparisons.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Broom, VertexId
from .errors import IllegalRotationError


@dataclass(frozen=True)
class SwapHandle:
    """Exchange handle positions i and i+1 (1-based, root = 1)."""

    i: int


@dataclass(frozen=True)
class SinkToLeaf:
    """Move the Q-vertex directly above the bottom into the leaf set."""


@dataclass(frozen=True)
class LiftLeaf:
    """Insert leaf u into the handle directly above the bottom."""

    u: VertexId


Rotation = SwapHandle | SinkToLeaf | LiftLeaf


def check_legal(b: Broom, r: Rotation) -> None:
    """Raise IllegalRotationError naming the violated precondition."""
    m = len(b.handle)
    if isinstance(r, SwapHandle):
        if not 1 <= r.i <= m - 1:
            raise IllegalRotationError(f"swap position {r.i} outside 1..{m - 1}")
        if r.i == m - 1 and b.handle[r.i - 1].part != "p":
            raise IllegalRotationError(
                f"cannot swap {b.handle[r.i - 1]} into the bottom slot; sink it instead"
            )
    elif isinstance(r, SinkToLeaf):
        if m < 2 or b.handle[m - 2].part != "q":
            raise IllegalRotationError("no Q-vertex directly above the bottom to sink")
    elif isinstance(r, LiftLeaf):
        if r.u not in b.leaves:
            raise IllegalRotationError(f"{r.u} is not a leaf")
    else:
        raise IllegalRotationError(f"unknown rotation {r!r}")


def apply(b: Broom, r: Rotation) -> Broom:
    """Apply a legal rotation; the result is canonical by construction."""
    check_legal(b, r)
    h = b.handle
    if isinstance(r, SwapHandle):
        i = r.i - 1
        new_handle = h[:i] + (h[i + 1], h[i]) + h[i + 2:]
        return Broom(b.spec, new_handle, b.leaves)
    if isinstance(r, SinkToLeaf):
        sunk = h[-2]
        return Broom(b.spec, h[:-2] + (h[-1],), b.leaves | {sunk})
    new_handle = h[:-1] + (r.u, h[-1])
    return Broom(b.spec, new_handle, b.leaves - {r.u})


def inverse(r: Rotation, before: Broom) -> Rotation:
    """The rotation undoing r, given the broom r was applied to."""
    check_legal(before, r)
    if isinstance(r, SwapHandle):
        return r
    if isinstance(r, SinkToLeaf):
        return LiftLeaf(before.handle[-2])
    return SinkToLeaf()


def neighbors(b: Broom) -> list[tuple[Rotation, Broom]]:
    """Every legal rotation with its result, exactly once.

    The flip graph is (n-1)-regular: m-1 moves touch the handle (the slot
    just above the bottom yields a swap or a sink, never both) and each leaf
    yields a lift.
    """
    out: list[tuple[Rotation, Broom]] = []
    m = len(b.handle)
    for i in range(1, m - 1):
        r = SwapHandle(i)
        out.append((r, apply(b, r)))
    if m >= 2:
        r = SwapHandle(m - 1) if b.handle[m - 2].part == "p" else SinkToLeaf()
        out.append((r, apply(b, r)))
    for u in sorted(b.leaves):
        r = LiftLeaf(u)
        out.append((r, apply(b, r)))
    return out


def rotation_to_doc(r: Rotation) -> dict:
    if isinstance(r, SwapHandle):
        return {"kind": "swap", "i": r.i}
    if isinstance(r, SinkToLeaf):
        return {"kind": "sink"}
    return {"kind": "lift", "u": str(r.u)}


def rotation_from_doc(doc: dict) -> Rotation:
    kind = doc.get("kind")
    if kind == "swap":
        return SwapHandle(doc["i"])
    if kind == "sink":
        return SinkToLeaf()
    if kind == "lift":
        return LiftLeaf(VertexId.parse(doc["u"]))
    raise IllegalRotationError(f"unknown rotation kind {kind!r}")
