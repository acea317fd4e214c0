"""Vertices, split graph specs, brooms, tubings, and instance (de)serialization.

A complete split graph G has a clique part P (p vertices, p >= 1) and an
independent part Q (q vertices, q >= 0), with every P-Q edge present.  Every
search tree on G is a broom: an ordered handle from the root down to a bottom
vertex in P, with the remaining Q-vertices attached below as leaves.

Canonical form: the handle always ends with a P-vertex.  A tree whose path
ends ...-> P-vertex -> single Q-vertex has the same tube set as the broom
with that Q-vertex as a lone leaf, so the canonicalizer rewrites the former
to the latter and every associahedron vertex gets exactly one representation.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .errors import (
    BadHandleTailError,
    DuplicateEntryError,
    DuplicateVertexError,
    InstanceFormatError,
    InvalidSpecError,
    LeafNotInQError,
    LeafSetMismatchError,
    MissingPVertexError,
    OutOfRangeError,
    UnknownVertexError,
)

_VERTEX_RE = re.compile(r"^(p|q)([1-9][0-9]*)$")


class VertexId(NamedTuple):
    """A vertex of the split graph: part "p" (clique) or "q" (independent set),
    with a 1-based index inside its part.  Tuple order sorts P before Q."""

    part: str
    index: int

    def __str__(self) -> str:
        return f"{self.part}{self.index}"

    @classmethod
    def parse(cls, text: str) -> "VertexId":
        m = _VERTEX_RE.match(text)
        if not m:
            raise UnknownVertexError(f"bad vertex name {text!r} (want p<i> or q<i>)")
        return cls(m.group(1), int(m.group(2)))


def pvertex(i: int) -> VertexId:
    return VertexId("p", i)


def qvertex(i: int) -> VertexId:
    return VertexId("q", i)


@dataclass(frozen=True)
class SplitGraphSpec:
    """Sizes (p, q) of the complete split graph; n = p + q is derived."""

    p: int
    q: int

    def __post_init__(self) -> None:
        if not isinstance(self.p, int) or not isinstance(self.q, int):
            raise InvalidSpecError(f"p and q must be integers, got {self.p!r}, {self.q!r}")
        if self.p < 1:
            raise InvalidSpecError(f"p must be >= 1 (brooms need a P bottom vertex), got {self.p}")
        if self.q < 0:
            raise InvalidSpecError(f"q must be >= 0, got {self.q}")

    @property
    def n(self) -> int:
        return self.p + self.q

    def p_vertices(self) -> tuple[VertexId, ...]:
        return tuple(VertexId("p", i) for i in range(1, self.p + 1))

    def q_vertices(self) -> tuple[VertexId, ...]:
        return tuple(VertexId("q", i) for i in range(1, self.q + 1))

    def contains(self, v: VertexId) -> bool:
        if v.part == "p":
            return 1 <= v.index <= self.p
        if v.part == "q":
            return 1 <= v.index <= self.q
        return False


@dataclass(frozen=True)
class Broom:
    """A canonical broom: ordered handle (root first, P-vertex last) plus the
    set of Q-leaves.  Instances are immutable and hashable; construct
    untrusted data through :func:`validate`."""

    spec: SplitGraphSpec
    handle: tuple[VertexId, ...]
    leaves: frozenset[VertexId]

    @property
    def bottom(self) -> VertexId:
        return self.handle[-1]

    def handle_q_indices(self) -> tuple[int, ...]:
        """Q-indices along the handle, top-down."""
        return tuple(v.index for v in self.handle if v.part == "q")

    def check(self) -> "Broom":
        """Assert every canonical-broom invariant; returns self."""
        seen = set(self.handle) | set(self.leaves)
        assert len(self.handle) + len(self.leaves) == self.spec.n == len(seen)
        assert all(self.spec.contains(v) for v in seen)
        assert all(v.part == "q" for v in self.leaves)
        assert sum(1 for v in self.handle if v.part == "p") == self.spec.p
        assert self.handle[-1].part == "p"
        return self

    def to_doc(self) -> dict:
        return {
            "handle": [str(v) for v in self.handle],
            "leaves": [str(v) for v in sorted(self.leaves)],
        }


Tubing = frozenset  # frozenset of frozensets of VertexId


def _as_vertex(item) -> VertexId:
    if isinstance(item, VertexId):
        return item
    if isinstance(item, str):
        return VertexId.parse(item)
    raise UnknownVertexError(f"cannot interpret {item!r} as a vertex")


def validate(spec: SplitGraphSpec, handle: Sequence, leaves: Iterable = ()) -> Broom:
    """Check raw broom data and return the canonical Broom.

    Accepts VertexId objects or "p<i>"/"q<i>" strings.  A raw handle ending
    with exactly one Q-vertex below the last P-vertex, with no declared
    leaves, encodes the same search tree as the broom with that Q-vertex as a
    lone leaf; it is canonicalized rather than rejected.
    """
    raw_handle = tuple(_as_vertex(v) for v in handle)
    raw_leaves = tuple(_as_vertex(v) for v in leaves)

    for v in raw_handle + raw_leaves:
        if not spec.contains(v):
            raise UnknownVertexError(f"vertex {v} does not exist in K_{spec.p} + I_{spec.q}")

    combined = raw_handle + raw_leaves
    if len(set(combined)) != len(combined):
        dupes = sorted({v for v in combined if combined.count(v) > 1})
        raise DuplicateVertexError(f"duplicated vertices: {', '.join(map(str, dupes))}")

    for v in raw_leaves:
        if v.part != "q":
            raise LeafNotInQError(f"leaf {v} belongs to the clique part")

    handle_p = [v for v in raw_handle if v.part == "p"]
    if len(handle_p) != spec.p:
        missing = sorted(set(spec.p_vertices()) - set(handle_p))
        raise MissingPVertexError(f"handle is missing clique vertices: {', '.join(map(str, missing))}")

    covered = set(combined)
    missing = sorted(v for v in spec.q_vertices() if v not in covered)
    if missing:
        raise LeafSetMismatchError(
            f"vertices in neither handle nor leaves: {', '.join(map(str, missing))}"
        )

    # Tail rule: count Q-vertices below the last P-vertex.
    last_p = max(i for i, v in enumerate(raw_handle) if v.part == "p")
    tail = raw_handle[last_p + 1:]
    if len(tail) >= 2:
        raise BadHandleTailError(
            f"{len(tail)} independent-set vertices below the last clique vertex"
        )
    if len(tail) == 1:
        if raw_leaves:
            raise BadHandleTailError(
                f"handle ends with {tail[0]} while leaves are declared; no search tree has this shape"
            )
        return Broom(spec, raw_handle[: last_p + 1], frozenset(tail))
    return Broom(spec, raw_handle, frozenset(raw_leaves))


def broom_to_tubing(b: Broom) -> Tubing:
    """Tube set of a broom: the vertex set of every proper subtree.

    Subtrees rooted at handle positions 2..m each contain the handle suffix
    plus all leaves; each leaf is a singleton subtree.  Always n - 1 tubes.
    """
    tubes = [frozenset({v}) for v in b.leaves]
    suffix = set(b.leaves)
    for v in reversed(b.handle[1:]):
        suffix.add(v)
        tubes.append(frozenset(suffix))
    return frozenset(tubes)


def _induces_connected(tube: frozenset) -> bool:
    # In a complete split graph a vertex set is connected iff it is a single
    # vertex or touches the clique part.
    return len(tube) == 1 or any(v.part == "p" for v in tube)


def is_valid_tubing(spec: SplitGraphSpec, tubes: Iterable[frozenset], require_maximal: bool = True) -> bool:
    """Tubing axioms: non-empty proper connected tubes, pairwise nested or
    non-adjacent.  With require_maximal, also exactly n - 1 tubes."""
    tubes = list(tubes)
    if require_maximal and len(tubes) != spec.n - 1:
        return False
    everything = set(spec.p_vertices()) | set(spec.q_vertices())
    for t in tubes:
        if not t or set(t) == everything or not _induces_connected(t):
            return False
        if not all(spec.contains(v) for v in t):
            return False
    for i, a in enumerate(tubes):
        for b in tubes[i + 1:]:
            if a <= b or b <= a:
                continue
            if _induces_connected(a | b):
                return False
    return True


def from_partial_permutation(seq: Sequence[int], q: int) -> Broom:
    """Stellohedron codec (p = 1): an ordered subset of 1..q read top-down
    gives the handle's Q-vertices; the rest become leaves."""
    spec = SplitGraphSpec(1, q)
    entries = list(seq)
    for e in entries:
        if not isinstance(e, int) or not 1 <= e <= q:
            raise OutOfRangeError(f"entry {e!r} outside 1..{q}")
    if len(set(entries)) != len(entries):
        raise DuplicateEntryError(f"repeated entries in {entries}")
    handle = tuple(VertexId("q", e) for e in entries) + (VertexId("p", 1),)
    leaves = frozenset(v for v in spec.q_vertices() if v.index not in set(entries))
    return Broom(spec, handle, leaves)


def to_partial_permutation(b: Broom) -> tuple[int, ...]:
    """Inverse codec: Q-indices of the handle, top-down."""
    return b.handle_q_indices()


# ---------------------------------------------------------------------------
# Instance documents
# ---------------------------------------------------------------------------

def _parse_tree_doc(spec: SplitGraphSpec, doc, label: str) -> Broom:
    if not isinstance(doc, dict):
        raise InstanceFormatError(f"{label} must be an object, got {type(doc).__name__}")
    unknown = set(doc) - {"handle", "leaves"}
    if unknown:
        raise InstanceFormatError(f"unknown fields in {label}: {', '.join(sorted(unknown))}")
    if "handle" not in doc:
        raise InstanceFormatError(f"{label} is missing 'handle'")
    handle = doc["handle"]
    if not isinstance(handle, list) or not all(isinstance(x, str) for x in handle):
        raise InstanceFormatError(f"{label}.handle must be a list of vertex strings")
    if "leaves" in doc:
        leaves = doc["leaves"]
        if not isinstance(leaves, list) or not all(isinstance(x, str) for x in leaves):
            raise InstanceFormatError(f"{label}.leaves must be a list of vertex strings")
        return validate(spec, handle, leaves)
    # Leaves omitted: recompute them from the handle.
    parsed = [VertexId.parse(x) for x in handle]
    leaves = [v for v in spec.q_vertices() if v not in set(parsed)]
    return validate(spec, parsed, leaves)


def parse_instance(doc) -> tuple[Broom, Broom]:
    """Parse an instance document into a pair of canonical brooms.

    Two accepted forms, unknown fields rejected in both:
      {"p": int, "q": int, "t1": {"handle": [...], "leaves": [...]}, "t2": {...}}
      {"q": int, "pp1": [int...], "pp2": [int...]}    (stellohedron, p = 1)
    """
    if not isinstance(doc, dict):
        raise InstanceFormatError(f"instance must be an object, got {type(doc).__name__}")
    keys = set(doc)
    if keys == {"p", "q", "t1", "t2"}:
        if not isinstance(doc["p"], int) or not isinstance(doc["q"], int):
            raise InstanceFormatError("'p' and 'q' must be integers")
        spec = SplitGraphSpec(doc["p"], doc["q"])
        return _parse_tree_doc(spec, doc["t1"], "t1"), _parse_tree_doc(spec, doc["t2"], "t2")
    if keys == {"q", "pp1", "pp2"}:
        if not isinstance(doc["q"], int):
            raise InstanceFormatError("'q' must be an integer")
        pps = []
        for name in ("pp1", "pp2"):
            pp = doc[name]
            if not isinstance(pp, list) or not all(isinstance(x, int) for x in pp):
                raise InstanceFormatError(f"'{name}' must be a list of integers")
            pps.append(pp)
        return from_partial_permutation(pps[0], doc["q"]), from_partial_permutation(pps[1], doc["q"])
    raise InstanceFormatError(
        "instance must have exactly the fields p,q,t1,t2 or q,pp1,pp2; "
        f"got {', '.join(sorted(keys)) or 'nothing'}"
    )


def instance_to_doc(t1: Broom, t2: Broom) -> dict:
    return {
        "p": t1.spec.p,
        "q": t1.spec.q,
        "t1": t1.to_doc(),
        "t2": t2.to_doc(),
    }
