"""The quadratic 0/1 model behind the rotation distance.

From a pair of brooms we derive, for each Q-vertex shared by both handles,
the clique and independent-set vertices it must pass on any rotation
sequence.  The resulting objective counts the rotations forced by a choice
of which shared vertices visit the leaves (assignment x); its minimum over
all assignments is the exact rotation distance.

All arithmetic is exact: half-integer intermediates are carried doubled, and
divisions by two are asserted exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .core import Broom, SplitGraphSpec, VertexId
from .errors import DomainMismatchError, NotAPermutationError, SpecMismatchError

Assignment = Mapping[VertexId, int]


@dataclass(frozen=True, eq=False)
class ModelSets:
    """Instance-derived placement data.

    shared lists the Q-vertices present in both handles (index ascending).
    clique_perm relabels the clique vertices 1..p by their order in the first
    handle and reads them back in the second.  The per-vertex maps record,
    for every relevant vertex, which vertices sit above/below it where.
    """

    spec: SplitGraphSpec
    shared: tuple[VertexId, ...]
    clique_perm: tuple[int, ...]
    # u in Q minus shared -> clique vertices below u in the one handle holding u
    solo_below_p: dict[VertexId, frozenset]
    # u in shared -> clique vertices above u in one broom, below in the other
    p_disagree: dict[VertexId, frozenset]
    # u in shared -> clique vertices below u in both brooms
    p_below_both: dict[VertexId, frozenset]
    # u in shared -> non-shared Q-vertices above u in whichever handle holds them
    solo_q_above: dict[VertexId, frozenset]
    # u in shared -> shared vertices whose order relative to u differs
    shared_disagree: dict[VertexId, frozenset]
    # u in shared -> shared vertices below u in both brooms
    shared_below_both: dict[VertexId, frozenset]


@dataclass(frozen=True, eq=False)
class CoefficientForm:
    """The objective as constant + linear + quadratic coefficients.

    const2 is the doubled constant term (always even).  quad maps each
    unordered pair of shared vertices to -1 (their order disagrees) or -2;
    the quadratic term of the objective is half the sum over ordered pairs.
    """

    ynodes: tuple[VertexId, ...]
    const2: int
    linear: dict[VertexId, int]
    quad: dict[tuple[VertexId, VertexId], int]

    @property
    def const(self) -> int:
        assert self.const2 % 2 == 0
        return self.const2 // 2

    def evaluate(self, x: Assignment) -> int:
        if set(x) != set(self.ynodes):
            raise DomainMismatchError("assignment domain differs from the shared vertex set")
        value = self.const + sum(self.linear[u] for u in self.ynodes if x[u])
        value += sum(w for (u, v), w in self.quad.items() if x[u] and x[v])
        return value


def inversions(perm: Sequence[int]) -> int:
    """Number of pairs i < j with perm[i] > perm[j], by merge counting."""
    k = len(perm)
    if sorted(perm) != list(range(1, k + 1)):
        raise NotAPermutationError(f"{perm!r} is not a permutation of 1..{k}")

    def count(seq: list[int]) -> tuple[list[int], int]:
        if len(seq) <= 1:
            return seq, 0
        mid = len(seq) // 2
        left, a = count(seq[:mid])
        right, b = count(seq[mid:])
        merged = []
        inv = a + b
        i = j = 0
        while i < len(left) and j < len(right):
            if left[i] <= right[j]:
                merged.append(left[i])
                i += 1
            else:
                inv += len(left) - i
                merged.append(right[j])
                j += 1
        merged.extend(left[i:])
        merged.extend(right[j:])
        return merged, inv

    return count(list(perm))[1]


def derive_sets(t1: Broom, t2: Broom) -> ModelSets:
    """Compute every placement set of the instance (t1, t2)."""
    if t1.spec != t2.spec:
        raise SpecMismatchError(f"{t1.spec} != {t2.spec}")
    spec = t1.spec
    pos1 = {v: i for i, v in enumerate(t1.handle)}
    pos2 = {v: i for i, v in enumerate(t2.handle)}

    shared = tuple(
        sorted((v for v in pos1 if v.part == "q" and v in pos2), key=lambda v: v.index)
    )
    shared_set = set(shared)

    label = {v: j + 1 for j, v in enumerate(v for v in t1.handle if v.part == "p")}
    clique_perm = tuple(label[v] for v in t2.handle if v.part == "p")

    solo_below_p: dict[VertexId, frozenset] = {}
    for u in spec.q_vertices():
        if u in shared_set:
            continue
        if u in pos1:
            handle, at = t1.handle, pos1[u]
        elif u in pos2:
            handle, at = t2.handle, pos2[u]
        else:
            solo_below_p[u] = frozenset()
            continue
        solo_below_p[u] = frozenset(v for v in handle[at + 1:] if v.part == "p")

    p_disagree: dict[VertexId, frozenset] = {}
    p_below_both: dict[VertexId, frozenset] = {}
    pverts = spec.p_vertices()
    for u in shared:
        u1, u2 = pos1[u], pos2[u]
        disagree = []
        below_both = []
        for v in pverts:
            b1, b2 = pos1[v] > u1, pos2[v] > u2
            if b1 and b2:
                below_both.append(v)
            elif b1 != b2:
                disagree.append(v)
        p_disagree[u] = frozenset(disagree)
        p_below_both[u] = frozenset(below_both)

    solo_q_above: dict[VertexId, set] = {u: set() for u in shared}
    for positions in (pos1, pos2):
        for v, at in positions.items():
            if v.part != "q" or v in shared_set:
                continue
            for u in shared:
                if positions[u] > at:
                    solo_q_above[u].add(v)

    shared_disagree: dict[VertexId, set] = {u: set() for u in shared}
    shared_below_both: dict[VertexId, set] = {u: set() for u in shared}
    for i, u in enumerate(shared):
        for v in shared[i + 1:]:
            first = pos1[u] < pos1[v]
            second = pos2[u] < pos2[v]
            if first != second:
                shared_disagree[u].add(v)
                shared_disagree[v].add(u)
            elif first:
                shared_below_both[u].add(v)
            else:
                shared_below_both[v].add(u)

    return ModelSets(
        spec=spec,
        shared=shared,
        clique_perm=clique_perm,
        solo_below_p=solo_below_p,
        p_disagree=p_disagree,
        p_below_both=p_below_both,
        solo_q_above={u: frozenset(s) for u, s in solo_q_above.items()},
        shared_disagree={u: frozenset(s) for u, s in shared_disagree.items()},
        shared_below_both={u: frozenset(s) for u, s in shared_below_both.items()},
    )


def check_assignment(sets: ModelSets, x: Assignment) -> None:
    if set(x) != set(sets.shared):
        raise DomainMismatchError("assignment domain differs from the shared vertex set")
    bad = [u for u, val in x.items() if val not in (0, 1)]
    if bad:
        raise DomainMismatchError(f"non-binary assignment values at {bad}")


def evaluate_objective(sets: ModelSets, x: Assignment) -> int:
    """The forced-rotation count of an assignment, summed term by term.

    This is the direct form of the objective; coefficients() expands the
    same function and the two are asserted equal in tests.
    """
    check_assignment(sets, x)
    total = inversions(sets.clique_perm)
    total += sum(len(s) for s in sets.solo_below_p.values())
    for u in sets.shared:
        xu = x[u]
        total += len(sets.p_disagree[u])
        total += 2 * len(sets.p_below_both[u]) * xu
        total += len(sets.solo_q_above[u]) * (1 - xu)

    disagree2 = 0
    for u in sets.shared:
        xu = x[u]
        for v in sets.shared_disagree[u]:
            disagree2 += (1 + xu) * (1 - x[v])
    # over ordered pairs the disagreement terms pair up to even sums
    assert disagree2 % 2 == 0
    total += disagree2 // 2

    for u in sets.shared:
        if x[u]:
            total += 2 * sum(1 - x[v] for v in sets.shared_below_both[u])
    return total


def coefficients(sets: ModelSets) -> CoefficientForm:
    """Expanded constant/linear/quadratic form of the objective."""
    const2 = 2 * inversions(sets.clique_perm)
    const2 += 2 * sum(len(s) for s in sets.solo_below_p.values())
    for u in sets.shared:
        const2 += 2 * len(sets.p_disagree[u])
        const2 += 2 * len(sets.solo_q_above[u])
        const2 += len(sets.shared_disagree[u])

    linear = {
        u: 2 * len(sets.p_below_both[u])
        - len(sets.solo_q_above[u])
        + 2 * len(sets.shared_below_both[u])
        for u in sets.shared
    }

    quad: dict[tuple[VertexId, VertexId], int] = {}
    for i, u in enumerate(sets.shared):
        disagree = sets.shared_disagree[u]
        for v in sets.shared[i + 1:]:
            quad[(u, v)] = -1 if v in disagree else -2

    return CoefficientForm(ynodes=sets.shared, const2=const2, linear=linear, quad=quad)


def explain_doc(sets: ModelSets) -> dict:
    """JSON-friendly diagnostic dump of the derived model."""
    coeffs = coefficients(sets)
    return {
        "shared": [str(u) for u in sets.shared],
        "clique_perm": list(sets.clique_perm),
        "inversions": inversions(sets.clique_perm),
        "set_sizes": {
            str(u): {
                "p_disagree": len(sets.p_disagree[u]),
                "p_below_both": len(sets.p_below_both[u]),
                "solo_q_above": len(sets.solo_q_above[u]),
                "shared_disagree": len(sets.shared_disagree[u]),
                "shared_below_both": len(sets.shared_below_both[u]),
            }
            for u in sets.shared
        },
        "solo_below_p": {str(u): len(s) for u, s in sorted(sets.solo_below_p.items())},
        "const": coeffs.const,
        "linear": {str(u): coeffs.linear[u] for u in sets.shared},
        "quad": [[str(u), str(v), w] for (u, v), w in sorted(coeffs.quad.items())],
    }
