import pytest
from hypothesis import given, strategies as st

from broomdist import (
    LiftLeaf,
    SinkToLeaf,
    SplitGraphSpec,
    SwapHandle,
    VertexId,
    apply,
    inverse,
    neighbors,
    rotation_from_doc,
    rotation_to_doc,
)
from broomdist.errors import IllegalRotationError
from broomdist.oracle import iter_brooms

from conftest import broom_pairs, brooms, make_broom

q = lambda i: VertexId("q", i)


class TestNeighbors:
    def test_all_leaves_broom_has_only_lifts(self):
        b = make_broom(1, 3, ["p1"], ["q1", "q2", "q3"])
        moves = neighbors(b)
        assert len(moves) == 3
        assert {r for r, _ in moves} == {LiftLeaf(q(1)), LiftLeaf(q(2)), LiftLeaf(q(3))}

    def test_full_handle_broom_swaps_and_sink(self):
        b = make_broom(1, 3, ["q1", "q2", "q3", "p1"])
        moves = neighbors(b)
        assert [r for r, _ in moves] == [SwapHandle(1), SwapHandle(2), SinkToLeaf()]

    def test_two_clique_vertices_one_leaf(self):
        b = make_broom(2, 1, ["p1", "p2"], ["q1"])
        moves = neighbors(b)
        assert [r for r, _ in moves] == [SwapHandle(1), LiftLeaf(q(1))]

    @pytest.mark.parametrize("p,q_", [(1, 3), (2, 2), (3, 1), (2, 0), (1, 4), (3, 2)])
    def test_degree_regularity_and_symmetry(self, p, q_):
        spec = SplitGraphSpec(p, q_)
        adjacency = {}
        for b in iter_brooms(spec):
            moves = neighbors(b)
            assert len(moves) == spec.n - 1
            results = [nb for _, nb in moves]
            assert len(set(results)) == len(results)
            assert all(nb != b for nb in results)
            for nb in results:
                nb.check()
            adjacency[b] = set(results)
        for b, nbs in adjacency.items():
            for nb in nbs:
                assert b in adjacency[nb]


class TestApply:
    def test_sink(self):
        b = make_broom(1, 3, ["q1", "q2", "q3", "p1"])
        assert apply(b, SinkToLeaf()) == make_broom(1, 3, ["q1", "q2", "p1"], ["q3"])

    def test_lift_inverts_sink(self):
        b = make_broom(1, 3, ["q1", "q2", "p1"], ["q3"])
        assert apply(b, LiftLeaf(q(3))) == make_broom(1, 3, ["q1", "q2", "q3", "p1"])

    def test_swap_of_clique_vertices(self):
        b = make_broom(2, 1, ["p1", "p2"], ["q1"])
        assert apply(b, SwapHandle(1)) == make_broom(2, 1, ["p2", "p1"], ["q1"])

    def test_lift_onto_single_vertex_handle(self):
        # no vertex above the bottom: the lifted leaf becomes the root
        b = make_broom(1, 2, ["p1"], ["q1", "q2"])
        assert apply(b, LiftLeaf(q(2))) == make_broom(1, 2, ["q2", "p1"], ["q1"])

    def test_illegal_swap_into_bottom_slot(self):
        b = make_broom(1, 3, ["q1", "q2", "q3", "p1"])
        with pytest.raises(IllegalRotationError):
            apply(b, SwapHandle(3))

    def test_illegal_sink_below_clique_vertex(self):
        b = make_broom(2, 1, ["q1", "p1", "p2"])
        with pytest.raises(IllegalRotationError):
            apply(b, SinkToLeaf())

    def test_illegal_lift_of_non_leaf(self):
        b = make_broom(1, 2, ["q1", "p1"], ["q2"])
        with pytest.raises(IllegalRotationError):
            apply(b, LiftLeaf(q(1)))

    def test_swap_position_out_of_range(self):
        b = make_broom(1, 1, ["q1", "p1"])
        with pytest.raises(IllegalRotationError):
            apply(b, SwapHandle(2))


class TestInverse:
    def test_swap_is_self_inverse(self):
        b = make_broom(1, 3, ["q1", "q2", "q3", "p1"])
        assert inverse(SwapHandle(2), b) == SwapHandle(2)

    def test_sink_inverts_to_lift_of_the_sunk_vertex(self):
        b = make_broom(1, 3, ["q1", "q2", "q3", "p1"])
        assert inverse(SinkToLeaf(), b) == LiftLeaf(q(3))

    def test_lift_inverts_to_sink(self):
        b = make_broom(1, 2, ["p1"], ["q1", "q2"])
        assert inverse(LiftLeaf(q(2)), b) == SinkToLeaf()

    @given(brooms(), st.integers(0, 10 ** 9))
    def test_apply_then_inverse_restores(self, b, pick):
        moves = neighbors(b)
        if not moves:  # n = 1: the flip graph is a single vertex
            assert b.spec.n == 1
            return
        r, after = moves[pick % len(moves)]
        assert apply(after, inverse(r, b)) == b


class TestSerialization:
    @pytest.mark.parametrize(
        "rot,doc",
        [
            (SwapHandle(2), {"kind": "swap", "i": 2}),
            (SinkToLeaf(), {"kind": "sink"}),
            (LiftLeaf(q(3)), {"kind": "lift", "u": "q3"}),
        ],
    )
    def test_round_trip(self, rot, doc):
        assert rotation_to_doc(rot) == doc
        assert rotation_from_doc(doc) == rot

    def test_unknown_kind(self):
        with pytest.raises(IllegalRotationError):
            rotation_from_doc({"kind": "teleport"})


@given(broom_pairs())
def test_neighbor_relation_is_symmetric(pair):
    a, b = pair
    in_a = any(nb == b for _, nb in neighbors(a))
    in_b = any(nb == a for _, nb in neighbors(b))
    assert in_a == in_b
