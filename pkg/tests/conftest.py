import random

from hypothesis import strategies as st

from broomdist import Broom, SplitGraphSpec, VertexId, random_broom


def make_broom(p, q, handle, leaves=()):
    """Shorthand for building canonical brooms from 'p1'/'q2' strings."""
    spec = SplitGraphSpec(p, q)
    return Broom(
        spec,
        tuple(VertexId.parse(s) for s in handle),
        frozenset(VertexId.parse(s) for s in leaves),
    )


def reversal_pair(q):
    """The stellohedron diameter pair: all of Q in both handles, opposite order."""
    return (
        make_broom(1, q, [f"q{i}" for i in range(1, q + 1)] + ["p1"]),
        make_broom(1, q, [f"q{i}" for i in range(q, 0, -1)] + ["p1"]),
    )


@st.composite
def specs(draw, max_p=4, max_q=5):
    return SplitGraphSpec(draw(st.integers(1, max_p)), draw(st.integers(0, max_q)))


@st.composite
def brooms(draw, spec=None, max_p=4, max_q=5):
    if spec is None:
        spec = draw(specs(max_p=max_p, max_q=max_q))
    seed = draw(st.integers(0, 2**48))
    return random_broom(spec, random.Random(seed))


@st.composite
def broom_pairs(draw, max_p=4, max_q=5):
    spec = draw(specs(max_p=max_p, max_q=max_q))
    return draw(brooms(spec=spec)), draw(brooms(spec=spec))
