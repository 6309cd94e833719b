from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hlab.algebra import Arrow, Quiver, Relation, hilbert_function
from hlab.algfile import AlgebraFile, from_algebra, parse, serialize
from hlab.constructions import (BeilinsonSpec, CyclicActionSpec, beilinson, dual_numbers,
                                rolled_up, twisted_group_algebra)
from hlab.errors import FormatError

DUAL = """# k[x]/(x^2)
vertices 1
arrow x 0 0 1
rel 1 x x
"""


def test_parse_dual_numbers():
    af = parse(DUAL)
    a = af.build(3)
    assert hilbert_function(a).upto(3) == (1, 1, 0, 0)


def test_relation_signs_and_fractions():
    af = parse("vertices 1\narrow x 0 0 1\narrow y 0 0 1\nrel -1/2 x y - 3 y x + 1 x x\n")
    (r,) = af.relations
    assert r.terms == ((Fraction(-1, 2), ("x", "y")), (Fraction(-3), ("y", "x")),
                       (Fraction(1), ("x", "x")))
    assert serialize(af).splitlines()[-1] == "rel -1/2 x y - 3 y x + 1 x x"


@pytest.mark.parametrize("text,msg", [
    ("arrow x 0 0 1\n", "before vertices"),
    ("vertices 1\narrow x 0 0\n", "arrow <id>"),
    ("vertices 1\narrow x 0 0 1\nrel 1 x x +\n", "dangling"),
    ("vertices 1\narrow x 0 0 1\nrel 1 x x 2 x\n", "expected +"),
    ("vertices 1\nfield fp:9\n", "not prime"),
    ("vertices 1\nbogus 3\n", "unknown directive"),
    ("field rat\n", "missing"),
    ("vertices 1\narrow x 0 0 1\nrel 1 y\n", "unknown arrow"),
])
def test_parse_errors(text, msg):
    with pytest.raises(FormatError, match=msg):
        parse(text)


@pytest.mark.parametrize("build", [
    lambda: beilinson(BeilinsonSpec(3)), lambda: beilinson(BeilinsonSpec(3, "exterior")),
    lambda: rolled_up(2, 5), dual_numbers,
    lambda: twisted_group_algebra(CyclicActionSpec(2, 2, (1, 1)), 4, p=5),
    lambda: twisted_group_algebra(CyclicActionSpec(2, 3, (1, 2)), 3, p=7),
])
def test_serialized_algebra_rebuilds(build):
    a = build()
    text = serialize(from_algebra(a))
    assert serialize(parse(text)) == text
    b = parse(text).build()
    assert b.dims() == a.dims() and b.finite == a.finite


ids = st.sampled_from(["a", "b", "c", "x_1", "y'"])


@st.composite
def files(draw):
    n = draw(st.integers(1, 3))
    names = draw(st.lists(ids, min_size=1, max_size=4, unique=True))
    arrows = tuple(Arrow(nm, draw(st.integers(0, n - 1)), draw(st.integers(0, n - 1)),
                         draw(st.integers(1, 3))) for nm in names)
    q = Quiver(n, arrows)
    rels = []
    for _ in range(draw(st.integers(0, 3))):
        terms = []
        for _ in range(draw(st.integers(1, 3))):
            c = draw(st.fractions(min_value=-5, max_value=5, max_denominator=4).filter(bool))
            terms.append((c, tuple(draw(st.lists(st.sampled_from(names), min_size=1, max_size=3)))))
        rels.append(Relation(tuple(terms)))
    field = draw(st.sampled_from(["rat", "fp:5", "fp:1000003"]))
    trunc = draw(st.none() | st.integers(0, 6))
    name = draw(st.none() | st.sampled_from(["alg", "rolled-up:2"]))
    return AlgebraFile(q, tuple(rels), field, trunc, name)


@given(files())
def test_round_trip(af):
    # random relations need not be composable; the format still round-trips them
    # when they are, and rejects them otherwise
    text = serialize(af)
    try:
        back = parse(text)
    except FormatError:
        return
    assert back == af
    assert serialize(back) == text
