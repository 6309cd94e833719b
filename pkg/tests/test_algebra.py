import pytest
from hypothesis import given, strategies as st

from hlab.algebra import (Arrow, Quiver, Relation, build_algebra, center_dim, check_associativity,
                          check_idempotents, check_module, hilbert_function, simple_module)
from hlab.constructions import (BeilinsonSpec, _linear_or_cyclic, beilinson, dual_numbers,
                                kronecker, rolled_up)
from hlab.errors import RelationError, ResourceLimitError
from hlab.linalg import PrimeField


def test_kronecker_dims():
    q = Quiver(2, (Arrow("a", 0, 1), Arrow("b", 0, 1)))
    a = build_algebra(q, (), 2)
    assert hilbert_function(a).upto(2) == (2, 2, 0)
    assert a.finite


def test_dual_numbers_dims():
    q = Quiver(1, (Arrow("x", 0, 0),))
    a = build_algebra(q, (Relation(((1, ("x", "x")),)),), 5)
    assert hilbert_function(a).upto(5) == (1, 1, 0, 0, 0, 0)


def test_beilinson_sym_3_total():
    a = beilinson(BeilinsonSpec(3))
    assert hilbert_function(a).total() == 15


def test_exterior_2_hilbert():
    a = beilinson(BeilinsonSpec(2, "exterior"))
    assert hilbert_function(a).upto(2) == (2, 2, 0)


def test_rolled_up_2_hilbert():
    # 2 (d + 1): the matrix-of-Veronese-shift count
    assert hilbert_function(rolled_up(2, 4)).upto(4) == (2, 4, 6, 8, 10)


def test_center_examples():
    d = dual_numbers()
    assert center_dim(d, 0) == 1 and center_dim(d, 1) == 1
    assert center_dim(kronecker(), 0) == 1
    assert center_dim(beilinson(BeilinsonSpec(3)), 0) == 1


def test_simple_modules():
    k = kronecker()
    s = simple_module(k, 0)
    assert s.dim == 1 and s.act(0, 0) == {0: 1} and s.act(0, 1) == {}
    assert all(s.act(0, b) == {} for b in k.radical())
    assert check_module(s)
    d = simple_module(dual_numbers(), 0)
    assert d.act(0, 1) == {}
    with pytest.raises(IndexError):
        simple_module(k, 2)


def test_inhomogeneous_relation_rejected():
    q = Quiver(1, (Arrow("x", 0, 0), Arrow("y", 0, 0, 2)))
    with pytest.raises(RelationError):
        build_algebra(q, (Relation(((1, ("x", "x", "x")), (1, ("y",)))),), 3)
    q2 = Quiver(2, (Arrow("a", 0, 1), Arrow("b", 1, 0)))
    with pytest.raises(RelationError):
        build_algebra(q2, (Relation(((1, ("a", "b")), (1, ("b", "a")))),), 3)


def test_noncomposable_path_rejected():
    q = Quiver(2, (Arrow("a", 0, 1), Arrow("b", 0, 1)))
    with pytest.raises(RelationError):
        build_algebra(q, (Relation(((1, ("a", "b")),)),), 2)


def test_resource_ceiling(monkeypatch):
    monkeypatch.setenv("HLAB_RESOURCE_MB", "1")
    q = Quiver(1, tuple(Arrow(f"x{i}", 0, 0) for i in range(4)))
    with pytest.raises(ResourceLimitError):
        build_algebra(q, (), 9)


@pytest.mark.parametrize("build", [
    lambda: dual_numbers(), lambda: kronecker(),
    lambda: beilinson(BeilinsonSpec(3)), lambda: beilinson(BeilinsonSpec(4, "exterior")),
    lambda: rolled_up(3, 4), lambda: beilinson(BeilinsonSpec(3), PrimeField(101)),
])
def test_structure_invariants(build):
    a = build()
    assert check_idempotents(a)
    assert check_associativity(a)
    assert all(d == 0 for d in a.degree[:a.vertex_count])
    assert a.radical() == [b for b in range(len(a)) if a.degree[b] >= 1]
    for (i, j), prod in a.mult.items():
        assert a.source[i] == a.target[j]
        for k in prod:
            assert a.degree[k] == a.degree[i] + a.degree[j]
            assert a.source[k] == a.source[j] and a.target[k] == a.target[i]


@st.composite
def quivers(draw):
    n = draw(st.integers(1, 3))
    m = draw(st.integers(0, 4))
    arrows = tuple(Arrow(f"a{k}", draw(st.integers(0, n - 1)), draw(st.integers(0, n - 1)),
                         draw(st.integers(1, 2))) for k in range(m))
    return Quiver(n, arrows)


def _count_paths(q: Quiver, d: int) -> int:
    # ending[e][v]: paths of degree e ending at v, trivial paths included
    ending = [[1] * q.vertex_count]
    for e in range(1, d + 1):
        row = [0] * q.vertex_count
        for a in q.arrows:
            if a.degree <= e:
                row[a.target] += ending[e - a.degree][a.source]
        ending.append(row)
    return sum(ending[d])


@given(quivers(), st.integers(0, 4))
def test_free_path_algebra_counts_paths(q, d):
    a = build_algebra(q, (), 4)
    assert hilbert_function(a)[d] == _count_paths(q, d)


@given(st.permutations(list(range(6))), st.permutations(list(range(6))))
def test_arrow_order_does_not_change_hilbert(arrow_perm, name_perm):
    quiver, rels = _linear_or_cyclic(3, cyclic=False, variant="symmetric")
    names = [f"z{k}" for k in name_perm]
    rename = {a.id: names[k % 6] + f"_{k}" for k, a in enumerate(quiver.arrows)}
    arrows = tuple(Arrow(rename[quiver.arrows[k].id], quiver.arrows[k].source,
                         quiver.arrows[k].target) for k in arrow_perm)
    new_rels = tuple(Relation(tuple((c, tuple(rename[i] for i in ids)) for c, ids in r.terms))
                     for r in rels)
    a = build_algebra(Quiver(3, arrows), new_rels, 3)
    assert hilbert_function(a).upto(3) == (3, 6, 6, 0)
