from math import comb

import pytest
from hypothesis import given, strategies as st

from hlab.algebra import check_associativity, check_idempotents, hilbert_function
from hlab.constructions import (BeilinsonSpec, CyclicActionSpec, beilinson,
                                beilinson_closed_form, rolled_up, rolled_up_closed_form,
                                sym_dim, twisted_closed_form, twisted_group_algebra,
                                veronese_hilbert)
from hlab.errors import HlabError


def test_beilinson_examples():
    assert hilbert_function(beilinson(BeilinsonSpec(2))).total() == 4
    assert hilbert_function(beilinson(BeilinsonSpec(3))).total() == 15
    assert hilbert_function(beilinson(BeilinsonSpec(3, "exterior"))).total() == 12
    with pytest.raises(ValueError):
        BeilinsonSpec(1)
    with pytest.raises(ValueError):
        BeilinsonSpec(3, "clifford")


@pytest.mark.parametrize("n", [2, 3, 4])
def test_beilinson_closed_forms(n):
    sym = hilbert_function(beilinson(BeilinsonSpec(n))).upto(n - 1)
    ext = hilbert_function(beilinson(BeilinsonSpec(n, "exterior"))).upto(n - 1)
    assert sym == tuple((n - d) * sym_dim(n, d) for d in range(n))
    assert ext == tuple((n - d) * comb(n, d) for d in range(n))
    assert sym == beilinson_closed_form(n, "symmetric")
    assert ext == beilinson_closed_form(n, "exterior")


def test_rolled_up_examples():
    assert hilbert_function(rolled_up(2, 0)).upto(0) == (2,)
    assert hilbert_function(rolled_up(3, 3)).upto(3) == rolled_up_closed_form(3, 3)


@pytest.mark.parametrize("n,D", [(2, 6), (3, 6), (4, 4)])
def test_rolled_up_matches_matrix_description(n, D):
    assert hilbert_function(rolled_up(n, D)).upto(D) == rolled_up_closed_form(n, D)


def test_twisted_examples():
    t = twisted_group_algebra(CyclicActionSpec(2, 2, (1, 1)), 4, p=5)
    assert hilbert_function(t).upto(4) == hilbert_function(rolled_up(2, 4)).upto(4)
    trivial = twisted_group_algebra(CyclicActionSpec(1, 1, (0,)), 3, p=5)
    assert hilbert_function(trivial).upto(3) == (1, 1, 1, 1)
    w10 = twisted_group_algebra(CyclicActionSpec(2, 2, (1, 0)), 2, p=5)
    assert hilbert_function(w10).upto(2) == (2, 4, 6)


def test_twisted_needs_roots_of_unity():
    with pytest.raises(HlabError):
        twisted_group_algebra(CyclicActionSpec(2, 3, (1, 2)), 2, p=5)


def test_cyclic_action_validation():
    with pytest.raises(ValueError):
        CyclicActionSpec(2, 2, (1, 2))
    with pytest.raises(ValueError):
        CyclicActionSpec(2, 2, (1,))
    assert CyclicActionSpec(3, 3, (1, 1, 1)).is_sl
    assert not CyclicActionSpec(2, 3, (1, 0)).is_sl


def test_veronese_examples():
    assert veronese_hilbert(2, 4).upto(4) == (1, 0, 3, 0, 5)
    assert veronese_hilbert(1, 5).upto(5) == (1,) * 6
    assert veronese_hilbert(3, 3)[3] == 10


actions = st.integers(1, 4).flatmap(lambda r: st.integers(1, 2).flatmap(
    lambda nv: st.tuples(st.just(nv), st.just(r),
                         st.lists(st.integers(0, r - 1), min_size=nv, max_size=nv))))


@given(actions)
def test_twisted_hilbert_is_order_times_sym(act):
    nv, r, w = act
    primes = {1: 5, 2: 5, 3: 7, 4: 5}
    spec = CyclicActionSpec(nv, r, tuple(w))
    a = twisted_group_algebra(spec, 3, p=primes[r])
    assert hilbert_function(a).upto(3) == twisted_closed_form(spec, 3)
    assert check_idempotents(a)


def test_twisted_associative():
    a = twisted_group_algebra(CyclicActionSpec(2, 3, (1, 2)), 3, p=7)
    assert check_associativity(a)
