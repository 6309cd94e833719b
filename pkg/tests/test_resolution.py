from math import comb

import pytest

from hlab.algebra import hilbert_function, simple_module
from hlab.constructions import BeilinsonSpec, beilinson, dual_numbers, rolled_up
from hlab.resolution import (Smoothness, ext_algebra_dims, global_dimension, minimal_resolution,
                             smoothness_check)


def test_dual_numbers_never_finish():
    d = dual_numbers()
    for max_len in (1, 3, 6):
        res = minimal_resolution(simple_module(d, 0), max_len)
        assert not res.finished and res.length is None
        assert res.ext_dims() == [1] * (max_len + 1)
    assert global_dimension(d, 5) is None
    assert smoothness_check(d, 5) is Smoothness.NOT_SMOOTH_UP_TO_BOUND


def test_kronecker_simple_resolution():
    a = beilinson(BeilinsonSpec(2))
    res = minimal_resolution(simple_module(a, 1), 4)
    assert res.finished and res.length == 1
    assert res.steps[0].multiplicities(2) == [0, 1]
    assert res.steps[1].multiplicities(2) == [2, 0]


def test_pd_of_simples_over_a0_3():
    a = beilinson(BeilinsonSpec(3))
    assert [minimal_resolution(simple_module(a, v), 4).length for v in range(3)] == [0, 1, 2]


@pytest.mark.parametrize("n", [2, 3, 4])
@pytest.mark.parametrize("variant", ["symmetric", "exterior"])
def test_global_dimension(n, variant):
    a = beilinson(BeilinsonSpec(n, variant))
    assert global_dimension(a, n + 2) == n - 1
    assert smoothness_check(a, n + 2) is Smoothness.SMOOTH


@pytest.mark.parametrize("n", [2, 3, 4])
def test_koszul_duality(n):
    a0 = beilinson(BeilinsonSpec(n))
    a1 = beilinson(BeilinsonSpec(n, "exterior"))
    assert ext_algebra_dims(a0, n - 1).as_tuple() == hilbert_function(a1).upto(n - 1)
    assert ext_algebra_dims(a1, n - 1).as_tuple() == hilbert_function(a0).upto(n - 1)


def test_ext_examples():
    assert ext_algebra_dims(beilinson(BeilinsonSpec(3)), 2).as_tuple() == (3, 6, 3)
    assert ext_algebra_dims(beilinson(BeilinsonSpec(2)), 1).as_tuple() == (2, 2)
    assert ext_algebra_dims(beilinson(BeilinsonSpec(2, "exterior")), 1).as_tuple() == (2, 2)


@pytest.mark.parametrize("n", [2, 3])
def test_rolled_up_pd(n):
    b = rolled_up(n, 2 * n)
    for v in range(n):
        res = minimal_resolution(simple_module(b, v), n + 1, window=2 * n)
        assert res.finished and res.length == n
        assert res.check_complex() and res.check_minimal()
        assert res.ext_dims() == [comb(n, k) for k in range(n + 1)]


@pytest.mark.parametrize("variant", ["symmetric", "exterior"])
def test_resolutions_are_minimal_complexes(variant):
    a = beilinson(BeilinsonSpec(4, variant))
    for v in range(4):
        res = minimal_resolution(simple_module(a, v), 5)
        assert res.check_complex() and res.check_minimal()
