import pytest

from hlab.algebra import Quiver, build_algebra
from hlab.constructions import (BeilinsonSpec, CyclicActionSpec, beilinson, dual_numbers,
                                kronecker, rolled_up, twisted_group_algebra)
from hlab.errors import HlabError, InsufficientPrecisionError
from hlab.hochschild import (COHOMOLOGY, HOMOLOGY, center_total, full_bar_dims, hh_cohomology,
                             hh_graded, hh_graded_range, hh_homology, reduced_complexes)
from hlab.linalg import PrimeField


def A0(n, field=None):
    return beilinson(BeilinsonSpec(n)) if field is None else beilinson(BeilinsonSpec(n), field)


def test_dual_numbers():
    d = dual_numbers()
    assert hh_cohomology(d, 2).as_tuple() == (2, 1, 1)
    assert hh_homology(d, 2).as_tuple() == (2, 1, 1)


def test_beilinson_cohomology():
    assert hh_cohomology(A0(2), 3).as_tuple() == (1, 3, 0, 0)
    assert hh_cohomology(A0(3), 4).as_tuple() == (1, 8, 10, 0, 0)


def test_beilinson_homology():
    assert hh_homology(A0(2), 2).as_tuple() == (2, 0, 0)
    assert hh_homology(A0(3), 3).as_tuple() == (3, 0, 0, 0)


def test_prime_field_agrees():
    f = PrimeField(1000003)
    assert hh_cohomology(A0(3, f), 4) == hh_cohomology(A0(3), 4)


@pytest.mark.parametrize("build", [dual_numbers, kronecker])
@pytest.mark.parametrize("direction", [HOMOLOGY, COHOMOLOGY])
def test_reduced_matches_full_bar(build, direction):
    a = build()
    fn = hh_homology if direction == HOMOLOGY else hh_cohomology
    assert fn(a, 3) == full_bar_dims(a, direction, 3)


@pytest.mark.parametrize("n", [2, 3])
@pytest.mark.parametrize("variant", ["symmetric", "exterior"])
@pytest.mark.parametrize("direction", [HOMOLOGY, COHOMOLOGY])
def test_square_zero_and_euler(n, variant, direction):
    a = beilinson(BeilinsonSpec(n, variant))
    for cx in reduced_complexes(a, direction, 2 * n).values():
        assert cx.check_square_zero()
        assert cx.euler_identity()
        for k in range(cx.certified_top() + 1):
            assert cx.euler_identity(k)


@pytest.mark.parametrize("build", [dual_numbers, kronecker, lambda: A0(3), lambda: A0(4),
                                   lambda: beilinson(BeilinsonSpec(3, "exterior"))])
def test_hh0_is_center(build):
    a = build()
    assert hh_cohomology(a, 0)[0] == center_total(a)


@pytest.mark.parametrize("n", [2, 3])
def test_vanishing_above_twice_dimension(n):
    t = hh_cohomology(A0(n), 2 * (n - 1) + 2)
    assert all(t[i] == 0 for i in range(2 * (n - 1) + 1, 2 * (n - 1) + 3))


def test_graded_examples():
    b = rolled_up(2, 4)
    assert hh_graded(b, HOMOLOGY, 0, 2).column(0) == (2, 0, 0)
    assert hh_graded(b, HOMOLOGY, 2, 3).column(2) == (3, 4, 1, 0)
    with pytest.raises(InsufficientPrecisionError):
        hh_graded(b, HOMOLOGY, 5, 3)


def test_graded_twisted_matches_rolled_up():
    t = twisted_group_algebra(CyclicActionSpec(2, 2, (1, 1)), 4, p=5)
    b = rolled_up(2, 4)
    assert hh_graded_range(t, HOMOLOGY, range(5), 4) == hh_graded_range(b, HOMOLOGY, range(5), 4)


def test_graded_sums_to_ungraded():
    a = A0(3)
    total = hh_cohomology(a, 3)
    parts = [hh_graded(a, COHOMOLOGY, d, 3) for d in range(-2, 3)]
    for i in range(4):
        assert sum(p[(i, p.degrees[0])] for p in parts) == total[i]


def test_infinite_algebra_needs_window():
    with pytest.raises(HlabError):
        hh_homology(rolled_up(2, 4), 2)
    with pytest.raises(InsufficientPrecisionError):
        hh_graded(rolled_up(2, 4), COHOMOLOGY, 0, 2)


def test_semisimple_short_circuit():
    a = build_algebra(Quiver(3, ()), (), 2)
    assert hh_cohomology(a, 3).as_tuple() == (3, 0, 0, 0)
    assert hh_homology(a, 2).as_tuple() == (3, 0, 0)


def test_parallel_matches_serial():
    a = A0(3)
    assert hh_cohomology(a, 4, jobs=2) == hh_cohomology(a, 4)
