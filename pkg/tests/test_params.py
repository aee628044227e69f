"""Tower combinatorics: the count d, the base dimensions m_b, and the
parity and junction identities everything downstream leans on."""

import pytest
from hypothesis import given, strategies as st

from slicetower.group import Group, is_odd_prime, p_adic_val
from slicetower.params import parity_offset, slice_params

GROUPS = [Group(3, 1), Group(3, 2), Group(5, 1), Group(5, 2), Group(7, 1), Group(3, 3)]


def test_is_odd_prime():
    assert [q for q in range(2, 30) if is_odd_prime(q)] == [3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert not is_odd_prime(2)
    assert not is_odd_prime(1)
    assert not is_odd_prime(-3)


def test_p_adic_val():
    assert p_adic_val(1, 3) == 0
    assert p_adic_val(18, 3) == 2
    assert p_adic_val(250, 5) == 3
    with pytest.raises(ValueError):
        p_adic_val(0, 3)


def test_group_basics():
    g = Group(3, 2)
    assert g.order == 9
    assert g.subgroup(1) == Group(3, 1)
    assert g.subgroup(0).order == 1
    assert str(g) == "C_3^2"
    assert str(Group(5, 1)) == "C_5"


def test_parity_offset_cases():
    # n0 = 0 wins over the even test: 0 is even but the offset is 0
    assert parity_offset(9, 3) == 0
    assert parity_offset(7, 3) == 1
    assert parity_offset(8, 3) == 2
    assert parity_offset(10, 5) == 0
    assert parity_offset(12, 5) == 2


@given(st.integers(min_value=3, max_value=400),
       st.sampled_from([(3, 1), (3, 2), (3, 3), (5, 1), (5, 2), (7, 1)]))
def test_count_matches_direct_enumeration(n, pk):
    # d counts the m with the parity of n in [n/p, n-2]; the constructor
    # cross-checks the closed form against this list internally
    params = slice_params(n, Group(*pk))
    p = pk[0]
    direct = [m for m in range(1, n - 1) if (n - m) % 2 == 0 and m * p >= n]
    assert params.count == len(direct)
    assert list(params.base_dims) == direct
    assert params.count >= 1          # m = n - 2 always qualifies
    assert params.base_dims[-1] == n - 2


def test_frozen_examples():
    p7 = slice_params(7, Group(3, 2))
    assert p7.base_dims == (3, 5)
    assert p7.ell(1, 2) == 15         # ((7-2)*9 - 5*3) / 2
    assert p7.ell(1, 1) == 18
    assert p7.ell(2, 1) == 9
    assert p7.ell(2, 2) == 0
    assert p7.valuation(2, 1) == 0    # min(v_3(3), k - a) caps at 0
    assert p7.valuation(1, 1) == 1
    assert p7.valuation(1, 2) == 0

    p16 = slice_params(16, Group(3, 2))
    assert p16.base_dims == (6, 8, 10, 12, 14)
    assert p16.count == 5
    assert p16.ell(2, 5) == 0
    assert p16.ell(1, 5) == 42
    assert [p16.valuation(1, b) for b in range(1, 6)] == [1, 0, 0, 1, 0]
    assert [p16.valuation(2, b) for b in range(1, 6)] == [0, 0, 0, 0, 0]


@given(st.integers(min_value=3, max_value=200),
       st.sampled_from([(3, 2), (3, 3), (5, 2)]))
def test_junction_identity(n, pk):
    params = slice_params(n, Group(*pk))
    # connection_gap asserts gap == ell(a, d) - ell(a+1, 1) internally,
    # plus the bound gap <= p^(a+1) with equality iff residue == 2
    for a in range(1, params.group.k):
        gap = params.connection_gap(a)
        assert gap >= 0


@given(st.integers(min_value=3, max_value=200),
       st.sampled_from([(3, 1), (3, 2), (5, 1), (5, 2)]))
def test_ell_is_monotone_in_stage_order(n, pk):
    # stages ordered by (a desc, b desc) have strictly increasing ell,
    # matching strictly decreasing dimensions
    params = slice_params(n, Group(*pk))
    ells = [params.ell(a, b)
            for a in range(params.group.k, 0, -1)
            for b in range(params.count, 0, -1)]
    assert ells == sorted(ells)
    assert len(set(ells)) == len(ells)


def test_index_validation():
    params = slice_params(7, Group(3, 2))
    with pytest.raises(ValueError):
        params.ell(0, 1)
    with pytest.raises(ValueError):
        params.ell(3, 1)
    with pytest.raises(ValueError):
        params.base_dim(3)
    with pytest.raises(ValueError):
        slice_params(2, Group(3, 2))
