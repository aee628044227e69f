"""Bredon homology engine: frozen anchor computations, the underlying-
sphere and restriction-compatibility properties, and injectivity of
restriction on torsion coefficients."""

import random

import pytest

from slicetower.abelian import AbGroup, Mat
from slicetower.group import Group
from slicetower.homology import (
    bredon_homology,
    homres_injective,
    level_complex,
    presented_injective,
)
from slicetower.cells import cell_structure
from slicetower.mackey import B_ij, Z_ij, constant_Z, dual_Z, restrict_mackey
from slicetower.params import slice_params
from slicetower.rep import (
    Rep,
    regular_rep,
    restrict_rep,
    rotation_plane,
    slice_rep,
    sub,
    trivial_rep,
)

C3 = Group(3, 1)
C9 = Group(3, 2)


def top_boundary_scalars(n: int, t: int, group: Group) -> list[int]:
    diff = sub(trivial_rep(group, n), regular_rep(group, t))
    cx = level_complex(cell_structure(diff), constant_Z(group), group.k)
    top = n - t
    bottom = n - t - t * (group.order - 1)
    out = []
    for d in range(top, bottom, -1):
        B = cx.boundary_or_zero(d)
        assert (B.r, B.c) == (1, 1)
        out.append(abs(B.a[0][0]))
    return out


@pytest.mark.parametrize("p,n,t", [(3, 3, 1), (3, 5, 2), (5, 6, 1), (7, 8, 1), (3, 4, 4)])
def test_fixed_point_complex_pattern(p, n, t):
    # descending from dimension n - t: Z ->1 Z ->0 Z ->p Z ->0 ...
    g = Group(p, 1)
    scalars = top_boundary_scalars(n, t, g)
    width = t * (p - 1)
    expected = ([1] + [0, p] * width)[:width]
    assert scalars == expected


def test_fixed_point_complex_negative_regular():
    # S^(-rho) over C_3: pattern truncates to [1, 0], leaving a single
    # Z in the bottom dimension -3 and nothing in degree 0
    bh0 = bredon_homology(sub(trivial_rep(C3, 0), regular_rep(C3)), constant_Z(C3), 0)
    assert bh0.ab(1).is_trivial
    bh3 = bredon_homology(sub(trivial_rep(C3, 0), regular_rep(C3)), constant_Z(C3), -3)
    assert str(bh3.ab(1)) == "Z"


def test_sphere_s0_gives_constant():
    for g in (C3, C9):
        bh = bredon_homology(trivial_rep(g, 0), constant_Z(g), 0)
        for m in range(g.k + 1):
            assert bh.ab(m) == AbGroup.free(1)
        for m in range(g.k):
            assert abs(bh.res_maps[m].a[0][0]) == 1


@pytest.mark.parametrize("p", [3, 5])
@pytest.mark.parametrize("k", [1, 2])
def test_plane_difference_realizes_integral_family(p, k):
    g = Group(p, k)
    for a in range(1, k + 1):
        for j in range(0, a):
            v = sub(rotation_plane(g, a), rotation_plane(g, j))
            expected = Z_ij(a, j, g)
            bh = bredon_homology(v, constant_Z(g), 0)
            for m in range(k + 1):
                assert bh.ab(m) == AbGroup.free(1), (a, j, m)
            for m in range(k):
                assert abs(bh.res_maps[m].a[0][0]) == expected.res[m].a[0][0]
            for d in (-2, -1, 1, 2):
                off = bredon_homology(v, constant_Z(g), d)
                assert all(off.ab(m).is_trivial for m in range(k + 1))


def test_level_zero_is_underlying_sphere():
    cases = [
        (C3, sub(trivial_rep(C3, 2) + rotation_plane(C3, 0), trivial_rep(C3, 0))),
        (C3, sub(trivial_rep(C3, 0), regular_rep(C3))),
        (C9, sub(rotation_plane(C9, 1), rotation_plane(C9, 0, 2))),
        (C9, sub(trivial_rep(C9, 1) + rotation_plane(C9, 0), trivial_rep(C9, 0))),
    ]
    for g, diff in cases:
        dim = diff.plus.dim - diff.minus.dim
        for M in (constant_Z(g), dual_Z(g), B_ij(1, 0, g)):
            at_dim = bredon_homology(diff, M, dim)
            assert at_dim.ab(0) == M.level_group(0), (g, M.name)
            for d in (dim - 1, dim + 1):
                assert bredon_homology(diff, M, d).ab(0).is_trivial


def test_restriction_compatibility():
    # computing over the subgroup directly gives the same groups
    v = trivial_rep(C9, 1) + rotation_plane(C9, 0) - rotation_plane(C9, 1)
    for M in (constant_Z(C9), B_ij(1, 0, C9)):
        for d in (-1, 0, 1, 2, 3):
            big = bredon_homology(sub(v, trivial_rep(C9, 0)), M, d)
            small = bredon_homology(
                sub(restrict_rep(v, 1), trivial_rep(C3, 0)),
                restrict_mackey(M, 1), d)
            for m in (0, 1):
                assert big.ab(m) == small.ab(m), (M.name, d, m)


def test_torsion_vanishing_anchors():
    # a second trivial summand kills degrees 0 and -1 entirely
    w = trivial_rep(C9, 2) + rotation_plane(C9, 0)
    for eps in (0, 1):
        bh = bredon_homology(sub(trivial_rep(C9, 0), w), B_ij(1, 0, C9), -eps)
        assert all(bh.ab(m).is_trivial for m in range(3))
    # the slice-membership computation behind the (1,1) stage of S^7
    v11 = slice_rep(slice_params(7, C9), 1, 1)
    diff = sub(v11, regular_rep(C9, 2))
    bh = bredon_homology(diff, B_ij(2, 0, C9), 0)
    assert all(bh.ab(m).is_trivial for m in range(3))


def test_presented_injective():
    assert presented_injective(Mat(1, 1, [[1]]), (3,), (9,))
    assert presented_injective(Mat(1, 1, [[3]]), (3,), (9,))
    assert not presented_injective(Mat(1, 1, [[3]]), (9,), (9,))
    assert not presented_injective(Mat(1, 1, [[0]]), (3,), (3,))
    assert presented_injective(Mat(0, 0), (), ())
    assert presented_injective(Mat(1, 0), (), (3,))


def test_homres_injective_spec_instance():
    assert homres_injective(regular_rep(C9), 1, 0, 1)


def test_homres_injective_vacuous():
    w = trivial_rep(C9, 2) + rotation_plane(C9, 1)
    assert homres_injective(w, 1, 0, 1)


def test_homres_injective_validation():
    with pytest.raises(ValueError):
        homres_injective(regular_rep(C9), 2, 1, 1)  # i + j > h
    with pytest.raises(ValueError):
        homres_injective(regular_rep(C9), 1, 0, 3)  # h > k
    with pytest.raises(ValueError):
        homres_injective(regular_rep(C9) - trivial_rep(C9, 2), 1, 0, 1)


def test_homres_injective_random_sample():
    rng = random.Random(11)
    groups = [C3, C9, Group(5, 2)]
    for _ in range(12):
        g = rng.choice(groups)
        planes = tuple(rng.randint(0, 2) for _ in range(g.k))
        w = Rep(g, rng.choice([0, 0, 1]), planes)
        pairs = [(i, j) for i in range(1, g.k + 1) for j in range(0, g.k - i + 1)]
        i, j = rng.choice(pairs)
        h = rng.randint(i + j, g.k)
        assert homres_injective(w, i, j, h), (w, i, j, h)
