"""Mackey functor constructors, the norm axioms, induction and
restriction, and the cokernel presentation of the torsion family."""

import pytest

from slicetower.abelian import Mat
from slicetower.group import Group
from slicetower.mackey import (
    B_ij,
    MackeyFunctor,
    Z_ij,
    b_as_cokernel,
    constant_Z,
    dual_Z,
    ind_res,
    induce_mackey,
    mackey_equal,
    maps_equal_mod,
    parse_coefficient,
    render_mackey,
    restrict_mackey,
    validate_mackey,
)

C9 = Group(3, 2)


def scalar(many_mat: Mat) -> int:
    assert (many_mat.r, many_mat.c) == (1, 1)
    return many_mat.a[0][0]


def test_constant_and_dual():
    z = constant_Z(C9)
    assert z.levels == ((0,), (0,), (0,))
    assert [scalar(r) for r in z.res] == [1, 1]
    assert [scalar(t) for t in z.tr] == [3, 3]
    assert mackey_equal(dual_Z(C9), Z_ij(2, 0, C9))
    # the family degenerates to the constant functor on the diagonal
    for i in range(3):
        assert mackey_equal(Z_ij(i, i, C9), z)


@pytest.mark.parametrize("p", [3, 5])
def test_six_frozen_diagrams(p):
    g = Group(p, 2)
    # integral family: restriction scalars (level 1<-2, 0<-1), then transfers
    expected_z = {
        (2, 1): ([1, p], [p, 1]),
        (2, 0): ([p, p], [1, 1]),
        (1, 0): ([p, 1], [1, p]),
    }
    for (i, j), (res_scalars, tr_scalars) in expected_z.items():
        m = Z_ij(i, j, g)
        assert m.levels == ((0,), (0,), (0,))
        assert [scalar(r) for r in m.res] == res_scalars
        assert [scalar(t) for t in m.tr] == tr_scalars
    # torsion family: generator orders bottom-up
    assert B_ij(2, 0, g).levels == ((), (p,), (p * p,))
    assert B_ij(1, 0, g).levels == ((), (p,), (p,))
    assert B_ij(1, 1, g).levels == ((), (), (p,))
    b20 = B_ij(2, 0, g)
    assert scalar(b20.res[1]) == 1 and scalar(b20.tr[1]) == p
    b10 = B_ij(1, 0, g)
    assert scalar(b10.res[1]) == 1 and scalar(b10.tr[1]) == p


def test_b_matches_cokernel():
    for p in (3, 5):
        for k in (1, 2, 3):
            g = Group(p, k)
            for i in range(1, k + 1):
                for j in range(0, k - i + 1):
                    assert mackey_equal(B_ij(i, j, g), b_as_cokernel(i, j, g))


def test_families_satisfy_axioms():
    for p in (3, 5):
        for k in (1, 2, 3):
            g = Group(p, k)
            validate_mackey(constant_Z(g))
            validate_mackey(dual_Z(g))
            for i in range(k + 1):
                for j in range(i + 1):
                    validate_mackey(Z_ij(i, j, g))
            for i in range(1, k + 1):
                for j in range(0, k - i + 1):
                    validate_mackey(B_ij(i, j, g))


def test_index_validation():
    with pytest.raises(ValueError):
        Z_ij(1, 2, C9)
    with pytest.raises(ValueError):
        Z_ij(3, 0, C9)
    with pytest.raises(ValueError):
        B_ij(0, 1, C9)
    with pytest.raises(ValueError):
        B_ij(2, 1, C9)


def test_restrict_and_induce():
    z = constant_Z(C9)
    r = restrict_mackey(z, 1)
    assert r.group == Group(3, 1)
    assert mackey_equal(r, constant_Z(Group(3, 1)))
    validate_mackey(r)

    ind = induce_mackey(constant_Z(Group(3, 0)), C9)
    assert [ind.gens(m) for m in range(3)] == [9, 3, 1]
    validate_mackey(ind)

    # level m of ind_res holds one copy per double coset: p^(k - max(m, h))
    expected_gens = {0: [9, 3, 1], 1: [3, 3, 1], 2: [1, 1, 1]}
    for h in (0, 1, 2):
        m = ind_res(constant_Z(C9), h)
        assert [m.gens(t) for t in range(3)] == expected_gens[h]
        validate_mackey(m)
    for h in (1, 2):
        validate_mackey(ind_res(B_ij(1, 0, C9), h))


def test_validate_rejects_broken_functor():
    bad = MackeyFunctor(
        group=Group(3, 1),
        levels=((0,), (0,)),
        res=(Mat(1, 1, [[1]]),),
        tr=(Mat(1, 1, [[1]]),),  # res.tr = 1, but the norm is p
        gamma=(None, None),
    )
    with pytest.raises(AssertionError):
        validate_mackey(bad)
    with pytest.raises(ValueError):
        MackeyFunctor(
            group=Group(3, 1),
            levels=((0,), (0,)),
            res=(Mat(2, 1),),
            tr=(Mat(1, 1, [[3]]),),
            gamma=(None, None),
        )


def test_maps_equal_mod():
    assert maps_equal_mod((3,), Mat(1, 1, [[4]]), Mat(1, 1, [[1]]))
    assert not maps_equal_mod((0,), Mat(1, 1, [[4]]), Mat(1, 1, [[1]]))
    assert not maps_equal_mod((3,), Mat(1, 1, [[4]]), Mat(1, 2, [[1, 0]]))


def test_parse_coefficient():
    assert mackey_equal(parse_coefficient("Z", C9), constant_Z(C9))
    assert mackey_equal(parse_coefficient("Z*", C9), dual_Z(C9))
    assert mackey_equal(parse_coefficient("Z(2,1)", C9), Z_ij(2, 1, C9))
    assert mackey_equal(parse_coefficient("B( 1 , 1 )", C9), B_ij(1, 1, C9))
    with pytest.raises(ValueError):
        parse_coefficient("Q", C9)
    with pytest.raises(ValueError):
        parse_coefficient("B(0,1)", C9)
    with pytest.raises(ValueError):
        parse_coefficient("B(2,2)", C9)


def test_render_golden():
    assert render_mackey(B_ij(2, 0, C9)) == (
        "B(2,0) over C_3^2\n"
        "  level 2: Z/9\n"
        "    res 2->1: [1]   tr 1->2: [3]\n"
        "  level 1: Z/3\n"
        "    res 1->0: (0x1)   tr 0->1: (1x0)\n"
        "  level 0: 0\n"
    )
    assert render_mackey(constant_Z(Group(3, 1))) == (
        "Z over C_3\n"
        "  level 1: Z\n"
        "    res 1->0: [1]   tr 0->1: [3]\n"
        "  level 0: Z\n"
    )
