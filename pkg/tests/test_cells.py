"""Cell structures of representation spheres and their realizations.

Realizing a structure runs the internal well-definedness and d^2 = 0
checks, so these tests double as boundary-map validation."""

import pytest
from hypothesis import given, settings, strategies as st

from slicetower.cells import (
    cell_structure,
    max_cell_dim,
    point,
    shifted,
    sphere_negative,
    sphere_positive,
    tensor,
)
from slicetower.group import Group
from slicetower.homology import level_complex
from slicetower.mackey import B_ij, constant_Z, dual_Z
from slicetower.rep import Rep, RepDiff, sub, trivial_rep

C3 = Group(3, 1)
C9 = Group(3, 2)


def test_point_and_shifted():
    pt = point(C9)
    assert pt.cells == {0: (2,)}
    assert pt.cell_count() == 1
    sh = shifted(pt, -3)
    assert sh.cells == {-3: (2,)}
    assert shifted(pt, 0) is pt


def test_sphere_positive_frozen():
    st_ = sphere_positive(C9, [1, 0])  # sorted internally
    assert st_.cells == {0: (2,), 1: (0,), 2: (0,), 3: (1,), 4: (1,)}
    assert st_.diffs[1] == {(0, 0): {0: 1}}
    assert st_.diffs[2] == {(0, 0): {0: 1, 1: -1}}
    # second plane attaches by the norm over its three index classes
    assert st_.diffs[3] == {(0, 0): {0: 1, 1: 1, 2: 1}}
    assert st_.diffs[4] == {(0, 0): {0: 1, 1: -1}}
    assert st_.max_dim() == 4 and st_.min_dim() == 0
    with pytest.raises(ValueError):
        sphere_positive(C9, [2])


def test_sphere_negative_frozen():
    st_ = sphere_negative(C9, [0, 1])
    assert st_.cells == {0: (2,), -1: (1,), -2: (1,), -3: (0,), -4: (0,)}
    assert st_.diffs[0] == {(0, 0): {0: 1}}
    assert st_.diffs[-1] == {(0, 0): {0: 1, 1: -1}}
    assert st_.diffs[-2] == {(0, 0): {0: 1, 1: 1, 2: 1}}
    assert st_.diffs[-3] == {(0, 0): {0: 1, 1: -1}}
    assert st_.min_dim() == -4
    with pytest.raises(ValueError):
        sphere_negative(C9, [3])


def test_cell_structure_dims():
    d = sub(Rep(C9, 2, (1, 0)), Rep(C9, 0, (0, 2)))
    st_ = cell_structure(d)
    assert st_.max_dim() == 4 == max_cell_dim(d)
    assert st_.min_dim() == 2 - 4
    assert cell_structure(sub(trivial_rep(C9, 3), trivial_rep(C9, 0))).cells == {3: (2,)}


def test_tensor_rejects_group_mismatch():
    with pytest.raises(ValueError):
        tensor(point(C9), point(C3))


def test_tensor_cell_classes():
    # a free cell against a fixed cell contributes one class per point
    a = sphere_positive(C9, [0])
    b = sphere_positive(C9, [1])
    prod = tensor(a, b)
    assert prod.cells[0] == (2,)
    # dim 4 pairs the two top cells: isotropy levels 0 and 1, 3 classes
    assert prod.cells[4] == (0, 0, 0)
    assert prod.max_dim() == 4


def test_level_complex_frozen_faithful_plane():
    struct = sphere_positive(C3, [0])
    top = level_complex(struct, constant_Z(C3), 1)
    assert top.orders == {0: (0,), 1: (0,), 2: (0,)}
    assert top.boundary[1].a == [[3]]
    assert top.boundary[2].a == [[0]]
    bottom = level_complex(struct, constant_Z(C3), 0)
    assert bottom.orders == {0: (0,), 1: (0, 0, 0), 2: (0, 0, 0)}
    assert bottom.boundary[1].a == [[1, 1, 1]]
    assert bottom.boundary[2].a == [[1, 0, -1], [-1, 1, 0], [0, -1, 1]]


def test_level_complex_input_validation():
    struct = sphere_positive(C3, [0])
    with pytest.raises(ValueError):
        level_complex(struct, constant_Z(C3), 2)
    with pytest.raises(ValueError):
        level_complex(struct, constant_Z(C9), 1)


GROUPS = [C3, C9, Group(5, 1)]


def small_diffs(group):
    def to_diff(plus_t, minus_t, planes):
        plus = tuple(m if m > 0 else 0 for m in planes)
        minus = tuple(-m if m < 0 else 0 for m in planes)
        return RepDiff(Rep(group, plus_t, plus), Rep(group, minus_t, minus))

    return st.builds(
        to_diff,
        st.integers(0, 2),
        st.just(0),
        st.tuples(*[st.integers(-2, 2) for _ in range(group.k)]),
    )


@pytest.mark.parametrize("group", GROUPS, ids=str)
@settings(max_examples=20, deadline=None)
@given(data=st.data())
def test_realizations_are_complexes(group, data):
    # level_complex raises if any boundary fails well-definedness or
    # d^2 = 0, so building one at every level is the assertion
    diff = data.draw(small_diffs(group))
    struct = cell_structure(diff)
    coeffs = [constant_Z(group), dual_Z(group), B_ij(1, 0, group)]
    M = data.draw(st.sampled_from(coeffs))
    for m in range(group.k + 1):
        cx = level_complex(struct, M, m)
        for d in cx.boundary:
            assert cx.boundary[d].r == cx.gens(d - 1)
            assert cx.boundary[d].c == cx.gens(d)
