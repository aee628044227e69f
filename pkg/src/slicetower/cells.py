"""Equivariant cell structures for spheres of virtual representations.

A structure records, per integer dimension, a list of cells given by
their isotropy level h (stabilizer C_{p^h}), and formal boundary
entries between cells.  An entry is a map {translation: coefficient}
where translations are orbit representatives modulo
p^(k - max(h_src, h_tgt)): the chain map sends the base point of the
source cell's orbit to that combination of translated points of the
target orbit, and extends equivariantly.

Spheres of actual representations get the minimal structure with two
cells per rotation plane; spheres of formal negatives get the dual
structure in negative dimensions.  Products are formed cellwise, which
is where index classes of points have to be matched up by congruences.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .group import Group
from .rep import RepDiff

Entry = dict[int, int]
DiffKey = tuple[int, int]  # (target cell index, source cell index)


@dataclass
class CellStructure:
    group: Group
    cells: dict[int, tuple[int, ...]] = field(default_factory=dict)
    diffs: dict[int, dict[DiffKey, Entry]] = field(default_factory=dict)

    def dims(self) -> list[int]:
        return sorted(self.cells)

    def max_dim(self) -> int:
        return max(d for d, cs in self.cells.items() if cs)

    def min_dim(self) -> int:
        return min(d for d, cs in self.cells.items() if cs)

    def cell_count(self) -> int:
        return sum(len(cs) for cs in self.cells.values())


def point(group: Group) -> CellStructure:
    """S^0: a single fixed cell in dimension 0."""
    return CellStructure(group, cells={0: (group.k,)})


def shifted(struct: CellStructure, offset: int) -> CellStructure:
    if offset == 0:
        return struct
    return CellStructure(
        struct.group,
        cells={d + offset: cs for d, cs in struct.cells.items()},
        diffs={d + offset: {k: dict(e) for k, e in dd.items()} for d, dd in struct.diffs.items()},
    )


def sphere_positive(group: Group, plane_levels: list[int]) -> CellStructure:
    """Sphere of an actual sum of rotation planes.

    One fixed 0-cell, then per plane a free-ish pair of cells in
    dimensions 2r-1 and 2r whose isotropy is the plane's kernel level.
    Levels must come in ascending order so that each odd attaching map
    is the norm over the new plane's index classes.
    """
    p, k = group.p, group.k
    levels = sorted(plane_levels)
    if levels and not 0 <= levels[-1] < k:
        raise ValueError("plane levels must lie in [0, k)")
    st = point(group)
    for r, j in enumerate(levels, start=1):
        st.cells[2 * r - 1] = (j,)
        st.cells[2 * r] = (j,)
        if r == 1:
            st.diffs[1] = {(0, 0): {0: 1}}
        else:
            st.diffs[2 * r - 1] = {(0, 0): {c: 1 for c in range(p ** (k - j))}}
        st.diffs[2 * r] = {(0, 0): {0: 1, 1: -1}}
    return st


def sphere_negative(group: Group, plane_levels: list[int]) -> CellStructure:
    """Dual sphere of a formal negative sum of rotation planes.

    Mirrors the positive structure into negative dimensions; levels are
    consumed in descending order, so the innermost pair (dimensions -1
    and -2) belongs to the plane with the largest kernel.
    """
    p, k = group.p, group.k
    levels = sorted(plane_levels, reverse=True)
    if levels and not 0 <= levels[0] < k:
        raise ValueError("plane levels must lie in [0, k)")
    st = point(group)
    for r, j in enumerate(levels, start=1):
        st.cells[-(2 * r - 1)] = (j,)
        st.cells[-2 * r] = (j,)
        if r == 1:
            st.diffs[0] = {(0, 0): {0: 1}}
        else:
            # previous block's even cell attaches down to this one
            st.diffs[-2 * (r - 1)] = {(0, 0): {c: 1 for c in range(p ** (k - levels[r - 2]))}}
        st.diffs[-(2 * r - 1)] = {(0, 0): {0: 1, 1: -1}}
    return st


# --- products ---------------------------------------------------------------

def _pair_class(group: Group, iso_x: int, iso_y: int, u: int, v: int) -> tuple[int, int]:
    """Index class and translation of the point (u, v) in the product
    of two orbits with the given isotropy levels.

    The class is the difference v - u modulo the coarser index group;
    the translation g moves the representative point (0, class) to
    (u, v) and lives modulo the finer index group.
    """
    p, k = group.p, group.k
    w = (v - u) % p ** (k - max(iso_x, iso_y))
    if iso_x <= iso_y:
        g = u % p ** (k - iso_x)
        assert (g + w) % p ** (k - iso_y) == v % p ** (k - iso_y)
    else:
        g = (v - w) % p ** (k - iso_y)
        assert g % p ** (k - iso_x) == u % p ** (k - iso_x)
    return w, g


def _point_images(group: Group, c: int, h_src: int, h_tgt: int) -> list[int]:
    """Points of the target orbit hit by translation c of the boundary
    of the source base point.  A coarser source point covers a whole
    coset of finer target points."""
    p, k = group.p, group.k
    if h_src <= h_tgt:
        return [c % p ** (k - h_tgt)]
    step = p ** (k - h_src)
    mod = p ** (k - h_tgt)
    return [(c + t * step) % mod for t in range(p ** (h_src - h_tgt))]


def tensor(A: CellStructure, B: CellStructure) -> CellStructure:
    """Product structure on cells (a, b) -> one cell per index class.

    Boundary entries follow the Leibniz rule with a sign (-1)^dim(a) on
    the second factor; each formal entry is recovered from the multiset
    of image points of the representative point (0, class).
    """
    if A.group != B.group:
        raise ValueError("group mismatch")
    group = A.group
    p, k = group.p, group.k

    cells: dict[int, list[int]] = {}
    index: dict[tuple[int, int, int, int, int], int] = {}
    for dA in A.dims():
        for dB in B.dims():
            D = dA + dB
            for iA, a_iso in enumerate(A.cells[dA]):
                for iB, b_iso in enumerate(B.cells[dB]):
                    for w in range(p ** (k - max(a_iso, b_iso))):
                        lst = cells.setdefault(D, [])
                        index[(dA, iA, iB, w, dB)] = len(lst)
                        lst.append(min(a_iso, b_iso))

    diffs: dict[int, dict[DiffKey, Entry]] = {}

    def record(D: int, measures: dict[int, dict[int, int]],
               src_idx: int, iso_src_prod: int, tgt_cells: tuple[int, ...]) -> None:
        # decompose accumulated point measures into formal entries
        for tgt_idx, measure in measures.items():
            iso_tgt_prod = tgt_cells[tgt_idx]
            measure = {g: m for g, m in measure.items() if m}
            if not measure:
                continue
            tmod = p ** (k - max(iso_src_prod, iso_tgt_prod))
            if iso_src_prod <= iso_tgt_prod:
                entry = dict(measure)
            else:
                gmod = p ** (k - iso_tgt_prod)
                entry = {}
                for c in range(tmod):
                    vals = {measure.get(g, 0) for g in range(c, gmod, tmod)}
                    if len(vals) != 1:
                        raise AssertionError("boundary is not equivariant")
                    (m,) = vals
                    if m:
                        entry[c] = m
            if entry:
                diffs.setdefault(D, {})[(tgt_idx, src_idx)] = entry

    for (dA, iA, iB, w, dB), src_idx in index.items():
        D = dA + dB
        a_iso = A.cells[dA][iA]
        b_iso = B.cells[dB][iB]
        iso_src_prod = min(a_iso, b_iso)

        a_diffs = A.diffs.get(dA, {})
        measures: dict[int, dict[int, int]] = {}
        for (tA, sA), entry in a_diffs.items():
            if sA != iA:
                continue
            at_iso = A.cells[dA - 1][tA]
            for c, m_c in entry.items():
                for x in _point_images(group, c, a_iso, at_iso):
                    wt, g = _pair_class(group, at_iso, b_iso, x, w)
                    tgt_idx = index[(dA - 1, tA, iB, wt, dB)]
                    bucket = measures.setdefault(tgt_idx, {})
                    bucket[g] = bucket.get(g, 0) + m_c
        if measures:
            record(D, measures, src_idx, iso_src_prod, tuple(cells.get(D - 1, [])))

        b_diffs = B.diffs.get(dB, {})
        sign = -1 if dA % 2 else 1
        measures = {}
        for (tB, sB), entry in b_diffs.items():
            if sB != iB:
                continue
            bt_iso = B.cells[dB - 1][tB]
            for c, m_c in entry.items():
                for y0 in _point_images(group, c, b_iso, bt_iso):
                    y = (w + y0) % p ** (k - bt_iso)
                    wt, g = _pair_class(group, a_iso, bt_iso, 0, y)
                    tgt_idx = index[(dA, iA, tB, wt, dB - 1)]
                    bucket = measures.setdefault(tgt_idx, {})
                    bucket[g] = bucket.get(g, 0) + sign * m_c
        if measures:
            record(D, measures, src_idx, iso_src_prod, tuple(cells.get(D - 1, [])))

    return CellStructure(group,
                         cells={d: tuple(cs) for d, cs in cells.items()},
                         diffs=diffs)


def cell_structure(diff: RepDiff) -> CellStructure:
    """Cells for the sphere of plus - minus.

    Trivial summands only shift dimensions; the plane parts contribute
    a positive and a dual negative sphere, multiplied together.
    """
    group = diff.plus.group
    pos = [j for j, m in enumerate(diff.plus.planes) for _ in range(m)]
    neg = [j for j, m in enumerate(diff.minus.planes) for _ in range(m)]
    st = tensor(sphere_positive(group, pos), sphere_negative(group, neg))
    return shifted(st, diff.plus.trivial - diff.minus.trivial)


def max_cell_dim(diff: RepDiff) -> int:
    """Top cell dimension of cell_structure(diff), without building it."""
    return diff.plus.trivial - diff.minus.trivial + 2 * sum(diff.plus.planes)
