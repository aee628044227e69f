"""Bredon homology of representation spheres from their cell structures.

A cell structure is realized at one subgroup level at a time: a cell
with isotropy level h contributes p^(k - max(m, h)) index classes of
generators at level m, each class carrying the coefficient functor's
value at level min(m, h).  Formal boundary entries become integer
matrices by letting merges act through transfers and splits through
restrictions.  Homology of the resulting presented chain complexes is
computed exactly, keeping chain-level representatives so restriction
maps between levels can be expressed on homology classes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .abelian import (AbGroup, Mat, in_diagonal_lattice, kernel_basis,
                      lattice_basis, smith_normal_form, solve_factored)
from .cells import CellStructure, cell_structure
from .mackey import MackeyFunctor
from .rep import Rep, RepDiff


@dataclass
class LevelComplex:
    """Chain complex of one realization level, with presentations.

    orders[d] lists the generator orders of C_d (0 = infinite cyclic);
    boundary[d] maps C_d to C_{d-1} and exists for every d that has
    generators on either side.
    """

    level: int
    orders: dict[int, tuple[int, ...]]
    boundary: dict[int, Mat]
    layouts: dict[int, list[tuple[int, int, int]]]  # per cell: (iso, classes, gens per class)

    def gens(self, d: int) -> int:
        return len(self.orders.get(d, ()))

    def boundary_or_zero(self, d: int) -> Mat:
        if d in self.boundary:
            return self.boundary[d]
        return Mat(self.gens(d - 1), self.gens(d))


def level_complex(struct: CellStructure, M: MackeyFunctor, m: int) -> LevelComplex:
    """Realize the structure at subgroup level m with coefficients M."""
    p, k = M.group.p, M.group.k
    if not 0 <= m <= k:
        raise ValueError(f"no subgroup at level {m}")
    if struct.group != M.group:
        raise ValueError("group mismatch")

    layouts: dict[int, list[tuple[int, int, int]]] = {}
    orders: dict[int, tuple[int, ...]] = {}
    offsets: dict[int, list[int]] = {}
    for d in struct.dims():
        lay = []
        ords: list[int] = []
        offs = []
        for h in struct.cells[d]:
            s = p ** (k - max(m, h))
            level_orders = M.levels[min(m, h)]
            offs.append(len(ords))
            lay.append((h, s, len(level_orders)))
            ords.extend(level_orders * s)
        layouts[d] = lay
        orders[d] = tuple(ords)
        offsets[d] = offs

    boundary: dict[int, Mat] = {}
    for d, entries in struct.diffs.items():
        rows = len(orders.get(d - 1, ()))
        cols = len(orders.get(d, ()))
        B = Mat(rows, cols)
        for (tgt_i, src_i), entry in entries.items():
            h_s, s_s, g_s = layouts[d][src_i]
            h_t, s_t, g_t = layouts[d - 1][tgt_i]
            src_off = offsets[d][src_i]
            tgt_off = offsets[d - 1][tgt_i]
            if h_s <= h_t:
                C = M.tr_composite(min(m, h_s), min(m, h_t))
                for c, m_c in entry.items():
                    for cs in range(s_s):
                        ct = (cs + c) % s_t
                        for t2 in range(g_t):
                            for t1 in range(g_s):
                                B.a[tgt_off + ct * g_t + t2][src_off + cs * g_s + t1] += m_c * C.a[t2][t1]
            else:
                C = M.res_composite(min(m, h_s), min(m, h_t))
                for c, m_c in entry.items():
                    for cs in range(s_s):
                        base = (cs + c) % s_s
                        for ct in range(base, s_t, s_s):
                            for t2 in range(g_t):
                                for t1 in range(g_s):
                                    B.a[tgt_off + ct * g_t + t2][src_off + cs * g_s + t1] += m_c * C.a[t2][t1]
        boundary[d] = B

    cx = LevelComplex(level=m, orders=orders, boundary=boundary, layouts=layouts)
    _check_complex(cx)
    return cx


def _entry_kills(value: int, src_order: int, tgt_order: int) -> bool:
    # value * src_order must vanish in Z / tgt_order
    if src_order == 0:
        return True
    scaled = value * src_order
    return scaled == 0 if tgt_order == 0 else scaled % tgt_order == 0


def _check_complex(cx: LevelComplex) -> None:
    for d, B in cx.boundary.items():
        src = cx.orders.get(d, ())
        tgt = cx.orders.get(d - 1, ())
        for i in range(B.r):
            for j in range(B.c):
                if B.a[i][j] and not _entry_kills(B.a[i][j], src[j], tgt[i]):
                    raise AssertionError(f"boundary at dim {d} not well defined")
    for d in list(cx.boundary):
        if d - 1 not in cx.boundary:
            continue
        prod = cx.boundary[d - 1].times(cx.boundary[d])
        tgt = cx.orders.get(d - 2, ())
        for i in range(prod.r):
            for j in range(prod.c):
                v = prod.a[i][j]
                if v and (tgt[i] == 0 or v % tgt[i] != 0):
                    raise AssertionError(f"d^2 != 0 from dim {d}")


@dataclass
class HomologyLevel:
    """One homology group with raw generator bookkeeping.

    raw_orders lists one invariant factor per generator (0 for a free
    one, never 1); gens holds one chain representative per generator,
    and express writes a cycle in those coordinates.
    """

    ab: AbGroup
    raw_orders: tuple[int, ...]
    gens: list[list[int]]
    express: Callable[[Sequence[int]], list[int]]


def _trivial_level() -> HomologyLevel:
    return HomologyLevel(AbGroup.trivial(), (), [], lambda x: [])


def homology_at(cx: LevelComplex, d: int) -> HomologyLevel:
    n = cx.gens(d)
    if n == 0:
        return _trivial_level()

    D = cx.boundary_or_zero(d)
    below = cx.orders.get(d - 1, ())
    rel_below = [[o if i == r else 0 for i in range(len(below))]
                 for r, o in enumerate(below) if o > 0]

    # cycles: x with D x in the relation lattice one dimension down
    if rel_below:
        stack = Mat(D.r, D.c + len(rel_below))
        for i in range(D.r):
            stack.a[i][: D.c] = list(D.a[i])
        for j, col in enumerate(rel_below):
            for i in range(D.r):
                stack.a[i][D.c + j] = col[i]
    else:
        stack = D
    cycles = [vec[:n] for vec in kernel_basis(stack)]
    basis = lattice_basis(cycles, n)
    if not basis:
        return _trivial_level()
    BMat = Mat.from_cols(basis, n)

    fb = smith_normal_form(BMat)
    denoms = cx.boundary_or_zero(d + 1).cols()
    here = cx.orders[d]
    for i, o in enumerate(here):
        if o > 0:
            denoms.append([o if t == i else 0 for t in range(n)])
    solved = []
    for col in denoms:
        y = solve_factored(fb, col)
        assert y is not None, "denominator is not a cycle"
        solved.append(y)
    Y = Mat.from_cols(solved, len(basis))
    fy = smith_normal_form(Y)
    all_orders = [fy.diag(i) for i in range(len(basis))]
    keep = [i for i, o in enumerate(all_orders) if o != 1]
    raw_orders = tuple(all_orders[i] for i in keep)
    all_gens = BMat.times(fy.Uinv).cols()
    gens = [all_gens[i] for i in keep]

    def express(x: Sequence[int]) -> list[int]:
        y = solve_factored(fb, list(x))
        if y is None:
            raise ValueError("chain is not a cycle at this level")
        raw = fy.U.times_vec(y)
        return [raw[i] % o if (o := all_orders[i]) > 0 else raw[i] for i in keep]

    return HomologyLevel(AbGroup.from_orders(raw_orders), raw_orders, gens, express)


def chain_restriction(M: MackeyFunctor, m: int, d: int,
                      hi: LevelComplex, lo: LevelComplex) -> Mat:
    """Chain map from the level m+1 realization to the level m one at
    dimension d: index classes split below the cell's isotropy, the
    coefficient restriction applies at or above it."""
    R = Mat(lo.gens(d), hi.gens(d))
    if d not in hi.layouts:
        return R
    off_hi = 0
    off_lo = 0
    for (h, s_hi, g_hi), (_, s_lo, g_lo) in zip(hi.layouts[d], lo.layouts[d]):
        if h <= m:
            # free-ish direction: classes refine, coefficients carried along
            for c in range(s_hi):
                for ct in range(c, s_lo, s_hi):
                    for t in range(g_hi):
                        R.a[off_lo + ct * g_lo + t][off_hi + c * g_hi + t] = 1
        else:
            C = M.res[m]
            for c in range(s_hi):
                for t2 in range(g_lo):
                    for t1 in range(g_hi):
                        R.a[off_lo + c * g_lo + t2][off_hi + c * g_hi + t1] = C.a[t2][t1]
        off_hi += s_hi * g_hi
        off_lo += s_lo * g_lo
    return R


@dataclass
class BredonHomology:
    """H_d at every subgroup level with the connecting restrictions."""

    degree: int
    levels: list[HomologyLevel]  # index = subgroup level, 0 .. k
    res_maps: list[Mat]          # res_maps[m]: level m+1 -> level m, raw coordinates

    def ab(self, m: int) -> AbGroup:
        return self.levels[m].ab


def _as_diff(v: Rep | RepDiff) -> RepDiff:
    return v if isinstance(v, RepDiff) else RepDiff.from_virtual(v)


def bredon_homology(v: Rep | RepDiff, M: MackeyFunctor, degree: int) -> BredonHomology:
    diff = _as_diff(v)
    struct = cell_structure(diff)
    k = M.group.k
    complexes = [level_complex(struct, M, m) for m in range(k + 1)]
    levels = [homology_at(cx, degree) for cx in complexes]
    res_maps = []
    for m in range(k):
        hi, lo = levels[m + 1], levels[m]
        chain = chain_restriction(M, m, degree, complexes[m + 1], complexes[m])
        cols = [lo.express(chain.times_vec(g)) for g in hi.gens]
        res_maps.append(Mat.from_cols(cols, len(lo.raw_orders)) if cols
                        else Mat(len(lo.raw_orders), 0))
    return BredonHomology(degree, levels, res_maps)


def presented_injective(T: Mat, src_orders: Sequence[int], dst_orders: Sequence[int]) -> bool:
    """Injectivity of the induced map (Z^s / src) -> (Z^t / dst)."""
    rel_cols = [[o if i == r else 0 for i in range(len(dst_orders))]
                for r, o in enumerate(dst_orders) if o > 0]
    if rel_cols:
        stack = Mat(T.r, T.c + len(rel_cols))
        for i in range(T.r):
            stack.a[i][: T.c] = list(T.a[i])
        for j, col in enumerate(rel_cols):
            for i in range(T.r):
                stack.a[i][T.c + j] = col[i]
    else:
        stack = T
    pre = [vec[: T.c] for vec in kernel_basis(stack)]
    for v in lattice_basis(pre, T.c):
        if not in_diagonal_lattice(v, list(src_orders)):
            return False
    return True


def homres_injective(w: Rep, i: int, j: int, h: int) -> bool:
    """Whether restriction from the top level down to level h is
    injective on the homology of S^(-w) with torsion coefficients
    B(i,j), in degrees 0 and -1.  Requires i + j <= h so the
    coefficient functor is already saturated at the target level."""
    from .mackey import B_ij
    from .rep import trivial_rep

    if not i + j <= h <= w.group.k:
        raise ValueError(f"need i + j <= h <= k, got i={i}, j={j}, h={h}, k={w.group.k}")
    if not w.is_actual:
        raise ValueError("need an actual representation")
    M = B_ij(i, j, w.group)
    k = w.group.k
    diff = RepDiff(trivial_rep(w.group, 0), w)
    for d in (0, -1):
        bh = bredon_homology(diff, M, d)
        if bh.levels[k].ab.is_trivial:
            continue
        T = Mat.identity(len(bh.levels[k].raw_orders))
        for m in range(k - 1, h - 1, -1):
            T = bh.res_maps[m].times(T)
        if not presented_injective(T, bh.levels[k].raw_orders, bh.levels[h].raw_orders):
            return False
    return True
