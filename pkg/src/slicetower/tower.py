"""The slice tower of S^n smash HZ for cyclic p-groups, p odd.

Every slice is the suspension of an integral Eilenberg-MacLane
spectrum by an explicitly known representation: the torsion slices are
indexed by a column position a (which subgroup scale) and a row
position b (which base dimension), and the single integral slice at
the bottom has dimension n.  Sections interpolate by exchanging one
rotation plane at a time.

verify_slice is the independent check that a descriptor really is a
slice of the claimed dimension: it restricts to every subgroup level
and tests the containment and connectivity conditions by computing
Bredon homology of the relevant virtual spheres from their cell
structures.  Nothing in that path reuses the closed forms above, which
is the point.
"""

from __future__ import annotations

from dataclasses import dataclass

from .abelian import AbGroup
from .cells import cell_structure, max_cell_dim
from .group import Group
from .homology import homology_at, level_complex
from .mackey import B_ij, MackeyFunctor, constant_Z, restrict_mackey
from .params import SliceParams, slice_params
from .rep import (Rep, RepDiff, fixed_dim, is_subrep, n_slice_rep, regular_rep,
                  restrict_rep, rotation_plane, slice_rep, trivial_rep)

TORSION = "torsion"
INTEGRAL = "integral"
INTEGRAL_SMALL = "integral-small"
ZERO = "zero"


@dataclass(frozen=True)
class SliceDescriptor:
    """One slice: S^rep smash an Eilenberg-MacLane spectrum.

    kind is "torsion" for the B-coefficient slices, "integral" for the
    bottom slice with constant coefficients, "integral-small" for the
    degenerate n = 1, 2 towers, and "zero" for n = 0.  Torsion slices
    carry their position (a, b) and coefficient parameters (i, j).
    """

    dim: int
    kind: str
    rep: Rep
    a: int | None = None
    b: int | None = None
    coeff_i: int | None = None
    coeff_j: int | None = None

    def coefficient(self) -> MackeyFunctor:
        if self.kind == TORSION:
            return B_ij(self.coeff_i, self.coeff_j, self.rep.group)
        return constant_Z(self.rep.group)

    @property
    def is_torsion(self) -> bool:
        return self.kind == TORSION


@dataclass(frozen=True)
class Stage:
    descriptor: SliceDescriptor
    section: Rep  # the section this slice maps into; always of dimension n


@dataclass(frozen=True)
class Tower:
    group: Group
    n: int
    stages: tuple[Stage, ...]

    @property
    def slices(self) -> list[SliceDescriptor]:
        return [s.descriptor for s in self.stages]

    @property
    def sections(self) -> list[Rep]:
        return [s.section for s in self.stages]


def slice_list(n: int, group: Group) -> list[SliceDescriptor]:
    """All slices, ordered by decreasing dimension.

    For n >= 3 there are d torsion slices per column a = k..1, except
    that the column a = 1 loses its b = 1 entry when p divides n, and
    one integral slice of dimension n at the bottom.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return [SliceDescriptor(dim=0, kind=ZERO, rep=trivial_rep(group, 0))]
    if n <= 2:
        return [SliceDescriptor(dim=n, kind=INTEGRAL_SMALL, rep=trivial_rep(group, n))]

    params = slice_params(n, group)
    p = group.p
    out: list[SliceDescriptor] = []
    for a in range(group.k, 0, -1):
        for b in range(params.count, 0, -1):
            if a == 1 and b == 1 and n % p == 0:
                continue
            nu = params.valuation(a, b)
            out.append(SliceDescriptor(
                dim=params.base_dim(b) * p ** a - 1,
                kind=TORSION,
                rep=slice_rep(params, a, b),
                a=a, b=b,
                coeff_i=nu + 1, coeff_j=a - 1,
            ))
    out.append(SliceDescriptor(dim=n, kind=INTEGRAL, rep=n_slice_rep(n, group)))

    dims = [s.dim for s in out]
    assert dims == sorted(dims, reverse=True) and len(set(dims)) == len(dims)
    assert len(out) == group.k * params.count + (0 if n % p == 0 else 1)
    return out


def _exchange(section: Rep, desc: SliceDescriptor) -> Rep:
    """Crossing a torsion slice trades the plane at level nu + a for
    one at level a - 1 (two trivial summands when nu + a reaches k)."""
    nu = desc.coeff_i - 1
    out_level = min(nu + desc.a, section.group.k)
    nxt = section - rotation_plane(section.group, out_level) + rotation_plane(section.group, desc.a - 1)
    assert nxt.is_actual and nxt.dim == section.dim
    return nxt


def section_reps(n: int, group: Group) -> list[Rep]:
    """Representations of the sections, one per stage, top to bottom.

    The top section is S^n itself; the bottom one must agree with the
    closed form for the integral slice, which is asserted.
    """
    slices = slice_list(n, group)
    sections = [trivial_rep(group, n)]
    for desc in slices[:-1]:
        assert desc.is_torsion
        sections.append(_exchange(sections[-1], desc))
    assert sections[-1] == slices[-1].rep
    return sections


def build_tower(n: int, group: Group) -> Tower:
    slices = slice_list(n, group)
    sections = section_reps(n, group)
    return Tower(group, n, tuple(Stage(d, s) for d, s in zip(slices, sections)))


@dataclass(frozen=True)
class FiberData:
    """One fiber sequence of the tower: the descriptor's slice is the
    fiber of the map from the source section's sphere to the target's."""

    source: Rep
    target: Rep
    descriptor: SliceDescriptor
    out_level: int  # plane removed from source (k encodes two trivials)
    in_level: int   # plane added to target


def fiber_sequence_data(tower: Tower) -> list[FiberData]:
    """The connecting data between consecutive sections, with the
    internal consistency checks the construction relies on."""
    group = tower.group
    out: list[FiberData] = []
    params: SliceParams | None = None
    if tower.n >= 3:
        params = slice_params(tower.n, group)
        # scale junctions between consecutive columns line up exactly
        for a in range(1, group.k):
            gap = params.connection_gap(a)
            assert params.ell(a, params.count) == params.ell(a + 1, 1) + gap

    for i in range(len(tower.stages) - 1):
        desc = tower.slices[i]
        src, tgt = tower.sections[i], tower.sections[i + 1]
        nu = desc.coeff_i - 1
        out_level = min(nu + desc.a, group.k)
        in_level = desc.a - 1
        assert src - rotation_plane(group, out_level) == tgt - rotation_plane(group, in_level)

        # the slice representation exceeds the common part by planes
        # at levels below a only
        common = src - rotation_plane(group, out_level)
        excess = desc.rep - (common - trivial_rep(group))
        assert excess.is_actual and excess.trivial == 0
        assert all(m == 0 for m in excess.planes[desc.a:])

        out.append(FiberData(src, tgt, desc, out_level, in_level))
    return out


# --- verification ------------------------------------------------------------

@dataclass(frozen=True)
class Failure:
    level: int
    check: str  # "containment" | "fixed" | "vanishing"
    epsilon: int | None = None
    t: int | None = None
    group: AbGroup | None = None


@dataclass
class VerificationReport:
    descriptor: SliceDescriptor
    passed: bool
    checks: int
    failures: list[Failure]


def verify_slice(desc: SliceDescriptor) -> VerificationReport:
    """Check the slice condition for the descriptor, from scratch.

    At every subgroup level m the restricted representation must sit
    inside m' copies of the regular representation (minus a trivial
    line for the torsion slices) with the same fixed subspace, and the
    homology of S^(V - t rho) must vanish in degrees 0 and -1 for
    every t past dim V / p^m.  The t loop stops once the top cell
    dimension drops below -1, after which both groups are zero for
    size reasons alone.
    """
    V = desc.rep
    M = desc.coefficient()
    group = V.group
    eps0 = 1 if desc.is_torsion else 0
    failures: list[Failure] = []
    checks = 0

    for m in range(group.k, -1, -1):
        sub = group.subgroup(m)
        Vm = restrict_rep(V, m)
        Mm = restrict_mackey(M, m)
        assert Vm.dim == V.dim

        wit = Vm.trivial + eps0
        eps_wit = eps0
        if wit == 0:
            wit, eps_wit = 1, 1
        bound = regular_rep(sub, wit) - trivial_rep(sub, eps_wit)
        checks += 1
        if not is_subrep(Vm, bound):
            failures.append(Failure(m, "containment"))
        checks += 1
        if fixed_dim(Vm, m) != wit - eps_wit:
            failures.append(Failure(m, "fixed"))

        D = Vm.dim
        scale = group.p ** m
        for eps in (0, 1):
            t = (D + eps) // scale + 1
            guard = 0
            while True:
                diff = RepDiff.from_virtual(Vm - regular_rep(sub, t))
                if max_cell_dim(diff) <= -2:
                    break
                cx = level_complex(cell_structure(diff), Mm, m)
                h = homology_at(cx, -eps)
                checks += 1
                if not h.ab.is_trivial:
                    failures.append(Failure(m, "vanishing", epsilon=eps, t=t, group=h.ab))
                t += 1
                guard += 1
                assert guard <= 2 * D + 8, "vanishing loop failed to stabilize"

    return VerificationReport(desc, not failures, checks, failures)


def verify_tower(tower: Tower) -> list[VerificationReport]:
    return [verify_slice(desc) for desc in tower.slices]
