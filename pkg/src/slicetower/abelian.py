"""Exact integer linear algebra and finitely generated abelian groups.

Everything here runs over Python's arbitrary-precision integers; no
floating point, no modular shortcuts.  Smith normal form is computed
with all four transform matrices tracked (U A V = S together with the
inverses of U and V) because the homology code needs to move elements
between bases, not just read off invariant factors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence


class Mat:
    """Dense integer matrix.  Rows of length c, possibly r = 0 or c = 0."""

    __slots__ = ("r", "c", "a")

    def __init__(self, r: int, c: int, rows: Sequence[Sequence[int]] | None = None):
        self.r = r
        self.c = c
        if rows is None:
            self.a = [[0] * c for _ in range(r)]
        else:
            self.a = [list(row) for row in rows]
            if len(self.a) != r or any(len(row) != c for row in self.a):
                raise ValueError(f"shape mismatch: expected {r}x{c}")

    @classmethod
    def identity(cls, n: int) -> "Mat":
        m = cls(n, n)
        for i in range(n):
            m.a[i][i] = 1
        return m

    @classmethod
    def from_cols(cls, cols: Sequence[Sequence[int]], r: int) -> "Mat":
        m = cls(r, len(cols))
        for j, col in enumerate(cols):
            if len(col) != r:
                raise ValueError("column length mismatch")
            for i in range(r):
                m.a[i][j] = col[i]
        return m

    def copy(self) -> "Mat":
        return Mat(self.r, self.c, self.a)

    def col(self, j: int) -> list[int]:
        return [self.a[i][j] for i in range(self.r)]

    def cols(self) -> list[list[int]]:
        return [self.col(j) for j in range(self.c)]

    def times(self, other: "Mat") -> "Mat":
        if self.c != other.r:
            raise ValueError(f"cannot multiply {self.r}x{self.c} by {other.r}x{other.c}")
        out = Mat(self.r, other.c)
        for i in range(self.r):
            row = self.a[i]
            orow = out.a[i]
            for t in range(self.c):
                x = row[t]
                if x:
                    brow = other.a[t]
                    for j in range(other.c):
                        orow[j] += x * brow[j]
        return out

    def times_vec(self, v: Sequence[int]) -> list[int]:
        if len(v) != self.c:
            raise ValueError("vector length mismatch")
        return [sum(self.a[i][j] * v[j] for j in range(self.c)) for i in range(self.r)]

    def power(self, e: int) -> "Mat":
        if self.r != self.c or e < 0:
            raise ValueError("power needs a square matrix and e >= 0")
        out = Mat.identity(self.r)
        for _ in range(e):
            out = out.times(self)
        return out

    def plus(self, other: "Mat") -> "Mat":
        if (self.r, self.c) != (other.r, other.c):
            raise ValueError("shape mismatch")
        return Mat(self.r, self.c, [[self.a[i][j] + other.a[i][j] for j in range(self.c)] for i in range(self.r)])

    def scaled(self, s: int) -> "Mat":
        return Mat(self.r, self.c, [[s * x for x in row] for row in self.a])

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.a for x in row)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Mat) and self.r == other.r and self.c == other.c and self.a == other.a

    def __repr__(self) -> str:
        return f"Mat({self.r}x{self.c}, {self.a})"


@dataclass
class SmithForm:
    """U @ A @ V == S with U, V unimodular; Uinv, Vinv their inverses."""

    S: Mat
    U: Mat
    Uinv: Mat
    V: Mat
    Vinv: Mat

    @property
    def rank(self) -> int:
        n = min(self.S.r, self.S.c)
        return sum(1 for i in range(n) if self.S.a[i][i] != 0)

    def diag(self, i: int) -> int:
        if i < min(self.S.r, self.S.c):
            return self.S.a[i][i]
        return 0


def smith_normal_form(A: Mat) -> SmithForm:
    """Diagonalize A over Z with a divisibility chain on the diagonal.

    Pivot choice is deterministic (smallest absolute value, then lowest
    row, then lowest column) so downstream generator choices reproduce
    bit for bit.
    """
    S = A.copy()
    r, c = S.r, S.c
    U, Uinv = Mat.identity(r), Mat.identity(r)
    V, Vinv = Mat.identity(c), Mat.identity(c)
    s = S.a

    def row_add(i: int, j: int, q: int) -> None:
        # row_i += q * row_j
        si, sj = s[i], s[j]
        for t in range(c):
            x = sj[t]
            if x:
                si[t] += q * x
        ui, uj = U.a[i], U.a[j]
        for t in range(U.c):
            x = uj[t]
            if x:
                ui[t] += q * x
        for t in range(Uinv.r):
            x = Uinv.a[t][i]
            if x:
                Uinv.a[t][j] -= q * x

    def row_swap(i: int, j: int) -> None:
        s[i], s[j] = s[j], s[i]
        U.a[i], U.a[j] = U.a[j], U.a[i]
        for t in range(Uinv.r):
            Uinv.a[t][i], Uinv.a[t][j] = Uinv.a[t][j], Uinv.a[t][i]

    def row_neg(i: int) -> None:
        s[i] = [-x for x in s[i]]
        U.a[i] = [-x for x in U.a[i]]
        for t in range(Uinv.r):
            Uinv.a[t][i] = -Uinv.a[t][i]

    def col_add(i: int, j: int, q: int) -> None:
        # col_i += q * col_j
        for t in range(r):
            x = s[t][j]
            if x:
                s[t][i] += q * x
        for t in range(V.r):
            x = V.a[t][j]
            if x:
                V.a[t][i] += q * x
        vi, vj = Vinv.a[i], Vinv.a[j]
        for t in range(Vinv.c):
            x = vi[t]
            if x:
                vj[t] -= q * x

    def col_swap(i: int, j: int) -> None:
        for t in range(r):
            s[t][i], s[t][j] = s[t][j], s[t][i]
        for t in range(V.r):
            V.a[t][i], V.a[t][j] = V.a[t][j], V.a[t][i]
        Vinv.a[i], Vinv.a[j] = Vinv.a[j], Vinv.a[i]

    for t in range(min(r, c)):
        while True:
            # a unit entry is always an optimal pivot, so stop scanning at one
            pivot = None
            for i in range(t, r):
                row = s[i]
                for j in range(t, c):
                    v = row[j]
                    if v:
                        if v < 0:
                            v = -v
                        if pivot is None or v < pivot[0]:
                            pivot = (v, i, j)
                            if v == 1:
                                break
                if pivot is not None and pivot[0] == 1:
                    break
            if pivot is None:
                break
            _, pi, pj = pivot
            if pi != t:
                row_swap(t, pi)
            if pj != t:
                col_swap(t, pj)
            if s[t][t] < 0:
                row_neg(t)
            p = s[t][t]
            dirty = False
            for i in range(t + 1, r):
                if s[i][t]:
                    row_add(i, t, -(s[i][t] // p))
                    if s[i][t]:
                        dirty = True
            for j in range(t + 1, c):
                if s[t][j]:
                    col_add(j, t, -(s[t][j] // p))
                    if s[t][j]:
                        dirty = True
            if dirty:
                continue
            if p == 1:
                break
            bad = None
            for i in range(t + 1, r):
                for j in range(t + 1, c):
                    if s[i][j] % p != 0:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            row_add(t, bad, 1)
        if t < min(r, c) and s[t][t] == 0:
            break
    return SmithForm(S=S, U=U, Uinv=Uinv, V=V, Vinv=Vinv)


def kernel_basis(A: Mat) -> list[list[int]]:
    """Basis of the integer kernel {x : A x = 0}, as column vectors."""
    f = smith_normal_form(A)
    out = []
    for i in range(A.c):
        if f.diag(i) == 0:
            out.append(f.V.col(i))
    return out


def solve_factored(f: SmithForm, b: Sequence[int]) -> list[int] | None:
    """One integer solution x of A x = b, given f = smith_normal_form(A).

    Lets callers factor A once and solve for many right-hand sides.
    """
    r, c = f.S.r, f.S.c
    if len(b) != r:
        raise ValueError("rhs length mismatch")
    y = f.U.times_vec(list(b))
    z = [0] * c
    for i in range(r):
        d = f.diag(i) if i < c else 0
        if d == 0:
            if y[i] != 0:
                return None
        else:
            if y[i] % d != 0:
                return None
            z[i] = y[i] // d
    return f.V.times_vec(z)


def solve(A: Mat, b: Sequence[int]) -> list[int] | None:
    """One integer solution x of A x = b, or None if none exists."""
    return solve_factored(smith_normal_form(A), b)


def lattice_basis(vectors: Iterable[Sequence[int]], dim: int) -> list[list[int]]:
    """Basis of the sublattice of Z^dim generated by the given vectors."""
    cols = [list(v) for v in vectors]
    if not cols:
        return []
    f = smith_normal_form(Mat.from_cols(cols, dim))
    out = []
    for i in range(min(dim, len(cols))):
        d = f.diag(i)
        if d != 0:
            out.append([d * x for x in f.Uinv.col(i)])
    return out


def in_diagonal_lattice(v: Sequence[int], orders: Sequence[int]) -> bool:
    """Membership of v in the lattice spanned by orders[i] * e_i.

    An order of 0 contributes nothing to the lattice (free direction),
    so the corresponding coordinate must vanish.
    """
    if len(v) != len(orders):
        raise ValueError("length mismatch")
    for x, d in zip(v, orders):
        if d == 0:
            if x != 0:
                return False
        elif x % d != 0:
            return False
    return True


@dataclass(frozen=True)
class AbGroup:
    """Finitely generated abelian group in invariant factor form.

    factors is a tuple (d_1, ..., d_t) with d_1 | d_2 | ... where a
    trailing 0 encodes a free summand; no factor equals 1.
    """

    factors: tuple[int, ...]

    def __post_init__(self) -> None:
        fs = self.factors
        for i, d in enumerate(fs):
            if d < 0 or d == 1:
                raise ValueError(f"bad invariant factor {d}")
            if i + 1 < len(fs):
                nxt = fs[i + 1]
                if nxt != 0 and (d == 0 or nxt % d != 0):
                    raise ValueError(f"factors not a divisibility chain: {fs}")

    @classmethod
    def from_orders(cls, orders: Iterable[int]) -> "AbGroup":
        arr = [d for d in orders if d != 1]
        if any(d < 0 for d in arr):
            raise ValueError("orders must be nonnegative")
        changed = True
        while changed:
            changed = False
            for i in range(len(arr)):
                for j in range(i + 1, len(arr)):
                    a, b = arr[i], arr[j]
                    g, l = math.gcd(a, b), math.lcm(a, b)
                    if (g, l) != (a, b):
                        arr[i], arr[j] = g, l
                        changed = True
        arr = [d for d in arr if d != 1]
        return cls(tuple(arr))

    @classmethod
    def trivial(cls) -> "AbGroup":
        return cls(())

    @classmethod
    def free(cls, rank: int) -> "AbGroup":
        return cls((0,) * rank)

    @classmethod
    def cyclic(cls, q: int) -> "AbGroup":
        return cls.from_orders([q])

    @property
    def free_rank(self) -> int:
        return sum(1 for d in self.factors if d == 0)

    @property
    def torsion(self) -> tuple[int, ...]:
        return tuple(d for d in self.factors if d != 0)

    @property
    def is_trivial(self) -> bool:
        return not self.factors

    def __str__(self) -> str:
        if self.is_trivial:
            return "0"
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts)
