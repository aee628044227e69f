"""Integer bookkeeping behind the tower of S^n smashed with HZ.

For a suspension degree n >= 3 the tower is indexed by pairs (a, b)
with 1 <= a <= k and 1 <= b <= d, where d counts the integers of the
same parity as n lying in the closed interval [n/p, n-2].  Those
integers are m_1 < ... < m_d; the (a, b) stage sits in dimension
m_b * p^a - 1.  Everything here is exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .group import Group, p_adic_val


def parity_offset(n: int, p: int) -> int:
    """The correction term making (n - (n - n0)/p - offset)/2 count d.

    0 when p divides n, otherwise 2 or 1 according to whether the
    residue n0 = n mod p is even or odd.  The n0 = 0 test must come
    first since 0 is even.
    """
    n0 = n % p
    if n0 == 0:
        return 0
    return 2 if n0 % 2 == 0 else 1


@dataclass(frozen=True)
class SliceParams:
    """Value object carrying the tower combinatorics of one (n, group).

    base_dims is the tuple (m_1, ..., m_d) in increasing order.  The
    stage (a, b) of the tower lives in dimension base_dims[b-1] * p^a - 1.
    """

    group: Group
    n: int
    residue: int
    offset: int
    base_dims: tuple[int, ...]

    @property
    def count(self) -> int:
        """d, the number of base dimensions."""
        return len(self.base_dims)

    def base_dim(self, b: int) -> int:
        """m_b, 1-indexed."""
        if not 1 <= b <= self.count:
            raise ValueError(f"b must be in 1..{self.count}, got {b}")
        return self.base_dims[b - 1]

    def ell(self, a: int, b: int) -> int:
        """Half the gap between the top stage dimension and stage (a, b).

        Equals ((n-2)p^k - m_b p^a) / 2; always a nonnegative integer.
        It is the number of rotation planes removed from (n-2) copies
        of the regular representation to cut the stage rep down.
        """
        self._check_indices(a, b)
        p, k = self.group.p, self.group.k
        num = (self.n - 2) * p**k - self.base_dim(b) * p**a
        assert num % 2 == 0 and num >= 0
        return num // 2

    def valuation(self, a: int, b: int) -> int:
        """min(v_p(m_b), k - a): the twist level of stage (a, b).

        Stage (a, b) carries the torsion coefficient with parameters
        (valuation + 1, a - 1), and stepping past it trades a plane at
        level valuation + a for one at level a - 1.
        """
        self._check_indices(a, b)
        return min(p_adic_val(self.base_dim(b), self.group.p), self.group.k - a)

    def connection_gap(self, a: int) -> int:
        """ell(a, d) - ell(a+1, 1): the jump between consecutive a-blocks.

        In closed form this is (p^a / 2)(offset * p - residue + 2).  It
        is at most p^(a+1), with equality exactly when the residue is 2;
        strict inequality elsewhere.
        """
        if not 1 <= a <= self.group.k - 1:
            raise ValueError(f"a must be in 1..{self.group.k - 1}, got {a}")
        p = self.group.p
        gap = (p**a * (self.offset * p - self.residue + 2)) // 2
        assert gap == self.ell(a, self.count) - self.ell(a + 1, 1)
        assert gap <= p ** (a + 1)
        assert (gap == p ** (a + 1)) == (self.residue == 2)
        return gap

    def _check_indices(self, a: int, b: int) -> None:
        if not 1 <= a <= self.group.k:
            raise ValueError(f"a must be in 1..{self.group.k}, got {a}")
        if not 1 <= b <= self.count:
            raise ValueError(f"b must be in 1..{self.count}, got {b}")


def slice_params(n: int, group: Group) -> SliceParams:
    """Compute d, the residue data and the m_b list for S^n over group.

    Requires n >= 3 (towers for smaller n are handled directly by the
    tower module and need none of this).  d is computed by the closed
    formula and revalidated by direct counting so a transcription slip
    fails loudly here instead of corrupting towers downstream.
    """
    if group.k < 1:
        raise ValueError("slice parameters need a nontrivial group")
    if n < 3:
        raise ValueError(f"slice parameters are defined for n >= 3, got {n}")
    p = group.p
    n0 = n % p
    delta = parity_offset(n, p)
    d = (n - (n - n0) // p - delta) // 2
    # Independent count: same parity as n, n/p <= m <= n-2 (lower bound
    # attainable only when p | n).
    direct = [m for m in range(1, n - 1) if (n - m) % 2 == 0 and m * p >= n]
    assert len(direct) == d, (n, group, d, direct)
    dims = tuple(n - 2 * d + 2 * i for i in range(d))
    assert list(dims) == direct
    if d:
        assert dims[-1] == n - 2
    return SliceParams(group=group, n=n, residue=n0, offset=delta, base_dims=dims)
