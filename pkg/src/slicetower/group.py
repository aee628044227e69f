"""The ambient cyclic group C_{p^k} and p-adic valuations."""

from __future__ import annotations

from dataclasses import dataclass


def is_odd_prime(p: int) -> bool:
    if p < 3 or p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def p_adic_val(i: int, p: int) -> int:
    """Largest e with p^e dividing i.  Requires i >= 1."""
    if i < 1:
        raise ValueError(f"p_adic_val needs a positive integer, got {i}")
    e = 0
    while i % p == 0:
        i //= p
        e += 1
    return e


@dataclass(frozen=True, order=True)
class Group:
    """The cyclic group C_{p^k} for an odd prime p.

    k = 0 (the trivial group) is permitted so that restriction to
    subgroups bottoms out cleanly; user-facing entry points insist on
    k >= 1.
    """

    p: int
    k: int

    def __post_init__(self) -> None:
        if not is_odd_prime(self.p):
            raise ValueError(f"p must be an odd prime, got {self.p}")
        if self.k < 0:
            raise ValueError(f"k must be nonnegative, got {self.k}")

    @property
    def order(self) -> int:
        return self.p**self.k

    def subgroup(self, m: int) -> "Group":
        """The subgroup C_{p^m}, for 0 <= m <= k."""
        if not 0 <= m <= self.k:
            raise ValueError(f"no subgroup level {m} in C_{self.p}^{self.k}")
        return Group(self.p, m)

    def __repr__(self) -> str:
        return f"C_{self.p}^{self.k}" if self.k != 1 else f"C_{self.p}"
