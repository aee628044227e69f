"""Virtual real representations of C_{p^k} built from rotation planes.

A representation is recorded as a multiplicity of the trivial summand
plus one multiplicity per conjugacy family of two-dimensional rotation
planes.  Plane level j means the kernel of the rotation is exactly
C_{p^j}, so level 0 planes are faithful and higher levels have larger
kernels.  Multiplicities may be negative (formal differences); most
operations work with those, and callers that need an honest
representation check is_actual first.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .group import Group, p_adic_val
from .params import SliceParams, slice_params


@dataclass(frozen=True)
class Rep:
    group: Group
    trivial: int
    planes: tuple[int, ...]  # planes[j] = multiplicity of the level-j rotation plane

    def __post_init__(self) -> None:
        if len(self.planes) != self.group.k:
            raise ValueError(f"expected {self.group.k} plane multiplicities, got {len(self.planes)}")

    @property
    def dim(self) -> int:
        return self.trivial + 2 * sum(self.planes)

    @property
    def is_actual(self) -> bool:
        return self.trivial >= 0 and all(m >= 0 for m in self.planes)

    @property
    def is_zero(self) -> bool:
        return self.trivial == 0 and not any(self.planes)

    def __add__(self, other: "Rep") -> "Rep":
        self._same_group(other)
        return Rep(self.group, self.trivial + other.trivial,
                   tuple(a + b for a, b in zip(self.planes, other.planes)))

    def __sub__(self, other: "Rep") -> "Rep":
        return self + (-other)

    def __neg__(self) -> "Rep":
        return Rep(self.group, -self.trivial, tuple(-m for m in self.planes))

    def __rmul__(self, s: int) -> "Rep":
        return Rep(self.group, s * self.trivial, tuple(s * m for m in self.planes))

    def _same_group(self, other: "Rep") -> None:
        if self.group != other.group:
            raise ValueError(f"group mismatch: {self.group} vs {other.group}")

    def __str__(self) -> str:
        return render_rep(self)


def trivial_rep(group: Group, count: int = 1) -> Rep:
    return Rep(group, count, (0,) * group.k)


def rotation_plane(group: Group, level: int, count: int = 1) -> Rep:
    """count copies of the level-`level` plane.

    Level k is allowed and denotes the plane on which the whole group
    acts trivially, i.e. two trivial summands.
    """
    if not 0 <= level <= group.k:
        raise ValueError(f"plane level {level} out of range for {group}")
    if level == group.k:
        return trivial_rep(group, 2 * count)
    planes = [0] * group.k
    planes[level] = count
    return Rep(group, 0, tuple(planes))


def canonical_lambda(weight: int, group: Group) -> Rep:
    """The plane where the generator rotates by weight/p^k of a turn.

    Only the p-adic valuation of the weight matters up to isomorphism
    of the underlying real representation, which is how the planes are
    recorded here.
    """
    if weight < 1:
        raise ValueError("weight must be positive")
    return rotation_plane(group, min(p_adic_val(weight, group.p), group.k))


def regular_rep(group: Group, count: int = 1) -> Rep:
    """count copies of the real regular representation."""
    p, k = group.p, group.k
    planes = tuple(count * (p ** (k - 1 - j) * (p - 1) // 2) for j in range(k))
    return Rep(group, count, planes)


def lambda_block(count: int, group: Group) -> Rep:
    """Sum of the planes with weights 1, 2, ..., count.

    Weights divisible by p^k contribute two trivial summands each.
    """
    if count < 0:
        raise ValueError("count must be nonnegative")
    p, k = group.p, group.k
    planes = tuple(count // p ** j - count // p ** (j + 1) for j in range(k))
    return Rep(group, 2 * (count // p ** k), planes)


def slice_rep(params: SliceParams, a: int, b: int) -> Rep:
    """The representation carrying the torsion slice at position (a, b)."""
    group = params.group
    ell = params.ell(a, b)
    v = regular_rep(group, params.n - 2) - trivial_rep(group) - lambda_block(ell, group)
    assert v.is_actual and v.dim == params.base_dim(b) * group.p ** a - 1
    assert v.trivial == params.n - 3 - 2 * (ell // group.order)
    return v


def n_slice_rep(n: int, group: Group) -> Rep:
    """The representation whose suspension carries the bottom slice.

    Two closed forms apply depending on whether p divides n; both have
    dimension n and differ from (n-2) copies of the regular
    representation by an initial segment of planes.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n <= 2:
        return trivial_rep(group, n)
    params = slice_params(n, group)
    p = group.p
    if n % p != 0:
        gap = (params.base_dim(1) * p - n) // 2
        w = slice_rep(params, 1, 1) + trivial_rep(group) - lambda_block(gap, group)
    elif n == p ** group.k:
        # the generic formula degenerates here; one regular summand plus
        # two trivials, minus the faithful plane
        w = regular_rep(group) + trivial_rep(group, 2) - rotation_plane(group, 0)
    else:
        third = params.base_dim(2) if params.count >= 2 else n // p + 2
        ell = ((n - 2) * group.order - third * p) // 2
        w = (regular_rep(group, n - 2) - lambda_block(ell, group)
             - lambda_block(p - 1, group) - rotation_plane(group, 0))
    assert w.is_actual and w.dim == n
    return w


def restrict_rep(v: Rep, m: int) -> Rep:
    """Restriction to the subgroup C_{p^m}.

    Planes of level >= m become trivial two-planes; the rest keep their
    level, which still makes sense for the smaller group.
    """
    if not 0 <= m <= v.group.k:
        raise ValueError(f"no subgroup at level {m}")
    sub = v.group.subgroup(m)
    return Rep(sub, v.trivial + 2 * sum(v.planes[m:]), v.planes[:m])


def fixed_dim(v: Rep, m: int) -> int:
    """Dimension of the C_{p^m}-fixed subspace."""
    if not 0 <= m <= v.group.k:
        raise ValueError(f"no subgroup at level {m}")
    return v.trivial + 2 * sum(v.planes[m:])


def is_subrep(small: Rep, big: Rep) -> bool:
    d = big - small
    return d.is_actual


@dataclass(frozen=True)
class RepDiff:
    """An honest difference: virtual = plus - minus with disjoint support."""

    plus: Rep
    minus: Rep

    def __post_init__(self) -> None:
        assert self.plus.is_actual and self.minus.is_actual
        assert not (self.plus.trivial and self.minus.trivial)
        assert all(not (a and b) for a, b in zip(self.plus.planes, self.minus.planes))

    @classmethod
    def from_virtual(cls, v: Rep) -> "RepDiff":
        plus = Rep(v.group, max(v.trivial, 0), tuple(max(m, 0) for m in v.planes))
        minus = Rep(v.group, max(-v.trivial, 0), tuple(max(-m, 0) for m in v.planes))
        assert plus - minus == v
        return cls(plus, minus)


def sub(v: Rep, w: Rep) -> RepDiff:
    """The formal difference v - w, split into actual parts."""
    return RepDiff.from_virtual(v - w)


# --- display ---------------------------------------------------------------

def rho_form(v: Rep) -> tuple[int, int] | None:
    """(s, t) with v == s*rho - t*trivial, s >= 1 and 0 <= t <= 2, if
    the plane multiplicities are an exact regular multiple."""
    rho = regular_rep(v.group)
    if v.group.k == 0 or rho.planes[0] == 0:
        return None
    s, r = divmod(v.planes[0], rho.planes[0])
    if r != 0 or s <= 0:
        return None
    if v.planes != tuple(s * m for m in rho.planes):
        return None
    t = s - v.trivial
    return (s, t) if 0 <= t <= 2 else None


def strip_planes(v: Rep, below: int) -> Rep:
    """Zero the plane multiplicities at levels strictly below the
    cutoff.  Used to display spheres up to summands a torsion
    coefficient cannot see."""
    return Rep(v.group, v.trivial,
               tuple(0 if j < below else m for j, m in enumerate(v.planes)))


def render_rep(v: Rep, latex: bool = False) -> str:
    """Canonical display; uses the s*rho - t shorthand when it is exact."""
    rho_sym = r"\rho" if latex else "ρ"
    lam = (lambda j: rf"\lambda_{{{j}}}") if latex else (lambda j: f"λ_{j}")

    form = rho_form(v)
    if form is not None:
        s, t = form
        head = rho_sym if s == 1 else f"{s}{rho_sym}"
        return head if t == 0 else f"{head} - {t}"

    terms: list[tuple[int, str]] = []
    if v.trivial:
        terms.append((v.trivial, ""))
    for j in range(v.group.k - 1, -1, -1):
        if v.planes[j]:
            terms.append((v.planes[j], lam(j)))
    if not terms:
        return "0"
    out = ""
    for i, (m, sym) in enumerate(terms):
        mag = abs(m)
        body = sym if (mag == 1 and sym) else (f"{mag}{sym}" if sym else f"{mag}")
        if i == 0:
            out = body if m > 0 else f"-{body}"
        else:
            out += f" + {body}" if m > 0 else f" - {body}"
    return out


# --- parsing ---------------------------------------------------------------

class RepParseError(ValueError):
    def __init__(self, text: str, pos: int, message: str):
        self.text = text
        self.pos = pos
        super().__init__(f"{message} at position {pos} in {text!r}")


_TOKEN = re.compile(r"\d+|rho|L\d+|[()+\-,]|V|W|@n=")


def _normalize(text: str) -> str:
    text = text.replace("−", "-").replace("ρ", "rho")
    text = text.replace("λ_", "L").replace("λ", "L")
    text = text.replace("lambda_", "L").replace("lambda", "L")
    return text.replace(" ", "").replace("*", "")


class _RepParser:
    """Recursive descent over: [-] term ((+|-) term)*

    term := INT | [INT] rho | [INT] L<j> | [INT] ( expr )
          | V ( INT , INT ) @n= INT | W @n= INT
    """

    def __init__(self, text: str, group: Group):
        self.raw = text
        self.group = group
        self.src = _normalize(text)
        self.tokens: list[tuple[str, int]] = []
        pos = 0
        while pos < len(self.src):
            m = _TOKEN.match(self.src, pos)
            if not m:
                raise RepParseError(text, pos, f"unexpected character {self.src[pos]!r}")
            self.tokens.append((m.group(), pos))
            pos = m.end()
        self.i = 0

    def peek(self) -> str | None:
        return self.tokens[self.i][0] if self.i < len(self.tokens) else None

    def pos(self) -> int:
        return self.tokens[self.i][1] if self.i < len(self.tokens) else len(self.src)

    def take(self, expected: str | None = None) -> str:
        tok = self.peek()
        if tok is None:
            raise RepParseError(self.raw, self.pos(), "unexpected end of input")
        if expected is not None and tok != expected:
            raise RepParseError(self.raw, self.pos(), f"expected {expected!r}, found {tok!r}")
        self.i += 1
        return tok

    def take_int(self) -> int:
        tok = self.take()
        if not tok.isdigit():
            raise RepParseError(self.raw, self.tokens[self.i - 1][1], f"expected integer, found {tok!r}")
        return int(tok)

    def parse(self) -> Rep:
        v = self.expr()
        if self.peek() is not None:
            raise RepParseError(self.raw, self.pos(), f"trailing input {self.peek()!r}")
        return v

    def expr(self) -> Rep:
        sign = 1
        if self.peek() == "-":
            self.take()
            sign = -1
        v = sign * self.term()
        while self.peek() in ("+", "-"):
            op = self.take()
            t = self.term()
            v = v + t if op == "+" else v - t
        return v

    def term(self) -> Rep:
        tok = self.peek()
        if tok is None:
            raise RepParseError(self.raw, self.pos(), "expected a term")
        if tok == "V":
            return self.slice_term()
        if tok == "W":
            self.take()
            self.take("@n=")
            return n_slice_rep(self.take_int(), self.group)
        count = 1
        if tok.isdigit():
            count = self.take_int()
            tok = self.peek()
            if tok is None or tok in ("+", "-", ")", ","):
                return trivial_rep(self.group, count)
        if tok == "rho":
            self.take()
            return regular_rep(self.group, count)
        if tok is not None and tok.startswith("L"):
            self.take()
            level = int(tok[1:])
            if level > self.group.k:
                raise RepParseError(self.raw, self.tokens[self.i - 1][1],
                                    f"plane level {level} out of range for {self.group}")
            return rotation_plane(self.group, level, count)
        if tok == "(":
            self.take()
            v = self.expr()
            self.take(")")
            return count * v
        raise RepParseError(self.raw, self.pos(), f"cannot start a term with {tok!r}")

    def slice_term(self) -> Rep:
        self.take("V")
        self.take("(")
        a = self.take_int()
        self.take(",")
        b = self.take_int()
        self.take(")")
        self.take("@n=")
        n = self.take_int()
        return slice_rep(slice_params(n, self.group), a, b)


def parse_rep(text: str, group: Group) -> Rep:
    """Parse the ASCII grammar; also accepts the unicode display form."""
    return _RepParser(text, group).parse()
