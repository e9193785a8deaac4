"""Automorphisms of the 3-dimensional Heisenberg algebra h_3.

Every automorphism of h_3 (basis X1, X2, X3 with [X1, X2] = X3) has the
matrix ::

    [[a1, a2, 0],
     [a3, a4, 0],
     [a5, a6, D]]      D = a1*a4 - a2*a3 != 0

acting on column vectors. This module builds the involution families
tau_1..tau_4, the Klein four-groups Gamma_7 and Gamma_8, finite-order
elements, and the non-abelian group of order 6.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .lie import heisenberg, is_automorphism
from .linalg import Matrix, rational_sqrt, to_rational

H3 = heisenberg(1)
I3 = Matrix.identity(3)


@dataclass(frozen=True)
class AutParams:
    a1: Fraction
    a2: Fraction
    a3: Fraction
    a4: Fraction
    a5: Fraction = Fraction(0)
    a6: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("a1", "a2", "a3", "a4", "a5", "a6"):
            object.__setattr__(self, name, to_rational(getattr(self, name)))
        if self.delta == 0:
            raise ValueError("a1*a4 - a2*a3 must be nonzero")

    @property
    def delta(self) -> Fraction:
        return self.a1 * self.a4 - self.a2 * self.a3

    @classmethod
    def of(cls, m: Matrix) -> AutParams:
        """Read the parameters back off an automorphism matrix."""
        if not is_h3_automorphism(m):
            raise ValueError("not an automorphism of h_3")
        return cls(m[0, 0], m[0, 1], m[1, 0], m[1, 1], m[2, 0], m[2, 1])


def aut_matrix(p: AutParams) -> Matrix:
    return Matrix(
        [
            [p.a1, p.a2, 0],
            [p.a3, p.a4, 0],
            [p.a5, p.a6, p.delta],
        ]
    )


def aut(a1, a2, a3, a4, a5=0, a6=0) -> Matrix:
    """Shorthand for ``aut_matrix(AutParams(...))``."""
    return aut_matrix(AutParams(a1, a2, a3, a4, a5, a6))


def is_h3_automorphism(m: Matrix) -> bool:
    return is_automorphism(H3, m)


def delta_of(m: Matrix) -> Fraction:
    """The factor by which m scales the center X3."""
    return m[2, 2]


class Family(enum.Enum):
    IDENTITY = "Identity"
    TAU1 = "Tau1"
    TAU2 = "Tau2"
    TAU3 = "Tau3"
    TAU4 = "Tau4"


_PARAM_NAMES = {
    Family.IDENTITY: (),
    Family.TAU1: ("a3", "a6"),
    Family.TAU2: ("a3", "a5"),
    Family.TAU3: ("a1", "a2", "a6"),
    Family.TAU4: ("a5", "a6"),
}


@dataclass(frozen=True)
class InvolutionTag:
    family: Family
    params: tuple[Fraction, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "params", tuple(to_rational(x) for x in self.params))
        want = len(_PARAM_NAMES[self.family])
        if len(self.params) != want:
            raise ValueError(f"{self.family.value} takes {want} parameters, got {len(self.params)}")
        if self.family is Family.TAU3 and self.params[1] == 0:
            raise ValueError("Tau3 needs a2 != 0")

    def __str__(self) -> str:
        if not self.params:
            return self.family.value
        return f"{self.family.value}({', '.join(str(x) for x in self.params)})"


def tau1(a3, a6) -> Matrix:
    a3, a6 = to_rational(a3), to_rational(a6)
    return Matrix([[-1, 0, 0], [a3, 1, 0], [a3 * a6 / 2, a6, -1]])


def tau2(a3, a5) -> Matrix:
    return Matrix([[1, 0, 0], [a3, -1, 0], [a5, 0, -1]])


def tau3(a1, a2, a6) -> Matrix:
    a1, a2, a6 = to_rational(a1), to_rational(a2), to_rational(a6)
    if a2 == 0:
        raise ValueError("tau3 needs a2 != 0")
    return Matrix([[a1, a2, 0], [(1 - a1 * a1) / a2, -a1, 0], [(1 + a1) * a6 / a2, a6, -1]])


def tau4(a5, a6) -> Matrix:
    return Matrix([[-1, 0, 0], [0, -1, 0], [a5, a6, 1]])


_BUILDERS = {
    Family.IDENTITY: lambda: I3,
    Family.TAU1: tau1,
    Family.TAU2: tau2,
    Family.TAU3: tau3,
    Family.TAU4: tau4,
}


def tau(tag: InvolutionTag) -> Matrix:
    return _BUILDERS[tag.family](*tag.params)


def classify_involution(m: Matrix) -> InvolutionTag:
    """Name the involution family of m and recover its parameters.

    Families are tried in the order Identity, Tau4, Tau1, Tau2, Tau3.
    """
    if m.shape != (3, 3) or not is_h3_automorphism(m):
        raise ValueError("not an automorphism of h_3")
    if m @ m != I3:
        raise ValueError("not an involution")
    candidates = [
        InvolutionTag(Family.IDENTITY),
        InvolutionTag(Family.TAU4, (m[2, 0], m[2, 1])),
        InvolutionTag(Family.TAU1, (m[1, 0], m[2, 1])),
        InvolutionTag(Family.TAU2, (m[1, 0], m[2, 0])),
    ]
    if m[0, 1] != 0:
        candidates.append(InvolutionTag(Family.TAU3, (m[0, 0], m[0, 1], m[2, 1])))
    for tag in candidates:
        if tau(tag) == m:
            return tag
    # unreachable if the involution list is complete
    raise AssertionError(f"involution {m!r} matches no family")


def compose(m1: Matrix, m2: Matrix) -> Matrix:
    """m1 after m2."""
    if m1.shape != (3, 3) or m2.shape != (3, 3):
        raise ValueError("compose expects 3x3 matrices")
    return m1 @ m2


def order(m: Matrix, bound: int = 64) -> int | None:
    """Multiplicative order of m, or None if it exceeds ``bound``."""
    n = m.nrows
    ident = Matrix.identity(n)
    acc = m
    for k in range(1, bound + 1):
        if acc == ident:
            return k
        acc = acc @ m
    return None


class GroupTooLarge(RuntimeError):
    pass


@dataclass(frozen=True)
class FiniteGroupTable:
    """A finite matrix group with its multiplication table.

    ``table[i][j]`` is the index of ``elements[i] @ elements[j]``.
    ``elements[0]`` is always the identity.
    """

    elements: tuple[Matrix, ...]
    table: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def is_abelian(self) -> bool:
        n = len(self.elements)
        return all(self.table[i][j] == self.table[j][i] for i in range(n) for j in range(i))

    @property
    def orders(self) -> tuple[int, ...]:
        out = []
        for i in range(len(self.elements)):
            k, j = 1, i
            while j != 0:
                j = self.table[j][i]
                k += 1
            out.append(k)
        return tuple(out)

    @property
    def exponent(self) -> int:
        from math import lcm

        return lcm(*self.orders)

    def index(self, m: Matrix) -> int:
        return self.elements.index(m)

    def __contains__(self, m: Matrix) -> bool:
        return m in self.elements

    def as_set(self) -> frozenset[Matrix]:
        return frozenset(self.elements)

    def inverse_index(self, i: int) -> int:
        return next(j for j in range(len(self.elements)) if self.table[i][j] == 0)


def group_closure(generators: Iterable[Matrix], bound: int = 64) -> FiniteGroupTable:
    """Close a generating set under multiplication.

    Raises GroupTooLarge once more than ``bound`` elements appear.
    """
    gens = list(generators)
    if not gens:
        raise ValueError("need at least one generator")
    n = gens[0].nrows
    ident = Matrix.identity(n)
    elements = [ident]
    seen = {ident: 0}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x @ g
                if y not in seen:
                    if len(elements) >= bound:
                        raise GroupTooLarge(f"more than {bound} elements")
                    seen[y] = len(elements)
                    elements.append(y)
                    nxt.append(y)
        frontier = nxt
    table = tuple(tuple(seen[a @ b] for b in elements) for a in elements)
    return FiniteGroupTable(tuple(elements), table)


def _klein_from(elements: Sequence[Matrix]) -> FiniteGroupTable:
    g = group_closure(elements[1:], bound=4)
    if len(g) != 4 or g.as_set() != frozenset(elements) or not g.is_abelian:
        raise AssertionError("listed elements do not form a Klein four-group")
    return g


def gamma7(a3, a5, a6) -> FiniteGroupTable:
    """{Id, tau1(a3, a6), tau2(-a3, a5), tau4(-a3*a6/2 - a5, -a6)}."""
    a3, a5, a6 = to_rational(a3), to_rational(a5), to_rational(a6)
    els = (I3, tau1(a3, a6), tau2(-a3, a5), tau4(-a3 * a6 / 2 - a5, -a6))
    return _klein_from(els)


def gamma7_generators(a3, a5, a6) -> tuple[Matrix, Matrix]:
    a3 = to_rational(a3)
    return tau1(a3, a6), tau2(-a3, a5)


def gamma8(a1, a2, a6, a6p) -> FiniteGroupTable:
    """{Id, tau3(a1, a2, a6), tau3(-a1, -a2, a6p), their product (a tau4)}."""
    a1, a2, a6, a6p = (to_rational(x) for x in (a1, a2, a6, a6p))
    if a2 == 0:
        raise ValueError("gamma8 needs a2 != 0")
    els = (
        I3,
        tau3(a1, a2, a6),
        tau3(-a1, -a2, a6p),
        tau4((a6p * (1 - a1) - a6 * (1 + a1)) / a2, -a6 - a6p),
    )
    return _klein_from(els)


def gamma8_generators(a1, a2, a6, a6p) -> tuple[Matrix, Matrix]:
    a1, a2 = to_rational(a1), to_rational(a2)
    return tau3(a1, a2, a6), tau3(-a1, -a2, a6p)


def conjugates_to(sigma: Matrix, g: FiniteGroupTable, h: FiniteGroupTable) -> bool:
    """True iff sigma^-1 g sigma = h as sets."""
    if not sigma.is_invertible():
        raise ValueError("sigma is singular")
    inv = sigma.inverse()
    return frozenset(inv @ m @ sigma for m in g.elements) == h.as_set()


def small_rationals(height: int = 2, denominators: Sequence[int] = (1, 2)) -> list[Fraction]:
    """Rationals p/q with |p| <= height, q in ``denominators``, ordered by size of p and q."""
    vals = {Fraction(p, q) for q in denominators for p in range(-height, height + 1)}
    return sorted(vals, key=lambda x: (abs(x.numerator) + x.denominator, x < 0, abs(x)))


def automorphism_candidates(values: Sequence[Fraction]) -> Iterator[Matrix]:
    """All aut(a1..a6) with entries drawn from ``values`` (Delta != 0), simplest first."""
    rank = {v: i for i, v in enumerate(values)}
    combos = itertools.product(values, repeat=6)
    for a in sorted(combos, key=lambda t: sum(rank[x] for x in t)):
        if a[0] * a[3] - a[1] * a[2] != 0:
            yield aut(*a)


def find_conjugator(
    g: FiniteGroupTable, h: FiniteGroupTable, values: Sequence[Fraction] | None = None
) -> Matrix | None:
    """Search small-height automorphisms sigma with sigma^-1 g sigma = h.

    Every hit is confirmed with :func:`conjugates_to` before it is returned.
    """
    if len(g) != len(h):
        return None
    if values is None:
        values = small_rationals(2, (1, 2))
    targets = h.as_set()
    gens = [m for m in g.elements if m != I3]
    rank = {v: i for i, v in enumerate(values)}
    # a1..a4 fix the action on X1, X2; cheap reject on that block first
    blocks = sorted(
        (t for t in itertools.product(values, repeat=4) if t[0] * t[3] - t[1] * t[2] != 0),
        key=lambda t: sum(rank[x] for x in t),
    )
    tblocks = {(m[0, 0], m[0, 1], m[1, 0], m[1, 1]) for m in targets}
    for a1, a2, a3, a4 in blocks:
        b = Matrix([[a1, a2], [a3, a4]])
        binv = b.inverse()
        ok = True
        for m in gens:
            c = binv @ m.submatrix((0, 1), (0, 1)) @ b
            if (c[0, 0], c[0, 1], c[1, 0], c[1, 1]) not in tblocks:
                ok = False
                break
        if not ok:
            continue
        for a5, a6 in sorted(
            itertools.product(values, repeat=2), key=lambda t: rank[t[0]] + rank[t[1]]
        ):
            sigma = aut(a1, a2, a3, a4, a5, a6)
            inv = sigma.inverse()
            if all(inv @ m @ sigma in targets for m in gens) and conjugates_to(sigma, g, h):
                return sigma
    return None


_RATIONAL_COS = {3: Fraction(-1, 2), 4: Fraction(0), 6: Fraction(1, 2)}


def rational_cos_2pi_over(k: int) -> Fraction | None:
    """cos(2 pi / k) when it is rational (k = 1, 2, 3, 4, 6), else None."""
    extra = {1: Fraction(1), 2: Fraction(-1)}
    return _RATIONAL_COS.get(k, extra.get(k))


def order_k_instance(k: int, a2, a3, a5=0, a6=0) -> Matrix | None:
    """An automorphism of order exactly k with the given off-diagonal entries.

    The diagonal of the X1, X2 block is cos(2pi/k) -/+ sqrt(cos^2(2pi/k) - 1 - a2*a3)
    (minus on X1). Returns None unless both the cosine and the square root are
    rational, which restricts k to 3, 4, 6.
    """
    if k < 3:
        raise ValueError("order_k_instance needs k >= 3")
    c = _RATIONAL_COS.get(k)
    if c is None:
        return None
    a2, a3 = to_rational(a2), to_rational(a3)
    root = rational_sqrt(c * c - 1 - a2 * a3)
    if root is None:
        return None
    m = Matrix([[c - root, a2, 0], [a3, c + root, 0], [a5, a6, 1]])
    if order(m, bound=k) != k:
        raise AssertionError(f"constructed matrix does not have order {k}")
    return m


def sigma3_generators(alpha=1) -> tuple[Matrix, Matrix]:
    """Generators of a subgroup of Aut(h_3) isomorphic to the symmetric group S_3."""
    alpha = to_rational(alpha)
    if alpha == 0:
        raise ValueError("alpha must be nonzero")
    s1 = Matrix.diag(-1, 1, -1)
    s2 = Matrix([[Fraction(-1, 2), alpha, 0], [Fraction(-3, 4) / alpha, Fraction(-1, 2), 0], [0, 0, 1]])
    return s1, s2
