"""Z_2^k-gradings of Lie algebras.

A label in Z_2^k is a tuple of k signs (+1 or -1), one per generating
involution; the group law is the componentwise product and the unit is
(1, ..., 1). For k = 2 the letters used for the Klein four-group read

    a = (+1, -1),  b = (-1, +1),  c = (-1, -1)

so that g_a is fixed by the first involution and negated by the second.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .lie import LieAlgebra, bracket, heisenberg, is_automorphism
from .linalg import Matrix, Subspace, intersect, kernel

Label = tuple  # tuple[int, ...] of +1/-1


def labels(k: int) -> list[Label]:
    """All 2^k labels, the unit first, then in lexicographic sign order."""
    return [tuple(s) for s in itertools.product((1, -1), repeat=k)]


def unit(k: int) -> Label:
    return (1,) * k


def mul(a: Label, b: Label) -> Label:
    return tuple(x * y for x, y in zip(a, b, strict=True))


def label_str(a: Label) -> str:
    if not a:
        return "()"
    return "(" + ",".join("+" if x > 0 else "-" for x in a) + ")"


class GradingError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class Grading:
    """A decomposition of ``algebra`` indexed by Z_2^k.

    Every one of the 2^k labels has an entry; absent components are zero
    subspaces, so a trivial unit component stays representable.
    """

    algebra: LieAlgebra
    k: int
    components: tuple[tuple[Label, Subspace], ...]

    def __post_init__(self):
        got = [lab for lab, _ in self.components]
        if got != labels(self.k):
            raise GradingError("components must list every label of Z_2^k in canonical order")
        for _, s in self.components:
            if s.ambient_dim != self.algebra.dim:
                raise GradingError("component lives in the wrong ambient space")

    @classmethod
    def from_components(
        cls, algebra: LieAlgebra, comps: Mapping[Label, Subspace | Iterable[Sequence]], k: int | None = None
    ) -> Grading:
        """Build from a partial map label -> Subspace (or spanning vectors)."""
        if k is None:
            if not comps:
                raise GradingError("cannot infer k from an empty component map")
            k = len(next(iter(comps)))
        n = algebra.dim
        out = []
        for lab in comps:
            if len(lab) != k or any(x not in (1, -1) for x in lab):
                raise GradingError(f"bad label {lab!r} for Z_2^{k}")
        for lab in labels(k):
            s = comps.get(lab)
            if s is None:
                s = Subspace.zero(n)
            elif not isinstance(s, Subspace):
                s = Subspace.span(s, n)
            out.append((lab, s))
        return cls(algebra, k, tuple(out))

    @classmethod
    def z2(cls, algebra: LieAlgebra, even: Iterable[Sequence], odd: Iterable[Sequence]) -> Grading:
        """g = g_0 + g_1 with g_0 the (+) component and g_1 the (-) component."""
        n = algebra.dim
        return cls.from_components(algebra, {(1,): Subspace.span(even, n), (-1,): Subspace.span(odd, n)}, 1)

    def __getitem__(self, lab: Label) -> Subspace:
        for l2, s in self.components:
            if l2 == tuple(lab):
                return s
        raise KeyError(lab)

    @property
    def unit_component(self) -> Subspace:
        return self[unit(self.k)]

    def items(self):
        return iter(self.components)

    def nonunit_components(self) -> list[tuple[Label, Subspace]]:
        """Nonzero components other than the unit one, in label order."""
        u = unit(self.k)
        return [(lab, s) for lab, s in self.components if lab != u and not s.is_zero()]

    def label_of(self, v: Sequence) -> Label | None:
        """Label of a homogeneous vector, None if v is zero or not homogeneous."""
        for lab, s in self.components:
            if not s.is_zero() and s.contains(v):
                if all(x == 0 for x in v):
                    return None
                return lab
        return None

    def __eq__(self, other) -> bool:
        if not isinstance(other, Grading):
            return NotImplemented
        return self.algebra == other.algebra and self.k == other.k and self.components == other.components

    def __hash__(self):
        return hash((self.algebra, self.k, self.components))

    def describe(self) -> str:
        parts = []
        for lab, s in self.components:
            span = ", ".join("(" + ",".join(str(x) for x in v) + ")" for v in s.vectors)
            parts.append(f"{label_str(lab)}: span{{{span}}}")
        return "; ".join(parts)


def grading_from_involutions(L: LieAlgebra, taus: Sequence[Matrix]) -> Grading:
    """Simultaneous +-1 eigenspace decomposition of commuting involutive automorphisms."""
    n = L.dim
    ident = Matrix.identity(n)
    for i, t in enumerate(taus):
        if t.shape != (n, n) or not is_automorphism(L, t):
            raise GradingError(f"involution #{i} is not an automorphism")
        if t @ t != ident:
            raise GradingError(f"involution #{i} does not square to the identity")
    for i, j in itertools.combinations(range(len(taus)), 2):
        if taus[i] @ taus[j] != taus[j] @ taus[i]:
            raise GradingError(f"involutions #{i} and #{j} do not commute")
    k = len(taus)
    eig = [{s: kernel(t - ident.scale(s)) for s in (1, -1)} for t in taus]
    comps = []
    for lab in labels(k):
        s = Subspace.full(n)
        for i, sign in enumerate(lab):
            s = intersect(s, eig[i][sign])
        comps.append((lab, s))
    return Grading(L, k, tuple(comps))


def check_grading(G: Grading) -> list[str]:
    """Violations of the grading axioms; empty when G is a Z_2^k-grading."""
    L, n = G.algebra, G.algebra.dim
    out = []
    total = sum(s.dim for _, s in G.components)
    whole = Subspace.span([v for _, s in G.components for v in s.vectors], n)
    if total != n or whole.dim != n:
        out.append(f"components are not a direct sum of the algebra: dims add to {total}, span has dim {whole.dim}")
    for (a, sa), (b, sb) in itertools.product(G.components, repeat=2):
        if sa.is_zero() or sb.is_zero():
            continue
        target = G[mul(a, b)]
        for u in sa.vectors:
            for v in sb.vectors:
                w = bracket(L, u, v)
                if not target.contains(w):
                    out.append(
                        f"[g{label_str(a)}, g{label_str(b)}] not in g{label_str(mul(a, b))}: "
                        f"[{_fmt(u)}, {_fmt(v)}] = {_fmt(w)}"
                    )
    return out


def _fmt(v) -> str:
    return "(" + ",".join(str(x) for x in v) + ")"


def support(G: Grading) -> list[Label]:
    return [lab for lab, s in G.components if not s.is_zero()]


def _gf2_rank(bitvecs: Iterable[int]) -> int:
    basis: list[int] = []
    for v in bitvecs:
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
    return len(basis)


def _bits(lab: Label) -> int:
    return sum(1 << i for i, x in enumerate(lab) if x == -1)


def is_irreducible(G: Grading) -> bool:
    """True iff the support generates all of Z_2^k."""
    return _gf2_rank(_bits(lab) for lab in support(G)) == G.k


def is_group_automorphism(omega: Mapping[Label, Label], k: int) -> bool:
    labs = labels(k)
    if sorted(omega) != sorted(labs) or sorted(omega.values()) != sorted(labs):
        return False
    return all(omega[mul(a, b)] == mul(omega[a], omega[b]) for a in labs for b in labs)


def group_automorphisms(k: int) -> list[dict[Label, Label]]:
    """All automorphisms of Z_2^k (as label maps), identity first."""
    labs = labels(k)
    gens = [tuple(-1 if j == i else 1 for j in range(k)) for i in range(k)]
    out = []
    for images in itertools.permutations(labs[1:], k):
        if _gf2_rank(_bits(x) for x in images) != k:
            continue
        omega = {}
        for lab in labs:
            img = unit(k)
            for i, g in enumerate(gens):
                if lab[i] == -1:
                    img = mul(img, images[i])
            omega[lab] = img
        out.append(omega)
    out.sort(key=lambda w: any(a != b for a, b in w.items()))  # stable: identity first
    return out


def equivalent_under(G: Grading, Gp: Grading, pi: Matrix, omega: Mapping[Label, Label] | None = None) -> bool:
    """True iff pi(G[omega(g)]) == Gp[g] for every label g."""
    if G.algebra != Gp.algebra:
        raise GradingError("gradings live on different algebras")
    if G.k != Gp.k:
        return False
    if not is_automorphism(G.algebra, pi):
        raise GradingError("pi is not an automorphism of the algebra")
    if omega is None:
        omega = {lab: lab for lab in labels(G.k)}
    omega = {tuple(a): tuple(b) for a, b in omega.items()}
    if not is_group_automorphism(omega, G.k):
        raise GradingError("omega is not an automorphism of Z_2^k")
    for lab in labels(G.k):
        src = G[omega[lab]]
        if src.dim != Gp[lab].dim:
            return False
        if src.image(pi) != Gp[lab]:
            return False
    return True


def find_equivalence_h3(G: Grading, Gp: Grading, values=None):
    """Search (pi, omega) over small-height automorphisms of h_3.

    Returns the first witness found, or None. Only meaningful for gradings of
    heisenberg(1).
    """
    from .aut_h3 import automorphism_candidates, small_rationals

    if G.algebra.dim != 3 or G.k != Gp.k:
        return None
    dims = sorted(s.dim for _, s in G.components)
    if dims != sorted(s.dim for _, s in Gp.components):
        return None
    omegas = group_automorphisms(G.k)
    for pi in automorphism_candidates(values or small_rationals(1, (1,))):
        for omega in omegas:
            if equivalent_under(G, Gp, pi, omega):
                return pi, omega
    return None


class GradingName(enum.Enum):
    H3_Z2_A = "H3-Z2-A"  # R{X2} + R{X1, X3}
    H3_Z2_B = "H3-Z2-B"  # R{X1} + R{X2, X3}
    CENTER = "H2p1-Z2-center"
    SUB = "H2p1-Z2-sub"
    ODD = "H2p1-Z2-odd"
    EVEN = "H2p1-Z2-even"
    Z22 = "H2p1-Z22"


def _diag_involution(signs: Sequence[int]) -> Matrix:
    return Matrix.diag(*signs)


def heisenberg_grading(name: GradingName | str, p: int = 1, k: int = 0) -> Grading:
    """The catalogued gradings of h_{2p+1}, built from diagonal involutions.

    ``k`` is only used by H2p1-Z2-sub, where the unit component is
    R{X_1..X_2k, X_2p+1} and needs 1 <= k < p.
    """
    name = GradingName(name)
    if name in (GradingName.H3_Z2_A, GradingName.H3_Z2_B):
        if p != 1:
            raise GradingError(f"{name.value} is a grading of h_3 (p = 1)")
    if p < 1:
        raise GradingError("p must be at least 1")
    L = heisenberg(p)
    n = 2 * p + 1
    odd = [(-1 if i % 2 == 0 else 1) for i in range(2 * p)]  # -1 on X1, X3, ...
    even = [-x for x in odd]  # -1 on X2, X4, ...
    if name is GradingName.CENTER:
        taus = [_diag_involution([-1] * (2 * p) + [1])]
    elif name is GradingName.SUB:
        if not 1 <= k < p:
            raise GradingError(f"H2p1-Z2-sub needs 1 <= k < p, got k={k}, p={p}")
        taus = [_diag_involution([1] * (2 * k) + [-1] * (2 * p - 2 * k) + [1])]
    elif name in (GradingName.ODD, GradingName.H3_Z2_B):
        # unit component: odd-index X's; the rest, with the center, is negated
        taus = [_diag_involution(even + [-1])]
    elif name in (GradingName.EVEN, GradingName.H3_Z2_A):
        taus = [_diag_involution(odd + [-1])]
    else:
        taus = [_diag_involution(odd + [-1]), _diag_involution(even + [-1])]
    G = grading_from_involutions(L, taus)
    assert G.algebra.dim == n
    return G
