"""Reductive splits, invariant symmetric forms and their classification.

Forms are written in the coordinates of ``split.m_basis``, which is the
canonical (reduced echelon) basis of m. When the unit component is zero,
m is the whole algebra and the coordinates are the algebra's own basis.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import NamedTuple, Sequence

from .aut_h3 import H3, gamma7_generators
from .gradings import Grading, GradingError, check_grading, grading_from_involutions, label_str
from .lie import LieAlgebra, bracket, center, is_automorphism
from .linalg import (
    Matrix,
    Signature,
    Subspace,
    intersect,
    kernel,
    lincomb,
    rational_sqrt,
    signature,
    to_rational,
    vec,
)


class SplitError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class ReductiveSplit:
    """g = h + m with [h, h] in h and [h, m] in m."""

    algebra: LieAlgebra
    h: Subspace
    m: Subspace
    grading: Grading | None = field(default=None)

    def __post_init__(self):
        L = self.algebra
        n = L.dim
        if self.h.ambient_dim != n or self.m.ambient_dim != n:
            raise SplitError("subspaces live in the wrong ambient space")
        if self.h.dim + self.m.dim != n or not intersect(self.h, self.m).is_zero():
            raise SplitError("h and m are not complementary")
        for u in self.h.vectors:
            for v in self.h.vectors:
                if not self.h.contains(bracket(L, u, v)):
                    raise SplitError("[h, h] is not contained in h")
            for v in self.m.vectors:
                if not self.m.contains(bracket(L, u, v)):
                    raise SplitError("[h, m] is not contained in m")

    @property
    def m_basis(self) -> tuple[tuple[Fraction, ...], ...]:
        return self.m.vectors

    @property
    def dim_m(self) -> int:
        return self.m.dim

    @cached_property
    def _to_split_coords(self) -> Matrix:
        cols = list(self.h.vectors) + list(self.m.vectors)
        return Matrix.from_columns(cols, self.algebra.dim).inverse()

    def decompose(self, v: Sequence) -> tuple[tuple, tuple]:
        """(h-part as an ambient vector, m-part in m coordinates)."""
        c = self._to_split_coords @ vec(v)
        dh = self.h.dim
        h_part = lincomb(c[:dh], self.h.vectors, self.algebra.dim)
        return h_part, c[dh:]

    def m_coords(self, v: Sequence) -> tuple:
        h_part, mc = self.decompose(v)
        if any(h_part):
            raise SplitError("vector is not in m")
        return mc

    def from_m_coords(self, c: Sequence) -> tuple:
        return lincomb(vec(c), self.m.vectors, self.algebra.dim)

    @cached_property
    def _brackets(self) -> dict:
        mb = self.m_basis
        return {
            (i, j): self.decompose(bracket(self.algebra, mb[i], mb[j]))
            for i in range(len(mb))
            for j in range(len(mb))
        }

    def bracket_m(self, i: int, j: int) -> tuple:
        """m-coordinates of [Y_i, Y_j]_m."""
        return self._brackets[(i, j)][1]

    def bracket_h(self, i: int, j: int) -> tuple:
        """[Y_i, Y_j]_h as an ambient vector."""
        return self._brackets[(i, j)][0]

    def subspace_in_m(self, s: Subspace) -> Matrix:
        """Columns are the m-coordinates of the basis of s (which must lie in m)."""
        return Matrix.from_columns([self.m_coords(v) for v in s.vectors], self.dim_m)


def reductive_split(G: Grading) -> ReductiveSplit:
    """h = unit component, m = sum of the other components."""
    bad = check_grading(G)
    if bad:
        raise GradingError(f"not a grading: {bad[0]}")
    n = G.algebra.dim
    m = Subspace.span([v for _, s in G.nonunit_components() for v in s.vectors], n)
    return ReductiveSplit(G.algebra, G.unit_component, m, G)


def isotropy_rep(split: ReductiveSplit, z: Sequence) -> Matrix:
    """Matrix (in m coordinates) of X -> [z, X]_m for z in h."""
    z = vec(z)
    if not split.h.contains(z):
        raise SplitError("z is not in h")
    cols = [split.decompose(bracket(split.algebra, z, y))[1] for y in split.m_basis]
    return Matrix.from_columns(cols, split.dim_m)


@dataclass(frozen=True, eq=False)
class SymBilinearForm:
    matrix: Matrix
    split: ReductiveSplit

    def __post_init__(self):
        d = self.split.dim_m
        if self.matrix.shape != (d, d):
            raise ValueError(f"form must be {d}x{d} on this split")
        if not self.matrix.is_symmetric():
            raise ValueError("form is not symmetric")

    def __call__(self, u_m: Sequence, v_m: Sequence) -> Fraction:
        """B(u, v) for u, v given in m coordinates."""
        from .linalg import dot

        return dot(vec(u_m), self.matrix @ vec(v_m))

    def restrict(self, s: Subspace) -> Matrix:
        """Gram matrix of B on the basis of s."""
        c = self.split.subspace_in_m(s)
        return c.T @ self.matrix @ c

    def cross(self, s: Subspace, t: Subspace) -> Matrix:
        return self.split.subspace_in_m(s).T @ self.matrix @ self.split.subspace_in_m(t)

    @property
    def signature(self) -> Signature:
        return signature(self.matrix)


class FormSpace(NamedTuple):
    split: ReductiveSplit
    basis: tuple[Matrix, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, b: Matrix) -> bool:
        if not self.basis:
            return b.is_zero()
        flat = [_flatten_sym(x) for x in self.basis]
        return Subspace.span(flat, len(flat[0])).contains(_flatten_sym(b))

    def combination(self, coeffs: Sequence) -> Matrix:
        d = self.split.dim_m
        out = Matrix.zeros(d, d)
        for c, b in zip(coeffs, self.basis, strict=True):
            out = out + b.scale(c)
        return out


def _sym_index(d: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(d) for j in range(i, d)]


def _flatten_sym(b: Matrix) -> tuple:
    return tuple(b[i, j] for i, j in _sym_index(b.nrows))


def _unflatten_sym(x: Sequence, d: int) -> Matrix:
    a = [[Fraction(0)] * d for _ in range(d)]
    for (i, j), v in zip(_sym_index(d), x):
        a[i][j] = a[j][i] = v
    return Matrix(a)


def invariant_form_space(split: ReductiveSplit, orthogonality: Grading | None = None) -> FormSpace:
    """Basis of symmetric B on m with B([Z,X],Y) + B(X,[Z,Y]) = 0 for Z in h.

    With ``orthogonality``, distinct non-unit components are also required to
    be B-orthogonal.
    """
    d = split.dim_m
    idx = _sym_index(d)
    pos = {ij: t for t, ij in enumerate(idx)}

    def var(i, j):
        return pos[(min(i, j), max(i, j))]

    rows = []
    for z in split.h.vectors:
        a = isotropy_rep(split, z)
        # (A^T B + B A)_{ij} = sum_k A[k,i] B[k,j] + B[i,k] A[k,j]
        for i, j in idx:
            row = [Fraction(0)] * len(idx)
            for k in range(d):
                if a[k, i]:
                    row[var(k, j)] += a[k, i]
                if a[k, j]:
                    row[var(i, k)] += a[k, j]
            rows.append(row)
    if orthogonality is not None:
        comps = orthogonality.nonunit_components()
        for (la, sa), (lb, sb) in itertools.combinations(comps, 2):
            ca, cb = split.subspace_in_m(sa), split.subspace_in_m(sb)
            for u in ca.columns:
                for v in cb.columns:
                    row = [Fraction(0)] * len(idx)
                    for i in range(d):
                        for j in range(d):
                            if u[i] and v[j]:
                                row[var(i, j)] += u[i] * v[j]
                    rows.append(row)
    if rows:
        sol = kernel(Matrix(rows))
    else:
        sol = Subspace.full(len(idx))
    return FormSpace(split, tuple(_unflatten_sym(v, d) for v in sol.vectors))


def common_radical(fs: FormSpace) -> Subspace:
    """Ambient subspace of m-vectors annihilated by every form in the space.

    A nonzero result means every form in the space is degenerate.
    """
    split = fs.split
    d = split.dim_m
    if not fs.basis:
        rad_m = Subspace.full(d)
    else:
        stacked = fs.basis[0]
        for b in fs.basis[1:]:
            stacked = stacked.vstack(b)
        rad_m = kernel(stacked)
    return Subspace.span([split.from_m_coords(v) for v in rad_m.vectors], split.algebra.dim)


class MetricKind(enum.Enum):
    RIEMANNIAN = "RiemannianZ2k"
    LORENTZIAN_I = "LorentzianCaseI"
    LORENTZIAN_II = "LorentzianCaseII"
    PSEUDO = "PseudoRiemannian"
    DEGENERATE = "NoneDegenerate"


@dataclass(frozen=True)
class MetricVerdict:
    kind: MetricKind
    signature: Signature
    restrictions: dict = field(default_factory=dict)  # label -> Signature
    orthogonal: bool = True
    detail: dict = field(default_factory=dict)

    def __str__(self) -> str:
        if self.kind is MetricKind.PSEUDO:
            return f"PseudoRiemannian({self.signature.positive},{self.signature.negative})"
        return self.kind.value


def classify_metric(B: SymBilinearForm, G: Grading) -> MetricVerdict:
    """Sort B into the Riemannian / Lorentzian (case I, II) symmetric cases.

    Case II additionally needs the degenerate component to meet the center of
    the algebra; a degenerate non-central component is reported as a generic
    pseudo-Riemannian form with a note in ``detail``.
    """
    split = B.split
    comps = G.nonunit_components()
    d = split.dim_m
    sig = B.signature
    restr = {lab: signature(B.restrict(s)) for lab, s in comps}
    nonorth = [
        (la, lb) for (la, sa), (lb, sb) in itertools.combinations(comps, 2) if not B.cross(sa, sb).is_zero()
    ]
    orthogonal = not nonorth
    degenerate = [lab for lab, s in restr.items() if s.null > 0]

    def verdict(kind, **detail):
        return MetricVerdict(kind, sig, restr, orthogonal, detail)

    if sig.null > 0:
        return verdict(MetricKind.DEGENERATE)
    if orthogonal and sig == Signature(d, 0, 0):
        return verdict(MetricKind.RIEMANNIAN)
    if sig == Signature(d - 1, 1, 0):
        if orthogonal and not degenerate:
            return verdict(MetricKind.LORENTZIAN_I)
        if len(degenerate) == 1:
            l0 = degenerate[0]
            others_orth = all(l0 in pair for pair in nonorth)
            partners = []
            s0 = G[l0]
            for lab, s in comps:
                if lab == l0:
                    continue
                ss = signature(B.restrict(s0 + s))
                if ss.positive == 1 and ss.negative == 1:
                    partners.append(lab)
            if others_orth and partners:
                central = not intersect(s0, center(G.algebra)).is_zero()
                if central:
                    return verdict(
                        MetricKind.LORENTZIAN_II, degenerate=label_str(l0), partner=label_str(partners[0])
                    )
                return verdict(
                    MetricKind.PSEUDO,
                    degenerate=label_str(l0),
                    partner=label_str(partners[0]),
                    note="degenerate component misses the center; reducible to case I by an automorphism",
                )
    return verdict(MetricKind.PSEUDO)


def pullback(tau: Matrix, B: SymBilinearForm) -> SymBilinearForm:
    """(x, y) -> B(tau x, tau y), for tau preserving m."""
    split = B.split
    if not split.m.image(tau) == split.m:
        raise SplitError("tau does not preserve m")
    tm = Matrix.from_columns([split.m_coords(tau @ y) for y in split.m_basis], split.dim_m)
    return SymBilinearForm(tm.T @ B.matrix @ tm, split)


# -- h_3 with the Z_2^2-grading Gamma_7(0, 0, 0) -----------------------------


def h3_z22_grading(a3=0, a5=0, a6=0) -> Grading:
    return grading_from_involutions(H3, list(gamma7_generators(a3, a5, a6)))


def h3_z22_split() -> ReductiveSplit:
    return reductive_split(h3_z22_grading())


def h3_form(matrix) -> SymBilinearForm:
    """A form on h_3 (h = 0) in the coordinates X1, X2, X3."""
    m = matrix if isinstance(matrix, Matrix) else Matrix(matrix)
    return SymBilinearForm(m, h3_z22_split())


class RiemannianNormalForm(NamedTuple):
    lambda_sq: Fraction
    witness: Matrix | None


def riemannian_invariant_h3(B: SymBilinearForm) -> RiemannianNormalForm:
    """For B = diag(a1, a2, a3) > 0, the normal-form parameter a3 / (a1 a2).

    When a1 and a2 are rational squares the witness automorphism
    diag(1/sqrt a1, 1/sqrt a2, 1/sqrt(a1 a2)) is returned; it pulls B back to
    diag(1, 1, lambda^2).
    """
    m = B.matrix
    if m.shape != (3, 3) or not m.is_diagonal():
        raise ValueError("expected a diagonal form on h_3")
    a1, a2, a3 = m.diagonal()
    if min(a1, a2, a3) <= 0:
        raise ValueError("form is not positive definite")
    lam2 = a3 / (a1 * a2)
    r1, r2 = rational_sqrt(a1), rational_sqrt(a2)
    witness = None
    if r1 is not None and r2 is not None:
        witness = Matrix.diag(1 / r1, 1 / r2, 1 / (r1 * r2))
    return RiemannianNormalForm(lam2, witness)


class LorentzTag(enum.Enum):
    NEG_ON_PLANE = "NegOnPlane"
    NEG_ON_CENTER = "NegOnCenter"
    CASE_II = "CaseII"


CASE_II_NORMAL_FORM = Matrix([[1, 0, 0], [0, -1, 1], [0, 1, 0]])


class LorentzNormalForm(NamedTuple):
    tag: LorentzTag
    lambda_sq: Fraction | None
    normal_form: Matrix


def lorentzian_normal_form_h3(B: SymBilinearForm) -> LorentzNormalForm:
    """Reduce a Lorentzian Z_2^2-symmetric form on h_3 to its normal form.

    Case I (diagonal diag(l1, l2, l3)) gives -w1^2 + w2^2 + lambda^2 w3^2 when
    the negative entry sits on the X1, X2 plane and w1^2 + w2^2 - lambda^2 w3^2
    when it sits on the center, with lambda^2 = |l3| / (|l1| |l2|). Case II
    gives w1^2 + w3^2 - (w2 - w3)^2.
    """
    G = h3_z22_grading()
    if B.split.algebra != H3 or not B.split.h.is_zero():
        raise ValueError("expected a form on h_3 with trivial h")
    v = classify_metric(B, G)
    if v.kind is MetricKind.LORENTZIAN_I:
        l1, l2, l3 = B.matrix.diagonal()
        lam2 = abs(l3) / (abs(l1) * abs(l2))
        if l3 < 0:
            return LorentzNormalForm(LorentzTag.NEG_ON_CENTER, lam2, Matrix.diag(1, 1, -lam2))
        return LorentzNormalForm(LorentzTag.NEG_ON_PLANE, lam2, Matrix.diag(-1, 1, lam2))
    if v.kind is MetricKind.LORENTZIAN_II:
        return LorentzNormalForm(LorentzTag.CASE_II, None, CASE_II_NORMAL_FORM)
    raise ValueError(f"form is not Lorentzian Z_2^2-symmetric on h_3 (got {v})")


def lorentzian_case1_witness(B: SymBilinearForm) -> Matrix | None:
    """Automorphism pulling a diagonal Case I form onto its normal form, if rational.

    A swap of X1 and X2 (which negates X3) moves a negative entry from X2 to X1.
    """
    l1, l2, l3 = B.matrix.diagonal()
    swap = Matrix([[0, 1, 0], [1, 0, 0], [0, 0, -1]])
    pre = Matrix.identity(3)
    if l3 > 0 and l2 < 0:
        pre = swap
        l1, l2 = l2, l1
    r1, r2 = rational_sqrt(abs(l1)), rational_sqrt(abs(l2))
    if r1 is None or r2 is None:
        return None
    return pre @ Matrix.diag(1 / r1, 1 / r2, 1 / (r1 * r2))


def case_ii_expansion() -> Matrix:
    """Matrix of w1^2 + w3^2 - (w2 - w3)^2 obtained by expanding the squares."""
    terms = [(1, (1, 0, 0)), (1, (0, 0, 1)), (-1, (0, 1, -1))]
    a = [[Fraction(0)] * 3 for _ in range(3)]
    for c, w in terms:
        for i in range(3):
            for j in range(3):
                a[i][j] += c * w[i] * w[j]
    return Matrix(a)


# -- the change of frame adapted to Gamma_7(a3, a5, a6) -----------------------


def gamma7_frame(a3, a5, a6) -> Matrix:
    """Columns Y1, Y2, Y3 spanning the components of the Gamma_7(a3, a5, a6) grading.

    Y1 = X1 - a3/2 X2 + a5/2 X3, Y2 = X2 + a6/2 X3, Y3 = X3.
    """
    a3, a5, a6 = (to_rational(x) for x in (a3, a5, a6))
    return Matrix([[1, 0, 0], [-a3 / 2, 1, 0], [a5 / 2, a6 / 2, 1]])


def gamma7_dual_coframe(a3, a5, a6) -> Matrix:
    """Rows are the dual forms written in w1, w2, w3:

    t1 = w1, t2 = w2 + a3/2 w1, t3 = w3 - a6/2 w2 - (a3 a6/4 + a5/2) w1.
    """
    a3, a5, a6 = (to_rational(x) for x in (a3, a5, a6))
    return Matrix([[1, 0, 0], [a3 / 2, 1, 0], [-(a3 * a6 / 4 + a5 / 2), -a6 / 2, 1]])


def dual_change_check(samples: Sequence[tuple] = ((0, 0, 0), (2, 0, 0), (2, 4, 6), (1, -3, 5), (-3, 1, 2))) -> bool:
    """Check the frame of :func:`gamma7_frame` against its dual coframe.

    For each (a3, a5, a6): the coframe is the inverse of the frame, each Y_i
    spans the matching component of the Gamma_7 grading, and the coframe
    matrix is an automorphism of h_3.
    """
    for a3, a5, a6 in samples:
        frame = gamma7_frame(a3, a5, a6)
        coframe = gamma7_dual_coframe(a3, a5, a6)
        if coframe @ frame != Matrix.identity(3):
            return False
        if not is_automorphism(H3, coframe) or not is_automorphism(H3, frame):
            return False
        G = h3_z22_grading(a3, a5, a6)
        y1, y2, y3 = frame.columns
        if G[(-1, 1)] != Subspace.span([y1], 3):
            return False
        if G[(1, -1)] != Subspace.span([y2], 3):
            return False
        if G[(-1, -1)] != Subspace.span([y3], 3):
            return False
    return True


def positive_definite(m: Matrix) -> bool:
    return signature(m) == Signature(m.nrows, 0, 0)
