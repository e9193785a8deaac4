"""Invariant affine connections on reductive homogeneous spaces.

A connection is a linear map Lam: m -> gl(m), stored as one matrix per
vector of ``split.m_basis`` (column j of ``maps[i]`` is Lam(Y_i) Y_j in m
coordinates). With [X, Y] = [X, Y]_h + [X, Y]_m,

    T(X, Y) = Lam(X) Y - Lam(Y) X - [X, Y]_m
    R(X, Y) = [Lam(X), Lam(Y)] - Lam([X, Y]_m) - ad([X, Y]_h)|_m
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from ._poly import Branch, Poly, solve_branches
from .gradings import Grading, GradingName, heisenberg_grading, mul
from .lie import bracket
from .linalg import Matrix, Subspace, commutator, solve_affine, to_rational, vec, zero_vector
from .metrics import ReductiveSplit, isotropy_rep, reductive_split


@dataclass(frozen=True, eq=False)
class ConnectionMap:
    split: ReductiveSplit
    maps: tuple[Matrix, ...]

    def __post_init__(self):
        d = self.split.dim_m
        if len(self.maps) != d:
            raise ValueError(f"need {d} matrices, got {len(self.maps)}")
        if any(m.shape != (d, d) for m in self.maps):
            raise ValueError(f"each matrix must be {d}x{d}")

    def of(self, x_m: Sequence) -> Matrix:
        """Lam(x) for x in m coordinates."""
        d = self.split.dim_m
        out = Matrix.zeros(d, d)
        for c, m in zip(vec(x_m), self.maps, strict=True):
            if c:
                out = out + m.scale(c)
        return out

    def apply(self, i: int, j: int) -> tuple:
        """Lam(Y_i) Y_j in m coordinates."""
        return self.maps[i].column(j)

    def __add__(self, other: ConnectionMap) -> ConnectionMap:
        return ConnectionMap(self.split, tuple(a + b for a, b in zip(self.maps, other.maps)))

    def scale(self, c) -> ConnectionMap:
        return ConnectionMap(self.split, tuple(m.scale(c) for m in self.maps))

    def __eq__(self, other) -> bool:
        if not isinstance(other, ConnectionMap):
            return NotImplemented
        return self.split is other.split and self.maps == other.maps

    def __hash__(self):
        return hash(self.maps)


@dataclass(frozen=True)
class PairTensor:
    """Values on ordered pairs (i, j) of m-basis indices.

    Torsion values are m-coordinate vectors, curvature values are matrices.
    """

    values: dict

    def __getitem__(self, ij):
        return self.values[ij]

    def is_zero(self) -> bool:
        return all(_is_zero(v) for v in self.values.values())

    def nonzero(self) -> list:
        return [(ij, v) for ij, v in sorted(self.values.items()) if not _is_zero(v)]

    def is_antisymmetric(self) -> bool:
        for (i, j), v in self.values.items():
            w = self.values[(j, i)]
            if isinstance(v, Matrix):
                if v != -w:
                    return False
            elif tuple(-x for x in w) != tuple(v):
                return False
        return True


def _is_zero(v) -> bool:
    if isinstance(v, Matrix):
        return v.is_zero()
    return all(x == 0 for x in v)


def zero_connection(split: ReductiveSplit) -> ConnectionMap:
    d = split.dim_m
    return ConnectionMap(split, tuple(Matrix.zeros(d, d) for _ in range(d)))


def first_canonical(split: ReductiveSplit) -> ConnectionMap:
    return zero_connection(split)


def second_canonical(split: ReductiveSplit) -> ConnectionMap:
    """Lam(X) Y = [X, Y]_m / 2."""
    d = split.dim_m
    half = Fraction(1, 2)
    maps = []
    for i in range(d):
        cols = [tuple(half * x for x in split.bracket_m(i, j)) for j in range(d)]
        maps.append(Matrix.from_columns(cols, d))
    return ConnectionMap(split, tuple(maps))


def torsion(c: ConnectionMap) -> PairTensor:
    s = c.split
    d = s.dim_m
    vals = {}
    for i in range(d):
        for j in range(d):
            a, b, br = c.apply(i, j), c.apply(j, i), s.bracket_m(i, j)
            vals[(i, j)] = tuple(x - y - z for x, y, z in zip(a, b, br))
    return PairTensor(vals)


def curvature(c: ConnectionMap, isotropy_sign: int = 1) -> PairTensor:
    """Curvature on basis pairs. ``isotropy_sign=-1`` uses -ad for the isotropy term."""
    s = c.split
    d = s.dim_m
    vals = {}
    for i in range(d):
        for j in range(d):
            r = commutator(c.maps[i], c.maps[j]) - c.of(s.bracket_m(i, j))
            hpart = s.bracket_h(i, j)
            if any(hpart):
                r = r - isotropy_rep(s, hpart).scale(isotropy_sign)
            vals[(i, j)] = r
    return PairTensor(vals)


def equivariance_check(c: ConnectionMap, isotropy_sign: int = 1) -> list[str]:
    """Violations of Lam([X, Y]) = [Lam(X), lambda(Y)] for X in m, Y in h."""
    s = c.split
    out = []
    for y in s.h.vectors:
        lam = isotropy_rep(s, y).scale(isotropy_sign)
        for i, x in enumerate(s.m_basis):
            lhs = c.of(s.m_coords(bracket(s.algebra, x, y)))
            rhs = commutator(c.maps[i], lam)
            if lhs != rhs:
                out.append(f"Lam([Y{i + 1}, {_fmt(y)}]) != [Lam(Y{i + 1}), lambda({_fmt(y)})]")
    return out


def _fmt(v) -> str:
    return "(" + ",".join(str(x) for x in v) + ")"


def _check_same_split(c: ConnectionMap, G: Grading) -> None:
    s = c.split
    if G.algebra != s.algebra or G.unit_component != s.h:
        raise ValueError("grading does not match the connection's reductive split")


def _component_blocks(split: ReductiveSplit, G: Grading):
    """[(label, matrix whose columns are the m-coords of the component basis)]."""
    return [(lab, split.subspace_in_m(sub)) for lab, sub in G.nonunit_components()]


def is_adapted(c: ConnectionMap, G: Grading) -> bool:
    """Lam(g_a) g_b lies in g_ab for all non-unit labels a, b."""
    _check_same_split(c, G)
    s = c.split
    blocks = _component_blocks(s, G)
    targets = {lab: Subspace.span(cols.columns, s.dim_m) for lab, cols in blocks}
    zero = Subspace.zero(s.dim_m)
    for (la, ca), (lb, cb) in itertools.product(blocks, repeat=2):
        target = targets.get(mul(la, lb), zero)
        for x in ca.columns:
            lx = c.of(x)
            for y in cb.columns:
                if not target.contains(lx @ y):
                    return False
    return True


def is_homogeneous(c: ConnectionMap, G: Grading) -> bool:
    """Every Lam(Y_i) maps each component into itself."""
    _check_same_split(c, G)
    s = c.split
    blocks = _component_blocks(s, G)
    for m in c.maps:
        for _, cols in blocks:
            sub = Subspace.span(cols.columns, s.dim_m)
            if not all(sub.contains(m @ y) for y in cols.columns):
                return False
    return True


# -- the flat family on h_{2p+1} -----------------------------------------------


def heisenberg_z22_split(p: int) -> ReductiveSplit:
    return reductive_split(heisenberg_grading(GradingName.Z22, p))


def heisenberg_flat_family(p: int, C: Sequence[Sequence], split: ReductiveSplit | None = None) -> ConnectionMap:
    """The torsion-free flat adapted connection on h_{2p+1} with parameters C.

    C is p x p; C[k][s-1] is the coefficient of Lam(X_{2k+1}) X_{2s} along the
    center (k = 0..p-1, s = 1..p, 1-based X indices). Then
    Lam(X_{2s}) X_{2k+1} = C[k][s-1] X_{2p+1} for k != s-1 and
    Lam(X_{2s}) X_{2s-1} = (C[s-1][s-1] - 1) X_{2p+1}; everything else is 0.
    """
    if p < 1:
        raise ValueError("p must be at least 1")
    if len(C) != p or any(len(row) != p for row in C):
        raise ValueError(f"C must be {p}x{p}")
    C = [[to_rational(x) for x in row] for row in C]
    split = split or heisenberg_z22_split(p)
    n = 2 * p + 1
    z = n - 1
    a = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]  # a[i][row][col]
    for k in range(p):
        for s in range(1, p + 1):
            odd, even = 2 * k, 2 * s - 1  # 0-based indices of X_{2k+1}, X_{2s}
            a[odd][z][even] = C[k][s - 1]
            a[even][z][odd] = C[k][s - 1] - 1 if k == s - 1 else C[k][s - 1]
    return ConnectionMap(split, tuple(Matrix(x) for x in a))


def in_flat_family(c: ConnectionMap, p: int) -> bool:
    """Whether c equals heisenberg_flat_family(p, C) for the C read off c."""
    C = [[c.maps[2 * k][2 * p, 2 * s - 1] for s in range(1, p + 1)] for k in range(p)]
    return c.maps == heisenberg_flat_family(p, C, c.split).maps


# -- solving for torsion-free adapted connections ------------------------------


class Unknown(NamedTuple):
    """The coefficient of w_row in Lam(w_src) w_arg, in a frame w adapted to the grading."""

    src: int
    arg: int
    row: int


class ConnectionFamily(NamedTuple):
    """particular + span(directions): the affine space of solutions."""

    particular: ConnectionMap
    directions: tuple[ConnectionMap, ...]
    unknowns: tuple[Unknown, ...]
    frame: Matrix  # columns: the adapted frame w in m coordinates
    names: tuple[str, ...]

    def contains(self, c: ConnectionMap) -> bool:
        diff = [x - y for x, y in zip(_flatten(c), _flatten(self.particular))]
        if not self.directions:
            return all(x == 0 for x in diff)
        return Subspace.span([_flatten(d) for d in self.directions], len(diff)).contains(diff)

    def member(self, coeffs: Sequence) -> ConnectionMap:
        out = self.particular
        for t, d in zip(coeffs, self.directions, strict=True):
            out = out + d.scale(t)
        return out


def _flatten(c: ConnectionMap) -> tuple:
    return tuple(x for m in c.maps for r in m.rows for x in r)


def _adapted_frame(split: ReductiveSplit, G: Grading | None):
    """Columns of the frame, the label of each column, and the blocks per label."""
    d = split.dim_m
    if G is None:
        return Matrix.identity(d), [None] * d
    cols, labs = [], []
    for lab, block in _component_blocks(split, G):
        for col in block.columns:
            cols.append(col)
            labs.append(lab)
    return Matrix.from_columns(cols, d), labs


def _pattern(labs, adapted: bool, d: int) -> list[Unknown]:
    out = []
    for a in range(d):
        for b in range(d):
            for r in range(d):
                if adapted and labs[r] != mul(labs[a], labs[b]):
                    continue
                out.append(Unknown(a, b, r))
    return out


def _connection_from_frame(
    split: ReductiveSplit, frame: Matrix, lam_w: list[list[list[Fraction]]], finv: Matrix | None = None
) -> ConnectionMap:
    """Convert Lam given in the frame (lam_w[a][row][col]) to m coordinates."""
    d = split.dim_m
    if finv is None:
        finv = frame.inverse()
    mats_w = [Matrix(x) for x in lam_w]
    maps = []
    for i in range(d):
        acc = Matrix.zeros(d, d)
        for a in range(d):
            if finv[a, i]:
                acc = acc + mats_w[a].scale(finv[a, i])
        maps.append(frame @ acc @ finv)
    return ConnectionMap(split, tuple(maps))


def _unit_connection(split, frame, u: Unknown | None, finv: Matrix | None = None) -> ConnectionMap:
    d = split.dim_m
    lam = [[[Fraction(0)] * d for _ in range(d)] for _ in range(d)]
    if u is not None:
        lam[u.src][u.row][u.arg] = Fraction(1)
    return _connection_from_frame(split, frame, lam, finv)


def _residual(c: ConnectionMap) -> list[Fraction]:
    """Torsion (i < j) and the equivariance defect, flattened."""
    s = c.split
    d = s.dim_m
    t = torsion(c)
    out = [x for i in range(d) for j in range(i + 1, d) for x in t[(i, j)]]
    for y in s.h.vectors:
        lam = isotropy_rep(s, y)
        for i, x in enumerate(s.m_basis):
            lhs = c.of(s.m_coords(bracket(s.algebra, x, y)))
            out.extend(v for row in (lhs - commutator(c.maps[i], lam)).rows for v in row)
    return out


def _name(u: Unknown) -> str:
    return f"L(w{u.src + 1})w{u.arg + 1}[w{u.row + 1}]"


def torsion_free_adapted_space(G: Grading, adapted: bool = True) -> ConnectionFamily:
    """All torsion-free (and, when h != 0, h-equivariant) connections
    following the adapted pattern of G, as an affine space.

    With ``adapted=False`` every entry of Lam is unknown.
    """
    split = reductive_split(G)
    d = split.dim_m
    frame, labs = _adapted_frame(split, G)
    if not adapted:
        labs = [None] * d
    unknowns = _pattern(labs, adapted, d)
    finv = frame.inverse()
    base = _unit_connection(split, frame, None, finv)
    r0 = _residual(base)
    cols = []
    units = []
    for u in unknowns:
        cu = _unit_connection(split, frame, u, finv)
        units.append(cu)
        cols.append([x - y for x, y in zip(_residual(cu), r0)])
    names = tuple(_name(u) for u in unknowns)
    if not unknowns:
        if any(r0):
            raise ValueError("no connection with this pattern is torsion-free")
        return ConnectionFamily(base, (), (), frame, names)
    a = Matrix.from_columns(cols, len(r0)) if r0 else Matrix.zeros(0, len(unknowns))
    sol = solve_affine(a, [-x for x in r0]) if r0 else None
    if r0 and sol is None:
        raise ValueError("no torsion-free connection follows this pattern")
    if sol is None:
        particular_v, hom = zero_vector(len(unknowns)), Subspace.full(len(unknowns))
    else:
        particular_v, hom = sol

    def combine(v):
        out = zero_connection(split)
        for t, cu in zip(v, units):
            if t:
                out = out + cu.scale(t)
        return out

    # the residual map is affine, the zero connection contributes r0 only
    particular = combine(particular_v)
    directions = tuple(combine(h) for h in hom.vectors)
    return ConnectionFamily(particular, directions, tuple(unknowns), frame, names)


# -- flatness on top of torsion-freeness ---------------------------------------


def _poly_curvature(family: ConnectionFamily) -> tuple[int, list[Poly]]:
    """Curvature entries of particular + sum t_i directions_i as polynomials in t."""
    split = family.particular.split
    d = split.dim_m
    nv = len(family.directions)

    def pm(m: Matrix) -> list[list[Poly]]:
        return [[Poly.const(nv, x) for x in r] for r in m.rows]

    lam: list[list[list[Poly]]] = []
    for i in range(d):
        acc = pm(family.particular.maps[i])
        for t, dirn in enumerate(family.directions):
            mi = dirn.maps[i]
            tv = Poly.var(nv, t)
            acc = [[acc[r][q] + tv * mi[r, q] if mi[r, q] else acc[r][q] for q in range(d)] for r in range(d)]
        lam.append(acc)

    def matmul(x, y):
        return [[sum((x[r][k] * y[k][q] for k in range(d)), Poly(nv)) for q in range(d)] for r in range(d)]

    eqs: list[Poly] = []
    for i in range(d):
        for j in range(i + 1, d):
            ab, ba = matmul(lam[i], lam[j]), matmul(lam[j], lam[i])
            bm = split.bracket_m(i, j)
            hpart = split.bracket_h(i, j)
            iso = isotropy_rep(split, hpart) if any(hpart) else Matrix.zeros(d, d)
            for r in range(d):
                for q in range(d):
                    e = ab[r][q] - ba[r][q] - iso[r, q]
                    for k, w in enumerate(bm):
                        if w:
                            e = e - lam[k][r][q] * w
                    eqs.append(e)
    return nv, eqs


class FlatBranch(NamedTuple):
    choices: tuple[str, ...]
    free: tuple[str, ...]
    values: dict  # unknown name -> expression in the free parameters


class FlatEnumeration(NamedTuple):
    p: int
    parameters: tuple[str, ...]
    branches: tuple[FlatBranch, ...]
    every_branch_in_family: bool
    family_covered: bool

    @property
    def matches_family(self) -> bool:
        return self.every_branch_in_family and self.family_covered


def _branch_entry_polys(family: ConnectionFamily, br: Branch, nv: int):
    """Lam(Y_i) entries (m coordinates) as polynomials on this branch."""
    split = family.particular.split
    d = split.dim_m
    tvals = [br.value(t, nv) for t in range(nv)]
    out = {}
    for i in range(d):
        for r in range(d):
            for q in range(d):
                e = Poly.const(nv, family.particular.maps[i][r, q])
                for t, dirn in enumerate(family.directions):
                    x = dirn.maps[i][r, q]
                    if x:
                        e = e + tvals[t] * x
                out[(i, r, q)] = e
    return out


def flat_torsion_free_branches(p: int) -> FlatEnumeration:
    """Enumerate flat, torsion-free adapted connections on h_{2p+1} (Z_2^2-grading).

    Solves T = 0 exactly, then splits R = 0 into affine branches, and checks
    that the union of the branches is exactly the family of
    :func:`heisenberg_flat_family`.
    """
    G = heisenberg_grading(GradingName.Z22, p)
    fam = torsion_free_adapted_space(G)
    nv, eqs = _poly_curvature(fam)
    pnames = [f"t{i + 1}" for i in range(nv)]
    branches = solve_branches(eqs, nv, pnames)
    z = 2 * p
    in_family = True
    covered = False
    reports = []
    for br in branches:
        ent = _branch_entry_polys(fam, br, nv)
        ok = True
        c_entries = []
        for (i, r, q), e in ent.items():
            odd_src, odd_arg = i % 2 == 0 and i < z, q % 2 == 0 and q < z
            if r == z and i < z and q < z and odd_src != odd_arg:
                if odd_src:
                    c_entries.append(e)
                    continue
                # Lam(X_{2s}) X_{2k+1}: compare with Lam(X_{2k+1}) X_{2s}
                k, s = q // 2, (i + 1) // 2
                partner = ent[(2 * k, z, 2 * s - 1)]
                want = partner - 1 if k == s - 1 else partner
                if not (e - want).is_zero():
                    ok = False
            elif not e.is_zero():
                ok = False
        in_family = in_family and ok
        # the C entries must be independent affine functions of the free parameters
        if ok and all(e.degree <= 1 for e in c_entries):
            jac = [[e.linear_coeff(f) for f in br.free] for e in c_entries]
            if jac and Matrix(jac).rank() == p * p:
                covered = True
        values = {}
        for t in range(nv):
            values[pnames[t]] = br.value(t, nv).to_str(pnames)
        reports.append(FlatBranch(br.choices, tuple(pnames[f] for f in br.free), values))
    return FlatEnumeration(p, tuple(pnames), tuple(reports), in_family, covered)


def h3_flat_enumeration() -> FlatEnumeration:
    return flat_torsion_free_branches(1)


# -- the 5-dimensional filiform example ----------------------------------------


def l5_split() -> ReductiveSplit:
    """l_5 with h = span{X3, X5}, m = span{X1, X2, X4}."""
    from .gradings import grading_from_involutions
    from .lie import filiform_l5

    L = filiform_l5()
    G = grading_from_involutions(L, [Matrix.diag(-1, -1, 1, -1, 1)])
    return reductive_split(G)


def l5_printed_matrices(a, b, c, d, e, f) -> tuple[Matrix, Matrix, Matrix]:
    """The three 3x3 matrices printed for the l_5 example, in print order."""
    a, b, c, d, e, f = (to_rational(x) for x in (a, b, c, d, e, f))
    return (
        Matrix([[a, 0, 0], [b, 0, 0], [c, d, a / 2]]),
        Matrix([[0, 0, 0], [0, e, 0], [d, f, a / 2]]),
        Matrix([[0, 0, 0], [0, 0, 0], [-a / 2, 0, 0]]),
    )


L5_PRINTED_ISOTROPY_X3 = Matrix([[0, 0, 0], [0, 0, 0], [1, 0, 0]])


def l5_connection(params: Sequence, transpose: bool = False) -> ConnectionMap:
    """Read the printed matrices as Lam(X1), Lam(X2), Lam(X4).

    ``transpose=False`` takes columns as images (Lam(Y_i) Y_j = column j);
    ``transpose=True`` takes rows as images.
    """
    mats = l5_printed_matrices(*params)
    if transpose:
        mats = tuple(m.T for m in mats)
    return ConnectionMap(l5_split(), mats)


class L5Reading(NamedTuple):
    transpose: bool
    isotropy_sign: int
    torsion_free: bool
    equivariant: bool
    curvature_nonzero: bool
    witness: str  # a nonvanishing curvature entry


class L5Report(NamedTuple):
    samples: tuple[tuple, ...]
    isotropy_matches_print: int  # the sign s for which s * ad(X3)|_m equals the printed matrix
    readings: dict  # (transpose, sign, sample) -> L5Reading


def l5_scenario(samples: Sequence[Sequence] | None = None) -> L5Report:
    """Evaluate the printed l_5 connection family at sample parameters.

    Every combination of matrix orientation and isotropy sign is evaluated
    for torsion, equivariance and curvature.
    """
    if samples is None:
        samples = ((0, 0, 0, 0, 0, 0), (2, 0, 0, 0, 0, 0), (1, 2, 3, 4, 5, 6), (0, 1, -1, 2, 3, -2), (-3, 1, 0, 5, -1, 2))
    split = l5_split()
    iso = isotropy_rep(split, (0, 0, 1, 0, 0))
    match = 1 if iso == L5_PRINTED_ISOTROPY_X3 else (-1 if iso.scale(-1) == L5_PRINTED_ISOTROPY_X3 else 0)
    readings = {}
    for sample in samples:
        sample = tuple(to_rational(x) for x in sample)
        for transpose in (False, True):
            c = l5_connection(sample, transpose)
            tf = torsion(c).is_zero()
            for sign in (1, -1):
                eq = not equivariance_check(c, sign)
                R = curvature(c, sign)
                nz = R.nonzero()
                wit = ""
                if nz:
                    (i, j), m = nz[0]
                    r, q = next((r, q) for r in range(3) for q in range(3) if m[r, q])
                    wit = f"R(Y{i + 1},Y{j + 1})[{r + 1},{q + 1}] = {m[r, q]}"
                readings[(transpose, sign, sample)] = L5Reading(transpose, sign, tf, eq, bool(nz), wit)
    return L5Report(tuple(tuple(to_rational(x) for x in s) for s in samples), match, readings)
