"""Finite-dimensional real Lie algebras given by rational structure constants.

Basis vectors are indexed from 0 in Python (``e0`` is the usual
``X_1``). Algebra files use 1-based indices so they read like the usual
``[X_1, X_2] = X_3`` notation.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from pathlib import Path
from typing import Mapping, Sequence

from .linalg import Matrix, Subspace, Vector, kernel, to_rational, unit_vector, vec


class AlgebraFormatError(ValueError):
    """An algebra file could not be parsed."""


class StructureConstantError(ValueError):
    """Structure constants parse but do not define a Lie algebra."""


@dataclass(frozen=True, eq=False)
class LieAlgebra:
    """Structure constants c[i][j][k] with [e_i, e_j] = sum_k c[i][j][k] e_k.

    Both (i, j) and (j, i) are stored. Antisymmetry is enforced on
    construction; the Jacobi identity is not (see :func:`check_jacobi`).
    """

    dim: int
    structure: tuple
    name: str = field(default="")

    def __post_init__(self):
        n = self.dim
        c = self.structure
        if len(c) != n or any(len(ci) != n or any(len(cij) != n for cij in ci) for ci in c):
            raise ValueError(f"structure tensor must be {n}x{n}x{n}")
        for i in range(n):
            if any(c[i][i]):
                raise ValueError(f"[e{i}, e{i}] != 0")
            for j in range(i + 1, n):
                if any(a != -b for a, b in zip(c[i][j], c[j][i])):
                    raise ValueError(f"structure constants not antisymmetric at ({i},{j})")

    @classmethod
    def from_brackets(
        cls, dim: int, brackets: Mapping[tuple[int, int], Mapping[int, object]], name: str = ""
    ) -> LieAlgebra:
        """Build from ``{(i, j): {k: coeff}}`` with 0-based indices.

        Only one of (i, j), (j, i) needs to be listed; if both are, they must
        agree up to sign.
        """
        c = [[[Fraction(0)] * dim for _ in range(dim)] for _ in range(dim)]
        seen: dict[tuple[int, int], Vector] = {}
        for (i, j), coeffs in brackets.items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise ValueError(f"bracket index ({i},{j}) out of range for dim {dim}")
            v = [Fraction(0)] * dim
            for k, x in coeffs.items():
                if not 0 <= k < dim:
                    raise ValueError(f"coefficient index {k} out of range for dim {dim}")
                v[k] += to_rational(x)
            if i == j:
                if any(v):
                    raise ValueError(f"[e{i}, e{i}] must vanish")
                continue
            key = (min(i, j), max(i, j))
            signed = tuple(v) if i < j else tuple(-x for x in v)
            if key in seen and seen[key] != signed:
                raise ValueError(f"inconsistent brackets for pair {key}: not antisymmetric")
            seen[key] = signed
        for (i, j), v in seen.items():
            c[i][j] = list(v)
            c[j][i] = [-x for x in v]
        return cls(dim, _freeze(c), name)

    def basis_vector(self, i: int) -> Vector:
        return unit_vector(self.dim, i)

    def bracket_basis(self, i: int, j: int) -> Vector:
        return self.structure[i][j]

    def bracket(self, x: Sequence, y: Sequence) -> Vector:
        return bracket(self, x, y)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return self.dim == other.dim and self.structure == other.structure

    def __hash__(self) -> int:
        return hash((self.dim, self.structure))

    def __repr__(self) -> str:
        return f"LieAlgebra({self.name or 'dim=' + str(self.dim)})"


def _freeze(c) -> tuple:
    return tuple(tuple(tuple(cij) for cij in ci) for ci in c)


def bracket(L: LieAlgebra, x: Sequence, y: Sequence) -> Vector:
    """Bilinear extension of the structure constants."""
    x, y = vec(x), vec(y)
    n = L.dim
    if len(x) != n or len(y) != n:
        raise ValueError(f"vectors must have length {n}")
    out = [Fraction(0)] * n
    c = L.structure
    for i, xi in enumerate(x):
        if not xi:
            continue
        for j, yj in enumerate(y):
            if not yj:
                continue
            f = xi * yj
            for k, ck in enumerate(c[i][j]):
                if ck:
                    out[k] += f * ck
    return tuple(out)


def check_jacobi(L: LieAlgebra) -> list[tuple[int, int, int]]:
    """Triples i < j < k (0-based) where the Jacobi cyclic sum is nonzero.

    The cyclic sum is alternating in its arguments, so triples with a
    repeated index always vanish once antisymmetry holds.
    """
    bad = []
    e = [L.basis_vector(i) for i in range(L.dim)]
    for i, j, k in combinations(range(L.dim), 3):
        s = [Fraction(0)] * L.dim
        for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
            t = bracket(L, L.structure[a][b], e[c])
            s = [u + w for u, w in zip(s, t)]
        if any(s):
            bad.append((i, j, k))
    return bad


def ad(L: LieAlgebra, x: Sequence) -> Matrix:
    """Matrix of y -> [x, y]."""
    x = vec(x)
    if len(x) != L.dim:
        raise ValueError(f"vector must have length {L.dim}")
    cols = [bracket(L, x, L.basis_vector(j)) for j in range(L.dim)]
    return Matrix.from_columns(cols, L.dim)


def is_automorphism(L: LieAlgebra, m: Matrix) -> bool:
    """True iff m is invertible and m[x, y] = [mx, my] on all basis pairs.

    Matrices act on column coordinate vectors: column j is the image of e_j.
    """
    n = L.dim
    if m.shape != (n, n) or not m.is_invertible():
        return False
    cols = m.columns
    for i, j in combinations(range(n), 2):
        if m @ L.structure[i][j] != bracket(L, cols[i], cols[j]):
            return False
    return True


def is_derivation(L: LieAlgebra, d: Matrix) -> bool:
    cols = d.columns
    for i, j in combinations(range(L.dim), 2):
        lhs = d @ L.structure[i][j]
        rhs = tuple(
            a + b
            for a, b in zip(
                bracket(L, cols[i], L.basis_vector(j)), bracket(L, L.basis_vector(i), cols[j])
            )
        )
        if lhs != rhs:
            return False
    return True


def center(L: LieAlgebra) -> Subspace:
    n = L.dim
    # sum_i x_i c[i][j][k] = 0 for all (j, k)
    rows = [[L.structure[i][j][k] for i in range(n)] for j in range(n) for k in range(n)]
    if not rows:
        return Subspace.full(n)
    return kernel(Matrix(rows))


def derived_subalgebra(L: LieAlgebra) -> Subspace:
    return Subspace.span(
        [L.structure[i][j] for i, j in combinations(range(L.dim), 2)], L.dim
    )


def is_subalgebra(L: LieAlgebra, s: Subspace) -> bool:
    vs = s.vectors
    return all(s.contains(bracket(L, u, v)) for u, v in combinations(vs, 2))


def brackets_into(L: LieAlgebra, a: Subspace, b: Subspace, target: Subspace) -> bool:
    """True iff [a, b] is contained in target."""
    return all(target.contains(bracket(L, u, v)) for u in a.vectors for v in b.vectors)


def abelian(n: int) -> LieAlgebra:
    return LieAlgebra(n, _freeze([[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]), f"abelian({n})")


def heisenberg(p: int) -> LieAlgebra:
    """h_{2p+1}: [X_{2s-1}, X_{2s}] = X_{2p+1}, s = 1..p, central vector last."""
    if p < 1:
        raise ValueError("heisenberg(p) needs p >= 1")
    n = 2 * p + 1
    return LieAlgebra.from_brackets(
        n, {(2 * s, 2 * s + 1): {n - 1: 1} for s in range(p)}, f"heisenberg(p={p})"
    )


def filiform_l5() -> LieAlgebra:
    """l_5: [X_1, X_i] = X_{i+1} for i = 2, 3, 4."""
    return LieAlgebra.from_brackets(5, {(0, i): {i + 1: 1} for i in (1, 2, 3)}, "l5")


# -- algebra files ---------------------------------------------------------


def _parse_rational(x) -> Fraction:
    if isinstance(x, bool) or isinstance(x, float):
        raise AlgebraFormatError(f"coefficients must be 'num/den' strings or integers, got {x!r}")
    try:
        return to_rational(x)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise AlgebraFormatError(f"bad rational {x!r}") from exc


def algebra_from_json(doc: Mapping, name: str = "") -> LieAlgebra:
    """Parse ``{"dim": n, "brackets": [{"i", "j", "coeffs": [[k, "num/den"], ...]}]}``.

    Indices are 1-based. Raises AlgebraFormatError for malformed documents and
    StructureConstantError when the constants are not antisymmetric or break
    the Jacobi identity.
    """
    try:
        n = doc["dim"]
        entries = doc.get("brackets", [])
    except (TypeError, KeyError, AttributeError) as exc:
        raise AlgebraFormatError("expected an object with 'dim' and 'brackets'") from exc
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise AlgebraFormatError(f"'dim' must be a non-negative integer, got {n!r}")
    table: dict[tuple[int, int], dict[int, Fraction]] = {}
    for e in entries:
        try:
            i, j, coeffs = e["i"], e["j"], e["coeffs"]
            pairs = [(int(k), _parse_rational(c)) for k, c in coeffs]
        except (TypeError, KeyError, ValueError) as exc:
            if isinstance(exc, AlgebraFormatError):
                raise
            raise AlgebraFormatError(f"malformed bracket entry {e!r}") from exc
        if not all(isinstance(t, int) and 1 <= t <= n for t in (i, j)):
            raise AlgebraFormatError(f"bracket indices out of range in {e!r}")
        key = (i - 1, j - 1)
        if key in table:
            raise AlgebraFormatError(f"pair ({i},{j}) listed twice")
        d: dict[int, Fraction] = {}
        for k, c in pairs:
            if not 1 <= k <= n:
                raise AlgebraFormatError(f"coefficient index {k} out of range in {e!r}")
            d[k - 1] = d.get(k - 1, Fraction(0)) + c
        table[key] = d
    try:
        L = LieAlgebra.from_brackets(n, table, name)
    except ValueError as exc:
        raise StructureConstantError(str(exc)) from exc
    bad = check_jacobi(L)
    if bad:
        i, j, k = bad[0]
        raise StructureConstantError(
            f"Jacobi identity fails on {len(bad)} triple(s), first (X{i + 1}, X{j + 1}, X{k + 1})"
        )
    return L


def algebra_to_json(L: LieAlgebra) -> dict:
    brackets = []
    for i, j in combinations(range(L.dim), 2):
        coeffs = [[k + 1, str(c)] for k, c in enumerate(L.structure[i][j]) if c]
        if coeffs:
            brackets.append({"i": i + 1, "j": j + 1, "coeffs": coeffs})
    return {"dim": L.dim, "brackets": brackets}


def load_algebra(path: str | Path) -> LieAlgebra:
    path = Path(path)
    try:
        doc = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise AlgebraFormatError(f"{path}: invalid JSON ({exc})") from exc
    return algebra_from_json(doc, name=f"file:{path}")


def dump_algebra(L: LieAlgebra, path: str | Path) -> None:
    Path(path).write_text(json.dumps(algebra_to_json(L), indent=2) + "\n")


__all__ = [
    "AlgebraFormatError",
    "LieAlgebra",
    "abelian",
    "ad",
    "algebra_from_json",
    "algebra_to_json",
    "bracket",
    "brackets_into",
    "center",
    "check_jacobi",
    "derived_subalgebra",
    "dump_algebra",
    "filiform_l5",
    "heisenberg",
    "is_automorphism",
    "is_derivation",
    "is_subalgebra",
    "load_algebra",
    "StructureConstantError",
]
