"""Sparse multivariate polynomials over Q and a branch solver for systems
whose nonlinear equations factor through a variable.

Only as much as the flatness computation needs: no Groebner bases.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

Monomial = tuple  # tuple[int, ...] of exponents


class Poly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Monomial, Fraction] | None = None):
        self.nvars = nvars
        self.terms = {m: Fraction(c) for m, c in (terms or {}).items() if c}

    @classmethod
    def const(cls, nvars: int, c) -> Poly:
        return cls(nvars, {(0,) * nvars: Fraction(c)})

    @classmethod
    def var(cls, nvars: int, i: int) -> Poly:
        return cls(nvars, {tuple(1 if j == i else 0 for j in range(nvars)): Fraction(1)})

    def _coerce(self, other) -> Poly:
        if isinstance(other, Poly):
            return other
        return Poly.const(self.nvars, other)

    def __add__(self, other) -> Poly:
        other = self._coerce(other)
        t = dict(self.terms)
        for m, c in other.terms.items():
            t[m] = t.get(m, 0) + c
        return Poly(self.nvars, t)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> Poly:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> Poly:
        return self._coerce(other) - self

    def __mul__(self, other) -> Poly:
        other = self._coerce(other)
        t: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                t[m] = t.get(m, 0) + c1 * c2
        return Poly(self.nvars, t)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(m) for m in self.terms)

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.nvars, Fraction(0))

    @property
    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def variables(self) -> set[int]:
        return {i for m in self.terms for i, e in enumerate(m) if e}

    def linear_coeff(self, i: int) -> Fraction:
        key = tuple(1 if j == i else 0 for j in range(self.nvars))
        return self.terms.get(key, Fraction(0))

    def substitute(self, i: int, value: Poly) -> Poly:
        out = Poly(self.nvars)
        for m, c in self.terms.items():
            e = m[i]
            rest = Poly(self.nvars, {m[:i] + (0,) + m[i + 1 :]: c})
            for _ in range(e):
                rest = rest * value
            out = out + rest
        return out

    def divide_var_power(self, i: int) -> tuple[int, Poly]:
        """(k, q) with self = x_i^k q and x_i not dividing q."""
        if not self.terms:
            return 0, self
        k = min(m[i] for m in self.terms)
        if k == 0:
            return 0, self
        return k, Poly(self.nvars, {m[:i] + (m[i] - k,) + m[i + 1 :]: c for m, c in self.terms.items()})

    def evaluate(self, point: Sequence) -> Fraction:
        total = Fraction(0)
        for m, c in self.terms.items():
            t = c
            for x, e in zip(point, m):
                if e:
                    t *= Fraction(x) ** e
            total += t
        return total

    def to_str(self, names: Sequence[str]) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=lambda m: (-sum(m), m)):
            c = self.terms[m]
            mono = "*".join(names[i] if e == 1 else f"{names[i]}^{e}" for i, e in enumerate(m) if e)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return self.to_str([f"t{i}" for i in range(self.nvars)])


class Unresolved(RuntimeError):
    """An equation is nonlinear and no variable factors out of it."""


@dataclass(frozen=True)
class Branch:
    """A component of the solution set: pinned variables are affine in the free ones."""

    assignments: tuple[tuple[int, Poly], ...]  # (variable, value in free variables)
    free: tuple[int, ...]
    choices: tuple[str, ...]  # how the branch was reached, for reports

    def value(self, i: int, nvars: int) -> Poly:
        for v, p in self.assignments:
            if v == i:
                return p
        return Poly.var(nvars, i)


def solve_branches(equations: Iterable[Poly], nvars: int, names: Sequence[str] | None = None) -> list[Branch]:
    """Split the zero set of ``equations`` into affine branches.

    Linear equations are eliminated first. A nonlinear equation of the form
    x^k q = 0 splits into the branches x = 0 and q = 0. Anything else raises
    Unresolved. Branches contained in another branch are dropped.
    """
    names = list(names or [f"t{i}" for i in range(nvars)])
    out: list[Branch] = []

    def rec(eqs: list[Poly], subst: dict[int, Poly], choices: tuple[str, ...]):
        eqs = [e for e in eqs if not e.is_zero()]
        if any(e.is_constant() for e in eqs):
            return
        if not eqs:
            free = tuple(i for i in range(nvars) if i not in subst)
            out.append(Branch(tuple(sorted(subst.items())), free, choices))
            return
        lin = next((e for e in eqs if e.degree == 1), None)
        if lin is not None:
            v = max(lin.variables())
            c = lin.linear_coeff(v)
            val = (Poly.var(nvars, v) * c - lin) * (1 / c)
            new = {k: p.substitute(v, val) for k, p in subst.items()}
            new[v] = val
            rec([e.substitute(v, val) for e in eqs], new, choices)
            return
        for e in sorted(eqs, key=lambda e: (e.degree, len(e.terms))):
            for v in sorted(e.variables()):
                k, q = e.divide_var_power(v)
                if k:
                    zero = Poly.const(nvars, 0)
                    new = {kk: p.substitute(v, zero) for kk, p in subst.items()}
                    new[v] = zero
                    rec([x.substitute(v, zero) for x in eqs], new, choices + (f"{names[v]} = 0",))
                    rest = [x for x in eqs if x is not e] + [q]
                    rec(rest, dict(subst), choices + (f"{names[v]} factored out",))
                    return
        raise Unresolved(f"cannot split equation {eqs[0].to_str(names)}")

    rec(list(equations), {}, ())
    return _prune(out, nvars)


def _prune(branches: list[Branch], nvars: int) -> list[Branch]:
    """Drop exact duplicates and branches lying inside a larger one."""
    from .linalg import Subspace

    def affine(b: Branch):
        # point + span in Q^nvars
        base = [b.value(i, nvars).constant_term() for i in range(nvars)]
        dirs = [[b.value(i, nvars).linear_coeff(f) for i in range(nvars)] for f in b.free]
        return base, Subspace.span(dirs, nvars)

    data = [affine(b) for b in branches]
    keep = []
    for i, (bi, si) in enumerate(data):
        contained = False
        for j, (bj, sj) in enumerate(data):
            if i == j:
                continue
            # branch i inside branch j?
            if not sj.contains_subspace(si):
                continue
            diff = [x - y for x, y in zip(bi, bj)]
            if sj.contains(diff) and (sj.dim > si.dim or j < i):
                contained = True
                break
        if not contained:
            keep.append(branches[i])
    return keep
