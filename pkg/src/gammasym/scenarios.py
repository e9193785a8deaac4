"""Named verification scenarios and their reports."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping

from . import aut_h3 as A
from . import connections as C
from . import gradings as Gr
from . import metrics as M
from .lie import center, check_jacobi, derived_subalgebra
from .linalg import Matrix, Signature, Subspace, signature

DEFAULT_SEED = 20240601


@dataclass(frozen=True)
class Check:
    label: str
    expected: str
    actual: str
    ok: bool

    def as_json(self) -> dict:
        return {"label": self.label, "expected": self.expected, "actual": self.actual, "ok": self.ok}


@dataclass
class Report:
    scenario: str
    checks: list[Check] = field(default_factory=list)
    informational: bool = False
    elapsed_ms: int = 0

    @property
    def status(self) -> str:
        if not all(c.ok for c in self.checks):
            return "fail"
        return "info" if self.informational and not self.checks else "pass"

    @property
    def passed(self) -> bool:
        return self.status != "fail"

    def add(self, label: str, expected, actual, ok: bool | None = None) -> bool:
        exp, act = _show(expected), _show(actual)
        if ok is None:
            ok = exp == act
        self.checks.append(Check(label, exp, act, bool(ok)))
        return bool(ok)

    def as_json(self) -> dict:
        return {
            "scenario": self.scenario,
            "status": self.status,
            "checks": [c.as_json() for c in self.checks],
            "elapsed_ms": self.elapsed_ms,
        }


def _show(x) -> str:
    if isinstance(x, str):
        return x
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, Matrix):
        return "[" + "; ".join(" ".join(str(v) for v in r) for r in x.rows) + "]"
    if isinstance(x, Subspace):
        return "span{" + ", ".join("(" + ",".join(str(v) for v in b) + ")" for b in x.vectors) + "}"
    if isinstance(x, Signature):
        return f"({x.positive},{x.negative},{x.null})"
    if isinstance(x, (tuple, list)):
        return "(" + ",".join(_show(v) for v in x) + ")"
    return str(x)


@dataclass(frozen=True)
class Scenario:
    name: str
    description: str
    anchor: str
    run: Callable[[Report, random.Random, Mapping[str, str]], None]


def rand_rational(rng: random.Random, height: int = 9, dens: tuple[int, ...] = (1, 2, 3, 4)) -> Fraction:
    return Fraction(rng.randint(-height, height), rng.choice(dens))


def rand_nonzero(rng: random.Random, height: int = 9) -> Fraction:
    while True:
        x = rand_rational(rng, height)
        if x:
            return x


def _int_param(params: Mapping[str, str], key: str, default: int) -> int:
    try:
        return int(params.get(key, default))
    except ValueError:
        raise ValueError(f"parameter {key} must be an integer, got {params[key]!r}") from None


def _count_failures(report: Report, label: str, samples: int, failures: list[str]) -> None:
    report.add(label, f"0 failures in {samples}", f"{len(failures)} failures in {samples}" + (f": {failures[0]}" if failures else ""))


# -- automorphisms of h_3 ------------------------------------------------------


def involution_samples(rng: random.Random, family: A.Family) -> A.InvolutionTag:
    n = {A.Family.IDENTITY: 0, A.Family.TAU3: 3}.get(family, 2)
    params = [rand_rational(rng) for _ in range(n)]
    if family is A.Family.TAU3:
        params[1] = rand_nonzero(rng)
    return A.InvolutionTag(family, tuple(params))


def run_h3_involutions(r: Report, rng: random.Random, params: Mapping[str, str]) -> None:
    n = _int_param(params, "samples", 100)
    for fam in (A.Family.TAU1, A.Family.TAU2, A.Family.TAU3, A.Family.TAU4):
        bad = []
        for _ in range(n):
            tag = involution_samples(rng, fam)
            m = A.tau(tag)
            if m @ m != A.I3:
                bad.append(f"{tag} does not square to Id")
            elif not A.is_h3_automorphism(m):
                bad.append(f"{tag} is not an automorphism")
            else:
                back = A.classify_involution(m)
                if A.tau(back) != m or back.family is not fam:
                    bad.append(f"{tag} classified as {back}")
        _count_failures(r, f"{fam.value}: square, automorphism, classification round-trip", n, bad)
    r.add("classify(Id)", "Identity", A.classify_involution(A.I3).family.value)
    try:
        A.classify_involution(Matrix.diag(-1, 1, 1))
        r.add("diag(-1,1,1) rejected (not an automorphism)", "ValueError", "accepted", False)
    except ValueError:
        r.add("diag(-1,1,1) rejected (not an automorphism)", "ValueError", "ValueError")


def run_h3_subgroups(r: Report, rng: random.Random, params: Mapping[str, str]) -> None:
    n = _int_param(params, "samples", 25)
    bad7, bad8 = [], []
    for _ in range(n):
        a3, a5, a6 = (rand_rational(rng) for _ in range(3))
        g = A.gamma7(a3, a5, a6)
        if len(g) != 4 or not g.is_abelian or g.exponent != 2:
            bad7.append(f"Gamma7({a3},{a5},{a6})")
        a1, a2, b6, b6p = rand_rational(rng), rand_nonzero(rng), rand_rational(rng), rand_rational(rng)
        g = A.group_closure(A.gamma8_generators(a1, a2, b6, b6p), bound=8)
        if len(g) != 4 or not g.is_abelian or g.exponent != 2 or g.as_set() != A.gamma8(a1, a2, b6, b6p).as_set():
            bad8.append(f"Gamma8({a1},{a2},{b6},{b6p})")
    _count_failures(r, "Gamma7 closes as a Klein four-group", n, bad7)
    _count_failures(r, "Gamma8 closes as a Klein four-group (listed product matches closure)", n, bad8)
    g7 = A.gamma7(0, 0, 0)
    g8 = A.gamma8(0, 1, 0, 0)
    sigma = A.find_conjugator(g7, g8)
    r.add("conjugator found for Gamma7(0,0,0) -> Gamma8(0,1,0,0)", "found", "found" if sigma is not None else "none")
    if sigma is not None:
        r.add("sigma^-1 Gamma7 sigma = Gamma8 (exact)", True, A.conjugates_to(sigma, g7, g8))
        r.add("witness sigma", "automorphism", "automorphism" if A.is_h3_automorphism(sigma) else "not")


def run_h3_conjugacy(r: Report, rng: random.Random, params: Mapping[str, str]) -> None:
    n = _int_param(params, "samples", 3)
    small = A.small_rationals(1, (1,))
    found = 0
    for _ in range(n):
        a3, a5, a6 = (rng.choice(small) for _ in range(3))
        a1, a6b, a6p = (rng.choice(small) for _ in range(3))
        a2 = rng.choice([x for x in small if x])
        g7, g8 = A.gamma7(a3, a5, a6), A.gamma8(a1, a2, a6b, a6p)
        s = A.find_conjugator(g7, g8)
        if s is not None and A.conjugates_to(s, g7, g8):
            found += 1
        r.add(
            f"Gamma7({a3},{a5},{a6}) ~ Gamma8({a1},{a2},{a6b},{a6p})",
            "witness verified",
            "witness verified" if s is not None else "no small witness",
            s is not None,
        )


def run_h3_order_k(r: Report, rng: random.Random, params: Mapping[str, str]) -> None:
    for k in (3, 4, 6):
        # -a2 a3 = 1 - c^2 + t^2 makes the discriminant a square t^2
        c = A.rational_cos_2pi_over(k)
        t = rand_rational(rng, 4)
        a2 = rand_nonzero(rng, 4)
        a3 = -(1 - c * c + t * t) / a2
        m = A.order_k_instance(k, a2, a3, rand_rational(rng), rand_rational(rng))
        ok = m is not None and A.is_h3_automorphism(m) and A.order(m, 12) == k
        r.add(f"order {k} element exists with rational entries", True, ok)
    r.add("order 5: cos(2pi/5) irrational", "None", str(A.rational_cos_2pi_over(5)))


def run_sigma3(r: Report, rng: random.Random, params: Mapping[str, str]) -> None:
    alpha = Fraction(params.get("alpha", "1"))
    s1, s2 = A.sigma3_generators(alpha)
    r.add("sigma1 automorphism", True, A.is_h3_automorphism(s1))
    r.add("sigma2 automorphism", True, A.is_h3_automorphism(s2))
    r.add("sigma1^2 = Id", True, s1 @ s1 == A.I3)
    r.add("sigma2^3 = Id", True, s2 @ s2 @ s2 == A.I3)
    r.add("sigma1 sigma2 sigma1 = sigma2^2", True, s1 @ s2 @ s1 == s2 @ s2)
    g = A.group_closure([s1, s2], bound=12)
    r.add("generated group order", 6, len(g))
    r.add("generated group abelian", False, g.is_abelian)


# -- gradings ------------------------------------------------------------------


def run_h3_z22_grading(r: Report, rng: random.Random, params: Mapping[str, str]) -> None:
    G = Gr.grading_from_involutions(A.H3, list(A.gamma7_generators(0, 0, 0)))
    e = [Subspace.coordinate([i], 3) for i in range(3)]
    r.add("g_(+,+)", Subspace.zero(3), G[(1, 1)])
    r.add("g_(-,+)", e[0], G[(-1, 1)])
    r.add("g_(+,-)", e[1], G[(1, -1)])
    r.add("g_(-,-)", e[2], G[(-1, -1)])
    r.add("grading axioms", "no violations", "; ".join(Gr.check_grading(G)) or "no violations")
    r.add("irreducible", True, Gr.is_irreducible(G))
    n = _int_param(params, "samples", 5)
    bad = []
    for _ in range(n):
        a3, a5, a6 = (rand_rational(rng) for _ in range(3))
        Ga = M.h3_z22_grading(a3, a5, a6)
        frame = M.gamma7_frame(a3, a5, a6)
        if Gr.check_grading(Ga) or not Gr.equivalent_under(G, Ga, frame):
            bad.append(f"({a3},{a5},{a6})")
    _count_failures(r, "Gamma7(a3,a5,a6) grading equivalent to Gamma7(0,0,0) via the adapted frame", n, bad)


def _grading_catalogue(p_max: int):
    for p in range(1, p_max + 1):
        yield p, "1a", Gr.heisenberg_grading(Gr.GradingName.CENTER, p)
        for k in range(1, p):
            yield p, f"1b(k={k})", Gr.heisenberg_grading(Gr.GradingName.SUB, p, k)
        yield p, "2a", Gr.heisenberg_grading(Gr.GradingName.ODD, p)
        yield p, "2b", Gr.heisenberg_grading(Gr.GradingName.EVEN, p)


def run_h2p1_gradings(r: Report, rng: random.Random, params: Mapping[str, str]) -> None:
    pmax = _int_param(params, "pmax", 3)
    for p, name, G in _grading_catalogue(pmax):
        r.add(f"h_{2 * p + 1} grading {name}: axioms", "no violations", "; ".join(Gr.check_grading(G)) or "no violations")
    for p in range(1, pmax + 1):
        G = Gr.heisenberg_grading(Gr.GradingName.Z22, p)
        r.add(f"h_{2 * p + 1} Z2^2 grading: axioms", "no violations", "; ".join(Gr.check_grading(G)) or "no violations")
        r.add(f"h_{2 * p + 1} Z2^2 grading: unit component", "0", str(G.unit_component.dim))
        r.add(f"h_{2 * p + 1} Z2^2 grading: irreducible", True, Gr.is_irreducible(G))


# -- metrics -------------------------------------------------------------------


def run_h3_no_metric(r: Report, rng: random.Random, params: Mapping[str, str]) -> None:
    G = Gr.heisenberg_grading(Gr.GradingName.H3_Z2_A)
    split = M.reductive_split(G)
    fs = M.invariant_form_space(split)
    r.add("h = g_0", Subspace.coordinate([1], 3), split.h)
    r.add("dim of invariant form space", 1, fs.dim)
    r.add("common_radical", Subspace.coordinate([2], 3), M.common_radical(fs))
    r.add("every invariant form degenerate", True, all(signature(b).null > 0 for b in fs.basis))


def run_h3_center_metric(r: Report, rng: random.Random, params: Mapping[str, str]) -> None:
    G = Gr.heisenberg_grading(Gr.GradingName.CENTER, 1)
    split = M.reductive_split(G)
    fs = M.invariant_form_space(split)
    r.add("h = g_0", Subspace.coordinate([2], 3), split.h)
    r.add("common_radical", Subspace.zero(3), M.common_radical(fs))
    ident = M.SymBilinearForm(Matrix.identity(2), split)
    r.add("identity form invariant", True, fs.contains(ident.matrix))
    r.add("identity form", "RiemannianZ2k", str(M.classify_metric(ident, G)))
    lor = M.SymBilinearForm(Matrix.diag(-1, 1), split)
    r.add("diag(-1,1) invariant", True, fs.contains(lor.matrix))
    r.add("diag(-1,1)", "LorentzianCaseI", str(M.classify_metric(lor, G)))


def run_h3_riemannian(r: Report, rng: random.Random, params: Mapping[str, str]) -> None:
    n = _int_param(params, "samples", 50)
    G = M.h3_z22_grading()
    bad_kind, bad_lam, bad_wit = [], [], []
    witnesses = 0
    for i in range(n):
        if i % 2:
            a1, a2 = Fraction(rng.randint(1, 6), rng.randint(1, 4)) ** 2, Fraction(rng.randint(1, 6), rng.randint(1, 4)) ** 2
        else:
            a1, a2 = Fraction(rng.randint(1, 9), rng.randint(1, 4)), Fraction(rng.randint(1, 9), rng.randint(1, 4))
        a3 = Fraction(rng.randint(1, 9), rng.randint(1, 4))
        B = M.h3_form(Matrix.diag(a1, a2, a3))
        if M.classify_metric(B, G).kind is not M.MetricKind.RIEMANNIAN:
            bad_kind.append(f"diag({a1},{a2},{a3})")
        nf = M.riemannian_invariant_h3(B)
        if nf.lambda_sq != a3 / (a1 * a2):
            bad_lam.append(f"diag({a1},{a2},{a3})")
        if nf.witness is not None:
            witnesses += 1
            ok = A.is_h3_automorphism(nf.witness) and M.pullback(nf.witness, B).matrix == Matrix.diag(1, 1, nf.lambda_sq)
            if not ok:
                bad_wit.append(f"diag({a1},{a2},{a3})")
    _count_failures(r, "diagonal positive forms classified RiemannianZ2k", n, bad_kind)
    _count_failures(r, "lambda^2 = a3/(a1 a2)", n, bad_lam)
    r.add("square-valued samples with a witness", f">= {n // 2}", str(witnesses), witnesses >= n // 2)
    _count_failures(r, "witness automorphism pulls back to diag(1,1,lambda^2)", witnesses, bad_wit)


def run_h3_lorentzian_case1(r: Report, rng: random.Random, params: Mapping[str, str]) -> None:
    n = _int_param(params, "samples", 25)
    G = M.h3_z22_grading()
    bad, bad_wit = [], []
    for _ in range(n):
        vals = [Fraction(rng.randint(1, 6), rng.randint(1, 3)) ** 2 for _ in range(3)]
        neg = rng.randrange(3)
        vals[neg] = -vals[neg]
        B = M.h3_form(Matrix.diag(*vals))
        v = M.classify_metric(B, G)
        nf = M.lorentzian_normal_form_h3(B)
        want = M.LorentzTag.NEG_ON_CENTER if neg == 2 else M.LorentzTag.NEG_ON_PLANE
        if v.kind is not M.MetricKind.LORENTZIAN_I or nf.tag is not want:
            bad.append(f"diag{tuple(str(x) for x in vals)}")
            continue
        w = M.lorentzian_case1_witness(B)
        if w is None or not A.is_h3_automorphism(w) or M.pullback(w, B).matrix != nf.normal_form:
            bad_wit.append(f"diag{tuple(str(x) for x in vals)}")
    _count_failures(r, "diagonal Lorentzian forms classified LorentzianCaseI with the expected normal form", n, bad)
    _count_failures(r, "witness automorphism pulls back to the normal form", n, bad_wit)
    samples = [tuple(rand_rational(rng) for _ in range(3)) for _ in range(n)]
    bad_frame = []
    for s in samples:
        if not M.dual_change_check([s]):
            bad_frame.append(str(tuple(str(x) for x in s)))
    _count_failures(r, "adapted frame change is an automorphism spanning the Gamma7 components", n, bad_frame)


def run_h3_lorentzian_case2(r: Report, rng: random.Random, params: Mapping[str, str]) -> None:
    G = M.h3_z22_grading()
    B = M.h3_form(M.CASE_II_NORMAL_FORM)
    r.add("matrix equals expansion of w1^2 + w3^2 - (w2 - w3)^2", M.CASE_II_NORMAL_FORM, M.case_ii_expansion())
    r.add("signature", Signature(2, 1, 0), B.signature)
    r.add("restriction to center g_(-,-)", "degenerate", "degenerate" if signature(B.restrict(G[(-1, -1)])).null else "nondegenerate")
    pair = G[(-1, -1)] + G[(1, -1)]
    ps = signature(B.restrict(pair))
    r.add("restriction to center + g_(+,-)", "(1,1,0)", _show(ps))
    r.add("classification", "LorentzianCaseII", str(M.classify_metric(B, G)))
    r.add("normal form tag", "CaseII", M.lorentzian_normal_form_h3(B).tag.value)


def run_h2p1_metric_existence(r: Report, rng: random.Random, params: Mapping[str, str]) -> None:
    pmax = _int_param(params, "pmax", 3)
    for p, name, G in _grading_catalogue(pmax):
        split = M.reductive_split(G)
        fs = M.invariant_form_space(split)
        rad = M.common_radical(fs)
        zc = Subspace.coordinate([2 * p], 2 * p + 1)
        tag = f"h_{2 * p + 1} grading {name}"
        if name.startswith("1"):
            d = split.dim_m
            ident = M.SymBilinearForm(Matrix.identity(d), split)
            lor = M.SymBilinearForm(Matrix.diag(-1, *([1] * (d - 1))), split)
            r.add(f"{tag}: common radical", "0", str(rad.dim))
            r.add(f"{tag}: identity invariant and Riemannian", True, fs.contains(ident.matrix) and M.classify_metric(ident, G).kind is M.MetricKind.RIEMANNIAN)
            r.add(f"{tag}: diag(-1,1,...) invariant and Lorentzian", True, fs.contains(lor.matrix) and M.classify_metric(lor, G).kind is M.MetricKind.LORENTZIAN_I)
        else:
            r.add(f"{tag}: common radical contains the center", True, rad.contains_subspace(zc))


# -- connections ---------------------------------------------------------------


def run_canonical(r: Report, rng: random.Random, params: Mapping[str, str]) -> None:
    split = M.h3_z22_split()
    c1, c2 = C.first_canonical(split), C.second_canonical(split)
    r.add("first canonical: T(X1,X2)", (0, 0, -1), C.torsion(c1)[(0, 1)])
    r.add("first canonical: R", "0", "0" if C.curvature(c1).is_zero() else "nonzero")
    r.add("second canonical: T", "0", "0" if C.torsion(c2).is_zero() else "nonzero")
    r.add("second canonical: Lam(X1)X2", (0, 0, Fraction(1, 2)), c2.apply(0, 1))


def _rand_grid(rng: random.Random, p: int):
    return [[rand_rational(rng) for _ in range(p)] for _ in range(p)]


def run_h2p1_flat(r: Report, rng: random.Random, params: Mapping[str, str]) -> None:
    pmax = _int_param(params, "pmax", 4)
    n = _int_param(params, "samples", 10)
    for p in range(1, pmax + 1):
        G = Gr.heisenberg_grading(Gr.GradingName.Z22, p)
        fam = C.torsion_free_adapted_space(G)
        bad = []
        for _ in range(n):
            grid = _rand_grid(rng, p)
            c = C.heisenberg_flat_family(p, grid, fam.particular.split)
            if not C.torsion(c).is_zero():
                bad.append("T != 0")
            elif not C.curvature(c).is_zero():
                bad.append("R != 0")
            elif not C.is_adapted(c, G):
                bad.append("not adapted")
            elif not fam.contains(c):
                bad.append("outside the torsion-free adapted space")
        _count_failures(r, f"p={p}: flat family T = 0, R = 0, adapted, torsion-free solve contains it", n, bad)
    e = C.h3_flat_enumeration()
    r.add("p=1 branch enumeration: every branch in the family", True, e.every_branch_in_family)
    r.add("p=1 branch enumeration: family covered", True, e.family_covered)


def l5_samples(rng: random.Random, n: int) -> list[tuple[Fraction, ...]]:
    return [tuple(rand_rational(rng) for _ in range(6)) for _ in range(n)]


def run_l5(r: Report, rng: random.Random, params: Mapping[str, str]) -> None:
    n = _int_param(params, "samples", 5)
    samples = l5_samples(rng, n)
    rep = C.l5_scenario(samples)
    r.add("printed lambda(X3) equals s * [X3, .]_m for s", "+1 or -1", f"{rep.isotropy_matches_print:+d}", rep.isotropy_matches_print != 0)
    for s in rep.samples:
        tag = "(" + ",".join(str(x) for x in s) + ")"
        rs = [rep.readings[(t, g, s)] for t in (False, True) for g in (1, -1)]
        r.add(f"curvature nonzero at {tag}", "nonzero", rs[0].witness or "0", all(x.curvature_nonzero for x in rs))
    for t in (False, True):
        for g in (1, -1):
            rs = [rep.readings[(t, g, s)] for s in rep.samples]
            tf = sum(x.torsion_free for x in rs)
            eq = sum(x.equivariant for x in rs)
            r.add(f"{'rows' if t else 'columns'} reading, isotropy sign {g:+d}: torsion-free samples", "recorded", f"{tf}/{len(rs)}", True)
            r.add(f"{'rows' if t else 'columns'} reading, isotropy sign {g:+d}: equivariant samples", "recorded", f"{eq}/{len(rs)}", True)
    best = max(sum(rep.readings[(t, g, s)].equivariant for s in rep.samples) for t in (False, True) for g in (1, -1))
    r.add("some reading equivariant at every sample", f"{len(rep.samples)}/{len(rep.samples)}", f"{best}/{len(rep.samples)}")
    a = Fraction(2)
    cc = C.l5_connection((a, 0, 0, 0, 0, 0))
    r.add("columns reading at a=2: T(X1,X4)", (0, 0, a), C.torsion(cc)[(0, 2)])


SCENARIOS: dict[str, Scenario] = {
    s.name: s
    for s in [
        Scenario("h3-involutions", "Involutive automorphisms of h_3 fall into four families", "classification of involutions of h_3", run_h3_involutions),
        Scenario("h3-subgroups", "Gamma7, Gamma8 are Klein four-groups and conjugate", "Klein four-subgroups of Aut(h_3)", run_h3_subgroups),
        Scenario("h3-conjugacy", "Witness search for sigma^-1 Gamma7 sigma = Gamma8", "conjugacy of Gamma7 and Gamma8", run_h3_conjugacy),
        Scenario("h3-order-k", "Rational automorphisms of order 3, 4, 6", "finite-order automorphisms of h_3", run_h3_order_k),
        Scenario("sigma3-example", "A copy of S_3 inside Aut(h_3)", "non-abelian subgroup of Aut(h_3)", run_sigma3),
        Scenario("h3-z22-grading", "The Z2^2-grading of h_3 by Gamma7", "Z2^2-gradings of h_3", run_h3_z22_grading),
        Scenario("h3-symmetric-no-metric", "R{X2} + R{X1,X3} carries no invariant metric", "symmetric h_3 without invariant metric", run_h3_no_metric),
        Scenario("h3-symmetric-center-metric", "R{X3} + R{X1,X2} carries Riemannian and Lorentzian metrics", "symmetric h_3 with invariant metric", run_h3_center_metric),
        Scenario("h3-riemannian-normal-form", "Riemannian Z2^2-symmetric metrics reduce to diag(1,1,lambda^2)", "Riemannian normal form on h_3", run_h3_riemannian),
        Scenario("h3-lorentzian-case1", "Lorentzian metrics with nondegenerate components", "Lorentzian normal forms, first case", run_h3_lorentzian_case1),
        Scenario("h3-lorentzian-case2", "Lorentzian metric with a degenerate center component", "Lorentzian normal forms, second case", run_h3_lorentzian_case2),
        Scenario("h2p1-gradings", "Z2 and Z2^2 gradings of h_{2p+1}", "gradings of h_{2p+1}", run_h2p1_gradings),
        Scenario("h2p1-metric-existence", "Which Z2-symmetric h_{2p+1} carry invariant metrics", "metrics on symmetric h_{2p+1}", run_h2p1_metric_existence),
        Scenario("h2p1-flat-connections", "Torsion-free flat adapted connections on h_{2p+1}", "flat adapted connections", run_h2p1_flat),
        Scenario("canonical-connections", "First and second canonical connections on h_3", "canonical connections", run_canonical),
        Scenario("l5-connection", "Torsion, equivariance and curvature of the l_5 connection family", "adapted connection on l_5", run_l5),
    ]
}


def list_scenarios() -> list[str]:
    return list(SCENARIOS)


def run_scenario(name: str, params: Mapping[str, str] | None = None, seed: int = DEFAULT_SEED) -> Report:
    """Run a registered scenario. Raises KeyError for unknown names."""
    sc = SCENARIOS[name]
    report = Report(name)
    sc.run(report, random.Random(seed), dict(params or {}))
    return report


def check_algebra(L) -> Report:
    """Jacobi, dimension, center and derived algebra of a loaded algebra."""
    r = Report("check")
    bad = check_jacobi(L)
    r.add("Jacobi identity", "holds", "holds" if not bad else f"fails on {len(bad)} triples, first {tuple(i + 1 for i in bad[0])}")
    r.add("dimension", str(L.dim), str(L.dim), True)
    if not bad:
        r.add("center dimension", str(center(L).dim), str(center(L).dim), True)
        r.add("derived subalgebra dimension", str(derived_subalgebra(L).dim), str(derived_subalgebra(L).dim), True)
    return r
