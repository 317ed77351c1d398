"""Checks of the computational content: invariance, independence, expression
in the generators M and L, the identity suite and relation search."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Mapping

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from . import invariants as inv
from .parabolic import BlockComposition, Root, expanded_base, roots_M, s_gamma
from .poly import (
    ONE,
    Polynomial,
    Var,
    aux,
    entry,
    is_entry,
    poly_prod,
    poly_sum,
    sym,
)

T = aux("t")


class NotInvariant(ValueError):
    def __init__(self, m: int, witness: Polynomial):
        self.m, self.witness = m, witness
        super().__init__(f"not invariant under the one-parameter subgroup m={m}: change {witness}")


# ----------------------------------------------------------------------
# reports

@dataclass
class CheckReport:
    check: str
    blocks: tuple[int, ...]
    status: str  # pass | fail | inapplicable | inconclusive
    witness: str | None = None
    seed: int | None = None
    ms: int = 0

    def __post_init__(self):
        if self.status == "fail" and not self.witness:
            raise ValueError("a failing report needs a witness")

    @property
    def ok(self) -> bool:
        return self.status != "fail"

    def to_json(self) -> dict:
        return {
            "check": self.check,
            "blocks": list(self.blocks),
            "status": self.status,
            "witness": self.witness,
            "seed": self.seed,
            "ms": self.ms,
        }

    def line(self) -> str:
        tail = f"  {self.witness}" if self.witness else ""
        return f"{self.status.upper():<12} {self.check}{tail}"


def run_check(check: str, b: BlockComposition, fn: Callable[[], tuple[str, str | None]],
              seed: int | None = None, timing: bool = False) -> CheckReport:
    start = time.perf_counter()
    status, witness = fn()
    ms = round((time.perf_counter() - start) * 1000) if timing else 0
    return CheckReport(check, b.sizes, status, witness, seed, ms)


def sort_reports(reports: Iterable[CheckReport]) -> list[CheckReport]:
    return sorted(reports, key=lambda r: (r.check, r.blocks))


# ----------------------------------------------------------------------
# adjoint action and invariance

def adjoint_substitution(m: int, b: BlockComposition) -> dict[Var, Polynomial]:
    """Conjugation of X by E + t*E_(m,m+1), on the variables it moves.

    Row m gains t * row m+1 and column m+1 loses t * column m; entries
    outside M read as zero.
    """
    n = b.n
    if not 1 <= m < n:
        raise ValueError(f"m must lie in 1..{n - 1}")
    t = Polynomial.var(T)
    out = {}
    for i, j in roots_M(b):
        image = Polynomial.var(entry(i, j))
        moved = False
        if i == m and b.in_m(m + 1, j):
            image = image + t * Polynomial.var(entry(m + 1, j))
            moved = True
        if j == m + 1 and b.in_m(i, m):
            image = image - t * Polynomial.var(entry(i, m))
            moved = True
        if moved:
            out[entry(i, j)] = image
    return out


@dataclass(frozen=True)
class InvarianceResult:
    invariant: bool
    m: int | None = None
    witness: Polynomial | None = None

    def __bool__(self) -> bool:
        return self.invariant


def _check_domain(f: Polynomial, b: BlockComposition) -> None:
    for v in f.variables():
        if not is_entry(v) or not b.in_m(v[1], v[2]):
            raise ValueError(f"variable {v} is not a coordinate of the nilradical for blocks {b}")


def is_invariant(f: Polynomial, b: BlockComposition) -> InvarianceResult:
    """Symbolic test in t for every generator of the unitriangular group."""
    _check_domain(f, b)
    present = set(f.variables())
    for m in range(1, b.n):
        sub = {v: p for v, p in adjoint_substitution(m, b).items() if v in present}
        if not sub:
            continue
        diff = f.substitute(sub) - f
        if diff:
            return InvarianceResult(False, m, diff)
    return InvarianceResult(True)


# ----------------------------------------------------------------------
# exact linear algebra (sympy's DomainMatrix over QQ)

def _qq_matrix(rows: list[list]) -> DomainMatrix:
    ncols = len(rows[0]) if rows else 0
    conv = [[QQ(int(c.numerator), int(c.denominator)) if isinstance(c, Fraction) else QQ(c) for c in r]
            for r in rows]
    return DomainMatrix(conv, (len(rows), ncols), QQ)


def rank(rows: list[list]) -> int:
    if not rows or not rows[0]:
        return 0
    return _qq_matrix(rows).rank()


def nullspace(rows: list[list], ncols: int) -> list[list[Fraction]]:
    """Basis of {v : rows @ v = 0} with rational entries."""
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    basis = _qq_matrix(rows).nullspace().to_list()
    return [[Fraction(int(q.numerator), int(q.denominator)) for q in vec] for vec in basis]


# ----------------------------------------------------------------------
# algebraic independence

COORD_RANGE = 10 ** 6


@dataclass(frozen=True)
class IndependenceResult:
    status: str  # independent | inconclusive
    rank: int
    size: int
    point: dict = field(default_factory=dict)
    seed: int = 0

    def witness(self) -> str:
        coords = ", ".join(f"x[{v[1]},{v[2]}]={c}" if is_entry(v) else f"{v[1]}={c}"
                           for v, c in sorted(self.point.items()))
        return f"rank {self.rank}/{self.size} at {{{coords}}}"


def random_point(variables, rng: random.Random) -> dict:
    return {v: rng.randint(-COORD_RANGE, COORD_RANGE) for v in sorted(variables)}


def jacobian_rank_at(fs: list[Polynomial], point: Mapping[Var, int], variables: list[Var]) -> int:
    rows = [[f.derivative(v).evaluate(point) for v in variables] for f in fs]
    return rank(rows)


def jacobian_independent(fs: list[Polynomial], seed: int = 0, attempts: int = 3) -> IndependenceResult:
    """One-sided certificate: full Jacobian rank at a random point proves independence."""
    if not fs:
        raise ValueError("need at least one polynomial")
    variables = sorted({v for f in fs for v in f.variables()})
    rng = random.Random(seed)
    best = None
    for _ in range(attempts):
        point = random_point(variables, rng)
        r = jacobian_rank_at(fs, point, variables)
        if best is None or r > best[0]:
            best = (r, point)
        if r == len(fs):
            break
    r, point = best
    status = "independent" if r == len(fs) else "inconclusive"
    return IndependenceResult(status, r, len(fs), point, seed)


# ----------------------------------------------------------------------
# canonical matrices and expression in the generators

def restrict_to_canonical(f: Polynomial, b: BlockComposition) -> Polynomial:
    sup = expanded_base(b).support
    return f.drop_variables({entry(i, j) for i, j in roots_M(b) if (i, j) not in sup})


def generator_symbol(kind: str, root: Root) -> Var:
    return aux(inv.gen_name(kind, root))


LaurentMono = tuple  # sorted ((symbol, exponent), ...), exponents may be negative


def _lmul(a: dict, b: dict) -> dict:
    out = dict(a)
    for v, e in b.items():
        out[v] = out.get(v, 0) + e
        if not out[v]:
            del out[v]
    return out


@dataclass(frozen=True)
class _Coordinate:
    """x_gamma on canonical matrices = coeff * Laurent monomial in generator symbols."""

    coeff: Fraction
    mono: dict


def _single_term(p: Polynomial, what: str):
    if not p.is_monomial() or not p:
        raise ArithmeticError(f"restriction of {what} to canonical matrices is not a single term: {p}")
    (m, c), = p.terms.items()
    return dict(m), c


@dataclass(frozen=True)
class CanonicalChart:
    """The triangular change of variables between S ∪ Phi and the generators."""

    blocks: BlockComposition
    coords: dict

    @classmethod
    def build(cls, b: BlockComposition) -> "CanonicalChart":
        eb = expanded_base(b)
        S = list(eb.S)
        coords: dict = {}

        def solve(var_root, poly, symbol, what):
            exps, c = _single_term(restrict_to_canonical(poly, b), what)
            v = entry(*var_root)
            if exps.pop(v, 0) != 1:
                raise ArithmeticError(f"x{list(var_root)} does not occur linearly in the restriction of {what}")
            coeff, mono = Fraction(1) / c, {symbol: 1}
            for w, e in exps.items():
                other = coords.get((w[1], w[2]))
                if other is None:
                    raise ArithmeticError(f"{what} restricts through an unsolved coordinate {w}")
                coeff /= other.coeff ** e
                mono = _lmul(mono, {s: -e * k for s, k in other.mono.items()})
            coords[var_root] = _Coordinate(coeff, mono)

        for xi in sorted(S, key=lambda r: (len(s_gamma(r, S)), r)):
            solve(xi, inv.minor_M(b, xi), generator_symbol("M", xi), f"M_{xi}")
        for phi in eb.Phi:
            solve(phi, inv.L_sum(b, phi), generator_symbol("L", phi), f"L_{phi}")
        return cls(b, coords)

    def rewrite(self, f: Polynomial) -> dict:
        """Restricted f as {Laurent monomial: coefficient}."""
        acc: dict = {}
        for m, c in restrict_to_canonical(f, self.blocks).terms.items():
            coeff, mono = Fraction(c), {}
            for v, e in m:
                co = self.coords[(v[1], v[2])]
                coeff *= co.coeff ** e
                mono = _lmul(mono, {s: k * e for s, k in co.mono.items()})
            key = tuple(sorted(mono.items()))
            acc[key] = acc.get(key, 0) + coeff
        return {k: c for k, c in acc.items() if c}


_CHARTS: dict = {}


def canonical_chart(b: BlockComposition) -> CanonicalChart:
    if b not in _CHARTS:
        _CHARTS[b] = CanonicalChart.build(b)
    return _CHARTS[b]


@dataclass(frozen=True)
class LaurentExpression:
    """numerator / denominator, the denominator a monomial in the M symbols, reduced."""

    numerator: Polynomial
    denominator: Polynomial = ONE

    @classmethod
    def from_terms(cls, terms: Mapping[LaurentMono, Fraction]) -> "LaurentExpression":
        low: dict = {}
        for mono in terms:
            for s, e in mono:
                low[s] = min(low.get(s, 0), e)
        num = {}
        for mono, c in terms.items():
            shifted = dict(mono)
            for s, e in low.items():
                shifted[s] = shifted.get(s, 0) - e
            num[tuple(sorted((s, e) for s, e in shifted.items() if e))] = c
        den = {(): 1} if not low else {tuple(sorted((s, -e) for s, e in low.items() if e)): 1}
        return cls(Polynomial(num), Polynomial(den))

    @property
    def is_polynomial(self) -> bool:
        return self.denominator == ONE

    def _terms(self) -> dict:
        (dm, dc), = self.denominator.terms.items()
        out = {}
        for m, c in self.numerator.terms.items():
            mono = dict(m)
            for s, e in dm:
                mono[s] = mono.get(s, 0) - e
            out[tuple(sorted((s, e) for s, e in mono.items() if e))] = Fraction(c) / dc
        return out

    def __mul__(self, other: "LaurentExpression") -> "LaurentExpression":
        acc: dict = {}
        for m1, c1 in self._terms().items():
            for m2, c2 in other._terms().items():
                key = tuple(sorted(_lmul(dict(m1), dict(m2)).items()))
                acc[key] = acc.get(key, 0) + c1 * c2
        return LaurentExpression.from_terms({k: c for k, c in acc.items() if c})

    def __str__(self) -> str:
        if self.is_polynomial:
            return str(self.numerator)
        return f"({self.numerator}) / ({self.denominator})"

    def realize(self, b: BlockComposition) -> Polynomial:
        """Substitute the actual minors M and L back in (exact division by the denominator)."""
        eb = expanded_base(b)
        mapping = {generator_symbol("M", xi): inv.minor_M(b, xi) for xi in eb.S}
        mapping.update({generator_symbol("L", phi): inv.L_sum(b, phi) for phi in eb.Phi})
        num = self.numerator.substitute(mapping)
        return num.exact_div(self.denominator.substitute(mapping))

    def to_json(self) -> dict:
        return {"numerator": str(self.numerator), "denominator": str(self.denominator),
                "polynomial": self.is_polynomial}


def express_in_generators(f: Polynomial, b: BlockComposition, check: bool = True) -> LaurentExpression:
    """Rewrite an invariant through its restriction to canonical matrices."""
    if check:
        res = is_invariant(f, b)
        if not res:
            raise NotInvariant(res.m, res.witness)
    return LaurentExpression.from_terms(canonical_chart(b).rewrite(f))


# ----------------------------------------------------------------------
# identity suite

def recursion_instances(b: BlockComposition):
    """(m, c1, c2, c3) for the A/C recursion: c2 < c3 consecutive in row m, c1 < c2."""
    sup = expanded_base(b).support
    for m in range(1, b.n):
        cols = [c for c in range(1, b.n + 1) if (m, c) in sup and (m + 1, c) in sup]
        for c2, c3 in zip(cols, cols[1:]):
            try:
                inv.abc_preconditions(b, "C", m, m + 1, c2, c3)
            except inv.Inapplicable:
                continue
            for c1 in cols:
                if c1 >= c2:
                    break
                try:
                    inv.abc_preconditions(b, "A", m, m + 1, c1, c2)
                    inv.abc_preconditions(b, "A", m, m + 1, c1, c3)
                except inv.Inapplicable:
                    continue
                yield m, c1, c2, c3


def _abc_quotient(b, kind, m, l, i, j) -> Polynomial:
    rep = inv.build_ABC(b, kind, ((m, i), (l, i), (m, j), (l, j)), allow_degenerate=True)
    label = f"{inv.DEFAULT_DENOMINATOR[kind]}@pair(m,i)"
    quot = rep.candidates[label][1]
    if quot is None:
        raise ArithmeticError(f"{kind} numerator is not divisible by {label}")
    return quot


def recursion_sides(b: BlockComposition, m: int, c1: int, c2: int, c3: int) -> tuple[Polynomial, Polynomial]:
    """L_(m+1,c1) M_xi' C_m^(c2)  and  A_m^(c1,c3) L_(m+1,c2) - A_m^(c1,c2) L_(m+1,c3).

    xi' is the second rook of the admissible pair of (m, c2).
    """
    xip = expanded_base(b).pair_of[(m, c2)].xip
    lhs = inv.L_symbol(b, m + 1, c1) * inv.minor_M(b, xip) * _abc_quotient(b, "C", m, m + 1, c2, c3)
    rhs = (_abc_quotient(b, "A", m, m + 1, c1, c3) * inv.L_symbol(b, m + 1, c2)
           - _abc_quotient(b, "A", m, m + 1, c1, c2) * inv.L_symbol(b, m + 1, c3))
    return lhs, rhs


def _equality(lhs: Polynomial, rhs: Polynomial) -> tuple[str, str | None]:
    diff = lhs - rhs
    return ("pass", None) if not diff else ("fail", f"difference {diff}")


def _roots_label(roots) -> str:
    return ",".join(f"({r[0]},{r[1]})" for r in roots)


def identity_suite(b: BlockComposition, timing: bool = False) -> list[CheckReport]:
    eb = expanded_base(b)
    reports = []
    for phi in eb.Phi:
        reports.append(run_check(f"L_tilde=L_sum {_roots_label([phi])}", b,
                                 lambda phi=phi: _equality(inv.L_tilde(b, phi), inv.L_sum(b, phi)), timing=timing))
    for kind in ("A", "B", "C"):
        for roots in inv.abc_instances(b, kind, include_degenerate=True):
            def division(kind=kind, roots=roots):
                rep = inv.build_ABC(b, kind, roots, allow_degenerate=True)
                label = f"{inv.DEFAULT_DENOMINATOR[kind]}@pair(m,i)"
                if rep.divides(label):
                    return "pass", None
                return "fail", f"{label} does not divide {rep.numerator}"

            reports.append(run_check(f"{kind}-division {_roots_label(roots)}", b, division, timing=timing))
            if kind == "C":
                (m, i) = roots[0]
                reports.append(run_check(
                    f"C=C_tilde {_roots_label(roots)}", b,
                    lambda m=m, i=i, roots=roots: _equality(_abc_quotient(b, "C", m, m + 1, i, roots[2][1]),
                                                            inv.C_tilde(b, m, i)),
                    timing=timing))
    for m, c1, c2, c3 in recursion_instances(b):
        reports.append(run_check(f"recursion m={m} columns={c1},{c2},{c3}", b,
                                 lambda args=(m, c1, c2, c3): _equality(*recursion_sides(b, *args)), timing=timing))
    if b.sizes == (1, 2, 2, 1):
        g = inv.generators_1221(b)
        reports.append(run_check("D=X^3[1,6]", b, lambda: _equality(inv.special_D(b), inv.formal_power(b, 3)[0, 5]),
                                 timing=timing))
        reports.append(run_check("D_1221 M2*D=L1*L2-M1*M3*M4", b, lambda: _equality(
            g["M2"] * inv.special_D(b), g["L1"] * g["L2"] - g["M1"] * g["M3"] * g["M4"]), timing=timing))
    if inv.is_2k2(b):
        g = inv.generators_2k2(b)
        k = b.sizes[1]
        reports.append(run_check("D_2k2 M1*N1*D=L12*L21-L11*L22", b, lambda: _equality(
            g["M1"] * g["N1"] * inv.special_D(b), g["L12"] * g["L21"] - g["L11"] * g["L22"]), timing=timing))
        reports.append(run_check(f"D=C_3^{k + 3}", b, lambda: _equality(
            inv.special_D(b), _abc_quotient(b, "C", 3, 4, k + 3, k + 4)), timing=timing))
    return sort_reports(reports)


# ----------------------------------------------------------------------
# relation search

@dataclass(frozen=True)
class Relation:
    degree: int
    polynomial: Polynomial  # in the generator names as auxiliary symbols

    def __str__(self) -> str:
        return str(self.polynomial)


def _weighted_monomials(weights: list[int], d: int) -> list[tuple[int, ...]]:
    out = []

    def rec(idx, left, prefix):
        if idx == len(weights):
            if left == 0:
                out.append(tuple(prefix))
            return
        for e in range(left // weights[idx] + 1):
            rec(idx + 1, left - e * weights[idx], prefix + [e])

    rec(0, d, [])
    return out


def _monomial_value(exps, values) -> int:
    out = 1
    for e, v in zip(exps, values):
        if e:
            out *= v ** e
    return out


def _realize(exps_list, coeffs, gens: list[Polynomial]) -> Polynomial:
    return poly_sum(c * poly_prod(g ** e for g, e in zip(gens, exps) if e) for exps, c in zip(exps_list, coeffs) if c)


def relation_search(named: Mapping[str, Polynomial], max_degree: int, seed: int = 0) -> list[Relation]:
    """Relations among homogeneous polynomials up to a weighted degree.

    At each degree the relation space is the kernel of an evaluation matrix
    at random integer points; every kernel vector is then verified as an exact
    polynomial identity, which makes the kernel exactly the relation space.
    Only relations outside the ideal of lower-degree ones are reported.
    """
    names = list(named)
    gens = [named[k] for k in names]
    for k, g in zip(names, gens):
        if not g or not g.is_homogeneous():
            raise ValueError(f"generator {k} must be a nonzero homogeneous polynomial")
    weights = [g.degree() for g in gens]
    variables = sorted({v for g in gens for v in g.variables()})
    rng = random.Random(seed)
    symbols = [sym(k) for k in names]
    found: list[tuple[int, tuple, list]] = []  # (degree, monomials, coefficients)
    out: list[Relation] = []
    for d in range(1, max_degree + 1):
        monos = _weighted_monomials(weights, d)
        if len(monos) < 2:
            continue
        index = {m: i for i, m in enumerate(monos)}
        while True:
            pts = [random_point(variables, rng) for _ in range(len(monos) + 4)]
            vals = [[g.evaluate(p) for g in gens] for p in pts]
            rows = [[_monomial_value(m, v) for m in monos] for v in vals]
            kernel = nullspace(rows, len(monos))
            if all(not _realize(monos, vec, gens) for vec in kernel):
                break
        # the part of degree d generated by lower relations
        ideal_rows = []
        for d0, monos0, vec0 in found:
            for shift in _weighted_monomials(weights, d - d0):
                row = [Fraction(0)] * len(monos)
                for m0, c in zip(monos0, vec0):
                    if c:
                        row[index[tuple(a + b for a, b in zip(m0, shift))]] += c
                ideal_rows.append(row)
        base_rank = rank(ideal_rows) if ideal_rows else 0
        for vec in kernel:
            if rank(ideal_rows + [vec]) > base_rank:
                ideal_rows.append(vec)
                base_rank += 1
                found.append((d, monos, vec))
                rel = _realize(monos, vec, symbols).content_normalized()
                out.append(Relation(d, rel))
    return out


def named_presentation(b: BlockComposition) -> dict[str, Polynomial]:
    """Generators under the X, Y, Z names used for the two special families."""
    if b.sizes == (1, 2, 2, 1):
        g = inv.generators_1221(b)
        return {"X1": g["M1"], "X2": g["M2"], "X3": g["M3"], "X4": g["M4"],
                "Y1": g["L1"], "Y2": g["L2"], "Z": inv.special_D(b)}
    if inv.is_2k2(b):
        g = inv.generators_2k2(b)
        return {"X1": g["M2"], "X2": g["M1"], "X3": g["N2"], "X4": g["N1"],
                "Y1": g["L11"], "Y2": g["L12"], "Y3": g["L21"], "Y4": g["L22"], "Z": inv.special_D(b)}
    raise inv.Inapplicable(f"no named presentation for blocks {b}")


def catalog_generators(b: BlockComposition) -> dict[str, Polynomial]:
    """M and L generators, plus D where it exists."""
    out = {e.name: e.polynomial for e in inv.catalog(b, extras=False)}
    try:
        out["D"] = inv.special_D(b)
    except inv.Inapplicable:
        pass
    return out


def default_relation_degree(b: BlockComposition) -> int:
    """One above the weighted degree of the known relation, else one above the heaviest generator."""
    if b.sizes == (1, 2, 2, 1):
        g = inv.generators_1221(b)
        return g["M2"].degree() + inv.special_D(b).degree() + 1
    if inv.is_2k2(b):
        g = inv.generators_2k2(b)
        return g["M1"].degree() + g["N1"].degree() + inv.special_D(b).degree() + 1
    return max((p.degree() for p in catalog_generators(b).values()), default=1) + 1


# ----------------------------------------------------------------------
# the degenerate family Q_1 for (2,k,2)

Q1_SYMBOLS = ("a1", "a2", "b1", "b2", "c11", "c12", "c21", "c22")


def q1_matrix(b: BlockComposition) -> dict[Var, Polynomial]:
    """Entries of the (2,k,2) matrix with M_1 = 0; every other x[i,j] is zero."""
    if not inv.is_2k2(b):
        raise inv.Inapplicable("Q_1 is defined for (2,k,2) with k > 3")
    k = b.sizes[1]
    s = {name: sym(name) for name in Q1_SYMBOLS}
    filled = {
        (1, 3): s["a2"], (2, 4): s["a1"],
        (3, k + 3): s["c11"], (3, k + 4): s["c12"], (4, k + 3): s["c21"], (4, k + 4): s["c22"],
        (k + 1, k + 4): s["b2"], (k + 2, k + 3): s["b1"],
    }
    return {entry(i, j): filled.get((i, j), Polynomial()) for i, j in roots_M(b)}


def q1_values(b: BlockComposition) -> dict[str, Polynomial]:
    point = q1_matrix(b)
    gens = dict(inv.generators_2k2(b))
    gens["D"] = inv.special_D(b)
    return {name: g.substitute(point) for name, g in gens.items()}


# ----------------------------------------------------------------------
# subalgebra membership (used by scan)

def in_span_of_products(f: Polynomial, gens: list[Polynomial], seed: int = 0) -> bool:
    """Whether homogeneous f is a linear combination of products of gens of the same degree.

    A negative answer from evaluation is certain; a positive one is confirmed
    symbolically before it is returned.
    """
    weights = [g.degree() for g in gens]
    keep = [i for i, w in enumerate(weights) if 0 < w <= f.degree()]
    gens = [gens[i] for i in keep]
    weights = [weights[i] for i in keep]
    monos = _weighted_monomials(weights, f.degree()) if gens else []
    if not monos:
        return False
    variables = sorted({v for g in gens + [f] for v in g.variables()})
    rng = random.Random(seed)
    while True:
        pts = [random_point(variables, rng) for _ in range(len(monos) + 4)]
        rows = []
        for p in pts:
            vals = [g.evaluate(p) for g in gens]
            rows.append([_monomial_value(m, vals) for m in monos] + [f.evaluate(p)])
        kernel = nullspace(rows, len(monos) + 1)
        usable = [vec for vec in kernel if vec[-1]]
        if not usable:
            return False
        vec = usable[0]
        coeffs = [-c / vec[-1] for c in vec[:-1]]
        if _realize(monos, coeffs, gens) == f:
            return True
        # unlucky points: sample again
