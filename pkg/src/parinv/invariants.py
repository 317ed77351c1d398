"""Invariant polynomials of the unitriangular group on a parabolic nilradical.

Every construction here is a determinant of submatrices of the formal matrix
X (variables x[i,j] at the positions of M, zeros elsewhere) and its powers.
Rows and columns of every minor are taken in ascending order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

from .parabolic import BlockComposition, Root, expanded_base, s_gamma
from .poly import (
    NotDivisible,
    PolyMatrix,
    Polynomial,
    det,
    entry,
    poly_sum,
)


class InvalidSpec(ValueError):
    def __init__(self, condition: int, message: str):
        self.condition = condition
        super().__init__(f"condition {condition}: {message}")


class Inapplicable(ValueError):
    """The requested construction is not defined for these roots."""


# ----------------------------------------------------------------------
# formal matrix and its powers

@lru_cache(maxsize=None)
def formal_matrix(b: BlockComposition) -> PolyMatrix:
    n = b.n
    ents = {}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if b.in_m(i, j):
                ents[(i - 1, j - 1)] = Polynomial.var(entry(i, j))
    return PolyMatrix(n, n, ents)


@lru_cache(maxsize=None)
def formal_power(b: BlockComposition, k: int) -> PolyMatrix:
    if k < 1:
        raise ValueError("power must be positive")
    if k == 1:
        return formal_matrix(b)
    return formal_power(b, k - 1) @ formal_matrix(b)


def power_nonzero(b: BlockComposition, k: int, a: int, c: int) -> bool:
    """Whether (X^k)[a, c] is a nonzero polynomial (needs a chain of k block jumps)."""
    if not (1 <= a <= b.n and 1 <= c <= b.n):
        return False
    return b.block(c) - b.block(a) >= k


def minor(b: BlockComposition, rows, cols, power: int = 1) -> Polynomial:
    """Determinant of (X^power) on 1-based rows/cols (sorted ascending)."""
    rows, cols = sorted(rows), sorted(cols)
    if len(rows) != len(cols):
        raise ValueError("minor needs as many rows as columns")
    sub = formal_power(b, power).submatrix([r - 1 for r in rows], [c - 1 for c in cols])
    return det(sub)


# ----------------------------------------------------------------------
# basic invariants

def minor_rows_cols(b: BlockComposition, gamma: Root) -> tuple[list[int], list[int]]:
    eb = expanded_base(b)
    sg = s_gamma(gamma, list(eb.S))
    rows = sorted([gamma[0]] + [r for r, _ in sg])
    cols = sorted([c for _, c in sg] + [gamma[1]])
    return rows, cols


@lru_cache(maxsize=None)
def minor_M(b: BlockComposition, gamma: Root) -> Polynomial:
    if not b.in_m(*gamma):
        raise ValueError(f"root {gamma} is not in M for blocks {b}")
    rows, cols = minor_rows_cols(b, gamma)
    return minor(b, rows, cols)


def pair_for(b: BlockComposition, phi: Root):
    eb = expanded_base(b)
    q = eb.pair_of.get(tuple(phi))
    if q is None:
        raise ValueError(f"root {phi} is not in Phi for blocks {b}")
    return q


@lru_cache(maxsize=None)
def L_sum(b: BlockComposition, phi: Root) -> Polynomial:
    """Sum over split points c of alpha_q: M_(a1,c) * M_(c,a4)."""
    q = pair_for(b, phi)
    a1, a2 = q.xi
    a3, a4 = q.xip
    return poly_sum(minor_M(b, (a1, c)) * minor_M(b, (c, a4)) for c in range(a2, a3 + 1))


# ----------------------------------------------------------------------
# combined minors

@dataclass(frozen=True)
class CombinedMinorSpec:
    """Row systems I_1..I_k and column systems J_1..J_k (each a run of consecutive positions).

    The determinant has block (l, m), m >= l, equal to X^(m-l+1) on rows I_l
    and columns J_(k-m+1); blocks below the diagonal vanish.
    """

    rows: tuple[tuple[int, ...], ...]
    cols: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(tuple(sorted(r)) for r in self.rows))
        object.__setattr__(self, "cols", tuple(tuple(sorted(c)) for c in self.cols))
        if len(self.rows) != len(self.cols) or not self.rows:
            raise InvalidSpec(0, "need k >= 1 row systems and as many column systems")

    @classmethod
    def from_intervals(cls, rows, cols) -> "CombinedMinorSpec":
        """Build from (lo, hi) pairs, ``None`` meaning an empty system."""

        def expand(iv):
            return () if iv is None else tuple(range(iv[0], iv[1] + 1))

        return cls(tuple(expand(r) for r in rows), tuple(expand(c) for c in cols))

    @property
    def k(self) -> int:
        return len(self.rows)

    @property
    def order(self) -> int:
        return sum(len(r) for r in self.rows)

    def diagonal_pairs(self) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
        """(I_l, J_(k-l+1)) for l = 1..k: the systems meeting in the l-th diagonal block."""
        return [(self.rows[l], self.cols[self.k - 1 - l]) for l in range(self.k)]

    def block_columns(self) -> list[tuple[int, ...]]:
        """Column systems in left-to-right block order: J_k, J_(k-1), ..., J_1."""
        return [self.cols[self.k - 1 - m] for m in range(self.k)]

    def label(self) -> str:
        def fmt(sys):
            if not sys:
                return "-"
            return str(sys[0]) if len(sys) == 1 else f"{sys[0]}..{sys[-1]}"

        return "I=" + ";".join(fmt(r) for r in self.rows) + " J=" + ";".join(fmt(c) for c in self.cols)

    def to_json(self) -> dict:
        return {"k": self.k, "I": [list(r) for r in self.rows], "J": [list(c) for c in self.cols]}


def _check_interval(sys: tuple[int, ...], what: str) -> None:
    if sys and list(sys) != list(range(sys[0], sys[-1] + 1)):
        raise InvalidSpec(2, f"{what} = {list(sys)} is not a set of consecutive positions")


def validate_spec(b: BlockComposition, spec: CombinedMinorSpec) -> None:
    """Raise InvalidSpec naming the first violated condition."""
    n = b.n
    for sys in spec.rows + spec.cols:
        if sys and (sys[0] < 1 or sys[-1] > n):
            raise InvalidSpec(0, f"positions {list(sys)} outside 1..{n}")
    if sum(map(len, spec.rows)) != sum(map(len, spec.cols)):
        raise InvalidSpec(1, f"|I| total {sum(map(len, spec.rows))} != |J| total {sum(map(len, spec.cols))}")
    for l, sys in enumerate(spec.rows, 1):
        _check_interval(sys, f"I_{l}")
    for l, sys in enumerate(spec.cols, 1):
        _check_interval(sys, f"J_{l}")
    nonempty_rows = [r for r in spec.rows if r]
    for a, c in zip(nonempty_rows, nonempty_rows[1:]):
        if not a[-1] < c[0]:
            raise InvalidSpec(3, f"row systems {list(a)} and {list(c)} are not increasing")
    nonempty_cols = [c for c in spec.cols if c]
    for a, c in zip(nonempty_cols, nonempty_cols[1:]):
        if not a[0] > c[-1]:
            raise InvalidSpec(3, f"column systems {list(a)} and {list(c)} are not decreasing")
    _check_bordering(b, spec)
    _check_closure(b, spec)


def _check_closure(b: BlockComposition, spec: CombinedMinorSpec) -> None:
    """Boundary rows and columns must vanish on the minor or factor through the next power.

    Row r of X^d is sum_p x[r,p] * (row p of X^(d-1)), so when the row just
    below a row system meets the minor it must do so only through selected
    rows of the next system; likewise for the column just left of a column
    system.  Under this the elementary unitriangular moves change the minor
    by a nilpotent row (column) operation, which keeps the determinant.
    """
    k, n = spec.k, b.n
    rows, bcols = spec.rows, spec.block_columns()

    def row_hits(l: int, r: int) -> bool:
        return any(power_nonzero(b, m - l + 1, r, c) for m in range(l, k) for c in bcols[m])

    def col_hits(m: int, c: int) -> bool:
        return any(power_nonzero(b, m - l + 1, a, c) for l in range(m + 1) for a in rows[l])

    for l in range(k):
        if not rows[l] or rows[l][-1] == n:
            continue
        r = rows[l][-1] + 1
        if not row_hits(l, r):
            continue
        if any(b.in_m(r, c) for c in bcols[l]):
            raise InvalidSpec(5, f"row {r} below I_{l + 1} meets the minor in X itself")
        for p in range(r + 1, n + 1):
            if b.in_m(r, p) and l + 1 < k and row_hits(l + 1, p) and p not in rows[l + 1]:
                raise InvalidSpec(5, f"row {r} below I_{l + 1} reaches the minor through unselected row {p}")
    for m in range(k):
        if not bcols[m] or bcols[m][0] == 1:
            continue
        c = bcols[m][0] - 1
        if not col_hits(m, c):
            continue
        if any(b.in_m(a, c) for a in rows[m]):
            raise InvalidSpec(5, f"column {c} left of J_{k - m} meets the minor in X itself")
        for p in range(1, c):
            if b.in_m(p, c) and m >= 1 and col_hits(m - 1, p) and p not in bcols[m - 1]:
                raise InvalidSpec(5, f"column {c} left of J_{k - m} reaches the minor through unselected column {p}")


def _check_bordering(b: BlockComposition, spec: CombinedMinorSpec) -> None:
    """Every corner block must have zeros below it and to its left.

    The corner of a nonempty row system I_l is the first block to its right
    with a nonempty column system, X^d with d the block distance + 1.  For a
    diagonal pair with both systems nonempty this is the literal condition on
    X itself; empty systems shift the corner into a higher power of X.
    """
    k = spec.k
    bcols = spec.block_columns()
    for l in range(k):
        rows = spec.rows[l]
        if not rows:
            continue
        m = next((m for m in range(l, k) if bcols[m]), None)
        if m is None:
            continue
        d, cols = m - l + 1, bcols[m]
        for a in rows:
            for c in range(1, cols[0]):
                if power_nonzero(b, d, a, c):
                    raise InvalidSpec(4, f"(X^{d})[{a},{c}] left of corner rows {list(rows)} is nonzero")
    for m in range(k):
        cols = bcols[m]
        if not cols:
            continue
        l = next((l for l in range(m, -1, -1) if spec.rows[l]), None)
        if l is None:
            continue
        d, rows = m - l + 1, spec.rows[l]
        for a in range(rows[-1] + 1, b.n + 1):
            for c in cols:
                if power_nonzero(b, d, a, c):
                    raise InvalidSpec(4, f"(X^{d})[{a},{c}] below corner columns {list(cols)} is nonzero")


def combined_minor_matrix(b: BlockComposition, spec: CombinedMinorSpec) -> PolyMatrix:
    k = spec.k
    bcols = spec.block_columns()
    row_off = [0]
    for r in spec.rows:
        row_off.append(row_off[-1] + len(r))
    col_off = [0]
    for c in bcols:
        col_off.append(col_off[-1] + len(c))
    ents = {}
    for l in range(k):
        for m in range(l, k):
            if not spec.rows[l] or not bcols[m]:
                continue
            xp = formal_power(b, m - l + 1)
            for a, r in enumerate(spec.rows[l]):
                for c_idx, c in enumerate(bcols[m]):
                    p = xp[r - 1, c - 1]
                    if p:
                        ents[(row_off[l] + a, col_off[m] + c_idx)] = p
    return PolyMatrix(row_off[-1], col_off[-1], ents)


@lru_cache(maxsize=2048)
def _combined_minor_cached(b: BlockComposition, spec: CombinedMinorSpec) -> Polynomial:
    return det(combined_minor_matrix(b, spec))


def combined_minor(b: BlockComposition, spec: CombinedMinorSpec, validate: bool = True) -> Polynomial:
    if validate:
        validate_spec(b, spec)
    elif spec.order != sum(map(len, spec.cols)):
        raise InvalidSpec(1, "row and column totals differ")
    return _combined_minor_cached(b, spec)


def L_tilde_spec(b: BlockComposition, phi: Root) -> CombinedMinorSpec:
    q = pair_for(b, phi)
    S = list(expanded_base(b).S)
    (i, j), (l, m) = q.xi, q.xip
    p, qq = len(s_gamma(q.xi, S)), len(s_gamma(q.xip, S))
    I = tuple(range(i, i + p + 1))
    J = tuple(range(m - qq, m + 1))
    Ip = tuple(range(l + 1, l + qq + 1))
    Jp = tuple(range(j - p, j))
    return CombinedMinorSpec((I, Ip), (J, Jp))


@lru_cache(maxsize=None)
def L_tilde(b: BlockComposition, phi: Root) -> Polynomial:
    return combined_minor(b, L_tilde_spec(b, phi), validate=False)


# ----------------------------------------------------------------------
# the A / B / C families

def L_symbol(b: BlockComposition, r: int, c: int) -> Polynomial:
    """L_(r,c): L_phi on Phi, M_(a,r) * M_(r,c) on S when a rook sits in column r."""
    eb = expanded_base(b)
    if (r, c) in eb.pair_of:
        return L_sum(b, (r, c))
    if (r, c) in eb.S:
        above = eb.rook_in_column(r)
        if above is None:
            raise Inapplicable(f"L_({r},{c}) undefined: no rook in column {r}")
        return minor_M(b, above) * minor_M(b, (r, c))
    raise Inapplicable(f"({r},{c}) is not in the expanded base")


@dataclass
class DivisionReport:
    kind: str
    roots: tuple[Root, Root, Root, Root]
    numerator: Polynomial
    candidates: dict = field(default_factory=dict)  # label -> (denominator roots, quotient or None)
    chosen: str | None = None

    @property
    def quotient(self) -> Polynomial | None:
        if self.chosen is None:
            return None
        return self.candidates[self.chosen][1]

    def divides(self, label: str) -> bool:
        return self.candidates.get(label, (None, None))[1] is not None


DEFAULT_DENOMINATOR = {"A": "M_xi", "B": "M_xip", "C": "M_xi*M_xip"}


def abc_preconditions(b: BlockComposition, kind: str, m: int, l: int, i: int, j: int) -> None:
    eb = expanded_base(b)
    sup = eb.support
    if kind not in DEFAULT_DENOMINATOR:
        raise ValueError(f"unknown kind {kind!r}")
    if not (m < l and i < j):
        raise Inapplicable("need m < l and i < j")
    missing = [r for r in ((m, i), (l, i), (m, j), (l, j)) if r not in sup]
    if missing:
        raise Inapplicable(f"roots {missing} not in the expanded base")
    if (m, i) not in eb.pair_of:
        raise Inapplicable(f"({m},{i}) is not in Phi")
    if kind in ("A", "C") and l != m + 1:
        raise Inapplicable(f"{kind} needs l = m + 1")
    if kind in ("B", "C"):
        between = [c for c in range(i + 1, j) if (m, c) in sup]
        if between:
            raise Inapplicable(f"({m},{between[0]}) lies in the expanded base between columns {i} and {j}")


def abc_degenerate(b: BlockComposition, kind: str, m: int, l: int, i: int, j: int) -> str | None:
    """Why an A or B instance is only a product with C, or None.

    A on columns adjacent in row m equals C * M_xi'; B with l = m + 1 has
    the numerator of C and equals C * M_xi.
    """
    sup = expanded_base(b).support
    if kind == "A" and not any((m, c) in sup for c in range(i + 1, j)):
        return f"columns {i},{j} are adjacent in row {m}: A = C * M_xi'"
    if kind == "B" and l == m + 1:
        return "l = m + 1: B = C * M_xi"
    return None


def abc_numerator(b: BlockComposition, kind: str, m: int, l: int, i: int, j: int) -> Polynomial:
    if kind == "B":
        return L_symbol(b, m, j) * L_symbol(b, l, i) - L_symbol(b, l, j) * L_symbol(b, m, i)
    return L_symbol(b, m + 1, i) * L_symbol(b, m, j) - L_symbol(b, m + 1, j) * L_symbol(b, m, i)


def abc_bindings(b: BlockComposition, m: int, l: int, i: int, j: int) -> dict[str, tuple[Root, Root]]:
    """Candidate (xi, xi') bindings for the denominators.

    ``pair(m,i)`` is the admissible pair of (m,i) as in the definitions;
    ``column(l,j)`` is the rook in column l with the pair partner of (l,j)
    (or (l,j) itself when it is a rook), as used for the combined-minor form.
    """
    eb = expanded_base(b)
    out = {}
    q = eb.pair_of[(m, i)]
    out["pair(m,i)"] = (q.xi, q.xip)
    top = eb.rook_in_column(l)
    if top is not None:
        if (l, j) in eb.pair_of:
            out["column(l,j)"] = (top, eb.pair_of[(l, j)].xip)
        elif (l, j) in eb.S:
            out["column(l,j)"] = (top, (l, j))
    if (m, j) in eb.pair_of:
        out["pair(m,j)"] = (eb.pair_of[(m, j)].xi, eb.pair_of[(m, j)].xip)
    return out


def build_ABC(b: BlockComposition, kind: str, roots, allow_degenerate: bool = False) -> DivisionReport:
    """Numerator of A/B/C divided by every candidate denominator.

    ``roots`` are (m,i), (l,i), (m,j), (l,j).  The returned report's
    ``chosen`` candidate is the definition's denominator under the
    pair(m,i) binding when it divides, otherwise the first binding that does.
    Degenerate A/B instances (see :func:`abc_degenerate`) are refused unless
    ``allow_degenerate``.
    """
    (m, i), (l, i2), (m2, j), (l2, j2) = roots
    if (i, m, l, j) != (i2, m2, l2, j2):
        raise Inapplicable(f"roots {roots} are not of the form (m,i),(l,i),(m,j),(l,j)")
    abc_preconditions(b, kind, m, l, i, j)
    if not allow_degenerate:
        reason = abc_degenerate(b, kind, m, l, i, j)
        if reason:
            raise Inapplicable(f"{kind} not defined here: {reason}")
    num = abc_numerator(b, kind, m, l, i, j)
    report = DivisionReport(kind, tuple(tuple(r) for r in roots), num)
    for name, (xi, xip) in abc_bindings(b, m, l, i, j).items():
        for shape in ("M_xi", "M_xip", "M_xi*M_xip"):
            den_roots = {"M_xi": (xi,), "M_xip": (xip,), "M_xi*M_xip": (xi, xip)}[shape]
            label = f"{shape}@{name}"
            den = Polynomial.const(1)
            for r in den_roots:
                den = den * minor_M(b, r)
            try:
                quot = num.exact_div(den)
            except NotDivisible:
                quot = None
            report.candidates[label] = (den_roots, quot)
    wanted = DEFAULT_DENOMINATOR[kind]
    for name in ("pair(m,i)", "column(l,j)", "pair(m,j)"):
        label = f"{wanted}@{name}"
        if report.divides(label):
            report.chosen = label
            break
    return report


def C_tilde_spec(b: BlockComposition, m: int, i: int) -> tuple[CombinedMinorSpec, dict]:
    eb = expanded_base(b)
    sup = eb.support
    j = next((c for c in range(i + 1, b.n + 1) if (m, c) in sup), None)
    if j is None:
        raise Inapplicable(f"no root of the expanded base in row {m} right of column {i}")
    abc_preconditions(b, "C", m, m + 1, i, j)
    xi = eb.rook_in_column(m + 1)
    if xi is None:
        raise Inapplicable(f"no rook in column {m + 1}")
    if (m + 1, j) in eb.pair_of:
        xip = eb.pair_of[(m + 1, j)].xip
    elif (m + 1, j) in eb.S:
        xip = (m + 1, j)
    else:
        raise Inapplicable(f"({m + 1},{j}) not in the expanded base")
    S = list(eb.S)
    a, bb = xi[0], xip[0]
    p, q = len(s_gamma(xi, S)), len(s_gamma(xip, S))
    I = tuple(range(a, a + p + 1))
    J = tuple(range(j - q, j + 1))
    Ip = tuple(range(bb + 2, bb + q + 1))
    Jp = tuple(range(m - p + 1, m))
    info = {"j": j, "xi": xi, "xip": xip, "p": p, "q": q}
    return CombinedMinorSpec((I, Ip), (J, Jp)), info


def C_tilde(b: BlockComposition, m: int, i: int) -> Polynomial:
    spec, _ = C_tilde_spec(b, m, i)
    return combined_minor(b, spec, validate=False)


def abc_instances(b: BlockComposition, kind: str,
                  include_degenerate: bool = False) -> Iterator[tuple[Root, Root, Root, Root]]:
    """All root quadruples of the expanded base satisfying the kind's preconditions."""
    eb = expanded_base(b)
    sup = sorted(eb.support)
    for (m, i) in sup:
        for (l, j) in sup:
            try:
                abc_preconditions(b, kind, m, l, i, j)
                for r, c in ((m + 1, i), (m, j), (m + 1, j)) if kind != "B" else ((m, j), (l, i), (l, j)):
                    L_symbol(b, r, c)
                L_symbol(b, m, i)
            except Inapplicable:
                continue
            if not include_degenerate and abc_degenerate(b, kind, m, l, i, j):
                continue
            yield ((m, i), (l, i), (m, j), (l, j))


# ----------------------------------------------------------------------
# the special generators D

def is_2k2(b: BlockComposition) -> bool:
    return len(b.sizes) == 3 and b.sizes[0] == 2 and b.sizes[2] == 2 and b.sizes[1] > 3


def special_D(b: BlockComposition) -> Polynomial:
    if b.sizes == (1, 2, 2, 1):
        return formal_power(b, 3)[0, 5]
    if is_2k2(b):
        names = generators_2k2(b)
        num = names["L12"] * names["L21"] - names["L11"] * names["L22"]
        return num.exact_div(names["M1"] * names["N1"])
    raise Inapplicable(f"no special D for blocks {b}; supported: (2,k,2) with k > 3 and (1,2,2,1)")


def generators_2k2(b: BlockComposition) -> dict[str, Polynomial]:
    """The named generators of the (2,k,2) case."""
    k = b.sizes[1]
    return {
        "M1": minor_M(b, (2, 3)),
        "M2": minor_M(b, (1, 4)),
        "N1": minor_M(b, (k + 2, k + 3)),
        "N2": minor_M(b, (k + 1, k + 4)),
        "L11": L_sum(b, (3, k + 3)),
        "L12": L_sum(b, (3, k + 4)),
        "L21": L_sum(b, (4, k + 3)),
        "L22": L_sum(b, (4, k + 4)),
    }


def generators_1221(b: BlockComposition) -> dict[str, Polynomial]:
    return {
        "M1": minor_M(b, (1, 2)),
        "M2": minor_M(b, (3, 4)),
        "M3": minor_M(b, (2, 5)),
        "M4": minor_M(b, (5, 6)),
        "L1": L_sum(b, (2, 4)),
        "L2": L_sum(b, (4, 6)),
    }


# ----------------------------------------------------------------------
# catalog

@dataclass
class CatalogEntry:
    name: str
    kind: str
    defining_roots: list
    polynomial: Polynomial
    construction: str = ""
    denominators: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "kind": self.kind,
            "defining_roots": [list(r) for r in self.defining_roots],
            "polynomial": str(self.polynomial),
            "degree": self.polynomial.degree(),
            "term_count": len(self.polynomial.terms),
        }


def gen_name(kind: str, root: Root) -> str:
    return f"{kind}_{root[0]}_{root[1]}"


def catalog(b: BlockComposition, extras: bool = True) -> list[CatalogEntry]:
    eb = expanded_base(b)
    out = [CatalogEntry(gen_name("M", xi), "M", [xi], minor_M(b, xi), "minor") for xi in eb.S]
    out += [CatalogEntry(gen_name("L", phi), "L", [phi], L_sum(b, phi), "split-point sum") for phi in eb.Phi]
    if not extras:
        return out
    for kind in ("A", "B", "C"):
        for roots in abc_instances(b, kind):
            rep = build_ABC(b, kind, roots)
            if rep.quotient is None or rep.quotient.is_constant():
                continue
            (m, i), (l, _), (_, j), _ = roots
            name = f"{kind}_{m}_{l}_{i}_{j}"
            den_roots = list(rep.candidates[rep.chosen][0])
            out.append(CatalogEntry(name, kind, list(roots), rep.quotient, f"exact division by {rep.chosen}", den_roots))
    try:
        out.append(CatalogEntry("D", "D", [], special_D(b), "special"))
    except Inapplicable:
        pass
    return out


# ----------------------------------------------------------------------
# enumeration of combined-minor specs

def _intervals(n: int) -> list[tuple[int, ...]]:
    return [tuple(range(lo, hi + 1)) for lo in range(1, n + 1) for hi in range(lo, n + 1)]


def enumerate_specs(b: BlockComposition, max_k: int, max_order: int) -> list[CombinedMinorSpec]:
    """Valid specs with k <= max_k and order <= max_order whose minor is nonzero.

    Leading or trailing diagonal pairs with both systems empty are dropped
    (they reduce to a smaller k); specs giving a polynomial already produced
    (up to sign) are skipped.  Output order: by k, then order, then systems.
    """
    if max_k < 1 or max_order < 1:
        raise ValueError("bounds must be >= 1")
    n = b.n
    ivs = [()] + _intervals(n)
    seen: set = set()
    out: list[CombinedMinorSpec] = []
    for k in range(1, max_k + 1):
        found = []
        for rows in _increasing_systems(ivs, k, max_order):
            total = sum(map(len, rows))
            if total == 0:
                continue
            for cols in _decreasing_systems(ivs, k, total):
                spec = CombinedMinorSpec(rows, cols)
                pairs = spec.diagonal_pairs()
                if pairs[0] == ((), ()) or pairs[-1] == ((), ()):
                    continue
                try:
                    validate_spec(b, spec)
                except InvalidSpec:
                    continue
                found.append(spec)
        found.sort(key=lambda s: (s.order, s.rows, s.cols))
        for spec in found:
            poly = combined_minor(b, spec, validate=False)
            if not poly:
                continue
            key = poly if poly.leading_term()[1] > 0 else -poly
            if key in seen:
                continue
            seen.add(key)
            out.append(spec)
    return out


def _increasing_systems(ivs, k: int, max_total: int):
    def rec(prefix, last_max, total):
        if len(prefix) == k:
            yield tuple(prefix)
            return
        for iv in ivs:
            if iv and (iv[0] <= last_max or total + len(iv) > max_total):
                continue
            yield from rec(prefix + [iv], iv[-1] if iv else last_max, total + len(iv))

    yield from rec([], 0, 0)


def _decreasing_systems(ivs, k: int, total: int):
    def rec(prefix, last_min, remaining):
        if len(prefix) == k:
            if remaining == 0:
                yield tuple(prefix)
            return
        for iv in ivs:
            if iv and (iv[-1] >= last_min or len(iv) > remaining):
                continue
            yield from rec(prefix + [iv], iv[0] if iv else last_min, remaining - len(iv))

    yield from rec([], 10 ** 9, total)
