"""Acceptance criteria, one test each.

Every test prints a ``[criterion N] PASS|FAIL`` line (visible without -s)
and then asserts, so a failure is reported both ways.
"""

import json
import time
from pathlib import Path

import pytest

from parinv import invariants as inv
from parinv import verify as V
from parinv.cli import main
from parinv.parabolic import BlockComposition, compositions, expanded_base, parse_diagram, render_diagram, s_gamma
from parinv.poly import parse_poly, sym, x

B = BlockComposition
GOLDEN = Path(__file__).parent / "golden"
SUITE = [b for n in range(2, 9) for b in compositions(n, min_blocks=2)]
B1221, B242, BIG = B((1, 2, 2, 1)), B((2, 4, 2)), B((3, 1, 4, 1, 2, 3))

# rook (S) and cross (Phi) cells of the four reference diagrams
DIAGRAMS = {
    (2, 1, 3, 2): ({(2, 3), (3, 4), (6, 7), (5, 8), (1, 5)}, {(4, 7), (4, 8), (5, 7)}),
    (3, 1, 4, 1, 2, 3): (
        {(3, 4), (4, 5), (8, 9), (9, 10), (11, 12), (10, 13), (2, 6), (1, 7), (7, 11), (6, 14)},
        {(5, 9), (6, 9), (7, 9), (5, 11), (6, 11), (5, 14), (10, 12)},
    ),
    (2, 4, 2): ({(1, 4), (2, 3), (5, 8), (6, 7)}, {(3, 7), (3, 8), (4, 7), (4, 8)}),
    (1, 2, 2, 1): ({(1, 2), (3, 4), (2, 5), (5, 6)}, {(2, 4), (4, 6)}),
}


@pytest.fixture
def verdict(capsys):
    def emit(n, ok, detail):
        with capsys.disabled():
            print(f"\n[criterion {n:>2}] {'PASS' if ok else 'FAIL'}  {detail}")
        assert ok, detail
    return emit


def _squarefree(p):
    (mono, coeff), = p.terms.items()
    assert coeff in (1, -1)
    return {(v[1], v[2]) for v, e in mono if e == 1}, all(e == 1 for _, e in mono)


def test_criterion_01_diagrams(verdict):
    failures, slowest = [], 0.0
    for sizes, expected in DIAGRAMS.items():
        t0 = time.perf_counter()
        text = render_diagram(B(sizes))
        slowest = max(slowest, time.perf_counter() - t0)
        golden = (GOLDEN / ("diagram_" + "-".join(map(str, sizes)) + ".txt")).read_text()
        if parse_diagram(text) != expected or text + "\n" != golden:
            failures.append(sizes)
    verdict(1, not failures and slowest < 1.0, f"4 diagrams, mismatches {failures}, slowest {slowest:.3f}s")


def test_criterion_02_invariance_suite(verdict):
    t0 = time.perf_counter()
    failures, count = [], 0
    for b in SUITE:
        eb = expanded_base(b)
        polys = [inv.minor_M(b, xi) for xi in eb.S] + [inv.L_sum(b, phi) for phi in eb.Phi]
        for f in polys:
            count += 1
            res = V.is_invariant(f, b)
            if not res:
                failures.append((str(b), res.m))
    elapsed = time.perf_counter() - t0
    verdict(2, not failures and elapsed < 600,
            f"{len(SUITE)} compositions, {count} invariants, failures {failures[:5]}, {elapsed:.1f}s")


def test_criterion_03_L_tilde_equals_L(verdict):
    failures, count = [], 0
    for b in SUITE:
        for phi in expanded_base(b).Phi:
            count += 1
            if inv.L_tilde(b, phi) != inv.L_sum(b, phi):
                failures.append((str(b), phi))
    verdict(3, not failures, f"{count} roots phi, failures {failures[:5]}")


def test_criterion_04_C_equals_C_tilde(verdict):
    spec, _ = inv.C_tilde_spec(BIG, 5, 11)
    (I, Ip), (J, Jp) = spec.rows, spec.cols
    sets_ok = (I == (2, 3, 4) and Jp == (4,) and Ip == (8, 9, 10, 11) and J == tuple(range(9, 15)))
    rep = inv.build_ABC(BIG, "C", ((5, 11), (6, 11), (5, 14), (6, 14)))
    equal = rep.quotient == inv.C_tilde(BIG, 5, 11)
    verdict(4, sets_ok and equal, f"index sets {'ok' if sets_ok else (I, Jp, Ip, J)}, C == C_tilde: {equal}")


def test_criterion_05_exact_divisions(verdict):
    failures, divisions = [], 0
    for b in SUITE + [BIG]:
        for kind in "ABC":
            for roots in inv.abc_instances(b, kind, include_degenerate=True):
                divisions += 1
                rep = inv.build_ABC(b, kind, roots, allow_degenerate=True)
                if not rep.divides(f"{inv.DEFAULT_DENOMINATOR[kind]}@pair(m,i)"):
                    failures.append((str(b), kind, roots))
    recursions = list(V.recursion_instances(BIG))
    for args in recursions:
        lhs, rhs = V.recursion_sides(BIG, *args)
        if lhs != rhs:
            failures.append(("recursion", args))
    ok = not failures and divisions > 0 and recursions
    verdict(5, ok, f"{divisions} divisions, {len(recursions)} recursion instances, failures {failures}")


def test_criterion_06_1221_identities(verdict):
    t0 = time.perf_counter()
    g = inv.generators_1221(B1221)
    D = inv.special_D(B1221)
    ident = g["M2"] * D == g["L1"] * g["L2"] - g["M1"] * g["M3"] * g["M4"]
    entry = D == inv.formal_power(B1221, 3)[0, 5]
    elapsed = time.perf_counter() - t0
    verdict(6, ident and entry and elapsed < 1.0,
            f"M2*D identity {ident}, D = X^3[1,6] {entry}, {elapsed:.3f}s")


def test_criterion_07_2k2_identity(verdict):
    results = {}
    for k in (4, 5, 6):
        b = B((2, k, 2))
        g = inv.generators_2k2(b)
        results[k] = g["M1"] * g["N1"] * inv.special_D(b) == g["L12"] * g["L21"] - g["L11"] * g["L22"]
    verdict(7, all(results.values()), f"k -> holds: {results}")


def test_criterion_08_independence(verdict):
    failures = []
    for b in SUITE:
        eb = expanded_base(b)
        fs = [inv.minor_M(b, xi) for xi in eb.S] + [inv.L_sum(b, phi) for phi in eb.Phi]
        res = V.jacobian_independent(fs, seed=0)
        if res.status != "independent" or res.rank != len(eb.S) + len(eb.Phi):
            failures.append(str(b))
    # both families satisfy a relation, so rank |gens| - 1 is the generic rank
    r242 = V.jacobian_independent(list(V.catalog_generators(B242).values()), seed=0)
    r1221 = V.jacobian_independent(list(V.catalog_generators(B1221).values()), seed=0)
    ok = not failures and r242.rank == 8 and r1221.rank == 6
    ok = ok and len(V.catalog_generators(B242)) == 9 and len(V.catalog_generators(B1221)) == 7
    verdict(8, ok, f"{len(SUITE)} compositions, failures {failures[:5]}, "
                   f"(2,4,2) rank {r242.rank}/9, (1,2,2,1) rank {r1221.rank}/7")


def test_criterion_09_non_membership(verdict):
    g2 = inv.generators_2k2(B242)
    g1 = inv.generators_1221(B1221)
    expected = {
        B242: sym("M_2_3") * sym("M_6_7"),
        B1221: sym("M_3_4"),
    }
    # the symbols above name exactly M1*N1 and M2
    names_ok = (inv.minor_M(B242, (2, 3)) == g2["M1"] and inv.minor_M(B242, (6, 7)) == g2["N1"]
                and inv.minor_M(B1221, (3, 4)) == g1["M2"])
    details, ok = [], names_ok
    for b, den in expected.items():
        e = V.express_in_generators(inv.special_D(b), b)
        reduced = all(not sym(s).divides(e.numerator) for s in ("M_2_3", "M_6_7", "M_3_4"))
        good = e.denominator == den and reduced and e.realize(b) == inv.special_D(b)
        ok = ok and good
        details.append(f"{b}: D = {e}")
    verdict(9, ok, "; ".join(details))


def test_criterion_10_relations(verdict):
    expected = {
        B242: parse_poly("X2*X4*Z - Y2*Y3 + Y1*Y4"),
        B1221: parse_poly("X2*Z - Y1*Y2 + X1*X3*X4"),
    }
    details, ok = [], True
    for b, rel in expected.items():
        found = V.relation_search(V.named_presentation(b), V.default_relation_degree(b))
        polys = [r.polynomial for r in found]
        good = len(found) == 1 and polys[0] in (rel, -rel)
        ok = ok and good
        details.append(f"{b}: {[str(p) for p in polys]}")
    verdict(10, ok, "; ".join(details))


def test_criterion_11_canonical_restriction(verdict):
    failures, checked = [], 0
    for b in SUITE + [BIG]:
        eb = expanded_base(b)
        S = list(eb.S)
        for xi in S:
            checked += 1
            r = V.restrict_to_canonical(inv.minor_M(b, xi), b)
            if not r.is_monomial() or _squarefree(r) != ({xi, *s_gamma(xi, S)}, True):
                failures.append((str(b), "M", xi))
        for phi in eb.Phi:
            checked += 1
            q = eb.pair_of[phi]
            r = V.restrict_to_canonical(inv.L_tilde(b, phi), b)
            want = {q.xi, phi, *s_gamma(q.xi, S), *s_gamma(q.xip, S)}
            if not r.is_monomial() or _squarefree(r) != (want, True):
                failures.append((str(b), "L", phi))
        for (m, i), _, (_, j), _ in inv.abc_instances(b, "C"):
            checked += 1
            spec, info = inv.C_tilde_spec(b, m, i)
            r = V.restrict_to_canonical(inv.C_tilde(b, m, i), b)
            binom = x(m + 1, i) * x(m, j) - x(m, i) * x(m + 1, j)
            if len(r.terms) != 2 or not binom.divides(r):
                failures.append((str(b), "C", (m, i)))
                continue
            cofactor = r.exact_div(binom)
            vars_, square_free = _squarefree(cofactor)
            S_xi = set(s_gamma(info["xi"], S))
            S_xip = set(s_gamma(info["xip"], S))
            shape = (square_free and {info["xi"], *S_xi} <= vars_
                     and len(vars_ - {info["xi"], *S_xi}) == len(S_xip) - 1
                     and vars_ - {info["xi"], *S_xi} <= S_xip)
            if not shape:
                failures.append((str(b), "C", (m, i)))
    verdict(11, not failures and checked, f"{checked} restrictions, failures {failures[:5]}")


def test_criterion_12_scan(verdict, capsys):
    t0 = time.perf_counter()
    code = main(["scan", "--max-n", "7", "--max-k", "3", "--format", "json"])
    rows = json.loads(capsys.readouterr().out)
    elapsed = time.perf_counter() - t0
    falsified = [r for r in rows if not r["invariant"]]
    d_rows = [r for r in rows if r["blocks"] == [1, 2, 2, 1] and r["label"] == "I=1;-;- J=6;-;-"]
    d_new = len(d_rows) == 1 and d_rows[0]["new_generator"] is True
    ok = code == 0 and not falsified and d_new and elapsed < 1800
    verdict(12, ok, f"{len(rows)} minors, {len(falsified)} falsifications, "
                    f"(1,2,2,1) D flagged new: {d_new}, {elapsed:.0f}s")
