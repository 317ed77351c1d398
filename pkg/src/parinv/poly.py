"""Exact sparse multivariate polynomials over the rationals.

Variables are either entries ``x[i,j]`` of a formal matrix or named
auxiliary scalars (``t``, ``a1``, ``M_2_5``...).  A variable is stored as a
plain tuple so that the natural tuple order *is* the variable order:

    (0, i, j)   matrix entry x[i,j]
    (1, name)   auxiliary scalar

A monomial is a tuple of ``(var, exponent)`` pairs sorted by variable, and a
polynomial is a dict from monomial to a nonzero ``int`` or ``Fraction``.
Coefficients with denominator 1 are always stored as ``int``.
"""

from __future__ import annotations

import heapq
import re
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Union

Var = tuple
Monomial = tuple
Coeff = Union[int, Fraction]

ONE_MONO: Monomial = ()


class NotDivisible(ArithmeticError):
    """Raised by :meth:`Polynomial.exact_div` when the quotient is not a polynomial."""


class PolySyntaxError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        self.text = text
        self.pos = pos
        super().__init__(f"{message} at position {pos}: {text[:pos]}<<here>>{text[pos:]}")


def entry(i: int, j: int) -> Var:
    return (0, int(i), int(j))


def aux(name: str) -> Var:
    if not _IDENT.fullmatch(name):
        raise ValueError(f"invalid auxiliary variable name {name!r}")
    return (1, name)


def is_entry(v: Var) -> bool:
    return v[0] == 0


def var_name(v: Var) -> str:
    if v[0] == 0:
        return f"x[{v[1]},{v[2]}]"
    return v[1]


def _norm(c: Coeff) -> Coeff:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _div_coeff(a: Coeff, b: Coeff) -> Coeff:
    if isinstance(a, int) and isinstance(b, int) and a % b == 0:
        return a // b
    return _norm(Fraction(a) / b)


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for v, e in b:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


def _mono_deg(m: Monomial) -> int:
    return sum(e for _, e in m)


def _rev_var(v: Var) -> tuple:
    # Earlier variables map to larger keys.
    if v[0] == 0:
        return (1, -v[1], -v[2])
    return (0, tuple(-ord(ch) for ch in v[1]) + (1,))


def grlex_key(m: Monomial) -> tuple:
    """Sort key realising graded lexicographic order (larger key = larger monomial)."""
    return (_mono_deg(m), tuple((_rev_var(v), e) for v, e in m))


def _negate(key: tuple) -> tuple:
    return tuple(-k if isinstance(k, int) else _negate(k) for k in key)


def _heap_key(m: Monomial) -> tuple:
    # Ascending order of this key is descending grlex order.
    return _negate(grlex_key(m))


class Polynomial:
    """Immutable sparse polynomial with exact rational coefficients."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Coeff] | None = None):
        clean = {}
        if terms:
            for m, c in terms.items():
                if c:
                    clean[m] = _norm(c)
        self.terms: dict = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "Polynomial":
        p = object.__new__(cls)
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c: Coeff) -> "Polynomial":
        c = _norm(Fraction(c)) if isinstance(c, (Fraction, str)) else c
        return cls._raw({ONE_MONO: c} if c else {})

    @classmethod
    def var(cls, v: Var, exp: int = 1) -> "Polynomial":
        return cls._raw({((v, exp),): 1})

    @classmethod
    def coerce(cls, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return cls.const(other)
        raise TypeError(f"cannot convert {type(other).__name__} to Polynomial")

    # ------------------------------------------------------------------
    # ring operations

    def __add__(self, other) -> "Polynomial":
        try:
            other = Polynomial.coerce(other)
        except TypeError:
            return NotImplemented
        if len(other.terms) > len(self.terms):
            big, small = other.terms, self.terms
        else:
            big, small = self.terms, other.terms
        out = dict(big)
        for m, c in small.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = _norm(s)
            else:
                out.pop(m, None)
        return Polynomial._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw({m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "Polynomial":
        try:
            other = Polynomial.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return Polynomial.coerce(other) - self

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            if not other:
                return ZERO
            return Polynomial._raw({m: _norm(c * other) for m, c in self.terms.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self.terms, other.terms
        if not a or not b:
            return ZERO
        if len(a) < len(b):
            a, b = b, a
        out: dict = {}
        get = out.get
        for mb, cb in b.items():
            for ma, ca in a.items():
                m = _mono_mul(ma, mb)
                out[m] = get(m, 0) + ca * cb
        return Polynomial._raw({m: _norm(c) for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        return f"Polynomial({format_poly(self)!r})"

    def __str__(self) -> str:
        return format_poly(self)

    def __reduce__(self):
        return (Polynomial, (self.terms,))

    # ------------------------------------------------------------------
    # queries

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and ONE_MONO in self.terms)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(_mono_deg(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        return len({_mono_deg(m) for m in self.terms}) <= 1

    def variables(self) -> list:
        seen = set()
        for m in self.terms:
            seen.update(v for v, _ in m)
        return sorted(seen)

    def leading_term(self) -> tuple[Monomial, Coeff]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        m = max(self.terms, key=grlex_key)
        return m, self.terms[m]

    def sorted_terms(self) -> list[tuple[Monomial, Coeff]]:
        """Terms in descending graded lexicographic order."""
        return sorted(self.terms.items(), key=lambda mc: grlex_key(mc[0]), reverse=True)

    def content_normalized(self) -> "Polynomial":
        """Scale to primitive integer coefficients with positive leading coefficient."""
        if not self.terms:
            return self
        from math import gcd, lcm

        den = 1
        for c in self.terms.values():
            if isinstance(c, Fraction):
                den = lcm(den, c.denominator)
        ints = [int(c * den) for c in self.terms.values()]
        g = 0
        for c in ints:
            g = gcd(g, c)
        scale = Fraction(den, g)
        if self.leading_term()[1] < 0:
            scale = -scale
        return self * scale

    # ------------------------------------------------------------------
    # algebra

    def exact_div(self, d: "Polynomial") -> "Polynomial":
        """Return q with q*d == self, or raise NotDivisible."""
        d = Polynomial.coerce(d)
        if not d.terms:
            raise ZeroDivisionError("exact_div by the zero polynomial")
        if len(d.terms) == 1:
            return self._div_monomial(*next(iter(d.terms.items())))
        lm, lc = d.leading_term()
        lexp = dict(lm)
        rest = dict(self.terms)
        heap = [(_heap_key(m), m) for m in rest]
        heapq.heapify(heap)
        quot: dict = {}
        dterms = list(d.terms.items())
        while rest:
            m = heapq.heappop(heap)[1]
            c = rest.get(m)
            if c is None:
                continue
            me = dict(m)
            qm = []
            for v, e in me.items():
                r = e - lexp.get(v, 0)
                if r < 0:
                    raise NotDivisible(f"leading monomial not divisible while dividing by {d}")
                if r:
                    qm.append((v, r))
            if any(v not in me for v in lexp):
                raise NotDivisible(f"leading monomial not divisible while dividing by {d}")
            qm = tuple(qm)
            qc = _div_coeff(c, lc)
            quot[qm] = qc
            for dm, dc in dterms:
                pm = _mono_mul(qm, dm)
                old = rest.get(pm)
                s = (old or 0) - qc * dc
                if s:
                    rest[pm] = _norm(s)
                    if old is None:
                        heapq.heappush(heap, (_heap_key(pm), pm))
                elif old is not None:
                    del rest[pm]
        return Polynomial._raw(quot)

    def _div_monomial(self, dm: Monomial, dc: Coeff) -> "Polynomial":
        dexp = dict(dm)
        out = {}
        for m, c in self.terms.items():
            me = dict(m)
            for v, e in dexp.items():
                r = me.get(v, 0) - e
                if r < 0:
                    raise NotDivisible(f"term not divisible by monomial {format_poly(Polynomial._raw({dm: dc}))}")
                if r:
                    me[v] = r
                else:
                    del me[v]
            out[tuple(sorted(me.items()))] = _div_coeff(c, dc)
        return Polynomial._raw(out)

    def divides(self, f: "Polynomial") -> bool:
        try:
            f.exact_div(self)
        except NotDivisible:
            return False
        return True

    def substitute(self, mapping: Mapping[Var, "Polynomial"]) -> "Polynomial":
        """Image under the ring morphism sending v -> mapping[v] (identity elsewhere)."""
        if not mapping:
            return self
        powers: dict = {}

        def power(v, e):
            key = (v, e)
            p = powers.get(key)
            if p is None:
                p = Polynomial.coerce(mapping[v]) ** e
                powers[key] = p
            return p

        acc: dict = {}
        for m, c in self.terms.items():
            kept = []
            image = None
            for v, e in m:
                if v in mapping:
                    p = power(v, e)
                    image = p if image is None else image * p
                else:
                    kept.append((v, e))
            if image is None:
                km = tuple(kept)
                acc[km] = acc.get(km, 0) + c
                continue
            if kept:
                image = image * Polynomial._raw({tuple(kept): c})
            else:
                image = image * c
            for im, ic in image.terms.items():
                acc[im] = acc.get(im, 0) + ic
        return Polynomial._raw({m: _norm(c) for m, c in acc.items() if c})

    def drop_variables(self, dead: set) -> "Polynomial":
        """Substitute zero for every variable in ``dead``."""
        return Polynomial._raw({m: c for m, c in self.terms.items() if not any(v in dead for v, _ in m)})

    def derivative(self, v: Var) -> "Polynomial":
        out: dict = {}
        for m, c in self.terms.items():
            for idx, (w, e) in enumerate(m):
                if w == v:
                    nm = m[:idx] + ((w, e - 1),) + m[idx + 1:] if e > 1 else m[:idx] + m[idx + 1:]
                    out[nm] = out.get(nm, 0) + c * e
                    break
        return Polynomial._raw({m: _norm(c) for m, c in out.items() if c})

    def evaluate(self, point: Mapping[Var, Coeff]) -> Coeff:
        """Exact value at a point; every variable of the polynomial must be assigned."""
        total: Coeff = 0
        for m, c in self.terms.items():
            val = c
            for v, e in m:
                val = val * point[v] ** e
            total += val
        return _norm(total) if isinstance(total, Fraction) else total

    def map_coefficients(self, fn: Callable[[Coeff], Coeff]) -> "Polynomial":
        return Polynomial({m: fn(c) for m, c in self.terms.items()})


ZERO = Polynomial._raw({})
ONE = Polynomial._raw({ONE_MONO: 1})


def x(i: int, j: int) -> Polynomial:
    return Polynomial.var(entry(i, j))


def sym(name: str) -> Polynomial:
    return Polynomial.var(aux(name))


def poly_sum(items: Iterable[Polynomial]) -> Polynomial:
    acc: dict = {}
    for p in items:
        for m, c in p.terms.items():
            acc[m] = acc.get(m, 0) + c
    return Polynomial._raw({m: _norm(c) for m, c in acc.items() if c})


def poly_prod(items: Iterable[Polynomial]) -> Polynomial:
    out = ONE
    for p in items:
        out = out * p
    return out


# ----------------------------------------------------------------------
# text format

def _format_coeff(c: Coeff) -> str:
    if isinstance(c, Fraction):
        return f"{c.numerator}/{c.denominator}"
    return str(c)


def format_monomial(m: Monomial) -> str:
    parts = []
    for v, e in sorted(m, key=lambda ve: _rev_var(ve[0]), reverse=True):
        name = var_name(v)
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts)


def format_poly(p: Polynomial) -> str:
    """Canonical text: terms in descending graded lexicographic order."""
    if not p.terms:
        return "0"
    out = []
    for idx, (m, c) in enumerate(p.sorted_terms()):
        neg = c < 0
        a = -c if neg else c
        body = format_monomial(m)
        if not body:
            text = _format_coeff(a)
        elif a == 1:
            text = body
        else:
            text = f"{_format_coeff(a)}*{body}"
        if idx == 0:
            out.append(f"-{text}" if neg else text)
        else:
            out.append(f" - {text}" if neg else f" + {text}")
    return "".join(out)


_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_TOKEN = re.compile(
    r"\s*(?:(?P<entry>x\s*\[\s*(?P<i>\d+)\s*,\s*(?P<j>\d+)\s*\])"
    r"|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<num>\d+)"
    r"|(?P<op>[-+*/^]))"
)


def _tokenize(text: str) -> list[tuple[str, object, int]]:
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        mt = _TOKEN.match(text, pos)
        if mt is None:
            raise PolySyntaxError(f"unexpected character {text[pos]!r}", text, pos)
        start = pos
        if mt.group("entry"):
            tokens.append(("var", entry(int(mt.group("i")), int(mt.group("j"))), start))
        elif mt.group("ident"):
            tokens.append(("var", (1, mt.group("ident")), start))
        elif mt.group("num"):
            tokens.append(("num", int(mt.group("num")), start))
        else:
            tokens.append((mt.group("op"), None, start))
        pos = mt.end()
    tokens.append(("end", None, n))
    return tokens


def parse_poly(text: str) -> Polynomial:
    """Parse the polynomial text grammar (see README); raises PolySyntaxError."""
    toks = _tokenize(text)
    k = 0

    def peek():
        return toks[k]

    def take(kind):
        nonlocal k
        tok = toks[k]
        if tok[0] != kind:
            expected = {"num": "a number", "var": "a variable"}.get(kind, repr(kind))
            found = "end of input" if tok[0] == "end" else repr(text[tok[2]:tok[2] + 8].split()[0])
            raise PolySyntaxError(f"expected {expected}, found {found}", text, tok[2])
        k += 1
        return tok

    def factor() -> Monomial:
        v = take("var")[1]
        e = 1
        if peek()[0] == "^":
            take("^")
            e = take("num")[1]
            if e == 0:
                return ()
        return ((v, e),)

    def term(sign: int) -> tuple[Monomial, Coeff]:
        coeff: Coeff = sign
        mono: Monomial = ()
        if peek()[0] == "num":
            num = take("num")[1]
            if peek()[0] == "/":
                take("/")
                den_tok = take("num")
                if den_tok[1] == 0:
                    raise PolySyntaxError("zero denominator", text, den_tok[2])
                coeff = Fraction(sign * num, den_tok[1])
            else:
                coeff = sign * num
            if peek()[0] != "*":
                return mono, coeff
            take("*")
        mono = _mono_mul(mono, factor())
        while peek()[0] == "*":
            take("*")
            mono = _mono_mul(mono, factor())
        return mono, coeff

    acc: dict = {}
    sign = 1
    if peek()[0] in "+-" and peek()[0] != "end":
        sign = -1 if take(peek()[0])[0] == "-" else 1
    while True:
        m, c = term(sign)
        acc[m] = acc.get(m, 0) + c
        tok = peek()
        if tok[0] == "end":
            break
        if tok[0] not in ("+", "-"):
            raise PolySyntaxError(f"expected '+', '-' or end of input, found {tok[0]!r}", text, tok[2])
        sign = 1 if take(tok[0])[0] == "+" else -1
    return Polynomial({m: c for m, c in acc.items()})


# ----------------------------------------------------------------------
# matrices

class PolyMatrix:
    """Sparse matrix of polynomials; absent entries are zero.  Indices are 0-based."""

    __slots__ = ("nrows", "ncols", "entries")

    def __init__(self, nrows: int, ncols: int, entries: Mapping[tuple[int, int], Polynomial] | None = None):
        self.nrows = nrows
        self.ncols = ncols
        clean = {}
        for (r, c), p in (entries or {}).items():
            if not (0 <= r < nrows and 0 <= c < ncols):
                raise IndexError(f"entry ({r},{c}) outside a {nrows}x{ncols} matrix")
            p = Polynomial.coerce(p)
            if p:
                clean[(r, c)] = p
        self.entries = clean

    @classmethod
    def from_rows(cls, rows: list[list]) -> "PolyMatrix":
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        ents = {}
        for r, row in enumerate(rows):
            if len(row) != ncols:
                raise ValueError("ragged rows")
            for c, p in enumerate(row):
                ents[(r, c)] = Polynomial.coerce(p)
        return cls(nrows, ncols, ents)

    @classmethod
    def identity(cls, n: int) -> "PolyMatrix":
        return cls(n, n, {(i, i): ONE for i in range(n)})

    def __getitem__(self, rc: tuple[int, int]) -> Polynomial:
        return self.entries.get(rc, ZERO)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return (self.nrows, self.ncols, self.entries) == (other.nrows, other.ncols, other.entries)

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        by_row: dict = {}
        for (r, c), p in other.entries.items():
            by_row.setdefault(r, []).append((c, p))
        acc: dict = {}
        for (r, k), p in self.entries.items():
            for c, q in by_row.get(k, ()):
                acc.setdefault((r, c), []).append(p * q)
        return PolyMatrix(self.nrows, other.ncols, {rc: poly_sum(ps) for rc, ps in acc.items()})

    def submatrix(self, rows: list[int], cols: list[int]) -> "PolyMatrix":
        rpos = {r: a for a, r in enumerate(rows)}
        cpos = {c: b for b, c in enumerate(cols)}
        ents = {}
        for (r, c), p in self.entries.items():
            if r in rpos and c in cpos:
                ents[(rpos[r], cpos[c])] = p
        return PolyMatrix(len(rows), len(cols), ents)

    def map(self, fn: Callable[[Polynomial], Polynomial]) -> "PolyMatrix":
        return PolyMatrix(self.nrows, self.ncols, {rc: fn(p) for rc, p in self.entries.items()})

    def rows(self) -> list[list[Polynomial]]:
        return [[self[r, c] for c in range(self.ncols)] for r in range(self.nrows)]

    def __repr__(self) -> str:
        return f"PolyMatrix({self.nrows}x{self.ncols}, nnz={len(self.entries)})"


def matrix_power(m: PolyMatrix, k: int) -> PolyMatrix:
    if m.nrows != m.ncols:
        raise ValueError("matrix_power needs a square matrix")
    if k < 0:
        raise ValueError("negative power")
    result = PolyMatrix.identity(m.nrows)
    for _ in range(k):
        result = result @ m
    return result


def det(m: PolyMatrix, method: str = "auto") -> Polynomial:
    """Exact determinant.

    ``cofactor`` expands along rows with memoisation on the set of remaining
    columns, which is cheap for the very sparse formal matrices used here.
    ``bareiss`` is fraction-free elimination; ``auto`` picks cofactor unless
    the matrix is both large and dense.
    """
    if m.nrows != m.ncols:
        raise ValueError(f"determinant of a non-square {m.nrows}x{m.ncols} matrix")
    n = m.nrows
    if n == 0:
        return ONE
    if method == "auto":
        method = "bareiss" if n > 9 and len(m.entries) > 0.6 * n * n else "cofactor"
    if method == "cofactor":
        return _det_cofactor(m)
    if method == "bareiss":
        return _det_bareiss(m)
    raise ValueError(f"unknown determinant method {method!r}")


def _det_cofactor(m: PolyMatrix) -> Polynomial:
    n = m.nrows
    row_entries: list[list[tuple[int, Polynomial]]] = [[] for _ in range(n)]
    for (r, c), p in m.entries.items():
        row_entries[r].append((c, p))
    if any(not row for row in row_entries):
        return ZERO
    col_used = set(c for (_, c) in m.entries)
    if len(col_used) < n:
        return ZERO
    # Expand sparse rows first; the row permutation contributes a sign.
    order = sorted(range(n), key=lambda r: (len(row_entries[r]), r))
    perm_sign = _perm_sign(order)
    rows = [sorted(row_entries[r]) for r in order]
    memo: dict = {}

    def rec(depth: int, mask: int) -> Polynomial:
        if depth == n:
            return ONE
        hit = memo.get(mask)
        if hit is not None:
            return hit
        acc = []
        for c, p in rows[depth]:
            bit = 1 << c
            if mask & bit:
                continue
            sub = rec(depth + 1, mask | bit)
            if not sub:
                continue
            # sign of the cofactor: number of free columns to the left of c
            left = bin(~mask & (bit - 1)).count("1")
            term = p * sub
            acc.append(-term if left & 1 else term)
        res = poly_sum(acc)
        memo[mask] = res
        return res

    out = rec(0, 0)
    return -out if perm_sign < 0 else out


def _perm_sign(perm: list[int]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _det_bareiss(m: PolyMatrix) -> Polynomial:
    n = m.nrows
    a = [[m[r, c] for c in range(n)] for r in range(n)]
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if not a[k][k]:
            swap = next((r for r in range(k + 1, n) if a[r][k]), None)
            if swap is None:
                return ZERO
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        piv = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * piv - a[i][k] * a[k][j]
                a[i][j] = num.exact_div(prev) if num else ZERO
            a[i][k] = ZERO
        prev = piv
    out = a[n - 1][n - 1]
    return -out if sign < 0 else out
