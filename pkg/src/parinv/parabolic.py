"""Root combinatorics of a parabolic nilradical given by its block sizes."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterator, Literal

Root = tuple[int, int]
Comparison = Literal["succeeds", "precedes", "incomparable"]


@dataclass(frozen=True)
class BlockComposition:
    """Block sizes (n_1, ..., n_s) of the reductive part; positions are 1-based."""

    sizes: tuple[int, ...]

    def __post_init__(self):
        sizes = tuple(int(s) for s in self.sizes)
        if not sizes or any(s < 1 for s in sizes):
            raise ValueError(f"block sizes must be positive integers, got {self.sizes!r}")
        object.__setattr__(self, "sizes", sizes)

    @classmethod
    def parse(cls, text: str) -> "BlockComposition":
        try:
            sizes = tuple(int(tok) for tok in text.replace(" ", "").split(","))
        except ValueError:
            raise ValueError(f"malformed block composition {text!r}; expected e.g. 2,1,3,2") from None
        return cls(sizes)

    def __str__(self) -> str:
        return ",".join(map(str, self.sizes))

    @property
    def s(self) -> int:
        return len(self.sizes)

    @cached_property
    def n(self) -> int:
        return sum(self.sizes)

    @cached_property
    def boundaries(self) -> tuple[int, ...]:
        """R_0 = 0, R_k = n_1 + ... + n_k."""
        out = [0]
        for size in self.sizes:
            out.append(out[-1] + size)
        return tuple(out)

    @cached_property
    def _block_of(self) -> tuple[int, ...]:
        out = [0]
        for k, size in enumerate(self.sizes, start=1):
            out.extend([k] * size)
        return tuple(out)

    def block(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise IndexError(f"position {i} outside 1..{self.n}")
        return self._block_of[i]

    def block_positions(self, k: int) -> range:
        return range(self.boundaries[k - 1] + 1, self.boundaries[k] + 1)

    def in_m(self, i: int, j: int) -> bool:
        return 1 <= i < j <= self.n and self._block_of[i] < self._block_of[j]

    def reversed(self) -> "BlockComposition":
        return BlockComposition(tuple(reversed(self.sizes)))


def compositions(n: int, min_blocks: int = 1) -> Iterator[BlockComposition]:
    """All compositions of n in lexicographic order."""

    def rec(rest: int, prefix: tuple[int, ...]):
        if rest == 0:
            yield prefix
            return
        for first in range(1, rest + 1):
            yield from rec(rest - first, prefix + (first,))

    for sizes in rec(n, ()):
        if len(sizes) >= min_blocks:
            yield BlockComposition(sizes)


def roots_M(b: BlockComposition) -> list[Root]:
    return [(i, j) for i in range(1, b.n + 1) for j in range(i + 1, b.n + 1) if b.in_m(i, j)]


def compare_roots(gp: Root, g: Root, b: BlockComposition) -> Comparison:
    """Whether gp - g (or g - gp) is a positive root of the reductive part."""

    def above(u: Root, v: Root) -> bool:
        (i1, j1), (i2, j2) = u, v
        if i1 == i2 and j2 < j1 and b.block(j1) == b.block(j2):
            return True
        return j1 == j2 and i1 < i2 and b.block(i1) == b.block(i2)

    if above(gp, g):
        return "succeeds"
    if above(g, gp):
        return "precedes"
    return "incomparable"


def build_base(b: BlockComposition, strip_order: list[int] | None = None) -> list[Root]:
    """Rook placement: strips by increasing block distance, rows bottom-up, columns left-to-right.

    ``strip_order`` permutes the processing order of strips at equal distance
    (used only to check that the order is immaterial).
    """
    s = b.s
    free_rows = set(range(1, b.n + 1))
    free_cols = set(range(1, b.n + 1))
    rooks: list[Root] = []
    for d in range(1, s):
        starts = list(range(1, s - d + 1))
        if strip_order is not None:
            starts = [a for a in strip_order if a in starts]
        for a in starts:
            rows = [r for r in reversed(b.block_positions(a)) if r in free_rows]
            cols = [c for c in b.block_positions(a + d) if c in free_cols]
            for r, c in zip(rows, cols):
                rooks.append((r, c))
                free_rows.discard(r)
                free_cols.discard(c)
    return sorted(rooks)


@dataclass(frozen=True)
class AdmissiblePair:
    xi: Root
    xip: Root
    alpha: Root
    phi: Root


def admissible_pairs(S: list[Root], b: BlockComposition) -> tuple[list[AdmissiblePair], list[Root]]:
    Q = []
    for xi in S:
        for xip in S:
            a2, a3 = xi[1], xip[0]
            if a2 < a3 and b.block(a2) == b.block(a3):
                Q.append(AdmissiblePair(xi, xip, (a2, a3), (a2, xip[1])))
    Q.sort(key=lambda q: (q.xi, q.xip))
    phis = [q.phi for q in Q]
    if len(set(phis)) != len(phis):
        raise AssertionError(f"admissible pairs of {b} do not determine Phi injectively")
    return Q, sorted(phis)


def s_gamma(gamma: Root, S: list[Root]) -> list[Root]:
    a, bcol = gamma
    return [(i, j) for (i, j) in S if i > a and j < bcol]


@dataclass(frozen=True)
class ExpandedBase:
    blocks: BlockComposition
    S: tuple[Root, ...]
    Q: tuple[AdmissiblePair, ...]
    Phi: tuple[Root, ...]
    pair_of: dict = field(compare=False, hash=False, repr=False)

    @property
    def support(self) -> frozenset:
        return frozenset(self.S) | frozenset(self.Phi)

    def rook_in_column(self, c: int) -> Root | None:
        return next((xi for xi in self.S if xi[1] == c), None)

    def rook_in_row(self, r: int) -> Root | None:
        return next((xi for xi in self.S if xi[0] == r), None)

    def to_json(self) -> dict:
        return {
            "n": self.blocks.n,
            "blocks": list(self.blocks.sizes),
            "S": [list(r) for r in self.S],
            "Phi": [list(r) for r in self.Phi],
            "Q": [
                {"xi": list(q.xi), "xip": list(q.xip), "alpha": list(q.alpha), "phi": list(q.phi)}
                for q in self.Q
            ],
        }


@lru_cache(maxsize=None)
def expanded_base(b: BlockComposition) -> ExpandedBase:
    S = build_base(b)
    Q, Phi = admissible_pairs(S, b)
    return ExpandedBase(b, tuple(S), tuple(Q), tuple(Phi), {q.phi: q for q in Q})


def render_diagram(b: BlockComposition, fmt: str = "text", unicode: bool = False) -> str:
    """Text grid (``O`` = base rook, ``X`` = element of Phi) or the JSON schema."""
    eb = expanded_base(b)
    if fmt == "json":
        return json.dumps(eb.to_json(), sort_keys=False)
    if fmt != "text":
        raise ValueError(f"unknown diagram format {fmt!r}")
    rook, cross = ("⊗", "×") if unicode else ("O", "X")
    S, Phi = set(eb.S), set(eb.Phi)
    n = b.n
    width = len(str(n))
    starts = {b.boundaries[k - 1] + 1 for k in range(1, b.s + 1)}

    def cell(i: int, j: int) -> str:
        if (i, j) in S:
            return rook
        if (i, j) in Phi:
            return cross
        if i == j:
            return "1"
        return " "

    def rule() -> str:
        parts = []
        for j in range(1, n + 1):
            if j in starts:
                parts.append("+")
            parts.append("-" * (width + 1))
        return " " * (width + 1) + "".join(parts) + "+"

    header = " " * (width + 1)
    for j in range(1, n + 1):
        if j in starts:
            header += " "
        header += str(j).rjust(width + 1)
    lines = [header.rstrip()]
    for i in range(1, n + 1):
        if i in starts:
            lines.append(rule())
        row = str(i).rjust(width) + " "
        for j in range(1, n + 1):
            if j in starts:
                row += "|"
            row += cell(i, j).rjust(width + 1)
        lines.append(row + "|")
    lines.append(rule())
    return "\n".join(lines)


def parse_diagram(text: str) -> tuple[set[Root], set[Root]]:
    """Recover (S, Phi) positions from a text diagram; used by golden tests."""
    S, Phi = set(), set()
    for line in text.splitlines():
        if "|" not in line or not line.strip()[:1].isdigit():
            continue
        label, body = line.split("|", 1)
        i, w = int(label), len(label)
        cells = body.replace("|", "")
        for col in range(1, len(cells) // w + 1):
            ch = cells[(col - 1) * w:col * w].strip()
            if ch in ("O", "⊗"):
                S.add((i, col))
            elif ch in ("X", "×"):
                Phi.add((i, col))
    return S, Phi
