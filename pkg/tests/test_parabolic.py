import json
from pathlib import Path

import pytest

from parinv.parabolic import (
    BlockComposition,
    admissible_pairs,
    build_base,
    compare_roots,
    compositions,
    expanded_base,
    parse_diagram,
    render_diagram,
    roots_M,
    s_gamma,
)

GOLDEN = Path(__file__).parent / "golden"

B = BlockComposition

# positions of the rooks and crosses drawn in the four reference diagrams
DIAGRAMS = {
    (2, 1, 3, 2): ({(2, 3), (3, 4), (6, 7), (5, 8), (1, 5)}, {(4, 7), (4, 8), (5, 7)}),
    (3, 1, 4, 1, 2, 3): (
        {(3, 4), (4, 5), (8, 9), (9, 10), (11, 12), (10, 13), (2, 6), (1, 7), (7, 11), (6, 14)},
        {(5, 9), (6, 9), (7, 9), (5, 11), (6, 11), (5, 14), (10, 12)},
    ),
    (2, 4, 2): ({(1, 4), (2, 3), (5, 8), (6, 7)}, {(3, 7), (3, 8), (4, 7), (4, 8)}),
    (1, 2, 2, 1): ({(1, 2), (3, 4), (2, 5), (5, 6)}, {(2, 4), (4, 6)}),
}


def suite(max_n=8):
    return [b for n in range(2, max_n + 1) for b in compositions(n, min_blocks=2)]


def test_block_composition_basics():
    b = B((2, 1, 3, 2))
    assert b.n == 8 and b.s == 4
    assert b.boundaries == (0, 2, 3, 6, 8)
    assert [b.block(i) for i in range(1, 9)] == [1, 1, 2, 3, 3, 3, 4, 4]
    assert str(b) == "2,1,3,2"
    assert B.parse(" 2, 1,3 ,2") == b


@pytest.mark.parametrize("text", ["", "2,,1", "2,0", "a,b", "-1,3"])
def test_parse_rejects_bad_blocks(text):
    with pytest.raises(ValueError):
        B.parse(text)


def test_compositions_count():
    assert sum(1 for _ in compositions(8)) == 128
    assert len(suite()) == sum(2 ** (n - 1) - 1 for n in range(2, 9))


def test_roots_M_examples():
    assert roots_M(B((5,))) == []
    assert roots_M(B((1, 1))) == [(1, 2)]
    assert len(roots_M(B((1, 2, 2, 1)))) == 13


def test_compare_roots():
    b = B((1, 2, 2, 1))
    assert compare_roots((2, 5), (3, 5), b) == "succeeds"
    assert compare_roots((3, 5), (2, 5), b) == "precedes"
    assert compare_roots((1, 2), (3, 4), b) == "incomparable"
    assert compare_roots((2, 4), (2, 3), B((2, 1, 3, 2))) == "incomparable"


@pytest.mark.parametrize("sizes", list(DIAGRAMS))
def test_base_and_phi_match_diagrams(sizes):
    eb = expanded_base(B(sizes))
    S, Phi = DIAGRAMS[sizes]
    assert set(eb.S) == S
    assert set(eb.Phi) == Phi


def test_all_ones_base_is_superdiagonal():
    assert build_base(B((1,) * 6)) == [(i, i + 1) for i in range(1, 6)]


def test_pairs_of_1221():
    eb = expanded_base(B((1, 2, 2, 1)))
    assert [(q.xi, q.xip, q.phi) for q in eb.Q] == [((1, 2), (3, 4), (2, 4)), ((3, 4), (5, 6), (4, 6))]


def test_s_gamma_examples():
    S = list(expanded_base(B((1, 2, 2, 1))).S)
    assert s_gamma((2, 5), S) == [(3, 4)]
    assert s_gamma((1, 2), S) == []
    S = list(expanded_base(B((3, 1, 4, 1, 2, 3))).S)
    assert sorted(s_gamma((2, 6), S)) == [(3, 4), (4, 5)]
    assert sorted(s_gamma((6, 14), S)) == sorted([(8, 9), (9, 10), (7, 11), (10, 13), (11, 12)])


@pytest.mark.parametrize("b", suite(), ids=str)
def test_expanded_base_invariants(b):
    eb = expanded_base(b)
    rows = [r for r, _ in eb.S]
    cols = [c for _, c in eb.S]
    assert len(set(rows)) == len(rows) and len(set(cols)) == len(cols)
    assert all(b.in_m(*r) for r in eb.S)
    for u in eb.S:
        for v in eb.S:
            if u != v:
                assert compare_roots(u, v, b) == "incomparable"
    assert not set(eb.S) & set(eb.Phi)
    for q in eb.Q:
        (_, a2), (a3, a4) = q.xi, q.xip
        assert a2 < a3 and b.block(a2) == b.block(a3)
        assert q.alpha == (a2, a3) and q.phi == (a2, a4)
    assert len(eb.Q) == len(set(eb.Phi))
    # transpose symmetry and strip-order independence
    assert len(build_base(b.reversed())) == len(eb.S)
    starts = list(range(1, b.s))
    assert build_base(b, strip_order=starts[::-1]) == list(eb.S)


def test_admissible_pairs_direct():
    b = B((2, 1, 3, 2))
    Q, Phi = admissible_pairs(build_base(b), b)
    assert Phi == [(4, 7), (4, 8), (5, 7)]


@pytest.mark.parametrize("sizes", list(DIAGRAMS))
def test_diagram_golden(sizes):
    b = B(sizes)
    text = render_diagram(b)
    name = "diagram_" + "-".join(map(str, sizes)) + ".txt"
    assert text + "\n" == (GOLDEN / name).read_text()
    assert parse_diagram(text) == DIAGRAMS[sizes]


def test_unicode_diagram_marks():
    text = render_diagram(B((1, 2, 2, 1)), unicode=True)
    assert "⊗" in text and "×" in text and "O" not in text
    assert parse_diagram(text) == DIAGRAMS[(1, 2, 2, 1)]


def test_single_block_diagram_is_empty():
    text = render_diagram(B((6,)))
    assert parse_diagram(text) == (set(), set())


def test_json_diagram_schema():
    data = json.loads(render_diagram(B((2, 4, 2)), fmt="json"))
    assert list(data) == ["n", "blocks", "S", "Phi", "Q"]
    assert data["n"] == 8 and data["blocks"] == [2, 4, 2]
    assert data["S"] == sorted(data["S"])
    assert data["Phi"] == [[3, 7], [3, 8], [4, 7], [4, 8]]
    assert set(data["Q"][0]) == {"xi", "xip", "alpha", "phi"}


def test_render_rejects_unknown_format():
    with pytest.raises(ValueError):
        render_diagram(B((1, 1)), fmt="svg")
