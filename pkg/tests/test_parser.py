import pytest
from hypothesis import given, settings

from conftest import weyl_elements
from weylfc.errors import OperatorSyntaxError, UnknownSymbol
from weylfc.lauricella.operators import (
    ParamSet,
    S,
    S_ab,
    T,
    T_pair,
    ell,
    ell_ij,
    ell_prime,
)
from weylfc.parser import format_operator, parse_operator, tokenize
from weylfc.weyl import WeylContext, WeylElement

HAND_WRITTEN = [
    "0", "1", "-3/4", "x1", "d1", "h", "a", "c3", "x1*d1", "d1*x1",
    "d1^3*x1^2", "(x1 + d1)^3", "x1*x2*d1*d2 - x2*d2", "a*b*x1 - c1*d1",
    "-(x1*d1 + a)*(x1*d1 + b)", "1/2*x1^2*d1 + 2/3", "y1*d1 - y2*d2",
    "y1^3*d1^2 - (y1*d1 + y2*d2 - a)*(y1*d1 + y2*d2 - b)",
    "x1*d1*h^2 + x1^2*d1^2", "d2*x2*d2*x2", "(a - b)*(a + b)*x1",
    "x1*(x2*(x3*d3))", "+x1 - -d1", "x4*d4 - x1*d1", "c1*c2*x1*x2",
]


def family_operators():
    out = []
    for m in (1, 2, 3, 4):
        P = ParamSet.symbolic(m)
        for i in range(1, m + 1):
            out += [ell(P, i), ell_prime(P, i), S(P, i), T(P, i)]
            for j in range(i + 1, m + 1):
                out += [ell_ij(P, i, j), T_pair(P, i, j)]
        out.append(S_ab(P, -1, -1))
    return out


CORPUS = HAND_WRITTEN + [str(p) for p in family_operators()]


def test_corpus_size():
    assert len(CORPUS) >= 50


@pytest.mark.parametrize("text", CORPUS)
def test_round_trip(text):
    p = parse_operator(text)
    again = parse_operator(format_operator(p), ctx=p.ctx)
    assert again == p
    assert format_operator(again) == format_operator(p)


def test_family_operators_reparse_exactly():
    for p in family_operators():
        assert parse_operator(str(p), ctx=p.ctx) == p


def test_normal_ordering():
    assert str(parse_operator("d1*x1")) == "x1*d1 + 1"
    assert str(parse_operator("d1*x1*h")) == "x1*d1*h + h^3"


def test_context_inference():
    assert parse_operator("x3").ctx == WeylContext(3)
    assert parse_operator("x1*h").ctx.homogenized
    assert parse_operator("y2").ctx.letter == "y"
    assert parse_operator("x1", n=4).ctx.n == 4


@pytest.mark.parametrize(
    "text,offset",
    [("x1^", 3), ("x1 +", 4), ("(x1", 3), ("x1 x2", 3), ("x1 $ 2", 3), ("1/0", 2), ("x1^-1", 3)],
)
def test_syntax_errors(text, offset):
    with pytest.raises(OperatorSyntaxError) as err:
        parse_operator(text)
    assert err.value.position == offset


@pytest.mark.parametrize("text", ["z1", "d0", "x1*y1", "e"])
def test_unknown_symbols(text):
    with pytest.raises(OperatorSyntaxError):
        parse_operator(text)


def test_unknown_symbol_type():
    with pytest.raises(UnknownSymbol):
        parse_operator("z1")
    with pytest.raises(UnknownSymbol):
        parse_operator("h", homogenized=False)
    with pytest.raises(UnknownSymbol):
        parse_operator("x3", n=2)
    with pytest.raises(UnknownSymbol):
        parse_operator("y1", ctx=WeylContext(2))


def test_tokenize_positions():
    toks = tokenize("  x12*d3")
    assert [(t.kind, t.text, t.pos) for t in toks] == [
        ("name", "x12", 2), ("op", "*", 5), ("name", "d3", 6), ("end", "", 8)
    ]


@given(weyl_elements(WeylContext(3)))
@settings(max_examples=60, deadline=None)
def test_round_trip_property(p):
    assert parse_operator(format_operator(p), ctx=p.ctx) == p


@given(weyl_elements(WeylContext(2, homogenized=True)))
@settings(max_examples=60, deadline=None)
def test_round_trip_homogenized(p):
    assert parse_operator(format_operator(p), ctx=p.ctx) == p
