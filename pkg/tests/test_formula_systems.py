import itertools
import re

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from onlinecontrol.core import Ballot
from onlinecontrol.formula import (
    And,
    FormulaSyntaxError,
    Not,
    Or,
    Var,
    eval_formula,
    parse_formula,
    render_formula,
)
from onlinecontrol.systems import (
    ROUND_ONE,
    winners_qbf_dv,
    winners_roundone,
    winners_sat_1c,
    winners_taut,
)

formulas = st.recursive(
    st.integers(1, 6).map(Var),
    lambda inner: st.one_of(
        inner.map(Not),
        st.tuples(inner, inner).map(lambda t: And(*t)),
        st.tuples(inner, inner).map(lambda t: Or(*t)),
    ),
    max_leaves=8,
)


def reference_eval(text: str, bits) -> bool:
    """Independent evaluator: translate the formula text to a Python expression."""
    expr = re.sub(r"x(\d+)", r"bits[\1 - 1]", text)
    expr = expr.replace("&", " and ").replace("|", " or ").replace("!", " not ")
    return bool(eval(expr, {"bits": bits}))


def test_parse_examples():
    assert parse_formula("(x1&x2)") == And(Var(1), Var(2))
    assert parse_formula("!x10") == Not(Var(10))
    for bad in ["x0", "RoundOne", "(x1&x2", "x1x2", "(x1)", "x01", "", "x"]:
        with pytest.raises(FormulaSyntaxError):
            parse_formula(bad)


def test_eval_examples():
    assert eval_formula(parse_formula("(x1&x2)"), (True, False)) is False
    assert eval_formula(parse_formula("!x1"), (False,)) is True
    assert eval_formula(parse_formula("(x1|x2)"), (False, True)) is True
    with pytest.raises(ValueError):
        eval_formula(parse_formula("(x1|x3)"), (True, True))


@given(formulas)
def test_render_parse_roundtrip(f):
    text = render_formula(f)
    assert parse_formula(text) == f
    assert render_formula(parse_formula(text)) == text
    assert text[0] in "(!x"


@settings(max_examples=150)
@given(formulas, st.lists(st.booleans(), min_size=6, max_size=6))
def test_eval_matches_reference(f, bits):
    assert eval_formula(f, bits) == reference_eval(render_formula(f), bits)


def B(voter, *order):
    return Ballot(voter, tuple(order))


A, A0 = "(x1&x2)", "(x1&x2)0"


def reference_qbf_dv(cands, ballots) -> bool:
    """Straight-line re-statement of the six-step rule, used as a cross-check."""
    least = min(cands, key=str.encode)
    try:
        phi = parse_formula(least)
    except FormulaSyntaxError:
        return False
    idx = [int(x) for x in re.findall(r"x(\d+)", least)]
    two_ell = max(idx)
    if two_ell % 2 == 1:
        return False
    names = [b.voter for b in ballots]
    if len(set(names)) != len(names):
        return False
    ordered = sorted(ballots, key=lambda b: b.voter.encode())
    if len(ordered) < two_ell or len(cands) < 2:
        return False
    bits = []
    for pos in range(two_ell):
        v = ordered[pos]
        low = v.voter[-2:]
        if pos % 2 == 0:
            if low == "01":
                bits.append(True)
            elif low == "00":
                bits.append(False)
            else:
                return False
        else:
            if low not in ("10", "11"):
                return False
            bits.append(v.order[-1].encode() < v.order[-2].encode())
    return reference_eval(least, bits)


def test_qbf_dv_examples():
    cands = frozenset({A, A0})
    assert winners_qbf_dv(cands, [B("0100", A, A0), B("1010", A, A0)]) == frozenset()
    assert winners_qbf_dv(cands, [B("0101", A, A0), B("1010", A0, A)]) == cands
    assert winners_qbf_dv(frozenset({"x2"}), [B("0101", "x2"), B("1010", "x2")]) == frozenset()
    # flip exchanges the two outcomes
    assert winners_qbf_dv(cands, [B("0100", A, A0), B("1010", A, A0)], flip=True) == cands
    for voters in ([B("0100", A, A0), B("1010", A, A0)], [B("0101", A, A0), B("1010", A0, A)]):
        expected = cands if reference_qbf_dv(cands, voters) else frozenset()
        assert winners_qbf_dv(cands, voters) == expected


names2 = st.sampled_from(["0100", "0101", "1010", "1011", "0110", "1", "0001", "1110"])


@settings(max_examples=300, deadline=None)
@given(
    st.sampled_from(["(x1&x2)", "(x1|x2)", "x2", "!x2", "(x1|!x2)", "x1", "((x1&x2)|(x3&x4))", "zz"]),
    st.lists(st.tuples(names2, st.booleans()), max_size=5),
    st.booleans(),
)
def test_qbf_dv_matches_reference_and_flip_duality(phi, voters, flip):
    cands = frozenset({phi, phi + "0"})
    ballots = [B(n, *((phi, phi + "0") if up else (phi + "0", phi))) for n, up in voters]
    plain = winners_qbf_dv(cands, ballots)
    assert plain == (cands if reference_qbf_dv(cands, ballots) else frozenset())
    flipped = winners_qbf_dv(cands, ballots, flip=True)
    assert flipped in (cands, frozenset())
    assert (flipped == cands) == (plain == frozenset())


def test_taut_examples():
    t = "(x1|!x1)"
    cands = frozenset({t, t + "0"})
    assert winners_taut(cands, [B("1", t, t + "0")]) == cands
    assert winners_taut(cands, [B("1", t + "0", t)]) == cands
    c2 = frozenset({"x1", "x10"})
    assert winners_taut(c2, [B("1", "x1", "x10")]) == frozenset()
    assert winners_taut(c2, [B("1", "x10", "x1")]) == c2
    assert winners_taut(frozenset({"zz", "zz0"}), [B("1", "zz", "zz0")]) == frozenset()


def test_roundone_examples():
    cands = frozenset({ROUND_ONE, "x2"})
    voters = [B("Marker", "x2", ROUND_ONE), B("v01yes", "x2", ROUND_ONE), B("v10", ROUND_ONE, "x2")]
    assert winners_roundone(cands, voters) == {"x2"}
    assert winners_roundone(cands, voters, flip=True) == frozenset()
    # x2 false: RoundOne not top for v10
    voters_f = voters[:2] + [B("v10", "x2", ROUND_ONE)]
    assert winners_roundone(cands, voters_f) == {ROUND_ONE}
    assert winners_roundone(cands, voters_f, flip=True) == cands
    # Case 1
    assert winners_roundone(cands, voters[1:]) == frozenset()
    assert winners_roundone(cands, voters[1:], flip=True) == frozenset()
    # Case 3
    assert winners_roundone(frozenset({"x2"}), voters) == {"x2"}
    assert winners_roundone(frozenset({"x2"}), voters, flip=True) == frozenset()
    # roster malformed: both yes and no present
    bad = voters + [B("v01no", "x2", ROUND_ONE)]
    assert winners_roundone(cands, bad) == {ROUND_ONE}
    assert winners_roundone(cands, bad, flip=True) == cands


roster_names = st.sampled_from(["Marker", "v01yes", "v01no", "v10", "v11", "v1yes", "zz"])


@settings(max_examples=300, deadline=None)
@given(
    st.sets(st.sampled_from([ROUND_ONE, "x2", "(x1|x2)", "x1", "!x2", "zz"]), min_size=1, max_size=3),
    st.lists(st.tuples(roster_names, st.booleans()), max_size=5),
)
def test_roundone_stays_within_roundone_and_formula(cands, voters):
    cands = frozenset(cands)
    order = sorted(cands)
    ballots = []
    for name, r1_top in voters:
        if ROUND_ONE in cands and r1_top:
            ballots.append(Ballot(name, (ROUND_ONE, *[c for c in order if c != ROUND_ONE])))
        else:
            ballots.append(Ballot(name, tuple(sorted(order, key=lambda c: c == ROUND_ONE))))
    w = winners_roundone(cands, ballots)
    assert w <= cands
    if ROUND_ONE in cands:
        others = sorted((c for c in cands if c != ROUND_ONE), key=str.encode)
        allowed = {ROUND_ONE} | set(others[:1])
        assert w <= allowed


def test_sat_1c_examples():
    assert winners_sat_1c(frozenset({"(x1&!x2)"}), [B("01", "(x1&!x2)"), B("10", "(x1&!x2)")]) == frozenset()
    assert winners_sat_1c(frozenset({"(x1&x2)"}), [B("01", "(x1&x2)"), B("10", "(x1&x2)")]) == {"(x1&x2)"}
    assert winners_sat_1c(frozenset({"x1", "x2"}), []) == {"x1", "x2"}
    # wrong voter count and unparseable name fall to "everyone wins"
    assert winners_sat_1c(frozenset({"x1"}), []) == {"x1"}
    assert winners_sat_1c(frozenset({"zz"}), [B("1", "zz")]) == {"zz"}


def test_sat_1c_matches_twin_assignment_oracle():
    for text in ["(x1&!x2)", "(x1&x2)", "((x1|x2)&!x3)", "(x1&(x2&x3))", "!x1"]:
        f = parse_formula(text)
        k = max(int(i) for i in re.findall(r"x(\d+)", text))
        for bits in itertools.product("01", repeat=k):
            names = [format(i, "02b") + b for i, b in enumerate(bits)]
            ballots = [Ballot(n, (text,)) for n in names]
            assign = [b == "1" for b in bits]
            sat = eval_formula(f, assign) or eval_formula(f, [not x for x in assign])
            assert winners_sat_1c(frozenset({text}), ballots) == (frozenset() if sat else {text})
