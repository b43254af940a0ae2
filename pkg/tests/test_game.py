from dataclasses import replace

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import make
from onlinecontrol.core import PLURALITY, Ballot
from onlinecontrol.game import (
    GameState,
    GoalSpec,
    InstanceError,
    apply_chair_action,
    finalize_and_evaluate,
    goal_holds,
    initial_state,
    legal_chair_actions,
    nononline_ccpv_one_candidate,
    reveal_vote,
    run_two_round_tp,
    validate_instance,
)
from onlinecontrol.systems import SAT_1C


def test_goal_holds_examples():
    abc = tuple("abc")
    assert goal_holds(GoalSpec("constructive", abc, "b"), {"c", "b"})
    assert not goal_holds(GoalSpec("destructive", abc, "b"), {"c"})
    assert goal_holds(GoalSpec("destructive", abc, "a"), set())
    g = GoalSpec("constructive", abc, "b")
    assert g.up == {"a", "b"} and g.down == {"b", "c"} and g.up & g.down == {"b"}


@given(st.permutations("abcd"), st.sampled_from("abcd"), st.sets(st.sampled_from("abcd")))
def test_goal_segment_reductions(sigma, d, w):
    sigma = tuple(sigma)
    cons, dest = GoalSpec("constructive", sigma, d), GoalSpec("destructive", sigma, d)
    assert goal_holds(dest, w) == (not (set(w) & dest.down))
    assert cons.up | cons.down == set(sigma)
    if d == sigma[0]:
        assert goal_holds(cons, w) == (d in w)
    if d == sigma[-1]:
        assert goal_holds(dest, w) == (d not in w)


def test_legal_actions():
    inst = make("DV", "constructive", "ab", "a", "ab", past=[("deleted", None)], budget=1)
    assert legal_chair_actions(initial_state(inst)) == ("keep",)
    inst = make("PV", "constructive", "ab", "a", "ab")
    assert legal_chair_actions(initial_state(inst)) == ("left", "right")
    inst = make("AV", "constructive", "ab", "a", "ab", future=[True], budget=1)
    s = apply_chair_action(initial_state(inst), "skip")
    s = reveal_vote(s, "ba")
    assert s.pending is None and legal_chair_actions(s) == ()
    assert s.counted[-1] == Ballot("f1", ("b", "a"))


def test_transitions():
    inst = make("DV", "constructive", "ab", "a", "ab", past=[("kept", "ba")], future=[None], budget=1)
    s = apply_chair_action(initial_state(inst), "delete")
    assert s.used == 1 and [b.voter for b in s.counted] == ["p1"]
    with pytest.raises(ValueError):
        apply_chair_action(s, "keep")
    s = reveal_vote(s, "ab")
    assert legal_chair_actions(s) == ("keep",)
    with pytest.raises(ValueError):
        apply_chair_action(s, "delete")
    s = apply_chair_action(s, "keep")
    assert s.terminal
    assert finalize_and_evaluate(s) == {"a", "b"}
    with pytest.raises(ValueError):
        reveal_vote(s, "ab")

    pv = make("PV", "constructive", "ab", "a", "ab")
    s = apply_chair_action(initial_state(pv), "left")
    assert s.counted[-1].voter == "u" and s.right == ()

    av = make("AV", "constructive", "ab", "a", "ab", budget=1)
    s = apply_chair_action(initial_state(av), "skip")
    assert s.counted == () and s.used == 0


def test_reveal_rejects_bad_order():
    inst = make("DV", "constructive", "ab", "a", "ab", future=[None], budget=0)
    s = apply_chair_action(initial_state(inst), "keep")
    with pytest.raises(ValueError):
        reveal_vote(s, "aa")


def test_finalize_examples():
    s = apply_chair_action(initial_state(make("DV", "constructive", "ab", "a", "ab", budget=0)), "keep")
    assert finalize_and_evaluate(s) == {"a"}
    av = make("AV", "constructive", "ab", "a", "ab",
              past=[("registered", "ba"), ("added", "ab")], budget=2)
    s = apply_chair_action(initial_state(av), "add")
    assert finalize_and_evaluate(s) == {"a"}
    assert [b.voter for b in s.counted] == ["p1", "p2", "u"]


def B(v, s):
    return Ballot(v, tuple(s))


def test_two_round_tp_examples():
    out = run_two_round_tp(PLURALITY, "abc", [B("1", "abc")], [B("2", "bac")])
    assert (out.w1, out.w2, out.winners) == ({"a"}, {"b"}, {"a", "b"})
    empty = type(PLURALITY)("nobody", lambda c, v: frozenset())
    assert run_two_round_tp(empty, "abc", [B("1", "abc")], [B("2", "bac")]).winners == frozenset()
    out = run_two_round_tp(PLURALITY, "abc", [], [B("2", "bac")])
    assert out.w1 == {"a", "b", "c"} and out.winners <= out.w1 | out.w2


ballot_lists = st.lists(st.permutations("abc").map(tuple), max_size=4)


@settings(max_examples=200)
@given(ballot_lists, ballot_lists)
def test_two_round_tp_properties(left, right):
    lb = [Ballot(f"l{i}", o) for i, o in enumerate(left)]
    rb = [Ballot(f"r{i}", o) for i, o in enumerate(right)]
    out = run_two_round_tp(PLURALITY, "abc", lb, rb)
    assert out.winners <= out.w1 | out.w2
    assert run_two_round_tp(PLURALITY, "abc", rb, lb).winners == out.winners


def test_validate_instance_examples():
    with pytest.raises(InstanceError) as e:
        validate_instance(make("DV", "constructive", "ab", "a", "ab",
                               past=[("deleted", None), ("deleted", None)], budget=1))
    assert e.value.code == "over-budget"
    av = replace(make("AV", "constructive", "ab", "a", "ab", budget=1), current_registered=True)
    with pytest.raises(InstanceError, match="u must be unregistered"):
        validate_instance(av)
    validate_instance(make("PV", "destructive", "abc", "b", "cab",
                           past=[("left", "abc"), ("right", "bca")], future=[None, None]))


@pytest.mark.parametrize("kwargs,code", [
    (dict(past=[("kept", None)], budget=1), "missing-ballot"),
    (dict(past=[("deleted", "ab")], budget=1), "unexpected-ballot"),
    (dict(past=[("left", "ab")], budget=1), "bad-flag"),
    (dict(budget=None), "bad-budget"),
    (dict(budget=-1), "bad-budget"),
])
def test_validate_instance_codes(kwargs, code):
    with pytest.raises(InstanceError) as e:
        validate_instance(make("DV", "constructive", "ab", "a", "ab", **kwargs))
    assert e.value.code == code


def test_validate_instance_names_and_sigma():
    inst = make("DV", "constructive", "ab", "a", "ab", budget=0)
    with pytest.raises(InstanceError, match="bad-distinguished"):
        validate_instance(replace(inst, distinguished="z"))
    with pytest.raises(InstanceError, match="bad-sigma"):
        validate_instance(replace(inst, sigma=("a",)))
    with_past = make("DV", "constructive", "ab", "a", "ab", past=[("kept", "ab")], budget=0)
    with pytest.raises(InstanceError, match="duplicate-voter"):
        validate_instance(replace(with_past, current=Ballot("p1", ("a", "b"))))


def test_nononline_one_candidate():
    c = frozenset({"c"})
    assert nononline_ccpv_one_candidate(PLURALITY, c, [B("1", "c"), B("2", "c")])
    assert nononline_ccpv_one_candidate(PLURALITY, c, [])
    assert not nononline_ccpv_one_candidate(SAT_1C, {"x1"}, [B("1", ["x1"])])
    with pytest.raises(ValueError):
        nononline_ccpv_one_candidate(PLURALITY, {"a", "b"}, [])


def test_replay_is_deterministic():
    inst = make("PV", "constructive", "abc", "b", "abc", past=[("left", "cab")], future=[None, None])

    def play():
        s = initial_state(inst)
        for step in ["left", "bca", "right", "cba", "left"]:
            s = apply_chair_action(s, step) if step in ("left", "right") else reveal_vote(s, step)
        return s

    s1, s2 = play(), play()
    assert finalize_and_evaluate(s1) == finalize_and_evaluate(s2)
    assert s1.history == s2.history
    assert initial_state(inst).counted[0].voter == "p1"
    assert isinstance(s1, GameState)
