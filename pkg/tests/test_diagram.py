"""Crossing calculus, the clean-gap search, and the numeric oracle."""

from collections import Counter

import pytest

from heiprover.diagram import (CancelStep, CircularDiagram, CutAssumption,
                               DiagramSpace, ExchangeStep, chord_weight,
                               chords_cross, clean_gap_prove, cross_exchange,
                               exchange_is_sound, is_gapless, numeric_oracle,
                               pair_exchange, pairs_cross, sample_angles)
from heiprover.simplex import chord_full, chord_left, chord_right, parse_chord


def chords(text):
    out = Counter()
    for part in text.split("+"):
        out[parse_chord(part.strip())] += 1
    return out


def diagram(n, red, blue, mode="open"):
    space = (DiagramSpace.open_circle(n) if mode == "open"
             else DiagramSpace.closed_circle(range(1, n + 1)))
    return CircularDiagram.from_chords(space, chords(red), chords(blue))


def test_chords_cross_examples():
    assert chords_cross(chord_full(1, 2), chord_full(2, 3), 3)
    assert not chords_cross(chord_full(1, 1), chord_full(3, 3), 3)
    assert not chords_cross(chord_full(1, 3), chord_full(3, 1), 4)


def test_chords_cross_shared_endpoint():
    # [1,2] and [1,3] share the left endpoint of region 1
    assert not chords_cross(chord_full(1, 2), chord_full(1, 3), 3)


def test_cross_exchange_gap_skipping_repairing():
    assert cross_exchange(chord_full(1, 2), chord_full(2, 3), 3, choice="A") == \
        (chord_left(1, 2), chord_right(2, 3))
    # the other re-pairing of SSA's crossing is the blue pair itself
    assert set(cross_exchange(chord_full(1, 2), chord_full(2, 3), 3, choice="B")) == \
        {chord_full(1, 3), chord_full(2, 2)}


def test_cross_exchange_31_24():
    got = set(cross_exchange(chord_full(3, 1), chord_full(2, 4), 4, choice="B"))
    assert got == {chord_left(2, 3), chord_right(1, 4)}


def test_cross_exchange_13_34half():
    got = set(cross_exchange(chord_full(1, 3), chord_left(3, 4), 4, choice="B"))
    assert got == {chord_left(1, 4), chord_full(3, 3)}


def test_cross_exchange_rejects_non_crossing():
    with pytest.raises(ValueError):
        cross_exchange(chord_full(1, 1), chord_full(3, 3), 3)


def test_pair_exchange_partitions_endpoints():
    a, b = (0, 3), (2, 5)
    for ins in pair_exchange(a, b):
        assert not pairs_cross(*ins)
        assert sorted(p for pair in ins for p in pair) == sorted((*a, *b))


def test_is_gapless():
    mmi = diagram(3, "[1,2] + [2,3] + [3,1]", "[1,1] + [2,2] + [3,3]")
    assert is_gapless(mmi)
    gapful = diagram(3, "[2,1] + [2,3]", "[1,1] + [2,2]")
    assert not is_gapless(gapful)
    # the wrap-around gap chord at n=3 is [1,3]
    assert not is_gapless(diagram(3, "[1,3] + [2,2]", "[1,2] + [2,3]"))


def test_clean_gap_ssa_one_exchange():
    res = clean_gap_prove(diagram(3, "[1,2] + [2,3]", "[1,3] + [2,2]"))
    assert res.proved and res.exchanges == 1


def test_clean_gap_mmi_three_exchanges():
    res = clean_gap_prove(diagram(3, "[1,2] + [2,3] + [3,1]", "[1,1] + [2,2] + [3,3]"))
    assert res.proved and res.exchanges == 3


def test_clean_gap_incompatibility_four_exchanges():
    d = diagram(4, "[1,3] + [3,1] + [2,4] + [4,2]", "[1,1] + [2,2] + [3,3] + [4,4]")
    res = clean_gap_prove(d)
    assert res.proved and res.exchanges == 4


def test_clean_gap_cut_theorem_split_diagram():
    # nesting step of the cut argument: outer arcs [1,2]|[3,4], inner {2}|{3}
    d = diagram(4, "[2,3] + [3,2] + [1,2] + [3,4]", "[1,4] + [3,2] + [2,2] + [3,3]")
    res = clean_gap_prove(d)
    assert res.proved


def test_clean_gap_empty_diagram():
    res = clean_gap_prove(diagram(3, "[1,2]", "[1,2]"))
    assert res.proved and res.exchanges == 0


def test_clean_gap_unbalanced_sides():
    res = clean_gap_prove(diagram(3, "[1,2] + [2,3]", "[1,3]"))
    assert not res.proved and "differ" in res.reason


def test_clean_gap_honest_failure():
    # the reversed subadditivity comparison has no rewriting proof
    res = clean_gap_prove(diagram(2, "[1,1] + [2,2]", "[1,2] + [2,1]"))
    assert not res.proved


def test_clean_gap_budget_exhaustion_reported():
    d = diagram(4, "[1,3] + [3,1] + [2,4] + [4,2]", "[1,1] + [2,2] + [3,3] + [4,4]")
    res = clean_gap_prove(d, budget=2)
    assert not res.proved and res.reason == "step budget exhausted"


def test_clean_gap_deterministic():
    d = diagram(4, "[1,3] + [3,1] + [2,4] + [4,2]", "[1,1] + [2,2] + [3,3] + [4,4]")
    r1, r2 = clean_gap_prove(d), clean_gap_prove(d)
    assert r1.steps == r2.steps and r1.exchanges == r2.exchanges


def replay(diag, steps):
    red, blue = Counter(diag.red), Counter(diag.blue)
    for step in steps:
        if isinstance(step, ExchangeStep):
            a, b = step.removed
            assert red[a] >= 1 and red[b] >= 1 and pairs_cross(a, b)
            # endpoint multiset of the red side is conserved
            assert sorted(p for pair in step.removed for p in pair) == \
                sorted(p for pair in step.inserted for p in pair)
            red[a] -= 1
            red[b] -= 1
            red += Counter(step.inserted)
            red = Counter({k: v for k, v in red.items() if v})
        elif isinstance(step, CancelStep):
            assert red[step.chord] >= step.count and blue[step.chord] >= step.count
            red[step.chord] -= step.count
            blue[step.chord] -= step.count
            red = Counter({k: v for k, v in red.items() if v})
            blue = Counter({k: v for k, v in blue.items() if v})
    return red, blue


def test_proved_steps_replay_to_empty_and_are_sound():
    d = diagram(3, "[1,2] + [2,3] + [3,1]", "[1,1] + [2,2] + [3,3]")
    res = clean_gap_prove(d)
    red, blue = replay(d, res.steps)
    assert not red and not blue
    for i, step in enumerate(res.steps):
        if isinstance(step, ExchangeStep):
            assert exchange_is_sound(step, d.space.size, samples=400, seed=3 + i)


def test_numeric_oracle_ssa_clean():
    verdict = numeric_oracle(diagram(3, "[1,2] + [2,3]", "[1,3] + [2,2]"),
                             samples=1000, seed=5)
    assert verdict.ok


def test_numeric_oracle_counterexample_for_reversed_subadditivity():
    verdict = numeric_oracle(diagram(2, "[1,1] + [2,2]", "[1,2] + [2,1]"),
                             samples=1000, seed=5)
    assert not verdict.ok and verdict.counterexample is not None


def test_numeric_oracle_empty_diagram():
    verdict = numeric_oracle(diagram(3, "[1,2]", "[1,2]"), samples=10, seed=0)
    assert verdict.ok


def test_numeric_oracle_rejects_bad_samples():
    with pytest.raises(ValueError):
        numeric_oracle(diagram(3, "[1,2]", "[1,3]"), samples=0)


def test_sample_angles_strictly_increasing():
    import random
    rng = random.Random(12)
    for _ in range(50):
        angles = sample_angles(8, rng)
        assert all(b > a for a, b in zip(angles, angles[1:]))


def test_cross_inequality_is_exact_for_chord_weights():
    """Ptolemy: the crossing pair strictly outweighs both re-pairings."""
    import random
    rng = random.Random(77)
    for _ in range(200):
        angles = sample_angles(6, rng)
        a, b = (0, 3), (2, 5)
        out = chord_weight(angles, a, 1e-4) + chord_weight(angles, b, 1e-4)
        for ins in pair_exchange(a, b):
            got = sum(chord_weight(angles, p, 1e-4) for p in ins)
            assert out >= got - 1e-9


def test_assumption_folds_into_search():
    # the four-party example needs the applied-cut constraint to close
    space = DiagramSpace.open_circle(4)
    d = CircularDiagram.from_chords(
        space, chords("[1,2] + [3,1] + [2,4] + [4,3]"),
        chords("[1,1] + [2,2] + [3,3] + [4,4]"))
    assert not clean_gap_prove(d).proved
    assume = CutAssumption(
        upper=Counter({space.chord_pair(parse_chord("[3,4]")): 1,
                       space.chord_pair(parse_chord("[4,3]")): 1}),
        lower=Counter({space.chord_pair(parse_chord("[3,3]")): 1,
                       space.chord_pair(parse_chord("[4,4]")): 1}),
        label="pair 3|4 cut")
    res = clean_gap_prove(d, assumptions=[assume])
    assert res.proved


def test_closed_circle_identifies_complementary_names():
    space = DiagramSpace.closed_circle(range(1, 5))
    assert space.chord_pair(chord_full(4, 2)) == space.chord_pair(chord_full(3, 3))
    d = CircularDiagram.from_chords(space, chords("[4,2]"), chords("[3,3]"))
    assert d.is_empty()
    with pytest.raises(ValueError):
        space.chord_pair(chord_full(2, 1))  # hugs a closed junction
    with pytest.raises(ValueError):
        space.chord_pair(chord_left(1, 2))


def test_closed_circle_wrap_chord_is_legal():
    space = DiagramSpace.closed_circle(range(1, 5))
    assert space.chord_pair(chord_full(1, 4)) == (0, 4)
    assert space.pair_name((0, 4)) == "[1,4]"
