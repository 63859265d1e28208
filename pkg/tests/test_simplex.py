"""Chord expansions, configurations, and the gap-closure duality."""

import itertools
from collections import Counter

import pytest

from heiprover.algebra import EntropyForm, i_to_s
from heiprover.cuts import Cut
from heiprover.simplex import (Configuration, chord_endpoints, chord_full,
                               chord_left, chord_name, chord_right,
                               connected_expansion, dual_chord,
                               endpoint_position, expand_entropy,
                               expand_inequality, parse_chord)


def chords(text):
    out = Counter()
    for part in text.split("+"):
        out[parse_chord(part.strip())] += 1
    return out


def test_connected_expansion_123():
    assert connected_expansion((1, 2, 3)) == chords("[1,3] + [3,2] + [2,1]")


def test_connected_expansion_singleton():
    assert connected_expansion((2,)) == chords("[2,2]")


def test_connected_expansion_13():
    assert connected_expansion((1, 3)) == chords("[1,3] + [3,1]")


def test_connected_expansion_size():
    for r in range(1, 6):
        for key in itertools.combinations(range(1, 6), r):
            assert sum(connected_expansion(key).values()) == len(key)


def test_expand_entropy_disconnected_cases():
    cfg = Configuration(3, {(1, 2, 3): [(1,), (2, 3)]})
    assert expand_entropy((1, 2, 3), cfg) == chords("[1,1] + [2,3] + [3,2]")
    cfg = Configuration(3, {(1, 2, 3): [(2,), (1, 3)]})
    assert expand_entropy((1, 2, 3), cfg) == chords("[2,2] + [1,3] + [3,1]")
    cfg = Configuration(3, {(1, 2, 3): [(1,), (2,), (3,)]})
    assert expand_entropy((1, 2, 3), cfg) == chords("[1,1] + [2,2] + [3,3]")


def test_configuration_rejects_non_contiguous_cluster():
    with pytest.raises(ValueError):
        Configuration(4, {(1, 2, 3, 4): [(1, 3), (2, 4)]})
    with pytest.raises(ValueError):
        Configuration(5, {(1, 2, 4, 5): [(1, 4), (2, 5)]})
    # but {1,3} is an arc of the order restricted to {1,2,3} at any n
    cfg = Configuration(4, {(1, 2, 3): [(1, 3), (2,)]})
    assert cfg.is_split((1, 2, 3))


def test_configuration_accepts_wraparound_cluster():
    # {1,3} is an arc of the cyclic order restricted to {1,2,3} at n=3
    cfg = Configuration(3, {(1, 2, 3): [(2,), (1, 3)]})
    assert cfg.clusters((1, 2, 3)) == ((1, 3), (2,))
    assert cfg.clusters((1, 2)) == ((1, 2),)


SSA = EntropyForm("S", {(1, 2): 1, (2, 3): 1, (1, 2, 3): -1, (2,): -1}, 3)


def test_expand_inequality_ssa_cc():
    red, blue = expand_inequality(SSA, Configuration(3))
    assert red == chords("[1,2] + [2,3]")
    assert blue == chords("[1,3] + [2,2]")


def test_expand_inequality_mmi_cc():
    mmi = i_to_s(EntropyForm("I", {(1, 2, 3): -1}, 3))
    red, blue = expand_inequality(mmi, Configuration(3))
    assert red == chords("[1,2] + [2,3] + [3,1]")
    assert blue == chords("[1,1] + [2,2] + [3,3]")


def test_expand_inequality_cancels():
    red, blue = expand_inequality(SSA, Configuration(3))
    assert not set(red) & set(blue)


def test_ssa_disconnected_configurations():
    """The four split phases of the triple term reduce SSA to identities,
    except the wrap-around split which leaves the two-region exchange
    residual conditional on that phase choice."""
    # {1}|{23}: forces the 1-2 split; the inequality collapses
    cfg = Configuration.from_cuts(3, [Cut.from_arcs(3, {1}, {2, 3})])
    assert cfg.clusters((1, 2, 3)) == ((1,), (2, 3))
    assert cfg.is_split((1, 2))
    red, blue = expand_inequality(SSA, cfg)
    assert not red and not blue
    # {12}|{3}
    cfg = Configuration.from_cuts(3, [Cut.from_arcs(3, {1, 2}, {3})])
    red, blue = expand_inequality(SSA, cfg)
    assert not red and not blue
    # fully split
    cfg = Configuration.from_cuts(3, [Cut.from_arcs(3, {1}, {2, 3}),
                                      Cut.from_arcs(3, {1, 2}, {3})])
    assert cfg.clusters((1, 2, 3)) == ((1,), (2,), (3,))
    red, blue = expand_inequality(SSA, cfg)
    assert not red and not blue
    # {2}|{13}: the residual compares the split phase against the connected one
    cfg = Configuration.from_cuts(3, [Cut.from_arcs(3, {2}, {3, 1})])
    red, blue = expand_inequality(SSA, cfg)
    assert red == chords("[1,1] + [3,3]")
    assert blue == chords("[1,3] + [3,1]")


FIVE_2_S = i_to_s(EntropyForm("I", {(1, 2, 4): -1, (1, 2, 5): -1, (1, 3, 5): -1, (2, 3, 4): -1,
                                    (1, 2, 3, 4): 1, (1, 2, 3, 5): 1, (1, 2, 4, 5): 1}, 5))


def test_expand_inequality_five_party_ccc11():
    cuts = [Cut.from_arcs(5, {2, 3}, {5}), Cut.from_arcs(5, {2}, {4, 5})]
    cfg = Configuration.from_cuts(5, cuts)
    red, blue = expand_inequality(FIVE_2_S, cfg)
    assert red == chords("[1,3] + [5,2]")
    assert blue == chords("[1,2] + [5,3]")


def test_expand_inequality_balanced_cardinality_and_degrees():
    for cuts in ([], [Cut.from_arcs(5, {1}, {3})],
                 [Cut.from_arcs(5, {2, 3}, {5}), Cut.from_arcs(5, {2}, {4, 5})]):
        cfg = Configuration.from_cuts(5, cuts)
        red, blue = expand_inequality(FIVE_2_S, cfg)
        assert sum(red.values()) == sum(blue.values())
        degrees = Counter()
        for side, sign in ((red, 1), (blue, -1)):
            for ch, mult in side.items():
                for e in chord_endpoints(ch):
                    degrees[e] += sign * mult
        assert all(v == 0 for v in degrees.values())


def test_expand_inequality_requires_s_basis():
    with pytest.raises(ValueError):
        expand_inequality(EntropyForm("I", {(1, 2): 1}, 2), Configuration(2))


def test_dual_chord_examples():
    assert dual_chord(chord_full(1, 3), 4) == chord_full(4, 4)
    assert dual_chord(chord_full(2, 5), 5) == chord_full(1, 1)


def dual_oracle(c, n):
    """Identify R_i with L_{i+1} into points V_1..V_n and re-read the pair."""
    def point(e):
        return e.region if e.side == "L" else (e.region % n) + 1
    a, b = (point(e) for e in chord_endpoints(c))
    # the other full-chord name with the same identified points
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            cand = chord_full(i, j)
            pts = sorted(point(e) for e in chord_endpoints(cand))
            if pts == sorted((a, b)) and cand != c:
                return cand
    return c


def test_dual_chord_matches_identification_oracle():
    for n in (3, 4, 5, 6):
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                c = chord_full(i, j)
                assert dual_chord(c, n) == dual_oracle(c, n), (c, n)


def test_dual_chord_involution():
    for n in (3, 4, 5):
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                c = chord_full(i, j)
                assert dual_chord(dual_chord(c, n), n) == c


def test_dual_chord_rejects_half_chords():
    with pytest.raises(ValueError):
        dual_chord(chord_left(1, 2), 4)


def test_chord_names_round_trip():
    for c in (chord_full(1, 3), chord_full(3, 1), chord_left(1, 2), chord_right(2, 3)):
        assert parse_chord(chord_name(c)) == c
    assert chord_name(chord_full(1, 2)) == "[1,2]"
    assert chord_name(chord_left(1, 2)) == "[1,2>"
    assert chord_name(chord_right(1, 2)) == "<1,2]"


def test_endpoint_positions():
    from heiprover.simplex import Endpoint
    assert endpoint_position(Endpoint(1, "L"), 3) == 0
    assert endpoint_position(Endpoint(1, "R"), 3) == 1
    assert endpoint_position(Endpoint(3, "R"), 3) == 5
    with pytest.raises(ValueError):
        endpoint_position(Endpoint(4, "L"), 3)
