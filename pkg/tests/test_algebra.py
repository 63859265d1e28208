"""Exact algebra: basis conversions, grouping, elimination, complements."""

import itertools
import random

import pytest

from heiprover.algebra import (BalanceClass, EntropyForm, apply_permutation,
                               canonicalize_complement, classify_balance,
                               complement_of, eliminate_region, evaluate,
                               group_regions, grouped_information, i_to_s,
                               random_purity_entropies, render_form, s_to_i)

SSA = EntropyForm("S", {(1, 2): 1, (2, 3): 1, (1, 2, 3): -1, (2,): -1}, 3)
MMI_S = EntropyForm("S", {(1, 2): 1, (1, 3): 1, (2, 3): 1,
                          (1,): -1, (2,): -1, (3,): -1, (1, 2, 3): -1}, 3)

FIVE_PARTY = {
    "q1": EntropyForm("I", {(1, 2, 4): -1, (1, 3, 4): -1, (1, 3, 5): -1, (2, 3, 5): -1,
                            (2, 4, 5): -1, (1, 2, 3, 4): 1, (1, 2, 3, 5): 1, (1, 2, 4, 5): 1,
                            (1, 3, 4, 5): 1, (2, 3, 4, 5): 1, (1, 2, 3, 4, 5): -1}, 5),
    "q2": EntropyForm("I", {(1, 2, 4): -1, (1, 2, 5): -1, (1, 3, 5): -1, (2, 3, 4): -1,
                            (1, 2, 3, 4): 1, (1, 2, 3, 5): 1, (1, 2, 4, 5): 1}, 5),
    "q3": EntropyForm("I", {(1, 2, 5): -1, (1, 3, 5): -1, (1, 4, 5): -1, (2, 3, 4): -1,
                            (1, 2, 3, 5): 1, (1, 2, 4, 5): 1, (1, 3, 4, 5): 1}, 5),
    "q4": EntropyForm("I", {(1, 2, 3): -1, (1, 4, 5): -1, (2, 3, 4): -1, (2, 3, 5): -1,
                            (1, 2, 3, 4): 1, (1, 2, 3, 5): 1}, 5),
    "q5": EntropyForm("I", {(1, 2, 3): -1, (1, 2, 5): -2, (1, 3, 4): -2, (1, 4, 5): -1,
                            (2, 3, 4): -1, (2, 3, 5): -1, (1, 2, 3, 4): 2, (1, 2, 3, 5): 2,
                            (1, 2, 4, 5): 1, (1, 3, 4, 5): 1}, 5),
}


def test_i_to_s_tripartite_information():
    form = i_to_s(EntropyForm("I", {(1, 2, 3): 1}, 3))
    assert form.terms == {(1,): 1, (2,): 1, (3,): 1,
                          (1, 2): -1, (1, 3): -1, (2, 3): -1, (1, 2, 3): 1}


def test_i_to_s_mutual_information():
    assert i_to_s(EntropyForm("I", {(1, 2): 1}, 2)).terms == {(1,): 1, (2,): 1, (1, 2): -1}


def test_i_to_s_singleton():
    assert i_to_s(EntropyForm("I", {(1,): 1}, 1)).terms == {(1,): 1}


def test_i_to_s_rejects_wrong_basis():
    with pytest.raises(ValueError):
        i_to_s(SSA)
    with pytest.raises(ValueError):
        s_to_i(EntropyForm("I", {(1, 2): 1}, 2))


def test_s_to_i_ssa():
    assert s_to_i(SSA).terms == {(1, 3): 1, (1, 2, 3): -1}


def test_s_to_i_definition_inverted():
    assert s_to_i(EntropyForm("S", {(1,): 1, (2,): 1, (1, 2): -1}, 2)).terms == {(1, 2): 1}


def test_s_to_i_mmi():
    assert s_to_i(MMI_S).terms == {(1, 2, 3): -1}


def test_round_trip_random_forms():
    rng = random.Random(20240)
    for _ in range(400):
        n = rng.randint(2, 6)
        keys = [tuple(sorted(rng.sample(range(1, n + 1), rng.randint(1, n))))
                for _ in range(rng.randint(1, 8))]
        form = EntropyForm("S", {k: rng.randint(-4, 4) for k in keys}, n)
        assert i_to_s(s_to_i(form)) == form
        gform = EntropyForm("I", form.terms, n)
        assert s_to_i(i_to_s(gform)) == gform


def test_classify_balance():
    assert classify_balance(EntropyForm("I", {(1, 2): 1}, 2)) is BalanceClass.BALANCED
    assert classify_balance(EntropyForm("I", {(1, 2, 3): -1}, 3)) is BalanceClass.SUPERBALANCED
    assert classify_balance(EntropyForm("S", {(1,): 1}, 1)) is BalanceClass.UNBALANCED
    assert classify_balance(SSA) is BalanceClass.BALANCED
    for form in FIVE_PARTY.values():
        assert classify_balance(form) is BalanceClass.SUPERBALANCED


def brute_grouped(groups, n):
    """Oracle: expand I over composite regions straight from the S definition,
    treating each group as a single region, then rewrite in the I basis."""
    sterms = {}
    for r in range(1, len(groups) + 1):
        for chosen in itertools.combinations(groups, r):
            members = tuple(sorted(m for g in chosen for m in g))
            sign = 1 if r % 2 == 1 else -1
            sterms[members] = sterms.get(members, 0) + sign
    return s_to_i(EntropyForm("S", sterms, n))


def test_grouping_identity_12_34():
    got = grouped_information([(1,), (2,), (3, 4)], 4)
    assert got.terms == {(1, 2, 3): 1, (1, 2, 4): 1, (1, 2, 3, 4): -1}
    assert got == brute_grouped([(1,), (2,), (3, 4)], 4)


def test_grouping_trivial_block():
    assert grouped_information([(1,), (2,)], 2).terms == {(1, 2): 1}


def test_grouping_12_34_full_expansion():
    got = grouped_information([(1, 2), (3, 4)], 4)
    assert got.terms == {(1, 3): 1, (1, 4): 1, (2, 3): 1, (2, 4): 1,
                         (1, 3, 4): -1, (2, 3, 4): -1, (1, 2, 3): -1, (1, 2, 4): -1,
                         (1, 2, 3, 4): 1}
    assert got == brute_grouped([(1, 2), (3, 4)], 4)


def test_grouping_matches_brute_force_on_partitions_of_five():
    regions = (1, 2, 3, 4, 5)
    rng = random.Random(7)
    for _ in range(60):
        k = rng.randint(1, 4)
        chosen = rng.sample(regions, rng.randint(k, 5))
        rng.shuffle(chosen)
        cuts = sorted(rng.sample(range(1, len(chosen)), k - 1)) if k > 1 else []
        bounds = [0] + cuts + [len(chosen)]
        groups = [tuple(sorted(chosen[a:b])) for a, b in zip(bounds, bounds[1:])]
        assert grouped_information(groups, 5) == brute_grouped(groups, 5)


def test_group_regions_overlapping_blocks_rejected():
    form = EntropyForm("I", {(1, 2, 3): 1}, 4)
    with pytest.raises(ValueError):
        group_regions(form, [(1, 2), (2, 3)])


def test_group_regions_term_rewrite():
    # fusing {3,4} inside I_123 gives I_{12(34)} restricted to the fused block
    form = EntropyForm("I", {(1, 2, 3): 1}, 4)
    got = group_regions(form, [(3, 4)])
    assert got == grouped_information([(1,), (2,), (3, 4)], 4)
    # members in no block are left alone
    untouched = EntropyForm("I", {(1, 2): 1}, 4)
    assert group_regions(untouched, [(3, 4)]) == untouched


def test_eliminate_region_q3():
    assert eliminate_region(FIVE_PARTY["q3"], 5).terms == {(2, 3, 4): -1}


def test_eliminate_region_q4():
    assert eliminate_region(FIVE_PARTY["q4"], 5).terms == {
        (1, 2, 4): -1, (1, 3, 4): -1, (2, 3, 4): -2, (1, 2, 3, 4): 2}


def test_eliminate_region_q5_matches_q4():
    assert eliminate_region(FIVE_PARTY["q5"], 5) == eliminate_region(FIVE_PARTY["q4"], 5)


def test_eliminate_region_drops_the_region():
    for name, form in FIVE_PARTY.items():
        for region in range(1, 6):
            out = eliminate_region(form, region)
            assert all(region not in key for key in out.terms), (name, region)


def test_eliminate_region_agrees_on_purity_vectors():
    rng = random.Random(99)
    for name, form in FIVE_PARTY.items():
        out = eliminate_region(form, 5)
        for _ in range(60):
            vec = random_purity_entropies(5, rng)
            assert evaluate(form, vec) == evaluate(out, vec), name


def test_eliminate_region_errors():
    with pytest.raises(ValueError):
        eliminate_region(EntropyForm("I", {(5,): 1}, 5), 5)
    with pytest.raises(ValueError):
        eliminate_region(FIVE_PARTY["q2"], 9)
    with pytest.raises(ValueError):
        eliminate_region(SSA, 1)


def test_canonicalize_complement_drop_region():
    form = EntropyForm("S", {(2, 5): 1}, 5)
    assert canonicalize_complement(form, drop_region=5).terms == {(1, 3, 4): 1}


def test_canonicalize_complement_size_rule():
    form = EntropyForm("S", {(1, 2, 4, 5): 1}, 5)
    assert canonicalize_complement(form).terms == {(3,): 1}
    tie = EntropyForm("S", {(1, 2): 1}, 4)
    assert canonicalize_complement(tie).terms == {(1, 2): 1}


def test_canonicalize_complement_idempotent():
    rng = random.Random(5)
    for _ in range(50):
        n = rng.randint(2, 6)
        keys = [tuple(sorted(rng.sample(range(1, n + 1), rng.randint(1, n))))
                for _ in range(5)]
        form = EntropyForm("S", {k: rng.randint(-3, 3) for k in keys}, n)
        once = canonicalize_complement(form)
        assert canonicalize_complement(once) == once
        dropped = canonicalize_complement(form, drop_region=n)
        assert canonicalize_complement(dropped, drop_region=n) == dropped
        assert all(n not in k for k in dropped.terms)


def test_canonicalize_complement_preserves_value_on_purity_vectors():
    rng = random.Random(31)
    form = EntropyForm("S", {(2, 5): 1, (1, 2, 4, 5): -2, (1, 3): 3}, 5)
    out = canonicalize_complement(form)
    for _ in range(40):
        vec = random_purity_entropies(5, rng)
        assert evaluate(form, vec) == evaluate(out, vec)


def test_apply_permutation_identity_and_symmetry():
    mmi = EntropyForm("I", {(1, 2, 3): -1}, 3)
    assert apply_permutation(mmi, {1: 1, 2: 2, 3: 3}) == mmi
    assert apply_permutation(mmi, {1: 2, 2: 1}) == mmi


def test_apply_permutation_rejects_non_bijection():
    with pytest.raises(ValueError):
        apply_permutation(EntropyForm("I", {(1, 2): 1}, 2), {1: 2, 2: 2})


def test_apply_permutation_group_action():
    rng = random.Random(11)
    form = FIVE_PARTY["q2"]
    for _ in range(30):
        p1 = dict(zip(range(1, 6), rng.sample(range(1, 6), 5)))
        p2 = dict(zip(range(1, 6), rng.sample(range(1, 6), 5)))
        composed = {r: p2[p1[r]] for r in range(1, 6)}
        assert apply_permutation(apply_permutation(form, p1), p2) == \
            apply_permutation(form, composed)


def test_complement_of():
    assert complement_of((2, 5), 5) == (1, 3, 4)
    with pytest.raises(ValueError):
        complement_of((1, 2, 3), 3)


def test_render_form():
    assert render_form(EntropyForm("I", {}, 3)) == "0"
    assert render_form(EntropyForm("S", {(1, 2): 2, (3,): -1}, 3)) == "-S(3) + 2*S(1,2)"
