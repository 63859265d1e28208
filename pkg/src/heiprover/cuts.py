"""The cut calculus: splitting connected surfaces and counting configurations.

A cut is an unordered pair of disjoint non-empty cyclic arcs of regions.  Its
two defining chords (which do not cross) are broken and rejoined when the cut
is applied, and a connected union surface splits whenever its members lie in
the two arcs with at least one on each side.  Writing a cut as ``C^{il}_{kj}``
with arcs ``[i..j]`` and ``[k..l]`` gives the chords ``[i,l]`` and ``[k,j]``.

Cuts are graded by level ``|A| + |B| - 1`` from 1 to n-1, and a cut induces
every cut whose arcs are contained in its own; the containment order makes
the cut set a DAG.  ``count_allowed_configurations`` counts the induction
closed, compatibility respecting subsets of cuts, the published anchor values
being 17, 1570 and 2864048 for n = 3, 4, 5.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

from .algebra import EntropyForm, Subsystem, grouped_information, subsystem
from .simplex import Chord, chord_full

Arc = Tuple[int, ...]


def _arc_tuple(members: FrozenSet[int], n: int) -> Arc:
    """Cyclic tuple of a set that forms a proper arc of the n-circle."""
    if len(members) >= n:
        raise ValueError("a cut arc must be a proper subset of the circle")
    start = next(r for r in members if ((r - 2) % n) + 1 not in members)
    out = [start]
    while len(out) < len(members):
        nxt = (out[-1] % n) + 1
        if nxt not in members:
            raise ValueError(f"{sorted(members)} is not a cyclic arc of 1..{n}")
        out.append(nxt)
    return tuple(out)


def _all_arcs(n: int) -> List[Arc]:
    return [tuple(((s - 1 + k) % n) + 1 for k in range(length))
            for length in range(1, n) for s in range(1, n + 1)]


@dataclass(frozen=True)
class Cut:
    """Unordered pair of disjoint arcs; ``arc_a`` holds the smallest region."""

    n: int
    arc_a: Arc
    arc_b: Arc

    @classmethod
    def from_arcs(cls, n: int, a: Iterable[int], b: Iterable[int]) -> "Cut":
        sa, sb = frozenset(a), frozenset(b)
        if not sa or not sb:
            raise ValueError("cut arcs must be non-empty")
        if sa & sb:
            raise ValueError(f"cut arcs overlap: {sorted(sa)} and {sorted(sb)}")
        ta, tb = _arc_tuple(sa, n), _arc_tuple(sb, n)
        if min(sb) < min(sa):
            ta, tb = tb, ta
        return cls(n, ta, tb)

    def arc_sets(self) -> Tuple[FrozenSet[int], FrozenSet[int]]:
        return frozenset(self.arc_a), frozenset(self.arc_b)

    @property
    def level(self) -> int:
        return len(self.arc_a) + len(self.arc_b) - 1

    @property
    def upper_chord(self) -> Chord:
        # chord [i,l] from the head of one arc to the tail of the other
        return chord_full(self.arc_a[0], self.arc_b[-1])

    @property
    def lower_chord(self) -> Chord:
        return chord_full(self.arc_b[0], self.arc_a[-1])

    @property
    def name(self) -> str:
        i, j = self.arc_a[0], self.arc_a[-1]
        k, l = self.arc_b[0], self.arc_b[-1]
        return f"C^{{{i}{l}}}_{{{k}{j}}}" if self.n < 10 else f"C^{{{i},{l}}}_{{{k},{j}}}"

    def induces(self, other: "Cut") -> bool:
        """True iff the other cut's arcs are contained in this cut's arcs."""
        if self.n != other.n:
            raise ValueError("cuts live on circles of different sizes")
        a, b = self.arc_sets()
        oa, ob = other.arc_sets()
        return (oa <= a and ob <= b) or (oa <= b and ob <= a)

    def splits(self, key: Iterable[int]) -> bool:
        a, b = self.arc_sets()
        k = frozenset(key)
        return k <= (a | b) and bool(k & a) and bool(k & b)

    def split_parts(self, key: Iterable[int]) -> Tuple[Subsystem, ...]:
        a, b = self.arc_sets()
        k = frozenset(key)
        if not (k <= (a | b) and (k & a) and (k & b)):
            return (subsystem(key),)
        return tuple(sorted((subsystem(k & a), subsystem(k & b))))

    def __repr__(self):
        return f"Cut({self.name})"


def enumerate_cuts(n: int) -> List[Cut]:
    """All cuts of the n-circle in canonical (level, arcs) order.

    The count is n^2 (n^2 - 1) / 12 with n k (n - k) / 2 cuts at level k.
    """
    if n < 2:
        raise ValueError("cuts need at least two regions")
    seen = {}
    for a, b in itertools.combinations(_all_arcs(n), 2):
        sa, sb = frozenset(a), frozenset(b)
        if sa & sb:
            continue
        cut = Cut.from_arcs(n, sa, sb)
        seen[(cut.arc_a, cut.arc_b)] = cut
    return sorted(seen.values(), key=lambda c: (c.level, c.arc_a, c.arc_b))


def cut_count_formula(n: int) -> int:
    return n * n * (n * n - 1) // 12


def level_count_formula(n: int, k: int) -> int:
    return n * k * (n - k) // 2


def induces(c: Cut, c2: Cut) -> bool:
    return c.induces(c2)


def apply_cut_to_surface(cluster: Iterable[int], cut: Cut) -> Tuple[Subsystem, ...]:
    """Split a connected cluster straddling the cut's two arcs; else unchanged."""
    return cut.split_parts(cluster)


def apply_cut_to_iform(form: EntropyForm, cut: Cut) -> EntropyForm:
    """Action of a cut on an I-basis form.

    The cut contributes, for every non-empty ``I0`` inside one arc and ``J0``
    inside the other, a grouped information ``I_(I0)(J0)`` weighted by

        q'_{I0,J0} = (-1)^(|I0|+|J0|+1) * sum_{K' outside both arcs} q_{I0 J0 K'},

    expanded back to elementary informations.  A cut whose arcs meet no
    subsystem members leaves the form unchanged.
    """
    if form.basis != "I":
        raise ValueError("apply_cut_to_iform expects an I-basis form")
    n = form.n
    a, b = cut.arc_sets()
    outside = [r for r in range(1, n + 1) if r not in a and r not in b]
    terms = form.terms
    result = EntropyForm("I", terms, n)
    for ra in range(1, len(a) + 1):
        for i0 in itertools.combinations(sorted(a), ra):
            for rb in range(1, len(b) + 1):
                for j0 in itertools.combinations(sorted(b), rb):
                    total = 0
                    for rq in range(len(outside) + 1):
                        for k0 in itertools.combinations(outside, rq):
                            total += terms.get(subsystem(i0 + j0 + k0), 0)
                    if not total:
                        continue
                    sign = -1 if (len(i0) + len(j0)) % 2 == 0 else 1
                    result = result + grouped_information([i0, j0], n).scaled(sign * total)
    return result


class CutDag:
    """Cuts of the n-circle with the induction order, stored reduced."""

    def __init__(self, n: int):
        self.n = n
        self.nodes: List[Cut] = enumerate_cuts(n)
        self._idx = {c: i for i, c in enumerate(self.nodes)}
        m = len(self.nodes)
        self.below = [0] * m  # bitmask of nodes induced by i (including i)
        self.above = [0] * m
        for i, ci in enumerate(self.nodes):
            for j, cj in enumerate(self.nodes):
                if ci.induces(cj):
                    self.below[i] |= 1 << j
                    self.above[j] |= 1 << i
        # transitive reduction: covers are exactly the level-adjacent relations
        self.edges: List[Tuple[int, int]] = [
            (i, j)
            for i, ci in enumerate(self.nodes)
            for j, cj in enumerate(self.nodes)
            if ci.level == cj.level + 1 and ci.induces(cj)
        ]

    def index(self, cut: Cut) -> int:
        return self._idx[cut]

    def level_histogram(self) -> Dict[int, int]:
        hist: Dict[int, int] = {}
        for c in self.nodes:
            hist[c.level] = hist.get(c.level, 0) + 1
        return hist

    def descendants(self, cut: Cut) -> List[Cut]:
        mask = self.below[self.index(cut)]
        return [self.nodes[i] for i in _bits(mask)]

    def closure(self, cuts: Iterable[Cut]) -> int:
        mask = 0
        for c in cuts:
            mask |= self.below[self.index(c)]
        return mask

    def is_ideal(self, mask: int) -> bool:
        return all(not (self.below[i] & ~mask) for i in _bits(mask))

    def maximal_elements(self, mask: int) -> List[int]:
        return [i for i in _bits(mask) if not (self.above[i] & mask & ~(1 << i))]

    def to_dot(self) -> str:
        lines = ["digraph cuts {", "  rankdir=BT;"]
        for i, c in enumerate(self.nodes):
            lines.append(f'  n{i} [label="{c.name}\\nlevel {c.level}"];')
        for i, j in sorted(self.edges):
            lines.append(f"  n{j} -> n{i};")
        lines.append("}")
        return "\n".join(lines)


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def build_cut_dag(n: int) -> CutDag:
    return CutDag(n)


def _ideal_counter(dag: CutDag):
    """Divide-and-conquer order ideal counting over induced subposets."""
    below, above = dag.below, dag.above
    cache: Dict[int, int] = {}

    def count(avail: int) -> int:
        if avail == 0:
            return 1
        got = cache.get(avail)
        if got is not None:
            return got
        best_score, pivot = -1, -1
        for i in _bits(avail):
            score = ((below[i] | above[i]) & avail).bit_count()
            if score > best_score:
                best_score, pivot = score, i
        res = count(avail & ~above[pivot]) + count(avail & ~below[pivot])
        cache[avail] = res
        return res

    return count


def internal_splitting_cuts(dag: CutDag, key: Iterable[int]) -> List[int]:
    """Cuts whose two arcs partition the subsystem itself.

    These are the disconnections that resolve compatibility constraints (and
    the vocabulary CCC generators are written in): a triple such as {2,4,5}
    has the unique internal split {2}|{4,5}, while a split like {2,4}|{5}
    needs an arc reaching outside the subsystem and does not count.
    """
    k = frozenset(key)
    out = []
    for i, c in enumerate(dag.nodes):
        a, b = c.arc_sets()
        if (a | b) == k and (k & a) and (k & b):
            out.append(i)
    return out


def count_allowed_configurations(n: int) -> int:
    """Number of allowed cut configurations of the n-partite circle.

    A configuration is a non-empty, induction-closed subset of cuts in which
    every incompatible pair of union subsystems has one member disconnected
    by an internal split.  Counted by inclusion-exclusion over the pair
    constraints on top of divide-and-conquer ideal counting; n = 5 runs in
    well under a second.
    """
    table = interpretation_table(n, full=False)
    return table["internal-split coverage, nonempty"]


def interpretation_table(n: int, full: bool = True) -> Dict[str, int]:
    """Counts of candidate readings of "allowed configuration".

    The primary reading (internal-split coverage) reproduces the published
    anchors 17 / 1570 / 2864048 for n = 3, 4, 5; the others are kept so a
    mismatch can be reported loudly instead of silently redefined.
    """
    from . import compat

    dag = CutDag(n)
    count = _ideal_counter(dag)
    m = len(dag.nodes)
    full_mask = (1 << m) - 1

    def upset(mask: int) -> int:
        out = 0
        for i in _bits(mask):
            out |= dag.above[i]
        return out

    def coverage_count(constraint_masks: List[int]) -> int:
        total = 0
        for t in range(1 << len(constraint_masks)):
            forbidden = 0
            bits = 0
            tt = t
            while tt:
                j = (tt & -tt).bit_length() - 1
                forbidden |= constraint_masks[j]
                bits += 1
                tt &= tt - 1
            total += (-1) ** bits * count(full_mask & ~forbidden)
        if not constraint_masks:
            total -= 1  # no constraints: only the empty configuration drops
        return total

    pairs = compat.incompatible_pairs(n)
    internal_masks = []
    any_masks = []
    for x, y in pairs:
        internal = 0
        for i in internal_splitting_cuts(dag, x) + internal_splitting_cuts(dag, y):
            internal |= 1 << i
        internal_masks.append(upset(internal))
        anyc = 0
        for i, c in enumerate(dag.nodes):
            if c.splits(x) or c.splits(y):
                anyc |= 1 << i
        any_masks.append(anyc)

    table = {"internal-split coverage, nonempty": coverage_count(internal_masks)}
    if full:
        table["order ideals"] = count(full_mask)
        table["order ideals, nonempty"] = count(full_mask) - 1
        table["any-split coverage, nonempty"] = coverage_count(any_masks)
    return table


PUBLISHED_ALLOWED_COUNTS = {3: 17, 4: 1570, 5: 2864048}
