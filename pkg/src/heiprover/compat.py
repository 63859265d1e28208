"""Compatibility of connected surfaces and CCC-configuration enumeration.

Two connected union surfaces are incompatible when their regions are disjoint
and interlaced around the circle (two or more alternations): minimality of
the two surfaces then contradicts a chord inequality provable by the
clean-gap procedure, so at least one of the two must be disconnected.

A compatible completely connected (CCC) configuration is a minimal,
induction-closed choice of disconnections resolving every incompatible pair,
each disconnection being an internal split of the constrained subsystem (its
two blocks are arcs of the circle partitioning it).  For the global term
universe this yields two configurations at n = 4 and eleven at n = 5, each of
the eleven closing up to exactly five disconnected terms.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

from .algebra import Subsystem, subsystem
from .cuts import Cut, CutDag, _bits, internal_splitting_cuts
from .simplex import Configuration


def interlace_count(x: Iterable[int], y: Iterable[int], n: int) -> int:
    """Number of alternating block pairs of two disjoint sets in cyclic order."""
    xs, ys = frozenset(x), frozenset(y)
    if xs & ys:
        raise ValueError(f"subsystems overlap: {sorted(xs)} and {sorted(ys)}")
    sides = [r in xs for r in range(1, n + 1) if r in xs or r in ys]
    if not sides:
        return 0
    flips = sum(1 for i, s in enumerate(sides) if s != sides[(i + 1) % len(sides)])
    return flips // 2


def is_incompatible(x: Iterable[int], y: Iterable[int], n: int) -> bool:
    """Disjoint and interlaced surfaces cannot both be connected."""
    xs, ys = frozenset(x), frozenset(y)
    if xs & ys:
        return False
    return interlace_count(xs, ys, n) >= 2


def incompatible_pairs(n: int, terms: Optional[Iterable[Iterable[int]]] = None
                       ) -> List[Tuple[Subsystem, Subsystem]]:
    """Maximal incompatible pairs: complementary, interlaced subsystem splits.

    These are the binding constraints (for the 5-partite system the five
    table entries (13,245), (14,235), (24,135), (25,134), (35,124)); every
    other incompatible pair is resolved automatically once these are, because
    internal disconnections close under induction.  With ``terms`` given,
    only pairs with at least one side among the terms are returned.
    """
    regions = list(range(1, n + 1))
    termset = None if terms is None else {subsystem(t) for t in terms}
    out = []
    for r in range(2, n - 1):
        for x in itertools.combinations(regions, r):
            y = subsystem(set(regions) - set(x))
            if len(y) < len(x) or (len(y) == len(x) and y < x):
                continue  # each unordered pair once
            if not is_incompatible(x, y, n):
                continue
            if termset is not None and subsystem(x) not in termset and y not in termset:
                continue
            out.append((subsystem(x), y))
    return sorted(out)


@dataclass(frozen=True)
class Split:
    """A two-block disconnection of a union subsystem, e.g. ``{1,2}|{4}``."""

    key: Subsystem
    parts: Tuple[Subsystem, Subsystem]

    @classmethod
    def of(cls, part_a: Iterable[int], part_b: Iterable[int]) -> "Split":
        a, b = subsystem(part_a), subsystem(part_b)
        if set(a) & set(b):
            raise ValueError(f"split blocks overlap: {a} and {b}")
        first, second = sorted((a, b))
        return cls(subsystem(a + b), (first, second))

    @classmethod
    def from_cut(cls, cut: Cut, key: Iterable[int]) -> "Split":
        parts = cut.split_parts(key)
        if len(parts) != 2:
            raise ValueError(f"{cut} does not split {subsystem(key)}")
        return cls.of(*parts)

    @property
    def name(self) -> str:
        return "S_{%s}^d" % ",".join("".join(map(str, p)) for p in self.parts)

    def spanning_arcs(self, n: int) -> Tuple[FrozenSet[int], FrozenSet[int]]:
        """Minimal circle arcs covering the two blocks; must not overlap."""
        arcs = tuple(_min_arc(p, n) for p in self.parts)
        if arcs[0] & arcs[1]:
            raise ValueError(f"split {self.name} is not realizable by a cut")
        return arcs

    def realizing_cut(self, n: int) -> Cut:
        a, b = self.spanning_arcs(n)
        return Cut.from_arcs(n, a, b)

    def __repr__(self):
        return f"Split({self.name})"


def _min_arc(part: Subsystem, n: int) -> FrozenSet[int]:
    best = None
    for start in range(1, n + 1):
        for length in range(1, n + 1):
            arc = frozenset(((start - 1 + k) % n) + 1 for k in range(length))
            if set(part) <= arc and (best is None or len(arc) < len(best)):
                best = arc
    return best


def disconnection_implications(split: Split, n: int) -> Set[Split]:
    """Splits of sub-unions forced by a disconnection.

    The cut realizing the split separates its two spanning arcs, so every
    subsystem inside their union with members on both sides splits the same
    way.  For an arc-partition split this is the block-subset rule: every
    choice of a non-empty piece from each block, other than the split itself.
    """
    cut = split.realizing_cut(n)
    a, b = cut.arc_sets()
    out: Set[Split] = set()
    for ra in range(1, len(a) + 1):
        for i0 in itertools.combinations(sorted(a), ra):
            for rb in range(1, len(b) + 1):
                for j0 in itertools.combinations(sorted(b), rb):
                    s = Split.of(i0, j0)
                    if s != split:
                        out.add(s)
    return out


@dataclass(frozen=True)
class CCCConfiguration:
    """A minimal induction-closed disconnection set covering all constraints."""

    n: int
    generators: Tuple[Split, ...]
    implied: Tuple[Split, ...]
    cuts: Tuple[Cut, ...]

    @property
    def splits(self) -> Tuple[Split, ...]:
        return tuple(sorted(self.generators + self.implied, key=lambda s: (s.key, s.parts)))

    def disconnected_keys(self) -> Tuple[Subsystem, ...]:
        return tuple(sorted({s.key for s in self.splits}))

    def configuration(self) -> Configuration:
        return Configuration.from_cuts(self.n, self.cuts)

    @property
    def name(self) -> str:
        return " ".join(s.name for s in self.generators)

    def __repr__(self):
        return f"CCCConfiguration({self.name})"


def enumerate_ccc(n: int, terms: Optional[Iterable[Iterable[int]]] = None
                  ) -> List[CCCConfiguration]:
    """All CCC configurations in canonical order.

    Enumerates minimal induction-closed cut sets such that every incompatible
    pair has an internal splitting cut of one member in the set; generators
    are the maximal cuts of the ideal, the rest is listed as implied.
    """
    dag = CutDag(n)
    pairs = incompatible_pairs(n, terms)
    constraint_opts: List[List[int]] = []
    for x, y in pairs:
        opts = sorted(set(internal_splitting_cuts(dag, x)) | set(internal_splitting_cuts(dag, y)))
        constraint_opts.append(opts)
    if not constraint_opts:
        return [CCCConfiguration(n, (), (), ())]

    cons_masks = []
    for opts in constraint_opts:
        mask = 0
        for i in opts:
            mask |= 1 << i
        cons_masks.append(mask)

    def covered(mask: int) -> bool:
        return all(mask & c for c in cons_masks)

    ideals: Set[int] = set()
    for combo in itertools.product(*constraint_opts):
        mask = 0
        for i in combo:
            mask |= dag.below[i]
        # strip removable maximal cuts until every one is needed
        changed = True
        while changed:
            changed = False
            for g in dag.maximal_elements(mask):
                cand = mask & ~(1 << g)
                if covered(cand):
                    mask = cand
                    changed = True
                    break
        ideals.add(mask)

    results = []
    for mask in ideals:
        if not all(not covered(mask & ~(1 << g)) for g in dag.maximal_elements(mask)):
            continue
        gens = sorted(dag.maximal_elements(mask))
        gen_cuts = [dag.nodes[i] for i in gens]
        implied_cuts = [dag.nodes[i] for i in _bits(mask) if i not in set(gens)]
        gen_splits = tuple(_cut_split(c) for c in gen_cuts)
        implied_splits = tuple(_cut_split(c) for c in implied_cuts)
        all_cuts = tuple(dag.nodes[i] for i in _bits(mask))
        results.append(CCCConfiguration(n, gen_splits, implied_splits, all_cuts))
    results.sort(key=lambda c: (len(c.generators), tuple(s.name for s in c.generators)))
    return _dedupe(results)


def _cut_split(cut: Cut) -> Split:
    a, b = cut.arc_sets()
    return Split.of(a, b)


def _dedupe(configs: List[CCCConfiguration]) -> List[CCCConfiguration]:
    seen = set()
    out = []
    for c in configs:
        key = frozenset(c.splits)
        if key not in seen:
            seen.add(key)
            out.append(c)
    return out
