"""Circular diagrams and the clean-gap proving procedure.

A diagram places points on a circle and compares two chord multisets: red
(the claimed-larger side) against blue.  The only rewriting rules are

* cancellation: a chord present on both sides is removed from both;
* cross exchange: two crossing red chords are replaced by one of the two
  non-crossing re-pairings of their four endpoints, which can only decrease
  the red total (a minimal surface cut and reconnected at a crossing stops
  being minimal).

Proving a diagram means emptying both sides by these moves.  The search is an
A* over canonical diagram states with an admissible heuristic (half the
remaining red chords), so certificates use the fewest possible exchanges;
memoization plus a step budget bound the work.  Failure is reported honestly
as not-proved and is never a refutation.

Two layouts exist.  An ``open`` space has 2n points ``L_1, R_1, ..., L_n,
R_n``.  A ``closed`` space hosts joint forms: internal junction gaps are
closed, so ``R_k = L_{k+1}`` and m regions leave m+1 points with a purifier
arc between the last point and the first; complementary chord names such as
``[4,2]`` and ``[3,3]`` collapse to the same point pair there.
"""

from __future__ import annotations

import heapq
import math
import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .simplex import (FULL, Chord, chord_endpoints, chord_full, chord_left,
                      chord_name, chord_right)

Pair = Tuple[int, int]


class DiagramSpace:
    """Circle layout translating chords to point pairs and back."""

    def __init__(self, mode: str, regions: Sequence[int]):
        if mode not in ("open", "closed"):
            raise ValueError(f"unknown mode {mode!r}")
        self.mode = mode
        self.regions = tuple(regions)
        m = len(self.regions)
        self.size = 2 * m if mode == "open" else m + 1
        self._index = {r: i for i, r in enumerate(self.regions)}

    @classmethod
    def open_circle(cls, n: int) -> "DiagramSpace":
        return cls("open", range(1, n + 1))

    @classmethod
    def closed_circle(cls, regions: Sequence[int]) -> "DiagramSpace":
        return cls("closed", regions)

    def chord_pair(self, c: Chord) -> Pair:
        if self.mode == "open":
            pts = []
            for e in chord_endpoints(c):
                pts.append(2 * self._index[e.region] + (0 if e.side == "L" else 1))
            pa, pb = pts
            if pa == pb:
                raise ValueError(f"degenerate chord {chord_name(c)}")
            return (pa, pb) if pa < pb else (pb, pa)
        if c.kind != FULL:
            raise ValueError("closed circles carry full chords only")
        u = self._index[c.i]
        v = self._index[c.j] + 1
        if u == v:
            raise ValueError(f"chord {chord_name(c)} hugs a closed gap and degenerates")
        return (u, v) if u < v else (v, u)

    def pair_chord(self, pair: Pair) -> Chord:
        p, q = pair
        if self.mode == "open":
            ra, sa = self.regions[p // 2], "L" if p % 2 == 0 else "R"
            rb, sb = self.regions[q // 2], "L" if q % 2 == 0 else "R"
            if sa == "L" and sb == "R":
                return chord_full(ra, rb)
            if sa == "R" and sb == "L":
                return chord_full(rb, ra)
            if sa == "L":
                return chord_left(ra, rb)
            return chord_right(ra, rb)
        u, v = (p, q) if p < q else (q, p)
        return chord_full(self.regions[u], self.regions[v - 1])

    def pair_name(self, pair: Pair) -> str:
        return chord_name(self.pair_chord(pair))

    def gap_pairs(self) -> List[Pair]:
        """Point pairs hugging an open gap; such chords make a diagram gapful."""
        m = len(self.regions)
        if self.mode == "open":
            # (R_j, L_{j+1}) cyclically, including the wrap-around gap
            return [tuple(sorted((2 * j + 1, (2 * j + 2) % (2 * m)))) for j in range(m)]
        return []  # junctions are closed and the purifier arc is not a gap


def pairs_cross(a: Pair, b: Pair) -> bool:
    """True iff the four endpoints are distinct and strictly interleaved."""
    if len({a[0], a[1], b[0], b[1]}) < 4:
        return False
    lo, hi = min(a), max(a)
    return (lo < b[0] < hi) != (lo < b[1] < hi)


def pair_exchange(a: Pair, b: Pair) -> Tuple[Tuple[Pair, Pair], Tuple[Pair, Pair]]:
    """Both non-crossing re-pairings of two crossing chords.

    With endpoints in circular order w < x < y < z the crossing pair is
    {(w,y), (x,z)}; the re-pairings are {(w,x), (y,z)} and {(w,z), (x,y)}.
    """
    if not pairs_cross(a, b):
        raise ValueError(f"chords {a} and {b} do not cross")
    w, x, y, z = sorted((*a, *b))
    return ((w, x), (y, z)), ((w, z), (x, y))


def chords_cross(c1: Chord, c2: Chord, n: int) -> bool:
    space = DiagramSpace.open_circle(n)
    return pairs_cross(space.chord_pair(c1), space.chord_pair(c2))


def cross_exchange(c1: Chord, c2: Chord, n: int, choice: str = "A") -> Tuple[Chord, Chord]:
    """One of the two admissible re-pairings, as chords.

    Choice "A" pairs circularly adjacent endpoints (w,x),(y,z); choice "B"
    pairs the outer ones (w,z),(x,y).  Both satisfy the cross inequality.
    """
    space = DiagramSpace.open_circle(n)
    both = pair_exchange(space.chord_pair(c1), space.chord_pair(c2))
    pick = both[0] if choice == "A" else both[1]
    return space.pair_chord(pick[0]), space.pair_chord(pick[1])


@dataclass(frozen=True)
class ExchangeStep:
    removed: Tuple[Pair, Pair]
    inserted: Tuple[Pair, Pair]
    witness: Tuple[int, int, int, int]  # the four endpoints in circular order


@dataclass(frozen=True)
class CancelStep:
    chord: Pair
    count: int


@dataclass(frozen=True)
class AssumeStep:
    label: str


@dataclass
class CutAssumption:
    """An assumed inequality sum(upper) >= sum(lower) between chord multisets.

    Folding it into a diagram adds ``lower`` to the red side and ``upper`` to
    the blue side: proving the augmented diagram proves the original under
    the assumption.
    """

    upper: Counter
    lower: Counter
    label: str = ""


PROVED = "proved"
NOT_PROVED = "not_proved"


@dataclass
class ProofResult:
    status: str
    steps: List[object] = field(default_factory=list)
    exchanges: int = 0
    expanded: int = 0
    budget: int = 0
    reason: str = ""

    @property
    def proved(self) -> bool:
        return self.status == PROVED


class CircularDiagram:
    """Red/blue chord multisets over a :class:`DiagramSpace`, kept cancelled."""

    def __init__(self, space: DiagramSpace, red: Counter, blue: Counter):
        self.space = space
        red, blue = Counter(red), Counter(blue)
        for ch in set(red) & set(blue):
            m = min(red[ch], blue[ch])
            red[ch] -= m
            blue[ch] -= m
        self.red = Counter({c: m for c, m in red.items() if m > 0})
        self.blue = Counter({c: m for c, m in blue.items() if m > 0})

    @classmethod
    def from_chords(cls, space: DiagramSpace, red: Iterable[Chord] | Counter,
                    blue: Iterable[Chord] | Counter) -> "CircularDiagram":
        def pairs(chords):
            out = Counter()
            items = chords.items() if isinstance(chords, Counter) else ((c, 1) for c in chords)
            for c, m in items:
                out[space.chord_pair(c)] += m
            return out
        return cls(space, pairs(red), pairs(blue))

    def is_empty(self) -> bool:
        return not self.red and not self.blue

    def endpoint_degrees(self) -> Counter:
        deg = Counter()
        for side, sign in ((self.red, 1), (self.blue, -1)):
            for (p, q), m in side.items():
                deg[p] += sign * m
                deg[q] += sign * m
        return deg

    def is_balanced(self) -> bool:
        """Every point meets equally many red and blue chord ends."""
        return all(v == 0 for v in self.endpoint_degrees().values())

    def chord_names(self) -> Tuple[List[str], List[str]]:
        def names(side):
            out = []
            for pair in sorted(side):
                out.extend([self.space.pair_name(pair)] * side[pair])
            return out
        return names(self.red), names(self.blue)

    def state_key(self):
        return (_expand(self.red), _expand(self.blue))

    def __eq__(self, other):
        return (isinstance(other, CircularDiagram)
                and self.space.mode == other.space.mode
                and self.space.size == other.space.size
                and self.red == other.red and self.blue == other.blue)

    def __repr__(self):
        r, b = self.chord_names()
        return f"CircularDiagram(red={'+'.join(r) or '0'} | blue={'+'.join(b) or '0'})"


def is_gapless(diagram: CircularDiagram) -> bool:
    """No red or blue chord hugs an open gap of the layout."""
    gaps = set(diagram.space.gap_pairs())
    return not any(p in gaps for p in list(diagram.red) + list(diagram.blue))


def _expand(side: Counter) -> Tuple[Pair, ...]:
    out: List[Pair] = []
    for pair in sorted(side):
        out.extend([pair] * side[pair])
    return tuple(out)


def _cancel(red: Counter, blue: Counter):
    steps = []
    for ch in sorted(set(red) & set(blue)):
        m = min(red[ch], blue[ch])
        if m > 0:
            steps.append(CancelStep(ch, m))
            red[ch] -= m
            blue[ch] -= m
    return (Counter({c: m for c, m in red.items() if m}),
            Counter({c: m for c, m in blue.items() if m}), steps)


def clean_gap_prove(diagram: CircularDiagram, budget: int | None = None,
                    assumptions: Sequence[CutAssumption] = ()) -> ProofResult:
    """Search for a cancellation/cross-exchange proof that red covers blue.

    The returned steps replay the proof: :class:`AssumeStep` for folded
    assumptions, then alternating :class:`ExchangeStep`/:class:`CancelStep`
    records.  Deterministic for a fixed diagram, budget and assumption list;
    the exchange count is minimal.
    """
    red, blue = Counter(diagram.red), Counter(diagram.blue)
    pre_steps: List[object] = []
    for assume in assumptions:
        for ch, m in assume.lower.items():
            red[ch] += m
        for ch, m in assume.upper.items():
            blue[ch] += m
        pre_steps.append(AssumeStep(assume.label or "cut constraint"))
    red, blue, cancels = _cancel(red, blue)
    pre_steps.extend(cancels)
    if sum(red.values()) != sum(blue.values()):
        return ProofResult(NOT_PROVED, pre_steps, reason="red and blue totals differ")
    if budget is None:
        # 4x headroom over (chords * points)^2: the largest published
        # five-party diagram needs ~18k expansions against 8100
        budget = max(64, 4 * (sum(red.values()) * diagram.space.size) ** 2)

    start = (_expand(red), _expand(blue))
    if not start[0]:
        return ProofResult(PROVED, pre_steps, exchanges=0, budget=budget)

    gap_set = set(diagram.space.gap_pairs())
    best: Dict[tuple, int] = {start: 0}
    parent_of: Dict[tuple, tuple] = {}
    closed = set()
    tick = 0
    pq = [(len(start[0]) / 2.0, 0, tick, start)]
    expanded = 0
    while pq:
        _, g, _, state = heapq.heappop(pq)
        if state in closed or g > best.get(state, 1 << 60):
            continue
        closed.add(state)
        if not state[0]:
            steps = pre_steps + _replay(parent_of, state)
            nex = sum(1 for s in steps if isinstance(s, ExchangeStep))
            return ProofResult(PROVED, steps, exchanges=nex, expanded=expanded, budget=budget)
        expanded += 1
        if expanded > budget:
            return ProofResult(NOT_PROVED, pre_steps, expanded=expanded, budget=budget,
                               reason="step budget exhausted")
        rs, bs = state
        blue_ms = Counter(bs)
        moves = []
        seen_pairs = set()
        for ia in range(len(rs)):
            for ib in range(ia + 1, len(rs)):
                a, b = rs[ia], rs[ib]
                if (a, b) in seen_pairs or not pairs_cross(a, b):
                    continue
                seen_pairs.add((a, b))
                for ins in pair_exchange(a, b):
                    ins_cnt = Counter(ins)
                    gain = sum(min(blue_ms[p], c) for p, c in ins_cnt.items())
                    makes_gap = any(p in gap_set and p not in blue_ms for p in ins)
                    moves.append((-gain, makes_gap, ins, (a, b)))
        moves.sort()
        for _, _, ins, rem in moves:
            nred = Counter(rs)
            nred[rem[0]] -= 1
            nred[rem[1]] -= 1
            nred += Counter(ins)
            nred2, nblue2, cancel_steps = _cancel(
                Counter({p: m for p, m in nred.items() if m > 0}), Counter(blue_ms))
            nstate = (_expand(nred2), _expand(nblue2))
            ng = g + 1
            if ng >= best.get(nstate, 1 << 60):
                continue
            best[nstate] = ng
            witness = tuple(sorted((*rem[0], *rem[1])))
            parent_of[nstate] = (state, (ExchangeStep(rem, ins, witness), tuple(cancel_steps)))
            tick += 1
            heapq.heappush(pq, (ng + len(nstate[0]) / 2.0, ng, tick, nstate))
    return ProofResult(NOT_PROVED, pre_steps, expanded=expanded, budget=budget,
                       reason="search space exhausted")


def _replay(parent_of, final_state) -> List[object]:
    chain = []
    state = final_state
    while state in parent_of:
        parent, (exchange, cancels) = parent_of[state]
        chain.append((exchange, cancels))
        state = parent
    chain.reverse()
    steps: List[object] = []
    for exchange, cancels in chain:
        steps.append(exchange)
        steps.extend(cancels)
    return steps


@dataclass
class OracleVerdict:
    ok: bool
    samples: int
    counterexample: Optional[Tuple[float, ...]] = None
    margin: float = float("inf")

    def __bool__(self):
        return self.ok


def sample_angles(size: int, rng: random.Random, min_gap: float = 1e-6) -> Tuple[float, ...]:
    """Strictly increasing boundary angles; degenerate draws are resampled."""
    while True:
        angles = sorted(rng.uniform(0.0, 2.0 * math.pi) for _ in range(size))
        gaps = [b - a for a, b in zip(angles, angles[1:])]
        gaps.append(2.0 * math.pi - (angles[-1] - angles[0]))
        if min(gaps) > min_gap:
            return tuple(angles)


def chord_weight(angles: Sequence[float], pair: Pair, regulator: float) -> float:
    """Regulated geodesic length between two boundary points of the disk.

    Equals ``2 log(chordal distance / regulator)``; the regulator contribution
    cancels in any endpoint-balanced comparison, and by Ptolemy's relation the
    cross inequality holds exactly for these weights.
    """
    d = abs(angles[pair[0]] - angles[pair[1]])
    return 2.0 * math.log(2.0 * math.sin(0.5 * d) / regulator)


def total_weight(angles: Sequence[float], side: Counter, regulator: float) -> float:
    return sum(m * chord_weight(angles, p, regulator) for p, m in side.items())


def numeric_oracle(diagram: CircularDiagram, samples: int = 1000, seed: int = 0,
                   regulator: float = 1e-4, tolerance: float = 1e-9) -> OracleVerdict:
    """Sample hyperbolic chord weights looking for sum(red) < sum(blue).

    A counterexample certifies that no sound rewriting can prove the diagram;
    proved diagrams must never be refuted.  Tolerance is relative to the
    sampled weight scale.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    if diagram.is_empty():
        return OracleVerdict(True, samples)
    rng = random.Random(seed)
    worst = float("inf")
    for _ in range(samples):
        angles = sample_angles(diagram.space.size, rng)
        r = total_weight(angles, diagram.red, regulator)
        b = total_weight(angles, diagram.blue, regulator)
        scale = max(1.0, abs(r) + abs(b))
        margin = (r - b) / scale
        worst = min(worst, margin)
        if margin < -tolerance:
            return OracleVerdict(False, samples, counterexample=angles, margin=margin)
    return OracleVerdict(True, samples, margin=worst)


def exchange_is_sound(step: ExchangeStep, size: int, samples: int = 1000, seed: int = 0,
                      regulator: float = 1e-4, tolerance: float = 1e-9) -> bool:
    """Numeric check of sum(removed) >= sum(inserted) on random angle draws."""
    rng = random.Random(seed)
    for _ in range(samples):
        angles = sample_angles(size, rng)
        out = sum(chord_weight(angles, p, regulator) for p in step.removed)
        ins = sum(chord_weight(angles, p, regulator) for p in step.inserted)
        scale = max(1.0, abs(out) + abs(ins))
        if (out - ins) / scale < -tolerance:
            return False
    return True
