"""Chords on the boundary circle and connectivity configurations.

Each region ``A_i`` occupies an interval of the boundary circle with a left
endpoint ``L_i`` and a right endpoint ``R_i``, in circular order
``L_1, R_1, L_2, R_2, ..., L_n, R_n``.  A full chord ``[i,j]`` joins ``L_i``
to ``R_j``; the half chords ``[i,j>`` (two left endpoints) and ``<i,j]`` (two
right endpoints) never enter entropy expansions but appear as intermediate
objects during diagram rewriting.

The connected-phase entropy of a union region expands into full chords: for
``K = {k_1 < ... < k_m}`` it is the cyclic sum of ``[k_{s+1}, k_s]``, and a
singleton contributes its cap ``[i,i]``.  A :class:`Configuration` assigns to
union subsystems a partition into clusters (each internally connected, the
clusters mutually disconnected), and entropies expand cluster by cluster.
"""

from __future__ import annotations

import itertools
import re
from collections import Counter
from typing import Dict, Iterable, Mapping, NamedTuple, Sequence, Tuple

from .algebra import EntropyForm, Subsystem, subsystem

FULL = "full"
LEFT = "left"
RIGHT = "right"


class Endpoint(NamedTuple):
    region: int
    side: str  # "L" or "R"


class Chord(NamedTuple):
    """A chord between two boundary endpoints.

    kind "full": (L_i, R_j); "left": (L_i, L_j) with i < j;
    "right": (R_i, R_j) with i < j.
    """

    kind: str
    i: int
    j: int


def chord_full(i: int, j: int) -> Chord:
    return Chord(FULL, i, j)


def chord_left(i: int, j: int) -> Chord:
    if i == j:
        raise ValueError("half chord needs two distinct regions")
    return Chord(LEFT, min(i, j), max(i, j))


def chord_right(i: int, j: int) -> Chord:
    if i == j:
        raise ValueError("half chord needs two distinct regions")
    return Chord(RIGHT, min(i, j), max(i, j))


def chord_name(c: Chord) -> str:
    if c.kind == FULL:
        return f"[{c.i},{c.j}]"
    if c.kind == LEFT:
        return f"[{c.i},{c.j}>"
    return f"<{c.i},{c.j}]"


_CHORD_RE = re.compile(r"^(\[|<)(\d+),(\d+)(\]|>)$")


def parse_chord(text: str) -> Chord:
    m = _CHORD_RE.match(text.strip())
    if not m:
        raise ValueError(f"not a chord: {text!r}")
    left, i, j, right = m.group(1), int(m.group(2)), int(m.group(3)), m.group(4)
    if left == "[" and right == "]":
        return chord_full(i, j)
    if left == "[" and right == ">":
        return chord_left(i, j)
    if left == "<" and right == "]":
        return chord_right(i, j)
    raise ValueError(f"not a chord: {text!r}")


def chord_endpoints(c: Chord) -> Tuple[Endpoint, Endpoint]:
    if c.kind == FULL:
        return Endpoint(c.i, "L"), Endpoint(c.j, "R")
    if c.kind == LEFT:
        return Endpoint(c.i, "L"), Endpoint(c.j, "L")
    return Endpoint(c.i, "R"), Endpoint(c.j, "R")


def endpoint_position(e: Endpoint, n: int) -> int:
    """Position on the 2n-point circle: L_i at 2(i-1), R_i at 2(i-1)+1."""
    if not 1 <= e.region <= n:
        raise ValueError(f"region {e.region} out of range 1..{n}")
    return 2 * (e.region - 1) + (0 if e.side == "L" else 1)


def dual_chord(c: Chord, n: int) -> Chord:
    """Complementary name of a full chord once every gap is closed.

    Identifying R_i with L_{i+1} all the way around the circle, the pair of
    points defining ``[i,j]`` also defines ``[j+1, i-1]`` (indices mod n).
    Involutive under that identification.
    """
    if c.kind != FULL:
        raise ValueError("dual_chord is defined for full chords")
    i = (c.j % n) + 1
    j = (c.i - 2) % n + 1
    return chord_full(i, j)


def connected_expansion(key: Iterable[int]) -> Counter:
    """Chords of the fully connected phase of a union region."""
    k = subsystem(key)
    if len(k) == 1:
        return Counter({chord_full(k[0], k[0]): 1})
    out = Counter()
    for s in range(len(k)):
        out[chord_full(k[(s + 1) % len(k)], k[s])] += 1
    return out


class Configuration:
    """Partition of union subsystems into mutually disconnected clusters.

    Subsystems not mentioned are taken fully connected.  Clusters must be
    contiguous in the cyclic order restricted to the subsystem's members
    (so ``{2} | {1,3}`` is a valid split of ``{1,2,3}``).
    """

    def __init__(self, n: int, parts: Mapping[Iterable[int], Sequence[Iterable[int]]] | None = None):
        self.n = n
        self._parts: Dict[Subsystem, Tuple[Subsystem, ...]] = {}
        for key, clusters in (parts or {}).items():
            k = subsystem(key)
            cl = tuple(sorted(subsystem(c) for c in clusters))
            flat = [r for c in cl for r in c]
            if sorted(flat) != list(k):
                raise ValueError(f"clusters {cl} do not partition {k}")
            for c in cl:
                if not _contiguous_in_restriction(c, k):
                    raise ValueError(f"cluster {c} is not contiguous within {k}")
            self._parts[k] = cl

    @classmethod
    def from_cuts(cls, n: int, cuts: Iterable, subsystems: Iterable[Iterable[int]] | None = None) -> "Configuration":
        """Configuration induced by a set of cuts (see :mod:`heiprover.cuts`).

        Every union subsystem is split iteratively: a cluster breaks whenever
        some cut's two arcs cover it with members on both sides.
        """
        cuts = list(cuts)
        universe = ([subsystem(k) for k in subsystems] if subsystems is not None
                    else [subsystem(c) for r in range(2, n + 1)
                          for c in itertools.combinations(range(1, n + 1), r)])
        parts = {}
        for k in universe:
            clusters = [k]
            changed = True
            while changed:
                changed = False
                nxt = []
                for cl in clusters:
                    pieces = None
                    for cut in cuts:
                        a, b = cut.arc_sets()
                        cs = set(cl)
                        if cs <= (a | b) and (cs & a) and (cs & b):
                            pieces = (subsystem(cs & a), subsystem(cs & b))
                            break
                    if pieces:
                        nxt.extend(pieces)
                        changed = True
                    else:
                        nxt.append(cl)
                clusters = nxt
            if len(clusters) > 1:
                parts[k] = tuple(sorted(clusters))
        return cls(n, parts)

    def clusters(self, key: Iterable[int]) -> Tuple[Subsystem, ...]:
        k = subsystem(key)
        return self._parts.get(k, (k,))

    def split_subsystems(self) -> Dict[Subsystem, Tuple[Subsystem, ...]]:
        return dict(self._parts)

    def is_split(self, key: Iterable[int]) -> bool:
        return len(self.clusters(key)) > 1

    def __eq__(self, other):
        return isinstance(other, Configuration) and (self.n, self._parts) == (other.n, other._parts)

    def __repr__(self):
        body = ", ".join(f"{k}:{'|'.join(map(str, v))}" for k, v in sorted(self._parts.items()))
        return f"Configuration(n={self.n}, {{{body}}})"


def _contiguous_in_restriction(cluster: Subsystem, key: Subsystem) -> bool:
    # a cyclic interval of the member sequence is either a linear interval
    # or the complement of one
    idx = {r: i for i, r in enumerate(key)}
    marks = sorted(idx[r] for r in cluster)
    m = len(key)
    if len(marks) in (1, m):
        return True
    if marks == list(range(marks[0], marks[0] + len(marks))):
        return True
    comp = sorted(set(range(m)) - set(marks))
    return comp == list(range(comp[0], comp[0] + len(comp)))


def expand_entropy(key: Iterable[int], cfg: Configuration) -> Counter:
    """Chord multiset of a union subsystem in the given configuration."""
    out = Counter()
    for cluster in cfg.clusters(key):
        out += connected_expansion(cluster)
    return out


def expand_inequality(form: EntropyForm, cfg: Configuration) -> Tuple[Counter, Counter]:
    """Expand an S-basis form into cancelled red/blue chord multisets.

    Positive coefficients contribute to the red side, negative to the blue,
    with multiplicity equal to the coefficient magnitude; chords present on
    both sides cancel, so the returned multisets are disjoint.
    """
    if form.basis != "S":
        raise ValueError("expand_inequality expects an S-basis form")
    red, blue = Counter(), Counter()
    for key, coeff in form.terms.items():
        chords = expand_entropy(key, cfg)
        side = red if coeff > 0 else blue
        for ch, mult in chords.items():
            side[ch] += mult * abs(coeff)
    common = {ch: min(red[ch], blue[ch]) for ch in set(red) & set(blue)}
    for ch, m in common.items():
        red[ch] -= m
        blue[ch] -= m
    return Counter({c: m for c, m in red.items() if m}), Counter({c: m for c, m in blue.items() if m})
