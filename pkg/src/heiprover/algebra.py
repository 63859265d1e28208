"""Exact integer algebra over subsystem entropies and multipartite informations.

A linear form is a map from subsystems (sorted tuples of region indices) to
integer coefficients, expressed either in the S-basis (subsystem entropies
``S_K``) or the I-basis (multipartite informations ``I_K``).  The two bases
are related by the alternating subset sum

    I_K = sum_{nonempty J subseteq K} (-1)^(|J|+1) S_J,

which is an involution on coefficient vectors, so the same transform converts
in both directions.  Everything in this module is exact: coefficients stay in
``int`` and no floating point is used.
"""

from __future__ import annotations

import enum
import itertools
from typing import Dict, Iterable, Mapping, Sequence, Tuple

Subsystem = Tuple[int, ...]


def subsystem(members: Iterable[int]) -> Subsystem:
    """Canonical subsystem: strictly increasing tuple of positive regions."""
    t = tuple(sorted(set(members)))
    if not t:
        raise ValueError("subsystem must be non-empty")
    if t[0] < 1:
        raise ValueError(f"region indices start at 1, got {t}")
    return t


def _subsets(members: Sequence[int], include_empty: bool = False):
    lo = 0 if include_empty else 1
    for r in range(lo, len(members) + 1):
        yield from itertools.combinations(members, r)


class BalanceClass(enum.Enum):
    UNBALANCED = "unbalanced"
    BALANCED = "balanced"
    SUPERBALANCED = "superbalanced"


class EntropyForm:
    """Integer linear combination of S_K or I_K symbols over regions 1..n.

    Immutable once constructed; zero coefficients are dropped.  Terms are kept
    in a canonical order (size of the subsystem, then lexicographic) so that
    printing and serialization are deterministic.
    """

    __slots__ = ("basis", "n", "_terms")

    def __init__(self, basis: str, terms: Mapping[Iterable[int], int], n: int | None = None):
        if basis not in ("S", "I"):
            raise ValueError(f"basis must be 'S' or 'I', got {basis!r}")
        cleaned: Dict[Subsystem, int] = {}
        top = 0
        for key, coeff in terms.items():
            if not isinstance(coeff, int):
                raise TypeError(f"coefficient for {key} is not an integer: {coeff!r}")
            k = subsystem(key)
            top = max(top, k[-1])
            if coeff:
                cleaned[k] = cleaned.get(k, 0) + coeff
                if cleaned[k] == 0:
                    del cleaned[k]
        if n is None:
            n = top if top else 1
        if top > n:
            raise ValueError(f"subsystem index {top} exceeds region count n={n}")
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_terms", dict(sorted(cleaned.items(), key=lambda kv: (len(kv[0]), kv[0]))))

    def __setattr__(self, *args):
        raise AttributeError("EntropyForm is immutable")

    @property
    def terms(self) -> Dict[Subsystem, int]:
        return dict(self._terms)

    def coefficient(self, key: Iterable[int]) -> int:
        return self._terms.get(subsystem(key), 0)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def with_n(self, n: int) -> "EntropyForm":
        return EntropyForm(self.basis, self._terms, n)

    def __eq__(self, other) -> bool:
        return (isinstance(other, EntropyForm) and self.basis == other.basis
                and self._terms == other._terms)

    def __hash__(self):
        return hash((self.basis, tuple(self._terms.items())))

    def __neg__(self) -> "EntropyForm":
        return EntropyForm(self.basis, {k: -v for k, v in self._terms.items()}, self.n)

    def __add__(self, other: "EntropyForm") -> "EntropyForm":
        if self.basis != other.basis:
            raise ValueError("cannot add forms in different bases")
        out = dict(self._terms)
        for k, v in other._terms.items():
            out[k] = out.get(k, 0) + v
        return EntropyForm(self.basis, out, max(self.n, other.n))

    def __sub__(self, other: "EntropyForm") -> "EntropyForm":
        return self + (-other)

    def scaled(self, c: int) -> "EntropyForm":
        return EntropyForm(self.basis, {k: c * v for k, v in self._terms.items()}, self.n)

    def __repr__(self) -> str:
        return f"EntropyForm({render_form(self)!r}, n={self.n})"


def render_form(form: EntropyForm) -> str:
    """Canonical text like ``2*S(1,2) - S(1,2,3)``; empty form renders as ``0``."""
    if form.is_zero:
        return "0"
    parts = []
    for key, coeff in form._terms.items():
        sym = f"{form.basis}({','.join(map(str, key))})"
        mag = abs(coeff)
        body = sym if mag == 1 else f"{mag}*{sym}"
        if not parts:
            parts.append(body if coeff > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if coeff > 0 else f"- {body}")
    return " ".join(parts)


def _alternating_transform(form: EntropyForm, out_basis: str) -> EntropyForm:
    # X_K = sum_{nonempty J subseteq K} (-1)^(|J|+1) Y_J is its own inverse.
    out: Dict[Subsystem, int] = {}
    for key, coeff in form._terms.items():
        for j in _subsets(key):
            sign = -1 if len(j) % 2 == 0 else 1
            out[j] = out.get(j, 0) + sign * coeff
    return EntropyForm(out_basis, out, form.n)


def i_to_s(form: EntropyForm) -> EntropyForm:
    """Expand every I_K into its alternating sum of subsystem entropies."""
    if form.basis != "I":
        raise ValueError("i_to_s expects an I-basis form")
    return _alternating_transform(form, "S")


def s_to_i(form: EntropyForm) -> EntropyForm:
    """Rewrite an S-basis form in the I-basis (inverse of :func:`i_to_s`)."""
    if form.basis != "S":
        raise ValueError("s_to_i expects an S-basis form")
    return _alternating_transform(form, "I")


def to_basis(form: EntropyForm, basis: str) -> EntropyForm:
    if form.basis == basis:
        return form
    return i_to_s(form) if basis == "S" else s_to_i(form)


def classify_balance(form: EntropyForm) -> BalanceClass:
    """Balanced forms have no single-region I-term; superbalanced none of size two."""
    iform = to_basis(form, "I")
    sizes = {len(k) for k in iform._terms}
    if 1 in sizes:
        return BalanceClass.UNBALANCED
    if 2 in sizes:
        return BalanceClass.BALANCED
    return BalanceClass.SUPERBALANCED


def grouped_information(groups: Sequence[Iterable[int]], n: int) -> EntropyForm:
    """Expand an information symbol whose arguments are groups of regions.

    Each group is treated as a single composite region; the expansion into
    elementary informations is

        I_(G1)...(Gm) = sum (-1)^(sum_i (|H_i|+1)) I_{H_1 ... H_m}

    over non-empty subsets H_i of each G_i.
    """
    gs = [subsystem(g) for g in groups]
    for a, b in itertools.combinations(gs, 2):
        if set(a) & set(b):
            raise ValueError(f"groups overlap: {a} and {b}")
    out: Dict[Subsystem, int] = {}
    for choice in itertools.product(*[list(_subsets(g)) for g in gs]):
        sign = 1
        members = []
        for h in choice:
            if len(h) % 2 == 0:
                sign = -sign
            members.extend(h)
        key = subsystem(members)
        out[key] = out.get(key, 0) + sign
    return EntropyForm("I", out, n)


def group_regions(form: EntropyForm, blocks: Sequence[Iterable[int]]) -> EntropyForm:
    """Re-expand every term of an I-form with the given blocks fused.

    ``blocks`` are disjoint subsets of 1..n.  Inside each term, members that
    fall into a block are replaced by the whole block as a single argument,
    and the grouped symbol is expanded back to elementary informations.
    """
    if form.basis != "I":
        raise ValueError("group_regions expects an I-basis form")
    bs = [subsystem(b) for b in blocks]
    for a, b in itertools.combinations(bs, 2):
        if set(a) & set(b):
            raise ValueError(f"blocks overlap: {a} and {b}")
    owner = {r: b for b in bs for r in b}
    out = EntropyForm("I", {}, form.n)
    for key, coeff in form._terms.items():
        groups = []
        seen = set()
        for r in key:
            g = owner.get(r, (r,))
            if g not in seen:
                seen.add(g)
                groups.append(g)
        out = out + grouped_information(groups, form.n).scaled(coeff)
    return out


def eliminate_region(form: EntropyForm, region: int, n: int | None = None) -> EntropyForm:
    """Rewrite an I-form without any occurrence of ``region``, assuming purity.

    Uses the reduction identity, valid when the total n-party state is pure:

        I_{K u {r}} = I_K + sum_{Q subseteq complement(K)\\{r}}
                            (-1)^(|K|+|Q|+1) I_{K u Q}

    (the sum includes Q = empty).  Every term on the right avoids ``r``, so
    iterating over the input terms produces the joint form over the remaining
    regions.  Correctness is property-tested against random entropy vectors
    satisfying S_K = S_complement(K) rather than trusted from the derivation.
    """
    if form.basis != "I":
        raise ValueError("eliminate_region expects an I-basis form")
    n = n or form.n
    if not 1 <= region <= n:
        raise ValueError(f"region {region} out of range 1..{n}")
    out: Dict[Subsystem, int] = {}

    def add(key: Subsystem, c: int):
        out[key] = out.get(key, 0) + c

    for key, coeff in form._terms.items():
        if region not in key:
            add(key, coeff)
            continue
        base = tuple(r for r in key if r != region)
        if not base:
            raise ValueError(f"cannot eliminate {region} from the bare term I_{key}")
        add(base, coeff)
        complement = [r for r in range(1, n + 1) if r not in key]
        for q in _subsets(complement, include_empty=True):
            sign = -1 if (len(base) + len(q)) % 2 == 0 else 1
            add(subsystem(base + q), sign * coeff)
    return EntropyForm("I", out, n)


def complement_of(key: Subsystem, n: int) -> Subsystem:
    rest = tuple(r for r in range(1, n + 1) if r not in key)
    if not rest:
        raise ValueError(f"complement of the full system {key} is empty")
    return rest


def canonicalize_complement(form: EntropyForm, n: int | None = None,
                            drop_region: int | None = None) -> EntropyForm:
    """Replace entropies by their purity-equal complements S_K = S_complement(K).

    With ``drop_region`` given, every S_K containing that region is replaced by
    its complement (the rewriting used to derive joint forms).  Otherwise the
    canonical representative is the smaller subsystem, with a lexicographic
    tie-break at |K| = n/2.  Idempotent in both modes.
    """
    if form.basis != "S":
        raise ValueError("canonicalize_complement expects an S-basis form")
    n = n or form.n
    out: Dict[Subsystem, int] = {}
    for key, coeff in form._terms.items():
        if len(key) == n:
            # S of the full pure system vanishes
            continue
        if drop_region is not None:
            rep = complement_of(key, n) if drop_region in key else key
        else:
            comp = complement_of(key, n)
            if len(key) > n - len(key) or (2 * len(key) == n and comp < key):
                rep = comp
            else:
                rep = key
        out[rep] = out.get(rep, 0) + coeff
    return EntropyForm("S", out, n)


def apply_permutation(form: EntropyForm, perm: Mapping[int, int]) -> EntropyForm:
    """Relabel regions by a bijection on 1..n; coefficients are preserved."""
    n = form.n
    full = {r: perm.get(r, r) for r in range(1, n + 1)}
    if sorted(full.values()) != list(range(1, n + 1)):
        raise ValueError(f"permutation is not a bijection on 1..{n}: {perm}")
    return EntropyForm(form.basis, {subsystem(full[r] for r in key): c
                                    for key, c in form._terms.items()}, n)


def evaluate(form: EntropyForm, entropies: Mapping[Subsystem, int | float]):
    """Evaluate against a map from subsystems to entropy values (S-basis keys)."""
    sform = to_basis(form, "S")
    return sum(coeff * entropies[key] for key, coeff in sform._terms.items())


def random_purity_entropies(n: int, rng, low: int = -20, high: int = 20) -> Dict[Subsystem, int]:
    """Random integer entropy vector satisfying S_K = S_complement(K), S_full = 0.

    Not required to be physically realizable; used to check identities that
    must hold for every purity-respecting assignment.
    """
    values: Dict[Subsystem, int] = {}
    for r in range(1, n + 1):
        for key in itertools.combinations(range(1, n + 1), r):
            if key in values:
                continue
            if r == n:
                values[key] = 0
                continue
            v = rng.randint(low, high)
            values[key] = v
            values[complement_of(key, n)] = v
    return values
