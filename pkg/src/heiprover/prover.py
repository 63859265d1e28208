"""End-to-end proving pipeline and replayable certificates.

The pipeline for a candidate inequality (written as ``form >= 0``):

1. classify balance; unbalanced input is rejected;
2. for superbalanced forms on five or more regions, reduce to the joint form
   by eliminating one region under purity (the region is chosen to minimize
   the number of surviving information terms, ties to the highest index);
   a vanishing joint form means the inequality is an identity under purity,
   in which case the original form is proved directly instead;
3. relabel the regions actually used onto 1..m, enumerate the CCC
   configurations of the m-partite circle, and expand the working form into a
   circular diagram per configuration -- on the gap-closed circle for joint
   forms, on the open circle otherwise.  Superbalanced expansions must be
   gapless; a gap chord signals an internal bug and raises;
4. run the clean-gap search on every distinct diagram (duplicates are proved
   once and cross-referenced) and assemble a certificate.

Certificates replay: :func:`verify_certificate` re-derives the joint form and
every expansion, re-checks each exchange's crossing witness and bookkeeping,
and re-runs the numeric oracle on each exchange and diagram.
"""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from . import __version__ as _version
from .algebra import (BalanceClass, EntropyForm, apply_permutation,
                      classify_balance, eliminate_region, i_to_s, render_form,
                      subsystem, to_basis)
from .compat import CCCConfiguration, enumerate_ccc
from .diagram import (NOT_PROVED, PROVED, CancelStep, CircularDiagram,
                      DiagramSpace, ExchangeStep, ProofResult, clean_gap_prove,
                      exchange_is_sound, numeric_oracle, pair_exchange,
                      pairs_cross)
from .simplex import expand_inequality


class UnbalancedFormError(ValueError):
    """The input cannot be an entropy inequality: its divergences survive."""


class InternalConsistencyError(RuntimeError):
    """A superbalanced CCC expansion produced a gap chord."""


@dataclass
class JointTrace:
    eliminated_region: int
    joint_form: EntropyForm  # over the original labels
    note: str = ""


@dataclass
class DiagramEntry:
    index: int
    generators: Tuple[str, ...]
    implied: Tuple[str, ...]
    diagram: CircularDiagram
    duplicate_of: Optional[int] = None
    result: Optional[ProofResult] = None


@dataclass
class ProofCertificate:
    source: str
    n: int
    balance: BalanceClass
    form_i: EntropyForm
    form_s: EntropyForm
    joint: Optional[JointTrace]
    relabel: Dict[int, int]          # original label -> working label
    working_form: EntropyForm        # I-basis over 1..m
    mode: str                        # "open" or "closed"
    entries: List[DiagramEntry]
    verdict: str
    notes: List[str] = field(default_factory=list)
    meta: Dict[str, object] = field(default_factory=dict)

    @property
    def proved(self) -> bool:
        return self.verdict == PROVED

    @property
    def exchange_total(self) -> int:
        return sum(e.result.exchanges for e in self.entries if e.result is not None)

    def space(self) -> DiagramSpace:
        m = len(self.relabel)
        return (DiagramSpace.closed_circle(range(1, m + 1)) if self.mode == "closed"
                else DiagramSpace.open_circle(m))


def _choose_elimination(form: EntropyForm, n: int) -> Tuple[int, EntropyForm]:
    """Region whose elimination leaves the fewest terms, ties to the highest."""
    best = None
    for r in range(1, n + 1):
        candidate = eliminate_region(form, r, n)
        key = (len(candidate.terms), -r)
        if best is None or key < best[0]:
            best = (key, r, candidate)
    return best[1], best[2]


def _compact(form: EntropyForm) -> Tuple[EntropyForm, Dict[int, int]]:
    used = sorted({r for key in form.terms for r in key})
    relabel = {r: i + 1 for i, r in enumerate(used)}
    terms = {tuple(relabel[r] for r in key): c for key, c in form.terms.items()}
    return EntropyForm(form.basis, terms, len(used)), relabel


def _gap_chords_present(red: Counter, blue: Counter, m: int, mode: str) -> List:
    # junction gap chords are full chords [j+1, j]; the wrap-around [1, m]
    # only counts as a gap on the open circle (a purifier arc sits there
    # once the circle is closed)
    gaps = {(j + 1, j) for j in range(1, m)}
    if mode == "open":
        gaps.add((1, m))
    found = []
    for ch in list(red) + list(blue):
        if ch.kind == "full" and (ch.i, ch.j) in gaps:
            found.append(ch)
    return found


def prove(form: EntropyForm, n: int | None = None, *, use_joint: bool = True,
          budget: int | None = None, seed: int = 0, samples: int = 1000,
          source: str | None = None) -> ProofCertificate:
    """Prove ``form >= 0`` over all configurations via CCC diagrams.

    The verdict is ``proved`` only when every distinct CCC diagram is proved
    by the clean-gap procedure; by the Configuration Theorem this extends to
    every configuration.  ``not_proved`` is honest failure, not refutation.
    """
    n = n or form.n
    iform = to_basis(form, "I").with_n(n)
    sform = i_to_s(iform)
    balance = classify_balance(iform)
    if balance is BalanceClass.UNBALANCED:
        raise UnbalancedFormError(
            f"not balanced: {render_form(iform)} has a single-region information term")
    source = source if source is not None else f"{render_form(form)} >= 0"
    notes: List[str] = []

    joint: Optional[JointTrace] = None
    working0 = iform
    mode = "open"
    if use_joint and balance is BalanceClass.SUPERBALANCED and n >= 5 and not iform.is_zero:
        region, reduced = _choose_elimination(iform, n)
        if reduced.is_zero:
            notes.append(f"joint form vanishes when region {region} is eliminated "
                         "(identity under purity); proving the original form directly")
        else:
            joint = JointTrace(region, reduced)
            working0 = reduced
            mode = "closed"

    meta = {"seed": seed, "budget": budget, "samples": samples, "version": _version,
            "regulator": 1e-4, "tolerance": 1e-9}

    if working0.is_zero:
        return ProofCertificate(source, n, balance, iform, sform, joint, {}, working0,
                                mode, [], PROVED, notes + ["form is identically zero"], meta)

    working, relabel = _compact(working0)
    m = working.n
    working_balance = classify_balance(working)
    space = (DiagramSpace.closed_circle(range(1, m + 1)) if mode == "closed"
             else DiagramSpace.open_circle(m))
    configs = enumerate_ccc(m)
    working_s = i_to_s(working)

    entries: List[DiagramEntry] = []
    seen: Dict[object, int] = {}
    for idx, ccc in enumerate(configs):
        red, blue = expand_inequality(working_s, ccc.configuration())
        if working_balance is BalanceClass.SUPERBALANCED:
            bad = _gap_chords_present(red, blue, m, mode)
            if bad:
                raise InternalConsistencyError(
                    f"superbalanced expansion grew gap chords {bad} in {ccc.name}; "
                    "this contradicts gaplessness of CCC configurations")
        diagram = CircularDiagram.from_chords(space, red, blue)
        key = diagram.state_key()
        gens = tuple(s.name for s in ccc.generators)
        implied = tuple(s.name for s in ccc.implied)
        if key in seen:
            entries.append(DiagramEntry(idx, gens, implied, diagram, duplicate_of=seen[key]))
            continue
        seen[key] = idx
        result = clean_gap_prove(diagram, budget=budget)
        entries.append(DiagramEntry(idx, gens, implied, diagram, result=result))

    all_proved = all(e.result.proved for e in entries if e.result is not None)
    verdict = PROVED if all_proved else NOT_PROVED
    return ProofCertificate(source, n, balance, iform, sform, joint, relabel, working,
                            mode, entries, verdict, notes, meta)


def prove_without_joint(form: EntropyForm, n: int | None = None, **kwargs) -> ProofCertificate:
    """Same pipeline with the joint-form reduction skipped."""
    return prove(form, n, use_joint=False, **kwargs)


def _step_seed(base: int, entry_index: int, step_index: int) -> int:
    return (base * 1000003 + entry_index * 8191 + step_index * 131 + 17) & 0x7FFFFFFF


def verify_certificate(cert: ProofCertificate, collect: Optional[List[str]] = None) -> bool:
    """Independent replay of a certificate; True iff every check passes.

    Re-derives the joint form and expansions, re-checks each exchange's
    crossing witness and multiset bookkeeping, and re-runs the numeric oracle
    on every exchange step and every proved diagram.  Failures are appended
    to ``collect`` when given.
    """
    issues: List[str] = [] if collect is None else collect

    def fail(msg: str) -> None:
        issues.append(msg)

    if i_to_s(cert.form_i) != cert.form_s:
        fail("S-basis form does not match the I-basis form")
    if classify_balance(cert.form_i) is not cert.balance:
        fail("balance class mismatch")

    working0 = cert.form_i
    if cert.joint is not None:
        derived = eliminate_region(cert.form_i, cert.joint.eliminated_region, cert.n)
        if derived != cert.joint.joint_form:
            fail("joint form does not replay from the recorded elimination")
        working0 = cert.joint.joint_form

    if cert.working_form.is_zero:
        if not working0.is_zero and cert.verdict == PROVED and cert.entries:
            fail("zero working form with a non-trivial certificate body")
        return not issues

    compacted, relabel = _compact(working0)
    if relabel != cert.relabel or compacted != cert.working_form:
        fail("region relabelling does not replay")

    m = cert.working_form.n
    configs = enumerate_ccc(m)
    if len(configs) != len(cert.entries):
        fail(f"expected {len(configs)} CCC entries, certificate has {len(cert.entries)}")
        return False
    space = cert.space()
    working_s = i_to_s(cert.working_form)
    samples = int(cert.meta.get("samples", 1000))
    seed = int(cert.meta.get("seed", 0))
    regulator = float(cert.meta.get("regulator", 1e-4))
    tolerance = float(cert.meta.get("tolerance", 1e-9))

    states = {}
    for entry, ccc in zip(cert.entries, configs):
        gens = tuple(s.name for s in ccc.generators)
        if gens != entry.generators:
            fail(f"entry {entry.index}: generators {entry.generators} != {gens}")
            continue
        red, blue = expand_inequality(working_s, ccc.configuration())
        diagram = CircularDiagram.from_chords(space, red, blue)
        if diagram != entry.diagram:
            fail(f"entry {entry.index}: recorded diagram does not match the expansion")
            continue
        states[entry.index] = diagram.state_key()
        if entry.duplicate_of is not None:
            if states.get(entry.duplicate_of) != diagram.state_key():
                fail(f"entry {entry.index}: duplicate_of {entry.duplicate_of} has a different diagram")
            continue
        if entry.result is None:
            fail(f"entry {entry.index}: missing proof result")
            continue
        _verify_steps(entry, diagram, space.size, samples, seed, regulator, tolerance, fail)
        if entry.result.proved:
            verdictnum = numeric_oracle(diagram, samples=samples,
                                        seed=_step_seed(seed, entry.index, 0),
                                        regulator=regulator, tolerance=tolerance)
            if not verdictnum.ok:
                fail(f"entry {entry.index}: numeric oracle refutes a proved diagram "
                     f"(margin {verdictnum.margin:.3e})")

    if cert.verdict == PROVED:
        bad = [e.index for e in cert.entries if e.result is not None and not e.result.proved]
        if bad:
            fail(f"verdict is proved but entries {bad} are not")
    return not issues


def _verify_steps(entry: DiagramEntry, diagram: CircularDiagram, size: int,
                  samples: int, seed: int, regulator: float, tolerance: float, fail) -> None:
    red, blue = Counter(diagram.red), Counter(diagram.blue)
    for si, step in enumerate(entry.result.steps):
        if isinstance(step, ExchangeStep):
            a, b = step.removed
            if red[a] < 1 or red[b] < (2 if a == b else 1):
                fail(f"entry {entry.index} step {si}: removed chords not on the red side")
                return
            if not pairs_cross(a, b):
                fail(f"entry {entry.index} step {si}: removed chords do not cross")
                return
            if step.witness != tuple(sorted((*a, *b))):
                fail(f"entry {entry.index} step {si}: crossing witness mismatch")
                return
            options = pair_exchange(a, b)
            if tuple(sorted(step.inserted)) not in (tuple(sorted(o)) for o in options):
                fail(f"entry {entry.index} step {si}: inserted chords are not a re-pairing")
                return
            if pairs_cross(*step.inserted):
                fail(f"entry {entry.index} step {si}: inserted chords cross")
                return
            if not exchange_is_sound(step, size, samples=samples,
                                     seed=_step_seed(seed, entry.index, si + 1),
                                     regulator=regulator, tolerance=tolerance):
                fail(f"entry {entry.index} step {si}: exchange fails the numeric oracle")
                return
            red[a] -= 1
            red[b] -= 1
            for p in step.inserted:
                red[p] += 1
            red = Counter({p: c for p, c in red.items() if c > 0})
        elif isinstance(step, CancelStep):
            if red[step.chord] < step.count or blue[step.chord] < step.count:
                fail(f"entry {entry.index} step {si}: cancellation exceeds multiplicity")
                return
            red[step.chord] -= step.count
            blue[step.chord] -= step.count
            red = Counter({p: c for p, c in red.items() if c > 0})
            blue = Counter({p: c for p, c in blue.items() if c > 0})
        else:
            fail(f"entry {entry.index} step {si}: unsupported step {step!r}")
            return
    if entry.result.proved and (red or blue):
        fail(f"entry {entry.index}: replay does not empty the diagram "
             f"(left red={sum(red.values())}, blue={sum(blue.values())})")


def _iform(n: int, terms: Dict[Tuple[int, ...], int]) -> EntropyForm:
    return EntropyForm("I", {subsystem(k): v for k, v in terms.items()}, n)


#: The known inequalities exercised by the verification suite, written in the
#: superbalanced I-basis except for strong subadditivity.
KNOWN_INEQUALITIES: Dict[str, EntropyForm] = {
    "ssa": EntropyForm("S", {(1, 2): 1, (2, 3): 1, (1, 2, 3): -1, (2,): -1}, 3),
    "mmi": _iform(3, {(1, 2, 3): -1}),
    # the four-party strengthening of monogamy: I_{12(34)} <= 0
    "mmi4": _iform(4, {(1, 2, 3): -1, (1, 2, 4): -1, (1, 2, 3, 4): 1}),
    "five_1": _iform(5, {(1, 2, 4): -1, (1, 3, 4): -1, (1, 3, 5): -1, (2, 3, 5): -1,
                         (2, 4, 5): -1, (1, 2, 3, 4): 1, (1, 2, 3, 5): 1, (1, 2, 4, 5): 1,
                         (1, 3, 4, 5): 1, (2, 3, 4, 5): 1, (1, 2, 3, 4, 5): -1}),
    "five_2": _iform(5, {(1, 2, 4): -1, (1, 2, 5): -1, (1, 3, 5): -1, (2, 3, 4): -1,
                         (1, 2, 3, 4): 1, (1, 2, 3, 5): 1, (1, 2, 4, 5): 1}),
    "five_3": _iform(5, {(1, 2, 5): -1, (1, 3, 5): -1, (1, 4, 5): -1, (2, 3, 4): -1,
                         (1, 2, 3, 5): 1, (1, 2, 4, 5): 1, (1, 3, 4, 5): 1}),
    "five_4": _iform(5, {(1, 2, 3): -1, (1, 4, 5): -1, (2, 3, 4): -1, (2, 3, 5): -1,
                         (1, 2, 3, 4): 1, (1, 2, 3, 5): 1}),
    "five_5": _iform(5, {(1, 2, 3): -1, (1, 2, 5): -2, (1, 3, 4): -2, (1, 4, 5): -1,
                         (2, 3, 4): -1, (2, 3, 5): -1, (1, 2, 3, 4): 2, (1, 2, 3, 5): 2,
                         (1, 2, 4, 5): 1, (1, 3, 4, 5): 1}),
    "six_1": _iform(6, {(1, 2, 3): -1, (1, 2, 6): -1, (1, 5, 6): -1, (2, 4, 6): -1,
                        (1, 2, 3, 6): 1, (1, 2, 4, 6): 1, (1, 2, 5, 6): 1}),
    "six_2": _iform(6, {(1, 2, 3): -1, (1, 2, 5): -1, (1, 2, 6): -1, (3, 5, 6): -1,
                        (4, 5, 6): -1, (1, 2, 3, 6): 1, (1, 2, 5, 6): 1, (3, 4, 5, 6): 1}),
    "seven_1": _iform(7, {
        (1, 2, 3): -1, (1, 4, 5): -1, (1, 4, 7): -1, (1, 5, 6): -1, (2, 4, 5): -1,
        (2, 4, 7): -1, (2, 5, 6): -1, (3, 4, 5): -1, (3, 4, 7): -1, (3, 5, 6): -1,
        (1, 2, 4, 5): 1, (1, 2, 4, 7): 1, (1, 2, 5, 6): 1, (1, 3, 4, 5): 1,
        (1, 3, 4, 7): 1, (1, 3, 5, 6): 1, (1, 4, 5, 6): 1, (1, 4, 5, 7): 1,
        (2, 3, 4, 5): 1, (2, 3, 4, 7): 1, (2, 3, 5, 6): 1, (2, 4, 5, 6): 1,
        (2, 4, 5, 7): 1, (3, 4, 5, 6): 1, (3, 4, 5, 7): 1,
        (1, 2, 4, 5, 6): -1, (1, 2, 4, 5, 7): -1, (1, 3, 4, 5, 6): -1,
        (1, 3, 4, 5, 7): -1, (2, 3, 4, 5, 6): -1, (2, 3, 4, 5, 7): -1}),
}

#: Relabeling taking the seven-party joint form onto the third five-party
#: inequality (the unassigned regions 4 and 5 carry no terms).
SEVEN_TO_FIVE_RELABEL = {1: 2, 2: 3, 3: 4, 6: 1, 7: 5, 4: 6, 5: 7}


def known_suite(budget: int | None = None, seed: int = 0, samples: int = 1000,
                verify: bool = True) -> Dict[str, object]:
    """Prove the whole catalogue and cross-check the published reductions."""
    entries = []
    certificates: Dict[str, ProofCertificate] = {}
    for name, form in KNOWN_INEQUALITIES.items():
        t0 = time.time()
        cert = prove(form, budget=budget, seed=seed, samples=samples, source=name)
        elapsed = time.time() - t0
        verified = verify_certificate(cert) if verify else None
        certificates[name] = cert
        distinct = sum(1 for e in cert.entries if e.result is not None)
        entries.append({
            "name": name,
            "n": cert.n,
            "verdict": cert.verdict,
            "balance": cert.balance.value,
            "eliminated_region": cert.joint.eliminated_region if cert.joint else None,
            "joint_form": render_form(cert.joint.joint_form) if cert.joint else None,
            "regions": cert.working_form.n if not cert.working_form.is_zero else 0,
            "ccc_count": len(cert.entries),
            "distinct_diagrams": distinct,
            "exchanges": cert.exchange_total,
            "verified": verified,
            "seconds": elapsed,
        })

    q3j = eliminate_region(KNOWN_INEQUALITIES["five_3"], 5, 5)
    q4j = eliminate_region(KNOWN_INEQUALITIES["five_4"], 5, 5)
    q5j = eliminate_region(KNOWN_INEQUALITIES["five_5"], 5, 5)
    q7j = eliminate_region(KNOWN_INEQUALITIES["seven_1"], 5, 7)
    checks = {
        "five_3 joint is three-party monogamy": q3j == _iform(5, {(2, 3, 4): -1}),
        "five_5 joint equals five_4 joint": q5j == q4j,
        "seven_1 joint relabels onto five_3":
            apply_permutation(q7j, SEVEN_TO_FIVE_RELABEL) == KNOWN_INEQUALITIES["five_3"],
        "five_2 joint matches its four-party form":
            i_to_s(eliminate_region(KNOWN_INEQUALITIES["five_2"], 5, 5)) == EntropyForm(
                "S", {(1, 2, 3): 1, (1, 2, 4): 1, (3, 4): 1,
                      (1, 2): -1, (1, 2, 3, 4): -1, (3,): -1, (4,): -1}, 4),
    }
    ok = (all(e["verdict"] == PROVED for e in entries)
          and all(checks.values())
          and all(e["verified"] in (True, None) for e in entries))
    return {"entries": entries, "checks": checks, "all_proved": ok,
            "certificates": certificates}
