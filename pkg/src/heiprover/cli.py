"""Command-line interface: parsing, subcommands, certificates and figures.

Inequality grammar::

    statement := form ('>='|'<=') form
    form      := '0' | ['-'] term (('+'|'-') term)*
    term      := [integer '*'] ('S'|'I') '(' index (',' index)* ')'

Whitespace is ignored; mixed S and I terms are converted to one basis; the
statement is normalized to ``form >= 0``.  Region count is inferred from the
largest index unless ``--n`` is given.

Exit codes: 0 success/proved, 1 not proved (or oracle counterexample),
2 input error.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import re
import sys
from collections import Counter
from typing import Dict, List, Optional, Tuple

from . import __version__
from .algebra import (BalanceClass, EntropyForm, classify_balance, i_to_s,
                      render_form, s_to_i, to_basis)
from .compat import enumerate_ccc
from .cuts import (CutDag, count_allowed_configurations, enumerate_cuts,
                   interpretation_table, PUBLISHED_ALLOWED_COUNTS)
from .diagram import (CancelStep, CircularDiagram, DiagramSpace, ExchangeStep,
                      NOT_PROVED, PROVED, ProofResult, numeric_oracle)
from .prover import (DiagramEntry, JointTrace, ProofCertificate,
                     UnbalancedFormError, known_suite, prove, verify_certificate)
from .simplex import expand_inequality, parse_chord

SCHEMA_VERSION = 1

#: Shape of the certificate JSON document (informal schema, version 1).
CERTIFICATE_SCHEMA = {
    "schema_version": "int, currently 1",
    "input": "str, the statement that was proved",
    "n": "int, region count",
    "balance": "unbalanced | balanced | superbalanced",
    "basis_forms": {"I": "str", "S": "str"},
    "joint_trace": {"eliminated_region": "int", "joint_form": "str", "note": "str"},
    "relabel": "{original region -> working label}",
    "working": {"form": "str", "regions": "int", "mode": "open | closed"},
    "ccc": [{
        "index": "int",
        "generators": ["str"],
        "implied": ["str"],
        "diagram": {"red": ["chord"], "blue": ["chord"]},
        "duplicate_of": "int | null",
        "proof": {"status": "proved | not_proved", "exchanges": "int",
                  "reason": "str", "steps": [
                      {"type": "exchange", "removed": ["chord"],
                       "inserted": ["chord"], "witness": ["int"]},
                      {"type": "cancel", "chord": "chord", "count": "int"}]},
    }],
    "verdict": "proved | not_proved",
    "notes": ["str"],
    "meta": {"seed": "int", "budget": "int | null", "samples": "int",
             "version": "str", "regulator": "float", "tolerance": "float"},
}


class ParseError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


_TOKEN = re.compile(r"\s*(>=|<=|\+|-|\*|\(|\)|,|\d+|[SI])")


def _tokenize(text: str) -> List[Tuple[str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        tokens.append((m.group(1), m.start(1)))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> Optional[str]:
        return self.tokens[self.i][0] if self.i < len(self.tokens) else None

    def offset(self) -> int:
        return self.tokens[self.i][1] if self.i < len(self.tokens) else len(self.text)

    def take(self, expect: Optional[str] = None) -> str:
        if self.i >= len(self.tokens):
            raise ParseError(f"unexpected end of input (wanted {expect})", len(self.text))
        tok, off = self.tokens[self.i]
        if expect is not None and tok != expect:
            raise ParseError(f"expected {expect!r}, found {tok!r}", off)
        self.i += 1
        return tok

    def parse_statement(self) -> Tuple[Dict[str, Dict], str]:
        lhs = self.parse_form()
        op = self.peek()
        if op not in (">=", "<="):
            raise ParseError("expected '>=' or '<='", self.offset())
        self.take()
        rhs = self.parse_form()
        if self.peek() is not None:
            raise ParseError(f"trailing input {self.peek()!r}", self.offset())
        return ({"lhs": lhs, "rhs": rhs}, op)

    def parse_form(self) -> Dict[str, Dict]:
        terms: Dict[str, Dict] = {"S": {}, "I": {}}
        if self.peek() == "0":
            self.take()
            return terms
        sign = 1
        if self.peek() == "-":
            self.take()
            sign = -1
        self._term(terms, sign)
        while self.peek() in ("+", "-"):
            sign = 1 if self.take() == "+" else -1
            self._term(terms, sign)
        return terms

    def _term(self, terms: Dict[str, Dict], sign: int) -> None:
        coeff = 1
        tok = self.peek()
        if tok is not None and tok.isdigit():
            coeff = int(self.take())
            self.take("*")
        basis = self.peek()
        if basis not in ("S", "I"):
            raise ParseError("expected 'S' or 'I'", self.offset())
        self.take()
        self.take("(")
        indices = [int(self.take())] if self.peek() and self.peek().isdigit() else []
        if not indices:
            raise ParseError("expected a region index", self.offset())
        while self.peek() == ",":
            self.take()
            nxt = self.peek()
            if nxt is None or not nxt.isdigit():
                raise ParseError("expected a region index", self.offset())
            indices.append(int(self.take()))
        self.take(")")
        key = tuple(sorted(set(indices)))
        if len(key) != len(indices):
            raise ParseError(f"repeated region in {indices}", self.offset())
        terms[basis][key] = terms[basis].get(key, 0) + sign * coeff


def _combine(raw: Dict[str, Dict], negate: bool = False) -> Tuple[Dict, Dict]:
    mul = -1 if negate else 1
    s = {k: mul * v for k, v in raw["S"].items()}
    i = {k: mul * v for k, v in raw["I"].items()}
    return s, i


def parse(text: str, n: int | None = None) -> Tuple[EntropyForm, int]:
    """Parse a statement into a single form normalized to ``form >= 0``.

    Mixed S/I statements convert to the I-basis; pure-S statements stay in
    the S-basis.  Returns the form and the region count.
    """
    parsed, op = _Parser(text).parse_statement()
    flip = op == "<="
    ls, li = _combine(parsed["lhs"], negate=flip)
    rs, ri = _combine(parsed["rhs"], negate=not flip)
    sterms = dict(ls)
    for k, v in rs.items():
        sterms[k] = sterms.get(k, 0) + v
    iterms = dict(li)
    for k, v in ri.items():
        iterms[k] = iterms.get(k, 0) + v
    top = max([k[-1] for k in list(sterms) + list(iterms)], default=1)
    n = n or top
    if top > n:
        raise ParseError(f"index {top} exceeds region count {n}", 0)
    sform = EntropyForm("S", sterms, n)
    iform = EntropyForm("I", iterms, n)
    if iform.is_zero:
        return sform, n
    if sform.is_zero:
        return iform, n
    return s_to_i(sform) + iform, n


def parse_form(text: str, n: int | None = None) -> EntropyForm:
    """Parse a bare form (no comparison operator)."""
    form, _ = parse(f"{text} >= 0", n)
    return form


def render_statement(form: EntropyForm) -> str:
    return f"{render_form(form)} >= 0"


# ---------------------------------------------------------------------------
# certificate serialization

def certificate_to_dict(cert: ProofCertificate) -> Dict:
    space = cert.space() if not cert.working_form.is_zero else None

    def name(pair):
        return space.pair_name(pair)

    def steps_json(result: ProofResult) -> List[Dict]:
        out = []
        for step in result.steps:
            if isinstance(step, ExchangeStep):
                out.append({"type": "exchange",
                            "removed": [name(p) for p in step.removed],
                            "inserted": [name(p) for p in step.inserted],
                            "witness": list(step.witness)})
            elif isinstance(step, CancelStep):
                out.append({"type": "cancel", "chord": name(step.chord),
                            "count": step.count})
        return out

    ccc = []
    for e in cert.entries:
        red, blue = e.diagram.chord_names()
        item = {"index": e.index, "generators": list(e.generators),
                "implied": list(e.implied),
                "diagram": {"red": red, "blue": blue},
                "duplicate_of": e.duplicate_of}
        if e.result is not None:
            item["proof"] = {"status": e.result.status, "exchanges": e.result.exchanges,
                             "reason": e.result.reason, "steps": steps_json(e.result)}
        ccc.append(item)
    return {
        "schema_version": SCHEMA_VERSION,
        "input": cert.source,
        "n": cert.n,
        "balance": cert.balance.value,
        "basis_forms": {"I": render_form(cert.form_i), "S": render_form(cert.form_s)},
        "joint_trace": ({"eliminated_region": cert.joint.eliminated_region,
                         "joint_form": render_form(cert.joint.joint_form),
                         "note": cert.joint.note} if cert.joint else None),
        "relabel": {str(k): v for k, v in cert.relabel.items()},
        "working": {"form": render_form(cert.working_form),
                    "regions": cert.working_form.n if not cert.working_form.is_zero else 0,
                    "mode": cert.mode},
        "ccc": ccc,
        "verdict": cert.verdict,
        "notes": list(cert.notes),
        "meta": dict(cert.meta),
    }


def certificate_from_dict(doc: Dict) -> ProofCertificate:
    if doc.get("schema_version") != SCHEMA_VERSION:
        raise ValueError(f"unsupported certificate schema {doc.get('schema_version')!r}")
    n = doc["n"]
    form_i = parse_form(doc["basis_forms"]["I"], n)
    form_s = parse_form(doc["basis_forms"]["S"], n)
    joint = None
    if doc.get("joint_trace"):
        jt = doc["joint_trace"]
        joint = JointTrace(jt["eliminated_region"],
                           parse_form(jt["joint_form"], n), jt.get("note", ""))
    relabel = {int(k): v for k, v in doc.get("relabel", {}).items()}
    m = doc["working"]["regions"]
    working = parse_form(doc["working"]["form"], m or None)
    if not working.is_zero:
        working = working.with_n(m)
    mode = doc["working"]["mode"]
    space = (DiagramSpace.closed_circle(range(1, m + 1)) if mode == "closed"
             else DiagramSpace.open_circle(m)) if m else None

    def chord_pair(text):
        return space.chord_pair(parse_chord(text))

    entries = []
    for item in doc["ccc"]:
        red = Counter(chord_pair(c) for c in item["diagram"]["red"])
        blue = Counter(chord_pair(c) for c in item["diagram"]["blue"])
        diagram = CircularDiagram(space, red, blue)
        result = None
        if "proof" in item:
            steps = []
            for s in item["proof"]["steps"]:
                if s["type"] == "exchange":
                    removed = tuple(chord_pair(c) for c in s["removed"])
                    inserted = tuple(chord_pair(c) for c in s["inserted"])
                    steps.append(ExchangeStep(removed, inserted, tuple(s["witness"])))
                elif s["type"] == "cancel":
                    steps.append(CancelStep(chord_pair(s["chord"]), s["count"]))
                else:
                    raise ValueError(f"unknown step type {s['type']!r}")
            result = ProofResult(item["proof"]["status"], steps,
                                 exchanges=item["proof"]["exchanges"],
                                 reason=item["proof"].get("reason", ""))
        entries.append(DiagramEntry(item["index"], tuple(item["generators"]),
                                    tuple(item["implied"]), diagram,
                                    duplicate_of=item.get("duplicate_of"),
                                    result=result))
    return ProofCertificate(
        source=doc["input"], n=n, balance=BalanceClass(doc["balance"]),
        form_i=form_i, form_s=form_s, joint=joint, relabel=relabel,
        working_form=working, mode=mode, entries=entries,
        verdict=doc["verdict"], notes=list(doc.get("notes", [])),
        meta=dict(doc.get("meta", {})))


def validate_certificate_dict(doc: Dict) -> None:
    """Structural check of a certificate document; raises on malformation."""
    required = ["schema_version", "input", "n", "balance", "basis_forms",
                "relabel", "working", "ccc", "verdict", "meta"]
    for key in required:
        if key not in doc:
            raise ValueError(f"certificate missing key {key!r}")
    if doc["schema_version"] != SCHEMA_VERSION:
        raise ValueError("unsupported schema version")
    if doc["verdict"] not in (PROVED, NOT_PROVED):
        raise ValueError(f"bad verdict {doc['verdict']!r}")
    for item in doc["ccc"]:
        for key in ("index", "generators", "diagram"):
            if key not in item:
                raise ValueError(f"ccc entry missing {key!r}")
        if item.get("duplicate_of") is None and "proof" not in item:
            raise ValueError(f"ccc entry {item['index']} lacks both proof and duplicate_of")


# ---------------------------------------------------------------------------
# figures

def diagram_to_dot(diagram: CircularDiagram, label: str = "") -> str:
    space = diagram.space
    lines = ["graph diagram {", "  layout=neato;", "  node [shape=point, width=0.08];"]
    if label:
        lines.append(f'  label="{label}";')
    size = space.size
    for p in range(size):
        angle = 2.0 * math.pi * p / size
        x, y = 2.0 * math.cos(angle), 2.0 * math.sin(angle)
        name = _point_label(space, p)
        lines.append(f'  p{p} [pos="{x:.4f},{y:.4f}!", xlabel="{name}"];')
    for side, color in ((diagram.red, "red"), (diagram.blue, "blue")):
        for (a, b), mult in sorted(side.items()):
            for k in range(mult):
                lines.append(f'  p{a} -- p{b} [color={color}];')
    lines.append("}")
    return "\n".join(lines)


def _point_label(space: DiagramSpace, p: int) -> str:
    if space.mode == "open":
        region = space.regions[p // 2]
        return f"{'L' if p % 2 == 0 else 'R'}{region}"
    return f"V{p}"


def diagram_to_svg(diagram: CircularDiagram, label: str = "") -> str:
    space = diagram.space
    size = space.size
    cx = cy = 170.0
    radius = 130.0
    pts = []
    for p in range(size):
        angle = 2.0 * math.pi * p / size - math.pi / 2
        pts.append((cx + radius * math.cos(angle), cy + radius * math.sin(angle)))
    parts = ['<svg xmlns="http://www.w3.org/2000/svg" width="340" height="360">',
             f'<circle cx="{cx}" cy="{cy}" r="{radius}" fill="none" stroke="#bbb"/>']
    for side, color, dash in ((diagram.red, "#c22", ""), (diagram.blue, "#22c", ' stroke-dasharray="6,4"')):
        for (a, b), mult in sorted(side.items()):
            for k in range(mult):
                off = 2.5 * k
                parts.append(f'<line x1="{pts[a][0]+off:.1f}" y1="{pts[a][1]+off:.1f}" '
                             f'x2="{pts[b][0]+off:.1f}" y2="{pts[b][1]+off:.1f}" '
                             f'stroke="{color}" stroke-width="1.6"{dash}/>')
    for p, (x, y) in enumerate(pts):
        lx = cx + (radius + 16) * math.cos(2.0 * math.pi * p / size - math.pi / 2)
        ly = cy + (radius + 16) * math.sin(2.0 * math.pi * p / size - math.pi / 2)
        parts.append(f'<circle cx="{x:.1f}" cy="{y:.1f}" r="3" fill="#333"/>')
        parts.append(f'<text x="{lx:.1f}" y="{ly:.1f}" font-size="11" '
                     f'text-anchor="middle">{_point_label(space, p)}</text>')
    if label:
        parts.append(f'<text x="{cx}" y="352" font-size="12" text-anchor="middle">{label}</text>')
    parts.append("</svg>")
    return "\n".join(parts)


# ---------------------------------------------------------------------------
# subcommands

def _cmd_convert(args) -> int:
    form, n = parse(args.inequality, args.n)
    target = args.to or ("I" if form.basis == "S" else "S")
    print(render_statement(to_basis(form, target)))
    return 0


def _cmd_balance(args) -> int:
    form, _ = parse(args.inequality, args.n)
    print(classify_balance(form).value)
    return 0


def _cmd_ccc(args) -> int:
    configs = enumerate_ccc(args.n)
    print(f"{len(configs)} CCC configuration(s) for n={args.n}")
    for i, c in enumerate(configs):
        gens = " ".join(s.name for s in c.generators) or "(nothing disconnected)"
        implied = " ".join(s.name for s in c.implied)
        arrow = f"  =>  {implied}" if implied else ""
        print(f"  [{i}] {gens}{arrow}")
    return 0


def _cmd_cuts(args) -> int:
    dag = CutDag(args.n)
    hist = dag.level_histogram()
    print(f"{len(dag.nodes)} cuts for n={args.n}; by level: "
          + ", ".join(f"{k}: {hist[k]}" for k in sorted(hist)))
    if args.verbose:
        for c in dag.nodes:
            print(f"  level {c.level}: {c.name}")
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(dag.to_dot() + "\n")
        print(f"wrote {args.dot}")
    return 0


def _cmd_count_configs(args) -> int:
    if args.interpretations:
        table = interpretation_table(args.n)
        width = max(len(k) for k in table)
        for key, value in table.items():
            print(f"{key:<{width}}  {value}")
        return 0
    count = count_allowed_configurations(args.n)
    print(count)
    expected = PUBLISHED_ALLOWED_COUNTS.get(args.n)
    if expected is not None and count != expected:
        print(f"warning: expected {expected} for n={args.n}", file=sys.stderr)
        return 1
    return 0


def _cmd_prove(args) -> int:
    form, n = parse(args.inequality, args.n)
    try:
        cert = prove(form, n, use_joint=not args.no_joint, budget=args.budget,
                     seed=args.seed, samples=args.samples, source=args.inequality)
    except UnbalancedFormError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _print_certificate(cert)
    if args.cert:
        with open(args.cert, "w") as fh:
            json.dump(certificate_to_dict(cert), fh, indent=2, sort_keys=True)
            fh.write("\n")
        print(f"certificate written to {args.cert}")
    if args.render:
        os.makedirs(args.render, exist_ok=True)
        for e in cert.entries:
            if e.result is None:
                continue
            pathname = os.path.join(args.render, f"ccc_{e.index:02d}.svg")
            with open(pathname, "w") as fh:
                fh.write(diagram_to_svg(e.diagram, label=" ".join(e.generators)) + "\n")
        print(f"diagrams rendered to {args.render}")
    return 0 if cert.proved else 1


def _print_certificate(cert: ProofCertificate) -> None:
    print(f"input: {cert.source}")
    print(f"balance: {cert.balance.value}")
    if cert.joint:
        print(f"joint form (region {cert.joint.eliminated_region} eliminated): "
              f"{render_form(cert.joint.joint_form)}")
    for note in cert.notes:
        print(f"note: {note}")
    for e in cert.entries:
        gens = " ".join(e.generators) or "(fully connected)"
        if e.result is None:
            print(f"  ccc[{e.index}] {gens}: same diagram as ccc[{e.duplicate_of}]")
        else:
            red, blue = e.diagram.chord_names()
            print(f"  ccc[{e.index}] {gens}: {'+'.join(red) or '0'} >= "
                  f"{'+'.join(blue) or '0'} -> {e.result.status}"
                  f" ({e.result.exchanges} exchanges)")
    print(f"verdict: {cert.verdict}")


def _cmd_verify(args) -> int:
    with open(args.cert) as fh:
        doc = json.load(fh)
    validate_certificate_dict(doc)
    cert = certificate_from_dict(doc)
    issues: List[str] = []
    ok = verify_certificate(cert, collect=issues)
    for issue in issues:
        print(f"FAIL: {issue}")
    print("certificate OK" if ok else "certificate INVALID")
    return 0 if ok else 1


def _cmd_oracle(args) -> int:
    form, n = parse(args.inequality, args.n)
    sform = to_basis(form, "S")
    configs = enumerate_ccc(n)
    if not 0 <= args.config < len(configs):
        print(f"error: config index out of range 0..{len(configs)-1}", file=sys.stderr)
        return 2
    ccc = configs[args.config]
    red, blue = expand_inequality(sform, ccc.configuration())
    diagram = CircularDiagram.from_chords(DiagramSpace.open_circle(n), red, blue)
    verdict = numeric_oracle(diagram, samples=args.samples, seed=args.seed)
    red_names, blue_names = diagram.chord_names()
    print(f"configuration [{args.config}]: {' '.join(s.name for s in ccc.generators) or 'fully connected'}")
    print(f"diagram: {'+'.join(red_names) or '0'} >= {'+'.join(blue_names) or '0'}")
    if verdict.ok:
        print(f"no counterexample in {verdict.samples} samples (worst margin {verdict.margin:.3e})")
        return 0
    print(f"counterexample found (margin {verdict.margin:.3e}):")
    print("  angles: " + ", ".join(f"{a:.6f}" for a in verdict.counterexample))
    return 1


def _cmd_suite(args) -> int:
    report = known_suite(budget=args.budget, seed=args.seed, samples=args.samples)
    rows = report["entries"]
    print(f"{'name':<10} {'n':>2} {'verdict':<11} {'joint':<34} "
          f"{'ccc':>3} {'uniq':>4} {'xchg':>4} {'ok':>3} {'sec':>6}")
    for r in rows:
        joint = r["joint_form"] or "-"
        if len(joint) > 33:
            joint = joint[:30] + "..."
        print(f"{r['name']:<10} {r['n']:>2} {r['verdict']:<11} {joint:<34} "
              f"{r['ccc_count']:>3} {r['distinct_diagrams']:>4} {r['exchanges']:>4} "
              f"{'y' if r['verified'] else 'n':>3} {r['seconds']:>6.2f}")
    for name, ok in report["checks"].items():
        print(f"check: {name}: {'pass' if ok else 'FAIL'}")
    if args.json:
        doc = {"entries": rows, "checks": report["checks"],
               "all_proved": report["all_proved"]}
        with open(args.json, "w") as fh:
            json.dump(doc, fh, indent=2, sort_keys=True)
            fh.write("\n")
    print("suite:", "all proved" if report["all_proved"] else "FAILURES")
    return 0 if report["all_proved"] else 1


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="heiprover",
                                 description="prover for holographic entropy inequalities")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    def add_ineq(p):
        p.add_argument("inequality", help="statement like 'S(1,2)+S(2,3) >= S(1,2,3)+S(2)'")
        p.add_argument("--n", type=int, default=None, help="region count (default: max index)")

    p = sub.add_parser("convert", help="convert between the S and I bases")
    add_ineq(p)
    p.add_argument("--to", choices=("S", "I"), default=None)
    p.set_defaults(func=_cmd_convert)

    p = sub.add_parser("balance", help="classify balance")
    add_ineq(p)
    p.set_defaults(func=_cmd_balance)

    p = sub.add_parser("ccc", help="list CCC configurations")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_ccc)

    p = sub.add_parser("cuts", help="enumerate cuts and their DAG")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--dot", default=None, help="write the DAG in DOT format")
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(func=_cmd_cuts)

    p = sub.add_parser("count-configs", help="count allowed cut configurations")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--interpretations", action="store_true",
                   help="print the candidate-interpretation table")
    p.set_defaults(func=_cmd_count_configs)

    p = sub.add_parser("prove", help="prove an inequality over all configurations")
    add_ineq(p)
    p.add_argument("--no-joint", action="store_true", help="skip the joint-form reduction")
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--cert", default=None, help="write the JSON certificate here")
    p.add_argument("--render", default=None, help="write diagram SVGs into this directory")
    p.set_defaults(func=_cmd_prove)

    p = sub.add_parser("verify", help="replay and check a JSON certificate")
    p.add_argument("--cert", required=True)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("oracle", help="numeric sampling check of one configuration")
    add_ineq(p)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--config", type=int, default=0, help="CCC configuration index")
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("suite", help="prove the catalogue of known inequalities")
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--json", default=None, help="write the report as JSON")
    p.set_defaults(func=_cmd_suite)
    return ap


def main(argv: Optional[List[str]] = None) -> int:
    ap = make_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
