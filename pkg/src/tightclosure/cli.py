"""Session files, subcommand dispatch and deterministic reports.

A session file declares one presented ring and named ideals::

    # Fermat cubic
    ring { char: 5 ; vars: x(1) y(1) z(1) ; relations: x^3 + y^3 + z^3 ;
           flags: domain normal graded_reduced cm }
    ideal I  { gens: x, y }
    ideal M2 { gens: x^2, x*y, x*z, y^2, y*z, z^2 }

Whitespace is insignificant, ``#`` starts a comment, ``relations`` and
``flags`` are optional, weights default to 1.  Reports serialize to JSON
with sorted keys; two runs over the same inputs differ at most in the
``timing`` block.  Exit code 0 covers every computed verdict (including
OUT_EVIDENCE and UNDETERMINED); nonzero exits are reserved for errors.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from dataclasses import dataclass, field as dc_field

from . import __version__, closure
from .closure import (ClosureVerdict, QLevel, Witness, key_lemma_witness,
                      verify_witness)
from .idealops import (FLAG_NAMES, IdealHandle, PresentedRing, RingFlags,
                       bracket_power, colon, combine, intersect, is_subset)
from .polyfield import ParseError, Polynomial

SCHEMA_VERSION = 1


@dataclass
class Session:
    """One ring plus named ideals and polynomials, with level defaults."""

    ring: PresentedRing
    ideals: dict[str, IdealHandle] = dc_field(default_factory=dict)
    polynomials: dict[str, Polynomial] = dc_field(default_factory=dict)
    level: QLevel = QLevel()
    degree_cap: int = 4

    def ideal(self, name: str) -> IdealHandle:
        try:
            return self.ideals[name]
        except KeyError:
            raise ParseError(f"no ideal named {name!r} in the session") from None


# -- session text ------------------------------------------------------------------


class _Scanner:
    """Tokenizer for session files with line/column tracking."""

    PUNCT = set("{}();:,^*+-")

    def __init__(self, text: str):
        self.tokens: list[tuple[str, str, int, int]] = []
        for ln, line in enumerate(text.splitlines(), start=1):
            body = line.split("#", 1)[0]
            i = 0
            while i < len(body):
                ch = body[i]
                if ch.isspace():
                    i += 1
                    continue
                col = i + 1
                if ch.isdigit():
                    j = i
                    while j < len(body) and body[j].isdigit():
                        j += 1
                    self.tokens.append(("int", body[i:j], ln, col))
                    i = j
                elif ch.isalpha() or ch == "_":
                    j = i
                    while j < len(body) and (body[j].isalnum() or body[j] == "_"):
                        j += 1
                    self.tokens.append(("name", body[i:j], ln, col))
                    i = j
                elif ch in self.PUNCT:
                    self.tokens.append(("punct", ch, ln, col))
                    i += 1
                else:
                    raise ParseError(f"unexpected character {ch!r}", ln, col)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def next(self):
        tok = self.peek()
        if tok is None:
            last = self.tokens[-1] if self.tokens else (None, None, 1, 1)
            raise ParseError("unexpected end of session text", last[2], last[3])
        self.pos += 1
        return tok

    def expect(self, value: str):
        kind, val, ln, col = self.next()
        if val != value:
            raise ParseError(f"expected {value!r}, found {val!r}", ln, col)

    def collect_until(self, stops: set[str]) -> tuple[str, int, int]:
        """Re-serialize tokens into text until one of the stop punctuation."""
        parts = []
        start = self.peek()
        if start is None:
            raise ParseError("unexpected end of session text")
        while True:
            tok = self.peek()
            if tok is None or (tok[0] == "punct" and tok[1] in stops):
                break
            parts.append(self.next()[1])
        return " ".join(parts), start[2], start[3]


def parse_session(text: str) -> Session:
    """Parse session text into a validated :class:`Session`."""
    sc = _Scanner(text)
    ring: PresentedRing | None = None
    ideals: dict[str, IdealHandle] = {}
    while sc.peek() is not None:
        kind, val, ln, col = sc.next()
        if val == "ring":
            if ring is not None:
                raise ParseError("a session declares exactly one ring", ln, col)
            ring = _parse_ring_block(sc)
        elif val == "ideal":
            nk, name, nl, nc = sc.next()
            if nk != "name":
                raise ParseError("expected an ideal name", nl, nc)
            if name in ideals:
                raise ParseError(f"duplicate ideal name {name!r}", nl, nc)
            if ring is None:
                raise ParseError("declare the ring before any ideal", ln, col)
            ideals[name] = _parse_ideal_block(sc, ring, name)
        else:
            raise ParseError(f"expected 'ring' or 'ideal', found {val!r}", ln, col)
    if ring is None:
        raise ParseError("session declares no ring")
    return Session(ring=ring, ideals=ideals)


def _parse_ring_block(sc: _Scanner) -> PresentedRing:
    sc.expect("{")
    char = None
    names: list[str] = []
    weights: list[int] = []
    relations: list[str] = []
    flag_words: list[str] = []
    while True:
        tok = sc.peek()
        if tok is None:
            raise ParseError("unterminated ring block")
        if tok[1] == "}":
            sc.next()
            break
        if tok[1] == ";":
            sc.next()
            continue
        kind, key, ln, col = sc.next()
        sc.expect(":")
        if key == "char":
            tk, tv, tl, tc = sc.next()
            if tk != "int":
                raise ParseError("char expects an integer", tl, tc)
            char = int(tv)
        elif key == "vars":
            while True:
                tok = sc.peek()
                if tok is None or tok[1] in (";", "}"):
                    break
                vk, vname, vl, vc = sc.next()
                if vk != "name":
                    raise ParseError(f"expected a variable name, found {vname!r}", vl, vc)
                w = 1
                nxt = sc.peek()
                if nxt is not None and nxt[1] == "(":
                    sc.next()
                    wk, wv, wl, wc = sc.next()
                    if wk != "int":
                        raise ParseError("weight expects an integer", wl, wc)
                    w = int(wv)
                    sc.expect(")")
                names.append(vname)
                weights.append(w)
        elif key == "relations":
            while True:
                text, pl, pc = sc.collect_until({",", ";", "}"})
                if not text:
                    raise ParseError("empty relation", pl, pc)
                relations.append(text)
                nxt = sc.peek()
                if nxt is not None and nxt[1] == ",":
                    sc.next()
                    continue
                break
        elif key == "flags":
            while True:
                tok = sc.peek()
                if tok is None or tok[1] in (";", "}"):
                    break
                fk, fv, fl, fc = sc.next()
                if fv not in FLAG_NAMES:
                    raise ParseError(f"unknown flag {fv!r}", fl, fc)
                flag_words.append(fv)
        else:
            raise ParseError(f"unknown ring field {key!r}", ln, col)
    if char is None:
        raise ParseError("ring block needs 'char'")
    if not names:
        raise ParseError("ring block needs 'vars'")
    flags = RingFlags(**{nm: True for nm in flag_words})
    try:
        ring = PresentedRing.define(char, names, relations=relations,
                                    weights=weights, flags=flags)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    return ring


def _parse_ideal_block(sc: _Scanner, ring: PresentedRing, name: str) -> IdealHandle:
    sc.expect("{")
    gens: list[str] = []
    while True:
        tok = sc.peek()
        if tok is None:
            raise ParseError(f"unterminated ideal block {name!r}")
        if tok[1] == "}":
            sc.next()
            break
        if tok[1] == ";":
            sc.next()
            continue
        kind, key, ln, col = sc.next()
        sc.expect(":")
        if key != "gens":
            raise ParseError(f"unknown ideal field {key!r}", ln, col)
        while True:
            text, pl, pc = sc.collect_until({",", ";", "}"})
            if not text:
                raise ParseError("empty generator", pl, pc)
            gens.append(text)
            nxt = sc.peek()
            if nxt is not None and nxt[1] == ",":
                sc.next()
                continue
            break
    if not gens:
        raise ParseError(f"ideal {name!r} declares no generators")
    return IdealHandle(ring, gens)


def print_session(session: Session) -> str:
    """Canonical session text; parse(print(s)) reproduces s."""
    ring = session.ring
    amb = ring.ambient
    parts = [f"char: {ring.p}",
             "vars: " + " ".join(f"{nm}({w})"
                                 for nm, w in zip(amb.names, amb.weights))]
    if ring.relations:
        parts.append("relations: " + ", ".join(str(r) for r in ring.relations))
    asserted = ring.flags.asserted_names()
    if asserted:
        parts.append("flags: " + " ".join(asserted))
    lines = ["ring { " + " ; ".join(parts) + " }"]
    for name, handle in session.ideals.items():
        gens = ", ".join(str(g) for g in handle.gens)
        lines.append(f"ideal {name} {{ gens: {gens} }}")
    return "\n".join(lines) + "\n"


# -- report serialization --------------------------------------------------------------


def _jsonable(x):
    if isinstance(x, Polynomial):
        return str(x)
    if isinstance(x, IdealHandle):
        return [str(g) for g in x.gens]
    if isinstance(x, float) and math.isinf(x):
        return "infinity"
    if x is math.inf:
        return "infinity"
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def ring_summary(ring: PresentedRing) -> dict:
    return {
        "char": ring.p,
        "vars": [{"name": nm, "weight": w}
                 for nm, w in zip(ring.ambient.names, ring.ambient.weights)],
        "order": ring.ambient.order.kind,
        "relations": [str(r) for r in ring.relations],
        "flags": ring.flags.asserted_names(),
    }


def witness_to_dict(w: Witness | None) -> dict | None:
    if w is None:
        return None
    return {
        "c": str(w.c),
        "kind": w.kind,
        "checked_exponents": list(w.checked),
        "key_lemma": [[e, ok] for e, ok in w.key_lemma] if w.key_lemma else None,
    }


def verdict_to_dict(v: ClosureVerdict) -> dict:
    return {
        "kind": v.kind,
        "test": v.test,
        "reason": v.reason,
        "e_max": v.e_max,
        "witness": witness_to_dict(v.witness),
        "detail": _jsonable(v.detail),
    }


def make_report(command: str, ring: PresentedRing, inputs: dict, result: dict,
                started: float) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "engine": {"name": "tightclosure", "version": __version__},
        "command": command,
        "ring": ring_summary(ring),
        "inputs": _jsonable(inputs),
        "result": _jsonable(result),
        "timing": {"seconds": round(time.time() - started, 6)},
    }


def strip_timing(report):
    """Recursive copy with timing blocks removed (for byte comparisons)."""
    if isinstance(report, dict):
        return {k: strip_timing(v) for k, v in report.items() if k != "timing"}
    if isinstance(report, list):
        return [strip_timing(v) for v in report]
    return report


# -- witness replay ---------------------------------------------------------------------


def replay_report(report: dict, session: Session) -> bool:
    """Re-run the checks recorded in a star/special report.

    Returns True when the recorded verdict kind is reproduced from the
    report data alone (ring, ideal, element, level, witness).
    """
    ring = session.ring
    inputs = report["inputs"]
    result = report["result"]
    I = session.ideal(inputs["ideal"])
    f = ring.element(inputs["element"])
    level = QLevel(inputs["level"]["e0"], inputs["level"]["e_max"])
    test = result["test"]
    kind = result["kind"]
    detail = result.get("detail") or {}

    if kind == closure.PROVEN_IN:
        w = result["witness"]
        return verify_witness(f, I, Witness(ring.element(w["c"]), w["kind"],
                                            tuple(w["checked_exponents"])),
                              level, test)
    if kind == closure.IN_AT_LEVEL:
        w = result["witness"]
        witness = Witness(ring.element(w["c"]), w["kind"],
                          tuple(w["checked_exponents"]))
        if not verify_witness(f, I, witness, level, test):
            return False
        if w.get("key_lemma"):
            lemma = key_lemma_witness(f, I, witness.c, level,
                                      exponents=[e for e, _ in w["key_lemma"]])
            if [list(t) for t in lemma] != [list(t) for t in w["key_lemma"]]:
                return False
        return True
    if kind == closure.PROVEN_OUT:
        reason = result["reason"]
        if reason == "regular_flatness":
            if not ring.is_regular:
                return False
            if test == "star":
                return not I.contains(f)
            base = closure.closure_target(I, level, level.e0, "special")
            return not base.contains(f.frobenius(level.e0))
        if reason == "degree_bound":
            if not ring.flags.asserted("normal", "graded_reduced"):
                return False
            k = int(detail["k"])
            if I.madic_order() < k:
                return False
            if test == "star":
                window = combine(I, ring.filtration(k + 1), "sum")
                return not window.contains(f)
            return not ring.filtration(k + 1).contains(f)
        if reason == "trivial":
            return I.is_zero_ideal() and not ring.is_zero_element(f)
        return False
    if kind == closure.OUT_EVIDENCE:
        req = int(detail["required_e0"])
        chain = closure.colon_chain(f, I, level, test)
        return all(lv.contained_in_bracket(req) for lv in chain.levels)
    if kind == closure.UNDETERMINED:
        return True
    return False


# -- subcommand handlers -------------------------------------------------------------


def _level_from_args(ring: PresentedRing, args) -> QLevel:
    e_max = args.emax if args.emax is not None else 2
    q0 = getattr(args, "q0", None)
    if q0 is None:
        e0 = 0
    else:
        e0, q = 0, 1
        while q < q0:
            q *= ring.p
            e0 += 1
        if q != q0:
            raise ValueError(f"q0 = {q0} is not a power of the characteristic {ring.p}")
    return QLevel(e0, e_max)


def _cmd_gb(session, args, started):
    I = session.ideal(args.ideal)
    result = {
        "reduced_groebner_basis": [str(g) for g in I.basis()],
        "nonzero_in_quotient": [str(g) for g in I.reduced_gens()],
    }
    return make_report("gb", session.ring, {"ideal": args.ideal}, result, started)


def _cmd_member(session, args, started):
    I = session.ideal(args.ideal)
    f = session.ring.element(args.elem)
    result = {"member": I.contains(f), "normal_form": str(I.normal_form(f))}
    return make_report("member", session.ring,
                       {"ideal": args.ideal, "element": str(f)}, result, started)


def _cmd_bracket(session, args, started):
    I = session.ideal(args.ideal)
    B = bracket_power(I, args.e)
    result = {"generators": [str(g) for g in B.gens], "e": args.e}
    return make_report("bracket", session.ring,
                       {"ideal": args.ideal, "e": args.e}, result, started)


def _cmd_colon(session, args, started):
    I = session.ideal(args.ideal)
    f = session.ring.element(args.by)
    C = colon(I, f)
    result = {"generators": [str(g) for g in C.reduced_gens()]}
    return make_report("colon", session.ring,
                       {"ideal": args.ideal, "by": str(f)}, result, started)


def _cmd_intersect(session, args, started):
    I = session.ideal(args.ideal)
    K = session.ideal(args.with_)
    result = {"generators": [str(g) for g in intersect(I, K).reduced_gens()]}
    return make_report("intersect", session.ring,
                       {"ideal": args.ideal, "with": args.with_}, result, started)


def _cmd_order(session, args, started):
    f = session.ring.element(args.elem)
    result = {"order": _jsonable(session.ring.madic_order(f))}
    return make_report("order", session.ring, {"element": str(f)}, result, started)


def _cmd_star(session, args, started):
    ring = session.ring
    I = session.ideal(args.ideal)
    f = ring.element(args.elem)
    level = _level_from_args(ring, args)
    v = closure.star_member(f, I, level)
    inputs = {"ideal": args.ideal, "element": str(f),
              "level": {"e0": level.e0, "e_max": level.e_max}}
    return make_report("star", ring, inputs, verdict_to_dict(v), started)


def _cmd_special(session, args, started):
    ring = session.ring
    I = session.ideal(args.ideal)
    f = ring.element(args.elem)
    level = _level_from_args(ring, args)
    v = closure.special_star_member(f, I, level, strategy=args.strategy)
    inputs = {"ideal": args.ideal, "element": str(f), "strategy": args.strategy,
              "level": {"e0": level.e0, "e_max": level.e_max}}
    return make_report("special", ring, inputs, verdict_to_dict(v), started)


def _cmd_frobenius(session, args, started):
    ring = session.ring
    I = session.ideal(args.ideal)
    f = ring.element(args.elem)
    level = QLevel(0, args.emax if args.emax is not None else 2)
    e = closure.frobenius_member(f, I, level)
    result = {"found": e is not None, "e": e, "e_max": level.e_max}
    inputs = {"ideal": args.ideal, "element": str(f)}
    return make_report("frobenius", ring, inputs, result, started)


def _cmd_independent(session, args, started):
    ring = session.ring
    I = session.ideal(args.ideal)
    level = _level_from_args(ring, args)
    rep = closure.star_independent(ring, list(I.gens), level)
    result = {
        "aggregate": rep.aggregate,
        "minimality_warning": rep.minimality_warning,
        "per_generator": [{"generator": str(g), **verdict_to_dict(v)}
                          for g, v in zip(rep.generators, rep.verdicts)],
    }
    inputs = {"ideal": args.ideal,
              "level": {"e0": level.e0, "e_max": level.e_max}}
    return make_report("independent", ring, inputs, result, started)


def _cmd_reduce(session, args, started):
    ring = session.ring
    I = session.ideal(args.ideal)
    level = _level_from_args(ring, args)
    reduced = closure.star_reduce(ring, list(I.gens), level)
    result = {"generators": [str(g) for g in reduced]}
    inputs = {"ideal": args.ideal,
              "level": {"e0": level.e0, "e_max": level.e_max}}
    return make_report("reduce", ring, inputs, result, started)


def _cmd_closure(session, args, started):
    ring = session.ring
    I = session.ideal(args.ideal)
    level = _level_from_args(ring, args)
    cap = args.degree_cap if args.degree_cap is not None else session.degree_cap
    rep = closure.star_closure(I, cap, level)
    result = {
        "window_start": rep.window_start,
        "degree_cap": rep.degree_cap,
        "window_from_flags": rep.window_from_flags,
        "warning": rep.warning,
        "complete": rep.complete,
        "certified_empty": rep.certified_empty,
        "pool": [str(c) for c in rep.pool],
        "per_degree": [{
            "degree": ds.degree,
            "space_dim": ds.space_dim,
            "new_dim": ds.new_dim,
            "candidates": [str(c) for c in ds.candidates],
            "saturated": ds.saturated,
        } for ds in rep.per_degree],
        "additions_certified": [{"element": str(f), **verdict_to_dict(v)}
                                for f, v in rep.additions_certified],
        "additions_leveled": [{"element": str(f), **verdict_to_dict(v)}
                              for f, v in rep.additions_leveled],
        "additions": [str(f) for f in rep.additions()],
    }
    inputs = {"ideal": args.ideal, "degree_cap": cap,
              "level": {"e0": level.e0, "e_max": level.e_max}}
    return make_report("closure", ring, inputs, result, started)


def _cmd_sandwich(session, args, started):
    I = session.ideal(args.ideal)
    res = closure.sandwich_check(I)
    result = {"status": res.status, "k": res.k, "reason": res.reason}
    return make_report("sandwich", session.ring, {"ideal": args.ideal},
                       result, started)


def _cmd_reduce_graded(session, args, started):
    ring = session.ring
    I = session.ideal(args.ideal)
    level = _level_from_args(ring, args)
    rep = closure.graded_reduction(I, args.n, level, args.degree_cap)
    result = {
        "status": rep.status,
        "n": rep.n,
        "reason": rep.reason,
        "premises": _jsonable(rep.premises),
        "initial_ideal": [str(g) for g in rep.initial_ideal.gens]
        if rep.initial_ideal else None,
        "closing_remark": _jsonable(rep.closing_remark),
        "closure_certified_empty": rep.closure_report.certified_empty
        if rep.closure_report else None,
    }
    inputs = {"ideal": args.ideal, "n": args.n,
              "level": {"e0": level.e0, "e_max": level.e_max}}
    return make_report("reduce-graded", ring, inputs, result, started)


def _cmd_multiplicity(session, args, started):
    rep = closure.minimal_multiplicity(session.ring)
    result = {"status": rep.status, "e": rep.multiplicity, "edim": rep.edim,
              "dim": rep.dim, "caveat": rep.caveat, "reason": rep.reason}
    return make_report("multiplicity", session.ring, {}, result, started)


def _cmd_hms(session, args, started):
    ring = session.ring
    params = [p.strip() for p in args.params.split(",") if p.strip()]
    res = closure.hms_expected(params, ring)
    result = {
        "label": res.label,
        "hypotheses": res.hypotheses,
        "degree_sum": res.degree_sum,
        "expected_generators": [str(g) for g in res.expected.reduced_gens()],
    }
    return make_report("hms", ring, {"params": params}, result, started)


def _cmd_corpus(session, args, started):
    from . import corpus
    return corpus.corpus_run()


_HANDLERS = {
    "gb": _cmd_gb, "member": _cmd_member, "bracket": _cmd_bracket,
    "colon": _cmd_colon, "intersect": _cmd_intersect, "order": _cmd_order,
    "star": _cmd_star, "special": _cmd_special, "frobenius": _cmd_frobenius,
    "independent": _cmd_independent, "reduce": _cmd_reduce,
    "closure": _cmd_closure, "sandwich": _cmd_sandwich,
    "reduce-graded": _cmd_reduce_graded, "multiplicity": _cmd_multiplicity,
    "hms": _cmd_hms, "corpus": _cmd_corpus,
}


def build_parser() -> argparse.ArgumentParser:
    # global flags live in a parent with SUPPRESS defaults so they are
    # accepted both before and after the subcommand without the
    # subparser's defaults clobbering values parsed earlier
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-f", "--file", default=argparse.SUPPRESS,
                        help="session file ('-' for stdin)")
    common.add_argument("--json", action="store_true",
                        default=argparse.SUPPRESS,
                        help="emit the full JSON report")
    parser = argparse.ArgumentParser(
        prog="tightclosure",
        description="characteristic-p tight closure workbench",
        parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, *, ideal=False, elem=False, level=False, **extra):
        sp = sub.add_parser(name, parents=[common])
        if ideal:
            sp.add_argument("-i", "--ideal", required=True)
        if elem:
            sp.add_argument("--elem", required=True,
                            help="polynomial in the session grammar")
        if level:
            sp.add_argument("--q0", type=int, default=None,
                            help="base Frobenius power (a power of p)")
            sp.add_argument("--emax", type=int, default=None)
        return sp

    add("gb", ideal=True)
    add("member", ideal=True, elem=True)
    sp = add("bracket", ideal=True)
    sp.add_argument("-e", type=int, required=True)
    sp = add("colon", ideal=True)
    sp.add_argument("--by", required=True)
    sp = add("intersect", ideal=True)
    sp.add_argument("--with", dest="with_", required=True)
    add("order", elem=True)
    add("star", ideal=True, elem=True, level=True)
    sp = add("special", ideal=True, elem=True, level=True)
    sp.add_argument("--strategy", choices=("direct", "via_star"),
                    default="direct")
    sp = add("frobenius", ideal=True, elem=True)
    sp.add_argument("--emax", type=int, default=None)
    add("independent", ideal=True, level=True)
    add("reduce", ideal=True, level=True)
    sp = add("closure", ideal=True, level=True)
    sp.add_argument("--degree-cap", type=int, default=None)
    add("sandwich", ideal=True)
    sp = add("reduce-graded", ideal=True, level=True)
    sp.add_argument("-n", type=int, required=True)
    sp.add_argument("--degree-cap", type=int, default=None)
    add("multiplicity")
    sp = add("hms")
    sp.add_argument("--params", required=True,
                    help="comma-separated homogeneous parameters")
    add("corpus")
    return parser


def _load_session(args) -> Session | None:
    if args.command == "corpus":
        return None
    path = getattr(args, "file", None)
    if not path:
        raise ParseError("a session file is required (-f)")
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    return parse_session(text)


def _print_human(report: dict):
    result = report.get("result", report)
    print(f"command: {report.get('command', 'corpus')}")
    for key, value in result.items():
        if isinstance(value, (dict, list)):
            print(f"{key}: {json.dumps(value, sort_keys=True)}")
        else:
            print(f"{key}: {value}")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    started = time.time()
    try:
        session = _load_session(args)
        report = _HANDLERS[args.command](session, args, started)
    except (ParseError, ValueError, OverflowError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if getattr(args, "json", False):
        print(json.dumps(report, sort_keys=True, indent=2))
    else:
        _print_human(report)
    if args.command == "corpus" and not report["result"]["all_pass"]:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
