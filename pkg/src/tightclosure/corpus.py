"""Bundled literature corpus and the aggregate fixture runner.

The corpus ships six presented rings (two regular ambients, the Fermat
cubic cone at p = 2 and 5, the quadric cone at p = 3 and 5) with 13
named ideal fixtures.  :func:`corpus_run` executes the fixture
expectations and the invariant suites over all of them and aggregates
one deterministic report; any breach flips ``all_pass``.
"""

from __future__ import annotations

import json
import time
from importlib import resources

from . import closure
from .cli import (Session, make_report, parse_session, replay_report,
                  strip_timing, verdict_to_dict)
from .closure import QLevel
from .idealops import IdealHandle, bracket_power, combine, is_subset
from .polyfield import Polynomial

LEVEL = QLevel(0, 2)

SESSION_FILES = ("regular_f5", "regular_f2", "fermat5", "fermat2",
                 "quadric5", "quadric3")

# fixtures whose generators are *-independent (verified by the runner);
# quadric M2 is excluded: x*y and z^2 coincide in that ring
INDEPENDENT = {
    ("regular_f5", "M"), ("regular_f5", "I2"), ("regular_f5", "M2"),
    ("regular_f2", "M"), ("regular_f2", "IX"),
    ("fermat5", "I"), ("fermat2", "I"),
    ("quadric5", "I"), ("quadric3", "I"),
    ("fermat5", "M"), ("fermat5", "M2"),
}


def load_bundled_sessions() -> dict[str, Session]:
    out = {}
    base = resources.files("tightclosure").joinpath("corpus_data")
    for name in SESSION_FILES:
        text = base.joinpath(f"{name}.session").read_text(encoding="utf-8")
        out[name] = parse_session(text)
    return out


def _nonzero_combos(ring, gens: list[Polynomial], cap: int = 40) -> list[Polynomial]:
    """Deterministic spanning sample of F_p-combinations of the generators."""
    p = ring.p
    n = len(gens)
    combos: list[Polynomial] = []
    if p ** n - 1 <= cap:
        coeff_sets = []

        def rec(prefix):
            if len(prefix) == n:
                if any(prefix):
                    coeff_sets.append(tuple(prefix))
                return
            for a in range(p):
                rec(prefix + [a])

        rec([])
        for coeffs in coeff_sets:
            f = ring.ambient.zero()
            for a, g in zip(coeffs, gens):
                if a:
                    f = f + g.scale(a)
            combos.append(f)
    else:
        combos.extend(gens)
        for i in range(n):
            for j in range(i + 1, n):
                combos.append(gens[i] + gens[j])
        total = ring.ambient.zero()
        for g in gens:
            total = total + g
        combos.append(total)
    return combos[:cap]


def _spanning_outside_mI(ring, I: IdealHandle) -> list[Polynomial]:
    """Elements of I spanning I modulo mI, plus one perturbed representative."""
    mI = combine(ring.maximal_ideal().handle(), I, "product")
    sample = [f for f in _nonzero_combos(ring, list(I.gens))
              if not mI.contains(f) and not ring.is_zero_element(f)]
    if sample and mI.gens:
        sample.append(sample[0] + mI.gens[0])
    return [f for f in sample if not mI.contains(f)]


def corpus_run() -> dict:
    """Execute the corpus fixtures and invariant suites; aggregate a report."""
    started = time.time()
    sessions = load_bundled_sessions()
    checks: list[dict] = []

    def check(name: str, ok: bool, note: str = ""):
        checks.append({"name": name, "pass": bool(ok), "note": note})

    # --- Fermat cubic p = 5 fixtures -------------------------------------------
    fermat = sessions["fermat5"]
    Fring = fermat.ring
    I = fermat.ideal("I")

    v = closure.star_member("z^2", I, LEVEL)
    check("fermat5.star.z2.in_at_level",
          v.kind == closure.IN_AT_LEVEL and v.e_max == 2,
          f"kind={v.kind}")
    check("fermat5.star.z2.witness_degree",
          v.witness is not None and v.witness.c.degree() <= 3,
          f"c={v.witness.c if v.witness else None}")
    check("fermat5.star.z2.witness_replays",
          v.witness is not None
          and closure.verify_witness(Fring.element("z^2"), I, v.witness,
                                     LEVEL, "star"))

    vz = closure.star_member("z", I, LEVEL)
    check("fermat5.star.z.proven_out_degree_bound",
          vz.kind == closure.PROVEN_OUT and vz.reason == "degree_bound",
          f"kind={vz.kind} reason={vz.reason}")

    e_f = closure.frobenius_member("z^2", I, LEVEL)
    check("fermat5.frobenius.z2.implies_star_c1",
          e_f is not None and v.is_in and v.witness.c.is_constant(),
          f"frobenius at e={e_f}")

    rep = closure.star_closure(I, 3, LEVEL)
    check("fermat5.closure.adds_exactly_z2",
          [str(f) for f in rep.additions()] == ["z^2"],
          f"additions={[str(f) for f in rep.additions()]}")

    hms = closure.hms_expected(["x", "y"], Fring)
    check("fermat5.hms.D2_xyz2",
          hms.degree_sum == 2
          and hms.expected == Fring.ideal(["x", "y", "z^2"]))

    for nm in ("M2", "IZ2"):
        s = closure.sandwich_check(fermat.ideal(nm))
        check(f"fermat5.sandwich.{nm}",
              s.status == "TightlyClosed" and s.k == 1,
              f"status={s.status} k={s.k}")

    mult = closure.minimal_multiplicity(Fring)
    check("fermat5.multiplicity.false_e3",
          mult.status == "False" and mult.multiplicity == 3
          and mult.edim == 3 and mult.dim == 2)

    # --- quadric cone p = 5 fixtures -------------------------------------------
    quad = sessions["quadric5"]
    Qring = quad.ring
    QI = quad.ideal("I")
    vq = closure.star_member("z", QI, LEVEL)
    check("quadric5.star.z.proven_out_degree_bound",
          vq.kind == closure.PROVEN_OUT and vq.reason == "degree_bound")
    repq = closure.star_closure(QI, 3, LEVEL)
    check("quadric5.closure.adds_nothing", not repq.additions(),
          f"certified_empty={repq.certified_empty}")
    multq = closure.minimal_multiplicity(Qring)
    check("quadric5.multiplicity.f_rational",
          multq.status == "FRational" and multq.multiplicity == 2
          and multq.edim == 3 and multq.dim == 2)

    # --- graded reduction fixture ------------------------------------------------
    reg = sessions["regular_f5"]
    g = closure.graded_reduction(reg.ideal("P33"), 2, LEVEL)
    check("regular_f5.P33.graded_reduction_tightly_closed",
          g.status == "TightlyClosed"
          and g.premises == {"I_in_F_n": True, "F_n2_in_I": True}
          and g.initial_ideal == reg.ring.maximal_ideal().power(2),
          f"status={g.status}")

    # --- invariant suites over every fixture --------------------------------------
    for sname, session in sessions.items():
        ring = session.ring
        m = ring.maximal_ideal()
        for iname, handle in session.ideals.items():
            tag = f"{sname}.{iname}"

            # special tight closure contains m*I: every generator comes
            # back PROVEN_IN with multiplier 1 at base level 0
            mI = combine(m.handle(), handle, "product")
            ok = True
            for gen in mI.gens:
                sv = closure.special_star_member(gen, handle, LEVEL)
                if not (sv.kind == closure.PROVEN_IN
                        and sv.witness is not None
                        and sv.witness.c.is_constant()):
                    ok = False
                    break
            check(f"{tag}.mI_proven_in_special", ok)

            # structural degree guard: nothing below the window may get an
            # In-verdict once the flags are asserted
            if ring.flags.asserted("normal", "graded_reduced"):
                k = handle.madic_order()
                if k != float("inf") and k >= 1:
                    window = combine(handle, ring.filtration(int(k) + 1), "sum")
                    guard_ok = True
                    probes = []
                    for d in range(1, int(k) + 1):
                        probes.extend(ring.ambient.monomial(mm)
                                      for mm in ring.degree_piece(d))
                    for f in probes:
                        if window.contains(f):
                            continue
                        sv = closure.star_member(f, handle, LEVEL)
                        if sv.is_in:
                            guard_ok = False
                            break
                    check(f"{tag}.degree_window_guard", guard_ok)

            # *-independent fixtures: verdict plus the I^{*sp} cap m*I
            if (sname, iname) in INDEPENDENT:
                rep_ind = closure.star_independent(ring, list(handle.gens), LEVEL)
                check(f"{tag}.star_independent",
                      rep_ind.aggregate == "Independent",
                      f"aggregate={rep_ind.aggregate}")
                bad = None
                for f in _spanning_outside_mI(ring, handle):
                    sv = closure.special_star_member(f, handle, LEVEL)
                    if sv.is_in:
                        bad = f
                        break
                check(f"{tag}.special_never_in_on_I_minus_mI", bad is None,
                      f"offender={bad}")

    # --- chain compatibility on a light sample ------------------------------------
    ch = closure.colon_chain("z", sessions["quadric3"].ideal("I"),
                             QLevel(0, 2), "star")
    comp = all(is_subset(bracket_power(a.colon_ideal, 1), b.colon_ideal)
               for a, b in zip(ch.levels, ch.levels[1:]))
    check("quadric3.chain_compatibility", comp)

    # --- determinism: identical reports modulo timing ------------------------------
    from . import cli

    def star_report():
        t0 = time.time()
        vv = closure.star_member("z^2", fermat.ideal("I"), LEVEL)
        inputs = {"ideal": "I", "element": "z^2",
                  "level": {"e0": LEVEL.e0, "e_max": LEVEL.e_max}}
        return make_report("star", Fring, inputs, verdict_to_dict(vv), t0)

    r1, r2 = star_report(), star_report()
    j1 = json.dumps(strip_timing(r1), sort_keys=True)
    j2 = json.dumps(strip_timing(r2), sort_keys=True)
    check("determinism.star_report_bytes", j1 == j2)
    check("replay.star_report", replay_report(r1, fermat))

    passed = sum(1 for c in checks if c["pass"])
    result = {
        "checks": checks,
        "counts": {"total": len(checks), "passed": passed,
                   "failed": len(checks) - passed,
                   "rings": len(sessions),
                   "ideal_fixtures": sum(len(s.ideals) for s in sessions.values())},
        "all_pass": passed == len(checks),
    }
    # ring summary of the first session only; the corpus spans several rings
    return make_report("corpus", sessions["regular_f5"].ring,
                       {"sessions": list(SESSION_FILES)}, result, started)
