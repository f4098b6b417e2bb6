"""Verification harness behind ``eiszeta verify``.

Each check produces one or more report entries.  Checks are independent, so
they can be fanned out to worker processes; entries are assembled in the fixed
task order, which keeps the JSON report byte-identical across runs and job
counts.
"""
from __future__ import annotations

import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Callable, List, Optional, Tuple

from . import enumerator as en
from . import group as gr
from . import theta as th
from . import zeta as zt
from .errors import EisZetaError
from .exact import format_rational, is_prime, padic_valuation

PASS = "PASS"
FAIL = "FAIL"
EXPECTED_EXCLUSION = "EXPECTED-EXCLUSION"
VACUOUS = "VACUOUS"

RANDOM_SEED = 20190118
RANDOM_COUNT = 50
THETA_CONSTANT_ORDER = 400
THETA_MAX_PRIME = 31
REYNOLDS_MAX_ELL = 40
NUMERIC_TOLERANCE = 1e-9
NUMERIC_DPS = 30  # ~100 bits of mantissa

EISENSTEIN_TABLE = {
    8: (1, 0, 0, 0, 14, 0, 0, 0, 1),
    12: (1, 0, 0, 0, -33, 0, 0, 0, -33, 0, 0, 0, 1),
}
ZETA_TABLE = {
    8: tuple(Fraction(c, 5) for c in (1, 2, 2)),
    12: tuple(Fraction(c, 15) for c in (-1, -2, -2, 0, 4, 8, 8)),
}


@dataclass
class Entry:
    check: str
    params: dict
    status: str
    witness: dict = field(default_factory=dict)

    @property
    def verdict(self) -> bool:
        return self.status != FAIL

    def to_json(self) -> dict:
        return {
            "check": self.check,
            "params": self.params,
            "verdict": self.verdict,
            "status": self.status,
            "witness": self.witness,
        }


def _status(ok: bool) -> str:
    return PASS if ok else FAIL


def _ells(lo: int, hi: int) -> List[int]:
    return list(range(lo, hi + 1, 4))


def odd_primes(lo: int, hi: int) -> List[int]:
    return [p for p in range(max(lo, 3), hi + 1) if is_prime(p)]


# -- individual checks ------------------------------------------------------

def check_tables() -> List[Entry]:
    out = []
    for ell, want in EISENSTEIN_TABLE.items():
        got = en.normalized_eisenstein(ell)
        out.append(Entry("table.eisenstein", {"ell": ell}, _status(got.coeffs == want),
                         {"computed": str(got)}))
    for ell, want in ZETA_TABLE.items():
        got = zt.eisenstein_zeta(ell).poly
        out.append(Entry("table.zeta", {"ell": ell}, _status(got.coeffs == want),
                         {"computed": str(got)}))
    return out


def check_group() -> List[Entry]:
    g = gr.h1_group()
    elements = set(g.elements)
    unitary = all(m.is_unitary() for m in g)
    inverses = all(m.adjoint() in elements for m in g)
    ok = g.order == 96 and unitary and inverses
    return [Entry("group.h1_order", {}, _status(ok),
                  {"order": g.order, "all_unitary": unitary, "closed_under_inverse": inverses})]


def check_reynolds(max_ell: int) -> List[Entry]:
    g = gr.h1_group()
    out = []
    for ell in range(1, max_ell + 1):
        raw = gr.reynolds_power(g, ell)
        if ell % 4 or ell == 4:
            out.append(Entry("reynolds.vanishing", {"ell": ell}, _status(raw.is_zero()),
                             {"zero": raw.is_zero()}))
        else:
            ok = en.normalize(raw) == en.normalized_eisenstein(ell)
            out.append(Entry("reynolds.closed_form", {"ell": ell}, _status(ok), {}))
    return out


def check_zeta_routes(ell: int) -> List[Entry]:
    f = en.normalized_eisenstein(ell)
    lin = zt.zeta_via_linear_system(f).poly
    ser = zt.zeta_via_series(f).poly
    closed = zt.zeta_closed_form(ell).poly
    expanded = zt.zeta_expanded_form(ell).poly
    ok = lin == ser == closed == expanded
    return [Entry("zeta.cross_method", {"ell": ell}, _status(ok), {"degree": lin.degree})]


def random_enumerators(count: int = RANDOM_COUNT, seed: int = RANDOM_SEED,
                       max_degree: int = 12) -> List[en.FormalWeightEnumerator]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(1, max_degree)
        d = rng.randint(1, n)
        coeffs = [Fraction(1)] + [Fraction(0)] * (d - 1)
        for _ in range(d, n + 1):
            coeffs.append(Fraction(rng.randint(-50, 50), rng.randint(1, 12)))
        if coeffs[d] == 0:
            coeffs[d] = Fraction(1)
        out.append(en.FormalWeightEnumerator(n, tuple(coeffs)))
    return out


def check_zeta_corpus(corpus: Optional[str]) -> List[Entry]:
    out = []
    try:
        docs = en.load_corpus(corpus)
    except EisZetaError as exc:
        return [Entry("corpus.load", {"corpus": corpus or "bundled"}, FAIL,
                      {"error": type(exc).__name__, "message": str(exc)})]
    for name, f in docs.items():
        if name.startswith("phi_"):
            ell = int(name[4:])
            out.append(Entry("corpus.eisenstein", {"enumerator": name},
                             _status(f == en.normalized_eisenstein(ell)), {}))
        ok = zt.zeta_via_linear_system(f) == zt.zeta_via_series(f)
        out.append(Entry("zeta.corpus_cross_method", {"enumerator": name}, _status(ok),
                         {"degree": f.degree, "min_distance": f.min_distance}))
    for i, f in enumerate(random_enumerators()):
        ok = zt.zeta_via_linear_system(f) == zt.zeta_via_series(f)
        out.append(Entry("zeta.random_cross_method", {"index": i, "seed": RANDOM_SEED},
                         _status(ok), {"degree": f.degree, "min_distance": f.min_distance}))
    return out


def check_rha(ell: int) -> List[Entry]:
    structural = zt.rha_check_structural(ell)
    report = zt.rha_check_numeric(zt.eisenstein_zeta(ell), NUMERIC_TOLERANCE, NUMERIC_DPS)
    return [
        Entry("rha.structural", {"ell": ell}, _status(structural), {}),
        Entry("rha.numeric", {"ell": ell, "tolerance": NUMERIC_TOLERANCE, "dps": NUMERIC_DPS},
              _status(report.verdict),
              {"roots": len(report.deviations), "max_deviation": f"{report.max_deviation:.3e}"}),
    ]


def check_interlace(ell: int) -> List[Entry]:
    r = zt.interlace_check(ell)
    ok = r.arcs_covered
    if ell == 8:
        ok = ok and len(r.common_angles) > 0
    return [Entry("interlace.arc_coverage", {"ell": ell, "next": ell + 4}, _status(ok), {
        "common_angles": [a.to_json() for a in r.common_angles],
        "per_arc_counts": list(r.per_arc_counts),
    })]


def check_zeta_integrality(p: int) -> List[Entry]:
    ell = 2 * (p - 1)
    poly = zt.zeta_closed_form(ell).poly
    v = zt.min_valuation(poly, p)
    params = {"p": p, "ell": ell}
    if p == 5:
        return [Entry("zeta.p_integral", params, EXPECTED_EXCLUSION if v == -1 else FAIL,
                      {"min_valuation": v})]
    return [Entry("zeta.p_integral", params, _status(v >= 0), {"min_valuation": v})]


def check_enumerator_integrality(p: int) -> List[Entry]:
    ell = 2 * (p - 1)
    params = {"p": p, "ell": ell}
    if p == 3:
        vanishes = gr.reynolds_power(gr.h1_group(), ell).is_zero()
        return [Entry("enumerator.p_integral", params, VACUOUS if vanishes else FAIL,
                      {"phi_vanishes": vanishes})]
    f = en.normalized_eisenstein(ell)
    v = min(padic_valuation(c, p) for c in f.coeffs)
    return [Entry("enumerator.p_integral", params, _status(v >= 0), {"min_valuation": v})]


def check_lemma(p: int) -> List[Entry]:
    ell = 2 * (p - 1)
    if p == 5:
        r = zt.lemma_residue(5)
        return [Entry("lemma.unit", {"p": p, "ell": ell},
                      EXPECTED_EXCLUSION if r == 0 else FAIL, {"residue": r})]
    try:
        c = zt.lemma_unit_check(p)
    except EisZetaError as exc:
        return [Entry("lemma.unit", {"p": p, "ell": ell}, FAIL, {"error": str(exc)})]
    return [Entry("lemma.unit", {"p": p, "ell": ell}, _status(c.verdict), {
        "residue": c.residue, "multiplier": c.multiplier,
        "congruence_holds": c.identity_holds, "multiplier_unit": c.factor_nonzero,
    })]


def check_theta_constants(order: int) -> List[Entry]:
    out = []
    for a in (0, 1):
        s = th.theta_constant(a, order)
        expected = [0] * (order + 1)
        for b in range(-order, order + 1):
            if b % 2 == a and b * b <= order:
                expected[b * b] += 1
        ok = list(s.coeffs) == expected and all(c.denominator == 1 for c in s.coeffs)
        out.append(Entry("theta.constant", {"a": a, "order": order}, _status(ok), {}))
    return out


def check_theta_e8() -> List[Entry]:
    s = th.th_map(en.normalized_eisenstein(8), 40)
    head = [s.coeffs[k] for k in (0, 4, 8, 12)]
    ok = head == [1, 240, 2160, 6720] and all(
        s.coeffs[k] == 0 for k in range(41) if k % 4)
    return [Entry("theta.e8", {"order": 40}, _status(ok),
                  {"head": [format_rational(c) for c in head]})]


def check_theta_integrality(p: int, order: int) -> List[Entry]:
    ell = 2 * (p - 1)
    s = th.th_map(en.normalized_eisenstein(ell), order)
    ok, bad = th.qseries_p_integrality(s, p)
    return [Entry("theta.p_integral", {"p": p, "ell": ell, "order": order}, _status(ok),
                  {"first_violation": bad, "scope": f"verified to u^{order} only"})]


# -- assembly ---------------------------------------------------------------

def build_tasks(max_ell: int = 60, max_prime: int = 97, theta_order: int = 200,
                corpus: Optional[str] = None) -> List[Tuple[Callable, tuple]]:
    tasks: List[Tuple[Callable, tuple]] = [
        (check_tables, ()),
        (check_group, ()),
        (check_reynolds, (min(REYNOLDS_MAX_ELL, max_ell),)),
        (check_zeta_corpus, (corpus,)),
    ]
    tasks += [(check_zeta_routes, (ell,)) for ell in _ells(8, max_ell)]
    tasks += [(check_rha, (ell,)) for ell in _ells(8, max_ell)]
    tasks += [(check_interlace, (ell,)) for ell in _ells(8, max_ell - 4)]
    tasks += [(check_zeta_integrality, (p,)) for p in odd_primes(5, max_prime)]
    tasks += [(check_enumerator_integrality, (p,)) for p in odd_primes(3, max_prime)]
    tasks += [(check_lemma, (p,)) for p in odd_primes(5, max_prime)]
    tasks += [(check_theta_constants, (THETA_CONSTANT_ORDER,)), (check_theta_e8, ())]
    tasks += [(check_theta_integrality, (p, theta_order))
              for p in odd_primes(7, min(THETA_MAX_PRIME, max_prime))]
    return tasks


def _run(task):
    fn, args = task
    try:
        return fn(*args)
    except EisZetaError as exc:
        return [Entry(fn.__name__, {"args": [str(a) for a in args]}, FAIL,
                      {"error": type(exc).__name__, "message": str(exc)})]


def run_verification(max_ell: int = 60, max_prime: int = 97, theta_order: int = 200,
                     jobs: int = 1, corpus: Optional[str] = None) -> dict:
    if max_ell < 12 or max_prime < 2 or theta_order < 1:
        raise ValueError("bounds too small: need max_ell >= 12, max_prime >= 2, theta_order >= 1")
    if corpus is not None:
        corpus = str(Path(corpus))
    tasks = build_tasks(max_ell, max_prime, theta_order, corpus)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run, tasks))
    else:
        results = [_run(t) for t in tasks]
    entries = [e for chunk in results for e in chunk]
    return {
        "parameters": {
            "max_ell": max_ell,
            "max_prime": max_prime,
            "theta_order": theta_order,
            "corpus": corpus or "bundled",
            "q": "2",
        },
        "scope": f"theta-map integrality is verified to finite order u^{theta_order}",
        "entries": [e.to_json() for e in entries],
        "summary": {
            status: sum(1 for e in entries if e.status == status)
            for status in (PASS, FAIL, EXPECTED_EXCLUSION, VACUOUS)
        },
        "overall": all(e.verdict for e in entries),
    }


def dump_report(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"
