"""Verification harness: closed forms against brute-force path enumeration.

Each ``verify_*`` function returns a list of :class:`VerificationReport`, one
per identity statement.  A report holds one :class:`CheckResult` row per
parameter tuple.  Status is

* ``pass`` / ``fail`` for asserted statements (exact equality, no tolerance);
* ``reported`` for statements that are only recorded, such as the theorem for
  T_q(2, n) with the constant term as printed, the unimodality conjecture,
  or the q-recurrence outside ``m <= n``.  A reported statement never fails
  a run.
"""

from __future__ import annotations

import csv
import io
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable

from . import bijections as bj
from .paths import FamilySpec, enumerate_family, gen_fun, reflect
from .qpoly import (
    ONE, ZERO, PolyFraction, QPoly, ballot_q, ballot_q_binomial_form, eval_at_one,
    gaussian_binomial, is_nonnegative, is_unimodal, super_catalan_q, super_catalan_t,
    super_catalan_t_q,
)

__all__ = [
    "CheckResult", "VerificationReport", "Bounds", "SUITES", "IDENTITY_SUITE",
    "verify_macmahon", "verify_fuerlinger_hofbauer", "verify_rubenstein",
    "verify_q_rubenstein", "verify_qballot_theorem", "verify_lemma_reflection",
    "verify_ballot_expansion", "verify_eq5", "verify_theorem_main",
    "verify_bijections", "scan_nonnegativity", "scan_unimodality",
    "verify_suite", "verify_all", "reports_to_json", "reports_to_csv",
]

PASS, FAIL, REPORTED = "pass", "fail", "reported"


def value_to_json(v) -> dict:
    if isinstance(v, QPoly):
        return {"kind": "qpoly", **v.to_json(), "text": str(v)}
    if isinstance(v, PolyFraction):
        return {"kind": "fraction", "num": value_to_json(v.num), "den": value_to_json(v.den)}
    if isinstance(v, bool) or v is None:
        return {"kind": "bool", "value": v}
    if isinstance(v, int):
        return {"kind": "int", "value": str(v)}
    return {"kind": "text", "value": str(v)}


@dataclass
class CheckResult:
    params: dict
    holds: bool
    lhs: object = None
    rhs: object = None

    def to_json(self, full: bool = False) -> dict:
        out: dict = {"params": self.params, "holds": self.holds}
        if full or not self.holds:
            out["lhs"] = value_to_json(self.lhs)
            out["rhs"] = value_to_json(self.rhs)
        return out


@dataclass
class VerificationReport:
    identity: str
    params: dict
    status: str
    checks: list[CheckResult] = field(default_factory=list)
    elapsed_ms: float = 0.0
    description: str = ""

    @property
    def witness(self) -> CheckResult | None:
        """First row that does not hold, with both sides stored in full."""
        for c in self.checks:
            if not c.holds:
                return c
        return None

    @property
    def failed(self) -> bool:
        return self.status == FAIL

    def summary_line(self) -> str:
        n_ok = sum(c.holds for c in self.checks)
        tail = ""
        if self.witness is not None:
            w = self.witness
            tail = f"  first mismatch {w.params}: {_short(w.lhs)} vs {_short(w.rhs)}"
        return f"[{self.status.upper():8}] {self.identity:28} {n_ok}/{len(self.checks)} hold{tail}"

    def to_json(self) -> dict:
        w = self.witness
        return {
            "identity": self.identity,
            "description": self.description,
            "params": self.params,
            "status": self.status,
            "witness": None if w is None else w.to_json(full=True),
            "elapsed_ms": round(self.elapsed_ms, 3),
            "checks": [c.to_json() for c in self.checks],
        }


def _short(v, limit: int = 60) -> str:
    s = str(v)
    return s if len(s) <= limit else s[: limit - 3] + "..."


def _make(identity: str, params: dict, rows: list[CheckResult], t0: float,
          asserted: bool = True, description: str = "") -> VerificationReport:
    if asserted:
        status = PASS if all(r.holds for r in rows) else FAIL
    else:
        status = REPORTED
    return VerificationReport(identity, params, status, rows,
                              (time.perf_counter() - t0) * 1000.0, description)


def _row(params: dict, lhs, rhs) -> CheckResult:
    return CheckResult(params, lhs == rhs, lhs, rhs)


@dataclass(frozen=True)
class Bounds:
    """Parameter ranges; enumeration-backed checks use ``enum_n_max``."""

    enum_n_max: int = 9
    closed_n_max: int = 12
    expansion_m_max: int = 6
    expansion_n_max: int = 10
    reflection_total_max: int = 14
    scan_bound: int = 20


# -- classical statements ----------------------------------------------------

def verify_macmahon(n_max: int = 9) -> list[VerificationReport]:
    t0 = time.perf_counter()
    rows = []
    for n in range(0, n_max + 1):
        closed = super_catalan_q(0, n)
        binom = gaussian_binomial(2 * n, n)
        enum = gen_fun(FamilySpec.all_paths(n, n), "maj")
        rows.append(CheckResult({"n": n}, closed == binom == enum, closed, enum if closed == binom else binom))
    return [_make("macmahon", {"n": [0, n_max]}, rows, t0,
                  description="S_q(0,n) = [2n choose n]_q = sum of q^maj over all paths with n up, n down")]


def verify_fuerlinger_hofbauer(n_max: int = 9) -> list[VerificationReport]:
    reports = []
    for ident, stat, args, desc in (
        ("fh_t1n", "maj_minus_des", lambda n: (1, n), "T_q(1,n) = sum of q^(maj-des) over Catalan paths"),
        ("fh_tn1", "maj", lambda n: (n, 1), "T_q(n,1) = sum of q^maj over Catalan paths"),
    ):
        t0 = time.perf_counter()
        rows = [
            _row({"n": n}, super_catalan_t_q(*args(n)), gen_fun(FamilySpec.nonneg_paths(n, n), stat))
            for n in range(1, n_max + 1)
        ]
        reports.append(_make(ident, {"n": [1, n_max]}, rows, t0, description=desc))
    return reports


def verify_rubenstein(m_max: int = 12, n_max: int = 12) -> list[VerificationReport]:
    t0 = time.perf_counter()
    T = super_catalan_t

    def Tq(a: int, b: int) -> int:
        return eval_at_one(super_catalan_t_q(a, b))

    rows = []
    for m in range(1, m_max + 1):
        for n in range(1, n_max + 1):
            lhs = 4 * T(m, n)
            rhs = T(m + 1, n) + T(m, n + 1)
            # the same recurrence read off the q-analogues at q = 1
            rhs_q = Tq(m + 1, n) + Tq(m, n + 1)
            rows.append(CheckResult({"m": m, "n": n}, lhs == rhs == rhs_q == 4 * Tq(m, n), lhs, rhs))
    return [_make("rubenstein", {"m": [1, m_max], "n": [1, n_max]}, rows, t0,
                  description="4 T(m,n) = T(m+1,n) + T(m,n+1)")]


def _q_rubenstein_sides(m: int, n: int, swapped: bool = False) -> tuple[QPoly, QPoly]:
    T = super_catalan_t_q
    lhs = (ONE + QPoly.monomial(n)) * (ONE + QPoly.monomial(n - m)) * T(m, n)
    first = T(m + 1, n) if swapped else T(n, m + 1)
    rhs = first.shift(n - m) + T(m, n + 1)
    return lhs, rhs


def verify_q_rubenstein(m_max: int = 10, n_max: int = 10) -> list[VerificationReport]:
    """The q-recurrence exactly as printed, with ``T_q(n, m+1)`` on the right.

    Asserted for ``1 <= m <= n``; ``n < m`` and the variant with
    ``T_q(m+1, n)`` are only reported.
    """
    t0 = time.perf_counter()
    main, below = [], []
    for m in range(1, m_max + 1):
        for n in range(1, n_max + 1):
            row = _row({"m": m, "n": n}, *_q_rubenstein_sides(m, n))
            (main if m <= n else below).append(row)
    out = [_make("q_rubenstein", {"m": [1, m_max], "n": [1, n_max], "constraint": "m<=n"}, main, t0,
                 description="(1+q^n)(1+q^(n-m)) T_q(m,n) = q^(n-m) T_q(n,m+1) + T_q(m,n+1)")]
    t0 = time.perf_counter()
    out.append(_make("q_rubenstein_n_lt_m", {"m": [1, m_max], "n": [1, n_max], "constraint": "n<m"},
                     below, t0, asserted=False,
                     description="same identity outside the range m <= n (Laurent values)"))
    t0 = time.perf_counter()
    rows = [_row({"m": m, "n": n}, *_q_rubenstein_sides(m, n, swapped=True))
            for m in range(1, m_max + 1) for n in range(m, n_max + 1)]
    out.append(_make("q_rubenstein_swapped", {"m": [1, m_max], "n": [1, n_max], "constraint": "m<=n"},
                     rows, t0, asserted=False,
                     description="variant with T_q(m+1,n) in place of T_q(n,m+1)"))
    return out


def verify_lemma_reflection(total_max: int = 14) -> list[VerificationReport]:
    """maj(p) - maj(reflect(p)) equals the number of down steps, for p ending in an up step."""
    t0 = time.perf_counter()
    rows = []
    for total in range(1, total_max + 1):
        for n in range(0, total + 1):
            m = total - n
            bad = None
            count = 0
            for p in enumerate_family(FamilySpec.all_paths(m, n)):
                if p.steps[-1] != 0:
                    continue
                count += 1
                if p.maj - reflect(p).maj != n:
                    bad = p
                    break
            rows.append(CheckResult({"m": m, "n": n, "paths": count}, bad is None,
                                    None if bad is None else str(bad), None))
    return [_make("lemma_reflection", {"m+n": [1, total_max]}, rows, t0,
                  description="maj(p) = maj(reflect(p)) + n for p in S(m,n) ending with an up step")]


# -- q-Ballot numbers ------------------------------------------------------------

def _ballot_enum(n: int, r: int) -> QPoly:
    if r > n:
        return ZERO
    return gen_fun(FamilySpec.ballot(n, r), "maj_minus_des")


def _ballot_closed(n: int, r: int) -> QPoly:
    # the ballot family is empty for r > n, matching the binomial form
    return ballot_q(n, r) if r <= n else ZERO


def verify_qballot_theorem(n_max: int = 9, forms_n_max: int = 12) -> list[VerificationReport]:
    t0 = time.perf_counter()
    rows = [_row({"n": n, "r": r}, ballot_q(n, r), _ballot_enum(n, r))
            for n in range(1, n_max + 1) for r in range(1, n + 1)]
    out = [_make("qballot", {"n": [1, n_max], "r": "1..n"}, rows, t0,
                 description="B_q(n,r) = sum of q^(maj-des) over ballot(n,r)")]

    t0 = time.perf_counter()
    rows = [_row({"n": n, "r": r}, ballot_q(n, r), ballot_q_binomial_form(n, r))
            for n in range(1, forms_n_max + 1) for r in range(1, n + 1)]
    out.append(_make("qballot_forms", {"n": [1, forms_n_max], "r": "1..n"}, rows, t0,
                     description="factorial form of B_q(n,r) = gaussian-binomial difference form"))

    t0 = time.perf_counter()
    rows = []
    for n in range(1, n_max + 1):
        for r in range(1, n + 1):
            rows.extend(_qballot_pipeline(n, r))
    out.append(_make("qballot_proof", {"n": [1, n_max], "r": "1..n"}, rows, t0,
                     description="psi cancels heightabove against S(n+r,n-r-1); phi shifts heightatmost by q^-(n-r)"))
    return out


def _qballot_pipeline(n: int, r: int) -> list[CheckResult]:
    above = FamilySpec.height_above(n, r)
    at_most = FamilySpec.height_at_most(n, r)
    rows = []
    # psi: sum over heightabove of q^maj, pushed through psi, equals the full count of S(n+r, n-r-1)
    psi_image = target = ZERO
    if r < n:
        terms: dict[int, int] = {}
        for p in enumerate_family(above):
            e = bj.psi(p, n, r).maj
            terms[e] = terms.get(e, 0) + 1
        psi_image = QPoly.from_terms(terms)
        target = gaussian_binomial(2 * n - 1, n + r)
    rows.append(_row({"n": n, "r": r, "step": "psi"}, psi_image, target))
    diff = gaussian_binomial(2 * n - 1, n + r - 1) - gaussian_binomial(2 * n - 1, n + r)
    low = gen_fun(at_most, "maj")
    rows.append(_row({"n": n, "r": r, "step": "cancel"}, diff, low))
    terms = {}
    for p in enumerate_family(at_most):
        img = bj.phi(p, n, r)
        e = img.maj - img.des
        terms[e] = terms.get(e, 0) + 1
    rows.append(_row({"n": n, "r": r, "step": "phi"}, low.shift(-(n - r)), QPoly.from_terms(terms)))
    return rows


def _expansion_rhs(m: int, n: int, B: Callable[[int, int], QPoly]) -> PolyFraction:
    total = PolyFraction(ZERO)
    for r in range(1, m + 1):
        sign = -1 if (r - 1) % 2 else 1
        coeff = QPoly.monomial((r - 1) * (r - 2) // 2, sign) * (ONE + QPoly.monomial(m))
        total = total + PolyFraction(coeff * B(n, r) * B(m, r), ONE + QPoly.monomial(r))
    return total


def verify_ballot_expansion(m_max: int = 6, n_max: int = 10, enum_n_max: int = 9) -> list[VerificationReport]:
    """``q^((n-1)(m-1)) T_q(m,n)`` against the alternating sum of ballot products.

    Runs twice: once with closed-form ballot numbers and once with ballot
    numbers taken from path enumeration.  ``B(n, r)`` is zero for ``r > n``.
    """
    out = []
    for ident, B, nm in (("ballot_expansion", _ballot_closed, n_max),
                         ("ballot_expansion_enumerated", _ballot_enum, min(n_max, enum_n_max))):
        t0 = time.perf_counter()
        rows = []
        for m in range(1, m_max + 1):
            for n in range(1, nm + 1):
                lhs = PolyFraction(super_catalan_t_q(m, n).shift((n - 1) * (m - 1)))
                rhs = _expansion_rhs(m, n, B)
                rows.append(CheckResult({"m": m, "n": n}, lhs == rhs, lhs.num, rhs))
        out.append(_make(ident, {"m": [1, m_max], "n": [1, nm]}, rows, t0,
                         description="q^((n-1)(m-1)) T_q(m,n) = sum_r (-1)^(r-1) q^C(r-1,2) (1+q^m)/(1+q^r) B_q(n,r) B_q(m,r)"))
    t0 = time.perf_counter()
    rows = []
    for n in range(1, min(n_max, enum_n_max) + 1):
        collapsed = _expansion_rhs(1, n, _ballot_closed).to_poly()
        rows.append(_row({"n": n}, collapsed, gen_fun(FamilySpec.nonneg_paths(n, n), "maj_minus_des")))
    out.append(_make("ballot_expansion_m1", {"n": [1, min(n_max, enum_n_max)]}, rows, t0,
                     description="the m = 1 case collapses to T_q(1,n) as a path sum"))
    return out


def _t2_ballot_rhs(n: int, B) -> QPoly:
    return (ONE + QPoly.monomial(2)) * B(n, 1) - B(n, 2)


def verify_eq5(n_max: int = 12, enum_n_max: int = 9) -> list[VerificationReport]:
    """Two-term ballot form of ``q^(n-1) T_q(2, n)``, closed and enumerated."""
    out = []
    for ident, B, nm in (("t2_ballot", _ballot_closed, n_max),
                         ("t2_ballot_enumerated", _ballot_enum, min(n_max, enum_n_max))):
        t0 = time.perf_counter()
        rows = [_row({"n": n}, super_catalan_t_q(2, n).shift(n - 1), _t2_ballot_rhs(n, B)) for n in range(2, nm + 1)]
        out.append(_make(ident, {"n": [2, nm]}, rows, t0,
                         description="q^(n-1) T_q(2,n) = (1+q^2) B_q(n,1) - B_q(n,2)"))
    t0 = time.perf_counter()
    rows = []
    for n in range(2, n_max + 1):
        via_expansion = _expansion_rhs(2, n, _ballot_closed)
        rows.append(CheckResult({"n": n}, via_expansion == PolyFraction(_t2_ballot_rhs(n, _ballot_closed)),
                                via_expansion, _t2_ballot_rhs(n, _ballot_closed)))
    out.append(_make("t2_ballot_from_expansion", {"n": [2, n_max]}, rows, t0,
                     description="the m = 2 expansion agrees with the two-term form"))
    return out


# -- the theorem for T_q(2, n) -------------------------------------------------------

def _omega_sum(n: int) -> QPoly:
    return gen_fun(FamilySpec.omega(n), "maj_minus_des")


def verify_theorem_main(n_max: int = 9, printed_from: int = 1) -> list[VerificationReport]:
    """Three statements about T_q(2, n).

    ``t2_omega``          q^(n-1) T_q(2,n) = q^((n-1)^2) + q^2 * omega sum (asserted)
    ``t2_omega_printed``  T_q(2,n) = q^(n-1) + q^(3-n) * omega sum (reported)
    ``t2_omega_halves``   the two halves of the proof via f and g (asserted)
    """
    if printed_from < 1:
        raise ValueError("T_q(2, n) needs n >= 1")
    omega = {n: _omega_sum(n) for n in range(min(2, printed_from), n_max + 1)}

    t0 = time.perf_counter()
    rows = [_row({"n": n}, super_catalan_t_q(2, n).shift(n - 1),
                 QPoly.monomial((n - 1) ** 2) + omega[n].shift(2))
            for n in range(2, n_max + 1)]
    out = [_make("t2_omega", {"n": [2, n_max]}, rows, t0,
                 description="q^(n-1) T_q(2,n) = q^((n-1)^2) + q^2 sum_{omega(n)} q^(maj-des)")]

    t0 = time.perf_counter()
    rows = [_row({"n": n}, super_catalan_t_q(2, n), QPoly.monomial(n - 1) + omega[n].shift(3 - n))
            for n in range(printed_from, n_max + 1)]
    out.append(_make("t2_omega_printed", {"n": [printed_from, n_max]}, rows, t0, asserted=False,
                     description="T_q(2,n) = q^(n-1) + q^(3-n) sum_{omega(n)} q^(maj-des), constant as printed"))

    t0 = time.perf_counter()
    rows = []
    for n in range(2, n_max + 1):
        rows.extend(_t2_omega_halves(n, omega[n]))
    out.append(_make("t2_omega_halves", {"n": [2, n_max]}, rows, t0,
                     description="B_q(n,1) - B*_q(n,2) = q^((n-1)^2) via f; q^2 B_q(n,1) - B**_q(n,2) = q^2 omega sum via g"))
    return out


def _t2_omega_halves(n: int, omega_sum: QPoly) -> list[CheckResult]:
    b1 = ballot_q(n, 1)
    # one pass over ballot(n, 2), split into B* and B** by the same predicate the families use
    star_fam = FamilySpec.ballot_star(n)
    star: dict[int, int] = {}
    star2: dict[int, int] = {}
    f_terms: dict[int, int] = {}
    g_terms: dict[int, int] = {}
    for p in enumerate_family(FamilySpec.ballot(n, 2)):
        e = p.maj - p.des
        if star_fam.contains(p):
            star[e] = star.get(e, 0) + 1
            img = bj.f(p)
            k = img.maj - img.des
            f_terms[k] = f_terms.get(k, 0) + 1
        else:
            star2[e] = star2.get(e, 0) + 1
            img = bj.g(p)
            k = img.maj - img.des + 2
            g_terms[k] = g_terms.get(k, 0) + 1
    star, star2 = QPoly.from_terms(star), QPoly.from_terms(star2)
    return [
        _row({"n": n, "part": "B*=f-image"}, star, QPoly.from_terms(f_terms)),
        _row({"n": n, "part": "B1-B*"}, b1 - star, QPoly.monomial((n - 1) ** 2)),
        _row({"n": n, "part": "B**=g-image"}, star2, QPoly.from_terms(g_terms)),
        _row({"n": n, "part": "q^2B1-B**"}, b1.shift(2) - star2, omega_sum.shift(2)),
    ]


# -- bijections ----------------------------------------------------------------------

def _map_rows(name: str, params: dict, domain: Iterable, forward, backward,
              codomain: set, contract) -> CheckResult:
    """One exhaustive check: injective, image == codomain, inverse roundtrip, stat contract."""
    images = []
    problems = []
    for p in domain:
        tr = forward(p)
        out = tr.output
        images.append(out)
        if backward(out) != p:
            problems.append(f"inverse fails at {p}")
        if not contract(p, tr):
            problems.append(f"statistic contract fails at {p}")
        if len(problems) > 3:
            break
    image_set = set(images)
    if len(image_set) != len(images):
        problems.append("not injective")
    if image_set != codomain:
        problems.append(f"image differs from codomain ({len(image_set)} vs {len(codomain)})")
    for q in codomain - image_set:
        problems.append(f"missed {q}")
        break
    if not problems:
        for q in codomain:
            if forward(backward(q)).output != q:
                problems.append(f"forward(backward({q})) != {q}")
                break
    return CheckResult({**params, "size": len(images)}, not problems,
                       "; ".join(problems) if problems else None, None)


def verify_bijections(n_max: int = 9) -> list[VerificationReport]:
    out = []

    t0 = time.perf_counter()
    rows = []
    for n in range(1, n_max + 1):
        for r in range(1, n + 1):
            domain = list(enumerate_family(FamilySpec.height_above(n, r)))
            cod = set(enumerate_family(FamilySpec.all_paths(n + r, n - r - 1))) if r < n else set()
            rows.append(_map_rows(
                "psi", {"n": n, "r": r}, domain,
                lambda p: bj.trace("psi", p, n, r), lambda q: bj.psi_inv(q, n, r), cod,
                lambda p, tr: tr.stat_delta[0] == 0 and p.descent_set == tr.output.descent_set,
            ))
    out.append(_make("bijection_psi", {"n": [1, n_max], "r": "1..n"}, rows, t0,
                     description="psi: heightabove(n,r) -> S(n+r,n-r-1), same descent set"))

    t0 = time.perf_counter()
    rows = []
    for n in range(1, n_max + 1):
        for r in range(1, n + 1):
            rows.append(_map_rows(
                "phi", {"n": n, "r": r}, enumerate_family(FamilySpec.height_at_most(n, r)),
                lambda p: bj.trace("phi", p, n, r), lambda q: bj.phi_inv(q, n, r),
                set(enumerate_family(FamilySpec.ballot(n, r))),
                lambda p, tr: p.maj - (n - r) == tr.output.maj - tr.output.des,
            ))
    out.append(_make("bijection_phi", {"n": [1, n_max], "r": "1..n"}, rows, t0,
                     description="phi: heightatmost(n,r) -> ballot(n,r), maj(p)-(n-r) = (maj-des)(phi p)"))

    t0 = time.perf_counter()
    rows = []
    for n in range(2, n_max + 1):
        tall = {p for p in enumerate_family(FamilySpec.catalan(n)) if p.height >= 2}
        rows.append(_map_rows(
            "f", {"n": n}, enumerate_family(FamilySpec.ballot_star(n)),
            lambda p: bj.trace("f", p), bj.f_inv, tall,
            lambda p, tr: tr.stat_delta == (0, 0) and tr.output.height >= 2
            and tr.landmarks["Q"] == tr.landmarks["R"] + 1,
        ))
    out.append(_make("bijection_f", {"n": [2, n_max]}, rows, t0,
                     description="f: B*(n,2) -> Catalan paths of height >= 2, maj and des preserved"))

    t0 = time.perf_counter()
    rows = []
    for n in range(2, n_max + 1):
        omega = set(enumerate_family(FamilySpec.omega(n)))
        rest = {p for p in enumerate_family(FamilySpec.catalan(n)) if p not in omega}
        rows.append(_map_rows(
            "g", {"n": n}, enumerate_family(FamilySpec.ballot_star_star(n)),
            lambda p: bj.trace("g", p), bj.g_inv, rest, _g_contract,
        ))
    out.append(_make("bijection_g", {"n": [2, n_max]}, rows, t0,
                     description="g: B**(n,2) -> Catalan minus omega, (maj-des) drops by 2"))
    return out


def _g_contract(p, tr) -> bool:
    dmaj, ddes = tr.stat_delta
    if dmaj - ddes != 2:
        return False
    if tr.case_taken == "Case2" and tr.landmarks["Y"] == 1:
        return (dmaj, ddes) == (3, 1)
    return (dmaj, ddes) == (2, 0)


# -- coefficient scans ---------------------------------------------------------------

def scan_nonnegativity(bound: int = 20) -> list[VerificationReport]:
    t0 = time.perf_counter()
    rows = []
    for m in range(0, bound + 1):
        for n in range(0, bound - m + 1):
            s = super_catalan_q(m, n)
            rows.append(CheckResult({"m": m, "n": n}, is_nonnegative(s), s, None))
    return [_make("nonnegativity", {"m+n": [0, bound]}, rows, t0,
                  description="S_q(m,n) has nonnegative coefficients")]


def scan_unimodality(bound: int = 20) -> list[VerificationReport]:
    """Conjecture status only: the report is ``reported`` whatever the outcome."""
    t0 = time.perf_counter()
    rows = []
    for m in range(0, bound + 1):
        for n in range(0, bound - m + 1):
            s = super_catalan_q(m, n)
            rows.append(CheckResult({"m": m, "n": n}, is_unimodal(s), s, None))
    return [_make("unimodality", {"m+n": [0, bound]}, rows, t0, asserted=False,
                  description="S_q(m,n) is unimodal (conjecture; counterexamples would be listed)")]


# -- suites ----------------------------------------------------------------------------

SUITES: dict[str, Callable[[Bounds], list[VerificationReport]]] = {
    "macmahon": lambda b: verify_macmahon(b.enum_n_max),
    "fh": lambda b: verify_fuerlinger_hofbauer(b.enum_n_max),
    "rubenstein": lambda b: verify_rubenstein(b.closed_n_max, b.closed_n_max),
    "q-rubenstein": lambda b: verify_q_rubenstein(b.closed_n_max, b.closed_n_max),
    "lemma": lambda b: verify_lemma_reflection(b.reflection_total_max),
    "qballot": lambda b: verify_qballot_theorem(b.enum_n_max, b.closed_n_max),
    "expansion": lambda b: verify_ballot_expansion(b.expansion_m_max, b.expansion_n_max, b.enum_n_max),
    "t2-ballot": lambda b: verify_eq5(b.closed_n_max, b.enum_n_max),
    "theorem": lambda b: verify_theorem_main(b.enum_n_max),
    "bijections": lambda b: verify_bijections(b.enum_n_max),
    "nonneg": lambda b: scan_nonnegativity(b.scan_bound),
    "unimodal": lambda b: scan_unimodality(b.scan_bound),
}


# identity id -> suite that produces it
IDENTITY_SUITE: dict[str, str] = {
    "macmahon": "macmahon",
    "fh_t1n": "fh", "fh_tn1": "fh",
    "rubenstein": "rubenstein",
    "q_rubenstein": "q-rubenstein", "q_rubenstein_n_lt_m": "q-rubenstein",
    "q_rubenstein_swapped": "q-rubenstein",
    "lemma_reflection": "lemma",
    "qballot": "qballot", "qballot_forms": "qballot", "qballot_proof": "qballot",
    "ballot_expansion": "expansion", "ballot_expansion_enumerated": "expansion",
    "ballot_expansion_m1": "expansion",
    "t2_ballot": "t2-ballot", "t2_ballot_enumerated": "t2-ballot",
    "t2_ballot_from_expansion": "t2-ballot",
    "t2_omega": "theorem", "t2_omega_printed": "theorem", "t2_omega_halves": "theorem",
    "bijection_psi": "bijections", "bijection_phi": "bijections",
    "bijection_f": "bijections", "bijection_g": "bijections",
    "nonnegativity": "nonneg", "unimodality": "unimodal",
}


def verify_suite(name: str, bounds: Bounds | None = None) -> list[VerificationReport]:
    """Run a suite by name, or the suite holding a single identity id (filtered to it)."""
    bounds = bounds or Bounds()
    if name in SUITES:
        return SUITES[name](bounds)
    if name in IDENTITY_SUITE:
        return [r for r in SUITES[IDENTITY_SUITE[name]](bounds) if r.identity == name]
    raise KeyError(name)


def verify_all(bounds: Bounds | None = None, jobs: int = 1) -> list[VerificationReport]:
    """Every suite, merged in the fixed order of :data:`SUITES`."""
    bounds = bounds or Bounds()
    names = list(SUITES)
    if jobs <= 1:
        results = [verify_suite(name, bounds) for name in names]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(verify_suite, name, bounds) for name in names]
            results = [fut.result() for fut in futures]
    return [rep for group in results for rep in group]


def reports_to_json(reports: list[VerificationReport]) -> list[dict]:
    return [r.to_json() for r in reports]


def reports_to_csv(reports: list[VerificationReport]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["identity", "params", "holds", "report_status"])
    for rep in reports:
        for c in rep.checks:
            params = ";".join(f"{k}={v}" for k, v in c.params.items())
            w.writerow([rep.identity, params, "true" if c.holds else "false", rep.status])
    return buf.getvalue()
