"""Acceptance criteria, one test each; every test prints a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v`` (the lines are printed even
without ``-s``).
"""

import json
import subprocess
import sys
import time
from contextlib import contextmanager
from pathlib import Path

import jsonschema
import pytest

from supercatalan import identities as ids
from supercatalan.cli import main
from supercatalan.paths import FamilySpec, gen_fun
from supercatalan.qpoly import QPoly, super_catalan_q

GOLDEN = Path(__file__).parent / "golden"


def golden_schema(name: str) -> dict:
    return json.loads((GOLDEN / f"{name}.schema.json").read_text())


@pytest.fixture
def criterion(capsys):
    @contextmanager
    def run(number: int, name: str):
        ok = False
        try:
            yield
            ok = True
        finally:
            with capsys.disabled():
                print(f"\nACCEPTANCE {number:2d} {name}: {'PASS' if ok else 'FAIL'}")
    return run


def by_id(reports):
    return {r.identity: r for r in reports}


def assert_pass(report, expected_rows=None):
    assert report.status == "pass", report.summary_line()
    if expected_rows is not None:
        assert len(report.checks) == expected_rows


def test_01_macmahon(criterion):
    with criterion(1, "MacMahon S_q(0,n) = maj sum over all paths, 1 <= n <= 8, under 5 s"):
        t0 = time.perf_counter()
        for n in range(1, 9):
            assert super_catalan_q(0, n) == gen_fun(FamilySpec.all_paths(n, n), "maj")
        assert time.perf_counter() - t0 < 5.0
        assert_pass(by_id(ids.verify_macmahon(8))["macmahon"])


def test_02_fuerlinger_hofbauer(criterion):
    with criterion(2, "T_q(1,n) and T_q(n,1) as Catalan path sums, n <= 9"):
        reps = by_id(ids.verify_fuerlinger_hofbauer(9))
        assert_pass(reps["fh_t1n"], 9)
        assert_pass(reps["fh_tn1"], 9)


def test_03_qballot(criterion):
    with criterion(3, "q-ballot numbers as maj-des sums (n <= 9), both closed forms agree (n <= 12)"):
        reps = by_id(ids.verify_qballot_theorem(9, 12))
        assert_pass(reps["qballot"], 45)
        assert_pass(reps["qballot_forms"], 78)
        assert_pass(reps["qballot_proof"])


def test_04_reflection_lemma(criterion):
    with criterion(4, "maj(p) = maj(reflect(p)) + n for paths ending in an up step, m+n <= 14"):
        (rep,) = ids.verify_lemma_reflection(14)
        assert_pass(rep)
        assert sum(c.params["paths"] for c in rep.checks) == 2 ** 14 - 1


def test_05_bijections(criterion):
    with criterion(5, "psi, phi, f, g exhaustive for n <= 10"):
        reps = by_id(ids.verify_bijections(10))
        for name in ("bijection_psi", "bijection_phi", "bijection_f", "bijection_g"):
            assert_pass(reps[name])
        sizes = {c.params["n"]: c.params["size"] for c in reps["bijection_g"].checks}
        assert len(sizes) == 9 and sizes[10] > 0


def test_06_rubenstein(criterion):
    with criterion(6, "4T(m,n) = T(m+1,n) + T(m,n+1) for 1 <= m,n <= 12"):
        (rep,) = ids.verify_rubenstein(12, 12)
        assert_pass(rep, 144)


def test_07_q_rubenstein(criterion):
    with criterion(7, "q-recurrence as printed for 1 <= m <= n <= 10, n < m reported"):
        reps = by_id(ids.verify_q_rubenstein(10, 10))
        assert_pass(reps["q_rubenstein"], 55)
        assert reps["q_rubenstein_n_lt_m"].status == "reported"
        assert len(reps["q_rubenstein_n_lt_m"].checks) == 45


def test_08_ballot_expansion(criterion):
    with criterion(8, "ballot expansion of T_q(m,n) and its m = 2 form, m <= 6, n <= 10"):
        reps = by_id(ids.verify_ballot_expansion(6, 10, 9))
        assert_pass(reps["ballot_expansion"], 60)
        assert_pass(reps["ballot_expansion_enumerated"])
        two = by_id(ids.verify_eq5(10, 9))
        assert_pass(two["t2_ballot"], 9)
        assert_pass(two["t2_ballot_from_expansion"], 9)


def test_09_omega_theorem(criterion):
    with criterion(9, "q^(n-1) T_q(2,n) = q^((n-1)^2) + q^2 omega sum for 2 <= n <= 12; printed form reported"):
        reps = by_id(ids.verify_theorem_main(12))
        assert_pass(reps["t2_omega"], 11)
        assert_pass(reps["t2_omega_halves"])
        printed = reps["t2_omega_printed"]
        assert printed.status == "reported"
        holds = {c.params["n"]: c.holds for c in printed.checks}
        assert holds[1] and holds[3] and not holds[2]
        w = printed.witness
        assert w.params == {"n": 2}
        assert (w.lhs, w.rhs) == (QPoly.parse("1 + q + q^2"), QPoly.parse("2*q + q^2"))


def test_10_coefficient_scans(criterion):
    with criterion(10, "nonnegativity passes and unimodality has no counterexample, m+n <= 20"):
        (nonneg,) = ids.scan_nonnegativity(20)
        assert_pass(nonneg, 231)
        (uni,) = ids.scan_unimodality(20)
        assert uni.status == "reported"
        assert len(uni.checks) == 231 and uni.witness is None


def test_11_verify_all_cli(criterion, tmp_path, capsys):
    with criterion(11, "verify all exits 0 in under 120 s; JSON outputs match the pinned schemas"):
        t0 = time.perf_counter()
        proc = subprocess.run(
            [sys.executable, "-m", "supercatalan", "verify", "all", "--format", "json"],
            capture_output=True, text=True, timeout=300,
        )
        elapsed = time.perf_counter() - t0
        assert proc.returncode == 0, proc.stderr
        assert elapsed < 120.0, f"took {elapsed:.1f} s"
        reports = json.loads(proc.stdout)
        jsonschema.validate(reports, golden_schema("report_list"))
        assert len(reports) == len(ids.IDENTITY_SUITE)
        assert all(r["status"] in ("pass", "reported") for r in reports)

        others = [
            (["table", "Tq", "1..3", "1..3", "--format", "json"], "table"),
            (["enumerate", "omega:4", "--stats", "--format", "json"], "enumeration"),
            (["enumerate", "ballot:5,2", "--genfun", "maj-des", "--format", "json"], "genfun"),
            (["biject", "g", "0111000111", "--trace"], "bijection_trace"),
        ]
        for argv, schema in others:
            out = tmp_path / f"{schema}.json"
            assert main(argv + ["--out", str(out)]) == 0
            jsonschema.validate(json.loads(out.read_text()), golden_schema(schema))
