"""Acceptance gate: one test per promised criterion, one printed line each.

Run with ``pytest -s tests/test_acceptance.py`` to see the PASS/FAIL lines;
every tolerance is pinned here, nothing is calibrated at run time.
"""

import json
import math
import os
import subprocess
import sys
import time

import numpy as np
import pytest
from numpy.polynomial.hermite import hermgauss, hermval

from nclandau.fock import BasisIndex, Cutoffs, commutator, flatten
from nclandau.ladder import build_momenta, build_xy, interior_slice
from nclandau.landau_gauge import (
    KGrid,
    oscillator_p_elements,
    oscillator_x_elements,
    projected_commutator_landau,
)
from nclandau.projection import full_space_scan, project, projected_commutator_xy, projector
from nclandau.spectrum import verify_spectrum
from nclandau.units import PhysicalUnits


def record(number: int, name: str, passed: bool) -> None:
    print(f"ACCEPTANCE {number} ({name}): {'PASS' if passed else 'FAIL'}", flush=True)
    assert passed, f"criterion {number}: {name}"


def test_criterion_1_lowest_level_commutator():
    start = time.perf_counter()
    report = projected_commutator_xy(Cutoffs(0, 3), keep=0)
    elapsed = time.perf_counter() - start
    passed = (
        abs(report.top_coefficient - (-1j)) <= 1e-12
        and report.max_offtop_residual <= 1e-12
        and elapsed < 1.0
    )
    record(1, "lowest-level commutator -i", passed)


def test_criterion_2_two_level_matrix():
    c = Cutoffs(1, 3)
    x, y = build_xy(c)
    p = projector(c, 1)
    cm = commutator(project(x, p), project(y, p)).entries
    expected_by_level = {0: 0.0, 1: -2j}
    worst = 0.0
    for n, expected in expected_by_level.items():
        for j in range(3):  # interior j only
            pos = flatten(BasisIndex(n, j), c)
            worst = max(worst, abs(cm[pos, pos] - expected))
    record(2, "two-level diagonal (0, -2i)", worst <= 1e-12)


def test_criterion_3_general_level_law():
    start = time.perf_counter()
    passed = True
    for keep in range(21):
        report = projected_commutator_xy(Cutoffs(keep, keep + 3), keep)
        expected = -1j * (keep + 1)
        passed &= abs(report.top_coefficient - expected) <= 1e-12 * abs(expected)
        passed &= report.max_offtop_residual <= 1e-12
        passed &= report.top_uniform
    elapsed = time.perf_counter() - start
    record(3, "coefficient -i(keep+1) for keep=0..20", passed and elapsed < 30.0)


def test_criterion_4_full_space_vanishing():
    scan = full_space_scan(Cutoffs(10, 10))
    worst = max(abs(value) for _, value in scan)
    record(4, "unprojected interior commutator vanishes", len(scan) == 10 and worst <= 1e-12)


def test_criterion_5_spectrum():
    report = verify_spectrum(Cutoffs(6, 4))
    passed = report.ok and report.max_abs_error <= 1e-12
    passed &= all(m == 5 for m in report.degeneracy_table.values())
    expected = [(n + 0.5) for n in range(7) for _ in range(5)]
    passed &= np.allclose(report.eigenvalues, expected, rtol=0, atol=1e-12)

    doubled = verify_spectrum(Cutoffs(6, 4), PhysicalUnits(B=2.0))
    gap = doubled.eigenvalues[5] - doubled.eigenvalues[0]
    base_gap = report.eigenvalues[5] - report.eigenvalues[0]
    passed &= abs(gap - 2.0 * base_gap) <= 1e-12
    record(5, "spectrum hw(n+1/2) with multiplicity J+1", bool(passed))


def test_criterion_6_gauge_crosscheck():
    start = time.perf_counter()
    passed = True
    for keep in range(3):
        expected = -1j * (keep + 1)
        fine = projected_commutator_landau(KGrid.centered(128), keep)
        passed &= abs(fine.top_coefficient - expected) <= 0.01 * abs(expected)
        # 255 points halve dk exactly (16/127 -> 16/254)
        finer = projected_commutator_landau(KGrid.centered(255), keep)
        ratio = abs(fine.top_coefficient - expected) / abs(finer.top_coefficient - expected)
        passed &= 3.2 <= ratio <= 4.8
    elapsed = time.perf_counter() - start
    record(6, "momentum-grid route matches within 1%, order 2", passed and elapsed < 60.0)


def test_criterion_7_oracle_equivalence():
    nodes, weights = hermgauss(80)

    def bare(n, x):
        coeff = np.zeros(n + 1)
        coeff[n] = 1.0
        return hermval(x, coeff) / math.sqrt(2.0**n * math.factorial(n)) / math.pi**0.25

    def dbare(n, x):
        if n == 0:
            lower = np.zeros_like(x)
        else:
            coeff = np.zeros(n)
            coeff[n - 1] = 1.0
            lower = hermval(x, coeff)
        coeff = np.zeros(n + 1)
        coeff[n] = 1.0
        upper = hermval(x, coeff)
        norm = 1.0 / math.sqrt(2.0**n * math.factorial(n)) / math.pi**0.25
        return (2.0 * n * lower - x * upper) * norm

    x_mat = oscillator_x_elements(12).entries
    p_mat = oscillator_p_elements(12).entries
    worst = 0.0
    for n in range(13):
        for m in range(13):
            qx = np.sum(weights * bare(n, nodes) * nodes * bare(m, nodes))
            qp = np.sum(weights * bare(n, nodes) * (-1j) * dbare(m, nodes))
            worst = max(worst, abs(x_mat[n, m] - qx), abs(p_mat[n, m] - qp))
    quad_ok = worst <= 1e-8

    c = Cutoffs(6, 6)
    x, _ = build_xy(c)
    px, py = build_momenta(c)
    inner = interior_slice(c, 1)
    cxpx = commutator(x, px).entries
    cxpy = commutator(x, py).entries
    canon = 0.0
    for i in inner:
        for k in inner:
            target = 1j if i == k else 0.0
            canon = max(canon, abs(cxpx[i, k] - target), abs(cxpy[i, k]))
    record(7, "quadrature oracle and canonical pairs", quad_ok and canon <= 1e-12)


def test_criterion_8_degeneracy_cutoff_independence():
    passed = True
    for keep in (0, 3, 7):
        J = keep + 3
        narrow = projected_commutator_xy(Cutoffs(keep, J), keep)
        wide = projected_commutator_xy(Cutoffs(keep, J + 5), keep)
        passed &= abs(narrow.top_coefficient - wide.top_coefficient) <= 1e-12
    record(8, "top coefficient independent of J", passed)


def test_criterion_9_cli_determinism():
    env = dict(os.environ)
    env.pop("NCG_DEFAULT_OUTPUT", None)
    args = [sys.executable, "-m", "nclandau.cli", "sweep", "--N", "6", "--J", "9",
            "--output", "json"]
    first = subprocess.run(args, capture_output=True, text=True, env=env)
    second = subprocess.run(args, capture_output=True, text=True, env=env)
    passed = (
        first.returncode == 0
        and second.returncode == 0
        and first.stdout == second.stdout
        and json.loads(first.stdout)["ok"] is True
    )
    record(9, "byte-identical CLI reruns", passed)
