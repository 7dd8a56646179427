"""Spectrum and degeneracy checks for the truncated level structure."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .fock import Cutoffs, OperatorMatrix, commutator
from .ladder import build_H, build_L
from .units import NATURAL, PhysicalUnits, level_spacing

__all__ = ["SpectrumReport", "hermitian_eigenvalues", "verify_spectrum"]

HERMITICITY_TOLERANCE = 1e-10


def hermitian_eigenvalues(op: OperatorMatrix, herm_tol: float = HERMITICITY_TOLERANCE) -> np.ndarray:
    """Ascending real eigenvalues of a Hermitian matrix.

    Refuses non-Hermitian input: the deviation max|A - A†| is reported in
    the error so a truncation-contaminated operator is recognizable.
    """
    deviation = float(np.max(np.abs(op.entries - op.entries.conj().T))) if op.dim else 0.0
    if deviation > herm_tol:
        raise ValueError(
            f"matrix is not Hermitian: max deviation {deviation:.3e} exceeds {herm_tol:.1e}"
        )
    return np.linalg.eigvalsh(op.entries)


@dataclass(frozen=True)
class SpectrumReport:
    """Eigenvalues of the level Hamiltonian against the exact ladder values."""

    cutoffs: Cutoffs
    eigenvalues: list[float]
    expected: list[float]
    max_abs_error: float
    degeneracy_table: dict[int, int]
    hl_commutes: bool
    ok: bool

    def as_dict(self) -> dict:
        return {
            "N": self.cutoffs.landau_cutoff,
            "J": self.cutoffs.degeneracy_cutoff,
            "eigenvalues": list(self.eigenvalues),
            "expected": list(self.expected),
            "max_abs_error": self.max_abs_error,
            "degeneracy_table": {str(n): m for n, m in sorted(self.degeneracy_table.items())},
            "hl_commutes": self.hl_commutes,
            "ok": self.ok,
        }

    def table_rows(self) -> list[list]:
        spacing = self.expected[0] * 2 if self.expected else 0.0
        rows = []
        for n in sorted(self.degeneracy_table):
            rows.append([n, self.expected[0] + n * spacing, self.degeneracy_table[n]])
        return rows


def verify_spectrum(
    cutoffs: Cutoffs, units: PhysicalUnits = NATURAL, tol: float = 1e-12
) -> SpectrumReport:
    """Check levels hbar omega (n + 1/2), each (J+1)-fold, and [H, L] = 0.

    Uses the ladder-form Hamiltonian, whose truncated eigenvalues are free
    of boundary contamination; failures land in the report, not in an
    exception.
    """
    ham = build_H(cutoffs, units, form="ladder")
    ang = build_L(cutoffs, units)
    eig = hermitian_eigenvalues(ham)

    gap = level_spacing(units)
    multiplicity = cutoffs.num_degeneracy
    expected = np.repeat(gap * (np.arange(cutoffs.num_levels) + 0.5), multiplicity)
    max_abs_error = float(np.max(np.abs(eig - expected)))

    # Assign each eigenvalue to the nearest exact level.
    nearest = np.clip(np.round(eig / gap - 0.5).astype(int), 0, cutoffs.landau_cutoff)
    table = {n: int(np.sum(nearest == n)) for n in range(cutoffs.num_levels)}

    hl = commutator(ham, ang)
    hl_commutes = float(np.max(np.abs(hl.entries))) == 0.0

    ok = (
        max_abs_error <= tol * max(1.0, gap)
        and all(count == multiplicity for count in table.values())
        and hl_commutes
    )
    return SpectrumReport(
        cutoffs=cutoffs,
        eigenvalues=[float(v) for v in eig],
        expected=[float(v) for v in expected],
        max_abs_error=max_abs_error,
        degeneracy_table=table,
        hl_commutes=hl_commutes,
        ok=ok,
    )
