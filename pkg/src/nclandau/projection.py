"""Level projection and the projected coordinate commutator.

Projecting the planar coordinates onto the lowest ``keep+1`` levels and
commuting the projected operators produces a matrix that vanishes
everywhere except on the diagonal of the topmost kept level, where every
(interior-j) element equals -i (keep+1) hbar c / eB. On the full truncated
space the same commutator vanishes on all doubly-interior diagonal
elements: the noncommutativity lives entirely on the truncation boundary.

The degeneracy cutoff J is a numerical necessity only: the degeneracy
direction is physically infinite. Results at j < J are exact because the
coordinate operators shift j by at most one; elements touching j = J are
truncation artifacts of the finite degeneracy and are reported separately
(``boundary_artifacts``), never asserted against physical values.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .fock import BasisIndex, Cutoffs, OperatorMatrix, commutator, matmul
from .ladder import build_xy
from .units import NATURAL, PhysicalUnits, magnetic_length

__all__ = [
    "DEFAULT_TOLERANCE",
    "CommutatorReport",
    "projector",
    "project",
    "projected_commutator_xy",
    "full_space_scan",
    "full_space_boundary",
    "sweep",
]

# Absolute tolerance, in units of ell^2, for "vanishes up to rounding".
DEFAULT_TOLERANCE = 1e-12


@dataclass(frozen=True)
class CommutatorReport:
    """Outcome of one projected-commutator computation.

    ``top_coefficient`` is the common diagonal matrix element at the top
    kept level (interior j only); it scales with ell^2 = hbar c / eB, so in
    natural units it should be -i (keep+1). ``max_offtop_residual`` is the
    largest magnitude found anywhere else in the interior of the kept
    block and should vanish. ``boundary_artifacts`` lists the degeneracy-
    boundary elements excluded from both. ``top_uniform`` is cleared when
    the top diagonal is not constant across interior j, which signals an
    indexing bug rather than physics; it is a flag rather than an
    exception so sweeps always complete and emit diagnostics.
    """

    cutoffs: Cutoffs
    keep_levels: int
    top_coefficient: complex
    max_offtop_residual: float
    boundary_artifacts: list = field(default_factory=list)
    top_uniform: bool = True
    ok: bool = True

    def as_dict(self) -> dict:
        return {
            "N": self.cutoffs.landau_cutoff,
            "J": self.cutoffs.degeneracy_cutoff,
            "keep": self.keep_levels,
            "top_coefficient": [self.top_coefficient.real, self.top_coefficient.imag],
            "max_offtop_residual": self.max_offtop_residual,
            "boundary_artifacts": [
                {
                    "row": [row.n, row.j],
                    "col": [col.n, col.j],
                    "value": [value.real, value.imag],
                }
                for row, col, value in self.boundary_artifacts
            ],
            "ok": self.ok,
        }

    @staticmethod
    def csv_header() -> list[str]:
        return ["keep", "re", "im", "residual"]

    def csv_row(self) -> list:
        return [
            self.keep_levels,
            self.top_coefficient.real,
            self.top_coefficient.imag,
            self.max_offtop_residual,
        ]


def projector(cutoffs: Cutoffs, keep: int) -> OperatorMatrix:
    """Diagonal 0/1 matrix selecting all states with n <= keep."""
    if not 0 <= keep <= cutoffs.landau_cutoff:
        raise ValueError(
            f"keep={keep} outside retained level range 0..{cutoffs.landau_cutoff}"
        )
    diag = np.zeros(cutoffs.dim)
    diag[: (keep + 1) * cutoffs.num_degeneracy] = 1.0
    return OperatorMatrix(np.diag(diag), basis=cutoffs)


def project(op: OperatorMatrix, proj: OperatorMatrix) -> OperatorMatrix:
    """Compress an operator: P.op.P."""
    return matmul(proj, matmul(op, proj))


def projected_commutator_xy(
    cutoffs: Cutoffs,
    keep: int,
    units: PhysicalUnits = NATURAL,
    tol: float = DEFAULT_TOLERANCE,
) -> CommutatorReport:
    """Commutator of the level-projected coordinates, analyzed and scored.

    Builds x and y on the full truncated basis, projects both onto the
    lowest ``keep+1`` levels, and commutes the projected matrices. Requires
    J >= 1 so the degeneracy interior (j <= J-1) is nonempty; J >= 2 gives
    a sturdier interior. The report's ``ok`` is true when the top diagonal
    is uniform, equals -i (keep+1) ell^2 to ``tol`` relative, and every
    other interior element is below ``tol`` (absolute, in ell^2 units).
    """
    if cutoffs.degeneracy_cutoff < 1:
        raise ValueError("degeneracy cutoff must be >= 1 to have an interior in j")
    x, y = build_xy(cutoffs, units)
    proj = projector(cutoffs, keep)
    comm = commutator(project(x, proj), project(y, proj))
    return analyze_projected_commutator(comm, cutoffs, keep, units, tol)


def analyze_projected_commutator(
    comm: OperatorMatrix,
    cutoffs: Cutoffs,
    keep: int,
    units: PhysicalUnits = NATURAL,
    tol: float = DEFAULT_TOLERANCE,
) -> CommutatorReport:
    """Score a commutator matrix produced by :func:`projected_commutator_xy`.

    Split out so a doctored matrix can be fed through the same analysis in
    tests; the CLI never calls this directly.
    """
    num_j = cutoffs.num_degeneracy
    J = cutoffs.degeneracy_cutoff
    ell2 = magnetic_length(units) ** 2
    entries = comm.entries

    block = entries[: (keep + 1) * num_j, : (keep + 1) * num_j]
    interior_j = np.arange(J)  # j = 0..J-1

    top_rows = keep * num_j + interior_j
    top_values = block[top_rows, top_rows]
    top_coefficient = complex(np.mean(top_values))
    top_spread = float(np.max(np.abs(top_values - top_coefficient)))
    top_uniform = top_spread <= tol * ell2

    # Interior of the kept block with the top diagonal masked out.
    interior = (np.arange(keep + 1)[:, None] * num_j + interior_j[None, :]).ravel()
    sub = block[np.ix_(interior, interior)].copy()
    d = sub.shape[0]
    diag_top = np.arange(keep * J, keep * J + J)  # positions of (keep, j<J) in `interior`
    sub[diag_top, diag_top] = 0.0
    max_offtop_residual = float(np.max(np.abs(sub))) if d else 0.0

    artifacts = []
    for n in range(keep + 1):
        row = n * num_j + J
        value = complex(block[row, row])
        if abs(value) > tol * ell2:
            artifacts.append((BasisIndex(n, J), BasisIndex(n, J), value))

    expected = -1j * (keep + 1) * ell2
    ok = (
        top_uniform
        and max_offtop_residual <= tol * ell2
        and abs(top_coefficient - expected) <= tol * abs(expected)
    )
    return CommutatorReport(
        cutoffs=cutoffs,
        keep_levels=keep,
        top_coefficient=top_coefficient,
        max_offtop_residual=max_offtop_residual,
        boundary_artifacts=artifacts,
        top_uniform=top_uniform,
        ok=ok,
    )


def full_space_scan(
    cutoffs: Cutoffs, units: PhysicalUnits = NATURAL
) -> list[tuple[int, complex]]:
    """Unprojected [x, y] diagonal on the doubly-interior region.

    Returns, for each level n <= N-1, the largest-magnitude diagonal
    element over the interior orbits j <= J-1. All returned values vanish
    up to rounding: with no level projection the commutator is a pure
    boundary effect. Empty when N = 0 or J = 0 (no doubly-interior states).
    """
    N, J = cutoffs.landau_cutoff, cutoffs.degeneracy_cutoff
    if N == 0 or J == 0:
        return []
    x, y = build_xy(cutoffs, units)
    diag = np.diag(commutator(x, y).entries)
    num_j = cutoffs.num_degeneracy
    out = []
    for n in range(N):
        values = diag[n * num_j : n * num_j + J]
        out.append((n, complex(values[np.argmax(np.abs(values))])))
    return out


def full_space_boundary(cutoffs: Cutoffs, units: PhysicalUnits = NATURAL) -> dict:
    """Diagonal [x, y] elements on the truncation edges of the full space.

    The level edge (n = N, j < J) carries -i (N+1) ell^2, the degeneracy
    edge (n < N, j = J) the compensating +i (J+1) ell^2, and the corner
    -i (N - J) ell^2. Exposed for inspection; none of these are physical
    statements about the untruncated plane.
    """
    x, y = build_xy(cutoffs, units)
    diag = np.diag(commutator(x, y).entries)
    num_j = cutoffs.num_degeneracy
    N, J = cutoffs.landau_cutoff, cutoffs.degeneracy_cutoff
    return {
        "level_edge": [complex(diag[N * num_j + j]) for j in range(J)],
        "degeneracy_edge": [complex(diag[n * num_j + J]) for n in range(N)],
        "corner": complex(diag[N * num_j + J]),
    }


def sweep(
    cutoffs: Cutoffs,
    units: PhysicalUnits = NATURAL,
    tol: float = DEFAULT_TOLERANCE,
) -> list[CommutatorReport]:
    """One projected-commutator report per keep = 0..N, in order."""
    return [
        projected_commutator_xy(cutoffs, keep, units, tol)
        for keep in range(cutoffs.num_levels)
    ]
