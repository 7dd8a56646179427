import numpy as np
import pytest

from nclandau.fock import Cutoffs, OperatorMatrix, commutator
from nclandau.ladder import build_xy
from nclandau.spectrum import hermitian_eigenvalues, verify_spectrum
from nclandau.units import PhysicalUnits


class TestHermitianEigenvalues:
    def test_sorts_diagonal(self):
        op = OperatorMatrix(np.diag([3.0, 1.0, 2.0]))
        assert np.array_equal(hermitian_eigenvalues(op), [1.0, 2.0, 3.0])

    def test_ladder_hamiltonian_levels(self):
        from nclandau.ladder import build_H

        vals = hermitian_eigenvalues(build_H(Cutoffs(2, 1)))
        assert np.allclose(vals, [0.5, 0.5, 1.5, 1.5, 2.5, 2.5], atol=1e-13)

    def test_rejects_non_hermitian_with_deviation(self):
        op = OperatorMatrix(np.array([[0.0, 1.0], [0.0, 0.0]]))
        with pytest.raises(ValueError, match="deviation"):
            hermitian_eigenvalues(op)

    def test_commutator_over_minus_i_is_hermitian(self):
        # [x,y] is anti-Hermitian, so [x,y]/(-i) has a real spectrum
        x, y = build_xy(Cutoffs(1, 2))
        herm = (1.0 / -1j) * commutator(x, y)
        vals = hermitian_eigenvalues(herm)
        raw = np.linalg.eigvals(herm.entries)  # independent solver route
        assert np.max(np.abs(raw.imag)) < 1e-12
        assert np.allclose(vals, np.sort(raw.real), atol=1e-12)


class TestVerifySpectrum:
    def test_single_degeneracy_levels(self):
        report = verify_spectrum(Cutoffs(3, 0))
        assert np.allclose(report.eigenvalues, [0.5, 1.5, 2.5, 3.5], atol=1e-13)
        assert report.degeneracy_table == {0: 1, 1: 1, 2: 1, 3: 1}
        assert report.max_abs_error <= 1e-12
        assert report.ok

    def test_single_level_multiplicity(self):
        report = verify_spectrum(Cutoffs(0, 4))
        assert np.allclose(report.eigenvalues, [0.5] * 5, atol=1e-13)
        assert report.degeneracy_table == {0: 5}

    def test_doubling_field_doubles_spacing(self):
        report = verify_spectrum(Cutoffs(3, 0), PhysicalUnits(B=2.0))
        assert np.allclose(report.eigenvalues, [1.0, 3.0, 5.0, 7.0], atol=1e-13)
        assert report.ok

    def test_adjacent_level_gap(self):
        u = PhysicalUnits(e=2, B=3, c=4, hbar=1.5, m=0.5)
        report = verify_spectrum(Cutoffs(4, 2), u)
        distinct = sorted(set(round(v, 9) for v in report.eigenvalues))
        gaps = np.diff(distinct)
        assert np.allclose(gaps, u.hbar * u.e * u.B / (u.m * u.c), rtol=1e-12)

    def test_hl_commute_flag(self):
        assert verify_spectrum(Cutoffs(4, 3)).hl_commutes

    def test_json_dict_shape(self):
        payload = verify_spectrum(Cutoffs(1, 1)).as_dict()
        assert list(payload) == [
            "N", "J", "eigenvalues", "expected", "max_abs_error",
            "degeneracy_table", "hl_commutes", "ok",
        ]
        assert payload["degeneracy_table"] == {"0": 2, "1": 2}
