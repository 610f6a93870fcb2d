import itertools

import numpy as np
import pytest

from bellgems.basis import build_basis, correspondence_pairs, correspondent, gem_state
from bellgems.pauli import index_to_string

SQ2 = 1.0 / np.sqrt(2.0)


def gem_state_by_summation(d, I):
    """Independent construction: explicit sum over register indices (oracle)."""
    factors = index_to_string(I, d).matrices("gem")
    psi = np.zeros(4**d, dtype=complex)
    for E, D in itertools.product(range(2**d), range(2**d)):
        amp = 1.0 + 0.0j
        for s in range(d):
            eps = (E >> (d - 1 - s)) & 1
            delta = (D >> (d - 1 - s)) & 1
            amp *= factors[s][eps, delta]
        psi[E * 2**d + D] = amp
    return psi / np.sqrt(2.0**d)


class TestBuildBasis:
    def test_d1_columns_are_bell_states(self):
        B = build_basis(1).matrix
        np.testing.assert_allclose(B[:, 0], [SQ2, 0, 0, SQ2], atol=1e-15)
        np.testing.assert_allclose(B[:, 1], [0, SQ2, SQ2, 0], atol=1e-15)
        np.testing.assert_allclose(B[:, 2], [0, SQ2, -SQ2, 0], atol=1e-15)
        np.testing.assert_allclose(B[:, 3], [SQ2, 0, 0, -SQ2], atol=1e-15)

    @pytest.mark.parametrize("d", [1, 2, 3])
    def test_orthonormal(self, d):
        B = build_basis(d).matrix
        dev = np.max(np.abs(B.conj().T @ B - np.eye(4**d)))
        assert dev <= 1e-12

    @pytest.mark.parametrize("d", [1, 2, 3])
    def test_entries_exactly_real(self, d):
        B = build_basis(d).matrix
        assert np.max(np.abs(B.imag)) == 0.0

    def test_d2_entry_pattern(self):
        B = build_basis(2).matrix
        for I in range(16):
            col = B[:, I].real
            nonzero = col[col != 0]
            assert len(nonzero) == 4
            assert np.all(np.abs(np.abs(nonzero) - 0.5) < 1e-15)

    def test_d_out_of_range(self):
        with pytest.raises(ValueError):
            build_basis(0)
        with pytest.raises(ValueError):
            build_basis(5)


class TestGemState:
    def test_d1_phi_plus(self):
        np.testing.assert_allclose(gem_state(1, 0), [SQ2, 0, 0, SQ2], atol=1e-15)

    def test_d1_singlet(self):
        np.testing.assert_allclose(gem_state(1, 2), [0, SQ2, -SQ2, 0], atol=1e-15)

    def test_d2_identity_string_state(self):
        psi = gem_state(2, 0)
        expected = np.zeros(16)
        for idx in (0b0000, 0b0101, 0b1010, 0b1111):
            expected[idx] = 0.5
        np.testing.assert_allclose(psi, expected, atol=1e-15)

    @pytest.mark.parametrize("d", [1, 2, 3])
    def test_matches_column_of_basis(self, d):
        B = build_basis(d).matrix
        for I in range(4**d):
            np.testing.assert_allclose(gem_state(d, I), B[:, I], atol=1e-15)

    @pytest.mark.parametrize("d", [1, 2])
    def test_matches_summation_oracle(self, d):
        for I in range(4**d):
            np.testing.assert_allclose(
                gem_state(d, I), gem_state_by_summation(d, I), atol=1e-14
            )

    def test_unit_norm(self):
        for d in (1, 2, 3):
            for I in range(4**d):
                assert np.linalg.norm(gem_state(d, I)) == pytest.approx(1.0, abs=1e-14)

    def test_index_out_of_range(self):
        with pytest.raises(ValueError):
            gem_state(1, 4)


class TestCorrespondent:
    @pytest.mark.parametrize("i,d,expected", [(1, 2, 3), (3, 2, 1), (2, 1, 1)])
    def test_examples(self, i, d, expected):
        assert correspondent(i, d) == expected

    @pytest.mark.parametrize("d", [1, 2, 3, 4])
    def test_involution_without_fixed_points(self, d):
        for i in range(1, 2 * d + 1):
            j = correspondent(i, d)
            assert j != i
            assert correspondent(j, d) == i

    def test_pairs_cover_all_sites(self):
        for d in (1, 2, 3, 4):
            pairs = correspondence_pairs(d)
            seen = sorted(s for p in pairs for s in p)
            assert seen == list(range(1, 2 * d + 1))

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            correspondent(0, 2)
        with pytest.raises(ValueError):
            correspondent(5, 2)
