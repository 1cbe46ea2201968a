import itertools

import numpy as np
import pytest

from qecbench.dense import pauli_matrix
from qecbench.errors import DimensionError, PauliParseError
from qecbench.pauli import (
    PauliOperator,
    commutes,
    pauli_from_string,
    pauli_multiply,
    paulis_of_weight,
    weight,
)

P = pauli_from_string


def random_pauli(rng, n):
    x = int(rng.integers(0, 1 << n))
    z = int(rng.integers(0, 1 << n))
    return PauliOperator(n, x, z, int(rng.integers(0, 4)))


class TestParsing:
    def test_identity(self):
        p = P("III")
        assert p.n == 3
        assert (p.x, p.z, p.phase_exp) == (0, 0, 0)

    def test_y_carries_phase(self):
        p = P("Y")
        assert p.x_bits == (1,) and p.z_bits == (1,)
        assert p.phase_exp == 1

    def test_direct_encoding(self):
        p = P("ZIZ")
        assert p.x_bits == (0, 0, 0)
        assert p.z_bits == (1, 0, 1)
        assert p.phase_exp == 0

    @pytest.mark.parametrize(
        "text, phase",
        [("+X", 0), ("-X", 2), ("+iX", 1), ("-iX", 3), ("−X", 2), ("−iY", 0), ("-Y", 3)],
    )
    def test_prefixes(self, text, phase):
        assert P(text).phase_exp == phase

    def test_invalid_character_reports_position(self):
        with pytest.raises(PauliParseError) as info:
            P("XIQZ")
        assert info.value.position == 2

    def test_invalid_character_after_prefix(self):
        with pytest.raises(PauliParseError) as info:
            P("-iXa")
        assert info.value.position == 3

    @pytest.mark.parametrize("text", ["", "+", "-i"])
    def test_empty(self, text):
        with pytest.raises(PauliParseError):
            P(text)

    @pytest.mark.parametrize("text", ["XIZ", "-YY", "+iZ", "-iXYZ", "IIII", "Y"])
    def test_render_round_trip(self, text):
        assert str(P(text)) == text
        assert P(str(P(text))) == P(text)

    def test_render_drops_plus(self):
        assert str(P("+XZ")) == "XZ"


class TestMultiply:
    def test_x_times_y(self):
        r = P("X") * P("Y")
        assert (r.phase_exp, r.x_bits, r.z_bits) == (1, (0,), (1,))
        assert str(r) == "+iZ"

    def test_y_times_x(self):
        assert P("Y") * P("X") == P("-iZ")

    def test_identity_is_neutral(self):
        rng = np.random.default_rng(1)
        for _ in range(50):
            p = random_pauli(rng, 4)
            assert PauliOperator.identity(4) * p == p
            assert p * PauliOperator.identity(4) == p

    def test_stabilizer_product(self):
        r = P("ZZI") * P("IZZ")
        assert r == P("ZIZ")
        assert r.phase_exp == 0

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionError):
            pauli_multiply(P("XX"), P("X"))

    @pytest.mark.parametrize(
        "a, b, expected",
        [
            ("X", "Y", "+iZ"), ("Y", "Z", "+iX"), ("Z", "X", "+iY"),
            ("Y", "X", "-iZ"), ("Z", "Y", "-iX"), ("X", "Z", "-iY"),
            ("X", "X", "I"), ("Y", "Y", "I"), ("Z", "Z", "I"),
        ],
    )
    def test_single_qubit_table(self, a, b, expected):
        assert P(a) * P(b) == P(expected)


class TestCommutesAndWeight:
    def test_known_pairs(self):
        assert commutes(P("ZZI"), P("XXX"))
        assert not commutes(P("ZIZ"), P("YII"))

    def test_self_commutation(self):
        rng = np.random.default_rng(2)
        for _ in range(50):
            p = random_pauli(rng, 6)
            assert commutes(p, p)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionError):
            commutes(P("XX"), P("XXX"))

    @pytest.mark.parametrize("text, w", [("III", 0), ("XXXXXXIII", 6), ("XIZ", 2), ("YYY", 3)])
    def test_weight(self, text, w):
        assert weight(P(text)) == w


class TestGroupProperties:
    rng = np.random.default_rng(20240517)

    def test_closure(self):
        for _ in range(200):
            a, b = random_pauli(self.rng, 7), random_pauli(self.rng, 7)
            c = a * b
            assert c.n == 7 and c.phase_exp in (0, 1, 2, 3)

    def test_associativity(self):
        for _ in range(200):
            a, b, c = (random_pauli(self.rng, 6) for _ in range(3))
            assert (a * b) * c == a * (b * c)

    def test_anticommutation_sign(self):
        for _ in range(300):
            a, b = random_pauli(self.rng, 5), random_pauli(self.rng, 5)
            ab, ba = a * b, b * a
            assert ab.equal_up_to_phase(ba)
            shift = (ab.phase_exp - ba.phase_exp) % 4
            assert shift == (0 if commutes(a, b) else 2)

    def test_squares(self):
        for _ in range(200):
            p = random_pauli(self.rng, 5)
            sq = p * p
            assert sq.is_identity
            assert sq.phase_exp in (0, 2)
            if p.is_hermitian:
                assert sq == PauliOperator.identity(5)

    def test_large_n_packed(self):
        # Word packing must not limit n.
        a = PauliOperator.hermitian(300, (1 << 299) | 1, 0)
        b = PauliOperator.hermitian(300, 0, 1 << 299)
        assert not commutes(a, b)
        assert (a * b).letters() == "X" + "I" * 298 + "Y"
        assert (a * b).weight == 2


class TestDenseOracle:
    """Symplectic arithmetic against explicit Kronecker-product matrices."""

    def test_all_two_qubit_pairs(self):
        ops = [P(a + b) for a in "IXYZ" for b in "IXYZ"]
        for a, b in itertools.product(ops, repeat=2):
            ma, mb = pauli_matrix(a), pauli_matrix(b)
            np.testing.assert_allclose(ma @ mb, pauli_matrix(a * b), atol=1e-12)
            dense_commute = np.allclose(ma @ mb, mb @ ma, atol=1e-12)
            assert dense_commute == commutes(a, b)

    def test_random_five_qubit_pairs(self):
        rng = np.random.default_rng(5)
        for _ in range(200):
            a, b = random_pauli(rng, 5), random_pauli(rng, 5)
            ma, mb = pauli_matrix(a), pauli_matrix(b)
            np.testing.assert_allclose(ma @ mb, pauli_matrix(a * b), atol=1e-12)
            assert np.allclose(ma @ mb, mb @ ma, atol=1e-12) == commutes(a, b)

    def test_hermitian_flag_matches_matrix(self):
        rng = np.random.default_rng(6)
        for _ in range(100):
            p = random_pauli(rng, 3)
            m = pauli_matrix(p)
            assert np.allclose(m, m.conj().T) == p.is_hermitian


def test_paulis_of_weight_order_and_count():
    ops = list(paulis_of_weight(3, 1))
    assert [str(p) for p in ops[:4]] == ["XII", "YII", "ZII", "IXI"]
    assert len(list(paulis_of_weight(5, 2))) == 10 * 9
    assert [str(p) for p in paulis_of_weight(2, 0)] == ["II"]
