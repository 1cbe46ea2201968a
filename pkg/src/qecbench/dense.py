"""Dense state-vector oracle for small codes.

Basis index convention: qubit 0 (leftmost in Pauli strings) is the most
significant bit of the amplitude index, so ``|i1 i2 ... in>`` has index
``int("i1i2...in", 2)``.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from functools import reduce

import numpy as np

from .catalog import catalog
from .errors import CapacityError, DimensionError, DomainError, UnknownCodeError
from .noise import build_table, decode
from .pauli import PauliOperator, pauli_from_string
from .stabilizer import StabilizerCode, Syndrome

DENSE_GUARD = 12
NORM_TOL = 1e-10

_I2 = np.eye(2, dtype=complex)
_X = np.array([[0, 1], [1, 0]], dtype=complex)
_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
_Z = np.array([[1, 0], [0, -1]], dtype=complex)
_H = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)
_S = np.array([[1, 0], [0, 1j]], dtype=complex)
_T = np.array([[1, 0], [0, np.exp(1j * np.pi / 4)]], dtype=complex)

SINGLE_QUBIT_GATES = {"H": _H, "S": _S, "T": _T, "X": _X, "Y": _Y, "Z": _Z}
TWO_QUBIT_GATES = ("CNOT", "CZ")
_LETTER_MATRICES = {"I": _I2, "X": _X, "Y": _Y, "Z": _Z}
_PREFIX_PHASE = {"": 1, "+i": 1j, "-": -1, "-i": -1j}


def _guard(n: int) -> None:
    if n > DENSE_GUARD:
        raise CapacityError(f"dense simulation limited to {DENSE_GUARD} qubits, got {n}")


@dataclass(frozen=True, eq=False)
class StateVector:
    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        amps = np.asarray(self.amplitudes, dtype=complex).reshape(-1)
        n = int(amps.size).bit_length() - 1
        if n < 1 or amps.size != 1 << n:
            raise DimensionError(f"amplitude count {amps.size} is not a power of two >= 2")
        _guard(n)
        norm = np.linalg.norm(amps)
        if abs(norm - 1) > NORM_TOL:
            raise DomainError(f"state is not normalized (norm {norm:.12g})")
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    @property
    def n(self) -> int:
        return self.amplitudes.size.bit_length() - 1

    @classmethod
    def basis(cls, bits: str) -> StateVector:
        amps = np.zeros(1 << len(bits), dtype=complex)
        amps[int(bits, 2)] = 1
        return cls(amps)

    @classmethod
    def zeros(cls, n: int) -> StateVector:
        return cls.basis("0" * n)

    @classmethod
    def normalized(cls, amplitudes: np.ndarray) -> StateVector:
        amps = np.asarray(amplitudes, dtype=complex)
        norm = np.linalg.norm(amps)
        if norm == 0:
            raise DomainError("cannot normalize the zero vector")
        return cls(amps / norm)

    def inner(self, other: StateVector) -> complex:
        return complex(np.vdot(self.amplitudes, other.amplitudes))

    def fidelity(self, other: StateVector) -> float:
        """``|<self|other>|``; insensitive to global phase."""
        return abs(self.inner(other))

    def tensor(self, other: StateVector) -> StateVector:
        return StateVector(np.kron(self.amplitudes, other.amplitudes))


@dataclass(frozen=True)
class GateOp:
    kind: str
    targets: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "targets", tuple(self.targets))
        if self.kind in SINGLE_QUBIT_GATES:
            arity = 1
        elif self.kind in TWO_QUBIT_GATES:
            arity = 2
        else:
            raise DomainError(f"unknown gate kind {self.kind!r}")
        if len(self.targets) != arity:
            raise DomainError(f"{self.kind} takes {arity} qubit(s), got {self.targets}")
        if len(set(self.targets)) != arity:
            raise DomainError(f"{self.kind} targets must be distinct, got {self.targets}")


def _as_tensor(state: StateVector) -> np.ndarray:
    return state.amplitudes.reshape((2,) * state.n)


def apply_gate(state: StateVector, g: GateOp) -> StateVector:
    """Apply ``g``; for CNOT the first target is the control."""
    n = state.n
    for q in g.targets:
        if not 0 <= q < n:
            raise DimensionError(f"qubit {q} out of range for {n}-qubit state")
    psi = _as_tensor(state).copy()
    if g.kind in SINGLE_QUBIT_GATES:
        (q,) = g.targets
        psi = np.moveaxis(np.tensordot(SINGLE_QUBIT_GATES[g.kind], psi, axes=([1], [q])), 0, q)
    elif g.kind == "CNOT":
        c, t = g.targets
        idx: list = [slice(None)] * n
        idx[c] = 1
        sub = psi[tuple(idx)]
        t_axis = t - (1 if t > c else 0)
        psi[tuple(idx)] = np.flip(sub, axis=t_axis)
    else:  # CZ
        a, b = g.targets
        idx = [slice(None)] * n
        idx[a] = 1
        idx[b] = 1
        psi[tuple(idx)] *= -1
    return StateVector(psi.reshape(-1))


def run_circuit(state: StateVector, gates: Sequence[GateOp]) -> StateVector:
    return reduce(apply_gate, gates, state)


def _index_masks(p: PauliOperator) -> tuple[int, int]:
    """Pauli x/z words re-expressed in amplitude-index bit order."""
    n = p.n
    xm = zm = 0
    for j in range(n):
        bit = 1 << (n - 1 - j)
        if (p.x >> j) & 1:
            xm |= bit
        if (p.z >> j) & 1:
            zm |= bit
    return xm, zm


def _parity(values: np.ndarray) -> np.ndarray:
    out = np.zeros(values.shape, dtype=np.int64)
    v = values.copy()
    while v.any():
        out ^= v & 1
        v >>= 1
    return out


def _pauli_action(amps: np.ndarray, p: PauliOperator) -> np.ndarray:
    """``i^l X^x Z^z`` applied along axis 0 of ``amps`` (vector or matrix)."""
    xm, zm = _index_masks(p)
    idx = np.arange(amps.shape[0])
    signs = 1 - 2 * _parity(idx & zm)
    phase = 1j**p.phase_exp
    out = np.empty_like(amps)
    scaled = amps * (phase * signs).reshape((-1,) + (1,) * (amps.ndim - 1))
    out[idx ^ xm] = scaled
    return out


def apply_pauli(state: StateVector, p: PauliOperator) -> StateVector:
    """Exact action of ``p`` on ``state``, global phase included."""
    if p.n != state.n:
        raise DimensionError(f"Pauli acts on {p.n} qubits, state has {state.n}")
    return StateVector(_pauli_action(state.amplitudes, p))


def pauli_matrix(p: PauliOperator | str) -> np.ndarray:
    """Dense matrix built from the literal I/X/Y/Z string and its prefix.

    This deliberately goes through the printed form rather than the symplectic
    words, so it can serve as an independent check of the Pauli algebra.
    """
    text = str(p)
    letters = text.lstrip("+-i")
    prefix = text[: len(text) - len(letters)]
    _guard(len(letters))
    mat = reduce(np.kron, (_LETTER_MATRICES[c] for c in letters))
    return _PREFIX_PHASE[prefix] * mat


def codespace_projector(code: StabilizerCode) -> np.ndarray:
    """``prod_i (I + g_i) / 2`` as a dense ``2^n x 2^n`` matrix."""
    _guard(code.n)
    proj = np.eye(1 << code.n, dtype=complex)
    for g in code.generators:
        proj = (proj + _pauli_action(proj, g)) / 2
    return proj


def _codespace_basis(code: StabilizerCode) -> np.ndarray:
    """Orthonormal columns spanning the code space."""
    vals, vecs = np.linalg.eigh(codespace_projector(code))
    return vecs[:, vals > 0.5]


# |0_L> is the +1 eigenstate of FIX inside the code space; |1_L> = FLIP |0_L>.
# For Shor's code this gives (|000> + |111>)^3 and (|000> - |111>)^3.
_LOGICAL_FIX = {
    "shor9": "XXXXXXXXX",
    "steane7": "ZZZZZZZ",
    "five_qubit": "ZZZZZ",
}
_LOGICAL_FLIP = {
    "shor9": "ZZZZZZZZZ",
    "steane7": "XXXXXXX",
    "five_qubit": "XXXXX",
}


def logical_basis(code_name: str) -> tuple[StateVector, StateVector]:
    """``(|0_L>, |1_L>)`` for a catalog code."""
    if code_name == "bit_flip":
        return StateVector.basis("000"), StateVector.basis("111")
    if code_name == "phase_flip":
        plus = np.full(8, 1 / np.sqrt(8), dtype=complex)
        minus = plus * np.array([(-1) ** bin(i).count("1") for i in range(8)])
        return StateVector(plus), StateVector(minus)
    if code_name not in _LOGICAL_FLIP:
        raise UnknownCodeError(f"no encoder for code {code_name!r}")
    code = catalog(code_name)
    fix = pauli_matrix(pauli_from_string(_LOGICAL_FIX[code_name]))
    proj = codespace_projector(code) @ (np.eye(1 << code.n) + fix) / 2
    zero = StateVector.normalized(proj[:, np.argmax(np.linalg.norm(proj, axis=0))])
    return zero, apply_pauli(zero, pauli_from_string(_LOGICAL_FLIP[code_name]))


def encode(code_name: str, alpha: complex, beta: complex) -> StateVector:
    """``alpha|0_L> + beta|1_L>`` for the named catalog code."""
    norm = abs(alpha) ** 2 + abs(beta) ** 2
    if abs(norm - 1) > NORM_TOL:
        raise DomainError(f"|alpha|^2 + |beta|^2 = {norm:.12g}, expected 1")
    zero, one = logical_basis(code_name)
    return StateVector(alpha * zero.amplitudes + beta * one.amplitudes)


def encoding_circuit(code_name: str) -> list[GateOp]:
    """Encoders for the 3-qubit codes: input on qubit 0, ancillas 1 and 2 in |0>."""
    gates = [GateOp("CNOT", (0, 1)), GateOp("CNOT", (0, 2))]
    if code_name == "bit_flip":
        return gates
    if code_name == "phase_flip":
        return gates + [GateOp("H", (q,)) for q in range(3)]
    raise UnknownCodeError(f"no encoding circuit for {code_name!r}")


def encode_with_circuit(code_name: str, alpha: complex, beta: complex) -> StateVector:
    data = StateVector(np.array([alpha, beta], dtype=complex))
    return run_circuit(data.tensor(StateVector.zeros(2)), encoding_circuit(code_name))


def measure_stabilizer(
    state: StateVector, g: PauliOperator, rng_seed: int | np.random.Generator | None = None
) -> tuple[int, StateVector]:
    """Projective measurement of Hermitian ``g``; returns (outcome, post-state)."""
    if g.n != state.n:
        raise DimensionError(f"observable acts on {g.n} qubits, state has {state.n}")
    if not g.is_hermitian:
        raise DomainError(f"{g} is not Hermitian and cannot be measured")
    psi = state.amplitudes
    g_psi = _pauli_action(psi, g)
    plus = (psi + g_psi) / 2
    p_plus = float(np.vdot(plus, plus).real)
    rng = np.random.default_rng(rng_seed)
    if p_plus >= 1 - 1e-12:
        return 1, StateVector.normalized(plus)
    if p_plus <= 1e-12:
        return -1, StateVector.normalized((psi - g_psi) / 2)
    if rng.random() < p_plus:
        return 1, StateVector.normalized(plus)
    return -1, StateVector.normalized((psi - g_psi) / 2)


def measure_syndrome(
    code: StabilizerCode, state: StateVector, rng_seed: int | np.random.Generator | None = None
) -> tuple[Syndrome, StateVector]:
    """Measure every generator in order, returning the syndrome and collapsed state."""
    rng = np.random.default_rng(rng_seed)
    outcomes = []
    for g in code.generators:
        outcome, state = measure_stabilizer(state, g, rng)
        outcomes.append(outcome)
    return Syndrome.from_outcomes(outcomes), state


# Syndrome circuit layout: data qubits 0-2, ancillas 3 (checks Z0Z1) and 4 (checks Z1Z2).
SYNDROME_CIRCUIT = (
    GateOp("CNOT", (0, 3)),
    GateOp("CNOT", (1, 3)),
    GateOp("CNOT", (1, 4)),
    GateOp("CNOT", (2, 4)),
)
# Ancilla outcome pair -> qubit (0-based) that receives an X correction.
BIT_FLIP_CORRECTIONS = {(1, 1): None, (1, -1): 2, (-1, 1): 0, (-1, -1): 1}


def extract_bit_flip_syndrome(
    state: StateVector, rng_seed: int | np.random.Generator | None = None
) -> tuple[tuple[int, int], StateVector]:
    """Run the ancilla-based syndrome circuit on a 3-qubit state and correct it.

    Returns the ancilla outcomes (+1/-1 for Z measurements reading 0/1) and the
    corrected 3-qubit data state.
    """
    if state.n != 3:
        raise DimensionError("the bit-flip syndrome circuit acts on 3 data qubits")
    rng = np.random.default_rng(rng_seed)
    full = run_circuit(state.tensor(StateVector.zeros(2)), SYNDROME_CIRCUIT)
    outcomes = []
    for anc in (3, 4):
        outcome, full = measure_stabilizer(full, PauliOperator.single(5, anc, "Z"), rng)
        outcomes.append(outcome)
    # Ancillas are now in a definite basis state; read the data register off it.
    anc_bits = "".join("0" if o == 1 else "1" for o in outcomes)
    data = full.amplitudes.reshape(8, 4)[:, int(anc_bits, 2)]
    corrected = StateVector.normalized(data)
    target = BIT_FLIP_CORRECTIONS[tuple(outcomes)]
    if target is not None:
        corrected = apply_pauli(corrected, PauliOperator.single(3, target, "X"))
    return (outcomes[0], outcomes[1]), corrected


@dataclass(frozen=True, eq=False)
class KLReport:
    """Result of a Knill-Laflamme test.

    ``alpha[i, j] = tr(P E_i^dag E_j P) / 2^k``; ``projection_residual`` is the
    largest Frobenius norm of ``P E_i^dag E_j P - alpha_ij P`` over all pairs.
    """

    alpha: np.ndarray
    hermitian_deviation: float
    projection_residual: float
    correctable: bool


def kl_check(
    code: StabilizerCode,
    errors: Sequence[PauliOperator | np.ndarray],
    residual_tol: float = 1e-8,
    hermitian_tol: float = 1e-10,
) -> KLReport:
    """Test ``P E_i^dag E_j P = alpha_ij P`` for every pair of errors.

    With ``V`` an orthonormal basis of the code space this is equivalent to
    ``V^dag E_i^dag E_j V = alpha_ij I``, which is what gets evaluated.
    """
    _guard(code.n)
    dim = 1 << code.n
    basis = _codespace_basis(code)
    images = []
    for e in errors:
        if isinstance(e, PauliOperator):
            if e.n != code.n:
                raise DimensionError(f"error {e} acts on {e.n} qubits, code on {code.n}")
            images.append(_pauli_action(basis, e))
        else:
            mat = np.asarray(e, dtype=complex)
            if mat.shape != (dim, dim):
                raise DimensionError(f"dense error has shape {mat.shape}, expected {(dim, dim)}")
            images.append(mat @ basis)
    stacked = np.stack(images)  # (N, 2^n, 2^k)
    blocks = np.einsum("iak,jal->ijkl", stacked.conj(), stacked)
    kdim = basis.shape[1]
    alpha = np.trace(blocks, axis1=2, axis2=3) / kdim
    deviation = blocks - alpha[:, :, None, None] * np.eye(kdim)
    residual = float(np.sqrt((np.abs(deviation) ** 2).sum(axis=(2, 3))).max())
    herm = float(np.abs(alpha - alpha.conj().T).max())
    return KLReport(alpha, herm, residual, residual <= residual_tol and herm <= hermitian_tol)


def single_qubit_error(
    state: StateVector, qubit: int, coeffs: Sequence[complex]
) -> StateVector:
    """Apply ``aI + bX + cY + dZ`` on one qubit and renormalize."""
    a, b, c, d = coeffs
    n = state.n
    total = a * state.amplitudes
    for coef, letter in ((b, "X"), (c, "Y"), (d, "Z")):
        if coef:
            total = total + coef * _pauli_action(state.amplitudes, PauliOperator.single(n, qubit, letter))
    return StateVector.normalized(total)


def random_unit_coefficients(rng: np.random.Generator) -> np.ndarray:
    v = rng.normal(size=4) + 1j * rng.normal(size=4)
    return v / np.linalg.norm(v)


def correct_continuous_error(
    code: str | StabilizerCode,
    corrupted: StateVector,
    rng_seed: int | np.random.Generator | None = None,
) -> StateVector:
    """Measure all generators, then apply the lookup-table correction."""
    if isinstance(code, str):
        code = catalog(code)
    elif code.name not in _LOGICAL_FLIP and code.name not in ("bit_flip", "phase_flip"):
        raise UnknownCodeError(f"continuous-error correction needs a catalog code, got {code.name!r}")
    table = build_table(code, "depolarizing")
    syndrome, collapsed = measure_syndrome(code, corrupted, rng_seed)
    correction, _ = decode(table, syndrome)
    return apply_pauli(collapsed, correction)
