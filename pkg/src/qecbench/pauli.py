"""n-qubit Pauli group elements in binary symplectic form.

An operator is stored as ``i**phase_exp * prod_j X_j**x_j Z_j**z_j`` with the
x and z bit vectors packed into Python integers (bit ``j`` is qubit ``j``,
qubit 0 being the leftmost character of the string form). Multiplication and
commutation are then a handful of word operations regardless of ``n``.

>>> str(pauli_from_string("X") * pauli_from_string("Y"))
'+iZ'
>>> commutes(pauli_from_string("ZZI"), pauli_from_string("XXX"))
True
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from itertools import combinations, product

from .errors import DimensionError, PauliParseError

_PREFIXES = {
    "": 0,
    "+": 0,
    "+i": 1,
    "i": 1,
    "-": 2,
    "-i": 3,
}
_PREFIX_OUT = ("", "+i", "-", "-i")
_LETTERS = "IXZY"  # index = x | (z << 1)


def _pack(bits: Iterable[int]) -> int:
    word = 0
    for j, b in enumerate(bits):
        if b not in (0, 1, True, False):
            raise ValueError(f"bit values must be 0 or 1, got {b!r}")
        if b:
            word |= 1 << j
    return word


def _unpack(word: int, n: int) -> tuple[int, ...]:
    return tuple((word >> j) & 1 for j in range(n))


@dataclass(frozen=True)
class PauliOperator:
    """Immutable n-qubit Pauli operator ``i^phase_exp X^x Z^z``.

    ``x`` and ``z`` are bit-packed integers; use :attr:`x_bits` and
    :attr:`z_bits` for the unpacked per-qubit view.
    """

    n: int
    x: int = 0
    z: int = 0
    phase_exp: int = 0

    def __post_init__(self) -> None:
        if self.n < 1:
            raise DimensionError(f"qubit count must be positive, got {self.n}")
        limit = 1 << self.n
        if not (0 <= self.x < limit and 0 <= self.z < limit):
            raise DimensionError(f"bit vectors do not fit in {self.n} qubits")
        object.__setattr__(self, "phase_exp", self.phase_exp % 4)

    # construction ---------------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> PauliOperator:
        return cls(n)

    @classmethod
    def from_bits(
        cls, x_bits: Sequence[int], z_bits: Sequence[int], phase_exp: int = 0
    ) -> PauliOperator:
        if len(x_bits) != len(z_bits):
            raise DimensionError(
                f"x and z bit vectors differ in length ({len(x_bits)} vs {len(z_bits)})"
            )
        return cls(len(x_bits), _pack(x_bits), _pack(z_bits), phase_exp)

    @classmethod
    def single(cls, n: int, qubit: int, letter: str) -> PauliOperator:
        """Weight-one Hermitian Pauli ``letter`` on ``qubit`` (0-based)."""
        if not 0 <= qubit < n:
            raise DimensionError(f"qubit {qubit} out of range for n={n}")
        code = _LETTERS.find(letter)
        if code < 0:
            raise PauliParseError(f"invalid Pauli letter {letter!r}")
        bit = 1 << qubit
        x = bit if code & 1 else 0
        z = bit if code & 2 else 0
        return cls(n, x, z, 1 if code == 3 else 0)

    @classmethod
    def hermitian(cls, n: int, x: int, z: int) -> PauliOperator:
        """The +1-signed Hermitian operator with the given support (Y for x=z=1)."""
        return cls(n, x, z, (x & z).bit_count())

    # views ----------------------------------------------------------------

    @property
    def x_bits(self) -> tuple[int, ...]:
        return _unpack(self.x, self.n)

    @property
    def z_bits(self) -> tuple[int, ...]:
        return _unpack(self.z, self.n)

    @property
    def support(self) -> int:
        return self.x | self.z

    @property
    def weight(self) -> int:
        return self.support.bit_count()

    @property
    def y_count(self) -> int:
        return (self.x & self.z).bit_count()

    @property
    def sign_exp(self) -> int:
        """Exponent of the literal prefix ``i^s`` in front of the I/X/Y/Z string."""
        return (self.phase_exp - self.y_count) % 4

    @property
    def is_hermitian(self) -> bool:
        return self.sign_exp % 2 == 0

    @property
    def is_identity(self) -> bool:
        """True for the identity up to phase (no X or Z content)."""
        return self.x == 0 and self.z == 0

    def letters(self) -> str:
        return "".join(
            _LETTERS[((self.x >> j) & 1) | (((self.z >> j) & 1) << 1)] for j in range(self.n)
        )

    def __str__(self) -> str:
        return _PREFIX_OUT[self.sign_exp] + self.letters()

    def __repr__(self) -> str:
        return f"PauliOperator({str(self)!r})"

    # algebra --------------------------------------------------------------

    def __mul__(self, other: PauliOperator) -> PauliOperator:
        return pauli_multiply(self, other)

    def __neg__(self) -> PauliOperator:
        return PauliOperator(self.n, self.x, self.z, self.phase_exp + 2)

    def with_phase(self, phase_exp: int) -> PauliOperator:
        return PauliOperator(self.n, self.x, self.z, phase_exp)

    def unsigned(self) -> PauliOperator:
        """Drop the literal prefix, keeping the Hermitian form of the same string."""
        return PauliOperator.hermitian(self.n, self.x, self.z)

    def equal_up_to_phase(self, other: PauliOperator) -> bool:
        return self.n == other.n and self.x == other.x and self.z == other.z

    def commutes_with(self, other: PauliOperator) -> bool:
        return commutes(self, other)

    def symplectic(self) -> int:
        """Length-2n packed vector ``x | z << n`` (phase discarded)."""
        return self.x | (self.z << self.n)


def pauli_from_string(s: str) -> PauliOperator:
    """Parse a Pauli string such as ``"XIZ"``, ``"-iYY"`` or ``"+ZZI"``.

    The literal string is converted to canonical form, so every ``Y`` adds one
    to ``phase_exp`` (``Y = iXZ``).
    """
    text = s.strip().replace("−", "-")
    split = 0
    while split < len(text) and text[split] in "+-i":
        split += 1
    prefix, body = text[:split], text[split:]
    if prefix not in _PREFIXES:
        raise PauliParseError(f"invalid phase prefix {prefix!r} in {s!r}", 0)
    if not body:
        raise PauliParseError(f"empty Pauli string {s!r}")
    x = z = 0
    ys = 0
    for j, ch in enumerate(body):
        code = _LETTERS.find(ch)
        if code < 0:
            raise PauliParseError(f"invalid character {ch!r} in Pauli string {s!r}", split + j)
        if code & 1:
            x |= 1 << j
        if code & 2:
            z |= 1 << j
        if code == 3:
            ys += 1
    return PauliOperator(len(body), x, z, _PREFIXES[prefix] + ys)


def _check_same_n(a: PauliOperator, b: PauliOperator) -> None:
    if a.n != b.n:
        raise DimensionError(f"Pauli operators act on {a.n} and {b.n} qubits")


def pauli_multiply(a: PauliOperator, b: PauliOperator) -> PauliOperator:
    """Exact product ``a·b``.

    Moving each ``Z^{z_a}`` of ``a`` past the ``X^{x_b}`` of ``b`` costs a sign
    per overlapping qubit, hence the ``2·|z_a & x_b|`` phase term.
    """
    _check_same_n(a, b)
    phase = a.phase_exp + b.phase_exp + 2 * (a.z & b.x).bit_count()
    return PauliOperator(a.n, a.x ^ b.x, a.z ^ b.z, phase)


def symplectic_product(a: PauliOperator, b: PauliOperator) -> int:
    _check_same_n(a, b)
    return ((a.x & b.z).bit_count() + (a.z & b.x).bit_count()) & 1


def commutes(a: PauliOperator, b: PauliOperator) -> bool:
    return symplectic_product(a, b) == 0


def weight(a: PauliOperator) -> int:
    return a.weight


def paulis_of_weight(n: int, w: int, alphabet: str = "XYZ") -> Iterator[PauliOperator]:
    """Yield every Hermitian Pauli with exactly ``w`` non-identity sites.

    Order is lexicographic on (qubit positions, letters in ``alphabet`` order),
    which is the tie-breaking order used by lookup tables and searches.
    """
    if w == 0:
        yield PauliOperator.identity(n)
        return
    for sites in combinations(range(n), w):
        for letters in product(alphabet, repeat=w):
            x = z = 0
            for q, letter in zip(sites, letters):
                if letter in "XY":
                    x |= 1 << q
                if letter in "ZY":
                    z |= 1 << q
            yield PauliOperator.hermitian(n, x, z)
