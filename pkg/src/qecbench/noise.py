"""Pauli noise, lookup-table decoding and residual classification."""

from __future__ import annotations

import enum
from collections.abc import Sequence
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

import numpy as np

from .errors import CapacityError, DimensionError, DomainError
from .pauli import PauliOperator
from .stabilizer import ENUMERATION_GUARD, StabilizerCode, Syndrome, weighted_supports

CHANNEL_ALPHABETS = {"bit_flip": "X", "phase_flip": "Z", "depolarizing": "XYZ"}
DEFAULT_TABLE_WEIGHT = 2

SeedLike = int | np.random.Generator | np.random.SeedSequence | None


def _check_kind(kind: str) -> str:
    if kind not in CHANNEL_ALPHABETS:
        raise DomainError(
            f"unknown channel {kind!r}; expected one of {', '.join(CHANNEL_ALPHABETS)}"
        )
    return kind


@dataclass(frozen=True)
class NoiseChannel:
    """i.i.d. single-qubit Pauli noise with per-qubit error probability ``p``.

    ``depolarizing`` picks X, Y or Z with probability ``p/3`` each.
    """

    kind: str
    p: float

    def __post_init__(self) -> None:
        _check_kind(self.kind)
        if not 0.0 <= self.p <= 1.0:
            raise DomainError(f"error probability must lie in [0, 1], got {self.p}")


def sample_error_arrays(
    ch: NoiseChannel, n: int, count: int, rng: np.random.Generator
) -> tuple[np.ndarray, np.ndarray]:
    """Draw ``count`` errors as ``(x, z)`` uint8 arrays of shape ``(count, n)``.

    Column ``j`` is qubit ``j``. Two draws per qubit: one uniform deciding
    whether an error occurs, and (depolarizing only) one integer choosing
    X/Y/Z.
    """
    hit = rng.random((count, n)) < ch.p
    if ch.kind == "bit_flip":
        return hit.astype(np.uint8), np.zeros((count, n), dtype=np.uint8)
    if ch.kind == "phase_flip":
        return np.zeros((count, n), dtype=np.uint8), hit.astype(np.uint8)
    letter = rng.integers(0, 3, size=(count, n))  # 0 = X, 1 = Y, 2 = Z
    x = hit & (letter <= 1)
    z = hit & (letter >= 1)
    return x.astype(np.uint8), z.astype(np.uint8)


def sample_error(ch: NoiseChannel, n: int, rng_seed: SeedLike = None) -> PauliOperator:
    if n < 1:
        raise DomainError(f"qubit count must be positive, got {n}")
    x, z = sample_error_arrays(ch, n, 1, np.random.default_rng(rng_seed))
    return PauliOperator.from_bits(x[0].tolist(), z[0].tolist()).unsigned()


@dataclass(frozen=True, eq=False)
class SyndromeTable:
    """Syndrome -> minimum-weight correction, for one code and Pauli alphabet."""

    code: StabilizerCode
    channel_kind: str
    entries: dict[Syndrome, PauliOperator]

    @property
    def coverage(self) -> float:
        return len(self.entries) / (1 << self.code.r)

    def __len__(self) -> int:
        return len(self.entries)

    def get(self, s: Syndrome) -> PauliOperator | None:
        return self.entries.get(s)

    def dump(self) -> str:
        """Text lines ``bits<TAB>pauli`` in increasing syndrome order."""
        rows = sorted(self.entries.items(), key=lambda kv: kv[0].bits)
        return "".join(f"{s}\t{p}\n" for s, p in rows)

    @cached_property
    def lookup_arrays(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Dense ``(present, x, z)`` arrays indexed by :attr:`Syndrome.key`."""
        size = 1 << self.code.r
        n = self.code.n
        present = np.zeros(size, dtype=bool)
        cx = np.zeros((size, n), dtype=np.uint8)
        cz = np.zeros((size, n), dtype=np.uint8)
        for s, p in self.entries.items():
            present[s.key] = True
            cx[s.key] = p.x_bits
            cz[s.key] = p.z_bits
        return present, cx, cz


def build_table(
    code: StabilizerCode, channel_kind: str, max_weight: int = DEFAULT_TABLE_WEIGHT
) -> SyndromeTable:
    """Populate a lookup table by searching errors in increasing weight.

    Within one weight the first error reached in (qubit index, X<Y<Z) order
    wins. Syndromes no error of weight <= ``max_weight`` reaches stay absent.
    """
    alphabet = CHANNEL_ALPHABETS[_check_kind(channel_kind)]
    if code.r > ENUMERATION_GUARD:
        raise CapacityError(f"{code.r} generators exceed the table guard of {ENUMERATION_GUARD}")
    n, r = code.n, code.r
    found: dict[int, tuple[int, int]] = {0: (0, 0)}
    full = 1 << r
    for w in range(1, max_weight + 1):
        if len(found) == full:
            break
        for x, z in weighted_supports(n, w, alphabet):
            found.setdefault(code.syndrome_key(x, z), (x, z))
    entries = {
        Syndrome(tuple((key >> i) & 1 for i in range(r))): PauliOperator.hermitian(n, x, z)
        for key, (x, z) in sorted(found.items())
    }
    return SyndromeTable(code, channel_kind, entries)


class DecodeResult(NamedTuple):
    correction: PauliOperator
    uncorrectable: bool


def decode(table: SyndromeTable, s: Syndrome | Sequence[int]) -> DecodeResult:
    """Look up the correction; unknown syndromes give the identity, flagged."""
    if not isinstance(s, Syndrome):
        s = Syndrome(tuple(s))
    if len(s) != table.code.r:
        raise DimensionError(f"syndrome has {len(s)} bits, code has {table.code.r} generators")
    correction = table.entries.get(s)
    if correction is None:
        return DecodeResult(PauliOperator.identity(table.code.n), True)
    return DecodeResult(correction, False)


class Outcome(str, enum.Enum):
    SUCCESS = "success"
    LOGICAL_FAILURE = "logical_failure"
    DETECTED = "detected"


def classify_residual(code: StabilizerCode, residual: PauliOperator) -> Outcome:
    """Classify the net Pauli left after correction."""
    if residual.n != code.n:
        raise DimensionError(f"residual acts on {residual.n} qubits, code on {code.n}")
    if code.syndrome_key(residual.x, residual.z):
        return Outcome.DETECTED
    if code.contains(residual):
        return Outcome.SUCCESS
    return Outcome.LOGICAL_FAILURE
