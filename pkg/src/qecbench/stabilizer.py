"""Stabilizer codes: validation, syndromes, parameters and logical operators.

Internally every Pauli is also handled as a packed symplectic vector
``x | z << n`` so that group membership and coset questions become GF(2)
span computations (:class:`~qecbench.gf2.GF2Span`).
"""

from __future__ import annotations

import warnings
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations, product
from pathlib import Path
from typing import NamedTuple

from .errors import CapacityError, ConstructionError, DimensionError, DomainError, ValidationError
from .gf2 import BinaryMatrix, GF2Span, first_incompatible_pair, gf2_nullspace
from .pauli import PauliOperator, commutes, pauli_from_string, pauli_multiply

ENUMERATION_GUARD = 20
DEFAULT_DISTANCE_CAP = 4


class DependentGeneratorsWarning(UserWarning):
    """Issued when a generator list contains redundant elements."""


@dataclass(frozen=True)
class Syndrome:
    """Anticommutation pattern of an error with the generators.

    ``bits[i] == 1`` means the error anticommutes with generator ``i``, i.e.
    measuring that generator returns -1.
    """

    bits: tuple[int, ...]

    @classmethod
    def from_string(cls, text: str) -> Syndrome:
        if set(text) - {"0", "1"}:
            raise ValueError(f"syndrome must be a 0/1 string, got {text!r}")
        return cls(tuple(int(c) for c in text))

    @classmethod
    def from_outcomes(cls, outcomes: Sequence[int]) -> Syndrome:
        if any(o not in (1, -1) for o in outcomes):
            raise ValueError(f"outcomes must be +1 or -1, got {outcomes!r}")
        return cls(tuple(int(o == -1) for o in outcomes))

    @property
    def outcomes(self) -> tuple[int, ...]:
        return tuple(-1 if b else 1 for b in self.bits)

    @property
    def key(self) -> int:
        """Packed integer form (bit ``i`` is generator ``i``)."""
        return sum(b << i for i, b in enumerate(self.bits))

    @property
    def is_trivial(self) -> bool:
        return not any(self.bits)

    def format_outcomes(self) -> str:
        return "(" + ",".join("+1" if o == 1 else "-1" for o in self.outcomes) + ")"

    def __len__(self) -> int:
        return len(self.bits)

    def __str__(self) -> str:
        return "".join(map(str, self.bits))


@dataclass(frozen=True)
class StabilizerCode:
    """A validated stabilizer code.

    Build instances with :func:`validate_generators`, :func:`css_from_parity_checks`
    or :func:`catalog`; the constructor itself performs no checks.
    """

    n: int
    k: int
    generators: tuple[PauliOperator, ...]
    logical_pairs: tuple[tuple[PauliOperator, PauliOperator], ...] = ()
    name: str | None = None
    d: int | None = None
    redundant: tuple[PauliOperator, ...] = field(default=(), compare=False)

    @property
    def r(self) -> int:
        return len(self.generators)

    @property
    def parameters(self) -> str:
        d = "?" if self.d is None else str(self.d)
        return f"[[{self.n},{self.k},{d}]]"

    @cached_property
    def _span(self) -> GF2Span:
        return GF2Span(g.symplectic() for g in self.generators)

    @cached_property
    def _check_words(self) -> tuple[tuple[int, int], ...]:
        return tuple((g.x, g.z) for g in self.generators)

    def syndrome_key(self, x: int, z: int) -> int:
        key = 0
        for i, (gx, gz) in enumerate(self._check_words):
            if ((x & gz).bit_count() + (z & gx).bit_count()) & 1:
                key |= 1 << i
        return key

    def contains(self, p: PauliOperator) -> bool:
        """Stabilizer-group membership up to global phase."""
        if p.n != self.n:
            raise DimensionError(f"operator acts on {p.n} qubits, code on {self.n}")
        return p.symplectic() in self._span

    def coset_key(self, p: PauliOperator) -> int:
        """Canonical representative of ``p``'s coset modulo the stabilizer."""
        return self._span.reduce(p.symplectic())

    def with_logicals(self) -> StabilizerCode:
        return StabilizerCode(
            self.n, self.k, self.generators, tuple(logical_operators(self)),
            self.name, self.d, self.redundant,
        )

    def with_distance(self, cap: int = DEFAULT_DISTANCE_CAP) -> StabilizerCode:
        return StabilizerCode(
            self.n, self.k, self.generators, self.logical_pairs,
            self.name, distance(self, cap), self.redundant,
        )


def _symplectic_dot(u: int, v: int, n: int) -> int:
    mask = (1 << n) - 1
    return (((u & mask) & (v >> n)).bit_count() + ((u >> n) & (v & mask)).bit_count()) & 1


def validate_generators(
    gens: Iterable[PauliOperator | str],
    *,
    n: int | None = None,
    name: str | None = None,
) -> StabilizerCode:
    """Check that ``gens`` generate a stabilizer group and return the code.

    Generators must be Hermitian, pairwise commuting, and must not generate
    ``-I``. Redundant generators are dropped (with a
    :class:`DependentGeneratorsWarning`) and recorded in ``code.redundant``.
    ``n`` is only needed for an empty generator list.
    """
    ops = [pauli_from_string(g) if isinstance(g, str) else g for g in gens]
    if not ops:
        if n is None:
            raise ValidationError("generator list is empty")
        return StabilizerCode(n, n, (), name=name)
    n = ops[0].n if n is None else n
    for i, g in enumerate(ops):
        if g.n != n:
            raise DimensionError(f"generator {i} ({g}) acts on {g.n} qubits, expected {n}")
        if not g.is_hermitian:
            raise ValidationError(f"generator {i} ({g}) is not Hermitian; its square is -I")
        if g.is_identity and g.sign_exp == 2:
            raise ValidationError(f"generator {i} is -I")
    for (i, a), (j, b) in combinations(enumerate(ops), 2):
        if not commutes(a, b):
            raise ValidationError(f"generators {i} ({a}) and {j} ({b}) anticommute")

    # Elimination carrying, for each basis row, the set of generators it is the product of.
    basis: dict[int, tuple[int, int]] = {}  # pivot -> (vector, generator mask)
    independent: list[int] = []
    redundant: list[int] = []
    for i, g in enumerate(ops):
        v, combo = g.symplectic(), 1 << i
        while v:
            pivot = v.bit_length() - 1
            if pivot not in basis:
                break
            bv, bc = basis[pivot]
            v, combo = v ^ bv, combo ^ bc
        if v:
            basis[v.bit_length() - 1] = (v, combo)
            independent.append(i)
            continue
        # combo now names a set of generators (including g) whose product is ±I
        prod = PauliOperator.identity(n)
        for j in range(i + 1):
            if (combo >> j) & 1:
                prod = pauli_multiply(prod, ops[j])
        if prod.phase_exp != 0:
            members = [str(ops[j]) for j in range(i + 1) if (combo >> j) & 1]
            raise ValidationError(f"the product {' * '.join(members)} equals -I")
        redundant.append(i)
    if redundant:
        warnings.warn(
            f"dropping {len(redundant)} dependent generator(s): "
            + ", ".join(str(ops[i]) for i in redundant),
            DependentGeneratorsWarning,
            stacklevel=2,
        )
    kept = tuple(ops[i] for i in independent)
    return StabilizerCode(
        n, n - len(kept), kept, name=name, redundant=tuple(ops[i] for i in redundant)
    )


def parse_generators(text: str) -> list[PauliOperator]:
    """Parse the generator file format: one Pauli string per line, '#' comments."""
    gens = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            gens.append(pauli_from_string(line))
    return gens


def load_code(path: str | Path, name: str | None = None) -> StabilizerCode:
    path = Path(path)
    return validate_generators(parse_generators(path.read_text()), name=name or path.stem)


def enumerate_group(code: StabilizerCode) -> frozenset[PauliOperator]:
    """All ``2^r`` elements of the stabilizer group, with exact phases."""
    if code.r > ENUMERATION_GUARD:
        raise CapacityError(
            f"refusing to enumerate 2^{code.r} elements (guard is 2^{ENUMERATION_GUARD})"
        )
    current = PauliOperator.identity(code.n)
    elements = {current}
    # Gray code walk: one multiplication per element.
    for step in range(1, 1 << code.r):
        flip = (step & -step).bit_length() - 1
        current = pauli_multiply(current, code.generators[flip])
        elements.add(current)
    return frozenset(elements)


def syndrome_of(code: StabilizerCode, e: PauliOperator) -> Syndrome:
    if e.n != code.n:
        raise DimensionError(f"error acts on {e.n} qubits, code on {code.n}")
    return Syndrome(tuple(0 if commutes(e, g) else 1 for g in code.generators))


def css_from_parity_checks(
    Hx: BinaryMatrix, Hz: BinaryMatrix, name: str | None = None
) -> StabilizerCode:
    """CSS code with X-type generators from rows of ``Hx`` and Z-type from rows of ``Hz``."""
    bad = first_incompatible_pair(Hx, Hz)
    if bad is not None:
        i, j = bad
        raise ConstructionError(
            f"Hx row {i} ({''.join(map(str, Hx.row(i)))}) and Hz row {j} "
            f"({''.join(map(str, Hz.row(j)))}) overlap oddly; Hx·Hz^T != 0"
        )
    n = Hx.cols
    gens = [PauliOperator(n, x=row) for row in Hx.bits if row]
    gens += [PauliOperator(n, z=row) for row in Hz.bits if row]
    return validate_generators(gens, n=n, name=name)


def weighted_supports(n: int, w: int, alphabet: str = "XYZ") -> Iterator[tuple[int, int]]:
    """(x, z) words of every weight-``w`` Pauli, lexicographic in (sites, letters)."""
    codes = [(1 if c in "XY" else 0, 1 if c in "YZ" else 0) for c in alphabet]
    for sites in combinations(range(n), w):
        for letters in product(codes, repeat=w):
            x = z = 0
            for q, (bx, bz) in zip(sites, letters):
                x |= bx << q
                z |= bz << q
            yield x, z


class AtLeast(int):
    """Distance lower bound returned when the search cap is exhausted."""

    def __repr__(self) -> str:
        return f"AtLeast({int(self)})"

    def __str__(self) -> str:
        return f">={int(self)}"


def distance(code: StabilizerCode, max_weight_cap: int = DEFAULT_DISTANCE_CAP) -> int:
    """Minimum weight of a Pauli in the normalizer but outside the stabilizer.

    Searches weights ``1..max_weight_cap`` in order and stops at the first
    hit. If none is found the result is ``AtLeast(max_weight_cap + 1)``.
    """
    if code.k == 0:
        raise DomainError("a code with k = 0 has no logical operators")
    checks = code._check_words
    span = code._span
    n = code.n
    for w in range(1, max_weight_cap + 1):
        for x, z in weighted_supports(n, w):
            if any(((x & gz).bit_count() + (z & gx).bit_count()) & 1 for gx, gz in checks):
                continue
            if (x | (z << n)) not in span:
                return w
    return AtLeast(max_weight_cap + 1)


def logical_operators(code: StabilizerCode) -> list[tuple[PauliOperator, PauliOperator]]:
    """``k`` pairs ``(X_L, Z_L)`` from symplectic Gram-Schmidt on the normalizer.

    Candidates are taken Z-only first, then X-only, then general, so CSS codes
    get pure X-type and Z-type logicals.
    """
    n = code.n
    gx_rows = [g.x for g in code.generators]
    gz_rows = [g.z for g in code.generators]
    swapped = [g.z | (g.x << n) for g in code.generators]
    pool = [v << n for v in gf2_nullspace(gx_rows, n)]
    pool += gf2_nullspace(gz_rows, n)
    pool += gf2_nullspace(swapped, 2 * n)

    span = GF2Span(g.symplectic() for g in code.generators)
    chosen: list[int] = []
    for v in pool:
        if len(chosen) == 2 * code.k:
            break
        if span.add(v):
            chosen.append(v)
    if len(chosen) != 2 * code.k:
        raise ValidationError("normalizer is smaller than expected; generators are invalid")

    pairs = []
    remaining = chosen
    while remaining:
        a = remaining.pop(0)
        idx = next(i for i, u in enumerate(remaining) if _symplectic_dot(a, u, n))
        b = remaining.pop(idx)
        remaining = [
            u ^ (a if _symplectic_dot(u, b, n) else 0) ^ (b if _symplectic_dot(u, a, n) else 0)
            for u in remaining
        ]
        mask = (1 << n) - 1
        z_op = PauliOperator.hermitian(n, a & mask, a >> n)
        x_op = PauliOperator.hermitian(n, b & mask, b >> n)
        pairs.append((x_op, z_op))
    return pairs


class Degeneracy(NamedTuple):
    degenerate: bool
    witness: tuple[PauliOperator, PauliOperator] | None


def is_degenerate(code: StabilizerCode, weight_limit: int | None = None) -> Degeneracy:
    """Look for two distinct errors of weight <= ``weight_limit`` differing by a stabilizer.

    ``weight_limit`` defaults to ``(d - 1) // 2``. The witness is the first
    colliding pair in lexicographic search order.
    """
    if weight_limit is None:
        d = code.d if code.d is not None else distance(code)
        weight_limit = (int(d) - 1) // 2
    n = code.n
    seen: dict[int, tuple[int, int]] = {}
    for w in range(weight_limit + 1):
        for x, z in weighted_supports(n, w) if w else [(0, 0)]:
            key = code._span.reduce(x | (z << n))
            if key in seen:
                first = PauliOperator.hermitian(n, *seen[key])
                return Degeneracy(True, (first, PauliOperator.hermitian(n, x, z)))
            seen[key] = (x, z)
    return Degeneracy(False, None)


class PerfectBound(NamedTuple):
    satisfied: bool
    perfect: bool
    lhs: int
    rhs: int


def perfect_code_bound(n: int, k: int) -> PerfectBound:
    """Whether ``3n + 1 <= 2^(n-k)`` holds; ``perfect`` marks equality."""
    if not n > k >= 0:
        raise DomainError(f"need n > k >= 0, got n={n}, k={k}")
    lhs, rhs = 3 * n + 1, 2 ** (n - k)
    return PerfectBound(lhs <= rhs, lhs == rhs, lhs, rhs)
