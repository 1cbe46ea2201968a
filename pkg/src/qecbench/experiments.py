"""Analytic success formulas, pseudothresholds and Monte Carlo estimates."""

from __future__ import annotations

import csv
import io
import math
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, replace

import numpy as np
from scipy.optimize import bisect

from .catalog import catalog
from .errors import DomainError
from .noise import NoiseChannel, SyndromeTable, build_table, sample_error_arrays
from .stabilizer import StabilizerCode

# Codes whose success probability is "no error or exactly one error" on n qubits.
ANALYTIC_LENGTHS = {"bit_flip": 3, "phase_flip": 3, "shor9": 9, "steane7": 7}
CSV_HEADER = ("code", "channel", "p", "trials", "failures", "rate", "std_error", "seed")
CHUNK_SIZE = 8192


def _check_probability(p: float) -> None:
    if not 0.0 <= p <= 1.0:
        raise DomainError(f"probability must lie in [0, 1], got {p}")


def analytic_success(code_name: str, p: float) -> float:
    """``(1-p)^n + n p (1-p)^(n-1)``: probability of at most one physical error."""
    if code_name not in ANALYTIC_LENGTHS:
        raise DomainError(
            f"no closed form for {code_name!r}; supported: {', '.join(ANALYTIC_LENGTHS)}"
        )
    _check_probability(p)
    n = ANALYTIC_LENGTHS[code_name]
    return (1 - p) ** n + n * p * (1 - p) ** (n - 1)


def analytic_failure(code_name: str, p: float) -> float:
    return 1.0 - analytic_success(code_name, p)


def pseudothreshold(code_name: str) -> float:
    """Physical error rate where encoded and bare success probabilities cross."""

    def gap(p: float) -> float:
        return analytic_success(code_name, p) - (1 - p)

    return bisect(gap, 1e-9, 0.5, xtol=1e-7)


def concat_failure(p: float, C: float, k: int) -> float:
    """Uncorrectable-error rate ``(C p)^(2^k) / C`` after ``k`` levels, capped at 1."""
    _check_probability(p)
    if C <= 0:
        raise DomainError(f"C must be positive, got {C}")
    if k < 0:
        raise DomainError(f"concatenation level must be >= 0, got {k}")
    if k == 0:
        return min(1.0, p)
    return min(1.0, (C * p) ** (2**k) / C)


@dataclass(frozen=True)
class TrialStats:
    code: str
    channel: str
    p: float
    trials: int
    failures: int
    seed: int

    @property
    def logical_error_rate(self) -> float:
        return self.failures / self.trials

    rate = logical_error_rate

    @property
    def std_error(self) -> float:
        r = self.logical_error_rate
        return math.sqrt(r * (1 - r) / self.trials)

    def csv_row(self) -> tuple:
        return (
            self.code, self.channel, repr(self.p), self.trials, self.failures,
            repr(self.rate), repr(self.std_error), self.seed,
        )

    def __add__(self, other: TrialStats) -> TrialStats:
        """Merge two batches of the same experiment (counts add)."""
        if (self.code, self.channel, self.p) != (other.code, other.channel, other.p):
            raise DomainError("can only merge statistics from the same configuration")
        return TrialStats(
            self.code, self.channel, self.p,
            self.trials + other.trials, self.failures + other.failures, self.seed,
        )


def chunk_rng(seed: int, chunk: int) -> np.random.Generator:
    """Independent stream for trials ``[chunk*CHUNK_SIZE, (chunk+1)*CHUNK_SIZE)``."""
    return np.random.default_rng(np.random.SeedSequence([seed, chunk]))


def iter_error_chunks(
    channel: NoiseChannel, n: int, trials: int, seed: int
) -> Iterator[tuple[np.ndarray, np.ndarray]]:
    """The sampled errors of a run, chunk by chunk, as ``(x, z)`` arrays."""
    for chunk, start in enumerate(range(0, trials, CHUNK_SIZE)):
        count = min(CHUNK_SIZE, trials - start)
        yield sample_error_arrays(channel, n, count, chunk_rng(seed, chunk))


def _code_and_name(code: StabilizerCode | str) -> tuple[StabilizerCode, str]:
    if isinstance(code, str):
        return catalog(code), code
    return code, code.name or "custom"


def failure_mask(
    code: StabilizerCode, table: SyndromeTable, ex: np.ndarray, ez: np.ndarray
) -> np.ndarray:
    """Vectorized decode + classify: True where the trial ends in failure.

    A residual that commutes with every generator is a stabilizer element iff
    it also commutes with every logical operator, so logical failures are
    found by symplectic products against the logical pairs.
    """
    if not code.logical_pairs:
        code = code.with_logicals()
    gx = np.array([g.x_bits for g in code.generators], dtype=np.int64).reshape(-1, code.n)
    gz = np.array([g.z_bits for g in code.generators], dtype=np.int64).reshape(-1, code.n)
    logicals = [op for pair in code.logical_pairs for op in pair]
    lx = np.array([op.x_bits for op in logicals], dtype=np.int64).reshape(-1, code.n)
    lz = np.array([op.z_bits for op in logicals], dtype=np.int64).reshape(-1, code.n)

    ex = ex.astype(np.int64)
    ez = ez.astype(np.int64)
    bits = (ex @ gz.T + ez @ gx.T) & 1
    keys = bits @ (1 << np.arange(code.r, dtype=np.int64))
    present, cx, cz = table.lookup_arrays
    rx = ex ^ cx[keys]
    rz = ez ^ cz[keys]
    logical = ((rx @ lz.T + rz @ lx.T) & 1).any(axis=1)
    return ~present[keys] | logical


def run_monte_carlo(
    code: StabilizerCode | str,
    channel: NoiseChannel | str,
    p: float | None = None,
    trials: int = 10_000,
    seed: int = 0,
    table: SyndromeTable | None = None,
) -> TrialStats:
    """Estimate the logical failure rate of lookup-table decoding.

    Each trial samples an i.i.d. Pauli error, decodes its syndrome and checks
    whether the residual is a stabilizer element. Syndromes missing from the
    table count as failures. Trials are processed in fixed-size chunks whose
    random streams depend only on ``(seed, chunk index)``, so the result does
    not depend on evaluation order.
    """
    if trials < 1:
        raise DomainError(f"trials must be >= 1, got {trials}")
    if isinstance(channel, str):
        if p is None:
            raise DomainError("p is required when channel is given by name")
        channel = NoiseChannel(channel, p)
    code_obj, name = _code_and_name(code)
    if table is None:
        table = build_table(code_obj, channel.kind)
    if not code_obj.logical_pairs:
        code_obj = code_obj.with_logicals()
    failures = 0
    for ex, ez in iter_error_chunks(channel, code_obj.n, trials, seed):
        failures += int(failure_mask(code_obj, table, ex, ez).sum())
    return TrialStats(name, channel.kind, channel.p, trials, failures, seed)


def sweep(
    code: StabilizerCode | str,
    channel_kind: str,
    ps: Iterable[float],
    trials: int,
    seed: int,
) -> list[TrialStats]:
    code_obj, name = _code_and_name(code)
    table = build_table(code_obj, channel_kind)
    if not code_obj.logical_pairs:
        code_obj = code_obj.with_logicals()
    results = []
    for p in ps:
        stats = run_monte_carlo(code_obj, NoiseChannel(channel_kind, p), trials=trials,
                                seed=seed, table=table)
        results.append(replace(stats, code=name))
    return results


def format_csv(stats: Sequence[TrialStats]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for s in stats:
        writer.writerow(s.csv_row())
    return buf.getvalue()
