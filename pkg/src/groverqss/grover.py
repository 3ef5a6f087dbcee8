"""Reflection operators and the two-phase encode/decode pipeline.

The oracle ``U_m = I - 2|m><m|`` flips the sign of the marked amplitude;
the diffusion ``U_S = 2|S><S| - I`` reflects about the initial product
state.  Decoding runs one diffusion, reads off the highest-probability
outcome M, then runs the oracle for M followed by a second diffusion.

Shot sampling uses inverse-CDF draws from NumPy's PCG64 generator
(``numpy.random.default_rng(seed)``), so counts are reproducible across
runs and builds for a fixed (state, shots, seed).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .statevec import (
    StateVector,
    distribution,
    index_to_label,
    inner,
    label_to_index,
)

#: Tolerance for membership in the tied-argmax set.  Tied probabilities in
#: scope are exactly equal rationals, so anything above rounding noise works.
ARGMAX_TOL = 1e-9


def iteration_count(num_qubits: int) -> int:
    """Textbook Grover iteration count round(pi/4 * sqrt(2^n)), half-up."""
    if num_qubits < 1:
        raise ValueError("num_qubits must be >= 1")
    return math.floor(math.pi / 4 * math.sqrt(2**num_qubits) + 0.5)


def oracle_apply(s: StateVector, m: str) -> StateVector:
    """Apply U_m: negate the amplitude at the marked label, leave the rest."""
    if len(m) != s.num_qubits:
        raise ValueError(f"marked label {m!r} does not address {s.num_qubits} qubits")
    amps = s.amps.copy()
    amps[label_to_index(m)] *= -1
    return StateVector(s.num_qubits, amps)


def diffusion_apply(s: StateVector, about: StateVector) -> StateVector:
    """Apply U_S = 2|S><S| - I, i.e. return 2<S|s>|S> - |s>."""
    if s.num_qubits != about.num_qubits:
        raise ValueError("state and diffusion axis have different qubit counts")
    overlap = inner(about, s)
    return StateVector(s.num_qubits, 2 * overlap * about.amps - s.amps)


def encode(initial: StateVector, m: str) -> StateVector:
    """Dealer encoding: |S_k>_m = U_m |S_k>."""
    return oracle_apply(initial, m)


def argmax_labels(dist: np.ndarray, num_qubits: int, tol: float = ARGMAX_TOL) -> list[str]:
    """All outcome labels tied at the maximum probability, sorted."""
    top = float(dist.max())
    return [index_to_label(i, num_qubits) for i in range(len(dist)) if dist[i] >= top - tol]


@dataclass(frozen=True)
class DecodePhase1Result:
    """State and statistics after the first diffusion of the decode pipeline."""

    state: StateVector
    dist: np.ndarray
    argmax_set: frozenset[str]
    chosen_M: str
    max_prob: float


def decode_phase1(
    encoded: StateVector, initial: StateVector, choose: str | None = None
) -> DecodePhase1Result:
    """First decode phase: diffuse about the announced initial state.

    The intermediate mark M is the lexicographically smallest member of the
    tied-argmax set unless ``choose`` forces a specific member.
    """
    st = diffusion_apply(encoded, initial)
    dist = distribution(st)
    tied = argmax_labels(dist, st.num_qubits)
    if choose is not None:
        if choose not in tied:
            raise ValueError(f"forced mark {choose!r} is not in the argmax set {tied}")
        chosen = choose
    else:
        chosen = tied[0]
    return DecodePhase1Result(
        state=st,
        dist=dist,
        argmax_set=frozenset(tied),
        chosen_M=chosen,
        max_prob=float(dist.max()),
    )


def decode_phase2(
    st: StateVector, M: str, initial: StateVector
) -> tuple[StateVector, np.ndarray]:
    """Second decode phase: oracle for the observed mark M, then diffuse again."""
    final = diffusion_apply(oracle_apply(st, M), initial)
    return final, distribution(final)


def collective_op(
    encoded: StateVector, initial: StateVector, choose: str | None = None
) -> tuple[DecodePhase1Result, StateVector, np.ndarray]:
    """Full decode pipeline U_{S_k}, U_M, U_{S_k}; returns all intermediates."""
    phase1 = decode_phase1(encoded, initial, choose=choose)
    final, dist = decode_phase2(phase1.state, phase1.chosen_M, initial)
    return phase1, final, dist


@dataclass(frozen=True)
class ShotCounts:
    """Empirical outcome counts from seeded measurement sampling."""

    counts: dict[str, int] = field(default_factory=dict)
    shots: int = 0
    seed: int = 0

    def frequency(self, label: str) -> float:
        return self.counts.get(label, 0) / self.shots


def sample(s: StateVector, shots: int, seed: int) -> ShotCounts:
    """Draw ``shots`` independent outcomes from the state's distribution.

    Deterministic for fixed (state, shots, seed): inverse-CDF sampling over
    NumPy's PCG64 bit generator.
    """
    if shots < 1:
        raise ValueError("shots must be >= 1")
    dist = distribution(s)
    cdf = np.cumsum(dist)
    cdf[-1] = 1.0
    rng = np.random.default_rng(seed)
    draws = np.searchsorted(cdf, rng.random(shots), side="right")
    counts: dict[str, int] = {}
    for idx, n in zip(*np.unique(draws, return_counts=True)):
        counts[index_to_label(int(idx), s.num_qubits)] = int(n)
    return ShotCounts(counts=counts, shots=shots, seed=seed)
