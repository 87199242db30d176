"""Constructors for (anti)symmetrized states of particles carrying interleaved
spatial and spin degrees of freedom.

Every constructor renormalizes its result and reports the pre-normalization
norm, so callers can audit the bookkeeping of unnormalized superpositions.
A pre-normalization norm below ``ZERO_TOL`` raises ``ZeroStateError`` (e.g.
antisymmetrizing two identical factors).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .linalg import as_vector, kron, permute_factors
from .spatial import SpaceSpec, Wavefunction
from .symmetry import MAX_PARTICLES, Parity, enumerate_sn, exchange_character, symmetrizer

ZERO_TOL = 1e-12


class ZeroStateError(ValueError):
    """The requested state vanishes after (anti)symmetrization/projection."""


@dataclass(frozen=True, eq=False)
class LocalizedFactor:
    """A one-particle building block: spatial wavefunction times spin vector."""

    wavefunction: Wavefunction
    spin: np.ndarray

    def __post_init__(self):
        spin = as_vector(self.spin)
        if abs(np.linalg.norm(spin) - 1.0) > 1e-12:
            raise ValueError("spin vector must have unit norm")
        object.__setattr__(self, "spin", spin)

    @property
    def spin_dim(self) -> int:
        return self.spin.size

    def vector(self) -> np.ndarray:
        """The one-particle vector in the mode-slowest index convention."""
        return kron(self.wavefunction.amplitudes, self.spin)


def localized_factor(wavefunction: Wavefunction, spin) -> LocalizedFactor:
    spin = as_vector(spin)
    norm = float(np.linalg.norm(spin))
    if norm < ZERO_TOL:
        raise ValueError("spin vector must be nonzero")
    return LocalizedFactor(wavefunction, spin / norm)


@dataclass(frozen=True, eq=False)
class SuperpositionTerm:
    """One bracket of a two-particle superposition, with an optional weight."""

    factor_1: LocalizedFactor
    factor_2: LocalizedFactor
    weight: complex = 1.0

    def __post_init__(self):
        w = complex(self.weight)
        if not (math.isfinite(w.real) and math.isfinite(w.imag)):
            raise ValueError("term weight must be finite")
        object.__setattr__(self, "weight", w)


class BuiltState(NamedTuple):
    vector: np.ndarray
    raw_norm: float


def _check_pair_dims(a: LocalizedFactor, b: LocalizedFactor) -> None:
    if a.wavefunction.num_modes != b.wavefunction.num_modes:
        raise ValueError("factors live in spatial spaces of different dimension")
    if a.spin_dim != b.spin_dim:
        raise ValueError("factors carry spins of different dimension")


def _finalize(raw: np.ndarray) -> BuiltState:
    norm = float(np.linalg.norm(raw))
    if norm < ZERO_TOL:
        raise ZeroStateError("state vanishes after (anti)symmetrization")
    return BuiltState(raw / norm, norm)


def two_particle_localized(
    a: LocalizedFactor, b: LocalizedFactor, parity: Parity
) -> BuiltState:
    """The (anti)symmetrized product of two localized one-particle factors,
    with its 1/sqrt(2) prefactor; exactly normalized already when the two
    spatial wavefunctions have disjoint support."""
    _check_pair_dims(a, b)
    va, vb = a.vector(), b.vector()
    sign = 1.0 if parity is Parity.BOSE else -1.0
    raw = (kron(va, vb) + sign * kron(vb, va)) / math.sqrt(2.0)
    return _finalize(raw)


def superposition_state(terms: Sequence[SuperpositionTerm], parity: Parity) -> BuiltState:
    """Weighted sum of (anti)symmetrized two-particle brackets, normalized.

    With unit weights and orthonormal wavefunction families the
    pre-normalization norm is sqrt(2 N) for N terms.
    """
    if not terms:
        raise ValueError("superposition needs at least one term")
    for t in terms:
        _check_pair_dims(t.factor_1, t.factor_2)
        _check_pair_dims(terms[0].factor_1, t.factor_1)
    sign = 1.0 if parity is Parity.BOSE else -1.0
    raw = None
    for t in terms:
        va, vb = t.factor_1.vector(), t.factor_2.vector()
        bracket = kron(va, vb) + sign * kron(vb, va)
        raw = t.weight * bracket if raw is None else raw + t.weight * bracket
    return _finalize(raw)


def n_particle_localized(
    factors: Sequence[LocalizedFactor], parity: Parity
) -> BuiltState:
    """Sign-weighted sum over all orderings of n one-particle factors, with
    the 1/sqrt(n!) prefactor.  The squared pre-normalization norm equals the
    determinant (Fermi) or permanent (Bose) of the factors' Gram matrix."""
    n = len(factors)
    if not 1 <= n <= MAX_PARTICLES:
        raise ValueError(f"particle count must be between 1 and {MAX_PARTICLES}")
    for f in factors:
        _check_pair_dims(factors[0], f)
    vecs = [f.vector() for f in factors]
    raw = None
    for perm in enumerate_sn(n):
        term = parity.phase(perm) * kron(*[vecs[perm[k]] for k in range(n)])
        raw = term if raw is None else raw + term
    raw = raw / math.sqrt(math.factorial(n))
    return _finalize(raw)


class SubspaceKind(enum.Enum):
    """Special subspaces whose spatial reduction hides, keeps, or flips the
    exchange statistics of the spin part."""

    SHARED_SPATIAL = "shared_spatial"          # every particle in one mode
    SYMMETRIC_SPATIAL = "symmetric_spatial"    # symmetric space x antisymmetric spin
    ANTISYMMETRIC_SPATIAL = "antisymmetric_spatial"  # antisymmetric space x symmetric spin


class SubspaceState(NamedTuple):
    vector: np.ndarray
    raw_norm: float
    statistics: str  # exchange character of the global vector, measured


def interleave_particles(grouped: np.ndarray, spec: SpaceSpec) -> np.ndarray:
    """Reorder a vector from (modes^n) x (spins^n) grouping to the interleaved
    (mode, spin)^n convention."""
    n = spec.particles
    dims = (spec.num_modes,) * n + (spec.spin_dim,) * n
    # output slot 2k takes input factor k, slot 2k+1 takes input factor n+k
    target_sources = []
    for k in range(n):
        target_sources.extend([k, n + k])
    perm = [0] * (2 * n)
    for out_slot, src in enumerate(target_sources):
        perm[src] = out_slot
    return permute_factors(grouped, dims, perm)


def _project_or_raise(vec: np.ndarray, proj: np.ndarray, what: str) -> np.ndarray:
    projected = proj @ vec
    if float(np.linalg.norm(projected)) < ZERO_TOL:
        raise ZeroStateError(f"{what} part vanishes under the required projection")
    return projected


def subspace_state(
    kind: SubspaceKind,
    spatial_part,
    spin_part,
    spec: SpaceSpec,
) -> SubspaceState:
    """Build a global vector in one of the special subspaces.

    ``shared_spatial``: ``spatial_part`` is a length-``num_modes`` amplitude
    vector and ``spin_part`` is either one spin-space vector (broadcast over
    modes) or one per mode; each spin vector is projected onto the
    antisymmetric spin subspace.

    ``symmetric_spatial`` / ``antisymmetric_spatial``: ``spatial_part`` is a
    vector on the n-fold mode space and ``spin_part`` on the n-fold spin
    space; both are projected onto the symmetry sector the kind demands.

    The parts are renormalized internally; the returned ``statistics`` states
    which global symmetrizer actually fixes the constructed vector.
    """
    n = spec.particles
    pi_minus_spin = symmetrizer(n, spec.spin_dim, Parity.FERMI)
    pi_plus_spin = symmetrizer(n, spec.spin_dim, Parity.BOSE)

    if kind is SubspaceKind.SHARED_SPATIAL:
        c = as_vector(spatial_part)
        if c.size != spec.num_modes:
            raise ValueError("mode amplitude vector has wrong length")
        spins = _per_mode_spins(spin_part, spec)
        grouped = np.zeros(spec.total_dim, dtype=complex)
        mode_dim = spec.num_modes**n
        for mode, amp in enumerate(c):
            if abs(amp) == 0.0:
                continue
            chi = pi_minus_spin @ spins[mode]
            shared = np.zeros(mode_dim, dtype=complex)
            shared[_repeated_mode_index(mode, spec.num_modes, n)] = 1.0
            grouped += amp * kron(shared, chi)
    else:
        phi = as_vector(spatial_part)
        chi = as_vector(spin_part)
        if phi.size != spec.num_modes**n:
            raise ValueError("spatial part has wrong dimension")
        if chi.size != spec.spin_dim**n:
            raise ValueError("spin part has wrong dimension")
        if kind is SubspaceKind.SYMMETRIC_SPATIAL:
            spatial_proj = symmetrizer(n, spec.num_modes, Parity.BOSE)
            spin_proj = pi_minus_spin
        elif kind is SubspaceKind.ANTISYMMETRIC_SPATIAL:
            spatial_proj = symmetrizer(n, spec.num_modes, Parity.FERMI)
            spin_proj = pi_plus_spin
        else:
            raise ValueError(f"unknown subspace kind {kind!r}")
        phi = _project_or_raise(phi, spatial_proj, "spatial")
        chi = _project_or_raise(chi, spin_proj, "spin")
        grouped = kron(phi, chi)

    raw = interleave_particles(grouped, spec)
    norm = float(np.linalg.norm(raw))
    if norm < ZERO_TOL:
        raise ZeroStateError("subspace state vanishes after projection")
    vec = raw / norm
    stats = exchange_character(vec, n, spec.one_particle_dim)
    return SubspaceState(vec, norm, stats)


def _repeated_mode_index(mode: int, num_modes: int, n: int) -> int:
    idx = 0
    for _ in range(n):
        idx = idx * num_modes + mode
    return idx


def _per_mode_spins(spin_part, spec: SpaceSpec) -> list[np.ndarray]:
    dim = spec.spin_dim**spec.particles
    arr = np.asarray(spin_part, dtype=complex)
    if arr.ndim == 1:
        if arr.size != dim:
            raise ValueError("spin part has wrong dimension")
        return [arr.copy() for _ in range(spec.num_modes)]
    if arr.ndim == 2:
        if arr.shape != (spec.num_modes, dim):
            raise ValueError("per-mode spin list has wrong shape")
        return [arr[m].copy() for m in range(spec.num_modes)]
    raise ValueError("spin part must be a vector or a per-mode list of vectors")
