"""Extraction of spin-only reduced states.

The central operation probes a global n-particle state with lifted products
of region projectors and spin matrix units.  Because the matrix units form an
operator basis, those expectation values determine a unique spin-space matrix:
entry (j, i) of the result is the expectation of the lifted product whose k-th
slot is ``P_k x E_{i_k j_k}``.  For pairwise disjoint, fully localizing
regions the result is a genuine density matrix with trace equal to the joint
localization probability; for overlapping regions the same sweep still runs
and the diagnostics (trace, Hermiticity defect, minimum eigenvalue) report
how the construction degrades.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .linalg import (
    as_matrix,
    dagger,
    frob,
    identity,
    kron,
    matrix_unit,
    nth_root_dim,
    partial_trace,
)
from .lift import lift_product
from .spatial import SpaceSpec, SpatialRegion, overlap, projector
from .states import SuperpositionTerm
from .symmetry import (
    ANTISYMMETRIC,
    NO_SYMMETRY,
    SYMMETRIC,
    Parity,
    enumerate_sn,
    symmetrizer,
)

PROBE_PARTICLE_CAP = 4
TRACE_FLOOR = 1e-10
EIG_FLOOR = -1e-10


@dataclass(frozen=True, eq=False)
class RawReduced:
    """Un-normalized probe-extracted spin matrix plus diagnostics."""

    matrix: np.ndarray
    trace: float
    hermiticity_defect: float
    min_eigenvalue: float


@dataclass(frozen=True, eq=False)
class ReductionReport:
    raw: RawReduced
    normalized: np.ndarray | None
    symmetry_class: str | None
    valid_state: bool


class SymmetryVerdict(NamedTuple):
    label: str
    antisymmetric_defect: float
    symmetric_defect: float


def _product_trace(rho_tensor: np.ndarray, mats: Sequence[np.ndarray]) -> complex:
    """tr(rho . (mats[0] x ... x mats[n-1])) without forming the big product."""
    n = len(mats)
    args: list = [rho_tensor, list(range(2 * n))]
    for k, m in enumerate(mats):
        args.extend([m, [n + k, k]])
    args.append([])
    return complex(np.einsum(*args, optimize=True))


def reduced_spin_probe(
    rho,
    regions: Sequence[SpatialRegion],
    spin_dim: int,
    num_modes: int | None = None,
) -> RawReduced:
    """Reduced spin matrix of ``rho`` measured through localized probes.

    ``rho`` acts on the interleaved n-particle space; ``regions`` assigns one
    spatial region per measurement slot.  Linear in ``rho``.
    """
    rho = as_matrix(rho)
    n = len(regions)
    if not 1 <= n <= PROBE_PARTICLE_CAP:
        raise ValueError(f"probe sweep supports 1..{PROBE_PARTICLE_CAP} particles")
    if rho.shape[0] != rho.shape[1]:
        raise ValueError("state matrix must be square")
    one_dim = nth_root_dim(rho.shape[0], n)
    if num_modes is None:
        if one_dim % spin_dim:
            raise ValueError(
                f"one-particle dimension {one_dim} is not divisible by spin dimension {spin_dim}"
            )
        num_modes = one_dim // spin_dim
    if num_modes * spin_dim != one_dim:
        raise ValueError("mode count and spin dimension do not match the state")

    projs = [projector(r, num_modes) for r in regions]
    rho_tensor = rho.reshape((one_dim,) * (2 * n))
    perms = enumerate_sn(n)
    spin_total = spin_dim**n
    reduced = np.zeros((spin_total, spin_total), dtype=complex)

    for ket in itertools.product(range(spin_dim), repeat=n):
        for bra in itertools.product(range(spin_dim), repeat=n):
            slots = [
                kron(projs[k], matrix_unit(spin_dim, ket[k], bra[k])) for k in range(n)
            ]
            value = 0.0 + 0.0j
            for perm in perms:
                value += _product_trace(rho_tensor, [slots[perm[k]] for k in range(n)])
            row = _flatten_index(bra, spin_dim)
            col = _flatten_index(ket, spin_dim)
            reduced[row, col] = value

    return _with_diagnostics(reduced)


def _flatten_index(multi: Sequence[int], dim: int) -> int:
    idx = 0
    for digit in multi:
        idx = idx * dim + digit
    return idx


def _with_diagnostics(matrix: np.ndarray) -> RawReduced:
    trace = float(np.trace(matrix).real)
    defect = frob(matrix - dagger(matrix))
    hermitian_part = (matrix + dagger(matrix)) / 2.0
    min_eig = float(np.linalg.eigvalsh(hermitian_part)[0])
    return RawReduced(matrix, trace, defect, min_eig)


def reduced_spin_closed_form(
    terms: Sequence[SuperpositionTerm],
    num_terms: int | None = None,
    normalized: bool = True,
) -> np.ndarray:
    """Gram-weighted closed form of the reduced spin state of a two-particle
    superposition over disjoint regions.

    Works entirely with one-particle inner products and spin dyads, never
    touching the two-particle tensor space, so it serves as an independent
    oracle for ``reduced_spin_probe``.  With ``normalized=True`` (default) it
    is the reduction of the unit-normalized superposition; with
    ``normalized=False`` it applies the conventional 1/N bookkeeping of an
    unnormalized N-term family instead.
    """
    if not terms:
        raise ValueError("closed form needs at least one term")
    count = len(terms) if num_terms is None else int(num_terms)
    if count < 1:
        raise ValueError("term count must be positive")
    spin_dim = terms[0].factor_1.spin_dim
    total = spin_dim * spin_dim
    gram_sum = np.zeros((total, total), dtype=complex)
    norm_sq_half = 0.0 + 0.0j
    for t in terms:  # bra side
        for u in terms:  # ket side
            coeff = (
                np.conj(t.weight)
                * u.weight
                * overlap(t.factor_1.wavefunction, u.factor_1.wavefunction)
                * overlap(t.factor_2.wavefunction, u.factor_2.wavefunction)
            )
            if coeff == 0:
                continue
            dyad = kron(
                np.outer(u.factor_1.spin, np.conj(t.factor_1.spin)),
                np.outer(u.factor_2.spin, np.conj(t.factor_2.spin)),
            )
            gram_sum += coeff * dyad
            norm_sq_half += (
                coeff
                * complex(np.vdot(t.factor_1.spin, u.factor_1.spin))
                * complex(np.vdot(t.factor_2.spin, u.factor_2.spin))
            )
    if not normalized:
        return gram_sum / count
    denom = norm_sq_half.real  # half the squared norm of the raw superposition
    if denom < 1e-24:
        raise ValueError("superposition has (numerically) zero norm")
    return gram_sum / denom


def trace_out_spatial(rho, spec: SpaceSpec) -> np.ndarray:
    """Ordinary partial trace over every spatial factor of the interleaved
    layout, keeping the n spin factors in particle order."""
    rho = as_matrix(rho)
    if rho.shape != (spec.total_dim, spec.total_dim):
        raise ValueError("state dimension does not match the space description")
    keep = [2 * k + 1 for k in range(spec.particles)]
    return partial_trace(rho, spec.factor_dims, keep)


def classify_symmetry(
    rho_spin, particles: int, spin_dim: int, tol: float = 1e-10
) -> SymmetryVerdict:
    """Which spin-space symmetry sector supports the matrix: antisymmetric,
    symmetric, or neither (compression defects reported for both)."""
    rho_spin = as_matrix(rho_spin)
    total = spin_dim**particles
    if rho_spin.shape != (total, total):
        raise ValueError("matrix does not act on the n-spin space")
    pi_minus = symmetrizer(particles, spin_dim, Parity.FERMI)
    pi_plus = symmetrizer(particles, spin_dim, Parity.BOSE)
    defect_minus = frob(pi_minus @ rho_spin @ pi_minus - rho_spin)
    defect_plus = frob(pi_plus @ rho_spin @ pi_plus - rho_spin)
    if defect_minus <= tol:
        label = ANTISYMMETRIC
    elif defect_plus <= tol:
        label = SYMMETRIC
    else:
        label = NO_SYMMETRY
    return SymmetryVerdict(label, defect_minus, defect_plus)


def cluster_expectation(
    psi,
    region_a: SpatialRegion,
    spin_op,
    region_b: SpatialRegion,
    num_modes: int | None = None,
) -> complex:
    """Expectation of the lifted product (P x a) . (Q x 1) in a two-particle
    state: the remote-cluster probe of a single spin observable."""
    psi = np.asarray(psi, dtype=complex).reshape(-1)
    spin_op = as_matrix(spin_op)
    spin_dim = spin_op.shape[0]
    one_dim = nth_root_dim(psi.size, 2)
    if num_modes is None:
        if one_dim % spin_dim:
            raise ValueError("state and spin operator dimensions are incompatible")
        num_modes = one_dim // spin_dim
    if num_modes * spin_dim != one_dim:
        raise ValueError("mode count and spin dimension do not match the state")
    p = projector(region_a, num_modes)
    q = projector(region_b, num_modes)
    lifted = lift_product([kron(p, spin_op), kron(q, identity(spin_dim))])
    return complex(np.vdot(psi, lifted @ psi))


def reduction_report(
    raw: RawReduced,
    particles: int,
    spin_dim: int,
    tol: float = 1e-10,
) -> ReductionReport:
    """Normalize a raw reduction when its diagnostics allow it and classify
    the symmetry sector of the normalized state."""
    normalized = None
    symmetry = None
    if raw.trace > TRACE_FLOOR and raw.min_eigenvalue >= EIG_FLOOR:
        hermitian_part = (raw.matrix + dagger(raw.matrix)) / 2.0
        normalized = hermitian_part / raw.trace
        symmetry = classify_symmetry(normalized, particles, spin_dim, tol).label
    valid = normalized is not None and raw.hermiticity_defect <= tol
    return ReductionReport(raw, normalized, symmetry, valid)
