"""Commutation of localized spin subalgebras.

Two families of lifted two-particle operators are generated by placing a spin
observable behind one region projector and the identity behind the other.
Sweeping both spin slots over a Hermitian operator basis decides, by
bilinearity, whether the full subalgebras commute; they do exactly when the
two region projectors annihilate each other.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import as_matrix, frob, identity, kron, matrix_unit, projection_defect
from .lift import lift_product
from .symmetry import Parity, symmetrizer

PROJECTION_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class BipartitionVerdict:
    commutes: bool
    max_commutator_norm: float
    witness: tuple[str, str] | None
    # same sweep compressed to the two-fermion subspace
    projected_max_norm: float
    projected_witness: tuple[str, str] | None


def hermitian_basis(dim: int) -> list[tuple[str, np.ndarray]]:
    """A labelled Hermitian basis of the dim x dim matrices: diagonal units
    plus symmetric and antisymmetric off-diagonal combinations."""
    basis: list[tuple[str, np.ndarray]] = []
    for k in range(dim):
        basis.append((f"e{k}{k}", matrix_unit(dim, k, k)))
    for k in range(dim):
        for l in range(k + 1, dim):
            basis.append((f"x{k}{l}", matrix_unit(dim, k, l) + matrix_unit(dim, l, k)))
            basis.append(
                (f"y{k}{l}", 1j * (matrix_unit(dim, l, k) - matrix_unit(dim, k, l)))
            )
    return basis


def local_generator(side: int, spin_op, p, q) -> np.ndarray:
    """Generator of one local subalgebra: the lifted product with the spin
    observable behind projector ``p`` (side 1) or behind ``q`` (side 2)."""
    spin_op = as_matrix(spin_op)
    p = as_matrix(p)
    q = as_matrix(q)
    if p.shape != q.shape or p.shape[0] != p.shape[1]:
        raise ValueError("p and q must be square matrices of equal dimension")
    spin_dim = spin_op.shape[0]
    if side == 1:
        slots = [kron(p, spin_op), kron(q, identity(spin_dim))]
    elif side == 2:
        slots = [kron(p, identity(spin_dim)), kron(q, spin_op)]
    else:
        raise ValueError("side must be 1 or 2")
    return lift_product(slots)


def commutator_expansion(p, q, a1, a2) -> np.ndarray:
    """Closed four-term form of the commutator of two local generators, in
    the interleaved (mode, spin, mode, spin) factor order."""
    p = as_matrix(p)
    q = as_matrix(q)
    a1 = as_matrix(a1)
    a2 = as_matrix(a2)
    eye = identity(a1.shape[0])
    pq = p @ q
    qp = q @ p
    a12 = a1 @ a2
    a21 = a2 @ a1
    return (
        kron(qp, eye, pq, a12)
        - kron(pq, eye, qp, a21)
        + kron(pq, a12, qp, eye)
        - kron(qp, a21, pq, eye)
    )


def bipartition_check(p, q, spin_dim: int, tol: float = 1e-10) -> BipartitionVerdict:
    """Sweep both local subalgebras over a Hermitian spin-operator basis and
    report the largest commutator norm with the pair achieving it.

    ``p`` and ``q`` must be orthogonal projections.  The same commutators
    compressed to the antisymmetric two-particle subspace are reported
    separately.
    """
    p = as_matrix(p)
    q = as_matrix(q)
    for name, mat in (("p", p), ("q", q)):
        if projection_defect(mat) > PROJECTION_TOL:
            raise ValueError(f"{name} is not an orthogonal projection within tolerance")

    basis = hermitian_basis(spin_dim)
    gens_1 = [(label, local_generator(1, op, p, q)) for label, op in basis]
    gens_2 = [(label, local_generator(2, op, p, q)) for label, op in basis]
    pi_minus = symmetrizer(2, p.shape[0] * spin_dim, Parity.FERMI)

    max_norm = 0.0
    witness: tuple[str, str] | None = None
    max_proj = 0.0
    proj_witness: tuple[str, str] | None = None
    for label_a, gen_a in gens_1:
        for label_b, gen_b in gens_2:
            comm = gen_a @ gen_b - gen_b @ gen_a
            norm = frob(comm)
            if norm > max_norm:
                max_norm = norm
                witness = (label_a, label_b)
            proj_norm = frob(pi_minus @ comm @ pi_minus)
            if proj_norm > max_proj:
                max_proj = proj_norm
                proj_witness = (label_a, label_b)

    commutes = max_norm <= tol
    return BipartitionVerdict(
        commutes=commutes,
        max_commutator_norm=max_norm,
        witness=None if commutes else witness,
        projected_max_norm=max_proj,
        projected_witness=None if max_proj <= tol else proj_witness,
    )
