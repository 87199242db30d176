"""Brute-force reference implementations used as independent oracles.

Everything here is written as explicit loops over the defining formulas, so
the tests never check the library against itself.
"""

import itertools
import math

import numpy as np


def kron_by_loops(a, b):
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    ra, ca = a.shape
    rb, cb = b.shape
    out = np.zeros((ra * rb, ca * cb), dtype=complex)
    for ia in range(ra):
        for ja in range(ca):
            for ib in range(rb):
                for jb in range(cb):
                    out[ia * rb + ib, ja * cb + jb] = a[ia, ja] * b[ib, jb]
    return out


def kron_vec_by_loops(a, b):
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    out = np.zeros(a.size * b.size, dtype=complex)
    for ia in range(a.size):
        for ib in range(b.size):
            out[ia * b.size + ib] = a[ia] * b[ib]
    return out


def partial_trace_by_loops(mat, dims, keep):
    mat = np.asarray(mat, dtype=complex)
    dims = tuple(dims)
    keep = sorted(set(keep))
    drop = [ax for ax in range(len(dims)) if ax not in keep]
    d_keep = math.prod(dims[ax] for ax in keep) if keep else 1
    out = np.zeros((d_keep, d_keep), dtype=complex)

    def flat(multi):
        idx = 0
        for ax, digit in enumerate(multi):
            idx = idx * dims[ax] + digit
        return idx

    def flat_keep(multi):
        idx = 0
        for ax in keep:
            idx = idx * dims[ax] + multi[ax]
        return idx

    for row in itertools.product(*[range(d) for d in dims]):
        for col in itertools.product(*[range(d) for d in dims]):
            if any(row[ax] != col[ax] for ax in drop):
                continue
            out[flat_keep(row), flat_keep(col)] += mat[flat(row), flat(col)]
    return out


def permanent_by_enumeration(g):
    g = np.asarray(g, dtype=complex)
    n = g.shape[0]
    total = 0.0 + 0.0j
    for perm in itertools.permutations(range(n)):
        prod = 1.0 + 0.0j
        for i in range(n):
            prod *= g[i, perm[i]]
        total += prod
    return total


def determinant_by_enumeration(g):
    g = np.asarray(g, dtype=complex)
    n = g.shape[0]
    total = 0.0 + 0.0j
    for perm in itertools.permutations(range(n)):
        sign = perm_sign_by_count(perm)
        prod = 1.0 + 0.0j
        for i in range(n):
            prod *= g[i, perm[i]]
        total += sign * prod
    return total


def perm_sign_by_count(perm):
    inversions = 0
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                inversions += 1
    return -1 if inversions % 2 else 1


def partial_transpose_by_loops(rho, d_left, d_right):
    rho = np.asarray(rho, dtype=complex)
    out = np.zeros_like(rho)
    for i in range(d_left):
        for j in range(d_right):
            for k in range(d_left):
                for l in range(d_right):
                    out[i * d_right + j, k * d_right + l] = rho[
                        i * d_right + l, k * d_right + j
                    ]
    return out


def lifted_product_by_loops(ops):
    """Sum over slot permutations of the tensor product, via loop krons."""
    ops = [np.asarray(op, dtype=complex) for op in ops]
    n = len(ops)
    dim = ops[0].shape[0]
    total = dim**n
    out = np.zeros((total, total), dtype=complex)
    for perm in itertools.permutations(range(n)):
        term = np.ones((1, 1), dtype=complex)
        for k in range(n):
            term = kron_by_loops(term, ops[perm[k]])
        out += term
    return out


def rand_unit(rng, n):
    v = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    return v / np.linalg.norm(v)


def rand_matrix(rng, n, m=None):
    m = n if m is None else m
    return rng.standard_normal((n, m)) + 1j * rng.standard_normal((n, m))


def rand_hermitian(rng, n):
    a = rand_matrix(rng, n)
    return (a + a.conj().T) / 2.0


def rand_density(rng, n, rank=None):
    rank = n if rank is None else rank
    g = rand_matrix(rng, n, rank)
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def rand_projection(rng, n, rank):
    q, _ = np.linalg.qr(rand_matrix(rng, n))
    basis = q[:, :rank]
    return basis @ basis.conj().T
