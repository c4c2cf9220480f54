"""Pure-numpy stabilizer tableau kernels.

Fallback for the compiled extension; both expose the same functions over the
same layout: ``x`` and ``z`` are (2n, n) uint8 bit matrices (destabilizer
rows 0..n-1, stabilizer rows n..2n-1), ``r`` is the (2n,) sign-bit vector.
Gate updates and measurement follow the standard tableau conjugation and
row-sum rules.
"""

from __future__ import annotations

import numpy as np

IMPL = "python"


def _phase_exponent(xi, zi, xh, zh) -> int:
    """Sum over columns of the Pauli-product phase function g, for row i
    multiplied into row h. Returns the exponent of i (mod 4 handled by caller).
    """
    x1 = xi.astype(np.int64)
    z1 = zi.astype(np.int64)
    x2 = xh.astype(np.int64)
    z2 = zh.astype(np.int64)
    g = (
        x1 * z1 * (z2 - x2)
        + x1 * (1 - z1) * (z2 * (2 * x2 - 1))
        + (1 - x1) * z1 * (x2 * (1 - 2 * z2))
    )
    return int(g.sum())


def rowsum(x: np.ndarray, z: np.ndarray, r: np.ndarray, h: int, i: int) -> None:
    """Row h := row h * row i (Pauli product with exact sign tracking)."""
    total = 2 * int(r[h]) + 2 * int(r[i]) + _phase_exponent(x[i], z[i], x[h], z[h])
    r[h] = (total % 4) // 2
    x[h] ^= x[i]
    z[h] ^= z[i]


def _rowsum_into(
    sx: np.ndarray, sz: np.ndarray, sr: int,
    x: np.ndarray, z: np.ndarray, r: np.ndarray, i: int,
) -> int:
    """Scratch-row variant: (sx, sz, sr) *= row i; returns the new sign bit."""
    total = 2 * sr + 2 * int(r[i]) + _phase_exponent(x[i], z[i], sx, sz)
    sx ^= x[i]
    sz ^= z[i]
    return (total % 4) // 2


def gate_h(x: np.ndarray, z: np.ndarray, r: np.ndarray, q: int) -> None:
    r ^= x[:, q] & z[:, q]
    tmp = x[:, q].copy()
    x[:, q] = z[:, q]
    z[:, q] = tmp


def gate_s(x: np.ndarray, z: np.ndarray, r: np.ndarray, q: int) -> None:
    r ^= x[:, q] & z[:, q]
    z[:, q] ^= x[:, q]


def gate_x(x: np.ndarray, z: np.ndarray, r: np.ndarray, q: int) -> None:
    r ^= z[:, q]


def gate_y(x: np.ndarray, z: np.ndarray, r: np.ndarray, q: int) -> None:
    r ^= x[:, q] ^ z[:, q]


def gate_z(x: np.ndarray, z: np.ndarray, r: np.ndarray, q: int) -> None:
    r ^= x[:, q]


def gate_cnot(x: np.ndarray, z: np.ndarray, r: np.ndarray, a: int, b: int) -> None:
    r ^= x[:, a] & z[:, b] & (x[:, b] ^ z[:, a] ^ 1)
    x[:, b] ^= x[:, a]
    z[:, a] ^= z[:, b]


def gate_cz(x: np.ndarray, z: np.ndarray, r: np.ndarray, a: int, b: int) -> None:
    gate_h(x, z, r, b)
    gate_cnot(x, z, r, a, b)
    gate_h(x, z, r, b)


def det_outcome(x: np.ndarray, z: np.ndarray, r: np.ndarray, q: int) -> int:
    """Outcome of a Z measurement of qubit q if deterministic, else -1.

    Does not modify the tableau.
    """
    n = x.shape[1]
    if x[n:, q].any():
        return -1
    sx = np.zeros(n, dtype=np.uint8)
    sz = np.zeros(n, dtype=np.uint8)
    sr = 0
    for i in range(n):
        if x[i, q]:
            sr = _rowsum_into(sx, sz, sr, x, z, r, n + i)
    return sr


def measure(x: np.ndarray, z: np.ndarray, r: np.ndarray, q: int, rand: float) -> int:
    """Z-measure qubit q, collapsing the tableau; outcome 1 iff rand < 0.5
    in the random case.
    """
    n = x.shape[1]
    stab_hits = np.nonzero(x[n:, q])[0]
    if stab_hits.size == 0:
        return det_outcome(x, z, r, q)
    p = n + int(stab_hits[0])
    for i in range(2 * n):
        if i != p and x[i, q]:
            rowsum(x, z, r, i, p)
    x[p - n] = x[p]
    z[p - n] = z[p]
    r[p - n] = r[p]
    x[p] = 0
    z[p] = 0
    z[p, q] = 1
    outcome = 1 if rand < 0.5 else 0
    r[p] = outcome
    return outcome


def pauli_sign(
    x: np.ndarray, z: np.ndarray, r: np.ndarray, px: np.ndarray, pz: np.ndarray
) -> int:
    """+1 / -1 if the (unsigned) Pauli given by bit vectors (px, pz) is in the
    stabilizer group with that sign; 0 if it anticommutes with some generator.
    """
    n = x.shape[1]
    anti = ((x[n:] & pz[None, :]) ^ (z[n:] & px[None, :])).sum(axis=1) % 2
    if anti.any():
        return 0
    sx = np.zeros(n, dtype=np.uint8)
    sz = np.zeros(n, dtype=np.uint8)
    sr = 0
    for i in range(n):
        if (int((x[i] & pz).sum()) + int((z[i] & px).sum())) % 2 == 1:
            sr = _rowsum_into(sx, sz, sr, x, z, r, n + i)
    if not (np.array_equal(sx, px) and np.array_equal(sz, pz)):
        raise AssertionError("tableau inconsistency: commuting Pauli not in group")
    return -1 if sr else 1
