"""Row reduction kernels for GF(p) matrices.

Two interchangeable implementations of the same reduced-row-echelon
computation on ``int64`` arrays with entries in ``[0, p)``:

* a numba ``@njit`` kernel (default when numba imports cleanly), and
* a vectorized pure-numpy fallback.

Set ``SQFREE_NO_NUMBA=1`` to force the numpy path; ``USE_NUMBA`` records
which one is active.  Entries stay below ``p < 2**31`` so every
intermediate product fits in int64.

Rational matrices never come through here; they are handled exactly with
``Fraction`` arithmetic in :mod:`sqfree.exactla`.
"""

from __future__ import annotations

import os

import numpy as np

_DISABLED = os.environ.get("SQFREE_NO_NUMBA", "") not in ("", "0")

try:
    from numba import njit

    HAS_NUMBA = True
except ImportError:  # pragma: no cover
    HAS_NUMBA = False

USE_NUMBA = HAS_NUMBA and not _DISABLED


def rref_mod_numpy(a: np.ndarray, p: int) -> np.ndarray:
    """In-place RREF of ``a`` mod p; returns the pivot column array."""
    rows, cols = a.shape
    piv = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        a[r] = a[r] * pow(int(a[r, c]), p - 2, p) % p
        mask = a[:, c] != 0
        mask[r] = False
        if mask.any():
            a[mask] = (a[mask] - np.outer(a[mask, c], a[r])) % p
        piv.append(c)
        r += 1
    return np.array(piv, dtype=np.int64)


def _rref_mod_loops(a, p):
    rows, cols = a.shape
    piv = np.empty(cols if cols < rows else rows, dtype=np.int64)
    r = 0
    for c in range(cols):
        if r == rows:
            break
        pr = -1
        for i in range(r, rows):
            if a[i, c] != 0:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            for j in range(cols):
                tmp = a[r, j]
                a[r, j] = a[pr, j]
                a[pr, j] = tmp
        # invert the pivot by Fermat
        inv = np.int64(1)
        base = a[r, c] % p
        e = p - 2
        while e > 0:
            if e & 1:
                inv = inv * base % p
            base = base * base % p
            e >>= 1
        for j in range(cols):
            a[r, j] = a[r, j] * inv % p
        for i in range(rows):
            if i != r and a[i, c] != 0:
                f = a[i, c]
                for j in range(cols):
                    a[i, j] = (a[i, j] - f * a[r, j]) % p
        piv[r] = c
        r += 1
    return piv[:r].copy()


if USE_NUMBA:
    rref_mod_numba = njit(cache=True)(_rref_mod_loops)

    def rref_mod(a: np.ndarray, p: int) -> np.ndarray:
        return rref_mod_numba(a, np.int64(p))

else:
    rref_mod = rref_mod_numpy
