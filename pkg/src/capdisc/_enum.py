"""Lattice vector enumeration (Fincke-Pohst) and basis reduction.

Internal module.  Enumeration works on the Cholesky factor of the Gram
matrix and visits every nonzero lattice vector with squared norm below a
cutoff, either collecting the raw squared norms or accumulating a power
sum without storing vectors.  Single-threaded and deterministic.
"""

import numpy as np
from numba import njit


def lll_reduce(basis, delta=0.99):
    """LLL-reduce the rows of `basis` (float Gram-Schmidt arithmetic).

    Integer input rows stay integer-valued; used to tame the raw
    Hermite-form Leech basis before enumeration.
    """
    b = np.array(basis, dtype=float)
    n = b.shape[0]

    def gso(b):
        bstar = np.zeros_like(b)
        mu = np.zeros((n, n))
        for i in range(n):
            bstar[i] = b[i]
            for j in range(i):
                mu[i, j] = np.dot(b[i], bstar[j]) / np.dot(bstar[j], bstar[j])
                bstar[i] -= mu[i, j] * bstar[j]
        return bstar, mu

    bstar, mu = gso(b)
    k = 1
    while k < n:
        for j in range(k - 1, -1, -1):
            q = round(mu[k, j])
            if q != 0:
                b[k] -= q * b[j]
                bstar, mu = gso(b)
        if np.dot(bstar[k], bstar[k]) >= (delta - mu[k, k - 1] ** 2) * np.dot(bstar[k - 1], bstar[k - 1]):
            k += 1
        else:
            b[[k, k - 1]] = b[[k - 1, k]]
            bstar, mu = gso(b)
            k = max(k - 1, 1)
    return b


def integer_row_hnf(rows):
    """Row-style Hermite normal form over Z; returns the nonzero rows."""
    A = [[int(v) for v in r] for r in rows]
    m, n = len(A), len(A[0])
    r = 0
    for c in range(n):
        piv = None
        for i in range(r, m):
            if A[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        for i in range(r + 1, m):
            while A[i][c] != 0:
                q = A[r][c] // A[i][c]
                A[r] = [a - q * b for a, b in zip(A[r], A[i])]
                A[r], A[i] = A[i], A[r]
        if A[r][c] < 0:
            A[r] = [-a for a in A[r]]
        for i in range(r):
            q = A[i][c] // A[r][c]
            if q:
                A[i] = [a - q * b for a, b in zip(A[i], A[r])]
        r += 1
    return A[:r]


@njit(cache=True)
def _enum_norms(C, rmax2, out):
    """Collect squared norms of all nonzero vectors with Q(x) <= rmax2.

    C is the upper-triangular transpose of the Cholesky factor of the
    Gram matrix.  Returns the count, or -1 if `out` is too small.
    """
    n = C.shape[0]
    x = np.zeros(n, dtype=np.int64)
    partial = np.zeros(n + 1)
    lo = np.zeros(n, dtype=np.int64)
    hi = np.zeros(n, dtype=np.int64)
    cdiag = np.zeros(n)
    for k in range(n):
        cdiag[k] = C[k, k]
    sums = np.zeros((n + 1, n))
    cnt = 0
    i = n - 1
    while True:
        t = rmax2 - partial[i + 1]
        ci = -sums[i + 1, i] / cdiag[i]
        if t >= 0.0:
            w = np.sqrt(t) / abs(cdiag[i])
            lo_i = int(np.ceil(ci - w - 1e-12))
            hi_i = int(np.floor(ci + w + 1e-12))
        else:
            lo_i = 0
            hi_i = -1
        lo[i] = lo_i
        hi[i] = hi_i
        x[i] = lo_i - 1
        while True:
            x[i] += 1
            if x[i] > hi[i]:
                i += 1
                if i >= n:
                    return cnt
                continue
            d = cdiag[i] * x[i] + sums[i + 1, i]
            newpartial = partial[i + 1] + d * d
            if newpartial > rmax2 + 1e-9:
                continue
            if i == 0:
                isz = True
                for k in range(n):
                    if x[k] != 0:
                        isz = False
                        break
                if not isz:
                    if cnt >= out.size:
                        return -1
                    out[cnt] = newpartial
                    cnt += 1
                continue
            partial[i] = newpartial
            for k in range(i):
                sums[i, k] = sums[i + 1, k] + C[k, i] * x[i]
            i -= 1
            break


@njit(cache=True)
def _enum_powersum(C, rmax2, s):
    """Kahan-compensated sum of Q(x)^(-s) over nonzero vectors, Q <= rmax2.

    Returns (sum, count).  Same traversal as _enum_norms but O(1) memory.
    """
    n = C.shape[0]
    x = np.zeros(n, dtype=np.int64)
    partial = np.zeros(n + 1)
    hi = np.zeros(n, dtype=np.int64)
    cdiag = np.zeros(n)
    for k in range(n):
        cdiag[k] = C[k, k]
    sums = np.zeros((n + 1, n))
    acc = 0.0
    comp = 0.0
    cnt = 0
    i = n - 1
    while True:
        t = rmax2 - partial[i + 1]
        ci = -sums[i + 1, i] / cdiag[i]
        if t >= 0.0:
            w = np.sqrt(t) / abs(cdiag[i])
            lo_i = int(np.ceil(ci - w - 1e-12))
            hi_i = int(np.floor(ci + w + 1e-12))
        else:
            lo_i = 0
            hi_i = -1
        hi[i] = hi_i
        x[i] = lo_i - 1
        while True:
            x[i] += 1
            if x[i] > hi[i]:
                i += 1
                if i >= n:
                    return acc, cnt
                continue
            d = cdiag[i] * x[i] + sums[i + 1, i]
            newpartial = partial[i + 1] + d * d
            if newpartial > rmax2 + 1e-9:
                continue
            if i == 0:
                isz = True
                for k in range(n):
                    if x[k] != 0:
                        isz = False
                        break
                if not isz:
                    y = newpartial ** (-s) - comp
                    tmp = acc + y
                    comp = (tmp - acc) - y
                    acc = tmp
                    cnt += 1
                continue
            partial[i] = newpartial
            for k in range(i):
                sums[i, k] = sums[i + 1, k] + C[k, i] * x[i]
            i -= 1
            break


def _cholesky_ut(basis):
    G = np.asarray(basis, float) @ np.asarray(basis, float).T
    return np.ascontiguousarray(np.linalg.cholesky(G).T)


def vector_norms(basis, rmax2):
    """Sorted squared norms of all nonzero lattice vectors with norm^2 <= rmax2."""
    C = _cholesky_ut(basis)
    cap = 1 << 16
    while True:
        out = np.empty(cap)
        cnt = _enum_norms(C, float(rmax2) * (1.0 + 1e-12) + 1e-9, out)
        if cnt >= 0:
            break
        cap *= 4
        if cap > 1 << 28:
            raise MemoryError("enumeration exceeds storage cap; use power_sum")
    q = np.sort(out[:cnt])
    return q[q <= rmax2 * (1.0 + 1e-9) + 1e-9]


def shells(basis, rmax2):
    """Group vector_norms into (norm^2, count) shells with adaptive tolerance.

    No quantization grid is assumed: shells split wherever consecutive
    squared norms differ by more than a relative 1e-7 (so e.g. dual-A2
    norms at multiples of 1/3 group correctly).
    """
    q = vector_norms(basis, rmax2)
    if q.size == 0:
        return []
    breaks = np.nonzero(np.diff(q) > 1e-7 * (1.0 + q[:-1]))[0]
    starts = np.concatenate(([0], breaks + 1))
    ends = np.concatenate((breaks + 1, [q.size]))
    return [(float(np.median(q[a:b])), int(b - a)) for a, b in zip(starts, ends)]


def power_sum(basis, rmax2, s):
    """Sum of (x.x)^(-s) over nonzero lattice vectors with x.x <= rmax2."""
    C = _cholesky_ut(basis)
    acc, cnt = _enum_powersum(C, float(rmax2), float(s))
    return acc, cnt
