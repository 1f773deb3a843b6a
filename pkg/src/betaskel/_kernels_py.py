"""Pure-numpy fallback for the hot inner loop.

For a candidate pair (p, q) and a third point r, containment of r in the
banded lune predicate is monotone in beta, so each blocker has a single entry
threshold.  Writing t = beta/2, d = |p-q|, eps = eps_rel*d, u1 = r-p,
u2 = r-q, v = q-p, the closed-rule condition |r - c1| <= t*d + eps for the
disc centered at c1 = p + t*v rearranges to

    |u1|^2 - eps^2 <= 2*t*(u1.v + d*eps)

so r enters disc 1 at t1 = (|u1|^2 - eps^2) / (2*(u1.v + d*eps)) when the
denominator is positive, and never otherwise.  The open rule flips the sign
of the d*eps term and makes the comparison strict.  The blocker enters the
lune at max(t1, t2), and the pair's death beta is twice the minimum entry
over all blockers (+inf when no blocker ever enters).

An edge is alive at beta iff beta < death (closed rule) or beta <= death
(open rule, where blocking requires strictly exceeding the threshold).

The compiled extension in ``_core`` implements the same arithmetic with the
same operation order; outputs are expected to match bit for bit.
"""

from __future__ import annotations

import numpy as np

# Keep per-chunk scratch arrays around this many elements.
_CHUNK_BUDGET = 2_000_000


def pair_death_betas(
    points: np.ndarray, pairs: np.ndarray, eps_rel: float, closed: bool
) -> np.ndarray:
    """Death beta for each candidate pair against all other points."""
    pts = np.ascontiguousarray(points, dtype=np.float64)
    prs = np.ascontiguousarray(pairs, dtype=np.int64)
    n = pts.shape[0]
    m = prs.shape[0]
    out = np.empty(m, dtype=np.float64)
    if m == 0:
        return out
    chunk = max(1, _CHUNK_BUDGET // max(n, 1))
    sign = 1.0 if closed else -1.0
    for lo in range(0, m, chunk):
        hi = min(lo + chunk, m)
        idx_i = prs[lo:hi, 0]
        idx_j = prs[lo:hi, 1]
        P = pts[idx_i]
        Q = pts[idx_j]
        V = Q - P
        d2 = V[:, 0] * V[:, 0] + V[:, 1] * V[:, 1]
        d = np.sqrt(d2)
        s = sign * (eps_rel * d2)  # d * eps, signed by the rule
        e2 = (eps_rel * d) ** 2
        U1 = pts[None, :, :] - P[:, None, :]
        U2 = pts[None, :, :] - Q[:, None, :]
        A1 = U1[:, :, 0] * V[:, None, 0] + U1[:, :, 1] * V[:, None, 1]
        A2 = -(U2[:, :, 0] * V[:, None, 0] + U2[:, :, 1] * V[:, None, 1])
        N1 = U1[:, :, 0] * U1[:, :, 0] + U1[:, :, 1] * U1[:, :, 1] - e2[:, None]
        N2 = U2[:, :, 0] * U2[:, :, 0] + U2[:, :, 1] * U2[:, :, 1] - e2[:, None]
        D1 = 2.0 * (A1 + s[:, None])
        D2 = 2.0 * (A2 + s[:, None])
        with np.errstate(divide="ignore", invalid="ignore"):
            T1 = np.where(D1 > 0.0, np.maximum(N1, 0.0) / D1, np.inf)
            T2 = np.where(D2 > 0.0, np.maximum(N2, 0.0) / D2, np.inf)
        T = np.maximum(T1, T2)
        k = hi - lo
        T[np.arange(k), idx_i] = np.inf
        T[np.arange(k), idx_j] = np.inf
        out[lo:hi] = 2.0 * T.min(axis=1)
        del U1, U2, A1, A2, N1, N2, D1, D2, T1, T2, T
    return out
