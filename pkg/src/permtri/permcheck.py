"""Permutation tests for polynomial maps of F_q.

Two independent routes decide whether f permutes F_q: counting the image on
an occupancy bitmap (:func:`is_pp`), and looking for zeros of the difference
quotient off the diagonal (:func:`is_pp_via_curve`). Both have sweep
variants that handle every lambda of f = A + lambda*B at once.
"""

from dataclasses import dataclass
from math import isqrt

import numpy as np

from .gf import GF, check_cap
from .poly import Poly, difference_quotient

CURVE_CAP = 1 << 20
_PREFILTER_BUDGET = 1 << 22


@dataclass(frozen=True)
class PreimageHistogram:
    """counts[k] = number of field elements with exactly k preimages."""

    q: int
    counts: dict[int, int]

    @property
    def is_permutation(self) -> bool:
        return self.counts == {1: self.q}

    @property
    def nonzero_counts(self) -> set[int]:
        return {k for k in self.counts if k}


def is_pp(f: Poly, field: GF | None = None) -> bool:
    """True iff x -> f(x) is a bijection of F_q.

    Values are produced in geometrically growing chunks and marked on an
    occupancy bitmap, so a collision ends the scan early.
    """
    F = f.field if field is None else field
    q = F.q
    check_cap(q)
    seen = np.zeros(q, dtype=bool)
    filled, lo, step = 0, 0, 256
    while lo < q:
        hi = min(lo + step, q)
        vals = f.eval_many(np.arange(lo, hi, dtype=np.int64), F)
        if seen[vals].any():
            return False
        seen[vals] = True
        filled += hi - lo
        if np.count_nonzero(seen) != filled:
            return False
        lo, step = hi, min(step * 2, 1 << 20)
    return True


def preimage_counts(f: Poly, field: GF | None = None) -> PreimageHistogram:
    F = f.field if field is None else field
    check_cap(F.q)
    per_value = np.bincount(f.eval_all(F), minlength=F.q)
    hist = np.bincount(per_value)
    return PreimageHistogram(F.q, {k: int(c) for k, c in enumerate(hist) if c})


def is_cpp(f: Poly) -> bool:
    """f and f + x both permute F_q."""
    return is_pp(f) and is_pp(f + Poly.x(f.field))


def is_pp_via_curve(f: Poly) -> bool:
    """True iff (f(x) - f(y))/(x - y) has no zero with x != y in F_q^2.

    f is first replaced by its reduction mod x^q - x, which induces the same
    map, so the bivariate quotient has degree below q in each variable.
    """
    F = f.field
    q = F.q
    check_cap(q * q, "curve grid", cap=CURVE_CAP)
    g = f.reduce_as_function()
    if g.degree < 1:
        return False
    grid = difference_quotient(g).eval_grid()
    np.fill_diagonal(grid, 1)
    return not (grid == 0).any()


def _family_tables(field: GF, s: int, r: int) -> tuple[np.ndarray, np.ndarray]:
    """A = x^(2p^s+r) + x^(p^s+r) and B = x^r on every x."""
    ps = field.p ** s
    xs = np.arange(field.q, dtype=np.int64)
    A = field.vadd(field.vpow(xs, 2 * ps + r), field.vpow(xs, ps + r))
    B = field.vpow(xs, r)
    return A, B


def affine_family_sweep(field: GF, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """flags[lam] = (x -> A[x] + lam*B[x] is a permutation), for every lam.

    Stage one evaluates every lambda on a prefix of about 8*sqrt(q) points
    and discards rows with a repeated value; stage two checks survivors on
    the whole field. Both stages are exact.
    """
    q = field.q
    check_cap(q)
    lams = np.arange(q, dtype=np.int64)
    flags = np.ones(q, dtype=bool)
    k = min(q, max(64, 8 * isqrt(q)))
    block = max(1, _PREFILTER_BUDGET // k)
    Ak, Bk = A[:k], B[:k]
    for lo in range(0, q, block):
        rows = lams[lo:lo + block, None]
        vals = np.sort(field.vadd(Ak[None, :], field.vmul(rows, Bk[None, :])), axis=1)
        flags[lo:lo + block] = ~(vals[:, 1:] == vals[:, :-1]).any(axis=1)
    if k < q:
        for lam in np.flatnonzero(flags).tolist():
            vals = field.vadd(A, field.vmul(B, lam))
            seen = np.zeros(q, dtype=bool)
            seen[vals] = True
            flags[lam] = seen.all()
    return flags


def pp_sweep(field: GF, s: int, r: int) -> np.ndarray:
    """is_pp of f_lambda for every lambda in index order."""
    A, B = _family_tables(field, s, r)
    return affine_family_sweep(field, A, B)


def curve_pp_sweep(field: GF, s: int, r: int) -> np.ndarray:
    """is_pp_via_curve of f_lambda for every lambda, from two curve grids.

    phi_lambda = Phi + lambda*Psi where Phi and Psi are the difference
    quotients of x^(2p^s+r) + x^(p^s+r) and x^r. An off-diagonal point kills
    exactly lambda = -Phi/Psi when Psi != 0, and every lambda when both vanish.
    """
    F = field
    q = F.q
    check_cap(q * q, "curve grid", cap=CURVE_CAP)
    ps = F.p ** s
    head = Poly(F, {2 * ps + r: 1, ps + r: 1}).reduce_as_function()
    tail = Poly(F, {r: 1}).reduce_as_function()
    phi = _grid(head)
    psi = _grid(tail)
    off = ~np.eye(q, dtype=bool)
    phi, psi = phi[off], psi[off]
    flags = np.ones(q, dtype=bool)
    if ((psi == 0) & (phi == 0)).any():
        flags[:] = False
        return flags
    nz = psi != 0
    bad = F.vmul(F.vneg(phi[nz]), F.vinv(psi[nz])) if nz.any() else np.empty(0, dtype=np.int64)
    flags[bad] = False
    return flags


def _grid(g: Poly) -> np.ndarray:
    q = g.field.q
    if g.degree < 1:
        return np.zeros((q, q), dtype=np.int64)
    return difference_quotient(g).eval_grid()
