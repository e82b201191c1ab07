"""The quadratic lift, the binomial x^e + b*x over F_{q^n}, and Dickson value sets.

For r = 1 one has f_lambda(x) = x (x^2 + x + mu)^(p^s) with mu^(p^s) = lambda.
With b a root of x^2 + x + mu, the permutation question for f_lambda over
F_q is compared against the binomial x^((q^n - 1)/(q - 1) + 1) + b*x over
F_{q^n}, n = 2p^s, by brute force on both sides.
"""

import math
from dataclasses import dataclass

import numpy as np

from .gf import GF, check_cap, enumeration_cap, extension, is_prime, make_field
from .permcheck import PreimageHistogram, is_cpp, is_pp, preimage_counts
from .poly import Poly, TrinomialParams, build_f, dickson


@dataclass(frozen=True)
class QuadLift:
    base: GF
    s: int
    lam: int
    mu: int
    irreducible: bool
    quad: GF | None = None
    b: int | None = None

    @property
    def conjugate(self) -> int:
        """b^q, the other root of x^2 + x + mu."""
        return self.quad.pow(self.b, self.base.q)


def lift_quadratic(base: GF, s: int, lam: int) -> QuadLift:
    """mu = lambda^(1/p^s), and F_{q^2} = F_q[x]/(x^2 + x + mu) when irreducible."""
    if base.p == 2:
        raise ValueError("characteristic 2 unsupported in bridge")
    F = base
    mu = F.pth_root(lam, s)
    disc = F.sub(1, F.mul(F.integer(4), mu))
    if F.is_square(disc):
        return QuadLift(F, s, lam, mu, False)
    quad = extension(F, 2, (mu, 1, 1))
    # x itself, coefficient vector (0, 1)
    return QuadLift(F, s, lam, mu, True, quad, F.q)


def _embedded_root(big: GF, mu: int) -> int:
    """Root of x^2 + x + mu in ``big`` via the quadratic formula, smaller index."""
    disc = big.sub(1, big.mul(big.integer(4), mu))
    w = big.sqrt(disc)
    if w is None:
        raise AssertionError("x^2 + x + mu has no root in the extension")
    half = big.inv(big.integer(2))
    roots = [big.mul(big.add(big.neg(1), sw), half) for sw in (w, big.neg(w))]
    return min(roots)


@dataclass(frozen=True)
class BinomialSetup:
    big: GF
    exponent: int
    b: int


def binomial_setup(lift: QuadLift) -> BinomialSetup:
    if not lift.irreducible:
        raise ValueError("the lift is reducible: b lies in the base field")
    q = lift.base.q
    n = 2 * lift.base.p ** lift.s
    check_cap(q ** n, "extension field")
    big = extension(lift.base, n)
    return BinomialSetup(big, (big.q - 1) // (q - 1) + 1, _embedded_root(big, lift.mu))


def nr_binomial_is_pp(lift: QuadLift) -> tuple[bool, bool]:
    """(f_lambda permutes F_q, x^e + b*x permutes F_{q^n})."""
    setup = binomial_setup(lift)
    lhs = is_pp(build_f(TrinomialParams(lift.base, lift.s, 1, lift.lam)))
    rhs = is_pp(Poly(setup.big, {setup.exponent: 1, 1: setup.b}))
    return lhs, rhs


def cpp_monomial_check(lift: QuadLift) -> tuple[bool, bool]:
    """(x^e + b*x is a PP, b^-1 x^e is a CPP) over F_{q^n}."""
    setup = binomial_setup(lift)
    big = setup.big
    binomial = Poly(big, {setup.exponent: 1, 1: setup.b})
    monomial = Poly(big, {setup.exponent: big.inv(setup.b)})
    return is_pp(binomial), is_cpp(monomial)


def bridge_grid(cap: int | None = None, max_p: int = 97) -> list[tuple[int, int, int]]:
    """Every (p odd, t, s >= 1) with (p^t)^(2p^s) within the cap."""
    cap = enumeration_cap() if cap is None else cap
    out = []
    for p in range(3, max_p + 1, 2):
        if not is_prime(p):
            continue
        t = 1
        while (p ** t) ** (2 * p) <= cap:
            s = 1
            while (p ** t) ** (2 * p ** s) <= cap:
                out.append((p, t, s))
                s += 1
            t += 1
    return out


@dataclass(frozen=True)
class BridgeRow:
    p: int
    t: int
    s: int
    lam: int
    irreducible: bool
    lhs: bool | None = None
    rhs: bool | None = None
    binomial_pp: bool | None = None
    monomial_cpp: bool | None = None

    @property
    def agree(self) -> bool | None:
        if self.rhs is None:
            return None
        return self.lhs == self.rhs and self.binomial_pp == self.monomial_cpp

    def to_row(self) -> dict:
        return {
            "p": self.p, "t": self.t, "s": self.s, "lambdaIndex": self.lam,
            "irreducible": self.irreducible, "lhs": self.lhs, "rhs": self.rhs,
            "agree": self.agree, "binomialPp": self.binomial_pp, "monomialCpp": self.monomial_cpp,
        }


def bridge_row(p: int, t: int, s: int, lam: int) -> BridgeRow:
    F = make_field(p, t)
    lift = lift_quadratic(F, s, lam)
    if not lift.irreducible:
        lhs = is_pp(build_f(TrinomialParams(F, s, 1, lam)))
        return BridgeRow(p, t, s, lam, False, lhs)
    lhs, rhs = nr_binomial_is_pp(lift)
    binomial_pp, monomial_cpp = cpp_monomial_check(lift)
    return BridgeRow(p, t, s, lam, True, lhs, rhs, binomial_pp, monomial_cpp)


def z_set(n: int) -> set[int]:
    """Preimage counts allowed for a point under D_n when n | Q + 1."""
    allowed = {1, n, (n + 1) // 2}
    if n % 2 == 0:
        allowed.add(n // 2)
    return allowed


@dataclass(frozen=True)
class DicksonReport:
    field: GF
    n: int
    a: int
    poly: Poly
    histogram: PreimageHistogram
    z_claim: bool
    pp: bool
    pp_expected: bool

    @property
    def holds(self) -> bool:
        return self.z_claim and (self.pp or not self.pp_expected)


def dickson_report(field: GF, n: int, a: int) -> DicksonReport:
    if n < 1 or n % field.p == 0:
        raise ValueError("degree must be positive and prime to p")
    if a == 0:
        raise ValueError("a must be nonzero")
    D = dickson(field, n, a)
    hist = preimage_counts(D)
    Q = field.q
    # D_n(x, a), a != 0, permutes F_Q exactly when gcd(n, Q^2 - 1) = 1
    expected = math.gcd(n, Q * Q - 1) == 1
    return DicksonReport(field, n, a, D, hist, hist.nonzero_counts <= z_set(n), hist.is_permutation, expected)


def dickson_preimage_claim_check(field: GF, n: int, a: int) -> bool:
    return dickson_report(field, n, a).holds


def dickson_claim_all_a(field: GF, n: int) -> bool:
    """The Z-set claim for every a != 0, via one value-set per square class.

    D_n(c x, c^2 a) = c^n D_n(x, a), so a and c^2 a give the same preimage
    histogram. The scaling identity is checked coefficient-wise on the
    recurrence for all a at once before the representatives are used.
    """
    F = field
    q = F.q
    if n < 1 or n % F.p == 0:
        raise ValueError("degree must be positive and prime to p")
    check_cap(q)
    a_all = np.arange(1, q, dtype=np.int64)
    coeffs = _dickson_coeffs_all_a(F, n, a_all)
    reps = [1] if F.p == 2 else [1, F.primitive_element]
    rep_coeffs = {a0: dickson(F, n, a0).to_dense() for a0 in reps}
    log_a = F.vlog(a_all)
    half_class = log_a % 2 if F.p != 2 else np.zeros_like(log_a)
    for cls, a0 in enumerate(reps):
        sel = half_class == cls
        if not sel.any():
            continue
        # c^2 = a / a0
        if F.p == 2:
            c = F.vexp(log_a[sel] * (q // 2))
        else:
            c = F.vexp((log_a[sel] - F.vlog(np.array(a0))) // 2)
        for k in range(n + 1):
            want = F.vmul(F.vpow(c, n - k), rep_coeffs[a0][k])
            if not np.array_equal(coeffs[k][sel], want):
                return False
    return all(dickson_report(F, n, a0).holds for a0 in reps)


def _dickson_coeffs_all_a(F: GF, n: int, a: np.ndarray) -> list[np.ndarray]:
    """Coefficient arrays of D_n(x, a) indexed [k][a], by the recurrence."""
    zero = np.zeros_like(a)
    prev = [np.full_like(a, F.integer(2))]
    cur = [zero, np.ones_like(a)]
    if n == 0:
        return prev
    for _ in range(n - 1):
        nxt = [zero] + cur
        for k, c in enumerate(prev):
            nxt[k] = F.vsub(nxt[k], F.vmul(a, c))
        prev, cur = cur, nxt
    return cur
