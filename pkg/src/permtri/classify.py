"""Reduced degree, Frobenius normalization and the classification predicate.

The predicate is applied to normalized parameters: x -> x^(p^m) permutes
F_{p^t}, so f_lambda and the normalized f'_lambda' permute together, and
the listed families are matched after normalization.
"""

import enum
from dataclasses import dataclass

import numpy as np

from .gf import GF, extension, make_field
from .permcheck import is_pp, pp_sweep
from .poly import BiPoly, Poly, TrinomialParams, build_f, difference_quotient


def _split_p(r: int, p: int) -> tuple[int, int]:
    """r = p^u * v with p not dividing v (r > 0)."""
    u = 0
    while r % p == 0:
        r //= p
        u += 1
    return u, r


def reduced_degree(p: int, s: int, r: int) -> tuple[int, int]:
    """(d, m): m is the largest n with p^n dividing 2p^s+r, p^s+r and r.

    For r = 0 the degree is defined to be 0 while m = s.
    """
    if s < 0 or r < 0:
        raise ValueError("s and r must be non-negative")
    ps = p ** s
    m = 0
    while (2 * ps + r) % p ** (m + 1) == 0 and (ps + r) % p ** (m + 1) == 0 and r % p ** (m + 1) == 0:
        m += 1
    if r == 0:
        return 0, m
    d = (2 * ps + r) // p ** m
    u, v = _split_p(r, p)
    closed = 2 * p ** (s - u) + v if u <= s else 2 + p ** (u - s) * v
    assert closed == d and m == min(u, s), (p, s, r, d, closed, m)
    return d, m


@dataclass(frozen=True)
class NormalizedParams:
    s: int
    r: int
    lam: int
    m: int
    d: int


def normalize(params: TrinomialParams) -> NormalizedParams:
    """Strip the common p^m from the exponents; lambda' is the p^m-th root of lambda."""
    F, p = params.field, params.p
    d, m = reduced_degree(p, params.s, params.r)
    lam = F.pth_root(params.lam, m)
    return NormalizedParams(params.s - m, params.r // p ** m, lam, m, d)


def normalized_poly(params: TrinomialParams) -> Poly:
    n = normalize(params)
    return build_f(TrinomialParams(params.field, n.s, n.r, n.lam))


def frobenius_identity_holds(params: TrinomialParams) -> bool:
    """f_lambda == (f'_lambda')^(p^m) as polynomials."""
    n = normalize(params)
    return build_f(params) == normalized_poly(params) ** (params.p ** n.m)


def theorem_applicable(params: TrinomialParams) -> bool:
    d, _ = reduced_degree(params.p, params.s, params.r)
    return d ** 4 < params.field.q


def _family_lambdas(F: GF, s: int, r: int) -> set[int]:
    """Normalized lambdas that give a permutation when d^4 < q (empty if none)."""
    p, t = F.p, F.t
    if t % 2 == 0 or r != 1:
        return set()
    out = set()
    if p == 2 and s in (0, 1):
        out.add(1)
    if p % 3 == 2 and s == 0:
        out.add(F.inv(F.integer(3)))
    return out


def theorem_predict(params: TrinomialParams) -> bool:
    if not theorem_applicable(params):
        raise ValueError("d^4 < p^t fails: the classification does not apply")
    n = normalize(params)
    return n.lam in _family_lambdas(params.field, n.s, n.r)


def predicted_lambdas(field: GF, s: int, r: int) -> set[int]:
    """Every lambda (unnormalized) the classification marks as a permutation."""
    d, m = reduced_degree(field.p, s, r)
    base = _family_lambdas(field, s - m, r // field.p ** m if r else 0)
    return {field.pow(c, field.p ** m) for c in base}


@dataclass(frozen=True)
class Verdict:
    params: TrinomialParams
    d: int
    applicable: bool
    is_pp: bool
    predicted: bool | None
    agrees: bool | None

    def to_row(self) -> dict:
        P = self.params
        return {
            "p": P.p, "t": P.t, "s": P.s, "r": P.r, "lambdaIndex": P.lam, "d": self.d,
            "applicable": self.applicable, "isPp": self.is_pp,
            "predicted": self.predicted, "agrees": self.agrees,
        }


def verdict(params: TrinomialParams, pp: bool | None = None) -> Verdict:
    d, _ = reduced_degree(params.p, params.s, params.r)
    if pp is None:
        pp = is_pp(build_f(params))
    applicable = d ** 4 < params.field.q
    predicted = theorem_predict(params) if applicable else None
    agrees = None if predicted is None else predicted == pp
    return Verdict(params, d, applicable, bool(pp), predicted, agrees)


@dataclass(frozen=True)
class CellResult:
    """One (field, s, r) sweep: brute-force and predicted flags by lambda index."""

    field: GF
    s: int
    r: int
    d: int
    applicable: bool
    pp: np.ndarray
    predicted: np.ndarray | None

    @property
    def disagreements(self) -> list[int]:
        if self.predicted is None:
            return []
        return np.flatnonzero(self.pp != self.predicted).tolist()

    def verdicts(self) -> list[Verdict]:
        F = self.field
        out = []
        for lam, pp in enumerate(self.pp.tolist()):
            pred = None if self.predicted is None else bool(self.predicted[lam])
            out.append(Verdict(TrinomialParams(F, self.s, self.r, lam), self.d, self.applicable,
                               pp, pred, None if pred is None else pred == pp))
        return out


def sweep_cell(field: GF, s: int, r: int) -> CellResult:
    d, _ = reduced_degree(field.p, s, r)
    applicable = d ** 4 < field.q
    pp = pp_sweep(field, s, r)
    predicted = None
    if applicable:
        predicted = np.zeros(field.q, dtype=bool)
        predicted[list(predicted_lambdas(field, s, r))] = True
    return CellResult(field, s, r, d, applicable, pp, predicted)


def scan_lambda(field: GF, s: int, r: int) -> list[Verdict]:
    """One verdict per lambda in index order."""
    return sweep_cell(field, s, r).verdicts()


def r0_symmetry_check(params: TrinomialParams) -> bool:
    """Check f(x) == f(-x-1) symbolically for r = 0, and that f does not permute."""
    if params.r != 0:
        raise ValueError("the symmetry applies only to r = 0")
    F = params.field
    f = build_f(params)
    minus_one = F.neg(1)
    identity = f.compose_affine(minus_one, minus_one) == f
    if identity:
        assert not is_pp(f), params
    return identity


class Split(enum.Enum):
    BASE = "splits_over_base"
    QUADRATIC = "splits_over_quadratic_ext_only"
    NONE = "no_linear_split"


@dataclass(frozen=True)
class CubicSplit:
    kind: Split
    field: GF | None = None
    sqrt_minus3: int | None = None
    factors: tuple[BiPoly, BiPoly] | None = None


def cubic_diff_quotient_analysis(field: GF, lam: int) -> CubicSplit:
    """Decide how x^2+xy+y^2+x+y+lambda splits into linear factors.

    It splits only for p != 3 and lambda = 1/3, as
    (x + (1+w)/2 y + 1/2 + w/6)(x + (1-w)/2 y + 1/2 - w/6) with w^2 = -3.
    The product is re-expanded and compared with the difference quotient.
    """
    p = field.p
    if p == 2:
        raise ValueError("characteristic 2 is outside the cubic analysis")
    if p == 3 or lam != field.inv(field.integer(3)):
        return CubicSplit(Split.NONE)
    minus3 = field.neg(field.integer(3))
    w = field.sqrt(minus3)
    E, kind = field, Split.BASE
    if w is None:
        E, kind = extension(field, 2), Split.QUADRATIC
        w = E.sqrt(minus3)
    half, sixth = E.inv(E.integer(2)), E.inv(E.integer(6))
    factors = []
    for sign_w in (w, E.neg(w)):
        factors.append(BiPoly(E, {
            (1, 0): 1,
            (0, 1): E.mul(E.add(1, sign_w), half),
            (0, 0): E.add(half, E.mul(sign_w, sixth)),
        }))
    target = difference_quotient(Poly(E, {3: 1, 2: 1, 1: lam}))
    if factors[0] * factors[1] != target:
        raise AssertionError("factor product does not reproduce the difference quotient")
    return CubicSplit(kind, E, w, tuple(factors))


def minus3_square_iff(p: int, t: int) -> tuple[bool, bool]:
    """(-3 is a non-square in F_{p^t}, t odd and p = 2 mod 3), for odd p != 3."""
    if p == 3:
        raise ValueError("-3 = 0 in characteristic 3")
    if p == 2:
        raise ValueError("every element is a square in characteristic 2")
    F = make_field(p, t)
    lhs = not F.is_square(F.neg(F.integer(3)))
    rhs = t % 2 == 1 and p % 3 == 2
    return lhs, rhs
