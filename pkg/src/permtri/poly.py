"""Sparse polynomials over a GF, the trinomial builders and Dickson polynomials."""

import itertools
import json
import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .gf import GF, FieldMismatchError, check_cap, extension, make_field

_CHUNK = 1 << 20


class Poly:
    """A univariate polynomial over ``field`` stored as {exponent: coefficient}.

    Coefficients are element indices; zero coefficients are never stored, so
    the zero polynomial has empty ``terms``.
    """

    __slots__ = ("field", "terms")

    def __init__(self, field: GF, terms=()):
        items = terms.items() if isinstance(terms, dict) else terms
        clean = {}
        for k, c in items:
            k, c = int(k), int(c)
            if k < 0:
                raise ValueError("negative exponent")
            if not 0 <= c < field.q:
                raise ValueError(f"coefficient {c} outside {field}")
            if c:
                clean[k] = field.add(clean.get(k, 0), c)
                if clean[k] == 0:
                    del clean[k]
        self.field = field
        self.terms = clean

    @classmethod
    def x(cls, field: GF) -> "Poly":
        return cls(field, {1: 1})

    @classmethod
    def constant(cls, field: GF, c: int) -> "Poly":
        return cls(field, {0: c})

    @classmethod
    def from_dense(cls, field: GF, coeffs) -> "Poly":
        return cls(field, enumerate(coeffs))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return max(self.terms, default=-1)

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, k: int) -> int:
        return self.terms.get(k, 0)

    def to_dense(self) -> list[int]:
        out = [0] * (self.degree + 1)
        for k, c in self.terms.items():
            out[k] = c
        return out

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.field == other.field and self.terms == other.terms

    def __hash__(self):
        return hash((self.field, tuple(sorted(self.terms.items()))))

    def __repr__(self):
        if not self.terms:
            return f"Poly({self.field}, 0)"
        parts = []
        for k in sorted(self.terms, reverse=True):
            c = self.terms[k]
            mono = "1" if k == 0 else "x" if k == 1 else f"x^{k}"
            parts.append(mono if c == 1 and k else f"{c}" if k == 0 else f"{c}*{mono}")
        return f"Poly({self.field}, {' + '.join(parts)})"

    # ring operations --------------------------------------------------------
    def _check(self, other: "Poly"):
        if other.field != self.field:
            raise FieldMismatchError(f"{self.field} vs {other.field}")

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        return Poly(self.field, itertools.chain(self.terms.items(), other.terms.items()))

    def __neg__(self) -> "Poly":
        F = self.field
        return Poly(F, {k: F.neg(c) for k, c in self.terms.items()})

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def scale(self, c: int) -> "Poly":
        F = self.field
        return Poly(F, {k: F.mul(v, c) for k, v in self.terms.items()})

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        F = self.field
        out: dict[int, int] = {}
        for i, a in self.terms.items():
            for j, b in other.terms.items():
                out[i + j] = F.add(out.get(i + j, 0), F.mul(a, b))
        return Poly(F, out)

    def pow_by_squaring(self, n: int) -> "Poly":
        """Generic ring exponentiation; slow for large n, kept as a cross-check."""
        result = Poly.constant(self.field, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __pow__(self, n: int) -> "Poly":
        """self**n by the multinomial theorem with coefficients reduced mod p.

        A multinomial coefficient is nonzero mod p exactly when the parts add
        without carries in base p, and then it is the product of the
        digit-wise multinomials (Lucas). So the expansion factors over the
        base-p digits of n, and only carry-free compositions are enumerated.
        """
        if n < 0:
            raise ValueError("negative power")
        F = self.field
        p = F.p
        terms = sorted(self.terms.items())
        result = {0: 1}
        if n == 0:
            return Poly(F, result)
        if not terms:
            return Poly(F, {})
        scale = 1
        while n:
            n, digit = divmod(n, p)
            if digit:
                level: dict[int, int] = {}
                for parts in _compositions(digit, len(terms)):
                    coef = _multinomial(digit, parts) % p
                    exp = 0
                    for (k, c), m in zip(terms, parts):
                        if m:
                            coef = F.mul(coef, F.pow(c, m * scale))
                            exp += k * m * scale
                    level[exp] = F.add(level.get(exp, 0), coef)
                merged: dict[int, int] = {}
                for i, a in result.items():
                    for j, b in level.items():
                        if b:
                            merged[i + j] = F.add(merged.get(i + j, 0), F.mul(a, b))
                result = {k: v for k, v in merged.items() if v}
            scale *= p
        return Poly(F, result)

    def compose_affine(self, a: int, b: int) -> "Poly":
        """self(a*x + b), expanded."""
        F = self.field
        lin = Poly(F, {1: a, 0: b})
        out = Poly(F, {})
        for k, c in self.terms.items():
            out = out + (lin ** k).scale(c)
        return out

    def reduce_as_function(self) -> "Poly":
        """The unique polynomial of degree < q inducing the same map on F_q."""
        q = self.field.q
        return Poly(self.field, [((k - 1) % (q - 1) + 1 if k else 0, c) for k, c in self.terms.items()])

    # evaluation -------------------------------------------------------------
    def _target(self, field: GF | None) -> GF:
        if field is None:
            return self.field
        if not field.contains(self.field):
            raise FieldMismatchError(f"no embedding of {self.field} into {field}")
        return field

    def eval(self, x: int, field: GF | None = None) -> int:
        """f(x); with ``field`` given, x lives in an extension of f's field."""
        F = self._target(field)
        acc = 0
        for k, c in self.terms.items():
            acc = F.add(acc, F.mul(c, F.pow(x, k)))
        return acc

    def eval_many(self, xs, field: GF | None = None) -> np.ndarray:
        F = self._target(field)
        xs = np.asarray(xs, dtype=np.int64)
        acc = np.zeros_like(xs)
        for k, c in self.terms.items():
            term = F.vpow(xs, k)
            if c != 1:
                term = F.vmul(term, c)
            acc = F.vadd(acc, term)
        return acc

    def eval_all(self, field: GF | None = None) -> np.ndarray:
        """Values at every element of the field, in index order."""
        F = self._target(field)
        check_cap(F.q)
        return np.concatenate([
            self.eval_many(np.arange(lo, min(lo + _CHUNK, F.q), dtype=np.int64), F)
            for lo in range(0, F.q, _CHUNK)
        ])

    def lift(self, field: GF) -> "Poly":
        """The same polynomial with coefficients embedded in ``field``."""
        self._target(field)
        return Poly(field, self.terms)

    def divide_linear(self, root: int) -> tuple["Poly", int]:
        """Synthetic division by (x - root): (quotient, remainder)."""
        F = self.field
        dense = self.to_dense()
        if not dense:
            return Poly(F, {}), 0
        quo = [0] * (len(dense) - 1)
        acc = 0
        for k in range(len(dense) - 1, -1, -1):
            acc = F.add(F.mul(acc, root), dense[k])
            if k:
                quo[k - 1] = acc
        return Poly.from_dense(F, quo), acc

    # serialization ----------------------------------------------------------
    def to_json(self) -> dict:
        return {
            "field": {"p": self.field.p, "t": self.field.t},
            "terms": [[k, self.terms[k]] for k in sorted(self.terms, reverse=True)],
        }

    @classmethod
    def from_json(cls, obj) -> "Poly":
        if isinstance(obj, str):
            obj = json.loads(obj)
        F = make_field(obj["field"]["p"], obj["field"]["t"])
        return cls(F, [(k, c) for k, c in obj["terms"]])


def _compositions(n: int, parts: int):
    if parts == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for rest in _compositions(n - first, parts - 1):
            yield (first,) + rest


def _multinomial(n: int, parts) -> int:
    out, left = 1, n
    for m in parts:
        out *= math.comb(left, m)
        left -= m
    return out


class BiPoly:
    """A bivariate polynomial {(i, j): coefficient} for x^i y^j."""

    __slots__ = ("field", "support")

    def __init__(self, field: GF, support=()):
        items = support.items() if isinstance(support, dict) else support
        clean: dict[tuple[int, int], int] = {}
        for (i, j), c in items:
            if c:
                key = (int(i), int(j))
                v = field.add(clean.get(key, 0), int(c))
                if v:
                    clean[key] = v
                else:
                    clean.pop(key, None)
        self.field = field
        self.support = clean

    @property
    def total_degree(self) -> int:
        return max((i + j for i, j in self.support), default=-1)

    def __eq__(self, other):
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.field == other.field and self.support == other.support

    def __mul__(self, other: "BiPoly") -> "BiPoly":
        if other.field != self.field:
            raise FieldMismatchError(f"{self.field} vs {other.field}")
        F = self.field
        out: dict[tuple[int, int], int] = {}
        for (i, j), a in self.support.items():
            for (k, m), b in other.support.items():
                key = (i + k, j + m)
                out[key] = F.add(out.get(key, 0), F.mul(a, b))
        return BiPoly(F, out)

    def eval(self, x: int, y: int, field: GF | None = None) -> int:
        F = self.field if field is None else field
        if not F.contains(self.field):
            raise FieldMismatchError(f"no embedding of {self.field} into {F}")
        acc = 0
        for (i, j), c in self.support.items():
            acc = F.add(acc, F.mul(c, F.mul(F.pow(x, i), F.pow(y, j))))
        return acc

    def eval_grid(self) -> np.ndarray:
        """Matrix of values phi(x, y) over all of F_q x F_q.

        Exponents are folded mod x^q - x (same values on F_q), the
        coefficients laid out as a q-by-q matrix C, and the grid obtained as
        V C V^T with the Vandermonde matrix V[x, i] = x^i.
        """
        F = self.field
        q = F.q
        check_cap(q * q, "curve grid")
        C = np.zeros((q, q), dtype=np.int64)
        fold = lambda k: (k - 1) % (q - 1) + 1 if k else 0
        for (i, j), c in self.support.items():
            a, b = fold(i), fold(j)
            C[a, b] = F.add(int(C[a, b]), c)
        xs = np.arange(q, dtype=np.int64)
        V = np.stack([F.vpow(xs, i) for i in range(q)], axis=1)
        return F.matmul(F.matmul(V, C), V.T)


@dataclass(frozen=True)
class TrinomialParams:
    """(field, s, r, lambda) for x^(2p^s+r) + x^(p^s+r) + lambda*x^r."""

    field: GF
    s: int
    r: int
    lam: int

    def __post_init__(self):
        if self.s < 0 or self.r < 0:
            raise ValueError("s and r must be non-negative")
        if not 0 <= self.lam < self.field.q:
            raise ValueError(f"lambda index {self.lam} outside {self.field}")

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def t(self) -> int:
        return self.field.t

    @cached_property
    def exponents(self) -> tuple[int, int, int]:
        ps = self.p ** self.s
        return 2 * ps + self.r, ps + self.r, self.r


def build_f(params: TrinomialParams) -> Poly:
    e2, e1, e0 = params.exponents
    return Poly(params.field, {e2: 1, e1: 1, e0: params.lam})


def build_g(field: GF, s: int, r: int, alpha: int, beta: int) -> Poly:
    """x^(2p^s+r) + alpha*x^(p^s+r) + beta*x^r."""
    ps = field.p ** s
    return Poly(field, {2 * ps + r: 1, ps + r: alpha, r: beta})


def reduce_general_trinomial(field: GF, s: int, r: int, alpha: int, beta: int) -> tuple[int, int]:
    """(gamma, lambda) with gamma^(p^s) = alpha and gamma^-(2p^s+r) g(gamma x) = f_lambda(x)."""
    if alpha == 0:
        raise ValueError("alpha must be nonzero")
    F = field
    gamma = F.pth_root(alpha, s)
    lam = F.div(beta, F.mul(alpha, alpha))
    return gamma, lam


def rescale(f: Poly, gamma: int, power: int) -> Poly:
    """gamma^(-power) * f(gamma * x), coefficient by coefficient."""
    F = f.field
    inv = F.inv(F.pow(gamma, power))
    return Poly(F, {k: F.mul(inv, F.mul(c, F.pow(gamma, k))) for k, c in f.terms.items()})


def dickson(field: GF, n: int, a: int) -> Poly:
    """D_n(x, a) from D_0 = 2, D_1 = x, D_k = x D_{k-1} - a D_{k-2}."""
    if n < 0:
        raise ValueError("degree must be >= 0")
    F = field
    prev, cur = Poly.constant(F, F.integer(2)), Poly.x(F)
    if n == 0:
        return prev
    x = Poly.x(F)
    for _ in range(n - 1):
        prev, cur = cur, x * cur - prev.scale(a)
    return cur


def difference_quotient(f: Poly) -> BiPoly:
    """phi(x, y) = (f(x) - f(y)) / (x - y), expanded term by term."""
    if f.degree < 1:
        raise ValueError("difference quotient needs degree >= 1")
    support: dict[tuple[int, int], int] = {}
    F = f.field
    for k, c in f.terms.items():
        for i in range(k):
            key = (i, k - 1 - i)
            support[key] = F.add(support.get(key, 0), c)
    return BiPoly(F, support)


def roots_with_multiplicity(f: Poly, n: int = 1) -> list[tuple[int, int]]:
    """Roots of f in F_{q^n} (exhaustive search) with multiplicities, by index."""
    E = f.field if n == 1 else extension(f.field, n)
    check_cap(E.q)
    values = f.eval_all(E)
    lifted = f.lift(E)
    out = []
    for root in np.flatnonzero(values == 0).tolist():
        mult, g = 0, lifted
        while True:
            quo, rem = g.divide_linear(root)
            if rem:
                break
            mult += 1
            g = quo
        out.append((root, mult))
    return out
