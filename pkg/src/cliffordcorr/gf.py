"""Prime field arithmetic and univariate polynomials over GF(p).

Bulk linear algebra works on plain integer arrays (see :mod:`linalg`);
:class:`FieldElement` is the scalar-level type used at API boundaries.
Polynomials store plain integer coefficients together with their modulus.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import InvalidInput, NotSplit

EXHAUSTIVE_ROOT_BOUND = 1 << 12
SPLIT_ROUNDS = 16


@lru_cache(maxsize=None)
def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, math.isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def check_modulus(p: int) -> int:
    if not isinstance(p, (int, np.integer)) or isinstance(p, bool):
        raise InvalidInput(f"modulus must be an integer, got {p!r}")
    p = int(p)
    if not is_prime(p):
        raise InvalidInput(f"modulus {p} is not prime")
    if p == 2:
        raise InvalidInput("p = 2 is not supported; use an odd splitting prime")
    return p


@dataclass(frozen=True)
class FieldElement:
    value: int
    p: int

    def __post_init__(self):
        check_modulus(self.p)
        object.__setattr__(self, "value", int(self.value) % self.p)

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.p != self.p:
                raise InvalidInput(f"field mismatch: GF({self.p}) vs GF({other.p})")
            return other.value
        if isinstance(other, (int, np.integer)):
            return int(other) % self.p
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else FieldElement(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else FieldElement(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else FieldElement(o - self.value, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else FieldElement(self.value * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement(-self.value, self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * inv(FieldElement(o, self.p))

    def __pow__(self, e: int):
        if e < 0:
            return inv(self) ** (-e)
        return FieldElement(pow(self.value, e, self.p), self.p)

    def __int__(self):
        return self.value

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"{self.value} mod {self.p}"


def inv(a: FieldElement) -> FieldElement:
    if a.value == 0:
        raise ZeroDivisionError(f"0 has no inverse in GF({a.p})")
    return FieldElement(pow(a.value, -1, a.p), a.p)


def _trim(coeffs, p) -> tuple[int, ...]:
    c = [int(x) % p for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class Polynomial:
    """Dense polynomial, lowest degree first.  The zero polynomial has no coefficients."""

    coeffs: tuple[int, ...]
    p: int

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(self.coeffs, self.p))

    @classmethod
    def x(cls, p: int) -> Polynomial:
        return cls((0, 1), p)

    @classmethod
    def const(cls, c: int, p: int) -> Polynomial:
        return cls((c,), p)

    @classmethod
    def from_roots(cls, roots, p: int) -> Polynomial:
        f = cls((1,), p)
        for r in roots:
            f = f * cls((-int(r), 1), p)
        return f

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def coefficients(self) -> list[FieldElement]:
        return [FieldElement(c, self.p) for c in self.coeffs]

    def is_zero(self) -> bool:
        return not self.coeffs

    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def monic(self) -> Polynomial:
        if self.is_zero():
            return self
        s = pow(self.lead(), -1, self.p)
        return Polynomial(tuple(c * s for c in self.coeffs), self.p)

    def __add__(self, other: Polynomial) -> Polynomial:
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return Polynomial(tuple(x + y for x, y in zip(a, b)), self.p)

    def __neg__(self) -> Polynomial:
        return Polynomial(tuple(-c for c in self.coeffs), self.p)

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def __mul__(self, other) -> Polynomial:
        if isinstance(other, (int, np.integer)):
            return Polynomial(tuple(c * int(other) for c in self.coeffs), self.p)
        if self.is_zero() or other.is_zero():
            return Polynomial((), self.p)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(tuple(out), self.p)

    __rmul__ = __mul__

    def __divmod__(self, other: Polynomial) -> tuple[Polynomial, Polynomial]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        p = self.p
        r = list(self.coeffs)
        dq = len(r) - len(other.coeffs)
        if dq < 0:
            return Polynomial((), p), self
        q = [0] * (dq + 1)
        li = pow(other.lead(), -1, p)
        m = len(other.coeffs)
        for k in range(dq, -1, -1):
            c = r[k + m - 1] * li % p
            q[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    r[k + j] = (r[k + j] - c * b) % p
        return Polynomial(tuple(q), p), Polynomial(tuple(r[: m - 1]), p)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x: int | FieldElement) -> FieldElement:
        x = int(x)
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.p
        return FieldElement(acc, self.p)

    def derivative(self) -> Polynomial:
        return Polynomial(tuple(i * c for i, c in enumerate(self.coeffs))[1:], self.p)

    def powmod(self, e: int, mod: Polynomial) -> Polynomial:
        result = Polynomial((1,), self.p) % mod
        base = self % mod
        while e:
            if e & 1:
                result = (result * base) % mod
            base = (base * base) % mod
            e >>= 1
        return result

    def __repr__(self):
        if self.is_zero():
            return f"0 (mod {self.p})"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c:
                terms.append(f"{c}" if i == 0 else f"{c}*x^{i}" if c != 1 else f"x^{i}")
        return " + ".join(terms) + f" (mod {self.p})"


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_xgcd(a: Polynomial, b: Polynomial) -> tuple[Polynomial, Polynomial, Polynomial]:
    """Return (g, s, t) with s*a + t*b = g, g monic."""
    p = a.p
    r0, r1 = a, b
    s0, s1 = Polynomial((1,), p), Polynomial((), p)
    t0, t1 = Polynomial((), p), Polynomial((1,), p)
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    li = pow(r0.lead(), -1, p)
    return r0 * li, s0 * li, t0 * li


def is_squarefree(f: Polynomial) -> bool:
    return poly_gcd(f, f.derivative()).degree == 0


def linear_part(f: Polynomial) -> Polynomial:
    """Product of the distinct linear factors of f: gcd(f, x^p - x)."""
    x = Polynomial.x(f.p)
    return poly_gcd(f, x.powmod(f.p, f) - x)


def _split(g: Polynomial, rng: random.Random, out: list[int]) -> None:
    p = g.p
    if g.degree == 0:
        return
    if g.degree == 1:
        g = g.monic()
        out.append(-g.coeffs[0] % p)
        return
    for _ in range(SPLIT_ROUNDS):
        a = rng.randrange(p)
        h = Polynomial((a, 1), p).powmod((p - 1) // 2, g) - Polynomial((1,), p)
        d = poly_gcd(g, h)
        if 0 < d.degree < g.degree:
            _split(d, rng, out)
            _split(g // d, rng, out)
            return
    if p <= EXHAUSTIVE_ROOT_BOUND:
        out.extend(r for r in range(p) if g(r).value == 0)
        return
    raise NotSplit(f"randomized splitting of degree-{g.degree} factor failed")


def roots_of_split_squarefree(f: Polynomial, seed: int = 0) -> set[FieldElement]:
    """All roots of a squarefree f that splits into linear factors over GF(p)."""
    if f.is_zero():
        raise InvalidInput("the zero polynomial has no finite root set")
    p = f.p
    if p == 2:
        raise InvalidInput("p = 2 is not supported")
    rng = random.Random(seed)
    found: list[int] = []
    _split(linear_part(f), rng, found)
    roots = {r % p for r in found if f(r).value == 0}
    if len(roots) < f.degree:
        raise NotSplit(
            f"only {len(roots)} of {f.degree} roots lie in GF({p}); field is not splitting for {f}"
        )
    return {FieldElement(r, p) for r in roots}


def minimal_polynomial(m: np.ndarray, p: int) -> Polynomial:
    """Monic least-degree polynomial annihilating the square matrix m."""
    from .linalg import IncrementalSpan, matmul

    m = np.asarray(m, dtype=np.int64) % p
    n = m.shape[0]
    if m.shape != (n, n):
        raise InvalidInput(f"minimal_polynomial needs a square matrix, got {m.shape}")
    span = IncrementalSpan(n * n, p)
    power = np.eye(n, dtype=np.int64)
    for k in range(n + 1):
        coeffs = span.express(power.ravel())
        if coeffs is not None:
            return Polynomial(tuple(-c for c in coeffs) + (1,), p)
        span.add(power.ravel())
        power = matmul(power, m, p)
    raise AssertionError("Cayley-Hamilton violated")  # pragma: no cover
