"""Exact integer polynomials and brute-force constructions of Phi_n, Psi_n and f_pqr.

Nothing in here uses the closed-form coefficient formulas: this module is the
independent reference the fast engines are checked against.
"""

from __future__ import annotations

import functools
import threading
from dataclasses import dataclass
from math import gcd
from typing import Iterable

from .exceptions import BudgetError, DomainError, InexactDivisionError
from .numtheory import FamilyTriple, check_int64

DEFAULT_DEGREE_BUDGET = 2**20

_budget = DEFAULT_DEGREE_BUDGET


def set_degree_budget(limit: int) -> None:
    global _budget
    if limit < 1:
        raise DomainError("degree budget must be positive")
    _budget = limit


def get_degree_budget() -> int:
    return _budget


def _check_degree(d: int) -> None:
    if d > _budget:
        raise BudgetError(f"degree {d} exceeds the budget of {_budget}")


@dataclass(frozen=True, init=False)
class IntPolynomial:
    """Dense polynomial over the integers; ``coeffs[k]`` is the coefficient of x^k.

    Trailing zeros are stripped, so the zero polynomial has an empty tuple and
    ``degree`` None.

    >>> IntPolynomial([1, 0, -1])
    IntPolynomial([1, 0, -1])
    """

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> IntPolynomial:
        return cls([0] * k + [c])

    @classmethod
    def binomial(cls, k: int) -> IntPolynomial:
        """x^k - 1."""
        if k == 0:
            return cls()
        return cls([-1] + [0] * (k - 1) + [1])

    @property
    def degree(self) -> int | None:
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> int:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def terms(self) -> list[tuple[int, int]]:
        """Nonzero ``(exponent, coefficient)`` pairs in ascending order."""
        return [(k, c) for k, c in enumerate(self.coeffs) if c]

    def __mul__(self, other: IntPolynomial) -> IntPolynomial:
        return poly_mul(self, other)

    def __floordiv__(self, other: IntPolynomial) -> IntPolynomial:
        return poly_exact_div(self, other)

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        n = max(len(self), len(other))
        return IntPolynomial(self[k] - other[k] for k in range(n))

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        n = max(len(self), len(other))
        return IntPolynomial(self[k] + other[k] for k in range(n))

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        return format_sparse(self)


def format_sparse(f: IntPolynomial) -> str:
    """Render as ``c*x^k`` terms in ascending exponent order, zero terms omitted.

    >>> format_sparse(IntPolynomial([-1, 0, 2]))
    '-1*x^0 +2*x^2'
    """
    if f.is_zero():
        return "0"
    return " ".join(f"{c:+d}*x^{k}" if i else f"{c}*x^{k}" for i, (k, c) in enumerate(f.terms()))


def poly_mul(f: IntPolynomial, g: IntPolynomial) -> IntPolynomial:
    if f.is_zero() or g.is_zero():
        return IntPolynomial()
    _check_degree(f.degree + g.degree)
    # Iterate over the sparser operand; products with binomials stay linear.
    if len(f.terms()) > len(g.terms()):
        f, g = g, f
    out = [0] * (len(f) + len(g) - 1)
    dense = g.coeffs
    for i, a in f.terms():
        for j, b in enumerate(dense):
            if b:
                out[i + j] += a * b
    return IntPolynomial(out)


def poly_exact_div(f: IntPolynomial, g: IntPolynomial) -> IntPolynomial:
    """Quotient h with g*h == f; raises :class:`InexactDivisionError` otherwise."""
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if f.is_zero():
        return IntPolynomial()
    dg = g.degree
    if f.degree < dg:
        raise InexactDivisionError("divisor degree exceeds dividend degree")
    lead = g.coeffs[-1]
    lower = [(j, c) for j, c in g.terms() if j < dg]
    rem = list(f.coeffs)
    quot = [0] * (f.degree - dg + 1)
    for i in range(len(quot) - 1, -1, -1):
        c = rem[i + dg]
        if not c:
            continue
        qi, r = divmod(c, lead)
        if r:
            raise InexactDivisionError(f"leading coefficient {lead} does not divide {c}")
        quot[i] = qi
        for j, gj in lower:
            rem[i + j] -= qi * gj
    if any(rem[:dg]):
        raise InexactDivisionError("nonzero remainder")
    return IntPolynomial(quot)


def _divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _mobius(n: int) -> int:
    sign, d = 1, 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            sign = -sign
        d += 1
    return -sign if n > 1 else sign


def totient(n: int) -> int:
    result, m, d = n, n, 2
    while d * d <= m:
        if m % d == 0:
            while m % d == 0:
                m //= d
            result -= result // d
        d += 1
    if m > 1:
        result -= result // m
    return result


_memo: dict[int, IntPolynomial] = {}
_memo_lock = threading.Lock()


def _check_n(n: int) -> None:
    if n < 1:
        raise DomainError(f"index must be positive, got {n}")
    check_int64(n)
    _check_degree(n)


def cyclotomic(n: int) -> IntPolynomial:
    """Phi_n as the Moebius product of binomials x^d - 1 over divisors d of n.

    Multiplications come first so that every division is exact and linear in
    the degree.
    """
    _check_n(n)
    cached = _memo.get(n)
    if cached is not None:
        return cached
    num, den = [], []
    for d in _divisors(n):
        mu = _mobius(n // d)
        if mu == 1:
            num.append(d)
        elif mu == -1:
            den.append(d)
    f = IntPolynomial([1])
    for d in num:
        f = poly_mul(f, IntPolynomial.binomial(d))
    for d in den:
        f = poly_exact_div(f, IntPolynomial.binomial(d))
    with _memo_lock:
        _memo[n] = f
    return f


@functools.lru_cache(maxsize=None)
def cyclotomic_by_division(n: int) -> IntPolynomial:
    """Phi_n = (x^n - 1) divided successively by Phi_d for every proper divisor d.

    Quadratic in n; kept as an independent route to cross-check :func:`cyclotomic`.
    """
    _check_n(n)
    f = IntPolynomial.binomial(n)
    for d in _divisors(n)[:-1]:
        f = poly_exact_div(f, cyclotomic_by_division(d))
    return f


def inverse_cyclotomic(n: int) -> IntPolynomial:
    """Psi_n = (x^n - 1) / Phi_n."""
    if n < 2:
        raise DomainError("inverse cyclotomic polynomial needs n >= 2")
    _check_n(n)
    # Product over the divisors d < n whose binomial survives in Psi_n; the
    # long division by the dense Phi_n would be quadratic.
    num, den = [], []
    for d in _divisors(n)[:-1]:
        mu = _mobius(n // d)
        if mu == -1:
            num.append(d)
        elif mu == 1:
            den.append(d)
    f = IntPolynomial([1])
    for d in num:
        f = poly_mul(f, IntPolynomial.binomial(d))
    for d in den:
        f = poly_exact_div(f, IntPolynomial.binomial(d))
    return f


def inverse_cyclotomic_by_division(n: int) -> IntPolynomial:
    if n < 2:
        raise DomainError("inverse cyclotomic polynomial needs n >= 2")
    return poly_exact_div(IntPolynomial.binomial(n), cyclotomic_by_division(n))


def psi_product_form(p: int, q: int, r: int) -> IntPolynomial:
    """Inverse inclusion-exclusion polynomial for pairwise coprime p, q, r >= 2.

    -(1-x)(1-x^qr)(1-x^rp)(1-x^pq) / ((1-x^p)(1-x^q)(1-x^r))
    """
    if min(p, q, r) < 2:
        raise DomainError("p, q, r must all be >= 2")
    if gcd(p, q) != 1 or gcd(q, r) != 1 or gcd(p, r) != 1:
        raise DomainError(f"({p}, {q}, {r}) are not pairwise coprime")
    check_int64(p * q * r)
    _check_degree(1 + q * r + r * p + p * q)

    def one_minus(k: int) -> IntPolynomial:
        return -IntPolynomial.binomial(k)

    f = IntPolynomial([-1])
    for k in (1, q * r, r * p, p * q):
        f = poly_mul(f, one_minus(k))
    for k in (p, q, r):
        f = poly_exact_div(f, one_minus(k))
    return f


def f_polynomial(t: FamilyTriple) -> IntPolynomial:
    """(1 + x^r + ... + x^{(p-1)r}) * Phi_pq."""
    geometric = [0] * ((t.p - 1) * t.r + 1)
    geometric[:: t.r] = [1] * t.p
    return poly_mul(IntPolynomial(geometric), cyclotomic(t.p * t.q))


def height_of(f: IntPolynomial) -> int:
    return max((abs(c) for c in f.coeffs), default=0)


def coefficient_list(f: IntPolynomial, length: int) -> list[int]:
    """Coefficients padded with zeros (or truncated) to ``length`` entries."""
    c = list(f.coeffs[:length])
    return c + [0] * (length - len(c))

