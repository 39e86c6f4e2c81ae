"""Coefficients of Phi_pq, f_pqr and Psi_pqr without expanding any polynomial.

``e_closed`` is the O(1) path. ``e_summation`` sums at most p values of
``a_pq``, and the oracle method reads the expanded Psi_pqr, so the three
methods can be compared against each other.
"""

from __future__ import annotations

import enum
import functools
from dataclasses import dataclass

from .exceptions import ConsistencyError, DomainError
from .numtheory import FamilyTriple, ceil_div, decompose_mod_pq, is_prime, mod_inverse
from .polyoracle import inverse_cyclotomic


class EvalMethod(enum.Enum):
    CLOSED_FORM = "fast"
    SUMMATION = "sum"
    ORACLE = "oracle"


def min_geq0(values) -> int:
    values = list(values)
    if not values:
        raise DomainError("min_geq0 of an empty collection")
    return max(0, min(values))


@functools.lru_cache(maxsize=4096)
def _inverses(p: int, q: int) -> tuple[int, int]:
    return mod_inverse(p, q), mod_inverse(q, p)


def a_pq(p: int, q: int, m: int) -> int:
    """Coefficient of x^m in Phi_pq, zero outside [0, phi(pq)]."""
    if m < 0 or m > (p - 1) * (q - 1):
        return 0
    p_inv, q_inv = _inverses(p, q)
    u = m * p_inv % q
    v = m * q_inv % p
    if u < p_inv and v < q_inv:
        return 1
    if u >= p_inv and v >= q_inv:
        return -1
    return 0


def c_pq(p: int, q: int, a: int) -> int:
    """Coefficient of x^a in Psi_pq = (x^q - 1)(1 + x + ... + x^{p-1})."""
    if 0 <= a < p:
        return -1
    if q <= a < p + q:
        return 1
    return 0


def e_summation(t: FamilyTriple, m: int) -> int:
    """Coefficient of x^m in f_pqr as a sum of Phi_pq coefficients; needs m < pr."""
    if not 0 <= m < t.p * t.r:
        raise DomainError(f"summation needs 0 <= m < pr = {t.p * t.r}, got {m}")
    return sum(a_pq(t.p, t.q, m - j * t.r) for j in range(m // t.r + 1))


@dataclass(frozen=True)
class WrappedCaseTrace:
    a: int
    b: int
    u: int
    v: int
    j0: int
    a_star: int
    u_star: int
    v_star: int
    e_plus: int
    e_minus: int

    @property
    def value(self) -> int:
        return self.e_plus - self.e_minus


def wrapped_case(t: FamilyTriple, a: int, b: int, u: int, v: int) -> WrappedCaseTrace:
    """Evaluate e_pqr((a-1)r + b) when b + pq = u*p + v*q."""
    p, q, alpha, beta = t.p, t.q, t.alpha, t.beta
    pp, qp = t.p_prime, t.q_prime
    ju = ceil_div(q - u, alpha)
    jv = ceil_div(p - v, beta)
    j0 = min(ju, jv)
    a_star = a - j0
    if j0 == ju:
        # Ties take this branch: a tie forces j0 >= a, so e_plus is 0 either way.
        u_star, v_star = u + j0 * alpha - q, v + j0 * beta
    else:
        u_star, v_star = u + j0 * alpha, v + j0 * beta - p
    if j0 < a and not (0 <= u_star < q and 0 <= v_star < p):
        raise ConsistencyError(f"(u*, v*) = ({u_star}, {v_star}) out of range for {t}")
    e_plus = min_geq0((a_star, ceil_div(pp - u_star, alpha), ceil_div(qp - v_star, beta)))
    e_minus = min_geq0((
        min(a, ju, jv) - max(0, ceil_div(pp - u, alpha), ceil_div(qp - v, beta)),
    ))
    return WrappedCaseTrace(a, b, u, v, j0, a_star, u_star, v_star, e_plus, e_minus)


def _e_below_pq(t: FamilyTriple, m: int) -> int:
    a = m // t.r + 1
    b = m % t.r
    d = decompose_mod_pq(b, t.p, t.q)
    if not d.wrapped:
        return min_geq0((a, ceil_div(t.p_prime - d.u, t.alpha), ceil_div(t.q_prime - d.v, t.beta)))
    return wrapped_case(t, a, b, d.u, d.v).value


def e_closed(t: FamilyTriple, m: int) -> int:
    """Coefficient of x^m in f_pqr in constant time; zero outside [0, tau]."""
    if m < 0 or m > t.tau:
        return 0
    pq = t.p * t.q
    if m >= t.p * t.r:
        m = t.tau - m
    if m > pq:
        m -= t.r * ceil_div(m - pq, t.r)
    if m == pq:
        # a_pq(pq) = 0, so the leading summand vanishes.
        m = pq - t.r
    return _e_below_pq(t, m)


def _e_summation_total(t: FamilyTriple, m: int) -> int:
    if m < 0 or m > t.tau:
        return 0
    if m >= t.p * t.r:
        m = t.tau - m
    return e_summation(t, m)


@functools.lru_cache(maxsize=8)
def _oracle_coeffs(n: int) -> tuple[int, ...]:
    return inverse_cyclotomic(n).coeffs


def c_coeff(t: FamilyTriple, m: int, method: EvalMethod = EvalMethod.CLOSED_FORM) -> int:
    """Coefficient of x^m in Psi_pqr, via e(m - qr) - e(m) or the expanded polynomial."""
    if not 0 <= m <= t.deg_psi:
        raise DomainError(f"exponent {m} outside [0, {t.deg_psi}]")
    if method is EvalMethod.ORACLE:
        coeffs = _oracle_coeffs(t.n)
        return coeffs[m] if m < len(coeffs) else 0
    e = e_closed if method is EvalMethod.CLOSED_FORM else _e_summation_total
    return e(t, m - t.q * t.r) - e(t, m)


def _check_trivial(p: int, q: int, r: int) -> int:
    for x in (p, q, r):
        if not is_prime(x):
            raise DomainError(f"{x} is not prime")
    if not p < q < r:
        raise DomainError(f"need p < q < r, got ({p}, {q}, {r})")
    if r <= (p - 1) * (q - 1):
        raise DomainError(f"r={r} <= phi(pq); use the family engine")
    return p * q + q * r + r * p - p - q - r + 1


def c_trivial_case(p: int, q: int, r: int, m: int) -> int:
    """Coefficient of x^m in Psi_pqr when r > phi(pq), from Psi_pq(x^r) * Phi_pq(x)."""
    deg = _check_trivial(p, q, r)
    if not 0 <= m <= deg:
        raise DomainError(f"exponent {m} outside [0, {deg}]")
    a, b = divmod(m, r)
    return a_pq(p, q, b) * c_pq(p, q, a)


def trivial_case_coefficients(p: int, q: int, r: int) -> list[int]:
    """All coefficients of Psi_pqr for r > phi(pq), validated once."""
    deg = _check_trivial(p, q, r)
    out = []
    for m in range(deg + 1):
        a, b = divmod(m, r)
        out.append(a_pq(p, q, b) * c_pq(p, q, a))
    return out
