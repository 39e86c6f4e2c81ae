"""Height and flatness of Psi_pqr for family triples r = alpha*p + beta*q."""

from __future__ import annotations

from dataclasses import dataclass

from .coeffengine import e_closed
from .exceptions import ConsistencyError
from .numtheory import FamilyTriple, ceil_div
from .polyoracle import height_of, inverse_cyclotomic

VERIFY_WITNESSES = True


def _positive_bound(t: FamilyTriple) -> int:
    return min(ceil_div(t.p_prime, t.alpha), ceil_div(t.q_prime, t.beta))


def _negative_bound(t: FamilyTriple) -> int:
    return min(ceil_div(t.q - t.p_prime, t.alpha), ceil_div(t.p - t.q_prime, t.beta))


def height_formula(t: FamilyTriple) -> int:
    """Height C(pqr) of Psi_pqr in closed form."""
    return max(_positive_bound(t), _negative_bound(t))


@dataclass(frozen=True)
class HeightReport:
    c_formula: int
    h_formula: int
    m1: int
    m2: int
    e_m1: int
    e_m2: int
    c_oracle: int | None = None

    @property
    def verified(self) -> bool | None:
        if self.c_oracle is None:
            return None
        return self.c_oracle == self.c_formula


def h_witnesses(t: FamilyTriple, verify: bool | None = None, oracle: bool = False) -> HeightReport:
    """Exponents m1, m2 where f_pqr reaches its maximum and minimum coefficient.

    With ``verify`` (default :data:`VERIFY_WITNESSES`) the predicted values of
    e(m1), e(m2) are checked with the closed-form engine; ``oracle`` also
    expands Psi_pqr and records its height.
    """
    if verify is None:
        verify = VERIFY_WITNESSES
    pos, neg = _positive_bound(t), _negative_bound(t)
    m1 = (pos - 1) * t.r
    m2 = (neg - 1) * t.r + 1
    pq = t.p * t.q
    e1, e2 = e_closed(t, m1), e_closed(t, m2)
    if verify:
        if not (m1 < pq and m2 < pq):
            raise ConsistencyError(f"witness exponents {m1}, {m2} not below pq={pq} for {t}")
        if e1 != pos or e2 != -neg:
            raise ConsistencyError(f"e({m1})={e1}, e({m2})={e2}; expected {pos}, {-neg} for {t}")
    c = max(pos, neg)
    c_oracle = height_of(inverse_cyclotomic(t.n)) if oracle else None
    if verify and c_oracle is not None and c_oracle != c:
        raise ConsistencyError(f"oracle height {c_oracle} != formula {c} for {t}")
    return HeightReport(c, max(pos, neg), m1, m2, e1, e2, c_oracle)


@dataclass(frozen=True)
class FlatnessVerdict:
    flat: bool
    cond_a: bool
    cond_b: bool
    cond_c: bool
    cond_d: bool

    @property
    def conditions(self) -> tuple[bool, bool, bool, bool]:
        return self.cond_a, self.cond_b, self.cond_c, self.cond_d


def is_flat(t: FamilyTriple) -> FlatnessVerdict:
    alpha, beta, p, q = t.alpha, t.beta, t.p, t.q
    pp, qp = t.p_prime, t.q_prime
    a = alpha >= max(pp, q - pp)
    b = beta >= max(qp, p - qp)
    c = alpha >= pp and beta >= p - qp
    d = alpha >= q - pp and beta >= qp
    return FlatnessVerdict(a or b or c or d, a, b, c, d)


def moree_bound_1996(t: FamilyTriple) -> int | None:
    """Moree's upper bound on C(pqr), available only when deg Psi_pqr < 2qr."""
    if t.deg_psi >= 2 * t.q * t.r:
        return None
    return max(min(t.p_prime, t.q_prime), min(t.q - t.p_prime, t.p - t.q_prime))
