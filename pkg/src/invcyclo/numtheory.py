"""Integer primitives: primality, modular inverses and the two decompositions.

Every residue ``0 <= b < pq`` is ``u*p + v*q`` or ``u*p + v*q - pq`` for unique
``0 <= u < q``, ``0 <= v < p``; :func:`decompose_mod_pq` computes that writing.
:class:`FamilyTriple` is the validated context passed to every formula.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .exceptions import (
    AboveTotientError,
    BudgetError,
    DomainError,
    NotPrimeError,
    NotRepresentableError,
    OrderingError,
)

INT64_MAX = 2**63 - 1

# Deterministic Miller-Rabin witness set; exact for every n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def check_int64(*values: int) -> None:
    """Raise :class:`BudgetError` if any value falls outside signed 64-bit range."""
    for v in values:
        if not -INT64_MAX - 1 <= v <= INT64_MAX:
            raise BudgetError(f"value {v} does not fit in 64 bits")


def ceil_div(a: int, b: int) -> int:
    """Mathematical ceiling of a/b for b > 0, correct for negative a."""
    return -((-a) // b)


_SIEVE_LIMIT = 1 << 20
_sieve: bytearray | None = None


def _small_sieve() -> bytearray:
    global _sieve
    if _sieve is None:
        flags = bytearray([1]) * _SIEVE_LIMIT
        flags[0] = flags[1] = 0
        for i in range(2, int(_SIEVE_LIMIT**0.5) + 1):
            if flags[i]:
                flags[i * i :: i] = bytes(len(range(i * i, _SIEVE_LIMIT, i)))
        _sieve = flags
    return _sieve


def is_prime(n: int) -> bool:
    """Exact primality for any n in signed 64-bit range."""
    check_int64(n)
    if n < 2:
        return False
    if n < _SIEVE_LIMIT:
        return bool(_small_sieve()[n])
    return miller_rabin(n)


def miller_rabin(n: int) -> bool:
    """Deterministic Miller-Rabin; exact for 2 <= n < 3.3e24."""
    for sp in _MR_BASES:
        if n % sp == 0:
            return n == sp
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def mod_inverse(a: int, m: int) -> int:
    """Return x in [1, m-1] with a*x = 1 (mod m)."""
    if m < 2:
        raise DomainError(f"modulus must be >= 2, got {m}")
    if gcd(a, m) != 1:
        raise DomainError(f"{a} is not invertible modulo {m}")
    return pow(a, -1, m)


@dataclass(frozen=True)
class Decomposition:
    u: int
    v: int
    wrapped: bool

    def value(self, p: int, q: int) -> int:
        """The residue this decomposition encodes."""
        return self.u * p + self.v * q - (p * q if self.wrapped else 0)


def decompose_mod_pq(b: int, p: int, q: int) -> Decomposition:
    if p == q:
        raise DomainError("p and q must differ")
    if not 0 <= b < p * q:
        raise DomainError(f"residue {b} outside [0, {p * q - 1}]")
    u = b * mod_inverse(p, q) % q
    v = b * mod_inverse(q, p) % p
    return Decomposition(u, v, u * p + v * q >= p * q)


def decompose_r(p: int, q: int, r: int) -> tuple[int, int] | None:
    """Return ``(alpha, beta)`` with r = alpha*p + beta*q and alpha, beta >= 1.

    ``None`` means r is not a positive combination of p and q. Raises
    :class:`AboveTotientError` when r > (p-1)(q-1), where the representation
    would no longer be unique.
    """
    if r > (p - 1) * (q - 1):
        raise AboveTotientError(f"r={r} exceeds phi(pq)={(p - 1) * (q - 1)}")
    beta = r * mod_inverse(q, p) % p
    if beta == 0:
        return None
    alpha, rem = divmod(r - beta * q, p)
    if rem or alpha < 1:
        return None
    return alpha, beta


@dataclass(frozen=True)
class FamilyTriple:
    """A validated triple p < q < r of odd primes with r = alpha*p + beta*q <= phi(pq)."""

    p: int
    q: int
    r: int
    alpha: int
    beta: int
    p_prime: int
    q_prime: int
    phi_pq: int = field(init=False)
    tau: int = field(init=False)
    deg_psi: int = field(init=False)

    def __post_init__(self) -> None:
        p, q, r = self.p, self.q, self.r
        object.__setattr__(self, "phi_pq", (p - 1) * (q - 1))
        object.__setattr__(self, "tau", (p - 1) * (q + r - 1))
        object.__setattr__(self, "deg_psi", p * q + q * r + r * p - p - q - r + 1)

    @property
    def n(self) -> int:
        return self.p * self.q * self.r


def validate_ternary(p: int, q: int, r: int) -> None:
    """Check that p < q < r are odd primes and that pqr fits in 64 bits."""
    check_int64(p, q, r)
    for name, x in (("p", p), ("q", q), ("r", r)):
        if not is_prime(x):
            raise NotPrimeError(f"{name}={x} is not prime")
    if not 3 <= p < q < r:
        raise OrderingError(f"need odd primes 3 <= p < q < r, got ({p}, {q}, {r})")
    check_int64(p * q * r)


def make_family_triple(p: int, q: int, r: int) -> FamilyTriple:
    validate_ternary(p, q, r)
    rep = decompose_r(p, q, r)
    if rep is None:
        raise NotRepresentableError(f"r={r} is not representable as alpha*{p} + beta*{q} with alpha, beta > 0")
    alpha, beta = rep
    return FamilyTriple(p, q, r, alpha, beta, mod_inverse(p, q), mod_inverse(q, p))


def make_coprime_triple(p: int, q: int, r: int) -> FamilyTriple:
    """Experimental: a family triple for pairwise coprime, not necessarily prime, p < q < r.

    The closed forms are only cross-checked empirically against
    :func:`invcyclo.polyoracle.psi_product_form` in this setting.
    """
    check_int64(p, q, r, p * q * r)
    if not 2 <= p < q < r:
        raise OrderingError(f"need 2 <= p < q < r, got ({p}, {q}, {r})")
    if gcd(p, q) != 1 or gcd(q, r) != 1 or gcd(p, r) != 1:
        raise DomainError(f"({p}, {q}, {r}) are not pairwise coprime")
    rep = decompose_r(p, q, r)
    if rep is None:
        raise NotRepresentableError(f"r={r} is not representable as alpha*{p} + beta*{q} with alpha, beta > 0")
    return FamilyTriple(p, q, r, *rep, mod_inverse(p, q), mod_inverse(q, p))
