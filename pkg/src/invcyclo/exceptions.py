"""Exception hierarchy shared by every engine and mapped to CLI exit codes."""

from __future__ import annotations


class InvCycloError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(InvCycloError, ValueError):
    """An argument lies outside the domain of the requested operation."""


class NotPrimeError(DomainError):
    pass


class OrderingError(DomainError):
    pass


class AboveTotientError(DomainError):
    """r exceeds phi(pq); the trivial-case engine applies instead."""


class NotRepresentableError(DomainError):
    """r has no representation alpha*p + beta*q with alpha, beta > 0."""


class NoFamilyFoundError(DomainError):
    pass


class InexactDivisionError(InvCycloError, ArithmeticError):
    pass


class BudgetError(InvCycloError, OverflowError):
    """A value exceeds the 64-bit input range or the configured degree budget."""


class ConsistencyError(InvCycloError, AssertionError):
    """An internal self-check failed; indicates a bug, not a bad input."""
