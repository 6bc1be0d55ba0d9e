"""Evaluation context and error types shared across the library.

All series and infinite products in the package are truncated under a
single policy object, :class:`QContext`, so that every caller can tighten
or relax tolerances consistently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


class QawError(Exception):
    """Base class for all library errors."""


class NonConvergence(QawError):
    """A series or product failed to converge under the context policy.

    Carries the last partial sum and the magnitude of the last term so the
    caller can report how far the evaluation got.
    """

    def __init__(self, message, partial=None, last_term=None):
        super().__init__(message)
        self.partial = partial
        self.last_term = last_term


class DivisionByZero(QawError):
    """A denominator Pochhammer symbol or factor vanished."""


class PoleError(QawError):
    """Evaluation requested at a pole (e.g. q-gamma at a nonpositive integer)."""


class DomainError(QawError):
    """Arguments violate a documented precondition."""


class KSumDivergence(QawError):
    """The outer k-series of a fractional identity shows no empirical decay.

    Raised instead of silently returning a truncated value; carries the term
    magnitudes observed so the failure can be attached to a report.
    """

    def __init__(self, message, k=None, term_magnitude=None, partial=None):
        super().__init__(message)
        self.k = k
        self.term_magnitude = term_magnitude
        self.partial = partial


class WindowFailure(QawError):
    """No integration window with a sufficiently small tail could be found.

    ``probes`` maps each probed half-width T to the observed log-magnitude.
    """

    def __init__(self, message, probes=None):
        super().__init__(message)
        self.probes = probes or {}


@dataclass(frozen=True)
class QContext:
    """Base q together with all truncation and tolerance policy.

    q                 base, must lie in the open interval (0, 1)
    eps_term          relative tail tolerance for series
    eps_factor        product-factor cutoff for infinite products
    max_terms         cap on series terms
    max_factors       cap on product factors
    consecutive_small successive below-tolerance terms required to stop
    """

    q: float
    eps_term: float = 1e-15
    eps_factor: float = 1e-17
    max_terms: int = 10_000
    max_factors: int = 10_000
    consecutive_small: int = 3

    def __post_init__(self):
        if not (0.0 < self.q < 1.0) or not math.isfinite(self.q):
            raise DomainError(f"q must lie in (0, 1), got {self.q}")
        if self.eps_term <= 0 or self.eps_factor <= 0:
            raise DomainError("tolerances must be strictly positive")
        if self.max_terms <= 0 or self.max_factors <= 0:
            raise DomainError("term/factor caps must be strictly positive")
        if self.consecutive_small <= 0:
            raise DomainError("consecutive_small must be strictly positive")
