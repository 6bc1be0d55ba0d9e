"""Operator layer: Thomae-Jackson q-integral, the generalized fractional
q-integral, the q-difference operator D_c and the Cauchy operator T(a, b D_c).

Integrands are plain callables mapping a point to a complex value; they must
be pure and deterministic.  Point evaluations inside an operator call are
cached per call, never globally.
"""

from __future__ import annotations

from .context import DomainError, NonConvergence, QContext
from .qcore import q_gamma, q_pochhammer_infinite


def jackson_q_integral(f, a: float, b: float, ctx: QContext) -> complex:
    """Thomae-Jackson q-integral of f over [a, b].

    (1-q) sum_n q^n [b f(b q^n) - a f(a q^n)], truncated once
    ``ctx.consecutive_small`` successive terms fall below the relative
    tolerance.
    """
    q = ctx.q
    total = complex(0.0)
    qn = 1.0
    small = 0
    for _ in range(ctx.max_terms):
        term = complex(0.0)
        if b != 0:
            term += b * f(b * qn)
        if a != 0:
            term -= a * f(a * qn)
        term *= qn
        total += term
        if abs(term) < ctx.eps_term * max(abs(total), 1e-300):
            small += 1
            if small >= ctx.consecutive_small:
                return (1.0 - q) * total
        else:
            small = 0
        qn *= q
    raise NonConvergence(
        f"Jackson q-integral over [{a}, {b}] did not converge in "
        f"{ctx.max_terms} terms",
        partial=(1.0 - q) * total,
        last_term=abs(term),
    )


def fractional_q_integral(f, x: float, a: float, mu: float, ctx: QContext) -> complex:
    """Riemann-Liouville-type fractional q-integral of order mu, lower limit a.

    Evaluated through the two-sided sum

        x^{mu-1}(1-q)/Gamma_q(mu) *
        sum_n q^n [x (q^{n+1};q)_{mu-1} f(x q^n)
                   - a (a q^{n+1}/x;q)_{mu-1} f(a q^n)]

    with the fractional Pochhammer factors advanced by exact one-step
    recurrences.  ``a = 0`` drops the lower-limit branch.
    """
    if mu <= 0:
        raise DomainError(f"fractional order must be positive, got {mu}")
    if a < 0 or a >= x:
        raise DomainError(f"need 0 <= a < x, got a={a}, x={x}")
    q = ctx.q
    pref = x ** (mu - 1.0) * (1.0 - q) / q_gamma(mu, ctx)

    # (q^{n+1};q)_{mu-1} and (a q^{n+1}/x;q)_{mu-1} at n = 0
    cx = q_pochhammer_infinite(q, ctx) / q_pochhammer_infinite(q**mu, ctx)
    ax = a / x
    if a != 0:
        ca = q_pochhammer_infinite(ax * q, ctx) / q_pochhammer_infinite(
            ax * q**mu, ctx
        )
    total = complex(0.0)
    qn = 1.0
    small = 0
    for n in range(ctx.max_terms):
        term = x * cx * f(x * qn)
        if a != 0:
            term -= a * ca * f(a * qn)
        term *= qn
        total += term
        if abs(term) < ctx.eps_term * max(abs(total), 1e-300):
            small += 1
            if small >= ctx.consecutive_small:
                return pref * total
        else:
            small = 0
        cx *= (1.0 - q ** (n + mu)) / (1.0 - q ** (n + 1))
        if a != 0:
            ca *= (1.0 - ax * q ** (n + mu)) / (1.0 - ax * q ** (n + 1))
        qn *= q
    raise NonConvergence(
        f"fractional q-integral (mu={mu}) did not converge in {ctx.max_terms} terms",
        partial=pref * total,
        last_term=abs(term),
    )


def q_difference(f, c: complex, q: float) -> complex:
    """q-difference operator D_c{f} = (f(c) - f(c q)) / c."""
    if c == 0:
        raise DomainError("q-difference operator undefined at c = 0")
    return (f(c) - f(c * q)) / c


def cauchy_T_apply(a: complex, b: complex, f, c: complex, n_max: int, ctx: QContext) -> complex:
    """Cauchy operator T(a, b D_c) applied to f, evaluated at c.

    sum_{n=0}^{n_max} (a;q)_n/(q;q)_n b^n (D_c)^n f, with the n-th
    q-difference power computed by literal nested differences on the
    geometric points c, cq, ..., c q^{n_max}.  Point evaluations of f are
    cached for the duration of this call.
    """
    if c == 0:
        raise DomainError("Cauchy operator needs c != 0")
    q = ctx.q
    if b == 0:
        return f(c)

    # nested q-differences: after n passes, level[j] holds (D_c)^n f at c q^j.
    # Each pass divides by c q^j, so rounding noise in the level values is
    # amplified by ~ q^{-n(n-1)/2}; once the (decaying) true terms fall below
    # that noise floor the computed terms start growing again, and the sum
    # must stop there rather than absorb amplified rounding noise.
    level = [f(c * q**j) for j in range(n_max + 1)]
    total = complex(level[0])
    poch_ratio = complex(1.0)  # (a;q)_n / (q;q)_n
    bn = complex(1.0)
    prev_mag = abs(total)
    last_mag = prev_mag
    small = 0
    for n in range(1, n_max + 1):
        level = [
            (level[j] - level[j + 1]) / (c * q**j) for j in range(len(level) - 1)
        ]
        poch_ratio *= (1.0 - a * q ** (n - 1)) / (1.0 - q**n)
        bn *= b
        term = poch_ratio * bn * level[0]
        mag = abs(term)
        scale = max(abs(total), 1e-300)
        if mag > last_mag and last_mag <= 1e-8 * scale:
            return total  # roundoff floor of the nested differences
        total += term
        if mag < ctx.eps_term * scale:
            small += 1
            if small >= ctx.consecutive_small:
                return total
        else:
            small = 0
        prev_mag, last_mag = last_mag, mag
    if last_mag > ctx.eps_term * max(abs(total), 1e-300) and last_mag >= prev_mag:
        raise NonConvergence(
            f"Cauchy operator series terms non-decaying at n_max={n_max}",
            partial=total,
            last_term=last_mag,
        )
    return total


def cauchy_T_reciprocal_closed(a: complex, b: complex, c: complex, t: complex, ctx: QContext) -> complex:
    """Closed form of T(a, b D_c) acting on 1/(c t;q)_inf.

    Equals (a b t;q)_inf / ((b t;q)_inf (c t;q)_inf) for max(|bt|, |ct|) < 1.
    """
    if max(abs(b * t), abs(c * t)) >= 1.0:
        raise DomainError(
            f"closed form requires max(|bt|, |ct|) < 1, got "
            f"{max(abs(b * t), abs(c * t)):.3f}"
        )
    num = q_pochhammer_infinite(a * b * t, ctx)
    den = q_pochhammer_infinite(b * t, ctx) * q_pochhammer_infinite(c * t, ctx)
    return num / den


def difference_eq_residual(f, a: complex, b: complex, c: complex, q: float) -> complex:
    """Residual of the three-variable q-difference equation.

    (c - b) f(a,b,c) - a b f(a,bq,cq) + b f(a,b,cq) - (c - a b) f(a,bq,c);
    zero (within tolerance) iff f satisfies the equation at this point.
    """
    return (
        (c - b) * f(a, b, c)
        - a * b * f(a, b * q, c * q)
        + b * f(a, b, c * q)
        - (c - a * b) * f(a, b * q, c)
    )
