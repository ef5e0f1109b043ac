"""Arbitrary-precision real arithmetic and the zeta-family constants.

Every routine takes an explicit PrecisionContext and returns values
bound to that context's mpf type.  Truncation cutoffs for the
Euler-Maclaurin sums are driven by the standard remainder bounds at the
working precision, never by fixed term counts, so doubling the digits
of a context reproduces all reported values to the shorter width.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from mpmath.ctx_mp import MPContext

_BERNOULLI: list[Fraction] = [Fraction(1)]


def bernoulli_fraction(m: int) -> Fraction:
    """Exact Bernoulli number B_m (convention B_1 = -1/2).

    Grown on demand via sum_{j<=m} binom(m+1, j) B_j = 0; the cache fill
    is append-only and idempotent.
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    while len(_BERNOULLI) <= m:
        k = len(_BERNOULLI)
        s = sum(Fraction(comb(k + 1, j)) * _BERNOULLI[j] for j in range(k))
        _BERNOULLI.append(-s / (k + 1))
    return _BERNOULLI[m]


class PrecisionContext:
    """Independent working-precision context (decimal digits >= 50).

    Arithmetic runs at digits + guard decimal places on a private mpmath
    context, so two PrecisionContext instances never interact through
    global state.
    """

    def __init__(self, digits: int = 50, guard: int = 10):
        if digits < 50:
            raise ValueError("digits must be >= 50")
        if guard < 5:
            raise ValueError("guard must be >= 5")
        self.digits = digits
        self.guard = guard
        mp = MPContext()
        mp.dps = digits + guard
        self._mp = mp
        self._cache: dict = {}

    @property
    def mp(self) -> MPContext:
        return self._mp

    def real(self, x):
        """Promote int / Fraction / str / mpf to this context's mpf."""
        if isinstance(x, Fraction):
            return self._mp.mpf(x.numerator) / x.denominator
        return self._mp.mpf(x)

    def power_frac(self, x, e: Fraction):
        """x^e for positive real x and exact rational e."""
        if x <= 0:
            raise ValueError("power_frac needs a positive base")
        return self._mp.power(x, self.real(e))

    def eps_target(self):
        """Absolute tail target: below the last guarded digit."""
        return self._mp.mpf(10) ** (-(self.digits + self.guard))

    def to_str(self, x, digits: int | None = None) -> str:
        from mpmath import nstr

        return nstr(x, digits or self.digits)

    def __repr__(self) -> str:  # pragma: no cover
        return f"PrecisionContext(digits={self.digits}, guard={self.guard})"


def pi_real(ctx: PrecisionContext):
    return +ctx.mp.pi


def ln2pi(ctx: PrecisionContext):
    return ctx.mp.log(2 * ctx.mp.pi)


def factorial_real(n: int, ctx: PrecisionContext):
    """n! as a context real (exact integer, rounded once)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return ctx.real(factorial(n))


def zeta_nonpos(d: int) -> Fraction:
    """zeta(-d) = (-1)^d B_{d+1}/(d+1), exact."""
    if d < 0:
        raise ValueError("d must be >= 0")
    return (-1) ** d * Fraction(bernoulli_fraction(d + 1), d + 1)


def _rising_int(s: int, k: int) -> int:
    # s (s+1) ... (s+k-1)
    out = 1
    for t in range(k):
        out *= s + t
    return out


def zeta_int(m: int, ctx: PrecisionContext):
    """zeta(m) for integer m >= 2.

    Even m goes through the exact Bernoulli closed form
    zeta(2k) = (-1)^{k+1} B_{2k} (2 pi)^{2k} / (2 (2k)!); odd m through
    Euler-Maclaurin with the remainder bounded by the first omitted
    correction term (valid for real m >= 2).
    """
    if m < 2:
        raise ValueError("m must be >= 2 (use zeta_nonpos for s <= 0)")
    key = ("zeta", m)
    if key in ctx._cache:
        return ctx._cache[key]
    mp = ctx.mp
    if m % 2 == 0:
        k = m // 2
        coeff = Fraction((-1) ** (k + 1) * bernoulli_fraction(2 * k), 2 * factorial(2 * k))
        val = ctx.real(coeff) * mp.power(2 * mp.pi, m)
    else:
        val = _zeta_em(m, ctx)
    ctx._cache[key] = val
    return val


def _zeta_em(m: int, ctx: PrecisionContext):
    mp = ctx.mp
    target = ctx.eps_target()
    cutoff = max(8, (ctx.digits + ctx.guard) // 2)
    while True:
        big_n = cutoff
        val = mp.mpf(0)
        for n in range(1, big_n + 1):
            val += mp.mpf(1) / mp.mpf(n**m)
        val += mp.mpf(1) / ((m - 1) * mp.mpf(big_n ** (m - 1)))
        val -= mp.mpf(1) / (2 * mp.mpf(big_n**m))
        prev = mp.inf
        k = 1
        ok = False
        while True:
            coeff = Fraction(
                bernoulli_fraction(2 * k) * _rising_int(m, 2 * k - 1), factorial(2 * k)
            )
            term = ctx.real(coeff) / mp.mpf(big_n ** (m + 2 * k - 1))
            if abs(term) < target:
                ok = True  # remainder <= first omitted term < target
                break
            if abs(term) > prev:
                break  # divergent regime; raise the cutoff
            val += term
            prev = abs(term)
            k += 1
        if ok:
            return val
        cutoff *= 2


def zeta_prime_int(m: int, ctx: PrecisionContext):
    """zeta'(m) for integer m >= 2, by the term-wise differentiated
    Euler-Maclaurin formula; remainder bound = first omitted
    differentiated term with a safety factor of 4."""
    if m < 2:
        raise ValueError("m must be >= 2")
    key = ("zeta_prime", m)
    if key in ctx._cache:
        return ctx._cache[key]
    mp = ctx.mp
    target = ctx.eps_target()
    cutoff = max(8, (ctx.digits + ctx.guard) // 2)
    while True:
        big_n = cutoff
        logs = [None] * (big_n + 1)
        for n in range(2, big_n + 1):
            logs[n] = mp.log(n)
        log_n = logs[big_n] if big_n >= 2 else mp.log(big_n)
        val = mp.mpf(0)
        for n in range(2, big_n + 1):
            val -= logs[n] / mp.mpf(n**m)
        # d/ds [N^{1-s}/(s-1)] and d/ds [-N^{-s}/2] at s = m
        pow_n1 = mp.mpf(1) / mp.mpf(big_n ** (m - 1))
        val += pow_n1 * (-log_n / (m - 1) - mp.mpf(1) / (m - 1) ** 2)
        val += log_n / (2 * mp.mpf(big_n**m))
        prev = mp.inf
        k = 1
        ok = False
        while True:
            rise = _rising_int(m, 2 * k - 1)
            coeff = Fraction(bernoulli_fraction(2 * k) * rise, factorial(2 * k))
            harm = sum(mp.mpf(1) / (m + i) for i in range(2 * k - 1))
            term = ctx.real(coeff) * (harm - log_n) / mp.mpf(big_n ** (m + 2 * k - 1))
            if abs(term) < target / 4:
                ok = True
                break
            if abs(term) > prev:
                break
            val += term
            prev = abs(term)
            k += 1
        if ok:
            ctx._cache[key] = val
            return val
        cutoff *= 2


def euler_gamma(ctx: PrecisionContext):
    """Euler-Mascheroni constant via
    gamma = H_N - ln N - 1/(2N) + sum_k B_{2k}/(2k N^{2k});
    the B_{2k} alternate in sign, so the truncation error is bounded by
    the first omitted term."""
    key = ("gamma",)
    if key in ctx._cache:
        return ctx._cache[key]
    mp = ctx.mp
    target = ctx.eps_target()
    cutoff = max(16, (ctx.digits + ctx.guard) // 2)
    while True:
        big_n = cutoff
        val = mp.mpf(0)
        for n in range(1, big_n + 1):
            val += mp.mpf(1) / n
        val -= mp.log(big_n)
        val -= mp.mpf(1) / (2 * big_n)
        prev = mp.inf
        k = 1
        ok = False
        while True:
            coeff = Fraction(bernoulli_fraction(2 * k), 2 * k)
            term = ctx.real(coeff) / mp.mpf(big_n ** (2 * k))
            if abs(term) < target:
                ok = True
                break
            if abs(term) > prev:
                break
            val += term
            prev = abs(term)
            k += 1
        if ok:
            ctx._cache[key] = val
            return val
        cutoff *= 2


def zeta_prime_neg(d: int, ctx: PrecisionContext):
    """zeta'(-d) for 0 <= d <= 6.

    d = 0: -ln(2 pi)/2.  Even d: (-1)^{d/2} d! zeta(d+1) / (2 (2 pi)^d).
    Odd d: differentiate the functional equation, which needs zeta(d+1),
    zeta'(d+1), and psi(d+1) = H_d - gamma.
    """
    if not 0 <= d <= 6:
        raise ValueError("d must be in 0..6")
    key = ("zeta_prime_neg", d)
    if key in ctx._cache:
        return ctx._cache[key]
    mp = ctx.mp
    if d == 0:
        val = -ln2pi(ctx) / 2
    elif d % 2 == 0:
        sign = (-1) ** (d // 2)
        val = sign * factorial(d) * zeta_int(d + 1, ctx) / (2 * mp.power(2 * mp.pi, d))
    else:
        chi = (
            mp.power(2, -d)
            * mp.power(mp.pi, -d - 1)
            * (-1) ** ((d + 1) // 2)
            * factorial(d)
        )
        psi = -euler_gamma(ctx) + sum(mp.mpf(1) / k for k in range(1, d + 1))
        val = chi * ((ln2pi(ctx) - psi) * zeta_int(d + 1, ctx) - zeta_prime_int(d + 1, ctx))
    ctx._cache[key] = val
    return val
