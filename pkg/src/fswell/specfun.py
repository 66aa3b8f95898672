"""Bessel-function kernel for the orders reachable from integer dimension.

Supported orders are nu >= -1/2 in half-integer steps.  They split into two
families with different evaluation strategies:

* half-integer orders (odd dimension) reduce to elementary closed forms of
  sin/cos/sinh/exp, evaluated through the spherical-function recurrences
  (downward with Miller-style normalization where upward is unstable);
* integer orders (even dimension) use ascending power series at small
  argument -- accumulated in compensated double-double arithmetic where the
  alternating series cancels -- Hankel-type asymptotic expansions at large
  argument, and a continued fraction for K in between.

All functions are pure and safe for unrestricted concurrent use.
"""

from __future__ import annotations

import math

from .errors import ConvergenceError, DomainError

__all__ = [
    "EULER_GAMMA",
    "bessel_j",
    "bessel_y",
    "bessel_i",
    "bessel_k",
    "bessel_i_scaled",
    "bessel_k_scaled",
    "bessel_j_zero",
    "small_argument_forms",
]

EULER_GAMMA = 0.5772156649015328606065120900824024

# Argument thresholds between evaluation regimes (integer orders).
_SERIES_PLAIN_MAX = 8.0   # plain-double series keeps cancellation below ~1e-13
_SERIES_DD_MAX = 21.0     # double-double series; Hankel expansion beyond
_K_SERIES_MAX = 2.0       # log series for K_n; continued fraction beyond
_I_SERIES_MAX = 35.0      # all-positive series for I_n; asymptotics beyond


def _validate_order(nu: float) -> float:
    nu = float(nu)
    if not math.isfinite(nu):
        raise DomainError(f"Bessel order must be finite, got {nu!r}")
    if 2.0 * nu != round(2.0 * nu):
        raise DomainError(f"order {nu} is not an integer multiple of 1/2")
    if nu < -0.5:
        raise DomainError(f"order {nu} < -1/2 is outside the supported range")
    return nu


def _validate_x(x: float, name: str = "x") -> float:
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f"{name} must be finite, got {x!r}")
    if x < 0.0:
        raise DomainError(f"{name} must be nonnegative, got {x}")
    return x


def _is_half_integer(nu: float) -> bool:
    return nu != round(nu)


# ---------------------------------------------------------------------------
# double-double arithmetic (only the operations the series need)
# ---------------------------------------------------------------------------

_SPLITTER = 134217729.0  # 2**27 + 1, Dekker splitting constant

_GAMMA_DD = (0.5772156649015329, -4.942915152430645e-18)


def _two_sum(a, b):
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def _two_prod(a, b):
    p = a * b
    ta = _SPLITTER * a
    ahi = ta - (ta - a)
    alo = a - ahi
    tb = _SPLITTER * b
    bhi = tb - (tb - b)
    blo = b - bhi
    return p, ((ahi * bhi - p) + ahi * blo + alo * bhi) + alo * blo


def _dd_add(x, y):
    s, e = _two_sum(x[0], y[0])
    e += x[1] + y[1]
    hi = s + e
    return hi, e - (hi - s)


def _dd_mul(x, y):
    p, e = _two_prod(x[0], y[0])
    e += x[0] * y[1] + x[1] * y[0]
    hi = p + e
    return hi, e - (hi - p)


def _dd_mul_d(x, c):
    p, e = _two_prod(x[0], c)
    e += x[1] * c
    hi = p + e
    return hi, e - (hi - p)


def _dd_div_d(x, c):
    q = x[0] / c
    p, e = _two_prod(q, c)
    r = (((x[0] - p) - e) + x[1]) / c
    hi = q + r
    return hi, r - (hi - q)


# ---------------------------------------------------------------------------
# integer orders: ascending series
# ---------------------------------------------------------------------------

def _besselj_int_series(n: int, x: float) -> float:
    q = 0.25 * x * x
    term = 1.0
    for i in range(1, n + 1):
        term *= 0.5 * x / i
    total = term
    peak = abs(term)
    for k in range(1, 300):
        term *= -q / (k * (n + k))
        total += term
        a = abs(term)
        if a > peak:
            peak = a
        elif a < 1e-17 * peak:
            return total
    raise ConvergenceError(f"J_{n} series did not converge at x={x}")


def _besselj_int_series_dd(n: int, x: float):
    half = (0.5 * x, 0.0)
    q = _dd_mul(half, half)
    term = (1.0, 0.0)
    for i in range(1, n + 1):
        term = _dd_div_d(_dd_mul(term, half), float(i))
    total = term
    peak = abs(term[0])
    for k in range(1, 400):
        term = _dd_div_d(_dd_mul(term, q), float(-k * (n + k)))
        total = _dd_add(total, term)
        a = abs(term[0])
        if a > peak:
            peak = a
        elif a < 1e-34 * peak:
            return total
    raise ConvergenceError(f"J_{n} dd series did not converge at x={x}")


def _bessely_int_series(n: int, x: float) -> float:
    # DLMF 10.8.1 written so that 1/pi factors out of every piece.
    q = 0.25 * x * x
    halfpow = (0.5 * x) ** n
    fin = 0.0
    if n > 0:
        t = math.factorial(n - 1)
        fin = t
        for k in range(1, n):
            t *= q / (k * (n - k))
            fin += t
        fin /= halfpow
    jn = _besselj_int_series(n, x)
    lg = math.log(0.5 * x)
    u = 1.0 / math.factorial(n)
    hk = 0.0
    hnk = sum(1.0 / j for j in range(1, n + 1))
    s = u * (hk + hnk - 2.0 * EULER_GAMMA)
    peak = abs(s)
    for k in range(1, 300):
        u *= -q / (k * (n + k))
        hk += 1.0 / k
        hnk += 1.0 / (n + k)
        term = u * (hk + hnk - 2.0 * EULER_GAMMA)
        s += term
        a = abs(term)
        if a > peak:
            peak = a
        elif a < 1e-17 * peak:
            break
    else:
        raise ConvergenceError(f"Y_{n} series did not converge at x={x}")
    return (-fin + 2.0 * lg * jn - halfpow * s) / math.pi


def _bessely_int_series_dd(n: int, x: float) -> float:
    half = (0.5 * x, 0.0)
    q = _dd_mul(half, half)
    halfpow = (1.0, 0.0)
    for _ in range(n):
        halfpow = _dd_mul(halfpow, half)
    fin = (0.0, 0.0)
    if n > 0:
        t = (float(math.factorial(n - 1)), 0.0)
        fin = t
        for k in range(1, n):
            t = _dd_div_d(_dd_mul(t, q), float(k * (n - k)))
            fin = _dd_add(fin, t)
        fin = _dd_div_d(fin, halfpow[0] + halfpow[1])
    jn = _besselj_int_series_dd(n, x)
    lg = math.log(0.5 * x)
    u = _dd_div_d((1.0, 0.0), float(math.factorial(n)))
    hk = (0.0, 0.0)
    hnk = (0.0, 0.0)
    for j in range(1, n + 1):
        hnk = _dd_add(hnk, _dd_div_d((1.0, 0.0), float(j)))
    coef = _dd_add(_dd_add(hk, hnk), _dd_mul_d(_GAMMA_DD, -2.0))
    s = _dd_mul(u, coef)
    peak = abs(s[0])
    converged = False
    for k in range(1, 400):
        u = _dd_div_d(_dd_mul(u, q), float(-k * (n + k)))
        hk = _dd_add(hk, _dd_div_d((1.0, 0.0), float(k)))
        hnk = _dd_add(hnk, _dd_div_d((1.0, 0.0), float(n + k)))
        coef = _dd_add(_dd_add(hk, hnk), _dd_mul_d(_GAMMA_DD, -2.0))
        term = _dd_mul(u, coef)
        s = _dd_add(s, term)
        a = abs(term[0])
        if a > peak:
            peak = a
        elif a < 1e-34 * peak:
            converged = True
            break
    if not converged:
        raise ConvergenceError(f"Y_{n} dd series did not converge at x={x}")
    bracket = _dd_mul_d(fin, -1.0)
    bracket = _dd_add(bracket, _dd_mul_d(jn, 2.0 * lg))
    bracket = _dd_add(bracket, _dd_mul_d(_dd_mul(halfpow, s), -1.0))
    out = _dd_mul_d(bracket, 1.0 / math.pi)
    return out[0] + out[1]


def _besseli_int_series(n: int, x: float) -> float:
    q = 0.25 * x * x
    term = 1.0
    for i in range(1, n + 1):
        term *= 0.5 * x / i
    total = term
    for k in range(1, 400):
        term *= q / (k * (n + k))
        total += term
        if term < 1e-17 * total:
            return total
    raise ConvergenceError(f"I_{n} series did not converge at x={x}")


def _besselk_int_series(n: int, x: float) -> float:
    # DLMF 10.31.2; benign for x <= 2, plain double suffices.
    q = 0.25 * x * x
    halfpow = (0.5 * x) ** n
    fin = 0.0
    if n > 0:
        t = math.factorial(n - 1)
        fin = t
        for k in range(1, n):
            t *= -q / (k * (n - k))
            fin += t
        fin *= 0.5 / halfpow
    inx = _besseli_int_series(n, x)
    lg = math.log(0.5 * x)
    u = 1.0 / math.factorial(n)
    hk = 0.0
    hnk = sum(1.0 / j for j in range(1, n + 1))
    s = u * (hk + hnk - 2.0 * EULER_GAMMA)
    for k in range(1, 300):
        u *= q / (k * (n + k))
        hk += 1.0 / k
        hnk += 1.0 / (n + k)
        term = u * (hk + hnk - 2.0 * EULER_GAMMA)
        s += term
        if abs(term) < 1e-17 * max(abs(s), 1e-300):
            break
    else:
        raise ConvergenceError(f"K_{n} series did not converge at x={x}")
    sign = 1.0 if n % 2 == 0 else -1.0  # (-1)^n
    return fin - sign * lg * inx + sign * 0.5 * halfpow * s


def _besselk_int_cf2_scaled(n: int, x: float) -> float:
    """e^x K_n(x) for x > 2 via the Thompson-Barnett continued fraction."""
    a1 = 0.25
    b = 2.0 * (1.0 + x)
    d = 1.0 / b
    h = delh = d
    q1, q2 = 0.0, 1.0
    q = c = a1
    a = -a1
    s = 1.0 + q * delh
    for i in range(2, 30000):
        a -= 2.0 * (i - 1)
        c = -a * c / i
        qnew = (q1 - b * q2) / a
        q1, q2 = q2, qnew
        q += c * qnew
        b += 2.0
        d = 1.0 / (b + a * d)
        delh = (b * d - 1.0) * delh
        h += delh
        dels = q * delh
        s += dels
        if abs(dels / s) < 1e-16:
            break
    else:
        raise ConvergenceError(f"K continued fraction did not converge at x={x}")
    h = a1 * h
    k0 = math.sqrt(math.pi / (2.0 * x)) / s
    k1 = k0 * (x + 0.5 - h) / x
    if n == 0:
        return k0
    km, kc = k0, k1
    for m in range(1, n):
        km, kc = kc, km + (2.0 * m / x) * kc
    return kc


# ---------------------------------------------------------------------------
# integer orders: large-argument asymptotics
# ---------------------------------------------------------------------------

def _jy_hankel(nu: float, x: float) -> tuple[float, float]:
    mu = 4.0 * nu * nu
    eight_x = 8.0 * x
    p = 1.0
    q = 0.0
    t = 1.0
    prev = math.inf
    for k in range(1, 80):
        t *= (mu - (2.0 * k - 1.0) ** 2) / (k * eight_x)
        a = abs(t)
        if a >= prev or a < 1e-18:
            break
        prev = a
        m, r = divmod(k, 2)
        sign = -1.0 if (k - r) // 2 % 2 == 1 else 1.0
        if r:  # odd k feeds Q with sign (-1)^((k-1)/2)
            q += (-1.0 if m % 2 else 1.0) * t
        else:  # even k feeds P with sign (-1)^(k/2)
            p += (-1.0 if m % 2 else 1.0) * t
    chi = x - (0.5 * nu + 0.25) * math.pi
    amp = math.sqrt(2.0 / (math.pi * x))
    c, s = math.cos(chi), math.sin(chi)
    return amp * (p * c - q * s), amp * (p * s + q * c)


def _besseli_int_asym_scaled(n: int, x: float) -> float:
    mu = 4.0 * n * n
    eight_x = 8.0 * x
    t = 1.0
    total = 1.0
    prev = math.inf
    for k in range(1, 60):
        t *= -(mu - (2.0 * k - 1.0) ** 2) / (k * eight_x)
        if abs(t) >= prev:
            break
        prev = abs(t)
        total += t
        if abs(t) < 1e-18:
            break
    return total / math.sqrt(2.0 * math.pi * x)


# ---------------------------------------------------------------------------
# half-integer orders: spherical-function family
# ---------------------------------------------------------------------------

def _sph_jn_series(n: int, x: float) -> float:
    # j_n ascending series, safe for x < 0.5 at any order
    t = 1.0
    for k in range(1, n + 1):
        t *= x / (2.0 * k + 1.0)
    total = t
    x2 = x * x
    for k in range(1, 60):
        t *= -x2 / (2.0 * k * (2.0 * (n + k) + 1.0))
        total += t
        if abs(t) < 1e-18 * abs(total):
            break
    return total


def _sph_jn(n: int, x: float) -> float:
    if x < 0.5:
        return _sph_jn_series(n, x)
    sx, cx = math.sin(x), math.cos(x)
    j0 = sx / x
    if n == 0:
        return j0
    j1 = sx / (x * x) - cx / x
    if n == 1:
        return j1
    if x >= n + 1.0:
        jm, jc = j0, j1
        for k in range(1, n):
            jm, jc = jc, (2.0 * k + 1.0) / x * jc - jm
        return jc
    # downward recurrence, Miller-normalized against whichever seed is larger
    nstart = n + 16 + int(2.0 * x)
    fp, fc = 0.0, 1e-280
    fn = f1 = None
    for k in range(nstart, 0, -1):
        fp, fc = fc, (2.0 * k + 1.0) / x * fc - fp
        if k - 1 == n:
            fn = fc
        if k - 1 == 1:
            f1 = fc
        if abs(fc) > 1e250:
            fc *= 1e-250
            fp *= 1e-250
            if fn is not None:
                fn *= 1e-250
            if f1 is not None:
                f1 *= 1e-250
    f0 = fc
    if abs(j0) >= abs(j1):
        return fn * (j0 / f0)
    return fn * (j1 / f1)


def _sph_yn(n: int, x: float) -> float:
    # y_n grows with order: upward recurrence is stable everywhere
    y0 = -math.cos(x) / x
    if n == 0:
        return y0
    y1 = -math.cos(x) / (x * x) - math.sin(x) / x
    ym, yc = y0, y1
    for k in range(1, n):
        ym, yc = yc, (2.0 * k + 1.0) / x * yc - ym
    return yc


def _sph_in_scaled_series(n: int, x: float) -> float:
    t = 1.0
    for k in range(1, n + 1):
        t *= x / (2.0 * k + 1.0)
    total = t
    x2 = x * x
    for k in range(1, 60):
        t *= x2 / (2.0 * k * (2.0 * (n + k) + 1.0))
        total += t
        if t < 1e-18 * total:
            break
    return total * math.exp(-x)


def _sph_in_scaled(n: int, x: float) -> float:
    # e^-x i_n(x); i_0 seed never vanishes so downward normalization is safe
    i0s = -math.expm1(-2.0 * x) / (2.0 * x)
    if n == 0:
        return i0s
    if x < 0.5:
        return _sph_in_scaled_series(n, x)
    nstart = n + 16 + int(1.2 * x)
    fp, fc = 0.0, 1e-280
    fn = None
    for k in range(nstart, 0, -1):
        fp, fc = fc, (2.0 * k + 1.0) / x * fc + fp
        if k - 1 == n:
            fn = fc
        if fc > 1e250:
            fc *= 1e-250
            fp *= 1e-250
            if fn is not None:
                fn *= 1e-250
    f0 = fc
    return fn * (i0s / f0)


def _sph_kn_scaled(n: int, x: float) -> float:
    # e^x k_n(x); all-positive upward recurrence, stable everywhere
    k0 = math.pi / (2.0 * x)
    if n == 0:
        return k0
    kc = k0 * (1.0 + 1.0 / x)
    km = k0
    for m in range(1, n):
        km, kc = kc, km + (2.0 * m + 1.0) / x * kc
    return kc


# ---------------------------------------------------------------------------
# public surface
# ---------------------------------------------------------------------------

def bessel_j(nu: float, x: float) -> float:
    """Bessel function of the first kind J_nu(x)."""
    nu = _validate_order(nu)
    x = _validate_x(x)
    if x == 0.0:
        if nu < 0.0:
            raise DomainError("J_nu(0) diverges for nu < 0")
        return 1.0 if nu == 0.0 else 0.0
    if _is_half_integer(nu):
        if nu == -0.5:
            return math.sqrt(2.0 / (math.pi * x)) * math.cos(x)
        n = int(nu - 0.5)
        return math.sqrt(2.0 * x / math.pi) * _sph_jn(n, x)
    n = int(nu)
    if x <= _SERIES_PLAIN_MAX:
        return _besselj_int_series(n, x)
    if x <= _SERIES_DD_MAX:
        hi, lo = _besselj_int_series_dd(n, x)
        return hi + lo
    return _jy_hankel(nu, x)[0]


def bessel_y(nu: float, x: float) -> float:
    """Bessel function of the second kind Y_nu(x)."""
    nu = _validate_order(nu)
    x = _validate_x(x)
    if x == 0.0:
        raise DomainError("Y_nu diverges at x = 0")
    if _is_half_integer(nu):
        if nu == -0.5:
            return math.sqrt(2.0 / (math.pi * x)) * math.sin(x)
        n = int(nu - 0.5)
        return math.sqrt(2.0 * x / math.pi) * _sph_yn(n, x)
    n = int(nu)
    if x <= _SERIES_PLAIN_MAX:
        return _bessely_int_series(n, x)
    if x <= _SERIES_DD_MAX:
        return _bessely_int_series_dd(n, x)
    return _jy_hankel(nu, x)[1]


def bessel_i(nu: float, x: float) -> float:
    """Modified Bessel function of the first kind I_nu(x)."""
    return _bessel_i_impl(nu, x, scaled=False)


def bessel_i_scaled(nu: float, x: float) -> float:
    """Exponentially scaled modified Bessel function e^-x I_nu(x)."""
    return _bessel_i_impl(nu, x, scaled=True)


def _bessel_i_impl(nu: float, x: float, scaled: bool) -> float:
    nu = _validate_order(nu)
    x = _validate_x(x)
    if x == 0.0:
        if nu < 0.0:
            raise DomainError("I_nu(0) diverges for nu < 0")
        return 1.0 if nu == 0.0 else 0.0
    if _is_half_integer(nu):
        if nu == -0.5:
            amp = math.sqrt(2.0 / (math.pi * x))
            if scaled:
                return amp * 0.5 * (1.0 + math.exp(-2.0 * x))
            return amp * math.cosh(x)
        n = int(nu - 0.5)
        val = math.sqrt(2.0 * x / math.pi) * _sph_in_scaled(n, x)
        return val if scaled else val * math.exp(x)
    n = int(nu)
    if x <= _I_SERIES_MAX:
        raw = _besseli_int_series(n, x)
        return raw * math.exp(-x) if scaled else raw
    val = _besseli_int_asym_scaled(n, x)
    return val if scaled else val * math.exp(x)


def bessel_k(nu: float, x: float) -> float:
    """Modified Bessel function of the second kind K_nu(x) (= K_-nu)."""
    return _bessel_k_impl(nu, x, scaled=False)


def bessel_k_scaled(nu: float, x: float) -> float:
    """Exponentially scaled modified Bessel function e^x K_nu(x)."""
    return _bessel_k_impl(nu, x, scaled=True)


def _bessel_k_impl(nu: float, x: float, scaled: bool) -> float:
    nu = _validate_order(nu)
    x = _validate_x(x)
    if x == 0.0:
        raise DomainError("K_nu diverges at x = 0")
    if _is_half_integer(nu):
        n = 0 if nu == -0.5 else int(nu - 0.5)  # K symmetry in the order
        val = math.sqrt(2.0 * x / math.pi) * _sph_kn_scaled(n, x)
        return val if scaled else val * math.exp(-x)
    n = int(nu)
    if x <= _K_SERIES_MAX:
        raw = _besselk_int_series(n, x)
        return raw * math.exp(x) if scaled else raw
    val = _besselk_int_cf2_scaled(n, x)
    return val if scaled else val * math.exp(-x)


def small_argument_forms(d: int, x: float) -> tuple[float, float]:
    """Leading small-argument forms of (J_alpha, Y_alpha) at alpha = d/2 - 1.

    Returns ``(1/Gamma(d/2)) (x/2)^(d/2-1)`` and, for d != 2,
    ``-(Gamma(d/2-1)/pi) (2/x)^(d/2-1)``; for d = 2 the Y-form is
    ``(2/pi)(ln(x/2) + gamma)``.
    """
    if int(d) != d or d < 1:
        raise DomainError(f"dimension must be a positive integer, got {d}")
    d = int(d)
    x = float(x)
    if x <= 0.0:
        raise DomainError("small-argument forms need x > 0")
    p = 0.5 * d - 1.0
    j_limit = (0.5 * x) ** p / math.gamma(0.5 * d)
    if d == 2:
        y_limit = (2.0 / math.pi) * (math.log(0.5 * x) + EULER_GAMMA)
    else:
        y_limit = -(math.gamma(0.5 * d - 1.0) / math.pi) * (2.0 / x) ** p
    return j_limit, y_limit


def bessel_j_zero(nu: float, s: int) -> float:
    """s-th positive zero of J_nu, s = 1, 2, ...

    McMahon's expansion seeds a bracket which is then bisected and polished
    with Newton steps; accurate to ~1e-14 relative.
    """
    nu = _validate_order(nu)
    if s < 1 or int(s) != s:
        raise DomainError(f"zero index must be a positive integer, got {s}")
    s = int(s)
    beta = (s + 0.5 * nu - 0.25) * math.pi
    mu = 4.0 * nu * nu
    guess = beta - (mu - 1.0) / (8.0 * beta)
    lo, hi = guess - 0.6, guess + 0.6
    if lo <= 0.0:
        lo = 1e-3
    flo, fhi = bessel_j(nu, lo), bessel_j(nu, hi)
    width = 0.3
    while flo * fhi > 0.0 and width < 4.0:
        lo = max(lo - width, 1e-3)
        hi += width
        flo, fhi = bessel_j(nu, lo), bessel_j(nu, hi)
        width *= 2.0
    if flo * fhi > 0.0:
        raise ConvergenceError(f"could not bracket zero {s} of J_{nu}")
    for _ in range(80):
        mid = 0.5 * (lo + hi)
        fm = bessel_j(nu, mid)
        if fm == 0.0 or hi - lo < 1e-13 * mid:
            lo = hi = mid
            break
        if (fm > 0.0) == (flo > 0.0):
            lo, flo = mid, fm
        else:
            hi, fhi = mid, fm
    z = 0.5 * (lo + hi)
    for _ in range(2):  # Newton polish; J' from the standard recurrence
        f = bessel_j(nu, z)
        df = -bessel_j(nu + 1.0, z) + (nu / z) * bessel_j(nu, z)
        if df != 0.0:
            z -= f / df
    return z
