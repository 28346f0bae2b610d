"""Pure-Python numeric kernels.

Twin of the compiled extension ``bsfrac._ckernels``; the two must stay
semantically identical (same branch structure, same FP operation order) so
results agree across backends.  Public modules wrap these kernels with
domain checks and typed results; nothing here raises library exceptions.

Series evaluators return ``(value, abs_error_est, terms_used, flag)``
tuples.  The shared truncation rule: stop once the last added term t
satisfies ``|t| <= 0.5 * tol * |sum|`` and the next term is below
``|t| / 2``; the reported bound is ``2 * |t|`` (geometric tail once the
factorial denominator dominates).
"""

from __future__ import annotations

import math

POLE_TOL = 1e-12
_SPLIT = 134217729.0  # 2**27 + 1, Dekker splitting constant
_PI_HI = 3.141592653589793
_PI_LO = 1.2246467991473532e-16
_HALF_LN_PI = 0.5723649429247001


def near_nonpositive_int(x):
    """True when x is within POLE_TOL of a gamma pole."""
    r = round(x)
    return r <= 0 and abs(x - r) <= POLE_TOL


def lgamma_sign(x):
    """(log|Gamma(x)|, sign) for real non-pole x.

    Positive arguments go through ``log(gamma(x))`` while gamma(x) is
    representable; negative ones through the reflection formula with the
    recurrence ``Gamma(1-x) = -x * Gamma(-x)`` so the only inexact input
    is the exact dyadic ``-x``.  Keeps the reconstruction error of
    ``sign * exp(log_abs)`` below 1e-13 for |x| <= 170.
    """
    if x > 0.0:
        if 1e-280 < x < 171.6:
            return math.log(math.gamma(x)), 1
        return math.lgamma(x), 1
    n = math.floor(x)
    sign = -1 if n % 2 != 0 else 1
    d = abs(x - round(x))
    s = math.sin(math.pi * d)  # |sin(pi*x)|, reduced exactly
    if -x <= 170.5:
        return math.log(math.pi / (s * (-x) * math.gamma(-x))), sign
    return math.log(math.pi) - math.log(s) - math.lgamma(1.0 - x), sign


# --- double-double helpers (Dekker/Knuth error-free transforms) ---

def _two_sum(a, b):
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def _quick_two_sum(a, b):
    s = a + b
    return s, b - (s - a)


def _two_prod(a, b):
    p = a * b
    ta = _SPLIT * a
    ahi = ta - (ta - a)
    alo = a - ahi
    tb = _SPLIT * b
    bhi = tb - (tb - b)
    blo = b - bhi
    return p, ((ahi * bhi - p) + ahi * blo + alo * bhi) + alo * blo


def _dd_add(xh, xl, yh, yl):
    s, e = _two_sum(xh, yh)
    e += xl + yl
    return _quick_two_sum(s, e)


def _dd_mul(xh, xl, yh, yl):
    p, e = _two_prod(xh, yh)
    e += xh * yl + xl * yh
    return _quick_two_sum(p, e)


def _dd_mul_d(xh, xl, d):
    p, e = _two_prod(xh, d)
    e += xl * d
    return _quick_two_sum(p, e)


def _dd_div_d(xh, xl, d):
    q1 = xh / d
    p, e = _two_prod(q1, d)
    q2 = ((xh - p) + (xl - e)) / d
    return _quick_two_sum(q1, q2)


def _dd_div(xh, xl, yh, yl):
    q1 = xh / yh
    ph, pl = _dd_mul_d(yh, yl, q1)
    rh, rl = _dd_add(xh, xl, -ph, -pl)
    q2 = rh / yh
    ph, pl = _dd_mul_d(yh, yl, q2)
    rh, rl = _dd_add(rh, rl, -ph, -pl)
    qh, ql = _quick_two_sum(q1, q2)
    return _dd_add(qh, ql, rh / yh, 0.0)


def _bs_odd_prefactor_dd(nu):
    """Gamma(nu+1)/(sqrt(pi)*Gamma(nu+3/2)) as a double-double.

    Exact rational (or rational/pi) recurrences when 2*nu is an integer;
    plain double precision otherwise (the low word is then zero and the
    compensated negative-argument sum is limited by this constant).
    """
    tn = 2.0 * nu
    if tn == math.floor(tn) and abs(nu) < 90.0:
        m2 = int(tn)
        if m2 % 2 != 0:
            # nu = m - 1/2: c = binomial(2m, m) / 4**m
            m = (m2 + 1) // 2
            ch, cl = 1.0, 0.0
            j = 1
            while j <= m:
                ch, cl = _dd_mul_d(ch, cl, 2.0 * j - 1.0)
                ch, cl = _dd_div_d(ch, cl, 2.0 * j)
                j += 1
            return ch, cl
        # nu = m >= 0 integer: c(0) = 2/pi, c(m) = c(m-1) * m / (m + 1/2)
        m = m2 // 2
        ch, cl = _dd_div(2.0, 0.0, _PI_HI, _PI_LO)
        j = 1
        while j <= m:
            ch, cl = _dd_mul_d(ch, cl, float(j))
            ch, cl = _dd_div_d(ch, cl, j + 0.5)
            j += 1
        return ch, cl
    la1, _ = lgamma_sign(nu + 1.0)
    la2, _ = lgamma_sign(nu + 1.5)
    return math.exp(la1 - la2 - _HALF_LN_PI), 0.0


def bs_series(nu, u, tol, cap):
    """Bessel-Struve kernel power series (interleaved even/odd chains).

    Nonnegative u sums in plain doubles (all terms positive).  Negative u
    alternates with exponentially large intermediate terms, so the sum and
    term recurrences run in double-double arithmetic.
    """
    if u == 0.0:
        return 1.0, 0.0, 1, 1
    if u > 0.0:
        ch, _ = _bs_odd_prefactor_dd(nu)
        e = 1.0
        o = u * ch
        s = e + o
        prev = o
        k = 0
        n = 2
        while n < cap:
            e *= u * u * (k + 0.5) / ((2.0 * k + 1.0) * (2.0 * k + 2.0) * (k + nu + 1.0))
            o *= u * u * (k + 1.0) / ((2.0 * k + 2.0) * (2.0 * k + 3.0) * (k + nu + 1.5))
            k += 1
            if abs(prev) <= 0.5 * tol * abs(s) and e < 0.5 * prev:
                return s, 2.0 * prev, n, 1
            s += e
            if e <= 0.5 * tol * s and o < 0.5 * e:
                return s, 2.0 * e, n + 1, 1
            s += o
            prev = o
            n += 2
        return s, 2.0 * abs(prev), n, 0
    u2h, u2l = _two_prod(u, u)
    eh, el = 1.0, 0.0
    ch, cl = _bs_odd_prefactor_dd(nu)
    oh, ol = _dd_mul_d(ch, cl, u)
    sh, sl = _dd_add(eh, el, oh, ol)
    sum_abs = 1.0 + abs(oh)
    prev = abs(oh)
    k = 0
    n = 2
    while n < cap:
        th, tl = _dd_mul(eh, el, u2h, u2l)
        th, tl = _dd_mul_d(th, tl, k + 0.5)
        th, tl = _dd_div_d(th, tl, (2.0 * k + 1.0) * (2.0 * k + 2.0))
        eh, el = _dd_div_d(th, tl, k + nu + 1.0)
        th, tl = _dd_mul(oh, ol, u2h, u2l)
        th, tl = _dd_mul_d(th, tl, k + 1.0)
        th, tl = _dd_div_d(th, tl, (2.0 * k + 2.0) * (2.0 * k + 3.0))
        oh, ol = _dd_div_d(th, tl, k + nu + 1.5)
        k += 1
        if prev <= 0.5 * tol * abs(sh) and abs(eh) < 0.5 * prev:
            return sh, 2.0 * prev + 7.9e-31 * sum_abs, n, 1
        sh, sl = _dd_add(sh, sl, eh, el)
        sum_abs += abs(eh)
        if abs(eh) <= 0.5 * tol * abs(sh) and abs(oh) < 0.5 * abs(eh):
            return sh, 2.0 * abs(eh) + 7.9e-31 * sum_abs, n + 1, 1
        sh, sl = _dd_add(sh, sl, oh, ol)
        sum_abs += abs(oh)
        prev = abs(oh)
        n += 2
    return sh, 2.0 * prev + 7.9e-31 * sum_abs, n, 0


def bessel_series(v, z, modified, tol, cap):
    """J_v (modified=0) or I_v (modified=1) by direct series; z > 0."""
    half = 0.5 * z
    la, _ = lgamma_sign(v + 1.0)
    t = math.exp(v * math.log(half) - la)
    q = half * half
    if not modified:
        q = -q
    s = t
    k = 0
    n = 1
    while n < cap:
        tn = t * q / ((k + 1.0) * (k + v + 1.0))
        if abs(t) <= 0.5 * tol * abs(s) and abs(tn) < 0.5 * abs(t):
            return s, 2.0 * abs(t), n, 1
        t = tn
        s += t
        k += 1
        n += 1
        if t == 0.0:
            return s, 0.0, n, 1
    return s, 2.0 * abs(t), n, 0


def struve_series(v, z, modified, tol, cap):
    """H_v (modified=0) or L_v (modified=1) by direct series; z > 0."""
    half = 0.5 * z
    la1, _ = lgamma_sign(1.5)
    la2, _ = lgamma_sign(v + 1.5)
    t = math.exp((v + 1.0) * math.log(half) - la1 - la2)
    q = half * half
    if not modified:
        q = -q
    s = t
    k = 0
    n = 1
    while n < cap:
        tn = t * q / ((k + 1.5) * (k + v + 1.5))
        if abs(t) <= 0.5 * tol * abs(s) and abs(tn) < 0.5 * abs(t):
            return s, 2.0 * abs(t), n, 1
        t = tn
        s += t
        k += 1
        n += 1
        if t == 0.0:
            return s, 0.0, n, 1
    return s, 2.0 * abs(t), n, 0


def hyp2f1_series(a, b, c, z, tol, cap):
    """Gauss series for 2F1 on 0 <= z < 1 (contract truncation rule)."""
    s = 1.0
    t = 1.0
    k = 0
    n = 1
    while n < cap:
        tn = t * (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z
        if tn == 0.0:
            return s, 0.0, n, 1  # terminating (polynomial) case
        if abs(t) <= 0.5 * tol * abs(s) and abs(tn) < 0.5 * abs(t):
            return s, 2.0 * abs(t), n, 1
        t = tn
        s += t
        k += 1
        n += 1
    return s, 2.0 * abs(t), n, 0


def _hyp2f1_tail(a, b, c, z, tol, cap):
    """Direct 2F1 series with a geometric tail bound; needs |z| < 0.97."""
    s = 1.0
    t = 1.0
    k = 0
    while k < cap:
        t *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z
        if t == 0.0:
            return s
        s += t
        k += 1
        r = abs((a + k) * (b + k) / ((c + k) * (k + 1.0)) * z)
        if r < 0.97 and abs(t) * r / (1.0 - r) <= tol * abs(s):
            return s
    return s


def _gamma_ratio_d(nums, dens):
    acc = 0.0
    sg = 1
    for v in nums:
        la, sig = lgamma_sign(v)
        acc += la
        sg *= sig
    for v in dens:
        la, sig = lgamma_sign(v)
        acc -= la
        sg *= sig
    return sg * math.exp(acc)


def hyp2f1_kernel(a, b, c, z, wbar):
    """2F1 for quadrature integrands: full real axis z < 1.

    ``wbar`` must equal 1-z (pass it when z is close to 1 so the small
    distance is not lost to cancellation; pass 0.0 < never happens < or
    any consistent value otherwise).  Routes: direct series for z <= 0.75,
    connection formula in powers of 1-z for z > 0.75 (requires c-a-b away
    from integers), Pfaff transform for z < 0.
    """
    if a == 0.0 or b == 0.0 or z == 0.0:
        return 1.0
    if z < 0.0:
        t = 1.0 - z
        b = c - b
        z = z / (z - 1.0)
        wbar = 1.0 / t
        scale = t ** (-a)
    else:
        scale = 1.0
        if wbar <= 0.0:
            wbar = 1.0 - z
    if z <= 0.75:
        return scale * _hyp2f1_tail(a, b, c, z, 1e-16, 10000)
    s = c - a - b
    p1 = _gamma_ratio_d((c, s), (c - a, c - b))
    p2 = _gamma_ratio_d((c, -s), (a, b))
    f1 = _hyp2f1_tail(a, b, 1.0 - s, wbar, 1e-16, 10000)
    f2 = _hyp2f1_tail(c - a, c - b, 1.0 + s, wbar, 1e-16, 10000)
    return scale * (p1 * f1 + wbar ** s * p2 * f2)


def wright_series(ua, uA, lb, lB, z, tol, cap):
    """Generalized Wright series, terms assembled in log space.

    Returns (value, abs_error_est, terms_used, status) with status 0 on
    convergence, 1 on term-cap exhaustion, 2 when an upper parameter
    ``a_i + A_i*k`` lands on a gamma pole (value then carries the k).
    Lower-parameter poles zero the affected term (reciprocal gamma).
    """
    p = len(ua)
    q = len(lb)
    lnz = math.log(abs(z)) if z != 0.0 else 0.0
    zsign = -1 if z < 0.0 else 1
    s = 0.0
    prev = 0.0
    have_prev = False
    k = 0
    while k < cap:
        acc = 0.0
        sg = 1
        dead = False
        i = 0
        while i < p:
            g = ua[i] + uA[i] * k
            if near_nonpositive_int(g):
                return float(k), 0.0, k, 2
            la, sig = lgamma_sign(g)
            acc += la
            sg *= sig
            i += 1
        j = 0
        while j < q:
            g = lb[j] + lB[j] * k
            if near_nonpositive_int(g):
                dead = True
                break
            la, sig = lgamma_sign(g)
            acc -= la
            sg *= sig
            j += 1
        if dead:
            t = 0.0
        else:
            if z == 0.0 and k > 0:
                return s, 0.0, k, 0
            lk, _ = lgamma_sign(k + 1.0)
            t = sg * math.exp(acc + k * lnz - lk)
            if zsign < 0 and k % 2 != 0:
                t = -t
        if have_prev and abs(prev) <= 0.5 * tol * abs(s) and abs(t) < 0.5 * abs(prev):
            return s, 2.0 * abs(prev), k, 0
        s += t
        if t == 0.0:
            have_prev = False
        else:
            prev = t
            have_prev = True
        k += 1
    return s, 2.0 * abs(prev), k, 1


def f3_series(a, ap, b, bp, g, x, y, tol, cap):
    """Appell F3 double series, row-by-row in the y index; |x|,|y| < 1.

    Row n sums ``T(m, n)`` over m with a geometric tail bound; the outer
    loop applies the shared truncation rule to whole row sums.
    """
    total = 0.0
    t0n = 1.0  # T(0, n)
    n_terms = 0
    prev_row = 0.0
    have_prev = False
    n = 0
    while n_terms < cap:
        t = t0n
        row = t
        n_terms += 1
        m = 0
        while n_terms < cap:
            t = t * (a + m) * (b + m) * x / ((g + m + n) * (m + 1.0))
            if t == 0.0:
                break
            row += t
            n_terms += 1
            m += 1
            r = abs((a + m) * (b + m) * x / ((g + m + n) * (m + 1.0)))
            if r < 0.97 and abs(t) * r / (1.0 - r) <= 0.25 * tol * (abs(total) + abs(row)):
                break
        if have_prev and abs(prev_row) <= 0.5 * tol * abs(total) and abs(row) < 0.5 * abs(prev_row):
            return total, 2.0 * abs(prev_row), n_terms, 1
        total += row
        if row == 0.0:
            have_prev = False
        else:
            prev_row = row
            have_prev = True
        t0n = t0n * (ap + n) * (bp + n) * y / ((g + n) * (n + 1.0))
        n += 1
        if t0n == 0.0:
            return total, 0.0, n_terms, 1  # terminating in the y index
    return total, 2.0 * abs(prev_row), n_terms, 0
