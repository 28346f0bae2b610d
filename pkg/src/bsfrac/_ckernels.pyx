# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled numeric kernels.

Twin of ``bsfrac._pykernels``: identical branch structure and FP
operation order so both backends agree to the last few ulps (libm and
CPython's own gamma/lgamma may differ by one ulp).  See the pure module
for the contract comments; this file only mirrors it.
"""

from libc.math cimport (cosh, exp, fabs, floor, lgamma, log, pow, sin,
                        sinh, sqrt, tgamma)

cdef double POLE_TOL_C = 1e-12
cdef double _PI = 3.141592653589793
cdef double _PI_LO = 1.2246467991473532e-16
cdef double _SPLIT = 134217729.0
cdef double _HALF_LN_PI = 0.5723649429247001

POLE_TOL = POLE_TOL_C


cdef inline double _round_half_even(double x) nogil:
    # match Python round(): ties to even
    cdef double f = floor(x)
    cdef double d = x - f
    if d > 0.5:
        return f + 1.0
    if d < 0.5:
        return f
    if f == 2.0 * floor(0.5 * f):
        return f
    return f + 1.0


cdef inline bint _near_nonpos_int(double x) nogil:
    cdef double r = _round_half_even(x)
    return r <= 0.0 and fabs(x - r) <= POLE_TOL_C


def near_nonpositive_int(double x):
    """True when x is within POLE_TOL of a gamma pole."""
    return bool(_near_nonpos_int(x))


cdef inline (double, int) _lgamma_sign_c(double x) nogil:
    cdef double d, s
    cdef long long n
    cdef int sign
    if x > 0.0:
        if 1e-280 < x < 171.6:
            return log(tgamma(x)), 1
        return lgamma(x), 1
    n = <long long> floor(x)
    sign = -1 if n % 2 != 0 else 1
    d = fabs(x - _round_half_even(x))
    s = sin(_PI * d)
    if -x <= 170.5:
        return log(_PI / (s * (-x) * tgamma(-x))), sign
    return log(_PI) - log(s) - lgamma(1.0 - x), sign


def lgamma_sign(double x):
    """(log|Gamma(x)|, sign) for real non-pole x."""
    cdef double la
    cdef int sg
    la, sg = _lgamma_sign_c(x)
    return la, sg


# --- double-double primitives ---

cdef inline (double, double) _two_sum(double a, double b) nogil:
    cdef double s = a + b
    cdef double bb = s - a
    return s, (a - (s - bb)) + (b - bb)


cdef inline (double, double) _quick_two_sum(double a, double b) nogil:
    cdef double s = a + b
    return s, b - (s - a)


cdef inline (double, double) _two_prod(double a, double b) nogil:
    cdef double p = a * b
    cdef double ta = _SPLIT * a
    cdef double ahi = ta - (ta - a)
    cdef double alo = a - ahi
    cdef double tb = _SPLIT * b
    cdef double bhi = tb - (tb - b)
    cdef double blo = b - bhi
    return p, ((ahi * bhi - p) + ahi * blo + alo * bhi) + alo * blo


cdef inline (double, double) _dd_add(double xh, double xl, double yh, double yl) nogil:
    cdef double s, e
    s, e = _two_sum(xh, yh)
    e += xl + yl
    return _quick_two_sum(s, e)


cdef inline (double, double) _dd_mul(double xh, double xl, double yh, double yl) nogil:
    cdef double p, e
    p, e = _two_prod(xh, yh)
    e += xh * yl + xl * yh
    return _quick_two_sum(p, e)


cdef inline (double, double) _dd_mul_d(double xh, double xl, double d) nogil:
    cdef double p, e
    p, e = _two_prod(xh, d)
    e += xl * d
    return _quick_two_sum(p, e)


cdef inline (double, double) _dd_div_d(double xh, double xl, double d) nogil:
    cdef double q1 = xh / d
    cdef double p, e
    p, e = _two_prod(q1, d)
    return _quick_two_sum(q1, ((xh - p) + (xl - e)) / d)


cdef inline (double, double) _dd_div(double xh, double xl, double yh, double yl) nogil:
    cdef double q1 = xh / yh
    cdef double ph, pl, rh, rl, q2, qh, ql
    ph, pl = _dd_mul_d(yh, yl, q1)
    rh, rl = _dd_add(xh, xl, -ph, -pl)
    q2 = rh / yh
    ph, pl = _dd_mul_d(yh, yl, q2)
    rh, rl = _dd_add(rh, rl, -ph, -pl)
    qh, ql = _quick_two_sum(q1, q2)
    return _dd_add(qh, ql, rh / yh, 0.0)


cdef (double, double) _bs_odd_prefactor_dd(double nu) nogil:
    cdef double tn = 2.0 * nu
    cdef long long m2, m, j
    cdef double ch, cl, la1, la2
    cdef int sg
    if tn == floor(tn) and fabs(nu) < 90.0:
        m2 = <long long> tn
        if m2 % 2 != 0:
            m = (m2 + 1) // 2
            ch = 1.0
            cl = 0.0
            j = 1
            while j <= m:
                ch, cl = _dd_mul_d(ch, cl, 2.0 * j - 1.0)
                ch, cl = _dd_div_d(ch, cl, 2.0 * j)
                j += 1
            return ch, cl
        m = m2 // 2
        ch, cl = _dd_div(2.0, 0.0, _PI, _PI_LO)
        j = 1
        while j <= m:
            ch, cl = _dd_mul_d(ch, cl, <double> j)
            ch, cl = _dd_div_d(ch, cl, j + 0.5)
            j += 1
        return ch, cl
    la1, sg = _lgamma_sign_c(nu + 1.0)
    la2, sg = _lgamma_sign_c(nu + 1.5)
    return exp(la1 - la2 - _HALF_LN_PI), 0.0


def bs_series(double nu, double u, double tol, int cap):
    """Bessel-Struve kernel power series (interleaved even/odd chains)."""
    cdef double ch, cl, e, o, s, prev, u2h, u2l
    cdef double eh, el, oh, ol, sh, sl, th, tl, sum_abs
    cdef long long k, n
    if u == 0.0:
        return 1.0, 0.0, 1, 1
    if u > 0.0:
        ch, cl = _bs_odd_prefactor_dd(nu)
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
            if fabs(prev) <= 0.5 * tol * fabs(s) and e < 0.5 * prev:
                return s, 2.0 * prev, n, 1
            s += e
            if e <= 0.5 * tol * s and o < 0.5 * e:
                return s, 2.0 * e, n + 1, 1
            s += o
            prev = o
            n += 2
        return s, 2.0 * fabs(prev), n, 0
    u2h, u2l = _two_prod(u, u)
    eh = 1.0
    el = 0.0
    ch, cl = _bs_odd_prefactor_dd(nu)
    oh, ol = _dd_mul_d(ch, cl, u)
    sh, sl = _dd_add(eh, el, oh, ol)
    sum_abs = 1.0 + fabs(oh)
    prev = fabs(oh)
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
        if prev <= 0.5 * tol * fabs(sh) and fabs(eh) < 0.5 * prev:
            return sh, 2.0 * prev + 7.9e-31 * sum_abs, n, 1
        sh, sl = _dd_add(sh, sl, eh, el)
        sum_abs += fabs(eh)
        if fabs(eh) <= 0.5 * tol * fabs(sh) and fabs(oh) < 0.5 * fabs(eh):
            return sh, 2.0 * fabs(eh) + 7.9e-31 * sum_abs, n + 1, 1
        sh, sl = _dd_add(sh, sl, oh, ol)
        sum_abs += fabs(oh)
        prev = fabs(oh)
        n += 2
    return sh, 2.0 * prev + 7.9e-31 * sum_abs, n, 0


def bessel_series(double v, double z, int modified, double tol, int cap):
    """J_v (modified=0) or I_v (modified=1) by direct series; z > 0."""
    cdef double half = 0.5 * z
    cdef double la, t, q, s, tn
    cdef int sg
    cdef long long k, n
    la, sg = _lgamma_sign_c(v + 1.0)
    t = exp(v * log(half) - la)
    q = half * half
    if not modified:
        q = -q
    s = t
    k = 0
    n = 1
    while n < cap:
        tn = t * q / ((k + 1.0) * (k + v + 1.0))
        if fabs(t) <= 0.5 * tol * fabs(s) and fabs(tn) < 0.5 * fabs(t):
            return s, 2.0 * fabs(t), n, 1
        t = tn
        s += t
        k += 1
        n += 1
        if t == 0.0:
            return s, 0.0, n, 1
    return s, 2.0 * fabs(t), n, 0


def struve_series(double v, double z, int modified, double tol, int cap):
    """H_v (modified=0) or L_v (modified=1) by direct series; z > 0."""
    cdef double half = 0.5 * z
    cdef double la1, la2, t, q, s, tn
    cdef int sg
    cdef long long k, n
    la1, sg = _lgamma_sign_c(1.5)
    la2, sg = _lgamma_sign_c(v + 1.5)
    t = exp((v + 1.0) * log(half) - la1 - la2)
    q = half * half
    if not modified:
        q = -q
    s = t
    k = 0
    n = 1
    while n < cap:
        tn = t * q / ((k + 1.5) * (k + v + 1.5))
        if fabs(t) <= 0.5 * tol * fabs(s) and fabs(tn) < 0.5 * fabs(t):
            return s, 2.0 * fabs(t), n, 1
        t = tn
        s += t
        k += 1
        n += 1
        if t == 0.0:
            return s, 0.0, n, 1
    return s, 2.0 * fabs(t), n, 0


def hyp2f1_series(double a, double b, double c, double z, double tol, int cap):
    """Gauss series for 2F1 on 0 <= z < 1 (contract truncation rule)."""
    cdef double s = 1.0
    cdef double t = 1.0
    cdef double tn
    cdef long long k = 0
    cdef long long n = 1
    while n < cap:
        tn = t * (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z
        if tn == 0.0:
            return s, 0.0, n, 1
        if fabs(t) <= 0.5 * tol * fabs(s) and fabs(tn) < 0.5 * fabs(t):
            return s, 2.0 * fabs(t), n, 1
        t = tn
        s += t
        k += 1
        n += 1
    return s, 2.0 * fabs(t), n, 0


cdef double _hyp2f1_tail(double a, double b, double c, double z,
                         double tol, long long cap) nogil:
    cdef double s = 1.0
    cdef double t = 1.0
    cdef double r
    cdef long long k = 0
    while k < cap:
        t *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z
        if t == 0.0:
            return s
        s += t
        k += 1
        r = fabs((a + k) * (b + k) / ((c + k) * (k + 1.0)) * z)
        if r < 0.97 and fabs(t) * r / (1.0 - r) <= tol * fabs(s):
            return s
    return s


cdef double _gamma_ratio_c(double n1, double n2, double d1, double d2) nogil:
    cdef double acc = 0.0
    cdef double la
    cdef int sg = 1
    cdef int s
    la, s = _lgamma_sign_c(n1)
    acc += la
    sg *= s
    la, s = _lgamma_sign_c(n2)
    acc += la
    sg *= s
    la, s = _lgamma_sign_c(d1)
    acc -= la
    sg *= s
    la, s = _lgamma_sign_c(d2)
    acc -= la
    sg *= s
    return sg * exp(acc)


def hyp2f1_kernel(double a, double b, double c, double z, double wbar):
    """2F1 for quadrature integrands: full real axis z < 1."""
    cdef double t, scale, s, p1, p2, f1, f2
    if a == 0.0 or b == 0.0 or z == 0.0:
        return 1.0
    if z < 0.0:
        t = 1.0 - z
        b = c - b
        z = z / (z - 1.0)
        wbar = 1.0 / t
        scale = pow(t, -a)
    else:
        scale = 1.0
        if wbar <= 0.0:
            wbar = 1.0 - z
    if z <= 0.75:
        return scale * _hyp2f1_tail(a, b, c, z, 1e-16, 10000)
    s = c - a - b
    p1 = _gamma_ratio_c(c, s, c - a, c - b)
    p2 = _gamma_ratio_c(c, -s, a, b)
    f1 = _hyp2f1_tail(a, b, 1.0 - s, wbar, 1e-16, 10000)
    f2 = _hyp2f1_tail(c - a, c - b, 1.0 + s, wbar, 1e-16, 10000)
    return scale * (p1 * f1 + pow(wbar, s) * p2 * f2)


def wright_series(ua, uA, lb, lB, double z, double tol, int cap):
    """Generalized Wright series, terms assembled in log space."""
    cdef double cua[32]
    cdef double cuA[32]
    cdef double clb[32]
    cdef double clB[32]
    cdef Py_ssize_t p = len(ua)
    cdef Py_ssize_t q = len(lb)
    cdef Py_ssize_t i, j
    if p > 32 or q > 32:
        raise ValueError("at most 32 parameter pairs are supported")
    for i in range(p):
        cua[i] = ua[i]
        cuA[i] = uA[i]
    for j in range(q):
        clb[j] = lb[j]
        clB[j] = lB[j]
    cdef double lnz = log(fabs(z)) if z != 0.0 else 0.0
    cdef int zsign = -1 if z < 0.0 else 1
    cdef double s = 0.0
    cdef double prev = 0.0
    cdef bint have_prev = 0
    cdef bint dead
    cdef long long k = 0
    cdef double acc, g, la, t, lk
    cdef int sg, sig
    while k < cap:
        acc = 0.0
        sg = 1
        dead = 0
        for i in range(p):
            g = cua[i] + cuA[i] * k
            if _near_nonpos_int(g):
                return <double> k, 0.0, k, 2
            la, sig = _lgamma_sign_c(g)
            acc += la
            sg *= sig
        for j in range(q):
            g = clb[j] + clB[j] * k
            if _near_nonpos_int(g):
                dead = 1
                break
            la, sig = _lgamma_sign_c(g)
            acc -= la
            sg *= sig
        if dead:
            t = 0.0
        else:
            if z == 0.0 and k > 0:
                return s, 0.0, k, 0
            lk, sig = _lgamma_sign_c(k + 1.0)
            t = sg * exp(acc + k * lnz - lk)
            if zsign < 0 and k % 2 != 0:
                t = -t
        if have_prev and fabs(prev) <= 0.5 * tol * fabs(s) and fabs(t) < 0.5 * fabs(prev):
            return s, 2.0 * fabs(prev), k, 0
        s += t
        if t == 0.0:
            have_prev = 0
        else:
            prev = t
            have_prev = 1
        k += 1
    return s, 2.0 * fabs(prev), k, 1


def f3_series(double a, double ap, double b, double bp, double g,
              double x, double y, double tol, int cap):
    """Appell F3 double series, row-by-row in the y index; |x|,|y| < 1."""
    cdef double total = 0.0
    cdef double t0n = 1.0
    cdef long long n_terms = 0
    cdef double prev_row = 0.0
    cdef bint have_prev = 0
    cdef long long n = 0
    cdef long long m
    cdef double t, row, r
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
            r = fabs((a + m) * (b + m) * x / ((g + m + n) * (m + 1.0)))
            if r < 0.97 and fabs(t) * r / (1.0 - r) <= 0.25 * tol * (fabs(total) + fabs(row)):
                break
        if have_prev and fabs(prev_row) <= 0.5 * tol * fabs(total) and fabs(row) < 0.5 * fabs(prev_row):
            return total, 2.0 * fabs(prev_row), n_terms, 1
        total += row
        if row == 0.0:
            have_prev = 0
        else:
            prev_row = row
            have_prev = 1
        t0n = t0n * (ap + n) * (bp + n) * y / ((g + n) * (n + 1.0))
        n += 1
        if t0n == 0.0:
            return total, 0.0, n_terms, 1
    return total, 2.0 * fabs(prev_row), n_terms, 0
