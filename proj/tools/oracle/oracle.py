#!/usr/bin/env python3
"""Independent reference implementation of the q-series engine.

Everything here is recomputed from first principles with exact rational
arithmetic (fractions.Fraction) for series identities and mpmath for the
numeric modular-transformation checks.  The C++ engine is validated against
this script: derived constants frozen into the C++ test-suite are produced
by `--dump`, and every identity the engine's catalog checks is re-verified
here with independently written enumeration code.

Run `python3 oracle.py` for the standard battery, `--full` to add the slow
high-order cross-checks, `--dump` to print the frozen coefficient tables.
"""

import argparse
import math
import sys
import time
from fractions import Fraction as F

from mpmath import mp, mpc, mpf, cos, exp, pi, sqrt

mp.dps = 35

HALF = F(1, 2)

# ---------------------------------------------------------------------------
# exact sparse series: dict {Fraction exponent -> Fraction coefficient}
# (zero coefficients are never stored; cutoffs are managed by the callers)
# ---------------------------------------------------------------------------


def sadd(*terms):
    out = {}
    for t in terms:
        for e, c in t.items():
            v = out.get(e, F(0)) + c
            if v == 0:
                out.pop(e, None)
            else:
                out[e] = v
    return out


def sneg(s):
    return {e: -c for e, c in s.items()}


def sscale(s, k):
    if k == 0:
        return {}
    return {e: k * c for e, c in s.items()}


def smul(a, b, N):
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = ea + eb
            if e < N:
                v = out.get(e, F(0)) + ca * cb
                if v == 0:
                    out.pop(e, None)
                else:
                    out[e] = v
    return out


def strunc(s, N):
    return {e: c for e, c in s.items() if e < N}


def sdiv(num, den, N):
    """num / den as truncated series; den must have an invertible lead."""
    d0 = min(den)
    c0 = den[d0]
    rem = dict(num)
    out = {}
    while rem:
        e = min(rem)
        c = rem.pop(e)
        if c == 0:
            continue
        t = e - d0
        if t >= N:
            break
        w = c / c0
        out[t] = out.get(t, F(0)) + w
        for ed, cd in den.items():
            if ed == d0:
                continue
            k = t + ed
            v = rem.get(k, F(0)) - w * cd
            if v == 0:
                rem.pop(k, None)
            else:
                rem[k] = v
    return {e: c for e, c in out.items() if c != 0}


def fmt_series(s, limit=None):
    items = sorted(s.items())
    if limit is not None:
        items = items[:limit]
    return ", ".join(f"q^({e}): {c}" for e, c in items)


# ---------------------------------------------------------------------------
# theta and eta building blocks (exact, z = 0)
# ---------------------------------------------------------------------------


def theta_q(j, mu, signed, N):
    """Coefficients of theta_{j,mu}(tau, 0) = sum_{n in Z + j/2mu} q^{mu n^2},
    optionally with the alternating sign (-1)^{n - j/2mu}, up to q^N."""
    j, mu, N = F(j), F(mu), F(N)
    coset = j / (2 * mu)
    out = {}
    kmax = int(math.isqrt(int(max(N, 0) / mu) + 1)) + int(abs(coset)) + 3
    for k in range(-kmax, kmax + 1):
        n = k + coset
        e = mu * n * n
        if e < N:
            c = F(-1 if (k % 2) else 1) if signed else F(1)
            v = out.get(e, F(0)) + c
            if v == 0:
                out.pop(e, None)
            else:
                out[e] = v
    return out


def eta_euler(N):
    """q^{1/24} prod_{n>=1} (1 - q^n), truncated below q^N."""
    N = F(N)
    out = {F(1, 24): F(1)}
    n = 1
    while F(1, 24) + n < N:  # further factors cannot touch exponents < N
        out = smul(out, {F(0): F(1), F(n): F(-1)}, N)
        n += 1
    return out


def eta_pent(N):
    """Pentagonal-number expansion: sum_k (-1)^k q^{(6k+1)^2/24}."""
    N = F(N)
    out = {}
    k = 0
    while True:
        done = True
        for kk in ([0] if k == 0 else [k, -k]):
            e = F((6 * kk + 1) ** 2, 24)
            if e < N:
                done = False
                out[e] = F(-1 if (kk % 2) else 1)
        if done and k > 0:
            break
        k += 1
    return out


def eta_cube_odd(N):
    """sum_{n>=0} (-1)^n (2n+1) q^{(2n+1)^2/8}."""
    N = F(N)
    out = {}
    n = 0
    while True:
        e = F((2 * n + 1) ** 2, 8)
        if e >= N:
            break
        out[e] = F((-1 if n % 2 else 1) * (2 * n + 1))
        n += 1
    return out


def eta_pow(k, N):
    """eta^k for k >= 1 (small k), truncated below q^N."""
    base = eta_pent(N + 1)
    out = dict(base)
    for _ in range(k - 1):
        out = smul(out, base, N + 1)
    return strunc(out, N)


# ---------------------------------------------------------------------------
# indefinite quadratic-form sums
#
# A sum over a wedge of the (j, r) plane:  the outer index j runs over the
# lattice (integers or half-odd-integers), r runs between 0 and j with
# region-dependent boundary inclusion, each point is weighted by
# (-1)^{sigma(j) + c} q^{A (j+alpha)^2 - B (r+beta)^2}, and the "negative j"
# wing enters with an overall minus sign.
# ---------------------------------------------------------------------------

REGIONS = {
    # name: (first wing bounds incl., second wing bounds incl.)
    # first wing: r between 0 and j; second wing: r between j and 0.
    "V1": ((True, False), (True, False)),   # 0 <= r <  j   minus   j <= r < 0
    "V2": ((True, True), (False, False)),   # 0 <= r <= j   minus   j <  r < 0
    "V3": ((False, True), (False, True)),   # 0 <  r <= j   minus   j <  r <= 0
    "V4": ((False, True), (False, False)),  # 0 <  r <= j   minus   j <  r < 0
}


def lat_points(lo, hi, incl_lo, incl_hi, half):
    """Lattice points r with lo (<|<=) r (<|<=) hi; half-odd if `half`."""
    if lo > hi or (lo == hi and not (incl_lo and incl_hi)):
        return []
    dlo, dhi = 2 * F(lo), 2 * F(hi)
    d0 = math.ceil(dlo) if incl_lo else math.floor(dlo) + 1
    d1 = math.floor(dhi) if incl_hi else math.ceil(dhi) - 1
    par = 1 if half else 0
    if d0 % 2 != par:
        d0 += 1
    if d1 % 2 != par:
        d1 -= 1
    return [F(d, 2) for d in range(d0, d1 + 1, 2)]


def wedge_ranges(region, j):
    (f_lo, f_hi), (s_lo, s_hi) = REGIONS[region]
    return (F(0), j, f_lo, f_hi), (j, F(0), s_lo, s_hi)


def enumeration_jmax(A, alpha, B, beta, N):
    """Outer-index bound: beyond it the minorant A(|j|-|a|)^2 - B(|j|+c0)^2
    exceeds the cutoff.  Validated against brute force, never trusted blindly."""
    A, B = float(A), float(B)
    aa, c0 = abs(float(alpha)), max(abs(float(beta)), abs(float(alpha))) + 1.0
    n = float(N)
    qa = A - B
    qb = -2.0 * (A * aa + B * c0)
    qc = A * aa * aa - B * c0 * c0 - n
    disc = max(qb * qb - 4.0 * qa * qc, 0.0)
    xplus = (-qb + math.sqrt(disc)) / (2.0 * qa)
    return int(math.ceil(max(xplus, 1.0))) + 3


def indef_sum(lattice, region, A, alpha, B, beta, c, N, zeta=None):
    """The wedge sum described above.  `lattice` is 'int' or 'half'; the sign
    is (-1)^{j + c} on integers and (-1)^{j - 1/2 + c} on half-odd integers.
    With `zeta` = (lam, mu, nu), terms are keyed (q-exponent, lam*j+mu*r+nu).
    """
    A, alpha, B, beta, N = F(A), F(alpha), F(B), F(beta), F(N)
    assert A > B > 0
    half = lattice == "half"
    out = {}
    jmax = enumeration_jmax(A, alpha, B, beta, N)
    for j in lat_points(-jmax, jmax, True, True, half):
        sigma = int(j - HALF) if half else int(j)
        sgn = F(-1 if ((sigma + c) % 2) else 1)
        base = A * (j + alpha) ** 2
        (flo, fhi, fl, fh), (slo, shi, sl, sh) = wedge_ranges(region, j)
        for r, w in [(r, sgn) for r in lat_points(flo, fhi, fl, fh, half)] + [
            (r, -sgn) for r in lat_points(slo, shi, sl, sh, half)
        ]:
            e = base - B * (r + beta) ** 2
            if e < N:
                key = (e, zeta[0] * j + zeta[1] * r + zeta[2]) if zeta else e
                v = out.get(key, F(0)) + w
                if v == 0:
                    out.pop(key, None)
                else:
                    out[key] = v
    return out


def indef_sum_brute(lattice, region, A, alpha, B, beta, c, N, box):
    """Same sum by blunt rectangle scan |j|,|r| <= box (containment oracle)."""
    A, alpha, B, beta, N = F(A), F(alpha), F(B), F(beta), F(N)
    half = lattice == "half"
    out = {}
    for j in lat_points(-box, box, True, True, half):
        sigma = int(j - HALF) if half else int(j)
        sgn = F(-1 if ((sigma + c) % 2) else 1)
        for r in lat_points(-box, box, True, True, half):
            (flo, fhi, fl, fh), (slo, shi, sl, sh) = wedge_ranges(region, j)
            w = F(0)
            if (flo < r or (fl and r == flo)) and (r < fhi or (fh and r == fhi)):
                w += sgn
            if (slo < r or (sl and r == slo)) and (r < shi or (sh and r == shi)):
                w -= sgn
            if w == 0:
                continue
            e = A * (j + alpha) ** 2 - B * (r + beta) ** 2
            if e < N:
                v = out.get(e, F(0)) + w
                if v == 0:
                    out.pop(e, None)
                else:
                    out[e] = v
    return out


# ---------------------------------------------------------------------------
# the g-system: coefficient series of the theta decomposition
# ---------------------------------------------------------------------------


def corr_theta(m, p, N):
    """The signed half-integral-index theta that multiplies the finite sums."""
    return theta_q(2 * m * p + m + HALF, m + HALF, True, N)


def corr_interior(m, p, k, alternating):
    """q^{-(m(2r-1)+k)^2/4m} summed over -p < r <= p (optionally times (-1)^k)."""
    out = {}
    s = F(-1 if (k % 2) else 1) if alternating else F(1)
    for r in range(-p + 1, p + 1):
        e = -F((m * (2 * r - 1) + k) ** 2, 4 * m)
        v = out.get(e, F(0)) + s
        if v == 0:
            out.pop(e, None)
        else:
            out[e] = v
    return out


def corr_zero(m, p):
    out = {}
    for r in range(0, p):
        e = -m * (F(r) + HALF) ** 2
        out[e] = out.get(e, F(0)) + 1
    return {e: c for e, c in out.items() if c != 0}


def corr_boundary(m, p):
    out = {}
    for r in range(-(p - 1), p):
        e = -m * F(r) ** 2
        out[e] = out.get(e, F(0)) + 1
    return {e: c for e, c in out.items() if c != 0}


def g_star(i, m, p, k, N):
    """g^{[m,p]*}_k of flavor i in {1,2}, exact to q^N (boundary k returns the
    single-theta coefficient, i.e. half the paired-theta weight)."""
    N = F(N)
    lam = m + HALF
    alpha = F(2 * p * m, 2 * m + 1)
    ci = (k % 2) if i == 1 else 0

    def with_theta(fin):
        if not fin:
            return {}
        pad = -min(fin)
        th = corr_theta(m, p, N + pad)
        return smul(th, fin, N)

    if 0 < k < m:
        s1 = indef_sum("half", "V1", lam, alpha, m, F(k, 2 * m) + p, ci, N)
        s2 = indef_sum("half", "V2", lam, alpha, m, -F(k, 2 * m) + p, ci, N)
        fin = corr_interior(m, p, k, alternating=(i == 1))
        g = sadd(sneg(s1), sneg(s2), sneg(with_theta(fin)))
    elif k == 0:
        s2 = indef_sum("half", "V2", lam, alpha, m, F(p), 0, N)
        g = sadd(sneg(s2), sneg(with_theta(corr_zero(m, p))))
    elif k == m:
        s2 = indef_sum("half", "V2", lam, alpha, m, p - HALF, 0, N)
        g = sadd(sneg(s2), sscale(sneg(with_theta(corr_boundary(m, p))), HALF))
        if i == 1 and m % 2:
            g = sneg(g)
    else:
        raise ValueError("k out of range")
    if i == 2 and p % 2:
        g = sneg(g)
    return g


# ---------------------------------------------------------------------------
# theta blocks: raw map  slot (j mod 2m) -> series
# ---------------------------------------------------------------------------


def block_new(two_m):
    return {j: {} for j in range(two_m)}


def block_add_theta(blk, j, s):
    two_m = len(blk)
    blk[j % two_m] = sadd(blk[j % two_m], s)


def block_add_pair(blk, k, s):
    block_add_theta(blk, k, s)
    block_add_theta(blk, -k, s)


def block_trim(blk, N):
    return {j: strunc(s, N) for j, s in blk.items()}


def block_coefficient(blk, k):
    two_m = len(blk)
    m2 = two_m // 2
    if two_m % 2 == 0 and (k % two_m == 0 or k % two_m == m2):
        return sscale(blk[k % two_m], HALF)
    mirror = blk[(-k) % two_m]
    assert blk[k % two_m] == mirror, "block lost its mirror symmetry"
    return dict(blk[k % two_m])


def G_block(i, m, p, N):
    """Assemble the full decomposition as a block over slots j mod 2m,
    directly from its five constituent families (independent of g_star)."""
    N = F(N)
    lam = m + HALF
    alpha = F(2 * p * m, 2 * m + 1)
    blk = block_new(2 * m)
    gl = F(-1 if (i == 2 and p % 2) else 1)

    # paired indefinite wedges, k = 0..m
    for k in range(0, m + 1):
        ci = (k % 2) if i == 1 else 0
        s2 = indef_sum("half", "V2", lam, alpha, m, -F(k, 2 * m) + p, ci, N)
        block_add_pair(blk, k, sscale(sneg(s2), gl))
        if 0 < k < m:
            s1 = indef_sum("half", "V1", lam, alpha, m, F(k, 2 * m) + p, ci, N)
            block_add_pair(blk, k, sscale(sneg(s1), gl))

    # finite companion sums multiplied by the signed correction theta
    fins = {k: corr_interior(m, p, k, alternating=(i == 1)) for k in range(0, m)}
    z0 = corr_zero(m, p)
    bm = corr_boundary(m, p)
    pad = max(
        [F(0)]
        + [-min(f) for f in fins.values() if f]
        + ([-min(z0)] if z0 else [])
        + ([-min(bm)] if bm else [])
    )
    th = corr_theta(m, p, N + pad)
    for k in range(0, m):
        block_add_pair(blk, k, sscale(sneg(smul(th, fins[k], N)), gl))
    block_add_theta(blk, 0, sscale(smul(th, z0, N), 2 * gl))
    sgn_m = F(-1 if (i == 1 and m % 2) else 1)
    block_add_theta(blk, m, sscale(sneg(smul(th, bm, N)), gl * sgn_m))
    return block_trim(blk, N)


# ---------------------------------------------------------------------------
# additional correction function as a theta block
# ---------------------------------------------------------------------------


def phi_add(m, two_a, two_b, N):
    """Block of the additional correction at elliptic offset a*tau + b
    (arguments carry 2a in N_0 and 2b in Z so everything stays rational:
    the multiplier e^{2 pi i j b} = (-1)^{j * 2b})."""
    N = F(N)
    blk = block_new(2 * m)
    zero = {}
    for k in range(0, two_a + 1):
        e = F(m * k * (two_a - k))
        zero[e] = zero.get(e, F(0)) + 1
    block_add_theta(blk, 0, sneg(strunc(zero, N)))
    for j in range(1, 2 * m):
        ph = F(-1 if ((j * two_b) % 2) else 1)
        fin = {}
        for k in range(1, two_a + 1):
            e = -F((j + 2 * m * (two_a - k)) * (j - 2 * m * k), 4 * m)
            fin[e] = fin.get(e, F(0)) + 1
        pair = sscale(strunc(fin, N), -HALF * ph)
        block_add_pair(blk, j, pair)
    return block_trim(blk, N)


def phi_add_special(m, shifted, N):
    """Same block in closed form: -sum_{0<=j<=2m} (+-1)^j q^{-j(j-2m)/4m} theta_j."""
    N = F(N)
    blk = block_new(2 * m)
    for j in range(0, 2 * m + 1):
        sgn = F(-1 if (shifted and j % 2) else 1)
        e = -F(j * (j - 2 * m), 4 * m)
        if e < N:
            block_add_theta(blk, j, {e: -sgn})
    return block_trim(blk, N)


# ---------------------------------------------------------------------------
# m = 1 specials: integer-lattice forms, eta-quotients f, theta-quotients h
# ---------------------------------------------------------------------------


def g_int_lattice(which, N):
    """The four m=1 series written as integer-lattice wedge sums."""
    N = F(N)
    TH = F(3, 2)
    if which == "g10_0":
        return sneg(indef_sum("int", "V2", TH, HALF, 1, HALF, 0, N))
    if which == "g10_1":
        return indef_sum("int", "V2", TH, HALF, 1, F(0), 0, N)
    if which == "g11_0":
        return indef_sum("int", "V1", TH, F(1, 6), 1, HALF, 0, N)
    if which == "g11_1":
        body = sneg(indef_sum("int", "V1", TH, F(1, 6), 1, F(0), 0, N))
        return sadd(body, sscale(theta_q(HALF, TH, True, N), HALF))
    raise ValueError(which)


def f_series(i, N):
    N = F(N)
    eta2 = eta_pow(2, N + 2)
    if i == 0:
        num = sscale(g_star(1, 1, 1, 1, N + 2), -2)
    elif i == 1:
        num = sneg(g_star(1, 1, 0, 0, N + 2))
    elif i == 2:
        num = g_star(1, 1, 0, 1, N + 2)
    elif i == 3:
        num = sscale(g_star(1, 1, 1, 0, N + 2), 2)
    else:
        raise ValueError(i)
    return sdiv(num, eta2, N)


def h_series(j, N):
    N = F(N)
    th = theta_q(j, 3, False, N + 2)
    return sdiv(th, eta_pent(N + 2), N)


# ---------------------------------------------------------------------------
# two-variable reshuffle: blocks over (q-exponent, zeta-exponent)
# ---------------------------------------------------------------------------


def reshuffle_lhs(m, N):
    """Wedge over j in Z, 0 < k <= 2mj (minus 2mj < k <= 0), with zeta powers;
    the theta label travels with k mod 2m."""
    N = F(N)
    lam = m + HALF
    cc = F(1, 2 * (2 * m + 1))
    blk = block_new(2 * m)
    jmax = 2
    while (lam * (jmax - 1 + cc) ** 2 - m * (jmax - 1) ** 2 < N
           or lam * (-(jmax - 1) + cc) ** 2 - m * (jmax - 1) ** 2 < N):
        jmax += 1
    jmax += 3
    for j in range(-jmax, jmax + 1):
        sgn = F(-1 if j % 2 else 1)
        base = lam * (j + cc) ** 2
        zbase = 2 * m * (j + cc)
        if j > 0:
            ks, w = range(1, 2 * m * j + 1), sgn
        elif j < 0:
            ks, w = range(2 * m * j + 1, 1), -sgn
        else:
            continue
        for k in ks:
            e = base - F(k * k, 4 * m)
            if e < N:
                term = {(e, zbase - k): w}
                blk[k % (2 * m)] = dsum2(blk[k % (2 * m)], term)
                blk[(-k) % (2 * m)] = dsum2(blk[(-k) % (2 * m)], term)
    return blk


def dsum2(a, b):
    out = dict(a)
    for key, c in b.items():
        v = out.get(key, F(0)) + c
        if v == 0:
            out.pop(key, None)
        else:
            out[key] = v
    return out


def reshuffle_rhs(m, N):
    N = F(N)
    lam = m + HALF
    cc = F(1, 2 * (2 * m + 1))
    blk = block_new(2 * m)
    for s in range(0, m + 1):
        part = indef_sum(
            "int", "V3", lam, cc, m, -F(s, 2 * m), 0, N,
            zeta=(2 * m, -2 * m, 2 * m * cc + s),
        )
        blk[s % (2 * m)] = dsum2(blk[s % (2 * m)], part)
        blk[(-s) % (2 * m)] = dsum2(blk[(-s) % (2 * m)], part)
    for s in range(1, m):
        part = indef_sum(
            "int", "V1", lam, cc, m, F(s, 2 * m), 0, N,
            zeta=(2 * m, -2 * m, 2 * m * cc - s),
        )
        blk[s % (2 * m)] = dsum2(blk[s % (2 * m)], part)
        blk[(-s) % (2 * m)] = dsum2(blk[(-s) % (2 * m)], part)
    return blk


# ---------------------------------------------------------------------------
# exact transformation data
# ---------------------------------------------------------------------------


def g_T_phase(m, p, j):
    """Exponent r in [0,1) with g_j(tau+1) = e^{2 pi i r} g_j(tau)."""
    r = ((F(p) + F(2 * m + 1, 2)) ** 2 / (2 * m + 1) - F((j + m) ** 2, 2 * m)) / 2
    return r - math.floor(r)


# ---------------------------------------------------------------------------
# numeric evaluation (mpmath)
# ---------------------------------------------------------------------------


def qpow(tau, e):
    return exp(2j * pi * tau * mpf(e.numerator) / mpf(e.denominator))


def eval_series(s, tau):
    tot = mpc(0)
    for e, c in s.items():
        tot += qpow(tau, e) * mpf(c.numerator) / mpf(c.denominator)
    return tot


def n_theta(j, mu, signed, tau, z, nmax=80):
    j, mu = F(j), F(mu)
    coset = j / (2 * mu)
    mun = mpf(mu.numerator) / mpf(mu.denominator)
    tot = mpc(0)
    for k in range(-nmax, nmax + 1):
        n = k + coset
        nn = mpf(n.numerator) / mpf(n.denominator)
        term = exp(2j * pi * mun * nn * z) * exp(2j * pi * tau * mun * nn * nn)
        if signed and k % 2:
            term = -term
        tot += term
    return tot


VARTHETA11_SIGN = -1  # +1 keeps the -i convention; -1 flips it globally


def n_vartheta11(tau, z, nmax=80):
    tot = mpc(0)
    for n in range(-nmax, nmax + 1):
        term = exp(2j * pi * tau * (n + 0.5) ** 2 / 2) * exp((2 * n + 1) * 1j * pi * z)
        if n % 2:
            term = -term
        tot += term
    return VARTHETA11_SIGN * (-1j) * tot


def n_eta(tau):
    q = exp(2j * pi * tau)
    out = exp(2j * pi * tau / 24)
    for n in range(1, 400):
        out *= 1 - q ** n
    return out


# ---------------------------------------------------------------------------
# check harness
# ---------------------------------------------------------------------------

FAILURES = []


def check(name, ok, detail=""):
    status = "PASS" if ok else "FAIL"
    print(f"[{status}] {name}" + (f"  ({detail})" if detail and not ok else ""))
    if not ok:
        FAILURES.append(name)


def series_eq(a, b):
    return a == b


def first_diff(a, b):
    keys = sorted(set(a) | set(b))
    for k in keys:
        ca, cb = a.get(k, F(0)), b.get(k, F(0))
        if ca != cb:
            return f"at {k}: {ca} vs {cb}"
    return "identical"


def leading(s):
    if not s:
        return None
    e = min(s)
    return (e, s[e])


# ---------------------------------------------------------------------------
# the battery
# ---------------------------------------------------------------------------


def run_exact(full):
    t0 = time.time()

    # -- basic theta/eta sanity -------------------------------------------
    check("theta(0,3) to q^4 = 1 + 2q^3",
          theta_q(0, 3, False, 4) == {F(0): F(1), F(3): F(2)})
    check("theta(3,3) to q^1 = 2q^(3/4)",
          theta_q(3, 3, False, 1) == {F(3, 4): F(2)})
    check("theta(1,3) to q^(1/2) = q^(1/12)",
          theta_q(1, 3, False, HALF) == {F(1, 12): F(1)})
    check("eta to q^2 = q^(1/24) - q^(25/24)",
          eta_pent(2) == {F(1, 24): F(1), F(25, 24): F(-1)})
    eN = 200 if full else 60
    check(f"eta: euler product == pentagonal series to q^{eN}",
          eta_euler(eN) == eta_pent(eN), first_diff(eta_euler(eN), eta_pent(eN)))
    cN = 100 if full else 40
    e3 = strunc(smul(smul(eta_pent(cN + 1), eta_pent(cN + 1), cN + 1),
                     eta_pent(cN + 1), cN), cN)
    check(f"eta^3 == odd-square series to q^{cN}", e3 == eta_cube_odd(cN),
          first_diff(e3, eta_cube_odd(cN)))
    check("signed theta(1/2,3/2) == eta",
          theta_q(HALF, F(3, 2), True, 50) == eta_pent(50))

    # -- indefinite enumerator vs brute force ------------------------------
    cases = [
        ("half", "V2", F(3, 2), F(0), 1, F(0), 0),
        ("half", "V2", F(3, 2), F(2, 3), 1, F(1), 0),
        ("half", "V1", F(3, 2), F(2, 3), 1, F(7, 6), 1),
        ("int", "V2", F(3, 2), HALF, 1, HALF, 0),
        ("int", "V1", F(3, 2), F(1, 6), 1, F(0), 0),
        ("int", "V3", F(5, 2), F(1, 10), 2, F(1, 4), 0),
        ("int", "V4", F(5, 2), F(1, 10), 2, F(1, 4), 1),
        ("half", "V4", F(7, 2), F(4, 5), 3, F(1, 6), 0),
    ]
    for lat, reg, A, al, B, be, c in cases:
        a = indef_sum(lat, reg, A, al, B, be, c, 6)
        b = indef_sum_brute(lat, reg, A, al, B, be, c, 6, 60)
        check(f"wedge {reg}/{lat} A={A} alpha={al} beta={be} == brute force",
              a == b, first_diff(a, b))

    # half-odd V4 == V2 (no r = j < 0 with r < 0 strictness difference on
    # the open lattice boundary r = 0)
    a = indef_sum("half", "V4", F(3, 2), F(2, 3), 1, F(1, 3), 0, 8)
    b = indef_sum("half", "V2", F(3, 2), F(2, 3), 1, F(1, 3), 0, 8)
    check("half-odd lattice: V4 == V2", a == b, first_diff(a, b))

    # three-way region identity on the integer lattice:
    # V3 = V2 - (row r = 0)
    A, al, B, be = F(3, 2), F(1, 6), 1, F(1, 3)
    v3 = indef_sum("int", "V3", A, al, B, be, 0, 10)
    v2 = indef_sum("int", "V2", A, al, B, be, 0, 10)
    row = {}
    for j in range(-20, 21):
        e = A * (j + al) ** 2 - B * be ** 2
        if e < 10:
            v = row.get(e, F(0)) + F(-1 if j % 2 else 1)
            if v == 0:
                row.pop(e, None)
            else:
                row[e] = v
    check("region split: V3 == V2 - (r=0 row)", v3 == sadd(v2, sneg(row)),
          first_diff(v3, sadd(v2, sneg(row))))

    # -- leading terms of the four m=1 series ------------------------------
    check("lead g*(1;1,0,0) = -q^(1/8)", leading(g_star(1, 1, 0, 0, 2)) == (F(1, 8), F(-1)))
    check("lead g*(1;1,0,1) = +q^(3/8)", leading(g_star(1, 1, 0, 1, 2)) == (F(3, 8), F(1)))
    check("lead g*(1;1,1,0) = +q^(19/24)", leading(g_star(1, 1, 1, 0, 2)) == (F(19, 24), F(1)))
    check("lead g*(1;1,1,1) = -1/2 q^(1/24)", leading(g_star(1, 1, 1, 1, 2)) == (F(1, 24), F(-1, 2)))

    # -- integer-lattice rewrites of the m=1 series ------------------------
    for which, (p, k) in [("g10_0", (0, 0)), ("g10_1", (0, 1)),
                          ("g11_0", (1, 0)), ("g11_1", (1, 1))]:
        a = g_int_lattice(which, 10)
        b = g_star(1, 1, p, k, 10)
        check(f"integer-lattice form == half-odd form: {which}", a == b,
              first_diff(a, b))

    # -- eta-theta identities for the m=1 series (cutoff 10) ---------------
    N = F(10)
    eta = eta_pent(N + 1)
    th = {j: theta_q(j, 3, False, N + 1) for j in range(0, 4)}
    lhs1 = indef_sum("int", "V2", F(3, 2), HALF, 1, HALF, 0, N)
    check("wedge(V2, beta=1/2) == eta * theta(1,3)",
          lhs1 == smul(eta, th[1], N), first_diff(lhs1, smul(eta, th[1], N)))
    lhs2 = indef_sum("int", "V2", F(3, 2), HALF, 1, F(0), 0, N)
    check("wedge(V2, beta=0) == eta * theta(2,3)",
          lhs2 == smul(eta, th[2], N), first_diff(lhs2, smul(eta, th[2], N)))
    lhs3 = indef_sum("int", "V1", F(3, 2), F(1, 6), 1, HALF, 0, N)
    check("wedge(V1, beta=1/2) == 1/2 eta * theta(3,3)",
          lhs3 == sscale(smul(eta, th[3], N), HALF),
          first_diff(lhs3, sscale(smul(eta, th[3], N), HALF)))
    lhs4 = indef_sum("int", "V1", F(3, 2), F(1, 6), 1, F(0), 0, N)
    rhs4 = sscale(sadd(smul(eta, th[0], N), theta_q(HALF, F(3, 2), True, N)), HALF)
    check("wedge(V1, beta=0) == 1/2 (eta theta(0,3) + signed theta)",
          lhs4 == rhs4, first_diff(lhs4, rhs4))

    # -- f and h quotients --------------------------------------------------
    f = [f_series(i, 8) for i in range(4)]
    h = [h_series(j, 8) for j in range(4)]
    check("lead f0 = q^(-1/24)", leading(f[0]) == (F(-1, 24), F(1)))
    check("lead f1 = q^(1/24)", leading(f[1]) == (F(1, 24), F(1)))
    check("lead f2 = q^(7/24)", leading(f[2]) == (F(7, 24), F(1)))
    check("lead f3 = 2 q^(17/24)", leading(f[3]) == (F(17, 24), F(2)))
    for i in range(4):
        check(f"f{i} == h{i} to q^8", f[i] == h[i], first_diff(f[i], h[i]))

    # -- flavor comparison and p-symmetries ---------------------------------
    ms = [1, 2, 3] if full else [1, 2]
    for m in ms:
        for p in range(0, 2 * m + 1):
            for k in range(0, m + 1):
                g1 = g_star(1, m, p, k, 10)
                g2 = g_star(2, m, p, k, 10)
                want = sneg(g1) if (k + p) % 2 else g1
                check(f"flavor-2 == (-1)^(k+p) flavor-1 at m={m},p={p},k={k}",
                      g2 == want, first_diff(g2, want))
    for k in range(0, 2):
        a = g_star(1, 1, 1, k, 10)
        b = g_star(1, 1, 2, k, 10)
        check(f"m=1: p=1 and p=2 agree at k={k}", a == b, first_diff(a, b))
    for (p, q_) in [(1, 4), (2, 3)]:
        for k in range(0, 3):
            a = g_star(1, 2, p, k, 8)
            b = g_star(1, 2, q_, k, 8)
            check(f"m=2: p={p} and p={q_} agree at k={k}", a == b, first_diff(a, b))

    # -- block assembly round-trip ------------------------------------------
    for (i, m, p) in [(1, 1, 1), (1, 2, 1), (2, 2, 3)] + ([(1, 3, 2)] if full else []):
        blk = G_block(i, m, p, 8)
        ok = True
        msg = ""
        for k in range(0, m + 1):
            got = block_coefficient(blk, k)
            want = g_star(i, m, p, k, 8)
            if got != want:
                ok = False
                msg = f"k={k}: {first_diff(got, want)}"
                break
        check(f"block assembly round-trips to g at (i={i},m={m},p={p})", ok, msg)

    # -- additional correction blocks ----------------------------------------
    want = block_new(2)
    want[0] = {F(0): F(-2)}
    want[1] = {F(1, 4): F(1)}
    check("phi_add(1, 2a=1, 2b=-1) == {-2; +q^(1/4)}", phi_add(1, 1, -1, 12) == want)
    want[1] = {F(1, 4): F(-1)}
    check("phi_add(1, 2a=1, 2b=0) == {-2; -q^(1/4)}", phi_add(1, 1, 0, 12) == want)
    w0 = block_new(2)
    w0[0] = {F(0): F(-1)}
    check("phi_add(1, 2a=0, 2b=0) == {-1}", phi_add(1, 0, 0, 12) == w0)
    for m in range(1, 5):
        a = phi_add(m, 1, -1, 12)
        b = phi_add_special(m, True, 12)
        check(f"phi_add(m={m}, shifted) == closed form", a == b)
        a = phi_add(m, 1, 0, 12)
        b = phi_add_special(m, False, 12)
        check(f"phi_add(m={m}, unshifted) == closed form", a == b)

    # -- two-variable reshuffle ----------------------------------------------
    for m in ([1, 2] if full else [1]):
        a = reshuffle_lhs(m, 8)
        b = reshuffle_rhs(m, 8)
        ok = all(a[j] == b[j] for j in range(2 * m))
        detail = ""
        if not ok:
            for j in range(2 * m):
                if a[j] != b[j]:
                    keys = sorted(set(a[j]) | set(b[j]))
                    for kk in keys:
                        if a[j].get(kk) != b[j].get(kk):
                            detail = f"slot {j} at {kk}: {a[j].get(kk)} vs {b[j].get(kk)}"
                            break
                    break
        check(f"reshuffle identity, m={m}, cutoff 8", ok, detail)

    # -- T-phases -------------------------------------------------------------
    check("T phase r(1,0,0) = 1/8", g_T_phase(1, 0, 0) == F(1, 8))
    for m in [1, 2, 3]:
        for p in range(0, 2 * m + 1):
            for k in range(0, m + 1):
                g = g_star(1, m, p, k, 8)
                r = g_T_phase(m, p, k)
                ok = all((e - r) == int(e - r) for e in g)
                check(f"all exponents of g(m={m},p={p},k={k}) are r mod 1", ok,
                      f"r={r}, lead={leading(g)}")

    print(f"-- exact battery done in {time.time() - t0:.1f}s")


def run_numeric():
    t0 = time.time()
    taus = [mpc(mpf(3) / 10, mpf(11) / 10), mpc(mpf(-1) / 4, mpf(9) / 10)]

    # eta S-transform as an eval_series sanity check
    for tau in taus:
        lhs = eval_series(eta_pent(40), -1 / tau)
        rhs = sqrt(-1j * tau) * eval_series(eta_pent(40), tau)
        check("eta(-1/tau) == sqrt(-i tau) eta(tau)", abs(lhs - rhs) < mpf("1e-25"),
              f"resid={abs(lhs - rhs)}")

    # g-system S-transform, m = 1 and 2
    for m in [1, 2]:
        NN = 40
        g = {(p, k): g_star(1, m, p, k, NN)
             for p in range(0, 2 * m + 1) for k in range(0, m + 1)}
        scale = 1 / sqrt(mpf(m) * (m + mpf("0.5")))
        for tau in taus:
            vals = {pk: eval_series(s, tau) for pk, s in g.items()}
            for p in range(0, 2 * m + 1):
                for j in range(0, m + 1):
                    lhs = eval_series(g[(p, j)], -1 / tau)
                    rho = mpf("0.5") if j in (0, m) else mpf(1)
                    acc = mpc(0)
                    for pp in range(0, 2 * m + 1):
                        ph = exp(2j * pi * p * pp / (2 * m + 1))
                        for k in range(0, m + 1):
                            acc += ph * cos(pi * j * k / m) * vals[(pp, k)]
                    rhs = (-1j * tau) * scale * rho * acc
                    resid = abs(lhs - rhs)
                    check(f"S-transform g m={m} p={p} j={j}", resid < mpf("1e-12"),
                          f"resid={resid}")

    # paired-theta family S-transform (weights 1/2 at the boundary columns)
    for m in [1, 2, 3]:
        for tau in taus[:1]:
            for k in range(0, m + 1):
                lhs = 2 * n_theta(k, m, False, -1 / tau, 0)
                acc = mpc(0)
                for j in range(0, m + 1):
                    w = mpf("0.5") if j in (0, m) else mpf(1)
                    acc += w * cos(pi * j * k / m) * 2 * n_theta(j, m, False, tau, 0)
                rhs = sqrt(-1j * tau) * sqrt(mpf(2) / m) * acc
                resid = abs(lhs - rhs)
                check(f"S-transform paired theta m={m} k={k}", resid < mpf("1e-20"),
                      f"resid={resid}")

    # signed half-level theta family S-transform
    for m in [1, 2, 3]:
        for tau in taus[:1]:
            for p in range(0, 2 * m + 1):
                lhs = n_theta(p - m - HALF, m + HALF, True, -1 / tau, 0)
                acc = mpc(0)
                for pp in range(0, 2 * m + 1):
                    ph = exp(-2j * pi * p * pp / (2 * m + 1))
                    v = n_theta(pp - m - HALF, m + HALF, True, tau, 0)
                    acc += (-1) ** pp * ph * v
                rhs = -1j * (-1) ** (m + p) * sqrt(-1j * tau) / sqrt(2 * m + 1) * acc
                resid = abs(lhs - rhs)
                check(f"S-transform signed theta m={m} p={p}", resid < mpf("1e-20"),
                      f"resid={resid}")

    # h-family S-transform (matrix rows frozen)
    M = [[1, 2, 2, 1], [1, 1, -1, -1], [1, -1, -1, 1], [1, -2, 2, -1]]
    for tau in taus:
        hv = [n_theta(j, 3, False, tau, 0) / n_eta(tau) for j in range(4)]
        for j in range(4):
            lhs = n_theta(j, 3, False, -1 / tau, 0) / n_eta(-1 / tau)
            rhs = sum(M[j][k] * hv[k] for k in range(4)) / sqrt(6)
            resid = abs(lhs - rhs)
            check(f"S-transform h_{j}", resid < mpf("1e-20"), f"resid={resid}")

    # f-family: same matrix
    f = [f_series(i, 40) for i in range(4)]
    for tau in taus[:1]:
        fv = [eval_series(s, tau) for s in f]
        for j in range(4):
            lhs = eval_series(f[j], -1 / tau)
            rhs = sum(M[j][k] * fv[k] for k in range(4)) / sqrt(6)
            resid = abs(lhs - rhs)
            check(f"S-transform f_{j}", resid < mpf("1e-12"), f"resid={resid}")

    # elliptic-shift identities for the signed half-level theta
    z0 = mpc(mpf(7) / 25, mpf(3) / 20)
    for m in [1, 2]:
        for p in [0, 1]:
            tau = taus[0]
            mu = m + HALF
            zz = (m * (2 * p + 1) * tau - m) / mu
            lhs = n_theta(HALF, mu, True, tau, zz)
            ph = exp(-1j * pi * m / (2 * m + 1))
            qq = exp(2j * pi * tau * mpf(-(m * m * (2 * p + 1) ** 2)) / (2 * (2 * m + 1)))
            rhs = ph * qq * n_theta(2 * m * p + m + HALF, mu, True, tau, 0)
            check(f"shift identity (with phase) m={m} p={p}",
                  abs(lhs - rhs) < mpf("1e-20"), f"resid={abs(lhs - rhs)}")
            zz = (m * (2 * p + 1) * tau) / mu
            lhs = n_theta(HALF, mu, True, tau, zz)
            rhs = qq * n_theta(2 * m * p + m + HALF, mu, True, tau, 0)
            check(f"shift identity (no phase) m={m} p={p}",
                  abs(lhs - rhs) < mpf("1e-20"), f"resid={abs(lhs - rhs)}")

    # elliptic-shift identities for vartheta11
    for p in [0, 1]:
        tau = taus[0]
        z = z0
        qq = exp(2j * pi * tau * mpf(-(2 * p + 1) ** 2) / 8)
        lhs = n_vartheta11(tau, z / 2 + ((2 * p + 1) * tau - 1) / 2)
        rhs = qq * exp(-1j * pi * (2 * p + 1) * z / 2) * n_theta(0, HALF, False, tau, z)
        check(f"vartheta shift 1(i) p={p}", abs(lhs - rhs) < mpf("1e-18"),
              f"resid={abs(lhs - rhs)}")
        lhs = n_vartheta11(tau, z / 2 - ((2 * p + 1) * tau - 1) / 2)
        rhs = -qq * exp(1j * pi * (2 * p + 1) * z / 2) * n_theta(0, HALF, False, tau, z)
        check(f"vartheta shift 1(ii) p={p}", abs(lhs - rhs) < mpf("1e-18"),
              f"resid={abs(lhs - rhs)}")
        lhs = n_vartheta11(tau, z / 2 + (p + mpf("0.5")) * tau)
        rhs = -1j * (-1) ** p * qq * exp(-1j * pi * (2 * p + 1) * z / 2) \
            * n_theta(0, HALF, True, tau, z)
        check(f"vartheta shift 2(i) p={p}", abs(lhs - rhs) < mpf("1e-18"),
              f"resid={abs(lhs - rhs)}")
        lhs = n_vartheta11(tau, z / 2 - (p + mpf("0.5")) * tau)
        rhs = 1j * (-1) ** p * qq * exp(1j * pi * (2 * p + 1) * z / 2) \
            * n_theta(0, HALF, True, tau, z)
        check(f"vartheta shift 2(ii) p={p}", abs(lhs - rhs) < mpf("1e-18"),
              f"resid={abs(lhs - rhs)}")

    print(f"-- numeric battery done in {time.time() - t0:.1f}s")


def run_dump():
    print("== frozen coefficient tables ==")
    for (m, p, k) in [(1, 0, 0), (1, 0, 1), (1, 1, 0), (1, 1, 1), (1, 2, 0), (1, 2, 1)]:
        print(f"g*(1; m={m},p={p},k={k}) to q^6: {fmt_series(g_star(1, m, p, k, 6))}")
    for (m, p, k) in [(2, 3, 0), (2, 3, 1), (2, 3, 2)]:
        print(f"g*(1; m={m},p={p},k={k}) to q^5: {fmt_series(g_star(1, m, p, k, 5))}")
    for i in range(4):
        print(f"f_{i} to q^4: {fmt_series(f_series(i, 4))}")
        print(f"h_{i} to q^4: {fmt_series(h_series(i, 4))}")
    for m in [1, 2]:
        blk = phi_add(m, 1, -1, 12)
        for j in range(2 * m):
            print(f"phi_add(m={m},1,-1) slot {j}: {fmt_series(blk[j])}")
    for m in [1, 2, 3]:
        for p in range(0, 2 * m + 1):
            row = ", ".join(str(g_T_phase(m, p, j)) for j in range(0, m + 1))
            print(f"T phases m={m} p={p}: {row}")
    blk = reshuffle_lhs(1, 4)
    for j in range(2):
        items = sorted(blk[j].items())
        body = ", ".join(f"(q^{e}, z^{x}): {c}" for (e, x), c in items)
        print(f"reshuffle m=1 slot {j} to q^4: {body}")
    print(f"eta to q^12: {fmt_series(eta_pent(12))}")
    print(f"theta(1,3) to q^12: {fmt_series(theta_q(1, 3, False, 12))}")
    print(f"signed theta(1/2,3/2) to q^12: {fmt_series(theta_q(HALF, F(3,2), True, 12))}")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--full", action="store_true", help="run the slow variants")
    ap.add_argument("--dump", action="store_true", help="print frozen tables")
    ap.add_argument("--skip-numeric", action="store_true")
    args = ap.parse_args()
    if args.dump:
        run_dump()
        return 0
    run_exact(args.full)
    if not args.skip_numeric:
        run_numeric()
    print(f"== {len(FAILURES)} failure(s) ==")
    for f in FAILURES:
        print(f"   {f}")
    return 1 if FAILURES else 0


if __name__ == "__main__":
    sys.exit(main())
