"""Reference values for the golden fixture file.

Everything here is computed by brute force (exact rational sums, monomial
enumeration, Gaussian elimination) with the small helper in gfpoly.py, and
is independent of the C++ library.

    python3 tests/oracle/generate_golden.py > tests/fixtures/golden.json
"""
import itertools
import json
import sys

from gfpoly import (L, Rat, add, divmod_, frob, laurent, mul, neg, power, sub,
                    theta_pow, trim, vadic)

P3 = 3


def cmpl_naive(s, u, imax, p, star):
    """Sum of prod u_j^(p^i_j) / L_(i_j)^(s_j) over i_1 (>|>=) ... with i_1 <= imax."""
    r = len(s)
    total = Rat([], [1], p)
    Ls = [L(i, p) for i in range(imax + 1)]
    for idx in itertools.product(range(imax + 1), repeat=r):
        ok = all((idx[j] >= idx[j + 1]) if star else (idx[j] > idx[j + 1]) for j in range(r - 1))
        if not ok:
            continue
        term = Rat([1], [1], p)
        for j in range(r):
            uj = u[j]
            term = term * Rat(frob(uj.num, p, idx[j]), frob(uj.den, p, idx[j]), p)
            term = term * Rat([1], power(Ls[idx[j]], s[j], p), p)
        total = total + term
    return total


def vadic_fixture(s, u, v, A, p, star, imax):
    lo = cmpl_naive(s, u, imax, p, star)
    hi = cmpl_naive(s, u, imax + 1, p, star)
    a, b = vadic(lo, v, A, p), vadic(hi, v, A, p)
    assert a == b, "oracle truncation not stable"
    return {"val": a[0], "unit": a[1], "abs_prec": A}


def laurent_fixture(s, u, P, p, star, imax):
    lo = cmpl_naive(s, u, imax, p, star)
    hi = cmpl_naive(s, u, imax + 1, p, star)
    a, b = laurent(lo, P, p), laurent(hi, P, p)
    assert a == b, "oracle truncation not stable"
    return {"val": a[0], "coeffs": a[1], "prec": P}


# ---------------------------------------------------------------- series at infinity as dicts

def ser_from_rat(x, P, p):
    val, co = laurent(x, P, p)
    return {val - k: c for k, c in enumerate(co) if c}


def ser_mul(a, b, P, p):
    out = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = e1 + e2
            if e >= P:
                out[e] = (out.get(e, 0) + c1 * c2) % p
    return {e: c for e, c in out.items() if c}


def ser_add(a, b, p):
    out = dict(a)
    for e, c in b.items():
        out[e] = (out.get(e, 0) + c) % p
    return {e: c for e, c in out.items() if c}


def ser_inv(a, P, p):
    """1/a known down to theta^P."""
    top = max(a)
    lead_inv = pow(a[top], p - 2, p)
    out = {}
    for e in range(-top, P - 1, -1):
        acc = 1 if e == -top else 0
        # coefficient of theta^(e+top) in a*out must equal [e == -top]
        s = 0
        for ea, ca in a.items():
            if ea == top:
                continue
            eo = e + top - ea
            if eo in out:
                s += ca * out[eo]
        c = ((acc - s) * lead_inv) % p
        if c:
            out[e] = c
    return out


def period_power(p, P):
    """(-theta)^p prod_{i>=1} (1 - theta^(1-p^i))^-(p-1), coefficients down to theta^P."""
    prod = {0: 1}
    i = 1
    while 1 - p ** i >= P - p - 1:
        f = {0: 1, 1 - p ** i: (-1) % p}
        for _ in range(p - 1):
            prod = ser_mul(prod, f, P - p - 1, p)
        i += 1
    inv = ser_inv(prod, P - p, p)
    sign = (-1) ** p % p
    return {e + p: (c * sign) % p for e, c in inv.items() if e + p >= P}


def monic_polys(d, p):
    for tail in itertools.product(range(p), repeat=d):
        yield list(tail) + [1]


def zeta_partial(n, B, P, p):
    total = {}
    for d in range(B + 1):
        for a in monic_polys(d, p):
            total = ser_add(total, ser_from_rat(Rat([1], power(a, n, p), p), P, p), p)
    return total


def reconstruct(x, P, H, p):
    """Smallest-denominator a/b with deg a, deg b <= H and b*x = a on exponents >= P + H, or None."""
    # unknowns b_0..b_H; equations: coefficient of theta^e of b*x vanishes for e in [P+H, -1]
    rows = []
    for e in range(P + H, 0):
        rows.append([x.get(e - k, 0) for k in range(H + 1)])
    for db in range(H + 1):
        cols = db + 1
        sol = nullspace([r[:cols] for r in rows], cols, p)
        if sol is None:
            continue
        b = trim(sol)
        if not b:
            continue
        bx = ser_mul(x, {k: c for k, c in enumerate(b) if c}, P, p)
        a = [0] * (H + 1)
        ok = True
        for e, c in bx.items():
            if e > H:
                ok = False
            elif e >= 0:
                a[e] = c
        if not ok:
            return None
        rat = Rat(trim(a), b, p)
        if max(len(rat.num), len(rat.den)) - 1 > H:
            return None
        # re-expand and compare on all known digits
        check = ser_from_rat(rat, P, p) if not rat.is_zero() else {}
        known = {e: c for e, c in x.items() if e >= P}
        if check != known:
            return None
        return rat
    return None


def nullspace(rows, cols, p):
    """One nonzero vector in the right kernel, or None."""
    m = [list(r) for r in rows]
    piv = []
    row = 0
    for c in range(cols):
        sel = next((i for i in range(row, len(m)) if m[i][c] % p), None)
        if sel is None:
            continue
        m[row], m[sel] = m[sel], m[row]
        inv = pow(m[row][c], p - 2, p)
        m[row] = [(y * inv) % p for y in m[row]]
        for i in range(len(m)):
            if i != row and m[i][c]:
                f = m[i][c]
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[row])]
        piv.append(c)
        row += 1
    free = [c for c in range(cols) if c not in piv]
    if not free:
        return None
    f = free[-1]
    vec = [0] * cols
    vec[f] = 1
    for i, c in enumerate(piv):
        vec[c] = (-m[i][f]) % p
    return vec


def ser_pow(x, n, P, p):
    r = {0: 1}
    for _ in range(n):
        r = ser_mul(r, x, P, p)
    return r


def zeta_ratio(n, p, count, B):
    """zeta(n)^e / (pi^(p-1))^(n e/(p-1)) with e = (p-1)/gcd(n, p-1)."""
    from math import gcd as igcd
    e = (p - 1) // igcd(n, p - 1)
    k = n * e // (p - 1)
    # generous floors so the products below keep every coefficient above P
    P = -count - 4 * k * p
    z = zeta_partial(n, B, P - 2 * k * p, p)
    pi = period_power(p, P - 2 * k * p - p * k)
    num = ser_pow(z, e, P - 2 * k * p, p)
    den = ser_pow(pi, k, P - 2 * k * p - p * k, p)
    ratio = ser_mul(num, ser_inv(den, P - 2 * k * p, p), P, p)
    return ratio, P, e, k


def rat_json(x):
    return {"num": x.num, "den": x.den}


def main():
    p = P3
    theta = Rat([0, 1], [1], p)
    out = {}

    out["poly_mul_f3"] = {"a": [1, 1], "b": [2, 1], "product": mul([1, 1], [2, 1], p)}
    # modinv(1 + theta, theta^3)
    inv = next(c for c in itertools.product(range(p), repeat=3)
               if divmod_(mul([1, 1], list(c), p), theta_pow(3), p)[1] == [1])
    out["modinv_f3"] = {"a": [1, 1], "mod": theta_pow(3), "inverse": trim(list(inv))}

    out["cmpl_v_theta"] = {"q": 3, "v": [0, 1], "s": [1], "u": [rat_json(theta)], "star": False,
                           **vadic_fixture([1], [theta], [0, 1], 6, p, False, 4)}
    out["cmspl_v_theta"] = {"q": 3, "v": [0, 1], "s": [1, 1], "u": [rat_json(theta), rat_json(theta)], "star": True,
                            **vadic_fixture([1, 1], [theta, theta], [0, 1], 6, p, True, 4)}
    u1 = Rat([1, 1], [1], p)
    u2 = Rat([0, 0, 1], [1, 0, 1], p)
    out["cmpl_v_theta1"] = {"q": 3, "v": [1, 1], "s": [2, 1], "u": [rat_json(u1), rat_json(u2)], "star": False,
                            **vadic_fixture([2, 1], [u1, u2], [1, 1], 10, p, False, 4)}
    out["cmpl_inf"] = {"q": 3, "s": [2], "u": [rat_json(theta)], "star": False,
                       **laurent_fixture([2], [theta], -8, p, False, 3)}
    w = Rat([1], [1], p)
    out["cmspl_inf"] = {"q": 3, "s": [1, 2], "u": [rat_json(w), rat_json(theta)], "star": True,
                        **laurent_fixture([1, 2], [w, theta], -20, p, True, 3)}

    pi = period_power(p, -20)
    out["period_q3"] = {"q": 3, "prec": -20, "coeffs": [pi.get(e, 0) for e in range(3, -21, -1)], "val": 3}

    z = zeta_partial(2, 1, -30, p)
    out["zeta_partial_q3_n2_B1"] = {"q": 3, "n": 2, "B": 1, "prec": -30, "val": 0,
                                    "coeffs": [z.get(e, 0) for e in range(0, -31, -1)]}

    ratio, P, e, k = zeta_ratio(2, p, 44, 7)
    ratio_hi, P_hi, _, _ = zeta_ratio(2, p, 44, 8)
    assert {a: b for a, b in ratio.items() if a >= P} == {a: b for a, b in ratio_hi.items() if a >= P}
    rec = reconstruct(ratio, P, 4, p)
    assert rec is not None, "zeta(2) ratio did not reconstruct"
    out["zeta_ratio_q3_n2"] = {"q": 3, "n": 2, "exponent": e, "period_power": k, "height": 4,
                               "witness": rat_json(rec)}
    ratio3, P3_, e3, k3 = zeta_ratio(3, p, 44, 7)
    out["zeta_ratio_q3_n3"] = {"q": 3, "n": 3, "exponent": e3, "period_power": k3, "height": 4,
                               "reconstructs": reconstruct(ratio3, P3_, 4, p) is not None}

    # Hensel root of x^2 - 2 theta at v = theta + 1, modulo v^6
    v = [1, 1]
    mod = power(v, 6, p)
    # Newton from r0 = 1 using exact polynomials
    r = [1]
    for _ in range(4):
        f = sub(mul(r, r, p), [0, 2], p)
        d = add(r, r, p)
        val, unit = vadic(Rat(f, d, p), v, 6, p)
        corr = mul(unit, power(v, val, p), p) if val < 6 else []
        r = divmod_(sub(r, corr, p), mod, p)[1]
    assert divmod_(sub(mul(r, r, p), [0, 2], p), mod, p)[1] == []
    out["hensel_q3"] = {"q": 3, "v": v, "minpoly": "x^2-2*theta", "prec": 6, "root": r}

    # lambda: rho_t(x) = theta x + x^3 and x^2 = 2 theta, so x^3 = 2 theta x
    out["lambda_torsion"] = {"q": 3, "minpoly": "x^2-2*theta", "v": [1, 1], "certificate": "t",
                             "rho_t_lambda_coords": [[], add(scale_theta(1, p), scale_theta(2, p), p)]}
    out["multiplier_r2"] = {"q": 3, "v": [0, 1], "s": [1, 1], "u": ["theta+1", "theta+2"],
                            "a": poly_t_string(mul(sub(power([0, 1], 2, p), [1], p), sub([0, 1], [1], p), p))}

    json.dump(out, sys.stdout, indent=1, sort_keys=True)
    sys.stdout.write("\n")


def scale_theta(c, p):
    return [0, c % p]


def poly_t_string(a):
    terms = []
    for i in range(len(a) - 1, -1, -1):
        c = a[i]
        if not c:
            continue
        mono = "" if i == 0 else ("t" if i == 1 else "t^%d" % i)
        if not mono:
            terms.append(str(c))
        elif c == 1:
            terms.append(mono)
        else:
            terms.append("%d*%s" % (c, mono))
    return "+".join(terms) if terms else "0"


if __name__ == "__main__":
    main()
