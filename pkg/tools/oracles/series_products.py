"""Independent fixtures for the series tests.

Single-variable products go through sympy's own series expansion; the
multivariate two-sided products use a from-scratch dict-of-tuples polynomial
with sympy.binomial coefficients, sharing no code with the package.

Run:  python3 tools/oracles/series_products.py
"""

import sympy
from sympy import binomial, symbols


def one_var_macmahon(N, sign=1):
    # expand prod (1 - s*q^m)^(-m) factor by factor as sympy polynomials
    q = symbols("q")
    acc = sympy.Poly(1, q)
    for m in range(1, N + 1):
        # substituting q -> sign*q gives the factor sign (sign**m) per power
        factor = sum(
            binomial(m + k - 1, k) * sympy.Integer(sign) ** (m * k) * q ** (m * k)
            for k in range(N // m + 1)
        )
        prod = acc * sympy.Poly(factor, q)
        acc = sympy.Poly(sum(c * q**e for (e,), c in prod.terms() if e <= N), q)
    return [int(acc.as_expr().coeff(q, k)) for k in range(N + 1)]


# -- truncated dict-of-tuples polynomials (whole exponents) -----------------

def pmul(a, b, N):
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            if sum(e) > N:
                continue
            out[e] = out.get(e, 0) + ca * cb
    return {e: c for e, c in out.items() if c}


def inv_factor(u_exp, u_sign, n, nvars, N):
    """(1 - u)^(-n) with u = u_sign * x^u_exp."""
    d = sum(u_exp)
    assert d > 0
    out = {(0,) * nvars: 1}
    k = 1
    while k * d <= N:
        c = int(binomial(n + k - 1, k)) * (u_sign**k)
        out[tuple(k * e for e in u_exp)] = c
        k += 1
    return out


def mac_M(x_exp, x_sign, q_exp, q_sign, nvars, N):
    res = {(0,) * nvars: 1}
    m = 1
    while sum(x_exp) + m * sum(q_exp) <= N:
        u = tuple(a + m * b for a, b in zip(x_exp, q_exp))
        res = pmul(res, inv_factor(u, x_sign * q_sign**m, m, nvars, N), N)
        m += 1
    return res


def mac_Mt(x_exp, x_sign, q_exp, q_sign, nvars, N):
    res = mac_M(x_exp, x_sign, q_exp, q_sign, nvars, N)
    m = 1
    while True:
        u = tuple(m * b - a for a, b in zip(x_exp, q_exp))
        assert all(e >= 0 for e in u)
        if sum(u) > N:
            break
        res = pmul(res, inv_factor(u, x_sign * q_sign**m, m, nvars, N), N)
        m += 1
    return res


def dump(tag, d):
    items = sorted(d.items(), key=lambda kv: (sum(kv[0]), kv[0]))
    print(f"{tag} = {{")
    for e, c in items:
        print(f"    {e}: {c},")
    print("}")


if __name__ == "__main__":
    print("# plane partition counts, coefficients of prod (1-q^m)^-m")
    print("MAC_M_1Q_14 =", one_var_macmahon(14))
    print("MAC_M_1_NEGQ_10 =", one_var_macmahon(10, sign=-1))
    print()
    print("# two-variable two-sided product, x=q0, q=q0*q1, N=6")
    dump("MT_Q0_Q0Q1_6", mac_Mt((1, 0), 1, (1, 1), 1, 2, 6))
    print()
    print("# signed first argument: x=-qa, q=qa*qb, N=5")
    dump("MT_NEG_QA_QAQB_5", mac_Mt((1, 0), -1, (1, 1), 1, 2, 5))
    print()
    print("# three-variable plain product: x=q0*q1, q=q0*q1*q2, N=5")
    dump("M_Q0Q1_QQQ_5", mac_M((1, 1, 0), 1, (1, 1, 1), 1, 3, 5))
