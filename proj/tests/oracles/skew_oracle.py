"""Independent oracle for the trefoil skew Laurent ring and the Z[x] values.

Elements are dicts {(v, p, q): coeff}. Coefficients move right across v^j
by applying the one-step substitutions p -> q, q -> q p^-1 (or their
inverses) j times, never through a matrix power.
"""
import sympy as sp


def step(e, forward):
    a, b = e
    if forward:   # p -> q, q -> q p^-1
        return (-b, a + b)
    return (a + b, -a)  # p -> p q^-1, q -> p


def sigma(e, j):
    for _ in range(abs(j)):
        e = step(e, j > 0)
    return e


def mul(x, y):
    out = {}
    for (i, a, b), c in x.items():
        for (j, a2, b2), d in y.items():
            sa, sb = sigma((a, b), j)
            k = (i + j, sa + a2, sb + b2)
            out[k] = out.get(k, 0) + c * d
    return {k: v for k, v in out.items() if v}


def sub(x, y):
    out = dict(x)
    for k, v in y.items():
        out[k] = out.get(k, 0) - v
    return {k: v for k, v in out.items() if v}


def add(x, y):
    return sub(x, {k: -v for k, v in y.items()})


def vexps(x):
    return sorted({k[0] for k in x})


def divide(a, b):
    q = {}
    r = dict(a)
    bt = max(vexps(b))
    width_b = bt - min(vexps(b))
    bn = [(k, c) for k, c in b.items() if k[0] == bt]
    assert len(bn) == 1 and abs(bn[0][1]) == 1
    (_, bp, bq), bc = bn[0]
    while r and max(vexps(r)) - min(vexps(r)) >= width_b:
        top = max(vexps(r))
        d = top - bt
        sp_, sq_ = sigma((bp, bq), d)
        t = {(d, a_ - sp_, b_ - sq_): c * bc for (v, a_, b_), c in r.items() if v == top}
        q = add(q, t)
        r = sub(r, mul(b, t))
    assert sub(add(mul(b, q), r), a) == {}
    return q, r


psi = {(0, 0, 0): -1, (-5, 2, 0): 1, (-10, -1, -1): -1, (-20, -2, 1): 1,
       (-25, -2, 2): -1, (-35, 1, 0): 1, (-40, 1, -1): 1}
phi = {(0, 0, 0): 1, (-5, 2, 0): -1, (-5, -2, 0): -1, (-10, 1, -1): 1,
       (-10, -2, 3): 1, (-15, -1, 1): -1}

def show(x):
    return sorted(x.items())

def main():
    for j in range(7):
        print("sigma^%d(p) =" % j, sigma((1, 0), j), " sigma^%d(q) =" % j, sigma((0, 1), j))
    q, r = divide(psi, phi)
    print("quotient", show(q))
    print("remainder", show(r))
    print("cross v^-5 p^2 * v^-5 p^-2 =", show(mul({(-5, 2, 0): 1}, {(-5, -2, 0): 1})))
    print("cross v^-5 p^-2 * v^-5 p^2 =", show(mul({(-5, -2, 0): 1}, {(-5, 2, 0): 1})))
    x = sp.symbols("x")
    def piproj(e):
        return sp.expand(sum(c * x**k[0] for k, c in e.items()))
    print("pi(psi) =", piproj(psi)); print("pi(phi) =", piproj(phi))
    alpha_t = sp.expand(x**40 * (x**-35 + x**-20 + x**-5 - x**-40 - x**-25 - x**-10 - 1))
    beta_t = sp.expand(x**45 * (x**-30 - 2*x**-35 + 2*x**-40 - x**-45))
    g = sp.gcd(alpha_t, beta_t)
    print("alpha~ =", alpha_t); print("beta~ =", beta_t); print("gcd =", g)
    print("alpha~/g =", sp.div(alpha_t, g)); print("beta~/g =", sp.div(beta_t, g))
    psi_t = sp.expand(x**40 * piproj(psi))
    phi_t = sp.expand(x**15 * piproj(phi))
    print("gcd(printed psi~, phi~) =", sp.gcd(psi_t, phi_t))
    print("r-pi", piproj(r))


def emit_include(path):
    q, r = divide(psi, phi)
    with open(path, "w") as f:
        f.write("// Generated by tests/oracles/skew_oracle.py; do not edit.\n")
        f.write("// Terms are {v exponent, p exponent, q exponent, coefficient}.\n")
        for name, e in (("kPsiPhiQuotient", q), ("kPsiPhiRemainder", r)):
            f.write("inline constexpr long %s[][4] = {\n" % name)
            for (v, a, b), c in sorted(e.items()):
                f.write("    {%d, %d, %d, %d},\n" % (v, a, b, c))
            f.write("};\n")


if __name__ == "__main__":
    import sys
    if len(sys.argv) > 1:
        emit_include(sys.argv[1])
    else:
        main()
