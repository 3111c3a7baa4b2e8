"""Independent sympy oracle for values frozen into the Rust test suite.

Works in the physical chart (t, x1, x2, x3) straight from the generator
formulas, sharing no code with the Rust implementation.  Run:

    python3 python/oracles/derive.py
"""

import itertools

import sympy as sp

t, x1, x2, x3, c, l = sp.symbols("t x1 x2 x3 c l")
X = [t, x1, x2, x3]
xs = [x1, x2, x3]


def bracket(a, b):
    return [sp.simplify(sum(a[n] * sp.diff(b[m], X[n]) - b[n] * sp.diff(a[m], X[n]) for n in range(4))) for m in range(4)]


def unit(mu):
    return [sp.Integer(int(m == mu)) for m in range(4)]


H = unit(0)
P = [unit(i) for i in (1, 2, 3)]
# K_i = t d_i - c^-2 x_i d_t with x_i = -x^i
K = [[xs[i] / c**2] + [t if m == i else 0 for m in range(3)] for i in range(3)]
Kg = [[0] + [t if m == i else 0 for m in range(3)] for i in range(3)]
# J_i = 1/2 eps_i^{jk} (x_j d_k - x_k d_j) with x_j = -x^j
J = []
for i in range(3):
    v = [sp.Integer(0)] * 4
    for j, k in itertools.permutations(range(3), 2):
        e = sp.LeviCivita(i, j, k)
        if e:
            v[k + 1] += sp.Rational(1, 2) * e * (-xs[j])
            v[j + 1] -= sp.Rational(1, 2) * e * (-xs[k])
    J.append(v)


def structure_constants(basis):
    coeffs = sp.symbols("a0:10")
    out = {}
    for a, b in itertools.combinations(range(10), 2):
        br = bracket(basis[a], basis[b])
        combo = [sum(coeffs[k] * basis[k][m] for k in range(10)) for m in range(4)]
        eqs = []
        for m in range(4):
            poly = sp.Poly(sp.expand(combo[m] - br[m]), *X)
            eqs.extend(poly.coeffs())
        sol = sp.solve(eqs, coeffs, dict=True)
        assert len(sol) == 1, (a, b)
        for k in range(10):
            v = sp.simplify(sol[0].get(coeffs[k], 0))
            if v != 0:
                out[(a, b, k)] = v
    return out


def chart_components(field):
    """Components in the x0 = ct chart: d_t = c d_0, t = x0/c."""
    x0 = sp.symbols("x0")
    v = [sp.expand(field[0] * c)] + [sp.expand(f) for f in field[1:]]
    return [sp.simplify(f.subs(t, x0 / c)) for f in v]


if __name__ == "__main__":
    print("[H, Kg_1] =", chart_components(bracket(H, Kg[0])))
    print("[J1, J2] + J3 =", [sp.simplify(a + b) for a, b in zip(bracket(J[0], J[1]), J[2])])
    print("[J1, J2] - J3 =", [sp.simplify(a - b) for a, b in zip(bracket(J[0], J[1]), J[2])])
    print("poincare structure constants (a, b, k, value), a < b:")
    for (a, b, k), v in sorted(structure_constants([H] + P + K + J).items()):
        print(f"    ({a}, {b}, {k}, \"{sp.sstr(v)}\"),")

    # Lie derivative of the second Euclidean metric along H = c d_0, chart x0 = ct.
    y = sp.symbols("x0:4")
    r2 = sum(v**2 for v in y)
    g = [[l**2 * (r2 * int(m == n) - y[m] * y[n]) / r2**2 for n in range(4)] for m in range(4)]
    pt = {y[0]: 1, y[1]: 1, y[2]: 0, y[3]: 0, c: 3, l: 5}
    for m, n in [(0, 0), (0, 1), (1, 1)]:
        lie = c * sp.diff(g[m][n], y[0])
        print(f"L_H g_E2[{m}][{n}] at (1,1,0,0), c=3, l=5 =", sp.nsimplify(lie.subs(pt)))
