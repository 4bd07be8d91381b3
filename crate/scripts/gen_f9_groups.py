"""Writes PGL(2,9), M10 and PGammaL(2,9) as permutation groups on the
projective line over F9 = F3[i], i^2 = -1.

Points: 1..9 are a + b*i for (a, b) in lexicographic order over F3,
point 10 is infinity.
"""

import pathlib

F = [(a, b) for a in range(3) for b in range(3)]
INF = None


def add(x, y):
    return ((x[0] + y[0]) % 3, (x[1] + y[1]) % 3)


def mul(x, y):
    a, b = x
    c, d = y
    return ((a * c - b * d) % 3, (a * d + b * c) % 3)


def inv(x):
    for y in F:
        if mul(x, y) == (1, 0):
            return y
    raise ZeroDivisionError


def frob(x):
    return mul(mul(x, x), x)


ZERO, ONE = (0, 0), (1, 0)
# 1 + i has multiplicative order 8.
OMEGA = (1, 1)


def mobius(a, b, c, d, twist=False):
    def f(z):
        if twist and z is not INF:
            z = frob(z)
        if z is INF:
            return INF if c == ZERO else mul(a, inv(c))
        num = add(mul(a, z), b)
        den = add(mul(c, z), d)
        return INF if den == ZERO else mul(num, inv(den))
    return f


def point(z):
    return 10 if z is INF else F.index(z) + 1


def cycles(f):
    pts = [INF] + F
    images = {point(z): point(f(z)) for z in pts}
    seen, out = set(), []
    for p in range(1, 11):
        if p in seen or images[p] == p:
            continue
        cyc, q = [], p
        while q not in seen:
            seen.add(q)
            cyc.append(q)
            q = images[q]
        out.append("(" + ",".join(map(str, cyc)) + ")")
    return "".join(out) or "()"


MINUS_ONE = (2, 0)
translate = mobius(ONE, ONE, ZERO, ONE)
square_scale = mobius(mul(OMEGA, OMEGA), ZERO, ZERO, ONE)
invert = mobius(ZERO, MINUS_ONE, ONE, ZERO)
scale = mobius(OMEGA, ZERO, ZERO, ONE)
frobenius = mobius(ONE, ZERO, ZERO, ONE, twist=True)
twisted = mobius(OMEGA, ZERO, ZERO, ONE, twist=True)

psl = [translate, square_scale, invert]
groups = {
    "PGL29": ("PGL(2,9): PSL(2,9) and z -> w z", psl + [scale]),
    "M10": ("M10: PSL(2,9) and z -> w z^3", psl + [twisted]),
    "AutA6": ("PGammaL(2,9) = Aut(A6): PGL(2,9) and z -> z^3", psl + [scale, frobenius]),
}

out = pathlib.Path(__file__).resolve().parent.parent / "crates" / "core" / "data"
for name, (title, gens) in groups.items():
    lines = [f"# {title}", "# generated by scripts/gen_f9_groups.py", "degree: 10"]
    lines += [f"gen: {cycles(g)}" for g in gens]
    (out / f"{name}.grp").write_text("\n".join(lines) + "\n")
