#!/usr/bin/env python3
"""Writes data/catalog/*.json: exact generators and table data per group.

Generator entries are built as sums of roots of unity in Q(zeta_N) and
reduced to the power basis modulo the N-th cyclotomic polynomial. Run from
the repository root:  python3 tools/make_catalog.py [output_dir]
"""

import json
import re
import sys
from fractions import Fraction
from pathlib import Path

import sympy

SCHEMA_VERSION = 1


class Cyc:
    """Element of Q(zeta_N) as {exponent: Fraction}, exponents mod N."""

    def __init__(self, n, terms=None):
        self.n = n
        self.terms = {}
        for k, c in (terms or {}).items():
            self._add(k, Fraction(c))

    def _add(self, k, c):
        k %= self.n
        v = self.terms.get(k, Fraction(0)) + c
        if v == 0:
            self.terms.pop(k, None)
        else:
            self.terms[k] = v

    @staticmethod
    def zeta(n, k=1):
        return Cyc(n, {k: 1})

    @staticmethod
    def rational(n, q):
        return Cyc(n, {0: q})

    def __add__(self, o):
        o = self._coerce(o)
        r = Cyc(self.n, self.terms)
        for k, c in o.terms.items():
            r._add(k, c)
        return r

    __radd__ = __add__

    def __neg__(self):
        return Cyc(self.n, {k: -c for k, c in self.terms.items()})

    def __sub__(self, o):
        return self + (-self._coerce(o))

    def __rsub__(self, o):
        return self._coerce(o) - self

    def __mul__(self, o):
        o = self._coerce(o)
        r = Cyc(self.n)
        for a, x in self.terms.items():
            for b, y in o.terms.items():
                r._add(a + b, x * y)
        return r

    __rmul__ = __mul__

    def _coerce(self, o):
        if isinstance(o, Cyc):
            assert o.n == self.n
            return o
        return Cyc.rational(self.n, Fraction(o))

    def power_basis(self):
        x = sympy.Symbol("x")
        poly = sum(sympy.Rational(c.numerator, c.denominator) * x**k for k, c in self.terms.items())
        phi = sympy.cyclotomic_poly(self.n, x)
        rem = sympy.Poly(sympy.rem(sympy.Poly(poly, x, domain="QQ"), sympy.Poly(phi, x, domain="QQ")), x, domain="QQ")
        degree = sympy.totient(self.n)
        coeffs = [rem.coeff_monomial(x**i) for i in range(degree)]
        return [Fraction(int(c.p), int(c.q)) for c in coeffs]

    def to_json(self):
        return [str(c) for c in self.power_basis()]


def matrix(n, rows):
    return [[e if isinstance(e, Cyc) else Cyc.rational(n, Fraction(e)) for e in row] for row in rows]


def matmul(a, b):
    size = len(a)
    return [[sum((a[i][k] * b[k][j] for k in range(size)), Cyc(a[0][0].n)) for j in range(size)] for i in range(size)]


def diag(n, entries):
    size = len(entries)
    return matrix(n, [[entries[i] if i == j else 0 for j in range(size)] for i in range(size)])


# ---------------------------------------------------------------- SL(2)


def cyclic(l):
    return [diag(l, [Cyc.zeta(l), Cyc.zeta(l, -1)])]


def binary_dihedral(n):
    m = 2 * n
    return [diag(m, [Cyc.zeta(m), Cyc.zeta(m, -1)]), matrix(m, [[0, 1], [-1, 0]])]


def binary_tetrahedral(n=4):
    i = Cyc.zeta(n, n // 4)
    half = Fraction(1, 2)
    return [
        diag(n, [i, -i]),
        matrix(n, [[0, 1], [-1, 0]]),
        matrix(n, [[half * (1 + i), half * (1 + i)], [half * (-1 + i), half * (1 - i)]]),
    ]


def binary_octahedral():
    return binary_tetrahedral(8) + [diag(8, [Cyc.zeta(8), Cyc.zeta(8, -1)])]


def binary_icosahedral():
    n = 5
    z = lambda k: Cyc.zeta(n, k)
    sqrt5 = 1 + 2 * z(1) + 2 * z(4)
    s = sqrt5 * Fraction(1, 5)
    a = z(1) - z(4)
    b = z(2) - z(3)
    return [diag(n, [z(3), z(2)]), matrix(n, [[-(a * s), b * s], [b * s, a * s]])]


# ---------------------------------------------------------------- SL(3)


def perm(n):
    return matrix(n, [[0, 1, 0], [0, 0, 1], [1, 0, 0]])


def delta3(k, n=None):
    n = n or k
    step = n // k
    return [perm(n), diag(n, [Cyc.zeta(n, step), Cyc.zeta(n, -step), 1])]


def delta6(k, n=None):
    n = n or k
    return delta3(k, n) + [matrix(n, [[0, -1, 0], [-1, 0, 0], [0, 0, -1]])]


def hessian_pieces(n):
    w = Cyc.zeta(n, n // 3)
    s1 = diag(n, [1, w, w * w])
    sqrt_m3 = 2 * w + 1
    inv = sqrt_m3 * Fraction(-1, 3)
    v = matrix(n, [[inv, inv, inv], [inv, inv * w, inv * w * w], [inv, inv * w * w, inv * w]])
    return s1, v, w


def group_e():
    s1, v, _ = hessian_pieces(3)
    return [s1, perm(3), v]


def group_f():
    s1, v, w = hessian_pieces(9)
    eps = Cyc.zeta(9, 2)
    u = diag(9, [eps, eps, eps * w])
    u_inv = diag(9, [Cyc.zeta(9, -2), Cyc.zeta(9, -2), Cyc.zeta(9, -2) * w * w])
    return [s1, perm(9), v, matmul(matmul(u, v), u_inv)]


def group_g():
    s1, v, w = hessian_pieces(9)
    eps = Cyc.zeta(9, 2)
    return [s1, perm(9), v, diag(9, [eps, eps, eps * w])]


def icosahedral_h(n):
    z = lambda k: Cyc.zeta(n, (n // 5) * k)
    mu1 = z(1) + z(4)
    mu2 = z(2) + z(3)
    h = Fraction(1, 2)
    return matrix(n, [[-h, h * mu2, h * mu1], [h * mu2, h * mu1, -h], [h * mu1, -h, h * mu2]])


def group_h(n=5):
    k = 2
    step = n // k if n % 2 == 0 else None
    if step is None:
        # diag(-1, -1, 1) needs no root of unity
        d = diag(n, [-1, -1, 1])
    else:
        d = diag(n, [Cyc.zeta(n, step), Cyc.zeta(n, -step), 1])
    return [perm(n), d, icosahedral_h(n)]


def klein_pieces(n):
    b = lambda k: Cyc.zeta(n, (n // 7) * k)
    gauss = b(1) + b(2) + b(4) - b(3) - b(5) - b(6)
    c = gauss * Fraction(1, 7)  # -1/sqrt(-7)
    p = b(4) - b(3)
    q = b(2) - b(5)
    r = b(1) - b(6)
    w7 = matrix(n, [[c * p, c * q, c * r], [c * q, c * r, c * p], [c * r, c * p, c * q]])
    return [diag(n, [b(1), b(2), b(4)]), perm(n), w7]


def group_i():
    return klein_pieces(7)


def group_j():
    return group_h(15) + [diag(15, [Cyc.zeta(15, 5)] * 3)]


def group_k():
    return klein_pieces(21) + [diag(21, [Cyc.zeta(21, 7)] * 3)]


def group_l():
    w = Cyc.zeta(15, 5)
    return group_h(15) + [matrix(15, [[-1, 0, 0], [0, 0, -w], [0, -(w * w), 0]])]


# ---------------------------------------------------------------- records


def spec(factors, variant, alphas, power=1):
    return {
        "factors": [list(f) for f in factors],
        "delta": {"variant": variant, "alphas": list(alphas)},
        "argument_power": power,
    }


def record(id_, label, dimension, generators, order, degrees, c_g, weights, degrees_w, dolgachev, singularity,
           normal_form, relation, variant, **extra):
    conductor = generators[0][0][0].n
    rec = {
        "schema_version": SCHEMA_VERSION,
        "id": id_,
        "label": label,
        "dimension": dimension,
        "conductor": conductor,
        "generators": [[[e.to_json() for e in row] for row in g] for g in generators],
        "expected_order": order,
        "invariant_degrees": degrees,
        "c_G": c_g,
        "weight_system": {"weights": weights, "degrees": degrees_w},
        "dolgachev": dolgachev,
        "singularity": singularity,
        "normal_form": normal_form,
        "relation": relation,
        "theorem1_variant": variant,
    }
    rec.update(extra)
    return rec


def sl2_records():
    out = []
    for n in range(1, 7):
        l = 2 * n
        out.append(record(
            f"C{l}", f"C_{l}", 2, cyclic(l), l, [2, l, l], 2, [1, n, n], [l], [n, n], f"A{l - 1}",
            f"x^{l} + y^2 + z^2", f"x^{l}+y^2+z^2", "kleinian",
            sl2_mckay_applicable=True, ade={"label": f"A{l - 1}", "family": "cyclic"},
            notes=f"Dolgachev tuple ({n},{n}) is derived; the table column lists {l - 1}."))
    for n in range(1, 4):
        l = 2 * n + 1
        out.append(record(
            f"C{l}", f"C_{l}", 2, cyclic(l), l, [2, l, l], 1, [2, l, l], [2 * l], [2 * n], f"A{2 * n}",
            f"x^{l} + y^2 + z^2", f"x^{l}+y^2+z^2", "excluded",
            sl2_mckay_applicable=False, ade={"label": f"A{2 * n}", "family": "cyclic"}))
    for n in range(2, 6):
        out.append(record(
            f"D{n}", f"D_{n}", 2, binary_dihedral(n), 4 * n, [4, 2 * n, 2 * n + 2], 2, [2, n, n + 1], [2 * n + 2],
            [2, 2, n], f"D{n + 2}", f"x^{n + 1} + x*y^2 + z^2", f"x^{n + 1}+xy^2+z^2", "kleinian",
            sl2_mckay_applicable=True, ade={"label": f"D{n + 2}", "family": "tree"}))
    out.append(record("BT", "binary tetrahedral", 2, binary_tetrahedral(), 24, [6, 8, 12], 2, [3, 4, 6], [12],
                      [2, 3, 3], "E6", "x^4 + y^3 + z^2", "x^4+y^3+z^2", "kleinian", sl2_mckay_applicable=True,
                      ade={"label": "E6", "family": "tree"}))
    out.append(record("BO", "binary octahedral", 2, binary_octahedral(), 48, [8, 12, 18], 2, [4, 6, 9], [18],
                      [2, 3, 4], "E7", "x^3*y + y^3 + z^2", "x^3y+y^3+z^2", "kleinian", sl2_mckay_applicable=True,
                      ade={"label": "E7", "family": "tree"}))
    out.append(record("BI", "binary icosahedral", 2, binary_icosahedral(), 120, [12, 20, 30], 2, [6, 10, 15], [30],
                      [2, 3, 5], "E8", "x^5 + y^3 + z^2", "x^5+y^3+z^2", "kleinian", sl2_mckay_applicable=True,
                      ade={"label": "E8", "family": "tree"}))
    return out


def sl3_records():
    rows = [
        ("T", "(C): T = Delta(3*2^2)", delta3(2), 12, [2, 3, 4, 6], 1, [3, 4, 6], [12], [2, 3, 3], "E6",
         "z^2 + y^3 + x^4", "z^2+4y^3+27x^4", "kleinian",
         spec([(1, 3)], "minus", [2, 3, 3]), spec([(1, 4)], "plain", [2, 2, 3, 3]), ("i", 3, 0)),
        ("Delta48", "Delta(3*4^2)", delta3(4), 48, [4, 3, 8, 12], 1, [3, 8, 12], [24], [3, 3, 4], "E14",
         "z^2 + y^3 + x^8", "z^2+4y^3+27x^8", "fuchsian",
         spec([(1, 3), (4, 2)], "plus", [3, 3, 4]), spec([(1, 4), (4, 2)], "plain", [3, 3, 4, 4]), ("ii", 3, 2)),
        ("O", "(D): O = Delta(6*2^2)", delta6(2), 24, [2, 4, 6, 9], 1, [4, 6, 9], [18], [2, 3, 4], "E7",
         "z^2 + y^3 + y*x^3", "z^2+4xy^3+27x^3", "kleinian",
         spec([(1, 3), (2, 1)], "minus", [2, 3, 4]), spec([(1, 4), (2, 1)], "plain", [2, 2, 3, 4]), ("i", 3, 1)),
        ("Delta54", "Delta(6*3^2)", delta6(3), 54, [6, 6, 6, 6, 9], 3, [2, 2, 2, 3], [4, 6], [2, 2, 2, 2, 2, 2],
         "delta1", "{x*y + z^2, x^3 + y^3 + z^3 + w^2}", "{z^2-xy, u^2+4xyz+27x^3}", "fuchsian",
         spec([(3, 10), (6, -3)], "plus", [2, 2, 2, 2, 2, 2], 3), spec([(3, 9), (6, -3)], "plain", [2, 2, 2, 2, 2], 3),
         ("iv", 9, -3)),
        ("Delta96", "Delta(6*4^2)", delta6(4), 96, [4, 6, 8, 15], 1, [6, 8, 15], [30], [2, 3, 8], "Z11",
         "z^2 + x*y^3 + x^5", "z^2+4xy^3+27x^5", "fuchsian",
         spec([(1, 2), (4, 3)], "plus", [2, 3, 8]), spec([(1, 3), (4, 3)], "plain", [2, 3, 4, 8]), ("ii", 2, 3)),
        ("Delta216", "Delta(6*6^2)", delta6(6), 216, [6, 6, 12, 21], 3, [2, 4, 7], [14], [2, 2, 2, 4], "Z1,0",
         "z^2 + x*y^3 + x^7", "z^2+4xy^3+27x^7", "fuchsian",
         spec([(3, 7), (6, 1)], "plus", [2, 2, 2, 4], 3), spec([(3, 8), (6, 1)], "plain", [2, 2, 2, 2, 4], 3),
         ("iii", 7, 1)),
        ("E", "(E)", group_e(), 108, [6, 6, 9, 12, 12], 3, [2, 3, 4, 4], [6, 8], [2, 2, 4, 4], "K'1,0",
         "{x*u + y^2, a*x^4 + x*y^2 + z^2 + u^2}", "{9u^2-12z^2, 432y^2-x^3-36xz}", "fuchsian",
         spec([(3, 8), (6, -3)], "plus", [2, 2, 4, 4], 3), spec([(3, 9), (6, -3)], "plain", [2, 2, 2, 4, 4], 3),
         ("iii", 8, -3)),
        ("F", "(F)", group_f(), 216, [6, 9, 12, 12], 3, [3, 4, 4], [12], [4, 4, 4], "U12",
         "z^3 + y^3 + x^4", "4z^3-144yz^2+1728y^2z-186624x^4", "fuchsian",
         spec([(3, 7), (6, -2)], "plus", [4, 4, 4], 3), spec([(3, 8), (6, -2)], "plain", [2, 4, 4, 4], 3),
         ("iii", 7, -2)),
        ("G", "(G)", group_g(), 648, [9, 12, 18, 18], 6, [2, 3, 3], [9], [2, 3, 3, 3], "U1,0",
         "z^3 + y*z^2 + x^3*y", "4z^3-9yz^2+6y^2z-y^3+6912x^3y", "fuchsian",
         spec([(3, 4), (6, 1), (9, 1), (18, -1)], "plus", [2, 3, 3, 3], 6),
         spec([(3, 4), (6, 1), (9, 2), (18, -1)], "plain", [2, 3, 3, 3], 6), ("v", 0, 0)),
        ("I", "(H) = I", group_h(), 60, [2, 6, 10, 15], 1, [6, 10, 15], [30], [2, 3, 5], "E8",
         "z^2 + y^3 + x^5", "z^2-y^3+1728x^5", "kleinian",
         spec([(1, 4)], "minus", [2, 3, 5]), spec([(1, 5)], "plain", [2, 2, 3, 5]), ("i", 4, 0)),
        ("I168", "(I)", group_i(), 168, [4, 6, 14, 21], 1, [6, 14, 21], [42], [2, 3, 7], "E12",
         "z^2 + y^3 + x^7", "z^2-y^3-1728x^7", "fuchsian",
         spec([(1, 3)], "plus", [2, 3, 7]), spec([(1, 4)], "plain", [2, 3, 4, 7]), ("ii", 3, 0)),
        ("J", "(J)", group_j(), 180, [6, 6, 12, 15], 3, [2, 4, 5], [12], [2, 2, 2, 5], "Q2,0",
         "x*z^2 + y^3 + x^4*y", "y^3-xz^2+64x^2y^2", "fuchsian",
         spec([(3, 8), (6, -2)], "plus", [2, 2, 2, 5], 3), spec([(3, 9), (6, -2)], "plain", [2, 2, 2, 2, 5], 3),
         ("iii", 8, -2)),
        ("K", "(K)", group_k(), 504, [6, 12, 18, 21], 3, [4, 6, 7], [18], [2, 4, 7], "Q11",
         "x*z^2 + y^3 + y*x^3", "y^3-xz^2-256x^3y", "fuchsian",
         spec([(3, 6), (6, -1)], "plus", [2, 4, 7], 3), spec([(3, 7), (6, -1)], "plain", [2, 2, 4, 7], 3),
         ("iii", 6, -1)),
        ("L", "(L)", group_l(), 1080, [6, 12, 30, 45], 3, [4, 10, 15], [30], [2, 4, 5], "E13",
         "z^2 + y^3 + x^5*y", "459165024z^2-25509168y^3-(7558272-2519424*sqrt(15)*i)x^5y", "fuchsian",
         spec([(3, 7), (6, -1)], "plus", [2, 4, 5], 3), spec([(3, 8), (6, -1)], "plain", [2, 2, 4, 5], 3),
         ("iii", 7, -1)),
    ]
    out = []
    for (id_, label, gens, order, degrees, c_g, weights, degrees_w, dolg, sing, nf, rel, variant, m0, m, thm) in rows:
        extra = {"det_M0": m0, "det_M": m, "theorem": {"item": thm[0], "a": thm[1], "b": thm[2]}}
        if id_ == "I":
            extra["aliases"] = ["H"]
        out.append(record(id_, label, 3, gens, order, degrees, c_g, weights, degrees_w, dolg, sing, nf, rel, variant,
                          **extra))
    return out


def dump(rec):
    """Indented JSON with each matrix row kept on one line."""
    gens = rec.pop("generators")
    text = re.sub(r"\[\s+([^\[\]{}]*?)\s+\]", lambda m: "[" + ", ".join(x.strip() for x in m.group(1).split(",")) + "]",
                  json.dumps(rec, indent=2))
    blocks = []
    for g in gens:
        rows = ",\n".join("      " + json.dumps(row) for row in g)
        blocks.append("    [\n" + rows + "\n    ]")
    gen_text = '  "generators": [\n' + ",\n".join(blocks) + "\n  ]"
    rec["generators"] = gens
    return text[:-2] + ",\n" + gen_text + "\n}"


def main():
    target = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "data" / "catalog"
    target.mkdir(parents=True, exist_ok=True)
    records = sl2_records() + sl3_records()
    index = []
    for rec in records:
        (target / f"{rec['id']}.json").write_text(dump(rec) + "\n")
        index.append(rec["id"])
    (target / "index.json").write_text(json.dumps({"schema_version": SCHEMA_VERSION, "entries": index}, indent=1) + "\n")
    print(f"wrote {len(records)} entries to {target}")


if __name__ == "__main__":
    main()
