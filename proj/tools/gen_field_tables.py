#!/usr/bin/env python3
"""Regenerates src/field_tables.cpp.

For every supported base field GF(q), q = p^e, the base modulus is the
smallest monic primitive polynomial of degree e over GF(p).  For every
extension degree m with q^m <= 2^32 the extension modulus is the smallest
monic primitive polynomial of degree m over GF(q), where polynomials are
ordered by the integer sum(c_i * q^i) and GF(q) elements by their base-p
coefficient value.  Output is deterministic.

Usage: tools/gen_field_tables.py > src/field_tables.cpp
"""

import sys

SUPPORTED = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27]
LIMIT = 1 << 32


def prime_power(q):
    for p in range(2, q + 1):
        if q % p == 0:
            e, r = 0, q
            while r % p == 0:
                r //= p
                e += 1
            assert r == 1
            return p, e
    raise ValueError(q)


def prime_factors(n):
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


class Field:
    """GF(q) with elements 0..q-1 and full add/mul tables."""

    def __init__(self, q, base_modulus=None):
        self.q = q
        p, e = prime_power(q)
        self.p, self.e = p, e
        if e == 1:
            self.add = [[(x + y) % p for y in range(q)] for x in range(q)]
            self.mul = [[(x * y) % p for y in range(q)] for x in range(q)]
        else:
            mod = base_modulus  # coefficient list, low first, monic, length e+1

            def digits(v):
                return [(v // p ** i) % p for i in range(e)]

            def value(d):
                return sum(c * p ** i for i, c in enumerate(d))

            def pmul(x, y):
                a, b = digits(x), digits(y)
                prod = [0] * (2 * e - 1)
                for i, ai in enumerate(a):
                    for j, bj in enumerate(b):
                        prod[i + j] = (prod[i + j] + ai * bj) % p
                for k in range(len(prod) - 1, e - 1, -1):
                    c = prod[k]
                    if c:
                        for i in range(e + 1):
                            prod[k - e + i] = (prod[k - e + i] - c * mod[i]) % p
                return value(prod[:e])

            self.add = [[value([(a + b) % p for a, b in zip(digits(x), digits(y))])
                         for y in range(q)] for x in range(q)]
            self.mul = [[pmul(x, y) for y in range(q)] for x in range(q)]
        self.neg = [next(y for y in range(q) if self.add[x][y] == 0) for x in range(q)]


def poly_mulmod(f, a, b, F):
    """a*b mod f over F; f monic of degree m, a and b of length m."""
    m = len(f) - 1
    prod = [0] * (2 * m - 1)
    for i, ai in enumerate(a):
        if ai:
            row = F.mul[ai]
            for j, bj in enumerate(b):
                if bj:
                    prod[i + j] = F.add[prod[i + j]][row[bj]]
    for k in range(len(prod) - 1, m - 1, -1):
        c = prod[k]
        if c:
            nc = F.neg[c]
            for i in range(m):
                prod[k - m + i] = F.add[prod[k - m + i]][F.mul[nc][f[i]]]
            prod[k] = 0
    return prod[:m]


def poly_powx(f, e, F):
    m = len(f) - 1
    result = [1] + [0] * (m - 1)
    base = [0, 1] + [0] * (m - 2) if m >= 2 else [F.neg[f[0]]]
    while e:
        if e & 1:
            result = poly_mulmod(f, result, base, F)
        base = poly_mulmod(f, base, base, F)
        e >>= 1
    return result


def is_primitive(f, F, n, factors):
    m = len(f) - 1
    one = [1] + [0] * (m - 1)
    if f[0] == 0:
        return False
    if poly_powx(f, n, F) != one:
        return False
    return all(poly_powx(f, n // r, F) != one for r in factors)


def smallest_primitive(F, m):
    q = F.q
    n = q ** m - 1
    factors = prime_factors(n)
    for v in range(q ** m):
        f = [(v // q ** i) % q for i in range(m)] + [1]
        if is_primitive(f, F, n, factors):
            return f
    raise RuntimeError((q, m))


def main():
    base_moduli = {}
    fields = {}
    for q in SUPPORTED:
        p, e = prime_power(q)
        if e == 1:
            fields[q] = Field(q)
            base_moduli[q] = [0, 1]
        else:
            fp = Field(p)
            base_moduli[q] = smallest_primitive(fp, e)
            fields[q] = Field(q, base_moduli[q])

    ext = []
    for q in SUPPORTED:
        m = 2
        while q ** m <= LIMIT:
            ext.append((q, m, smallest_primitive(fields[q], m)))
            m += 1

    w = sys.stdout.write
    w("// Generated by tools/gen_field_tables.py. Do not edit.\n\n")
    w('#include "field_tables.hpp"\n\n')
    w("namespace cyclocode::detail {\n\n")
    w("const std::vector<BaseFieldEntry>& base_field_table() {\n")
    w("    static const std::vector<BaseFieldEntry> table = {\n")
    for q in SUPPORTED:
        p, e = prime_power(q)
        coeffs = ", ".join(str(c) for c in base_moduli[q]) if e > 1 else ""
        w(f"        {{{q}, {p}, {e}, {{{coeffs}}}}},\n")
    w("    };\n    return table;\n}\n\n")
    w("const std::vector<ExtensionEntry>& extension_table() {\n")
    w("    static const std::vector<ExtensionEntry> table = {\n")
    for q, m, f in ext:
        w(f"        {{{q}, {m}, {{{', '.join(str(c) for c in f)}}}}},\n")
    w("    };\n    return table;\n}\n\n")
    w("}  // namespace cyclocode::detail\n")


if __name__ == "__main__":
    main()
