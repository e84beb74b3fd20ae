#!/usr/bin/env python3
"""Brute-force reference values over Fractions for C2, the idempotent monoid and H4.

Without arguments prints the values. With --check HOPFKIT it also runs the
hopfkit binary on generated files and compares its JSON output.
"""

import json
import os
import subprocess
import sys
import tempfile
from fractions import Fraction


def rref(rows, ncols):
    m = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / Fraction(m[r][c])
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def kernel(rows, ncols):
    red, pivots = rref(rows, ncols) if rows else ([], [])
    gens = []
    for f in range(ncols):
        if f in pivots:
            continue
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -red[i][f]
        gens.append(v)
    basis, _ = rref(gens, ncols) if gens else ([], [])
    return basis


def rank(rows, ncols):
    return len(rref(rows, ncols)[1]) if rows else 0


def solve(rows, rhs, ncols):
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug, ncols + 1)
    if pivots and pivots[-1] == ncols:
        return None
    x = [Fraction(0)] * ncols
    for i, p in enumerate(pivots):
        x[p] = red[i][ncols]
    return x, ncols - len(pivots)


class Alg:
    """mul(i, j) -> {k: c}, com(i) -> {(j, k): c}."""

    def __init__(self, n, mul, com, unit, counit):
        self.n, self.mul, self.com, self.unit, self.counit = n, mul, com, unit, counit

    def prod(self, a, b):
        out = [Fraction(0)] * self.n
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                if x and y:
                    for k, c in self.mul(i, j).items():
                        out[k] += x * y * c
        return out

    def coprod(self, a):
        out = {}
        for i, x in enumerate(a):
            if x:
                for jk, c in self.com(i).items():
                    out[jk] = out.get(jk, 0) + x * c
        return out

    def e(self, i):
        v = [Fraction(0)] * self.n
        v[i] = Fraction(1)
        return v


def group(table):
    n = len(table)
    return Alg(n, lambda i, j: {table[i][j]: Fraction(1)}, lambda i: {(i, i): Fraction(1)},
               [Fraction(int(i == 0)) for i in range(n)], [Fraction(1)] * n)


def monoid():
    return group([[0, 1], [1, 1]])


def sweedler():
    # index 2b+a for g^a x^b, xg = -gx
    def mul(i, j):
        a, b = i % 2, i // 2
        c, d = j % 2, j // 2
        if b + d >= 2:
            return {}
        return {2 * (b + d) + (a + c) % 2: Fraction((-1) ** (b * c))}

    def com(i):
        a, b = i % 2, i // 2
        # Delta(g^a) = g^a (x) g^a; Delta(x) = x (x) 1 + g (x) x
        terms = {(a, a): Fraction(1)}
        if b:
            new = {}
            for (l, r), c in terms.items():
                for (xl, xr) in ((2, 0), (1, 2)):
                    for kl, cl in mul(l, xl).items():
                        for kr, cr in mul(r, xr).items():
                            new[(kl, kr)] = new.get((kl, kr), 0) + c * cl * cr
            terms = new
        return {k: v for k, v in terms.items() if v}

    return Alg(4, mul, com, [Fraction(1), 0, 0, 0], [Fraction(1), Fraction(1), 0, 0])


def integrals(B):
    n = B.n
    left_in, right_in, left_on, right_on = [], [], [], []
    for a in range(n):
        for p in range(n):
            li, ri, lo, ro = ([Fraction(0)] * n for _ in range(4))
            for c in range(n):
                # a t = eps(a) t, t a = eps(a) t
                li[c] = B.mul(a, c).get(p, 0) - (B.counit[a] if p == c else 0)
                ri[c] = B.mul(c, a).get(p, 0) - (B.counit[a] if p == c else 0)
                # lambda on B: lambda(a2) a1 = lambda(a) 1 and lambda(a1) a2 = lambda(a) 1
                lo[c] = B.com(a).get((p, c), 0) - (B.unit[p] if c == a else 0)
                ro[c] = B.com(a).get((c, p), 0) - (B.unit[p] if c == a else 0)
            left_in.append(li)
            right_in.append(ri)
            left_on.append(lo)
            right_on.append(ro)
    return {k: kernel(v, n) for k, v in
            (("left_in_B", left_in), ("right_in_B", right_in), ("left_on_B", left_on), ("right_on_B", right_on))}


def antipode(B, side):
    n = B.n
    # unknown S(b_r)_k at r*n+k; right: a1 S(a2) = eps(a) 1, left: S(a1) a2 = eps(a) 1
    rows, rhs = [], []
    for a in range(n):
        for x in range(n):
            row = [Fraction(0)] * (n * n)
            for (j, k), c in B.com(a).items():
                for y in range(n):
                    prod = B.mul(j, y) if side == "right" else B.mul(y, k)
                    coeff = prod.get(x, 0)
                    if coeff:
                        r_idx = k if side == "right" else j
                        row[r_idx * n + y] += c * coeff
            rows.append(row)
            rhs.append(B.counit[a] * B.unit[x])
    sol = solve(rows, rhs, n * n)
    if sol is None:
        return None
    x, free = sol
    return [[x[r * n + k] for k in range(n)] for r in range(n)], free


def fh(B):
    n = B.n
    psi_space = integrals(B)["right_on_B"]
    if len(psi_space) != 1:
        return {"failure": "integral space dim != 1"}
    psi = psi_space[0]
    G = [[sum(psi[k] * c for k, c in B.mul(i, j).items()) for j in range(n)] for i in range(n)]
    if rank(G, n) < n:
        return {"failure": "degenerate form", "form": G, "psi": psi}
    # psi(T b) = eps(b): sum_i T_i G[i][b] = eps(b); psi(b t) = eps(b): sum_j G[b][j] t_j = eps(b)
    T = solve([[G[i][b] for i in range(n)] for b in range(n)], B.counit, n)[0]
    t = solve([G[b] for b in range(n)], B.counit, n)[0]
    dT, dt = B.coprod(T), B.coprod(t)
    # S(a) = psi(T1 a) T2
    S = [[Fraction(0)] * n for _ in range(n)]
    for a in range(n):
        for (j, k), c in dT.items():
            S[a][k] += c * G[j][a]
    # e = psi(T2 t1) t2 (x) T1
    e = [Fraction(0)] * (n * n)
    for (j, k), c in dT.items():
        for (p, q), d in dt.items():
            e[q * n + j] += c * d * G[k][p]
    return {"psi": psi, "form": G, "T": T, "t": t, "S": S, "e": e}


def galois_rank(B):
    n = B.n
    cols = []
    for a in range(n):
        for b in range(n):
            v = [Fraction(0)] * (n * n)
            for (j, k), c in B.com(b).items():
                for m, d in B.mul(a, j).items():
                    v[m * n + k] += c * d
            cols.append(v)
    return rank(cols, n * n)


def strs(v):
    return [str(x) for x in v]


def values():
    out = {}
    for name, B in (("c2", group([[0, 1], [1, 0]])), ("sweedler_h4", sweedler()), ("idempotent_monoid", monoid())):
        entry = {"integrals": {k: [strs(v) for v in basis] for k, basis in integrals(B).items()},
                 "galois_rank": galois_rank(B)}
        for side in ("left", "right"):
            s = antipode(B, side)
            entry["antipode_" + side] = None if s is None else {"s": [strs(r) for r in s[0]], "free": s[1]}
        f = fh(B)
        entry["fh"] = {k: (v if isinstance(v, str) else
                           [strs(r) for r in v] if k in ("form", "S") else strs(v)) for k, v in f.items()}
        out[name] = entry
    return out


def run(binary, *args):
    p = subprocess.run([binary, "--format", "json", *args], capture_output=True, text=True)
    return p.returncode, (json.loads(p.stdout) if p.stdout.strip() else None)


def check(binary, vals):
    failures = []

    def expect(what, got, want):
        if got != want:
            failures.append(f"{what}: got {got}, want {want}")

    with tempfile.TemporaryDirectory() as tmp:
        for name, want in vals.items():
            path = os.path.join(tmp, name + ".json")
            subprocess.run([binary, "gen", name, "-o", path], check=True, capture_output=True)
            _, ints = run(binary, "integrals", path)
            for k, basis in want["integrals"].items():
                expect(f"{name} {k}", ints[k]["basis"], basis)
            code, g = run(binary, "galois", path)
            expect(f"{name} galois rank", g["rank"], want["galois_rank"])
            for side in ("left", "right"):
                code, a = run(binary, "antipode", path, "--side", side)
                w = want["antipode_" + side]
                if w is None:
                    expect(f"{name} {side} antipode exit", code, 1)
                else:
                    expect(f"{name} {side} antipode exit", code, 0)
                    # hopfkit prints S as a matrix whose column a is S(b_a)
                    expect(f"{name} {side} antipode", [list(r) for r in zip(*a["antipode"])], w["s"])
                    expect(f"{name} {side} solution space", a["solution_space_dim"], w["free"])
            code, f = run(binary, "fh", path)
            wf = want["fh"]
            if "failure" in wf:
                expect(f"{name} fh exit", code, 1)
                expect(f"{name} fh failure", f["failure"], wf["failure"])
                if "form" in wf:
                    expect(f"{name} form", f["form"], wf["form"])
            else:
                expect(f"{name} fh exit", code, 0)
                for k in ("psi", "T", "t", "e"):
                    expect(f"{name} {k}", f[k], wf[k])
                expect(f"{name} S", [list(r) for r in zip(*f["antipode"])], wf["S"])
    return failures


def main():
    vals = values()
    if len(sys.argv) == 3 and sys.argv[1] == "--check":
        failures = check(sys.argv[2], vals)
        for f in failures:
            print("MISMATCH", f)
        print("oracle agreement:", "pass" if not failures else "FAIL")
        return 1 if failures else 0
    print(json.dumps(vals, indent=1))
    return 0


if __name__ == "__main__":
    sys.exit(main())
