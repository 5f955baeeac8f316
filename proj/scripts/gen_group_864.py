#!/usr/bin/env python3
"""Generators for (C2^2 x C2^2) x| (3^{1+2} x| <s>), a triple cover of A4 x A4
extended by the automorphism s swapping the two factors.

The group acts faithfully on the 16 + 27 right cosets of K = 3^{1+2}<s> and
S = V<s>; the cores are Z(3^{1+2}) and V, which meet trivially.
Prints one corpus line.
"""

import argparse

M = ((0, 1), (1, 1))  # order 3 in GL(2,2)


def mat_pow_apply(k, v):
    for _ in range(k % 3):
        v = ((M[0][0] * v[0] + M[0][1] * v[1]) % 2, (M[1][0] * v[0] + M[1][1] * v[1]) % 2)
    return v


def heis_mul(a, b):
    return ((a[0] + b[0]) % 3, (a[1] + b[1]) % 3, (a[2] + b[2] + a[0] * b[1]) % 3)


def swap_h(h):
    x, y, c = h
    return (y, x, (x * y - c) % 3)


def k_mul(a, b):
    (h, s), (h2, s2) = a, b
    return (heis_mul(h, swap_h(h2) if s else h2), (s + s2) % 2)


def k_act(k, v):
    (x, y, _), s = k
    v1, v2 = v[:2], v[2:]
    if s:
        v1, v2 = v2, v1
    return mat_pow_apply(x, v1) + mat_pow_apply(y, v2)


def mul(a, b):
    (v, k), (w, k2) = a, b
    kw = k_act(k, w)
    return (tuple((p + q) % 2 for p, q in zip(v, kw)), k_mul(k, k2))


ONE = ((0, 0, 0, 0), ((0, 0, 0), 0))


def closure(gens):
    seen = {ONE}
    frontier = [ONE]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = mul(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def right_cosets(group, sub):
    index, reps = {}, []
    for g in sorted(group):
        if g in index:
            continue
        for s in sub:
            index[mul(s, g)] = len(reps)
        reps.append(g)
    return index, reps


def cycles(img):
    seen, parts = set(), []
    for s in range(len(img)):
        if s in seen or img[s] == s:
            continue
        cyc, y = [], s
        while y not in seen:
            seen.add(y)
            cyc.append(y + 1)
            y = img[y]
        parts.append("(" + ",".join(map(str, cyc)) + ")")
    return "".join(parts) or "()"


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--name", default="G864")
    args = ap.parse_args()

    t = ((1, 0, 0, 0), ((0, 0, 0), 0))
    a = ((0, 0, 0, 0), ((1, 0, 0), 0))
    s = ((0, 0, 0, 0), ((0, 0, 0), 1))
    gens = [t, a, s]
    g = closure(gens)
    assert len(g) == 864, len(g)
    assert all(mul(mul(x, y), z) == mul(x, mul(y, z)) for x in gens for y in g for z in gens)
    k = closure([a, s])
    v_s = closure([t, s, mul(mul(a, t), mul(a, a))])
    assert len(k) == 54 and len(v_s) == 32, (len(k), len(v_s))

    perms = [[] for _ in gens]
    offset = 0
    for sub in (k, v_s):
        index, reps = right_cosets(g, sub)
        for i, x in enumerate(gens):
            perms[i].extend(offset + index[mul(r, x)] for r in reps)
        offset += len(reps)
    print(f"{args.name} | {offset} | {';'.join(cycles(p) for p in perms)} | 2,3 | order=864 | tags=solvable")


if __name__ == "__main__":
    main()
