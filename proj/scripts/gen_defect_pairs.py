#!/usr/bin/env python3
"""Enumerate pairs D < E of 2-groups with |E:D| = 2 up to isomorphism of pairs.

Every E of order 2n arises as D u Dt for some D of order n, an automorphism
alpha of D (conjugation by t) and h0 = t^2 with alpha(h0) = h0 and
alpha^2 = conjugation by h0. Running this from |D| = 1 upwards also
enumerates all groups of order 2^k, and the counts are checked against the
known values 1, 1, 2, 5, 14, 51.

Output lines: name | |E| | E generators | D generators, with E in its
regular representation (1-based cycles).
"""

import argparse
import itertools
import sys

KNOWN_COUNTS = {1: 1, 2: 1, 4: 2, 8: 5, 16: 14, 32: 51}


class Group:
    def __init__(self, table):
        self.table = table
        self.n = len(table)
        self.inv = [next(j for j in range(self.n) if table[i][j] == 0) for i in range(self.n)]
        self.orders = [self._order(i) for i in range(self.n)]

    def _order(self, x):
        k, y = 1, x
        while y != 0:
            y = self.table[y][x]
            k += 1
        return k

    def closure(self, gens):
        seen = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.table[x][g]
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return seen

    def generators(self):
        # greedy, preferring high order so that generating sets stay short
        gens, span = [], {0}
        for x in sorted(range(self.n), key=lambda x: (-self.orders[x], x)):
            if x not in span:
                gens.append(x)
                span = self.closure(gens)
        # drop redundant ones
        i = 0
        while i < len(gens):
            rest = gens[:i] + gens[i + 1:]
            if len(self.closure(rest)) == self.n:
                gens = rest
            else:
                i += 1
        return gens


def extend_map(g, h, gens, images):
    """Extends gens -> images to a homomorphism by BFS; returns the map or None."""
    m = {0: 0}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            y = m[x]
            for s, t in zip(gens, images):
                a, b = g.table[x][s], h.table[y][t]
                if a in m:
                    if m[a] != b:
                        return None
                else:
                    m[a] = b
                    nxt.append(a)
        frontier = nxt
    return m


def automorphisms(g):
    gens = g.generators()
    cands = [[y for y in range(g.n) if g.orders[y] == g.orders[x]] for x in gens]
    out = []
    for imgs in itertools.product(*cands):
        m = extend_map(g, g, gens, imgs)
        if m is not None and len(m) == g.n and len(set(m.values())) == g.n:
            out.append(tuple(m[i] for i in range(g.n)))
    return out


def extensions(d):
    """All (E table, D element set) with E = D u Dt."""
    n = d.n
    auts = automorphisms(d)
    for alpha in auts:
        alpha2 = tuple(alpha[alpha[x]] for x in range(n))
        for h0 in range(n):
            if alpha[h0] != h0:
                continue
            # t x t^-1 = alpha(x), so t^2 x t^-2 = h0 x h0^-1
            inner = tuple(d.table[d.table[h0][x]][d.inv[h0]] for x in range(n))
            if alpha2 != inner:
                continue
            table = [[0] * (2 * n) for _ in range(2 * n)]
            powers = [tuple(range(n)), alpha]
            for i in range(2):
                for j in range(2):
                    for a in range(n):
                        for b in range(n):
                            c = d.table[a][powers[i][b]]
                            if i and j:
                                c = d.table[c][h0]
                            table[a + i * n][b + j * n] = c + ((i ^ j) * n)
            yield table


def signature(g, dset):
    """Isomorphism invariant of the pair (G, D), plus per-element labels."""
    sq = [g.table[x][x] for x in range(g.n)]
    roots = [0] * g.n
    roots_out = [0] * g.n
    for x in range(g.n):
        roots[sq[x]] += 1
        if x not in dset:
            roots_out[sq[x]] += 1
    cent = [sum(1 for y in range(g.n) if g.table[x][y] == g.table[y][x]) for x in range(g.n)]
    label = [(g.orders[x], x in dset, cent[x], roots[x], roots_out[x], g.orders[sq[x]], sq[x] in dset)
             for x in range(g.n)]
    return tuple(sorted(label)), label


def pair_isomorphic(g, dg, lg, h, dh, lh):
    gens = g.generators()
    by_label = {}
    for y in range(h.n):
        by_label.setdefault(lh[y], []).append(y)
    cands = [by_label.get(lg[x], []) for x in gens]

    def rec(k, imgs):
        if k == len(gens):
            m = extend_map(g, h, gens, imgs)
            return (m is not None and len(m) == g.n and len(set(m.values())) == h.n
                    and all((m[x] in dh) == (x in dg) for x in range(g.n)))
        for y in cands[k]:
            if extend_map(g, h, gens[:k + 1], imgs + [y]) is None:
                continue
            if rec(k + 1, imgs + [y]):
                return True
        return False

    return rec(0, [])


def group_isomorphic(g, h):
    return pair_isomorphic(g, set(range(g.n)), signature(g, set(range(g.n)))[1],
                           h, set(range(h.n)), signature(h, set(range(h.n)))[1])


def regular_cycles(g, x):
    """Right regular action y -> y x as 1-based cycle notation."""
    img = [g.table[y][x] for y in range(g.n)]
    seen, parts = set(), []
    for s in range(g.n):
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
    ap.add_argument("--max-order", type=int, default=32)
    ap.add_argument("--out", default="-")
    args = ap.parse_args()

    groups = {1: [Group([[0]])]}
    pairs = []  # (E, dset)
    order = 1
    while 2 * order <= args.max_order:
        new_groups = []
        new_pairs = []  # (E, dset, sig, labels)
        for d in groups[order]:
            for table in extensions(d):
                e = Group(table)
                dset = set(range(d.n))
                sig, lab = signature(e, dset)
                if any(s == sig and pair_isomorphic(e, dset, lab, f, fd, fl) for f, fd, s, fl in new_pairs):
                    continue
                new_pairs.append((e, dset, sig, lab))
                gsig, _ = signature(e, set(range(e.n)))
                if not any(group_isomorphic(e, f) for f in new_groups
                           if signature(f, set(range(f.n)))[0] == gsig):
                    new_groups.append(e)
        order *= 2
        groups[order] = new_groups
        if len(new_groups) != KNOWN_COUNTS[order]:
            sys.exit(f"found {len(new_groups)} groups of order {order}, expected {KNOWN_COUNTS[order]}")
        print(f"order {order}: {len(new_groups)} groups, {len(new_pairs)} pairs", file=sys.stderr)
        pairs.extend((e, dset) for e, dset, _, _ in new_pairs)

    out = sys.stdout if args.out == "-" else open(args.out, "w")
    out.write("# D < E with |E:D| = 2, up to isomorphism of pairs; E in its regular representation\n")
    count = {}
    for e, dset in pairs:
        if e.n < 4:
            continue
        count[e.n] = count.get(e.n, 0) + 1
        dgens, span = [], {0}
        for x in sorted(dset, key=lambda x: (-e.orders[x], x)):
            if x not in span:
                dgens.append(x)
                span = e.closure(dgens)
        name = f"E{e.n}_{count[e.n]}"
        egens = ";".join(regular_cycles(e, x) for x in e.generators())
        dg = ";".join(regular_cycles(e, x) for x in dgens) or "()"
        out.write(f"{name} | {e.n} | {egens} | {dg}\n")


if __name__ == "__main__":
    main()
