#!/usr/bin/env python3
"""Regenerate the generator-file fixtures in crates/arclab/data/.

Everything here is derived from first principles and is fully re-verified
by the Rust presets at run time, so nothing in this script needs to be
trusted.  The expensive part (the degree-100 fixture) takes a few minutes
of pure Python; run with:

    python3 tools/make_fixtures.py [outdir]

Derivation of the degree-100 fixture, step by step:

 1. Build GF(9) and the special unitary group SU(3,3) as the group
    generated by the unitriangular unitary matrices (antidiagonal
    Hermitian Gram matrix), acting on the 63 nonisotropic points of the
    projective plane over GF(9).  The resulting permutation group has
    order 6048.
 2. Find a subgroup H of order 168 (generated by an order-7 element and
    an involution) and form the action on its 36 cosets.  Together with
    a fixed point this gives 100 points: {infinity} + 36 cosets + 63
    projective points.
 3. Decompose the ordered pairs into orbitals and assemble the unique
    union of orbitals that forms a strongly regular graph with
    parameters (100, 36, 14, 12).
 4. Find, by bitset backtracking, a graph automorphism moving the fixed
    point; adjoining it to the 6048-point group generates the full
    automorphism group of order 604800, a sporadic simple group.
 5. Search (seeded, deterministic) for a 2-element generating set, an
    order-3 element with centralizer order 1080, a class-2520 involution
    x inverting it, and an order-3 partner with centralizer order 36
    also inverted by x, such that the two S_3 subgroups generate the
    whole group and intersect in <x>.

The degree-89 fixture is a pair of subgroups of A_89 given by explicit
cycles: a 71-cycle and an 18-cycle pattern generating C_71:C_70 x C_9,
and a 19-cycle with the same second generator giving C_19:C_18 x C_35.
"""

import itertools
import random
import sys
from sympy.combinatorics import Permutation, PermutationGroup

N = 100
FULL_ORDER = 604800


# --- step 1: GF(9) and the unitary group on 63 nonisotropic points ------

def make_gf9():
    """GF(9) = GF(3)[i] with i^2 = -1; element a + 3b encodes a + b*i."""
    add = [[0] * 9 for _ in range(9)]
    mul = [[0] * 9 for _ in range(9)]
    for x in range(9):
        a, b = x % 3, x // 3
        for y in range(9):
            c, d = y % 3, y // 3
            add[x][y] = (a + c) % 3 + 3 * ((b + d) % 3)
            mul[x][y] = (a * c - b * d) % 3 + 3 * ((a * d + b * c) % 3)
    conj = [x % 3 + 3 * ((-(x // 3)) % 3) for x in range(9)]
    return add, mul, conj


ADD, MUL, CONJ = make_gf9()
GRAM = [[0, 0, 1], [0, 1, 0], [1, 0, 0]]


def matmul(a, b):
    return [
        [
            ADD[ADD[MUL[a[i][0]][b[0][j]]][MUL[a[i][1]][b[1][j]]]][MUL[a[i][2]][b[2][j]]]
            for j in range(3)
        ]
        for i in range(3)
    ]


def conj_transpose(a):
    return [[CONJ[a[j][i]] for j in range(3)] for i in range(3)]


def is_unitary(m):
    return matmul(matmul(conj_transpose(m), GRAM), m) == GRAM


def normalize(v):
    for x in v:
        if x != 0:
            inv = next(y for y in range(1, 9) if MUL[x][y] == 1)
            return tuple(MUL[inv][t] for t in v)
    return None


def hermitian(x, y):
    s = 0
    for i in range(3):
        for j in range(3):
            if GRAM[i][j]:
                s = ADD[s][MUL[CONJ[x[i]]][y[j]]]
    return s


def unitary_group_on_63():
    unitriangular = []
    for a, b, c in itertools.product(range(9), repeat=3):
        if (a, b, c) == (0, 0, 0):
            continue
        for m in ([[1, a, b], [0, 1, c], [0, 0, 1]], [[1, 0, 0], [a, 1, 0], [b, c, 1]]):
            if is_unitary(m):
                unitriangular.append(m)

    points = sorted(
        {normalize(v) for v in itertools.product(range(9), repeat=3) if normalize(v)}
    )
    assert len(points) == 91
    noniso = [p for p in points if hermitian(p, p) != 0]
    assert len(noniso) == 63
    index = {p: i for i, p in enumerate(noniso)}

    def act(m, p):
        v = tuple(
            ADD[ADD[MUL[m[i][0]][p[0]]][MUL[m[i][1]][p[1]]]][MUL[m[i][2]][p[2]]]
            for i in range(3)
        )
        return normalize(v)

    gens = sorted({tuple(index[act(m, p)] for p in noniso) for m in unitriangular})
    elements = closure(gens, degree=63)
    assert len(elements) == 6048
    return gens, sorted(elements)


# --- generic permutation helpers ----------------------------------------

def compose(p, q):
    """Apply p first, then q."""
    return tuple(q[x] for x in p)


def inverse(p):
    r = [0] * len(p)
    for i, x in enumerate(p):
        r[x] = i
    return tuple(r)


def perm_order(p):
    ident = tuple(range(len(p)))
    n, q = 1, p
    while q != ident:
        q = compose(q, p)
        n += 1
    return n


def conj_perm(a, b):
    return compose(compose(inverse(b), a), b)


def closure(gens, degree, cap=None):
    ident = tuple(range(degree))
    seen = {ident}
    frontier = [ident]
    while frontier:
        new = []
        for e in frontier:
            for g in gens:
                f = compose(e, g)
                if f not in seen:
                    if cap is not None and len(seen) >= cap:
                        return None
                    seen.add(f)
                    new.append(f)
        frontier = new
    return seen


def group_order(perms):
    return PermutationGroup([Permutation(list(p)) for p in perms]).order()


# --- steps 2-3: the 100-point strongly regular graph --------------------

def srg_from_unitary(gens, elements):
    eidx = {e: i for i, e in enumerate(elements)}

    # A subgroup of order 168 generated by an order-7 element and an
    # involution (the first one that works, so the run is deterministic).
    order7 = next(e for e in elements if perm_order(e) == 7)
    h = None
    for b in elements:
        if perm_order(b) != 2:
            continue
        c = closure([order7, b], degree=63, cap=200)
        if c and len(c) == 168:
            h = c
            break
    assert h is not None

    def coset_key(g):
        return min(eidx[compose(x, g)] for x in h)

    keys = sorted({coset_key(g) for g in elements})
    assert len(keys) == 36
    kidx = {k: i for i, k in enumerate(keys)}

    # 100 points: 0 = the extra fixed point, 1..36 cosets, 37..99 the
    # nonisotropic projective points.
    def lift(g):
        p = [0] * N
        for k in keys:
            p[1 + kidx[k]] = 1 + kidx[coset_key(compose(elements[k], g))]
        for i in range(63):
            p[37 + i] = 37 + g[i]
        return tuple(p)

    biggens = [lift(g) for g in gens]

    # Orbital decomposition of the ordered pairs.
    pair_orbit = {}
    orbitals = []
    for u in range(N):
        for v in range(N):
            if u == v or (u, v) in pair_orbit:
                continue
            oid = len(orbitals)
            orb = []
            stack = [(u, v)]
            pair_orbit[(u, v)] = oid
            while stack:
                x, y = stack.pop()
                orb.append((x, y))
                for g in biggens:
                    t = (g[x], g[y])
                    if t not in pair_orbit:
                        pair_orbit[t] = oid
                        stack.append(t)
            orbitals.append(orb)

    # Assemble the unique srg(100,36,14,12) from unions of orbitals.
    inner36 = [o for o in orbitals if 1 <= o[0][0] <= 36 and 1 <= o[0][1] <= 36]
    cross = [o for o in orbitals if 1 <= o[0][0] <= 36 and o[0][1] >= 37]
    inner63 = [o for o in orbitals if o[0][0] >= 37 and o[0][1] >= 37]
    for c36 in subsets_with_size(inner36, 14 * 36):
        for cc in subsets_with_size(cross, 21 * 36):
            for c63 in subsets_with_size(inner63, 24 * 63):
                adj = [set() for _ in range(N)]
                for v in range(1, 37):
                    adj[0].add(v)
                    adj[v].add(0)
                for grp in (c36, cc, c63):
                    for o in grp:
                        for x, y in o:
                            adj[x].add(y)
                            adj[y].add(x)
                if all(len(a) == 36 for a in adj) and srg_check(adj):
                    return [frozenset(a) for a in adj], biggens
    raise AssertionError("no srg(100,36,14,12) assembly found")


def subsets_with_size(orbitals, total):
    for r in range(1, len(orbitals) + 1):
        for c in itertools.combinations(orbitals, r):
            if sum(len(o) for o in c) == total:
                yield c


def srg_check(adj):
    for u in range(N):
        if len(adj[u]) != 36:
            return False
        for v in range(u + 1, N):
            c = len(adj[u] & adj[v])
            if c != (14 if v in adj[u] else 12):
                return False
    return True


# --- step 4: a graph automorphism moving the fixed point ----------------

def automorphism_moving_zero(adj, target):
    abits = [sum(1 << v for v in a) for a in adj]
    order = [0]
    seen = {0}
    qi = 0
    while qi < len(order):
        for w in sorted(adj[order[qi]]):
            if w not in seen:
                seen.add(w)
                order.append(w)
        qi += 1

    img = {0: target}
    used = 1 << target

    def backtrack(k):
        nonlocal used
        if k == len(order):
            return True
        v = order[k]
        cand = ~used & ((1 << N) - 1)
        for u in img:
            if v in adj[u]:
                cand &= abits[img[u]]
            else:
                cand &= ~abits[img[u]] & ~(1 << img[u])
        c = cand
        while c:
            w = (c & -c).bit_length() - 1
            c &= c - 1
            img[v] = w
            used |= 1 << w
            if backtrack(k + 1):
                return True
            del img[v]
            used &= ~(1 << w)
        return False

    assert backtrack(1), "no automorphism moving the fixed point"
    g = tuple(img[v] for v in range(N))
    for u in range(N):
        assert frozenset(g[v] for v in adj[u]) == adj[g[u]]
    return g


# --- step 5: seeded searches inside the order-604800 group --------------

def find_witnesses(gens):
    rng = random.Random(0)
    ident = tuple(range(N))

    def rand_elt():
        e = ident
        for _ in range(rng.randrange(8, 20)):
            e = compose(e, gens[rng.randrange(len(gens))])
        return e

    def class_size(e, cap):
        seen = {e}
        frontier = [e]
        while frontier:
            new = []
            for t in frontier:
                for g in gens:
                    c = conj_perm(t, g)
                    if c not in seen:
                        if len(seen) >= cap:
                            return cap
                        seen.add(c)
                        new.append(c)
            frontier = new
        return len(seen)

    pair = None
    while pair is None:
        a, b = rand_elt(), rand_elt()
        if group_order([a, b]) == FULL_ORDER:
            pair = (a, b)

    # Order-3 element with class size 560 (centralizer order 1080).
    l = None
    while l is None:
        e = rand_elt()
        o = perm_order(e)
        if o % 3 == 0:
            c = e
            for _ in range(o // 3 - 1):
                c = compose(c, e)
            if class_size(c, 600) == 560:
                l = c

    linv = inverse(l)
    c0 = None
    while c0 is None:
        e = rand_elt()
        if conj_perm(l, e) == linv:
            c0 = e
    cent = []
    while True:
        e = rand_elt()
        if conj_perm(l, e) == l:
            cent.append(e)
            if len(cent) >= 4 and group_order(cent) == 1080:
                break
    centralizer = PermutationGroup([Permutation(list(p)) for p in cent])

    # A class-2520 involution inverting l, taken from the coset of
    # inverting elements.
    x = None
    for z in centralizer.elements:
        zp = tuple(z(i) for i in range(N))
        cand = compose(zp, c0)
        if perm_order(cand) == 2 and conj_perm(l, cand) == linv:
            if class_size(cand, 3000) == 2520:
                x = cand
                break
    assert x is not None

    l6 = closure([l, x], degree=N)
    assert len(l6) == 6

    # Order-3 partner with the large class (centralizer order 36), also
    # inverted by x, generating the whole group together with <l, x> and
    # meeting <l, x> exactly in <x>.
    r = None
    while r is None:
        e = rand_elt()
        o = perm_order(e)
        if o % 2:
            continue
        y = e
        for _ in range(o // 2 - 1):
            y = compose(y, e)
        cand = compose(x, y)
        if perm_order(cand) != 3:
            continue
        if class_size(cand, 600) != 600:
            continue
        if conj_perm(cand, x) != inverse(cand):
            continue
        r6 = closure([cand, x], degree=N)
        if len(r6) != 6 or len(l6 & r6) != 2:
            continue
        if group_order([l, x, cand]) != FULL_ORDER:
            continue
        r = cand
    return pair, l, x, r


# --- output -------------------------------------------------------------

def cycle_string(p):
    seen = [False] * len(p)
    out = ""
    for i in range(len(p)):
        if not seen[i] and p[i] != i:
            c = [i]
            seen[i] = True
            j = p[i]
            while j != i:
                c.append(j)
                seen[j] = True
                j = p[j]
            out += "(" + ",".join(str(k + 1) for k in c) + ")"
    return out or "()"


def write_gens(path, comment, degree, perms):
    with open(path, "w") as f:
        f.write(f"# {comment}\ndegree {degree}\n")
        for p in perms:
            f.write(cycle_string(p) + "\n")
    print("wrote", path)


def write_a89(outdir):
    c71 = [1, 2, 8, 28, 14, 30, 34, 3, 20, 54, 36, 33, 40, 41, 9, 56, 26, 51,
           60, 18, 42, 29, 39, 17, 46, 58, 47, 10, 15, 70, 62, 13, 32, 59, 57,
           31, 66, 22, 24, 67, 48, 27, 35, 50, 45, 12, 23, 11, 52, 4, 64, 7,
           53, 25, 16, 61, 21, 44, 6, 5, 68, 71, 19, 55, 38, 69, 65, 49, 63,
           43, 37]
    c19 = [1, 72, 73, 85, 74, 88, 86, 78, 75, 80, 89, 84, 87, 77, 79, 83, 76,
           82, 81]
    assert sorted(c71) == list(range(1, 72)) and len(set(c19)) == 19
    g2 = ("(" + ",".join(str(i) for i in range(2, 72)) + ")"
          "(" + ",".join(str(i) for i in range(72, 90)) + ")")
    with open(f"{outdir}/a89_l.gens", "w") as f:
        f.write("# subgroup of A_89 isomorphic to C_71:C_70 x C_9\ndegree 89\n")
        f.write("(" + ",".join(map(str, c71)) + ")\n" + g2 + "\n")
    with open(f"{outdir}/a89_r.gens", "w") as f:
        f.write("# subgroup of A_89 isomorphic to C_19:C_18 x C_35\ndegree 89\n")
        f.write("(" + ",".join(map(str, c19)) + ")\n" + g2 + "\n")
    print("wrote", f"{outdir}/a89_l.gens", "and", f"{outdir}/a89_r.gens")


def main():
    outdir = sys.argv[1] if len(sys.argv) > 1 else "crates/arclab/data"
    write_a89(outdir)

    gens, elements = unitary_group_on_63()
    print("unitary group on 63 points: order", len(elements))
    adj, biggens = srg_from_unitary(gens, elements)
    print("srg(100,36,14,12) assembled")
    extra = automorphism_moving_zero(adj, 37)
    allgens = [tuple(p) for p in biggens] + [extra]
    assert group_order(allgens) == FULL_ORDER
    print("full automorphism group: order", FULL_ORDER)
    pair, l, x, r = find_witnesses(allgens)

    write_gens(
        f"{outdir}/j2_t.gens",
        "second Janko group in its 100-point action "
        "(automorphisms of the unique srg(100,36,14,12))",
        N, list(pair),
    )
    write_gens(
        f"{outdir}/j2_l.gens",
        "S_3 witness: order-3 element with centralizer order 1080, "
        "inverted by the shared involution",
        N, [l, x],
    )
    write_gens(
        f"{outdir}/j2_r.gens",
        "S_3 witness: order-3 element with centralizer order 36, "
        "inverted by the shared involution",
        N, [r, x],
    )


if __name__ == "__main__":
    main()
