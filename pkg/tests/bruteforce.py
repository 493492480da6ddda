"""Naive reference implementations used as oracles.

Everything here recomputes results with plain Python loops and sets, fully
independently of the package's vectorized closure machinery, so tests can
compare the two routes.
"""

from __future__ import annotations

from itertools import permutations


def naive_closure(ring, gens, sidedness="two-sided") -> frozenset[int]:
    """Worklist closure under addition, negation, and sided multiplication."""
    members = {0}
    queue = [0]
    for g in gens:
        g = int(g)
        if g not in members:
            members.add(g)
            queue.append(g)
    while queue:
        x = queue.pop()
        new = {int(ring.neg[x])}
        new.update(int(ring.add[x, y]) for y in list(members))
        if sidedness in ("two-sided", "right"):
            new.update(int(ring.mul[x, r]) for r in range(ring.order))
        if sidedness in ("two-sided", "left"):
            new.update(int(ring.mul[r, x]) for r in range(ring.order))
        for v in new:
            if v not in members:
                members.add(v)
                queue.append(v)
    return frozenset(members)


def is_closed_subset(ring, members, sidedness="two-sided") -> bool:
    s = set(members)
    if 0 not in s:
        return False
    for x in s:
        for y in s:
            if int(ring.add[x, y]) not in s:
                return False
    for x in s:
        if sidedness in ("two-sided", "right"):
            for r in range(ring.order):
                if int(ring.mul[x, r]) not in s:
                    return False
        if sidedness in ("two-sided", "left"):
            for r in range(ring.order):
                if int(ring.mul[r, x]) not in s:
                    return False
    return True


def naive_all_ideals(ring, sidedness="two-sided") -> set[frozenset[int]]:
    """Every closed subset, by scanning all subsets containing 0.

    Only usable for rings of order at most ~16.
    """
    n = ring.order
    out = set()
    for mask in range(0, 1 << n, 2):
        mask |= 1
        members = [i for i in range(n) if mask >> i & 1]
        if is_closed_subset(ring, members, sidedness):
            out.add(frozenset(members))
    return out


def naive_is_prime(ring, members) -> bool:
    inside = set(members)
    outside = [a for a in range(ring.order) if a not in inside]
    for a in outside:
        for b in outside:
            if all(int(ring.mul[int(ring.mul[a, r]), b]) in inside
                   for r in range(ring.order)):
                return False
    return True


def naive_product(ring, left, right) -> frozenset[int]:
    """Additive closure of pairwise products, by worklist."""
    seeds = {int(ring.mul[x, y]) for x in left for y in right}
    members = {0} | seeds
    changed = True
    while changed:
        changed = False
        for x in list(members):
            for y in list(members):
                v = int(ring.add[x, y])
                if v not in members:
                    members.add(v)
                    changed = True
    return frozenset(members)


def find_ring_isomorphism(r1, r2):
    """Backtracking search for a ring isomorphism; None when there is none.

    Intended for orders up to about 12.
    """
    if r1.order != r2.order:
        return None
    n = r1.order
    image = [-1] * n
    used = [False] * n

    def assign(x, y) -> bool:
        image[x] = y
        used[y] = True
        return True

    def unassign(x):
        used[image[x]] = False
        image[x] = -1

    def consistent(x) -> bool:
        for a in range(n):
            if image[a] < 0:
                continue
            for u, v in ((a, x), (x, a)):
                if image[u] < 0 or image[v] < 0:
                    continue
                s1 = int(r1.add[u, v])
                if image[s1] >= 0 and image[s1] != int(r2.add[image[u], image[v]]):
                    return False
                p1 = int(r1.mul[u, v])
                if image[p1] >= 0 and image[p1] != int(r2.mul[image[u], image[v]]):
                    return False
        return True

    assign(0, 0)
    if r1.one != 0:
        if r2.one == 0:
            return None
        assign(r1.one, r2.one)
    order = [x for x in range(n) if image[x] < 0]

    def backtrack(k) -> bool:
        if k == len(order):
            # full verification of both tables
            for a in range(n):
                for b in range(n):
                    if image[int(r1.add[a, b])] != int(r2.add[image[a], image[b]]):
                        return False
                    if image[int(r1.mul[a, b])] != int(r2.mul[image[a], image[b]]):
                        return False
            return True
        x = order[k]
        for y in range(n):
            if used[y]:
                continue
            assign(x, y)
            if consistent(x) and backtrack(k + 1):
                return True
            unassign(x)
        return False

    if backtrack(0):
        return list(image)
    return None


def naive_submodules(module) -> set[frozenset[int]]:
    """All action-closed subgroups by subset scan; order at most ~16."""
    n = module.order
    out = set()
    for mask in range(0, 1 << n, 2):
        mask |= 1
        members = {i for i in range(n) if mask >> i & 1}
        ok = all(int(module.add[x, y]) in members
                 for x in members for y in members)
        if ok:
            ok = all(int(module.action[x, r]) in members
                     for x in members for r in range(module.ring.order))
        if ok:
            out.add(frozenset(members))
    return out
