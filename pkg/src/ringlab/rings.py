"""Finite unital rings as dense Cayley tables, validated exhaustively on construction.

Elements are the integers 0..order-1 and element 0 is always the additive
identity.  Ring and Bimodule values are immutable once built and are hashed
by identity, so they can be shared freely across threads.
"""

from __future__ import annotations

from typing import Iterable

import numpy as np

from .errors import CapExceeded, RingAxiomError

ORDER_CAP = 512


def _as_table(table, name: str) -> np.ndarray:
    arr = np.asarray(table, dtype=np.int32)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise RingAxiomError("table-shape", detail=f"{name} table must be square")
    n = arr.shape[0]
    if n == 0:
        raise RingAxiomError("table-shape", detail=f"{name} table is empty")
    if arr.min() < 0 or arr.max() >= n:
        bad = np.argwhere((arr < 0) | (arr >= n))[0]
        raise RingAxiomError("table-range", tuple(bad), f"{name} entry out of range")
    return arr


def _first_mismatch(lhs: np.ndarray, rhs: np.ndarray) -> tuple[int, int]:
    bad = np.argwhere(lhs != rhs)
    b, c = bad[0]
    return int(b), int(c)


class Ring:
    """A finite unital ring given by addition and multiplication tables."""

    def __init__(self, add_table, mul_table, one: int, label: str):
        add = _as_table(add_table, "addition")
        mul = _as_table(mul_table, "multiplication")
        n = add.shape[0]
        if mul.shape[0] != n:
            raise RingAxiomError("table-shape", detail="table sizes disagree")
        one = int(one)
        if not 0 <= one < n:
            raise RingAxiomError("table-range", (one,), "unit index out of range")
        self.order = n
        self.add = add
        self.mul = mul
        self.one = one
        self.zero = 0
        self.label = label
        self.neg = _validate_ring(add, mul, one)
        self.add.setflags(write=False)
        self.mul.setflags(write=False)
        self.neg.setflags(write=False)

    def elements(self) -> range:
        return range(self.order)

    def is_commutative(self) -> bool:
        return bool(np.array_equal(self.mul, self.mul.T))

    def __repr__(self) -> str:
        return f"Ring({self.label}, order={self.order})"


def _validate_ring(add: np.ndarray, mul: np.ndarray, one: int) -> np.ndarray:
    """Check every ring axiom exhaustively; return the negation table."""
    n = add.shape[0]
    idx = np.arange(n)

    if n > 1 and one == 0:
        raise RingAxiomError("zero-one-distinct", (0,))

    if not np.array_equal(add, add.T):
        b, c = _first_mismatch(add, add.T)
        raise RingAxiomError("add-commutativity", (b, c))
    if not np.array_equal(add[0], idx):
        b = int(np.argwhere(add[0] != idx)[0][0])
        raise RingAxiomError("zero-identity", (b,))

    neg = np.full(n, -1, dtype=np.int32)
    rows, cols = np.nonzero(add == 0)
    neg[rows] = cols
    if (neg < 0).any():
        a = int(np.argwhere(neg < 0)[0][0])
        raise RingAxiomError("additive-inverse", (a,))

    # associativity and distributivity, swept one row at a time to bound memory
    for a in range(n):
        lhs = add[add[a], :]      # (a+b)+c
        rhs = add[a][add]         # a+(b+c)
        if not np.array_equal(lhs, rhs):
            b, c = _first_mismatch(lhs, rhs)
            raise RingAxiomError("add-associativity", (a, b, c))

    if not (np.array_equal(mul[one], idx) and np.array_equal(mul[:, one], idx)):
        raise RingAxiomError("multiplicative-identity", (one,),
                             "no multiplicative identity at the declared unit")

    for a in range(n):
        lhs = mul[mul[a], :]      # (a*b)*c
        rhs = mul[a][mul]         # a*(b*c)
        if not np.array_equal(lhs, rhs):
            b, c = _first_mismatch(lhs, rhs)
            raise RingAxiomError("mul-associativity", (a, b, c))

        row = mul[a]
        lhs = row[add]                            # a*(b+c)
        rhs = add[row[:, None], row[None, :]]     # a*b + a*c
        if not np.array_equal(lhs, rhs):
            b, c = _first_mismatch(lhs, rhs)
            raise RingAxiomError("left-distributivity", (a, b, c))

        col = mul[:, a]
        lhs = col[add]                            # (b+c)*a
        rhs = add[col[:, None], col[None, :]]     # b*a + c*a
        if not np.array_equal(lhs, rhs):
            b, c = _first_mismatch(lhs, rhs)
            raise RingAxiomError("right-distributivity", (a, b, c))

    return neg


def build_from_tables(add_table, mul_table, zero: int, one: int,
                      label: str = "table") -> Ring:
    """Validate raw tables and wrap them as a ring.

    Element 0 must be the additive identity; a nonzero `zero` argument is
    rejected rather than silently relabelled.
    """
    if int(zero) != 0:
        raise RingAxiomError("zero-identity", (int(zero),),
                             "element 0 must be the additive identity")
    return Ring(add_table, mul_table, one, label)


def build_zn(n: int, *, order_cap: int = ORDER_CAP) -> Ring:
    """The ring of integers modulo n."""
    if n < 1:
        raise ValueError("modulus must be at least 1")
    if n > order_cap:
        raise CapExceeded(f"Z{n} exceeds order cap {order_cap}")
    idx = np.arange(n)
    add = np.add.outer(idx, idx) % n
    mul = np.multiply.outer(idx, idx) % n
    return Ring(add, mul, 1 % n, f"Z{n}")


def build_product(r1: Ring, r2: Ring, *, order_cap: int = ORDER_CAP) -> Ring:
    """Componentwise product ring on pairs, encoded as i1 * |R2| + i2."""
    order = r1.order * r2.order
    if order > order_cap:
        raise CapExceeded(f"product order {order} exceeds cap {order_cap}")
    i1, i2 = np.divmod(np.arange(order), r2.order)
    add = r1.add[np.ix_(i1, i1)] * r2.order + r2.add[np.ix_(i2, i2)]
    mul = r1.mul[np.ix_(i1, i1)] * r2.order + r2.mul[np.ix_(i2, i2)]
    one = r1.one * r2.order + r2.one
    return Ring(add, mul, one, f"{r1.label}x{r2.label}")


def build_matrix_ring(base: Ring, k: int, *, order_cap: int = ORDER_CAP) -> Ring:
    """Full k-by-k matrix ring over `base`, entries encoded as base-|R| digits."""
    if k < 1:
        raise ValueError("matrix size must be at least 1")
    m = base.order
    kk = k * k
    order = m ** kk
    if order > order_cap:
        raise CapExceeded(f"matrix ring order {order} exceeds cap {order_cap}")
    places = m ** np.arange(kk, dtype=np.int64)
    digits = (np.arange(order)[:, None] // places[None, :]) % m  # (order, kk)
    digits = digits.astype(np.int32)

    add_digits = base.add[digits[:, None, :], digits[None, :, :]]
    add = (add_digits.astype(np.int64) * places).sum(axis=2)

    mul = np.zeros((order, order), dtype=np.int64)
    for r in range(k):
        for c in range(k):
            acc = None
            for l in range(k):
                p = base.mul[digits[:, r * k + l][:, None],
                             digits[None, :, l * k + c]]
                acc = p if acc is None else base.add[acc, p]
            mul += acc.astype(np.int64) * places[r * k + c]
    one = int(sum(base.one * places[i * k + i] for i in range(k)))
    return Ring(add, mul, one, f"M{k}({base.label})")


class Bimodule:
    """A finite (A,B)-bimodule: an abelian group with commuting unital actions."""

    def __init__(self, left_ring: Ring, right_ring: Ring, add_table,
                 left_action, right_action, label: str):
        add = _as_table(add_table, "bimodule addition")
        self.order = add.shape[0]
        self.left_ring = left_ring
        self.right_ring = right_ring
        self.add = add
        self.left_action = np.asarray(left_action, dtype=np.int32)
        self.right_action = np.asarray(right_action, dtype=np.int32)
        self.label = label
        if self.left_action.shape != (left_ring.order, self.order):
            raise RingAxiomError("table-shape", detail="left action shape mismatch")
        if self.right_action.shape != (self.order, right_ring.order):
            raise RingAxiomError("table-shape", detail="right action shape mismatch")
        self.neg = _validate_bimodule(self)

    def __repr__(self) -> str:
        return f"Bimodule({self.label}, order={self.order})"


def _validate_abelian_group(add: np.ndarray, what: str) -> np.ndarray:
    n = add.shape[0]
    idx = np.arange(n)
    if not np.array_equal(add, add.T):
        raise RingAxiomError("add-commutativity", _first_mismatch(add, add.T), what)
    if not np.array_equal(add[0], idx):
        raise RingAxiomError("zero-identity", (), what)
    neg = np.full(n, -1, dtype=np.int32)
    rows, cols = np.nonzero(add == 0)
    neg[rows] = cols
    if (neg < 0).any():
        raise RingAxiomError("additive-inverse", (), what)
    for a in range(n):
        lhs = add[add[a], :]
        rhs = add[a][add]
        if not np.array_equal(lhs, rhs):
            b, c = _first_mismatch(lhs, rhs)
            raise RingAxiomError("add-associativity", (a, b, c), what)
    return neg


def _validate_bimodule(m: Bimodule) -> np.ndarray:
    neg = _validate_abelian_group(m.add, "bimodule")
    A, B, la, ra = m.left_ring, m.right_ring, m.left_action, m.right_action
    if not np.array_equal(la[A.one], np.arange(m.order)):
        raise RingAxiomError("unital-left-action", (A.one,))
    if not np.array_equal(ra[:, B.one], np.arange(m.order)):
        raise RingAxiomError("unital-right-action", (B.one,))
    for a in range(A.order):
        # a*(m+m') = a*m + a*m'
        row = la[a]
        if not np.array_equal(row[m.add], m.add[row[:, None], row[None, :]]):
            raise RingAxiomError("left-action-additivity", (a,))
        # (a+a')*m = a*m + a'*m
        if not np.array_equal(la[A.add[a]], m.add[la[a][None, :], la]):
            raise RingAxiomError("left-action-biadditivity", (a,))
        # (a*a')*m = a*(a'*m)
        if not np.array_equal(la[A.mul[a]], la[a][la]):
            raise RingAxiomError("left-action-associativity", (a,))
    for b in range(B.order):
        col = ra[:, b]
        if not np.array_equal(col[m.add], m.add[col[:, None], col[None, :]]):
            raise RingAxiomError("right-action-additivity", (b,))
        if not np.array_equal(ra[:, B.add[b]], m.add[ra[:, b][:, None], ra]):
            raise RingAxiomError("right-action-biadditivity", (b,))
        if not np.array_equal(ra[:, B.mul[b]], ra[ra[:, b]]):
            raise RingAxiomError("right-action-associativity", (b,))
    # (a*m)*b = a*(m*b)
    for a in range(A.order):
        if not np.array_equal(ra[la[a], :], la[a][ra]):
            raise RingAxiomError("action-compatibility", (a,))
    return neg


def bimodule_regular(ring: Ring) -> Bimodule:
    """The ring itself as a bimodule over itself."""
    return Bimodule(ring, ring, ring.add, ring.mul, ring.mul, ring.label)


def bimodule_power(ring: Ring, k: int) -> Bimodule:
    """Direct sum of k copies of the regular bimodule, with diagonal actions."""
    if k < 1:
        raise ValueError("power must be at least 1")
    m = ring.order
    order = m ** k
    places = m ** np.arange(k, dtype=np.int64)
    digits = ((np.arange(order)[:, None] // places[None, :]) % m).astype(np.int32)
    add = (ring.add[digits[:, None, :], digits[None, :, :]].astype(np.int64)
           * places).sum(axis=2)
    la = (ring.mul[np.arange(m)[:, None, None], digits[None, :, :]].astype(np.int64)
          * places).sum(axis=2)
    ra = (ring.mul[digits[:, :, None], np.arange(m)[None, None, :]].astype(np.int64)
          * places.reshape(1, k, 1)).sum(axis=1)
    label = ring.label if k == 1 else f"{ring.label}^{k}"
    return Bimodule(ring, ring, add, la, ra, label)


def bimodule_from_tables(left_ring: Ring, right_ring: Ring, add_table,
                         left_action, right_action, label: str = "M") -> Bimodule:
    return Bimodule(left_ring, right_ring, add_table, left_action, right_action, label)


def build_triangular(a: Ring, m: Bimodule, b: Ring, *,
                     order_cap: int = ORDER_CAP) -> Ring:
    """Triangular ring on triples (a, m, b) with (a,m,b)(a',m',b') = (aa', am'+mb', bb')."""
    if m.left_ring is not a or m.right_ring is not b:
        raise ValueError("bimodule ring references do not match the given rings")
    order = a.order * m.order * b.order
    if order > order_cap:
        raise CapExceeded(f"triangular order {order} exceeds cap {order_cap}")
    span = m.order * b.order
    ai, rest = np.divmod(np.arange(order), span)
    mi, bi = np.divmod(rest, b.order)
    ai = ai.astype(np.int32); mi = mi.astype(np.int32); bi = bi.astype(np.int32)

    def encode(xa, xm, xb):
        return xa.astype(np.int64) * span + xm.astype(np.int64) * b.order + xb

    add = encode(a.add[np.ix_(ai, ai)], m.add[np.ix_(mi, mi)], b.add[np.ix_(bi, bi)])
    mid = m.add[m.left_action[np.ix_(ai, mi)], m.right_action[np.ix_(mi, bi)]]
    mul = encode(a.mul[np.ix_(ai, ai)], mid, b.mul[np.ix_(bi, bi)])
    one = a.one * span + 0 * b.order + b.one
    return Ring(add, mul, one, f"T({a.label},{m.label},{b.label})")


def build_quotient(ring: Ring, members: Iterable[int], label: str | None = None) -> Ring:
    """Factor ring by a two-sided ideal, on least-index coset representatives.

    The returned ring carries a `projection` attribute mapping old element
    indices to new ones.
    """
    idx = np.unique(np.fromiter((int(i) for i in members), dtype=np.int32))
    _check_two_sided(ring, idx)
    reps = ring.add[:, idx].min(axis=1)
    rep_values = np.unique(reps)
    class_of = np.searchsorted(rep_values, reps).astype(np.int32)
    add = class_of[ring.add[np.ix_(rep_values, rep_values)]]
    mul = class_of[ring.mul[np.ix_(rep_values, rep_values)]]
    out = Ring(add, mul, int(class_of[ring.one]),
               label or f"{ring.label}/|{len(idx)}|")
    out.projection = class_of
    return out


def _check_two_sided(ring: Ring, idx: np.ndarray) -> None:
    from .errors import NotAnIdeal
    if 0 not in idx:
        raise NotAnIdeal("subset does not contain 0")
    inside = np.zeros(ring.order, dtype=bool)
    inside[idx] = True
    if not inside[ring.add[np.ix_(idx, idx)]].all():
        raise NotAnIdeal("subset is not closed under addition")
    if not inside[ring.mul[:, idx]].all() or not inside[ring.mul[idx, :]].all():
        raise NotAnIdeal("subset is not closed under two-sided multiplication")


def build_opposite(ring: Ring) -> Ring:
    """Same elements and addition, multiplication reversed."""
    return Ring(ring.add, ring.mul.T, ring.one, f"op({ring.label})")


def is_dedekind_finite(ring: Ring) -> bool:
    """True when every pair with a*b = 1 also has b*a = 1."""
    pairs = np.argwhere(ring.mul == ring.one)
    return bool((ring.mul[pairs[:, 1], pairs[:, 0]] == ring.one).all())


def is_normal(ring: Ring, x: int) -> bool:
    """True when the left and right multiples of x coincide as sets."""
    return bool(np.array_equal(np.unique(ring.mul[x]), np.unique(ring.mul[:, x])))


def normal_elements(ring: Ring) -> list[int]:
    return [x for x in ring.elements() if is_normal(ring, x)]


def central_idempotents(ring: Ring) -> list[int]:
    diag = ring.mul[np.arange(ring.order), np.arange(ring.order)]
    idem = diag == np.arange(ring.order)
    central = (ring.mul == ring.mul.T).all(axis=1)
    return [int(e) for e in np.flatnonzero(idem & central)]
