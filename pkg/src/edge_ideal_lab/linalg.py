"""Exact linear algebra over the rationals and prime fields.

Two engines:

* sparse column echelon builders used for boundary-matrix ranks.  Over the
  rationals the elimination is fraction-free (integer cross-multiplication
  with gcd normalization), so results are exact with Python bigints; over
  GF(2) columns are plain bitmask ints; over odd GF(p) sparse dicts mod p.
* small dense routines (rref, nullspace, solve) over Fraction or GF(p)
  elements, used where explicit bases and coordinates are needed.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


# -- sparse ranks -------------------------------------------------------------

def _rank_sparse_int(cols) -> int:
    """Rank over Q of integer columns given as {row: value} dicts."""
    pivots: dict[int, dict[int, int]] = {}
    rank = 0
    for col in cols:
        v = {i: c for i, c in col.items() if c}
        while v:
            r = max(v)
            piv = pivots.get(r)
            if piv is None:
                g = 0
                for c in v.values():
                    g = gcd(g, c)
                if v[r] < 0:
                    g = -g
                if g != 1:
                    v = {i: c // g for i, c in v.items()}
                pivots[r] = v
                rank += 1
                break
            a = piv[r]
            b = v.pop(r)
            if a != 1:
                for i in list(v):
                    v[i] *= a
            for i, c in piv.items():
                if i == r:
                    continue
                nv = v.get(i, 0) - b * c
                if nv:
                    v[i] = nv
                elif i in v:
                    del v[i]
            if len(v) > 1:
                g = 0
                for c in v.values():
                    g = gcd(g, c)
                if g > 1:
                    v = {i: c // g for i, c in v.items()}
    return rank


def _rank_gf2(cols) -> int:
    """Rank over GF(2); each column arrives as a bitmask over row indices."""
    pivots: dict[int, int] = {}
    rank = 0
    for v in cols:
        while v:
            r = v.bit_length() - 1
            piv = pivots.get(r)
            if piv is None:
                pivots[r] = v
                rank += 1
                break
            v ^= piv
    return rank


def _rank_sparse_mod(cols, p: int) -> int:
    pivots: dict[int, dict[int, int]] = {}
    rank = 0
    for col in cols:
        v = {i: c % p for i, c in col.items() if c % p}
        while v:
            r = max(v)
            piv = pivots.get(r)
            if piv is None:
                inv = pow(v[r], -1, p)
                pivots[r] = {i: c * inv % p for i, c in v.items()}
                rank += 1
                break
            b = v.pop(r)
            for i, c in piv.items():
                if i == r:
                    continue
                nv = (v.get(i, 0) - b * c) % p
                if nv:
                    v[i] = nv
                elif i in v:
                    del v[i]
    return rank


def rank_of_columns(cols: list[dict[int, int]], p: int) -> int:
    """Exact rank of an integer matrix given by sparse columns.

    p = 0 means the rationals, otherwise GF(p).
    """
    if p == 0:
        return _rank_sparse_int(cols)
    if p == 2:
        masks = []
        for col in cols:
            m = 0
            for i, c in col.items():
                if c & 1:
                    m |= 1 << i
            masks.append(m)
        return _rank_gf2(masks)
    return _rank_sparse_mod(cols, p)


def rank_dense_bareiss(rows: list[list[int]]) -> int:
    """Fraction-free (Bareiss) elimination rank of a dense integer matrix."""
    m = [list(r) for r in rows]
    nr = len(m)
    nc = len(m[0]) if nr else 0
    rank = 0
    prev = 1
    for c in range(nc):
        pr = None
        for i in range(rank, nr):
            if m[i][c]:
                pr = i
                break
        if pr is None:
            continue
        m[rank], m[pr] = m[pr], m[rank]
        piv = m[rank][c]
        for i in range(rank + 1, nr):
            mic = m[i][c]
            row_i = m[i]
            row_p = m[rank]
            for j in range(c, nc):
                row_i[j] = (row_i[j] * piv - mic * row_p[j]) // prev
        prev = piv
        rank += 1
        if rank == nr:
            break
    return rank


# -- dense field arithmetic ----------------------------------------------------

class FieldOps:
    """Element operations for Q (p = 0, Fraction values) or GF(p) (ints)."""

    __slots__ = ("p", "zero", "one")

    def __init__(self, p: int):
        self.p = p
        self.zero = Fraction(0) if p == 0 else 0
        self.one = Fraction(1) if p == 0 else 1

    def of_int(self, k: int):
        return Fraction(k) if self.p == 0 else k % self.p

    def add(self, a, b):
        return a + b if self.p == 0 else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.p == 0 else (a - b) % self.p

    def mul(self, a, b):
        return a * b if self.p == 0 else (a * b) % self.p

    def neg(self, a):
        return -a if self.p == 0 else (-a) % self.p

    def inv(self, a):
        if self.p == 0:
            return Fraction(1) / a
        return pow(a, -1, self.p)


def rref_rows(rows: list[list], ops: FieldOps) -> tuple[list[list], list[int]]:
    """Reduced row echelon form (in place on a copy) and pivot columns."""
    m = [list(r) for r in rows]
    nr = len(m)
    nc = len(m[0]) if nr else 0
    pivots: list[int] = []
    r = 0
    for c in range(nc):
        pr = None
        for i in range(r, nr):
            if m[i][c] != ops.zero:
                pr = i
                break
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = ops.inv(m[r][c])
        m[r] = [ops.mul(inv, x) for x in m[r]]
        for i in range(nr):
            if i != r and m[i][c] != ops.zero:
                f = m[i][c]
                m[i] = [ops.sub(x, ops.mul(f, y)) for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nr:
            break
    return m, pivots


def nullspace_rows(rows: list[list], ncols: int, ops: FieldOps) -> list[list]:
    """Basis of the right kernel of the row matrix (vectors of length ncols)."""
    if ncols == 0:
        return []
    if not rows:
        basis = []
        for j in range(ncols):
            v = [ops.zero] * ncols
            v[j] = ops.one
            basis.append(v)
        return basis
    m, pivots = rref_rows(rows, ops)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fc in free:
        v = [ops.zero] * ncols
        v[fc] = ops.one
        for r, pc in enumerate(pivots):
            v[pc] = ops.neg(m[r][fc])
        basis.append(v)
    return basis


def solve_columns(cols: list[list], rhs: list, ops: FieldOps):
    """One solution x of  sum_j x_j * cols[j] = rhs, or None if inconsistent."""
    nr = len(rhs)
    nc = len(cols)
    rows = [[cols[j][i] for j in range(nc)] + [rhs[i]] for i in range(nr)]
    m, pivots = rref_rows(rows, ops)
    if nc in pivots:
        return None
    x = [ops.zero] * nc
    for r, pc in enumerate(pivots):
        x[pc] = m[r][nc]
    return x


class Echelon:
    """Incremental row-space membership structure over a field.

    Pivot vectors are kept fully inter-reduced (zero at every other pivot's
    lead index), so one reduction pass suffices regardless of order.
    """

    __slots__ = ("ops", "pivots")

    def __init__(self, ops: FieldOps):
        self.ops = ops
        self.pivots: dict[int, list] = {}

    def reduce(self, vec: list) -> list:
        ops = self.ops
        v = list(vec)
        for lead, pv in self.pivots.items():
            if v[lead] != ops.zero:
                f = v[lead]
                v = [ops.sub(x, ops.mul(f, y)) for x, y in zip(v, pv)]
        return v

    def add(self, vec: list) -> list | None:
        """Insert vec's residual; returns the residual if independent else None."""
        ops = self.ops
        v = self.reduce(vec)
        lead = None
        for i, x in enumerate(v):
            if x != ops.zero:
                lead = i
                break
        if lead is None:
            return None
        inv = ops.inv(v[lead])
        norm = [ops.mul(inv, x) for x in v]
        for other, pv in self.pivots.items():
            if pv[lead] != ops.zero:
                f = pv[lead]
                self.pivots[other] = [ops.sub(x, ops.mul(f, y)) for x, y in zip(pv, norm)]
        self.pivots[lead] = norm
        return v

    @property
    def dim(self) -> int:
        return len(self.pivots)
