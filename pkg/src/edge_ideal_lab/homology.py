"""Exact reduced simplicial homology over the rationals or a prime field,
plus an exactness checker for the reduced Mayer-Vietoris sequence.

Chain groups are reduced: the empty face spans the (-1)-chains and the
augmentation is the boundary map of the vertices.  Faces of each
cardinality are ordered colexicographically (numeric order of their
bitmasks); boundary signs come from vertex-position parity.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .complexes import SimplicialComplex, faces_by_card, _maximalize
from .linalg import (
    Echelon,
    FieldOps,
    is_prime,
    nullspace_rows,
    rank_of_columns,
    solve_columns,
)


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: p = 0 for the rationals, else a prime p."""

    p: int = 0

    def __post_init__(self):
        if self.p != 0 and not is_prime(self.p):
            raise DomainError(f"{self.p} is not prime")

    @property
    def label(self) -> str:
        return "Q" if self.p == 0 else f"GF({self.p})"


RATIONALS = FieldSpec(0)
GF2 = FieldSpec(2)


def field_spec(text: str) -> FieldSpec:
    """Parse a field choice: 'q'/'Q'/'0' or a prime number."""
    t = text.strip().lower()
    if t in ("q", "0", "rationals"):
        return RATIONALS
    if t.isdigit():
        return FieldSpec(int(t))
    raise DomainError(f"cannot parse field {text!r}")


# -- mask-level chain machinery (shared with the Hochster sweep) ---------------

def _faces_table(facet_masks) -> dict[int, list[int]]:
    """All faces under the given facets, grouped by cardinality, colex order."""
    seen: set[int] = set()
    for fm in facet_masks:
        if fm in seen:
            continue
        sub = fm
        while True:
            seen.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & fm
            while sub in seen and sub:
                sub = (sub - 1) & fm
            if sub in seen:
                break
    out: dict[int, list[int]] = {}
    for m in seen:
        out.setdefault(m.bit_count(), []).append(m)
    for lst in out.values():
        lst.sort()
    return out


def _boundary_columns(table: dict[int, list[int]], c: int) -> list[dict[int, int]]:
    """Sparse columns of the boundary map from c-element to (c-1)-element
    faces (c >= 1; c = 1 is the augmentation)."""
    rows = {m: i for i, m in enumerate(table.get(c - 1, ()))}
    cols = []
    for m in table.get(c, ()):
        col = {}
        sign = 1
        mm = m
        while mm:
            bit = mm & -mm
            col[rows[m ^ bit]] = sign
            sign = -sign
            mm ^= bit
        cols.append(col)
    return cols


def _component_count(table: dict[int, list[int]]) -> int:
    """Connected components of the 1-skeleton."""
    parent: dict[int, int] = {}

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for vm in table.get(1, ()):
        parent[vm] = vm
    for em in table.get(2, ()):
        lo = em & -em
        hi = em ^ lo
        ra, rb = find(lo), find(hi)
        if ra != rb:
            parent[ra] = rb
    return sum(1 for v in parent if find(v) == v)


def _betti_levels(table: dict[int, list[int]], p: int) -> dict[int, int]:
    """Nonzero reduced Betti numbers, keyed by homological level."""
    top = max(table)
    counts = {c: len(ms) for c, ms in table.items()}
    ranks = {c: 0 for c in range(top + 2)}
    if counts.get(1):
        ranks[1] = 1
        ranks[2] = counts[1] - _component_count(table)
    for c in range(3, top + 1):
        ranks[c] = rank_of_columns(_boundary_columns(table, c), p)
    out = {}
    for c in range(0, top + 1):
        b = counts.get(c, 0) - ranks[c] - ranks[c + 1]
        if b:
            out[c - 1] = b
    return out


def _first_nonzero_level(table: dict[int, list[int]], p: int,
                         components: int | None = None) -> tuple[int, int] | None:
    """Lowest level with nonzero reduced homology, with its Betti number.

    Rank computations stop as soon as the answer is known.
    """
    top = max(table)
    counts = {c: len(ms) for c, ms in table.items()}
    if not counts.get(1):
        return (-1, 1)  # the complex {} alone
    if components is None:
        components = _component_count(table)
    if components > 1:
        return (0, components - 1)
    prev_rank = counts[1] - 1  # rank of edge boundary on a connected skeleton
    for c in range(2, top + 1):
        nxt = rank_of_columns(_boundary_columns(table, c + 1), p) if c + 1 <= top else 0
        b = counts.get(c, 0) - prev_rank - nxt
        if b:
            return (c - 1, b)
        prev_rank = nxt
    return None


# -- public homology API --------------------------------------------------------

@dataclass(frozen=True)
class BettiVector:
    """Reduced Betti numbers b_{-1}, b_0, ..., b_top (zero outside)."""

    values: tuple[int, ...]

    def level(self, l: int) -> int:
        idx = l + 1
        if 0 <= idx < len(self.values):
            return self.values[idx]
        return 0

    __getitem__ = level

    def nonzero(self) -> dict[int, int]:
        return {i - 1: v for i, v in enumerate(self.values) if v}

    def to_list(self) -> list[int]:
        """JSON form, indexed from level -1."""
        return list(self.values)

    def reduced_euler(self) -> int:
        return sum((-1) ** (i - 1) * v for i, v in enumerate(self.values))


def reduced_betti(d: SimplicialComplex, field: FieldSpec = RATIONALS) -> BettiVector:
    """Exact reduced Betti numbers of a non-void complex."""
    if d.is_void():
        raise DomainError("homology of the void complex is undefined")
    table = faces_by_card(d)
    top = max(table)
    levels = _betti_levels(table, field.p)
    return BettiVector(tuple(levels.get(l, 0) for l in range(-1, top)))


class BoundaryMatrices:
    """Dense boundary matrices of the reduced chain complex.

    matrix(l) maps l-faces to (l-1)-faces (rows by (l-1)-faces, columns by
    l-faces, colex order); matrix(0) is the augmentation row.  Entries are
    integers, reduced mod p for a finite field.
    """

    __slots__ = ("field", "_faces", "_mats", "_d")

    def __init__(self, d: SimplicialComplex, field: FieldSpec):
        if d.is_void():
            raise DomainError("boundary matrices of the void complex are undefined")
        table = faces_by_card(d)
        self.field = field
        self._d = d
        self._faces = {c - 1: tuple(d._names_of(m) for m in table[c])
                       for c in sorted(table)}
        p = field.p
        mats: dict[int, tuple] = {}
        for c in range(1, max(table) + 1):
            nrows = len(table.get(c - 1, ()))
            cols = _boundary_columns(table, c)
            rows = [[0] * len(cols) for _ in range(nrows)]
            for j, col in enumerate(cols):
                for i, val in col.items():
                    rows[i][j] = val % p if p else val
            mats[c - 1] = tuple(tuple(r) for r in rows)
        self._mats = mats

    def levels(self) -> tuple[int, ...]:
        return tuple(sorted(self._mats))

    def faces(self, l: int) -> tuple[tuple[str, ...], ...]:
        return self._faces.get(l, ())

    def matrix(self, l: int):
        return self._mats.get(l, ())


def boundary_matrices(d: SimplicialComplex, field: FieldSpec = RATIONALS) -> BoundaryMatrices:
    return BoundaryMatrices(d, field)


# -- Mayer-Vietoris exactness ----------------------------------------------------

class _HomologyBasis:
    """Homology of one complex with explicit cycle representatives.

    For each cardinality c: a basis of boundaries, extension cycles whose
    classes form a homology basis, and coordinates of arbitrary cycles.
    """

    def __init__(self, table: dict[int, list[int]], ops: FieldOps):
        self.table = table
        self.ops = ops
        self.index = {c: {m: i for i, m in enumerate(ms)} for c, ms in table.items()}
        self.top = max(table)
        self.b_basis: dict[int, list[list]] = {}
        self.h_reps: dict[int, list[list]] = {}
        for c in range(0, self.top + 1):
            ncols = len(table.get(c, ()))
            nrows = len(table.get(c - 1, ()))
            # cycles: kernel of the boundary leaving cardinality c
            if c == 0:
                cycles = [[ops.one]]
            else:
                cols = _boundary_columns(table, c)
                rows = [[ops.zero] * ncols for _ in range(nrows)]
                for j, col in enumerate(cols):
                    for i, val in col.items():
                        rows[i][j] = ops.of_int(val)
                cycles = nullspace_rows(rows, ncols, ops)
            # boundaries: image of the boundary entering cardinality c
            ech = Echelon(ops)
            bb: list[list] = []
            for col in _boundary_columns(table, c + 1):
                vec = [ops.zero] * ncols
                for i, val in col.items():
                    vec[i] = ops.of_int(val)
                if ech.add(vec) is not None:
                    bb.append(vec)
            reps: list[list] = []
            for z in cycles:
                res = ech.add(z)
                if res is not None:
                    reps.append(res)
            self.b_basis[c] = bb
            self.h_reps[c] = reps

    def dim(self, c: int) -> int:
        return len(self.h_reps.get(c, ()))

    def coords(self, c: int, cycle: list) -> list:
        """Coordinates of a cycle's class in the homology basis."""
        reps = self.h_reps.get(c, [])
        basis = self.b_basis.get(c, []) + reps
        if not basis:
            return []
        sol = solve_columns(basis, cycle, self.ops)
        if sol is None:
            raise AssertionError("vector is not a cycle of the subcomplex")
        return sol[len(self.b_basis.get(c, [])):]

    def chain_boundary(self, c: int, chain: dict[int, object]) -> dict[int, object]:
        """Boundary of a chain given as {face mask: coefficient}."""
        ops = self.ops
        out: dict[int, object] = {}
        for m, coeff in chain.items():
            sign = 1
            mm = m
            while mm:
                bit = mm & -mm
                face = m ^ bit
                term = ops.mul(coeff, ops.of_int(sign))
                cur = ops.add(out.get(face, ops.zero), term)
                if cur == ops.zero:
                    out.pop(face, None)
                else:
                    out[face] = cur
                sign = -sign
                mm ^= bit
        return out


def _rank_dense(cols: list[list], ops: FieldOps) -> int:
    ech = Echelon(ops)
    r = 0
    for v in cols:
        if ech.add(v) is not None:
            r += 1
    return r


def _compose(first_cols: list[list], second_cols: list[list], ops: FieldOps) -> list[list]:
    """Columns of (second o first); first_cols map into second's domain."""
    out = []
    for col in first_cols:
        n = len(second_cols[0]) if second_cols else 0
        acc = [ops.zero] * n
        for j, coeff in enumerate(col):
            if coeff == ops.zero:
                continue
            acc = [ops.add(a, ops.mul(coeff, x)) for a, x in zip(acc, second_cols[j])]
        out.append(acc)
    return out


def _is_zero_map(cols: list[list], ops: FieldOps) -> bool:
    return all(all(x == ops.zero for x in col) for col in cols)


def mv_check(d1: SimplicialComplex, d2: SimplicialComplex,
             field: FieldSpec = RATIONALS) -> bool:
    """Verify exactness of the reduced Mayer-Vietoris sequence of d1, d2.

    Builds homology bases with cycle representatives for the intersection,
    both pieces, and the union; forms the induced restriction maps, the
    difference map, and the connecting map; then checks, at every position,
    that consecutive composites vanish and that ranks add up to the middle
    dimension.
    """
    if d1.ground != d2.ground:
        raise DomainError("complexes must share a ground set")
    if d1.is_void() or d2.is_void():
        raise DomainError("void complexes have no Mayer-Vietoris sequence")
    ops = FieldOps(field.p)

    union_masks = _maximalize(d1.facet_masks + d2.facet_masks)
    inter_masks = _maximalize(a & b for a in d1.facet_masks for b in d2.facet_masks)
    t_g = _faces_table(inter_masks)
    t_1 = _faces_table(d1.facet_masks)
    t_2 = _faces_table(d2.facet_masks)
    t_u = _faces_table(union_masks)
    faces_1 = {m for ms in t_1.values() for m in ms}
    faces_2 = {m for ms in t_2.values() for m in ms}

    hg = _HomologyBasis(t_g, ops)
    h1 = _HomologyBasis(t_1, ops)
    h2 = _HomologyBasis(t_2, ops)
    hu = _HomologyBasis(t_u, ops)

    def as_chain(table, c, vec) -> dict[int, object]:
        return {m: x for m, x in zip(table.get(c, ()), vec) if x != ops.zero}

    def to_vector(table, idx, c, chain) -> list:
        vec = [ops.zero] * len(table.get(c, ()))
        for m, x in chain.items():
            vec[idx[c][m]] = x
        return vec

    top = max(t_u)
    alpha: dict[int, list[list]] = {}
    beta: dict[int, list[list]] = {}
    delta: dict[int, list[list]] = {}

    for c in range(0, top + 1):
        # alpha: class of z maps to (z in d1, z in d2)
        cols = []
        for z in hg.h_reps.get(c, []):
            chain = as_chain(t_g, c, z)
            u = h1.coords(c, to_vector(t_1, h1.index, c, chain))
            v = h2.coords(c, to_vector(t_2, h2.index, c, chain))
            cols.append(u + v)
        alpha[c] = cols
        # beta: (a, b) maps to a - b in the union
        cols = []
        for z in h1.h_reps.get(c, []):
            chain = as_chain(t_1, c, z)
            cols.append(hu.coords(c, to_vector(t_u, hu.index, c, chain)))
        for z in h2.h_reps.get(c, []):
            chain = as_chain(t_2, c, z)
            w = hu.coords(c, to_vector(t_u, hu.index, c, chain))
            cols.append([ops.neg(x) for x in w])
        beta[c] = cols
        # connecting map: split z = a + b, send [z] to [boundary of a]
        cols = []
        for z in hu.h_reps.get(c, []):
            chain = as_chain(t_u, c, z)
            part1 = {m: x for m, x in chain.items() if m in faces_1}
            part2 = {m: x for m, x in chain.items() if m not in faces_1}
            if any(m not in faces_2 for m in part2):
                raise AssertionError("union face missing from both pieces")
            da = hu.chain_boundary(c, part1)
            vec = to_vector(t_g, hg.index, c - 1, da)
            cols.append(hg.coords(c - 1, vec))
        delta[c] = cols

    def dim_sum(c: int) -> int:
        return h1.dim(c) + h2.dim(c)

    for c in range(0, top + 2):
        a_c = alpha.get(c, [])
        b_c = beta.get(c, [])
        d_c = delta.get(c, [])
        d_next = delta.get(c + 1, [])
        # exactness at the intersection
        if not _is_zero_map(_compose(d_next, a_c, ops), ops):
            return False
        if _rank_dense(d_next, ops) + _rank_dense(a_c, ops) != hg.dim(c):
            return False
        # exactness at the direct sum
        if not _is_zero_map(_compose(a_c, b_c, ops), ops):
            return False
        if _rank_dense(a_c, ops) + _rank_dense(b_c, ops) != dim_sum(c):
            return False
        # exactness at the union
        if not _is_zero_map(_compose(b_c, d_c, ops), ops):
            return False
        if _rank_dense(b_c, ops) + _rank_dense(d_c, ops) != hu.dim(c):
            return False
    return True
