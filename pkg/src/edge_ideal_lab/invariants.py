"""Ring-theoretic invariants of square-free monomial ideals presented by
simplicial complexes: minimal generators and minimal primes, multigraded
Betti tables via vertex-subset homology sweeps, height / Krull dimension /
projective dimension / depth, Cohen-Macaulay and almost-Cohen-Macaulay
classification, prime-sequence connectivity in codimension k, and closed
forms for staircase (shifted) bipartite edge ideals.

Conventions: for a complex on n ground vertices, height = n - (dim + 1),
Krull dimension = n - height, depth = n - projective dimension.  The zero
ideal (full simplex) is Cohen-Macaulay.  The void complex is rejected
everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import DomainError, ResourceError
from .complexes import (
    SimplicialComplex,
    _maximalize,
    connected_in_codim,
    dimension,
    faces_by_card,
    is_pure,
)
from .graphs import FerrersPartition, Graph, _maximal_independent_masks
from .homology import (
    FieldSpec,
    RATIONALS,
    _betti_levels,
    _faces_table,
    _first_nonzero_level,
)


def _bits(mask: int):
    while mask:
        yield (mask & -mask).bit_length() - 1
        mask &= mask - 1


def _minimal_masks(masks) -> list[int]:
    uniq = sorted(set(masks), key=lambda m: (m.bit_count(), m))
    out: list[int] = []
    for m in uniq:
        if not any(kept & ~m == 0 for kept in out):
            out.append(m)
    return out


# -- ideal presentation ---------------------------------------------------------

@dataclass(frozen=True)
class IdealPresentation:
    """Variables plus the minimal square-free monomial generators."""

    variables: tuple[str, ...]
    generators: tuple[tuple[str, ...], ...]


def stanley_reisner(d: SimplicialComplex) -> IdealPresentation:
    """Minimal nonfaces of the complex (minimal transversals of the facet
    complements, built complement by complement)."""
    if d.is_void():
        raise DomainError("the void complex presents no ideal")
    n = len(d.ground)
    full = (1 << n) - 1
    comps = [full & ~m for m in d.facet_masks]
    if any(c == 0 for c in comps):
        gens: list[int] = []  # some facet is the whole ground set: zero ideal
    else:
        gens = [1 << b for b in _bits(comps[0])]
        for c in comps[1:]:
            nxt: list[int] = []
            for t in gens:
                if t & c:
                    nxt.append(t)
                else:
                    nxt.extend(t | (1 << b) for b in _bits(c))
            gens = _minimal_masks(nxt)
    gens.sort(key=lambda m: (m.bit_count(), m))
    return IdealPresentation(d.ground, tuple(d._names_of(m) for m in gens))


@dataclass(frozen=True)
class PrimeSet:
    """Minimal primes, each given by its generator set of variables."""

    variables: tuple[str, ...]
    primes: tuple[tuple[str, ...], ...]

    def heights(self) -> tuple[int, ...]:
        return tuple(len(p) for p in self.primes)


def minimal_primes(d: SimplicialComplex) -> PrimeSet:
    """One prime per facet, generated by the facet's complement."""
    if d.is_void():
        raise DomainError("the void complex has no minimal primes")
    n = len(d.ground)
    full = (1 << n) - 1
    primes = [d._names_of(full & ~m) for m in d.facet_masks]
    primes.sort(key=lambda t: (len(t), t))
    return PrimeSet(d.ground, tuple(primes))


def height(d: SimplicialComplex) -> int:
    return len(d.ground) - (dimension(d) + 1)


def krull_dim(d: SimplicialComplex) -> int:
    return len(d.ground) - height(d)


# -- Hochster sweep ---------------------------------------------------------------

class BettiTable:
    """Nonzero multigraded Betti numbers beta_{i,W} of R/I."""

    __slots__ = ("ground", "entries")

    def __init__(self, ground: tuple[str, ...], entries: dict):
        self.ground = ground
        self.entries = entries  # (i, W name tuple) -> positive int

    def proj_dim(self) -> int:
        return max(i for i, _ in self.entries)

    def by_degree(self) -> dict[tuple[int, int], int]:
        """Aggregate beta_{i,j} over |W| = j."""
        out: dict[tuple[int, int], int] = {}
        for (i, w), v in self.entries.items():
            key = (i, len(w))
            out[key] = out.get(key, 0) + v
        return out

    def rows(self) -> list[tuple[int, tuple[str, ...], int]]:
        return sorted((i, w, v) for (i, w), v in self.entries.items())

    def __eq__(self, other):
        return (
            isinstance(other, BettiTable)
            and self.ground == other.ground
            and self.entries == other.entries
        )


def hochster_betti(d: SimplicialComplex, field: FieldSpec = RATIONALS,
                   max_ground: int = 24) -> BettiTable:
    """Full multigraded Betti table from restrictions over all vertex
    subsets W.  Subsets that are faces are skipped (their restrictions are
    simplices) and so are restrictions with a cone vertex."""
    if d.is_void():
        raise DomainError("the void complex has no Betti table")
    n = len(d.ground)
    if n > max_ground:
        raise ResourceError(f"ground set of size {n} exceeds the guard {max_ground}")
    p = field.p
    facets = d.facet_masks
    entries: dict[tuple[int, tuple[str, ...]], int] = {(0, ()): 1}
    for w in range(1, 1 << n):
        if any(w & ~f == 0 for f in facets):
            continue
        rmasks = _maximalize(f & w for f in facets)
        size = w.bit_count()
        if rmasks == (0,):
            entries[(size, d._names_of(w))] = 1  # no vertex of W is a face
            continue
        common = rmasks[0]
        for m in rmasks[1:]:
            common &= m
        if common:
            continue
        table = _faces_table(rmasks)
        levels = _betti_levels(table, p)
        if levels:
            names = d._names_of(w)
            for lvl, b in levels.items():
                entries[(size - 1 - lvl, names)] = b
    return BettiTable(d.ground, entries)


def proj_dim(d: SimplicialComplex, field: FieldSpec = RATIONALS,
             max_ground: int = 24) -> int:
    return hochster_betti(d, field, max_ground).proj_dim()


def depth(d: SimplicialComplex, field: FieldSpec = RATIONALS,
          max_ground: int = 24) -> int:
    return len(d.ground) - proj_dim(d, field, max_ground)


# -- classification ----------------------------------------------------------------

@dataclass(frozen=True)
class Report:
    """All computed invariants and classification flags for one input."""

    n_vars: int
    height: int
    krull_dim: int
    proj_dim: int
    depth: int
    is_CM: bool
    is_ACM: bool
    is_unmixed: bool
    codim2_connected: bool
    min_positive_degree: int | None
    field: str

    def __post_init__(self):
        ok = (
            self.krull_dim == self.n_vars - self.height
            and self.depth == self.n_vars - self.proj_dim
            and self.depth <= self.krull_dim
            and self.is_ACM == (self.depth >= self.krull_dim - 1)
            and (not self.is_CM or self.is_ACM)
        )
        if not ok:
            raise AssertionError(f"inconsistent report: {self}")

    def to_dict(self) -> dict:
        return {
            "n_vars": self.n_vars,
            "height": self.height,
            "krull_dim": self.krull_dim,
            "proj_dim": self.proj_dim,
            "depth": self.depth,
            "is_CM": self.is_CM,
            "is_ACM": self.is_ACM,
            "is_unmixed": self.is_unmixed,
            "codim2_connected": self.codim2_connected,
            "min_positive_degree": self.min_positive_degree,
            "field": self.field,
        }


def _min_positive_degree(gens) -> int | None:
    counts: dict[str, int] = {}
    for g in gens:
        if len(g) == 2:
            for v in g:
                counts[v] = counts.get(v, 0) + 1
    return min(counts.values()) if counts else None


def _build_report(n: int, ht: int, pd: int, unmixed: bool, codim2: bool,
                  mpd: int | None, field: FieldSpec) -> Report:
    kd = n - ht
    dep = n - pd
    is_acm = pd <= ht + 1
    # same inequality through the two linear identities; keep both routes
    if is_acm != (dep >= kd - 1):
        raise AssertionError("aCM criteria disagree")
    return Report(
        n_vars=n, height=ht, krull_dim=kd, proj_dim=pd, depth=dep,
        is_CM=(dep == kd), is_ACM=is_acm, is_unmixed=unmixed,
        codim2_connected=codim2, min_positive_degree=mpd, field=field.label,
    )


def classify(d: SimplicialComplex, field: FieldSpec = RATIONALS,
             max_ground: int = 24) -> Report:
    """Classify a complex via the full subset sweep (exponential in the
    ground size; meant for desk-scale inputs)."""
    ht = height(d)
    pd = hochster_betti(d, field, max_ground).proj_dim()
    mpd = _min_positive_degree(stanley_reisner(d).generators)
    return _build_report(len(d.ground), ht, pd, is_pure(d),
                         connected_in_codim(d, 2), mpd, field)


# -- fast path for independence complexes ------------------------------------------

def _complement_components(adj, w: int) -> int:
    """Components of the complement graph induced on the subset w."""
    remaining = w
    count = 0
    while remaining:
        count += 1
        comp = remaining & -remaining
        frontier = comp
        while frontier:
            nxt = 0
            m = frontier
            while m:
                bit = m & -m
                v = bit.bit_length() - 1
                m ^= bit
                nxt |= w & ~adj[v] & ~(1 << v)
            frontier = nxt & ~comp
            comp |= frontier
        remaining &= ~comp
    return count


def _independent_faces(adj, w: int) -> dict[int, list[int]]:
    """Independent subsets of w grouped by cardinality (faces of the
    induced independence complex)."""
    out: dict[int, list[int]] = {0: [0]}

    def rec(cur: int, cnt: int, allowed: int) -> None:
        m = allowed
        while m:
            bit = m & -m
            v = bit.bit_length() - 1
            m ^= bit
            nxt = cur | bit
            out.setdefault(cnt + 1, []).append(nxt)
            rec(nxt, cnt + 1, m & ~adj[v])

    rec(0, 0, w)
    for lst in out.values():
        lst.sort()
    return out


def _graph_proj_dim(adj, p: int, stop_above: int | None = None) -> tuple[int, bool]:
    """Projective dimension of R/I(G) by the subset sweep.

    Subsets with a vertex isolated inside them restrict to cones and are
    skipped; subsets too small to beat the current maximum are skipped.
    With stop_above set, returns early (value, False) once the maximum is
    known to exceed it.
    """
    n = len(adj)
    best = 0
    for size in range(n, 0, -1):
        if best >= size - 1:
            break
        for combo in combinations(range(n), size):
            w = 0
            for v in combo:
                w |= 1 << v
            ok = True
            for v in combo:
                if not adj[v] & w:
                    ok = False
                    break
            if not ok:
                continue
            cc = _complement_components(adj, w)
            if cc > 1:
                cand = size - 1
            else:
                fl = _first_nonzero_level(_independent_faces(adj, w), p, components=1)
                if fl is None:
                    continue
                cand = size - 1 - fl[0]
            if cand > best:
                best = cand
                if stop_above is not None and best > stop_above:
                    return best, False
    return best, True


def classify_graph(g: Graph, field: FieldSpec = RATIONALS,
                   max_ground: int = 24) -> Report:
    """Classification of R/I(G); same result as classify() on the
    independence complex, with independence-specific pruning."""
    n = g.n
    if n > max_ground:
        raise ResourceError(f"graph on {n} vertices exceeds the guard {max_ground}")
    mis = sorted(_maximal_independent_masks(g))
    ht = n - max(m.bit_count() for m in mis)
    pd, complete = _graph_proj_dim(g.adj, field.p)
    assert complete
    unmixed = len({m.bit_count() for m in mis}) == 1
    cx = SimplicialComplex._from_masks(g.names, mis)
    mpd = min((a.bit_count() for a in g.adj if a), default=None)
    return _build_report(n, ht, pd, unmixed, connected_in_codim(cx, 2), mpd, field)


def graph_is_acm(g: Graph, field: FieldSpec = RATIONALS,
                 max_ground: int = 24) -> bool:
    """Almost-CM decision for R/I(G) with early exit."""
    n = g.n
    if n == 0:
        return True
    if n > max_ground:
        raise ResourceError(f"graph on {n} vertices exceeds the guard {max_ground}")
    ht = n - max(m.bit_count() for m in _maximal_independent_masks(g))
    pd, complete = _graph_proj_dim(g.adj, field.p, stop_above=ht + 1)
    return pd <= ht + 1 if complete else False


def graph_is_cm(g: Graph, field: FieldSpec = RATIONALS,
                max_ground: int = 24) -> bool:
    """CM decision for R/I(G) with early exit."""
    n = g.n
    if n == 0:
        return True
    if n > max_ground:
        raise ResourceError(f"graph on {n} vertices exceeds the guard {max_ground}")
    ht = n - max(m.bit_count() for m in _maximal_independent_masks(g))
    pd, complete = _graph_proj_dim(g.adj, field.p, stop_above=ht)
    return pd <= ht if complete else False


# -- Reisner criterion ---------------------------------------------------------------

def reisner_cm(d: SimplicialComplex, field: FieldSpec = RATIONALS) -> bool:
    """CM test: every link (the empty face included) has vanishing reduced
    homology below its top dimension.  Independent of the Betti-table
    route."""
    if d.is_void():
        raise DomainError("the void complex has no links")
    p = field.p
    table = faces_by_card(d)
    links: dict[int, dict[int, list[int]]] = {}
    for ms in table.values():
        for m in ms:
            links[m] = {}
    for ms in table.values():
        for gmask in ms:
            sub = gmask
            while True:
                rest = gmask ^ sub
                links[sub].setdefault(rest.bit_count(), []).append(rest)
                if sub == 0:
                    break
                sub = (sub - 1) & gmask
    for fmask, ltable in links.items():
        dim_link = max(ltable) - 1
        fl = _first_nonzero_level(ltable, p)
        if fl is not None and fl[0] < dim_link:
            return False
    return True


# -- prime-sequence connectivity ------------------------------------------------------

def _prime_adjacency(ps: PrimeSet, ht_ideal: int, k: int) -> list[list[int]]:
    gens = [frozenset(p) for p in ps.primes]
    bound = ht_ideal + k
    nbr: list[list[int]] = [[] for _ in gens]
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            if len(gens[i] | gens[j]) <= bound:
                nbr[i].append(j)
                nbr[j].append(i)
    return nbr


def connected_in_codim_ideal(ps: PrimeSet, ht_ideal: int, k: int) -> bool:
    """True iff any two minimal primes are joined by a sequence with
    consecutive sums of height at most ht(I) + k."""
    if not ps.primes:
        raise DomainError("prime set is empty")
    nbr = _prime_adjacency(ps, ht_ideal, k)
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for u in nbr[v]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == len(ps.primes)


def prime_witness_sequence(ps: PrimeSet, ht_ideal: int, k: int,
                           source, target) -> list[tuple[str, ...]] | None:
    """Shortest witness sequence between two minimal primes (BFS in
    canonical prime order), or None when not connected."""
    want_s, want_t = tuple(source), tuple(target)
    try:
        s = ps.primes.index(want_s)
        t = ps.primes.index(want_t)
    except ValueError:
        raise DomainError("witness endpoints must be minimal primes") from None
    nbr = _prime_adjacency(ps, ht_ideal, k)
    prev: dict[int, int | None] = {s: None}
    frontier = [s]
    while frontier and t not in prev:
        nxt = []
        for v in frontier:
            for u in nbr[v]:
                if u not in prev:
                    prev[u] = v
                    nxt.append(u)
        frontier = nxt
    if t not in prev:
        return None
    chain = [t]
    while prev[chain[-1]] is not None:
        chain.append(prev[chain[-1]])
    chain.reverse()
    return [ps.primes[i] for i in chain]


# -- staircase (shifted) ideals ---------------------------------------------------------

@dataclass(frozen=True)
class FerrersInvariants:
    height: int
    proj_dim: int
    primes: PrimeSet
    unmixed: bool


def ferrers_invariants(lam) -> FerrersInvariants:
    """Closed-form height, projective dimension, minimal primes, and
    unmixedness of the staircase edge ideal of a partition.

    ht = min(min_j(lambda_j + j - 1), n); pd = max_j(lambda_j + j - 1);
    one prime per jump c_i: (x_1..x_{c_i - 1}, y_1..y_{lambda_{c_i}}),
    with the sentinel c_{k+1} = n + 1 giving the all-x prime.
    """
    fp = lam if isinstance(lam, FerrersPartition) else FerrersPartition(lam)
    n, m = fp.n, fp.m
    vals = [fp.value(j) + j - 1 for j in range(1, n + 1)]
    ht = min(min(vals), n)
    pd = max(vals)
    xs = [f"x{i}" for i in range(1, n + 1)]
    ys = [f"y{j}" for j in range(1, m + 1)]
    primes = []
    for c in fp.jumps:
        primes.append(tuple(xs[:c - 1] + ys[:fp.value(c)]))
    unmixed = len({len(p) for p in primes}) == 1
    primes.sort(key=lambda t: (len(t), t))
    return FerrersInvariants(ht, pd, PrimeSet(tuple(xs + ys), tuple(primes)), unmixed)
