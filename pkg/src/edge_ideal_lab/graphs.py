"""Labeled simple graphs: parsing, bipartite structure, covers, matchings,
pure orders, and staircase-shaped bipartite constructors.

Vertex identity is by name; 0-based indices are an internal encoding.
Adjacency is kept as one bitmask per vertex.  All values are immutable and
every operation is a pure function.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, FormatError


class Graph:
    """Immutable simple undirected graph with named vertices."""

    __slots__ = ("names", "adj", "_index")

    def __init__(self, names, edges=()):
        names = tuple(str(nm) for nm in names)
        if len(set(names)) != len(names):
            raise DomainError("vertex names must be pairwise distinct")
        index = {nm: i for i, nm in enumerate(names)}
        adj = [0] * len(names)
        for u, v in edges:
            try:
                i, j = index[u], index[v]
            except KeyError as exc:
                raise DomainError(f"unknown vertex in edge: {exc.args[0]!r}") from None
            if i == j:
                raise DomainError(f"loop edge at {u!r}")
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        self.names = names
        self.adj = tuple(adj)
        self._index = index

    # -- basic accessors ---------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.names)

    def index_of(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise DomainError(f"unknown vertex {name!r}") from None

    def has_edge(self, u: str, v: str) -> bool:
        return bool(self.adj[self.index_of(u)] >> self.index_of(v) & 1)

    def degree(self, name: str) -> int:
        return self.adj[self.index_of(name)].bit_count()

    def neighbors(self, name: str) -> tuple[str, ...]:
        return self._names_of(self.adj[self.index_of(name)])

    def edges(self) -> tuple[tuple[str, str], ...]:
        out = []
        for i in range(self.n):
            m = self.adj[i] >> (i + 1) << (i + 1)
            while m:
                j = (m & -m).bit_length() - 1
                out.append((self.names[i], self.names[j]))
                m &= m - 1
        return tuple(out)

    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    def _names_of(self, mask: int) -> tuple[str, ...]:
        out = []
        while mask:
            v = (mask & -mask).bit_length() - 1
            out.append(self.names[v])
            mask &= mask - 1
        return tuple(out)

    def _mask_of(self, names) -> int:
        mask = 0
        for nm in names:
            mask |= 1 << self.index_of(nm)
        return mask

    # -- derived graphs ----------------------------------------------------

    def induced(self, keep_names) -> "Graph":
        """Induced subgraph on the given vertices, original name order kept."""
        keep = set(keep_names)
        unknown = keep - set(self.names)
        if unknown:
            raise DomainError(f"unknown vertices {sorted(unknown)!r}")
        names = [nm for nm in self.names if nm in keep]
        edges = [(u, v) for u, v in self.edges() if u in keep and v in keep]
        return Graph(names, edges)

    def without(self, drop_names) -> "Graph":
        """Delete the given vertices (induced subgraph on the rest)."""
        drop = set(drop_names)
        for nm in drop:
            self.index_of(nm)
        return self.induced([nm for nm in self.names if nm not in drop])

    # -- equality ----------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.names == other.names
            and self.adj == other.adj
        )

    def __hash__(self):
        return hash((self.names, self.adj))

    def __repr__(self):
        return f"Graph({len(self.names)} vertices, {self.edge_count()} edges)"


@dataclass(frozen=True)
class BipartitePartition:
    """A 2-coloring: every edge joins side_x and side_y."""

    side_x: tuple[str, ...]
    side_y: tuple[str, ...]


@dataclass(frozen=True)
class PureOrder:
    """Perfect matching (x-index, y-index pairs) satisfying the transitivity
    condition: edges {x_a, y_b} and {x_b, y_c} with a, b, c distinct force
    the edge {x_a, y_c}."""

    pairing: tuple[tuple[int, int], ...]

    def pairs_by_name(self, g: Graph) -> tuple[tuple[str, str], ...]:
        return tuple((g.names[i], g.names[j]) for i, j in self.pairing)


class FerrersPartition:
    """Weakly decreasing positive integers with 1-based jump positions.

    jumps = (c_1=1, c_2, ..., c_k, c_{k+1}=n+1); the sequence is constant on
    [c_i, c_{i+1}-1] and strictly drops at each c_i with i >= 2.
    """

    __slots__ = ("lam", "jumps")

    def __init__(self, lam):
        lam = tuple(int(v) for v in lam)
        if not lam:
            raise DomainError("partition must be nonempty")
        if any(v <= 0 for v in lam):
            raise DomainError("partition entries must be positive")
        if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
            raise DomainError("partition must be weakly decreasing")
        jumps = [1]
        for j in range(2, len(lam) + 1):
            if lam[j - 1] < lam[j - 2]:
                jumps.append(j)
        jumps.append(len(lam) + 1)
        self.lam = lam
        self.jumps = tuple(jumps)

    @property
    def n(self) -> int:
        return len(self.lam)

    @property
    def m(self) -> int:
        return self.lam[0]

    def value(self, j: int) -> int:
        """lambda_j with the convention lambda_{n+1} = 0 (1-based j)."""
        if 1 <= j <= self.n:
            return self.lam[j - 1]
        if j == self.n + 1:
            return 0
        raise DomainError(f"index {j} out of range")

    def __eq__(self, other):
        return isinstance(other, FerrersPartition) and self.lam == other.lam

    def __hash__(self):
        return hash(self.lam)

    def __repr__(self):
        return f"FerrersPartition{self.lam}"


# -- parsing ---------------------------------------------------------------

def parse_graph_document(text: str) -> tuple[Graph, BipartitePartition | None]:
    """Parse an edge-list document.

    One edge per line (two whitespace-separated names); '#'-lines are
    comments except the optional "#X:"/"#Y:" headers forcing a bipartition
    (and allowing isolated vertices to be declared).
    """
    names: list[str] = []
    seen: set[str] = set()
    edges: list[tuple[str, str]] = []
    forced_x: list[str] = []
    forced_y: list[str] = []

    def intern(nm: str) -> str:
        if nm not in seen:
            seen.add(nm)
            names.append(nm)
        return nm

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            low = line[1:].lstrip()
            for tag, side in (("X:", forced_x), ("Y:", forced_y)):
                if low.startswith(tag):
                    for nm in low[len(tag):].split():
                        side.append(intern(nm))
                    break
            continue
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: expected two vertex names, got {len(parts)}")
        u, v = parts
        if u == v:
            raise FormatError(f"line {lineno}: loop edge {u!r} {v!r}")
        edges.append((intern(u), intern(v)))

    g = Graph(names, edges)
    part = None
    if forced_x or forced_y:
        xs, ys = set(forced_x), set(forced_y)
        if xs & ys:
            raise FormatError("forced sides overlap")
        if xs | ys != set(names):
            raise FormatError("forced sides must cover every vertex")
        for u, v in edges:
            if (u in xs) == (v in xs):
                raise FormatError(f"edge {u!r} {v!r} lies inside one forced side")
        part = BipartitePartition(tuple(forced_x), tuple(forced_y))
    return g, part


def parse_graph(text: str) -> Graph:
    """Parse an edge-list document to a Graph (headers allowed, ignored)."""
    return parse_graph_document(text)[0]


def graph_to_edgelist(g: Graph) -> str:
    """Serialize a graph to the edge-list format (round-trippable).

    Writes "#X:"/"#Y:" headers when the graph is bipartite so isolated
    vertices survive the round trip.
    """
    lines = []
    part = bipartition(g)
    if part is not None and g.n:
        lines.append("#X: " + " ".join(part.side_x))
        lines.append("#Y: " + " ".join(part.side_y))
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + ("\n" if lines else "")


# -- bipartite structure ---------------------------------------------------

def bipartition(g: Graph) -> BipartitePartition | None:
    """2-color the graph; None iff it has an odd cycle.

    Per connected component, the side containing the smallest vertex index
    goes to side_x.
    """
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] != -1:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            m = g.adj[v]
            while m:
                u = (m & -m).bit_length() - 1
                m &= m - 1
                if color[u] == -1:
                    color[u] = 1 - color[v]
                    stack.append(u)
                elif color[u] == color[v]:
                    return None
    side_x = tuple(g.names[i] for i in range(g.n) if color[i] == 0)
    side_y = tuple(g.names[i] for i in range(g.n) if color[i] == 1)
    return BipartitePartition(side_x, side_y)


# -- neighborhoods ---------------------------------------------------------

def closed_neighborhood(g: Graph, vertices) -> tuple[str, ...]:
    """S together with every vertex adjacent to S, in index order."""
    mask = g._mask_of(vertices)
    out = mask
    m = mask
    while m:
        v = (m & -m).bit_length() - 1
        out |= g.adj[v]
        m &= m - 1
    return g._names_of(out)


def delete_closed_neighborhood(g: Graph, vertices) -> Graph:
    """Induced subgraph on V minus N[S]; isolated survivors are retained."""
    dropped = set(closed_neighborhood(g, vertices))
    return g.induced([nm for nm in g.names if nm not in dropped])


# -- independent sets and covers --------------------------------------------

def _maximal_independent_masks(g: Graph) -> list[int]:
    """All maximal independent sets as bitmasks (maximal cliques of the
    complement, Bron-Kerbosch with pivoting)."""
    n = g.n
    if n == 0:
        return [0]
    full = (1 << n) - 1
    comp = [full & ~(g.adj[v] | (1 << v)) for v in range(n)]
    out: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            return
        pivot_pool = p | x
        pivot = (pivot_pool & -pivot_pool).bit_length() - 1
        best = pivot
        best_cnt = (p & comp[pivot]).bit_count()
        m = pivot_pool
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            c = (p & comp[u]).bit_count()
            if c > best_cnt:
                best, best_cnt = u, c
        cand = p & ~comp[best]
        while cand:
            v = (cand & -cand).bit_length() - 1
            bit = 1 << v
            cand &= cand - 1
            expand(r | bit, p & comp[v], x & comp[v])
            p &= ~bit
            x |= bit

    expand(0, full, 0)
    return out


def maximal_independent_sets(g: Graph) -> tuple[tuple[str, ...], ...]:
    """Maximal independent sets, sorted by size then lexicographically."""
    sets = [g._names_of(m) for m in _maximal_independent_masks(g)]
    return tuple(sorted(sets, key=lambda t: (len(t), t)))


def minimal_vertex_covers(g: Graph) -> tuple[tuple[str, ...], ...]:
    """Complements of maximal independent sets, sorted by size then name."""
    full = (1 << g.n) - 1
    covers = [g._names_of(full & ~m) for m in _maximal_independent_masks(g)]
    return tuple(sorted(covers, key=lambda t: (len(t), t)))


def is_unmixed(g: Graph) -> bool:
    """True iff all minimal vertex covers share one cardinality."""
    sizes = {g.n - m.bit_count() for m in _maximal_independent_masks(g)}
    return len(sizes) <= 1


# -- pure orders -------------------------------------------------------------

def _pairing_condition_holds(rows: list[int]) -> bool:
    """Transitivity over matched-pair indices: rows[a] is the set of pairs b
    with x_a adjacent to y_b.  Requires rows[b] minus {a, b} inside rows[a]
    whenever b is in rows[a]."""
    n = len(rows)
    for a in range(n):
        m = rows[a] & ~(1 << a)
        while m:
            b = (m & -m).bit_length() - 1
            m &= m - 1
            need = rows[b] & ~(1 << a) & ~(1 << b)
            if need & ~rows[a]:
                return False
    return True


def check_pure_order(g: Graph, order: PureOrder) -> bool:
    """Re-verify a pairing: perfect matching of edges + transitivity."""
    pairs = order.pairing
    xs = [i for i, _ in pairs]
    ys = [j for _, j in pairs]
    if len(set(xs)) != len(pairs) or len(set(ys)) != len(pairs):
        return False
    if set(xs) | set(ys) != set(range(g.n)):
        return False
    for i, j in pairs:
        if not g.adj[i] >> j & 1:
            return False
    rows = [0] * len(pairs)
    for a, (xi, _) in enumerate(pairs):
        for b, (_, yj) in enumerate(pairs):
            if g.adj[xi] >> yj & 1:
                rows[a] |= 1 << b
    return _pairing_condition_holds(rows)


def find_pure_order(g: Graph) -> PureOrder | None:
    """Search perfect matchings (lexicographic backtracking) for one whose
    pairing satisfies the transitivity condition; None iff none exists.

    Preconditions: bipartite, no isolated vertex.
    """
    part = bipartition(g)
    if part is None:
        raise DomainError("graph is not bipartite")
    if any(g.adj[v] == 0 for v in range(g.n)):
        raise DomainError("graph has an isolated vertex")
    xs = [g.index_of(nm) for nm in part.side_x]
    ys = [g.index_of(nm) for nm in part.side_y]
    if len(xs) != len(ys):
        return None
    n = len(xs)
    ypos = {v: k for k, v in enumerate(ys)}

    assigned: list[int] = []  # assigned[a] = y-slot matched to xs[a]
    used = [False] * n

    def complete_ok() -> bool:
        rows = [0] * n
        for a in range(n):
            xi = xs[a]
            for b in range(n):
                if g.adj[xi] >> ys[assigned[b]] & 1:
                    rows[a] |= 1 << b
        return _pairing_condition_holds(rows)

    def backtrack(a: int) -> bool:
        if a == n:
            return complete_ok()
        m = g.adj[xs[a]]
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            k = ypos[v]
            if not used[k]:
                used[k] = True
                assigned.append(k)
                if backtrack(a + 1):
                    return True
                assigned.pop()
                used[k] = False
        return False

    if backtrack(0):
        return PureOrder(tuple((xs[a], ys[assigned[a]]) for a in range(n)))
    return None


# -- constructors ------------------------------------------------------------

def ferrers_graph(lam) -> tuple[Graph, BipartitePartition]:
    """Staircase bipartite graph: x_i adjacent to y_1..y_{lambda_i}."""
    if not isinstance(lam, FerrersPartition):
        lam = FerrersPartition(lam)
    n, m = lam.n, lam.m
    xs = [f"x{i}" for i in range(1, n + 1)]
    ys = [f"y{j}" for j in range(1, m + 1)]
    edges = [(xs[i], ys[j]) for i in range(n) for j in range(lam.lam[i])]
    return Graph(xs + ys, edges), BipartitePartition(tuple(xs), tuple(ys))


def complete_bipartite(m: int, n: int) -> Graph:
    """K_{m,n} on x1..xm, y1..yn."""
    if m < 1 or n < 1:
        raise DomainError("sides must have at least one vertex")
    xs = [f"x{i}" for i in range(1, m + 1)]
    ys = [f"y{j}" for j in range(1, n + 1)]
    return Graph(xs + ys, [(x, y) for x in xs for y in ys])
