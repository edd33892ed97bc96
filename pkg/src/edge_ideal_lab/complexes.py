"""Simplicial complexes on named ground sets: independence complexes,
links, restrictions, and facet-graph connectivity in codimension k.

A complex stores its facets as bitmasks over the ground order.  The void
complex (no facets) and the empty complex (single facet {}) are distinct
values.  Links and restrictions keep the surviving ground vertices even
when they appear in no face, so ring-variable bookkeeping downstream stays
aligned with the ambient polynomial ring.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, FormatError
from .graphs import Graph, _maximal_independent_masks


def _bits(mask: int):
    while mask:
        yield (mask & -mask).bit_length() - 1
        mask &= mask - 1


def _maximalize(masks) -> tuple[int, ...]:
    """Inclusion-maximal elements, sorted numerically (colex on subsets)."""
    uniq = sorted(set(masks), key=lambda m: (-m.bit_count(), m))
    out: list[int] = []
    for m in uniq:
        if not any(m & ~kept == 0 for kept in out):
            out.append(m)
    return tuple(sorted(out))


class SimplicialComplex:
    """Ground set (ordered names) plus an antichain of facets."""

    __slots__ = ("ground", "facet_masks", "_index")

    def __init__(self, ground, facets):
        ground = tuple(str(nm) for nm in ground)
        if len(set(ground)) != len(ground):
            raise DomainError("ground vertices must be pairwise distinct")
        index = {nm: i for i, nm in enumerate(ground)}
        masks = []
        for f in facets:
            m = 0
            for nm in f:
                if nm not in index:
                    raise DomainError(f"facet vertex {nm!r} not in ground set")
                m |= 1 << index[nm]
            masks.append(m)
        masks = sorted(set(masks))
        for a in masks:
            for b in masks:
                if a != b and a & ~b == 0:
                    raise DomainError("facets must form an antichain")
        self.ground = ground
        self.facet_masks = tuple(masks)
        self._index = index

    @classmethod
    def from_faces(cls, ground, faces) -> "SimplicialComplex":
        """Build from an arbitrary face family (maximalizes)."""
        ground = tuple(ground)
        index = {nm: i for i, nm in enumerate(ground)}
        masks = []
        for f in faces:
            m = 0
            for nm in f:
                m |= 1 << index[nm]
            masks.append(m)
        return cls._from_masks(ground, _maximalize(masks))

    @classmethod
    def _from_masks(cls, ground, masks) -> "SimplicialComplex":
        out = cls.__new__(cls)
        out.ground = tuple(ground)
        out.facet_masks = tuple(sorted(masks))
        out._index = {nm: i for i, nm in enumerate(out.ground)}
        return out

    # -- views ---------------------------------------------------------------

    @property
    def facets(self) -> tuple[tuple[str, ...], ...]:
        return tuple(self._names_of(m) for m in self.facet_masks)

    def is_void(self) -> bool:
        return not self.facet_masks

    def _names_of(self, mask: int) -> tuple[str, ...]:
        return tuple(self.ground[i] for i in _bits(mask))

    def _mask_of(self, names) -> int:
        m = 0
        for nm in names:
            if nm not in self._index:
                raise DomainError(f"vertex {nm!r} not in ground set")
            m |= 1 << self._index[nm]
        return m

    def has_face(self, names) -> bool:
        m = self._mask_of(names)
        return any(m & ~f == 0 for f in self.facet_masks)

    def __contains__(self, names) -> bool:
        try:
            return self.has_face(names)
        except DomainError:
            return False

    def __eq__(self, other):
        return (
            isinstance(other, SimplicialComplex)
            and self.ground == other.ground
            and self.facet_masks == other.facet_masks
        )

    def __hash__(self):
        return hash((self.ground, self.facet_masks))

    def __repr__(self):
        return f"SimplicialComplex({len(self.ground)} vertices, {len(self.facet_masks)} facets)"


@dataclass(frozen=True)
class FacetPath:
    """A facet sequence with the minimum dimension of consecutive meets."""

    facets: tuple[tuple[str, ...], ...]
    min_intersection_dim: int


# -- construction -------------------------------------------------------------

def independence_complex(g: Graph) -> SimplicialComplex:
    """Faces are the independent vertex sets of the graph."""
    return SimplicialComplex._from_masks(g.names, sorted(_maximal_independent_masks(g)))


def parse_complex(text: str) -> SimplicialComplex:
    """One facet per line (whitespace-separated names); '#ground:' header
    may declare extra ground vertices.  An empty document is the complex {}
    on an empty ground set."""
    ground: list[str] = []
    seen: set[str] = set()
    facets: list[tuple[str, ...]] = []

    def intern(nm: str) -> str:
        if nm not in seen:
            seen.add(nm)
            ground.append(nm)
        return nm

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            low = line[1:].lstrip()
            if low.startswith("ground:"):
                for nm in low[len("ground:"):].split():
                    intern(nm)
            continue
        parts = line.split()
        if len(parts) != len(set(parts)):
            raise FormatError(f"line {lineno}: repeated vertex in facet")
        facets.append(tuple(intern(p) for p in parts))
    if not facets:
        facets = [()]
    return SimplicialComplex.from_faces(ground, facets)


def complex_to_text(d: SimplicialComplex) -> str:
    lines = []
    if d.ground:
        lines.append("#ground: " + " ".join(d.ground))
    lines.extend(" ".join(f) for f in d.facets if f)
    return "\n".join(lines) + ("\n" if lines else "")


# -- elementary operations ----------------------------------------------------

def dimension(d: SimplicialComplex) -> int:
    """Max facet size minus one; the empty complex {} has dimension -1."""
    if d.is_void():
        raise DomainError("dimension of the void complex is undefined")
    return max(m.bit_count() for m in d.facet_masks) - 1


def is_pure(d: SimplicialComplex) -> bool:
    if d.is_void():
        raise DomainError("purity of the void complex is undefined")
    return len({m.bit_count() for m in d.facet_masks}) == 1


def link(d: SimplicialComplex, face) -> SimplicialComplex:
    """Faces disjoint from F whose union with F is a face; ground keeps
    every vertex outside F."""
    fmask = d._mask_of(face)
    if not any(fmask & ~m == 0 for m in d.facet_masks):
        raise DomainError("link taken at a non-face")
    new_ground = [nm for nm in d.ground if not fmask >> d._index[nm] & 1]
    newpos = {nm: i for i, nm in enumerate(new_ground)}
    masks = []
    for m in d.facet_masks:
        if fmask & ~m == 0:
            rest = m & ~fmask
            masks.append(sum(1 << newpos[nm] for nm in d._names_of(rest)))
    # facets containing F stay inclusion-incomparable after removing F
    return SimplicialComplex._from_masks(new_ground, sorted(set(masks)))


def restrict(d: SimplicialComplex, vertices) -> SimplicialComplex:
    """Faces contained in W, on ground W."""
    wmask = d._mask_of(vertices)
    new_ground = [nm for nm in d.ground if wmask >> d._index[nm] & 1]
    newpos = {nm: i for i, nm in enumerate(new_ground)}
    masks = []
    for m in d.facet_masks:
        rest = m & wmask
        masks.append(sum(1 << newpos[nm] for nm in d._names_of(rest)))
    return SimplicialComplex._from_masks(new_ground, _maximalize(masks))


def faces_by_card(d: SimplicialComplex) -> dict[int, list[int]]:
    """All faces as bitmasks grouped by cardinality, each list sorted
    numerically (colex).  Includes the empty face at key 0."""
    seen: set[int] = set()
    for fm in d.facet_masks:
        sub = fm
        while True:
            if sub in seen:
                if sub == 0:
                    break
                sub = (sub - 1) & fm
                continue
            seen.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & fm
    out: dict[int, list[int]] = {}
    for m in seen:
        out.setdefault(m.bit_count(), []).append(m)
    for lst in out.values():
        lst.sort()
    return out


# -- codimension-k connectivity ------------------------------------------------

def _facet_adjacency(d: SimplicialComplex, k: int) -> tuple[list[int], list[list[int]]]:
    """Facet list (canonical order) and adjacency lists under the rule
    dim(F meet F') >= dim(D) - k."""
    if d.is_void():
        raise DomainError("connectivity of the void complex is undefined")
    if k < 0:
        raise DomainError("k must be non-negative")
    facets = sorted(d.facet_masks, key=lambda m: d._names_of(m))
    threshold = dimension(d) - k  # need intersection dim >= threshold
    nbr: list[list[int]] = [[] for _ in facets]
    for i in range(len(facets)):
        for j in range(i + 1, len(facets)):
            if (facets[i] & facets[j]).bit_count() - 1 >= threshold:
                nbr[i].append(j)
                nbr[j].append(i)
    return facets, nbr


def connected_in_codim(d: SimplicialComplex, k: int) -> bool:
    """True iff any two facets are joined by a facet sequence whose
    consecutive intersections have dimension >= dim(D) - k."""
    facets, nbr = _facet_adjacency(d, k)
    if len(facets) <= 1:
        return True
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for u in nbr[v]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == len(facets)


def facet_witness_path(d: SimplicialComplex, k: int, source, target) -> FacetPath | None:
    """Shortest facet path between two facets under the codim-k adjacency
    (BFS from the lexicographically least labeling; deterministic), or None
    when they are not connected."""
    facets, nbr = _facet_adjacency(d, k)
    smask, tmask = d._mask_of(source), d._mask_of(target)
    try:
        s = facets.index(smask)
        t = facets.index(tmask)
    except ValueError:
        raise DomainError("witness endpoints must be facets") from None
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
    masks = [facets[i] for i in chain]
    if len(masks) == 1:
        mind = masks[0].bit_count() - 1
    else:
        mind = min((a & b).bit_count() - 1 for a, b in zip(masks, masks[1:]))
    return FacetPath(tuple(d._names_of(m) for m in masks), mind)
