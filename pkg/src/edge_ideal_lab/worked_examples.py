"""Built-in worked examples with their expected invariants, so the example
runner needs no external files.

Two bipartite graphs ship as golden data: a 6+6 unmixed graph (two
complete-bipartite blocks under a dominating pair of vertices) whose ring
has dim 6 and depth 4, and a 4+4 staircase-shaped graph whose ideal is
connected in codimension two without being unmixed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import delete_closed_neighborhood, parse_graph
from .complexes import independence_complex
from .homology import RATIONALS, FieldSpec
from .invariants import (
    classify_graph,
    connected_in_codim_ideal,
    graph_is_acm,
    graph_is_cm,
    minimal_primes,
    prime_witness_sequence,
)

UNMIXED_6X6 = "".join(
    [f"x{i} y{j}\n" for i in (1, 2) for j in range(1, 7)]
    + [f"x{i} y{j}\n" for i in (3, 4) for j in (3, 4)]
    + [f"x{i} y{j}\n" for i in (5, 6) for j in (5, 6)]
)

STAIRCASE_4X4 = (
    "x1 y1\nx1 y2\n"
    "x2 y1\nx2 y2\nx2 y3\n"
    "x3 y1\nx3 y2\nx3 y3\nx3 y4\n"
    "x4 y1\nx4 y2\nx4 y3\nx4 y4\n"
)

ASS_6X6 = frozenset(
    frozenset(p)
    for p in (
        ("x1", "x2", "x3", "x4", "x5", "x6"),
        ("x1", "x2", "x3", "x4", "y5", "y6"),
        ("x1", "x2", "x5", "x6", "y3", "y4"),
        ("x1", "x2", "y3", "y4", "y5", "y6"),
        ("y1", "y2", "y3", "y4", "y5", "y6"),
    )
)

ASS_4X4 = frozenset(
    frozenset(p)
    for p in (
        ("x1", "x2", "x3", "x4"),
        ("x2", "x3", "x4", "y1", "y2"),
        ("x3", "x4", "y1", "y2", "y3"),
        ("y1", "y2", "y3", "y4"),
    )
)


def unmixed_6x6_graph():
    return parse_graph(UNMIXED_6X6)


def staircase_4x4_graph():
    return parse_graph(STAIRCASE_4X4)


@dataclass(frozen=True)
class ExampleCheck:
    name: str
    expected: object
    actual: object

    @property
    def ok(self) -> bool:
        return self.expected == self.actual

    @staticmethod
    def _enc(v):
        if isinstance(v, frozenset):
            return sorted(sorted(p) for p in v)
        return v

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "expected": self._enc(self.expected),
            "actual": self._enc(self.actual),
            "ok": self.ok,
        }


def run_examples(field: FieldSpec = RATIONALS) -> list[ExampleCheck]:
    """Recompute every stated quantity of both worked examples."""
    checks: list[ExampleCheck] = []

    g6 = unmixed_6x6_graph()
    rep6 = classify_graph(g6, field)
    mp6 = minimal_primes(independence_complex(g6))
    checks.append(ExampleCheck("6x6: dim(R/I)", 6, rep6.krull_dim))
    checks.append(ExampleCheck("6x6: depth(R/I)", 4, rep6.depth))
    checks.append(ExampleCheck("6x6: aCM", False, rep6.is_ACM))
    checks.append(ExampleCheck("6x6: unmixed", True, rep6.is_unmixed))
    checks.append(ExampleCheck("6x6: minimal primes", ASS_6X6,
                               frozenset(frozenset(p) for p in mp6.primes)))
    checks.append(ExampleCheck("6x6: connected in codim 2", True,
                               connected_in_codim_ideal(mp6, rep6.height, 2)))
    h6 = delete_closed_neighborhood(g6, ["x6"])
    k6 = delete_closed_neighborhood(g6, ["y5", "y6"])
    checks.append(ExampleCheck("6x6: H = G - N[x6] aCM", True, graph_is_acm(h6, field)))
    checks.append(ExampleCheck("6x6: K = G - N[{y5,y6}] aCM", True, graph_is_acm(k6, field)))
    checks.append(ExampleCheck("6x6: K CM", False, graph_is_cm(k6, field)))

    g4 = staircase_4x4_graph()
    rep4 = classify_graph(g4, field)
    mp4 = minimal_primes(independence_complex(g4))
    checks.append(ExampleCheck("4x4: minimal primes", ASS_4X4,
                               frozenset(frozenset(p) for p in mp4.primes)))
    checks.append(ExampleCheck("4x4: unmixed", False, rep4.is_unmixed))
    checks.append(ExampleCheck("4x4: connected in codim 2", True,
                               connected_in_codim_ideal(mp4, rep4.height, 2)))
    all_x = next(p for p in mp4.primes if all(v.startswith("x") for v in p))
    all_y = next(p for p in mp4.primes if all(v.startswith("y") for v in p))
    seq = prime_witness_sequence(mp4, rep4.height, 2, all_x, all_y)
    max_sum_height = (
        max(len(set(a) | set(b)) for a, b in zip(seq, seq[1:])) if seq else None
    )
    checks.append(ExampleCheck("4x4: witness sums height <= ht(I)+2",
                               True, bool(seq) and max_sum_height <= rep4.height + 2))
    return checks
