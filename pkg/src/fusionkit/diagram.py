"""Frobenius diagrams: bipartite multiplicity graphs between the irreducibles
of a group and of a subgroup, plus DOT export."""

from __future__ import annotations

from dataclasses import dataclass

from .characters import character_table, frobenius_multiplicity
from .groups import FiniteGroup, SubgroupEmbedding


@dataclass(frozen=True)
class FrobeniusDiagram:
    """Circle nodes are irreducibles of ``G``, bullet nodes those of ``G0``.

    ``edges`` holds ``(circle index, bullet index, multiplicity)`` with
    multiplicity at least 1, sorted by (circle, bullet).
    """

    circle_nodes: tuple[tuple[str, int], ...]
    bullet_nodes: tuple[tuple[str, int], ...]
    edges: tuple[tuple[int, int, int], ...]
    index: int = 1

    def multiplicity(self, i: int, t: int) -> int:
        for a, b, m in self.edges:
            if (a, b) == (i, t):
                return m
        return 0

    def degree_identity_defects(self) -> list[int]:
        """Bullet nodes where ``sum_pi m * deg(pi) != [G:G0] * deg(tau)``."""
        totals = [0] * len(self.bullet_nodes)
        for i, t, m in self.edges:
            totals[t] += m * self.circle_nodes[i][1]
        return [t for t, (_, deg) in enumerate(self.bullet_nodes) if totals[t] != self.index * deg]


def frobenius_diagram(G: FiniteGroup, H: SubgroupEmbedding) -> FrobeniusDiagram:
    table_G = character_table(G)
    table_H = character_table(H.as_group)
    edges = []
    for i, pi in enumerate(table_G):
        for t, tau in enumerate(table_H):
            m = frobenius_multiplicity(tau, pi, H)
            if m:
                edges.append((i, t, m))
    d = FrobeniusDiagram(
        tuple((f"γ{i}", int(deg)) for i, deg in enumerate(table_G.degrees)),
        tuple((f"ρ{t}", int(deg)) for t, deg in enumerate(table_H.degrees)),
        tuple(edges),
        H.index,
    )
    bad = d.degree_identity_defects()
    if bad:
        raise AssertionError(f"degree identity fails at bullet nodes {bad}")
    return d


def emit_dot(d: FrobeniusDiagram, name: str = "frobenius") -> str:
    """Deterministic DOT text; bullets are filled, multiplicities above 1 become labels."""
    lines = [f'graph "{name}" {{', "  node [shape=circle, fontname=serif];"]
    for i, (label, deg) in enumerate(d.circle_nodes):
        lines.append(f'  c{i} [label="{label}", xlabel="{deg}", style=solid];')
    for t, (label, deg) in enumerate(d.bullet_nodes):
        lines.append(f'  b{t} [label="{label}", xlabel="{deg}", style=filled, fillcolor=black, fontcolor=white];')
    for i, t, m in d.edges:
        attr = f' [label="{m}"]' if m > 1 else ""
        lines.append(f"  c{i} -- b{t}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"
