"""Exact linear-algebra model of the space of global differentials on a
stable curve, read off its dual graph.

Coordinates: a holomorphic block of size ``g(v)`` for every vertex, then one
residue variable per edge.  An edge ``e = (u, w)`` carries residue ``+x_e``
on its ``u`` branch and ``-x_e`` on its ``w`` branch; residues at each vertex
must sum to zero.  A loop therefore contributes ``+x_e - x_e = 0`` to its
vertex constraint and its residue variable stays free.

Forcing a differential to vanish on the piece over a vertex ``v`` kills the
holomorphic block of ``v`` and the residues of every edge at ``v``.  On the
piece over an edge it kills that edge's residue.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .exact import exact_rank, nullspace
from .graph import DualGraph, incident_edge_set, total_genus
from .criteria import kernel_closed_form


class Location(NamedTuple):
    """A vertex (``kind == "v"``) or an edge (``kind == "e"``) of a dual graph."""

    kind: str
    index: int

    def __str__(self):
        return f"{self.kind}{self.index}"


def vertex(i: int) -> Location:
    return Location("v", i)


def edge(i: int) -> Location:
    return Location("e", i)


def all_locations(G: DualGraph) -> list[Location]:
    return [vertex(v) for v in range(G.num_vertices)] + [edge(e) for e in range(G.num_edges)]


@dataclass(frozen=True)
class SectionSpaceModel:
    graph: DualGraph
    holo_offset: tuple[int, ...]
    residue_offset: int
    num_vars: int
    orientation: tuple[tuple[int, int], ...]
    constraints: tuple[tuple[int, ...], ...]

    @property
    def dimension(self) -> int:
        return self.num_vars - exact_rank(self.constraints) if self.constraints else self.num_vars

    def holo_vars(self, v: int) -> range:
        start = self.holo_offset[v]
        return range(start, start + self.graph.genera[v])

    def residue_var(self, e: int) -> int:
        return self.residue_offset + e

    def unit_row(self, var: int) -> tuple[int, ...]:
        row = [0] * self.num_vars
        row[var] = 1
        return tuple(row)

    def restriction_rows(self, locations: Iterable[Location]) -> list[tuple[int, ...]]:
        """Vanishing conditions for the given locations, without repeats."""
        G = self.graph
        vars_killed: set[int] = set()
        for loc in locations:
            if loc.kind == "v":
                if not 0 <= loc.index < G.num_vertices:
                    raise ValueError(f"vertex {loc.index} not in graph")
                vars_killed.update(self.holo_vars(loc.index))
                vars_killed.update(self.residue_var(e) for e in incident_edge_set(G, [loc.index]))
            elif loc.kind == "e":
                if not 0 <= loc.index < G.num_edges:
                    raise ValueError(f"edge {loc.index} not in graph")
                vars_killed.add(self.residue_var(loc.index))
            else:
                raise ValueError(f"bad location kind {loc.kind!r}")
        return [self.unit_row(x) for x in sorted(vars_killed)]

    def kernel_dim(self, extra_rows: Sequence[Sequence[int]]) -> int:
        rows = list(self.constraints) + list(extra_rows)
        if not rows:
            return self.num_vars
        return self.num_vars - exact_rank(rows)


def build_section_space(G: DualGraph, flips: Sequence[bool] | None = None) -> SectionSpaceModel:
    """Assemble the model; ``flips[e]`` reverses the orientation of edge ``e``."""
    G.validate()
    offsets = []
    pos = 0
    for x in G.genera:
        offsets.append(pos)
        pos += x
    residue_offset = pos
    num_vars = pos + G.num_edges
    orientation = []
    for e, (u, w) in enumerate(G.edges):
        orientation.append((w, u) if flips is not None and flips[e] else (u, w))
    rows = []
    for v in range(G.num_vertices):
        row = [0] * num_vars
        for e, (tail, head) in enumerate(orientation):
            if tail == v:
                row[residue_offset + e] += 1
            if head == v:
                row[residue_offset + e] -= 1
        rows.append(tuple(row))
    return SectionSpaceModel(G, tuple(offsets), residue_offset, num_vars, tuple(orientation), tuple(rows))


def restriction_kernel_dim(G: DualGraph, S: Iterable[int], model: SectionSpaceModel | None = None) -> int:
    """Dimension of the model subspace vanishing on the pieces over ``S``.

    Computed by exact matrix rank and cross-checked against
    ``sum_{v not in S} g(v) + b1(G - E(S))``.
    """
    S = sorted(set(S))
    model = model or build_section_space(G)
    dim = model.kernel_dim(model.restriction_rows(vertex(v) for v in S))
    closed = kernel_closed_form(G, S)
    if dim != closed:
        raise ArithmeticError(f"kernel dimension {dim} disagrees with closed form {closed}")
    return dim


@dataclass(frozen=True)
class WitnessSpace:
    """Model subspace vanishing on every location of a tuple."""

    locations: tuple[Location, ...]
    dimension: int
    constraints: tuple[tuple[int, ...], ...]
    model: SectionSpaceModel

    def basis(self):
        rows = list(self.model.constraints) + list(self.constraints)
        return nullspace(rows, self.model.num_vars)


def prop1_witness_dim(G: DualGraph, L: Sequence[Location], model: SectionSpaceModel | None = None) -> WitnessSpace:
    if len(L) < 1:
        raise ValueError("location tuple must be nonempty")
    model = model or build_section_space(G)
    rows = model.restriction_rows(L)
    return WitnessSpace(tuple(L), model.kernel_dim(rows), tuple(rows), model)


def h1dr_counts(G: DualGraph, v: int) -> dict:
    """Both available dimension counts for the de Rham cohomology of the piece over ``v``.

    ``stated`` is ``2 g(v) + n_v`` with ``n_v`` the number of node branches
    on the component; ``classical`` is the count for a genus ``g(v)`` curve
    with ``n_v`` punctures, ``2 g(v) + n_v - 1``.
    """
    n_v = G.degree(v)
    gv = G.genera[v]
    return {"vertex": v, "n_v": n_v, "stated": 2 * gv + n_v, "classical": 2 * gv + n_v - 1}


def section_space_dimension(G: DualGraph) -> int:
    dim = build_section_space(G).dimension
    if dim != total_genus(G):
        raise ArithmeticError(f"model dimension {dim} differs from genus {total_genus(G)}")
    return dim
