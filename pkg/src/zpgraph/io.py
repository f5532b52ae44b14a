"""Text, JSON and DOT forms of dual graphs.

The ``.zpg`` text format has one declaration per line::

    # name: figure1
    v a genus=0
    v b genus=0
    e a b
    e a a

``v <name> genus=<k>`` declares a vertex, ``e <u> <w>`` an edge (a loop when
``u == w``).  Blank lines and ``#`` comments are ignored, except the
metadata comments ``# name: ...`` and ``# note: ...``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field

from .graph import DualGraph, GraphError

_NAME = re.compile(r"^[A-Za-z0-9_.\-]+$")


class ParseError(GraphError):
    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}" if lineno is not None else message)


@dataclass(frozen=True)
class GraphDocument:
    graph: DualGraph
    name: str | None = None
    notes: tuple[str, ...] = field(default_factory=tuple)


def parse_document(text: str) -> GraphDocument:
    names: list[str] = []
    genera: list[int] = []
    declared: dict[str, int] = {}
    decl_line: dict[str, int] = {}
    edges: list[tuple[int, int]] = []
    doc_name = None
    notes: list[str] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("name:"):
                doc_name = body[5:].strip()
            elif body.startswith("note:"):
                notes.append(body[5:].strip())
            continue
        parts = line.split()
        if parts[0] == "v":
            if len(parts) != 3 or not parts[2].startswith("genus="):
                raise ParseError(f"expected 'v <name> genus=<k>', got {line!r}", lineno)
            name = parts[1]
            if not _NAME.match(name):
                raise ParseError(f"bad vertex name {name!r}", lineno)
            if name in declared:
                raise ParseError(f"vertex {name!r} declared twice", lineno)
            try:
                genus = int(parts[2][len("genus="):])
            except ValueError:
                raise ParseError(f"bad genus in {line!r}", lineno) from None
            if genus < 0:
                raise ParseError(f"negative genus for vertex {name!r}", lineno)
            declared[name] = len(names)
            decl_line[name] = lineno
            names.append(name)
            genera.append(genus)
        elif parts[0] == "e":
            if len(parts) != 3:
                raise ParseError(f"expected 'e <name> <name>', got {line!r}", lineno)
            for name in parts[1:]:
                if name not in declared:
                    raise ParseError(f"edge references undeclared vertex {name!r}", lineno)
            edges.append((declared[parts[1]], declared[parts[2]]))
        else:
            raise ParseError(f"unknown declaration {parts[0]!r}", lineno)
    if not names:
        raise ParseError("document declares no vertices")
    G = DualGraph(tuple(genera), tuple(edges), tuple(names))
    _check_connected(G, decl_line)
    return GraphDocument(G, doc_name, tuple(notes))


def _check_connected(G: DualGraph, decl_line: dict[str, int]):
    if G.is_connected():
        return
    reach = {0}
    frontier = [0]
    adj = G.adjacency()
    while frontier:
        v = frontier.pop()
        for u in range(G.num_vertices):
            if adj[v][u] and u not in reach:
                reach.add(u)
                frontier.append(u)
    stray = next(v for v in range(G.num_vertices) if v not in reach)
    name = G.names[stray]
    raise ParseError(f"disconnected graph: vertex {name!r} is not reachable from {G.names[0]!r}",
                     decl_line.get(name))


def parse_graph(text: str) -> DualGraph:
    return parse_document(text).graph


def serialize_graph(G: DualGraph, name: str | None = None, notes=()) -> str:
    lines = []
    if name:
        lines.append(f"# name: {name}")
    lines.extend(f"# note: {note}" for note in notes)
    lines.extend(f"v {vname} genus={genus}" for vname, genus in zip(G.names, G.genera))
    lines.extend(f"e {G.names[u]} {G.names[w]}" for u, w in G.edges)
    return "\n".join(lines) + "\n"


def serialize_document(doc: GraphDocument) -> str:
    return serialize_graph(doc.graph, doc.name, doc.notes)


def graph_to_json(G: DualGraph) -> dict:
    return {
        "vertices": [{"name": n, "genus": g} for n, g in zip(G.names, G.genera)],
        "edges": [[G.names[u], G.names[w]] for u, w in G.edges],
    }


def graph_from_json(data: dict | str) -> DualGraph:
    if isinstance(data, str):
        data = json.loads(data)
    try:
        names = [str(v["name"]) for v in data["vertices"]]
        genera = [int(v["genus"]) for v in data["vertices"]]
        index = {n: i for i, n in enumerate(names)}
        edges = []
        for u, w in data["edges"]:
            if u not in index or w not in index:
                raise ParseError(f"edge references undeclared vertex {u if u not in index else w!r}")
            edges.append((index[u], index[w]))
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(f"malformed JSON graph: {exc}") from None
    if any(g < 0 for g in genera):
        raise ParseError("negative genus")
    G = DualGraph(tuple(genera), tuple(edges), tuple(names))
    if not G.is_connected():
        raise ParseError("disconnected graph")
    return G


def load_graph(path) -> GraphDocument:
    with open(path) as fh:
        text = fh.read()
    if str(path).endswith(".json") or text.lstrip().startswith("{"):
        data = json.loads(text)
        return GraphDocument(graph_from_json(data), data.get("name"), tuple(data.get("notes", ())))
    return parse_document(text)


def to_dot(G: DualGraph, name: str = "dual") -> str:
    lines = [f'graph "{name}" {{']
    for vname, genus in zip(G.names, G.genera):
        lines.append(f'  "{vname}" [label="{vname}\\ng={genus}"];')
    for u, w in G.edges:
        lines.append(f'  "{G.names[u]}" -- "{G.names[w]}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
