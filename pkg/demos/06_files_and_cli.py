"""
Graph files and the command line
================================

Graphs live in small ``.zpg`` text files.  The same reports are available
through ``zpgraph <subcommand>`` once the package is installed.
"""

import tempfile
from pathlib import Path

from zpgraph import figure1
from zpgraph.cli import run_command
from zpgraph.io import parse_document, serialize_graph, to_dot

text = serialize_graph(figure1(), name="figure1", notes=["chain of four looped P^1s"])
print(text)
doc = parse_document(text)
print(doc.name, doc.notes)
print(to_dot(doc.graph, doc.name))

with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "figure1.zpg"
    path.write_text(text)
    # exit code 2: strong verdict is false at n=2
    code = run_command(["analyze", "--graph", str(path), "--n", "2", "--no-residue", "--require"])
    print("exit code", code)

run_command(["detcount", "--n", "2", "--g", "2", "--q", "2"])
