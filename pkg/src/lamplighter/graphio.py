"""Labeled graphs and their byte-stable text serializations."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from xml.sax.saxutils import escape, quoteattr

__all__ = ["LabeledGraph", "export", "import_json", "FORMATS"]

FORMATS = ("dot", "graphml", "edge-csv", "json")


@dataclass
class LabeledGraph:
    """Vertices are canonical string keys, listed by BFS layer then key.

    ``objects`` maps keys back to the group elements or vertices they name and
    is not serialized.
    """

    kind: str
    root: str
    vertices: list
    layers: dict
    edges: list  # (source key, target key, label), sorted
    objects: dict = field(default_factory=dict, compare=False, repr=False)

    def __len__(self):
        return len(self.vertices)

    def degree(self, key: str) -> int:
        return sum((s == key) + (t == key) for s, t, _ in self.edges)

    def degrees(self) -> dict:
        out = dict.fromkeys(self.vertices, 0)
        for s, t, _ in self.edges:
            out[s] += 1
            out[t] += 1
        return out


def _dot_quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _to_dot(g: LabeledGraph) -> str:
    lines = ["digraph {"]
    for v in g.vertices:
        lines.append(f"  {_dot_quote(v)} [layer={g.layers[v]}];")
    for s, t, label in g.edges:
        lines.append(f"  {_dot_quote(s)} -> {_dot_quote(t)} [label={_dot_quote(label)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _to_graphml(g: LabeledGraph) -> str:
    index = {v: f"n{i}" for i, v in enumerate(g.vertices)}
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<graphml xmlns="http://graphml.graphdrawing.org/xmlns">',
        '  <key id="label" for="all" attr.name="label" attr.type="string"/>',
        '  <key id="layer" for="node" attr.name="layer" attr.type="string"/>',
        f'  <graph id={quoteattr(g.kind)} edgedefault="directed">',
    ]
    for v in g.vertices:
        lines.append(f"    <node id={quoteattr(index[v])}>")
        lines.append(f'      <data key="label">{escape(v)}</data>')
        lines.append(f'      <data key="layer">{g.layers[v]}</data>')
        lines.append("    </node>")
    for i, (s, t, label) in enumerate(g.edges):
        lines.append(f"    <edge id=\"e{i}\" source={quoteattr(index[s])} target={quoteattr(index[t])}>")
        lines.append(f'      <data key="label">{escape(label)}</data>')
        lines.append("    </edge>")
    lines += ["  </graph>", "</graphml>"]
    return "\n".join(lines) + "\n"


def _to_csv(g: LabeledGraph) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["source", "target", "label"])
    w.writerows(g.edges)
    return buf.getvalue()


def _to_json(g: LabeledGraph) -> str:
    data = {
        "kind": g.kind,
        "root": g.root,
        "vertices": [{"key": v, "layer": g.layers[v]} for v in g.vertices],
        "edges": [{"source": s, "target": t, "label": label} for s, t, label in g.edges],
    }
    return json.dumps(data, sort_keys=True, indent=1) + "\n"


def export(graph: LabeledGraph, fmt: str) -> str:
    writers = {"dot": _to_dot, "graphml": _to_graphml, "edge-csv": _to_csv, "json": _to_json}
    if fmt not in writers:
        raise ValueError(f"unknown export format {fmt!r}; choose from {', '.join(FORMATS)}")
    return writers[fmt](graph)


def import_json(text: str) -> LabeledGraph:
    data = json.loads(text)
    vertices = [v["key"] for v in data["vertices"]]
    return LabeledGraph(
        kind=data["kind"],
        root=data["root"],
        vertices=vertices,
        layers={v["key"]: int(v["layer"]) for v in data["vertices"]},
        edges=[(e["source"], e["target"], e["label"]) for e in data["edges"]],
    )
