"""Graph file formats: JSON edge list, plain matrix, DOT export."""

import json
from importlib import resources

import numpy as np

from .core import GraphError, SignedGraph, from_edge_list

FORMATS = ("json", "matrix", "dot")


class ParseError(GraphError):
    pass


def to_json(sigma, one_indexed=False):
    off = 1 if one_indexed else 0
    edges = [[u + off, v + off, s] for u, v, s in sigma.edges()]
    body = ",\n    ".join(json.dumps(e) for e in edges)
    edges_txt = f"[\n    {body}\n  ]" if edges else "[]"
    return (
        "{\n"
        f'  "n": {sigma.n},\n'
        f'  "one_indexed": {json.dumps(one_indexed)},\n'
        f'  "edges": {edges_txt}\n'
        "}\n"
    )


def read_json(text, one_indexed=None):
    """Parse the JSON edge-list format. Unknown keys (e.g. "comment") are ignored."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    if not isinstance(data, dict) or "n" not in data or "edges" not in data:
        raise ParseError('JSON graph needs "n" and "edges" keys')
    flag = data.get("one_indexed", False) if one_indexed is None else one_indexed
    for i, e in enumerate(data["edges"]):
        if not (isinstance(e, list) and len(e) == 3):
            raise ParseError(f"edge #{i} must be [u, v, s], got {e!r}")
    return from_edge_list(int(data["n"]), data["edges"], one_indexed=bool(flag))


def to_matrix(sigma):
    return "\n".join(" ".join(str(int(x)) for x in row) for row in sigma.adj) + "\n"


def read_matrix(text):
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        try:
            rows.append([int(tok) for tok in line.split()])
        except ValueError as exc:
            raise ParseError(f"line {lineno}: {exc}") from exc
    n = len(rows)
    for lineno, row in enumerate(rows, 1):
        if len(row) != n:
            raise ParseError(f"matrix row {lineno} has {len(row)} entries, expected {n}")
    return SignedGraph(np.array(rows, dtype=np.int64).reshape(n, n))


def to_dot(sigma, name="signed"):
    lines = [f"graph {name} {{"]
    lines += [f"  {v};" for v in range(sigma.n)]
    for u, v, s in sigma.edges():
        style, color = ("solid", "blue") if s > 0 else ("dashed", "red")
        lines.append(f"  {u} -- {v} [style={style}, color={color}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def dump_graph(sigma, fmt="json", one_indexed=False):
    if fmt == "json":
        return to_json(sigma, one_indexed)
    if fmt == "matrix":
        return to_matrix(sigma)
    if fmt == "dot":
        return to_dot(sigma)
    raise ValueError(f"unknown format {fmt!r}; choose from {', '.join(FORMATS)}")


def parse_graph(text, one_indexed=None):
    """JSON if the text starts with '{', plain matrix otherwise."""
    if text.lstrip().startswith("{"):
        return read_json(text, one_indexed)
    return read_matrix(text)


def load_graph(path, one_indexed=None):
    with open(path) as fh:
        return parse_graph(fh.read(), one_indexed)


FIXTURES = ("figure1", "figure2", "figure3")


def fixture(name):
    """One of the shipped figure graphs: figure1, figure2 or figure3."""
    if name not in FIXTURES:
        raise ValueError(f"unknown fixture {name!r}; choose from {', '.join(FIXTURES)}")
    return read_json(resources.files("signed_ste.fixtures").joinpath(f"{name}.json").read_text())
