"""Line-oriented text format for signed bi-graphs.

::

    sbg 1
    # comment
    vertex a
    vertex b
    edge a b +
    edge a b -
"""

from __future__ import annotations

from pathlib import Path

from .core import GraphError, Sign, SignedBiGraph


class FormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def parse_sbg(text: str) -> SignedBiGraph:
    g = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = _strip(raw)
        if not line:
            continue
        tok = line.split()
        if g is None:
            if tok != ["sbg", "1"]:
                raise FormatError("expected header 'sbg 1'", lineno)
            g = SignedBiGraph()
            continue
        try:
            if tok[0] == "vertex" and len(tok) == 2:
                g = g.add_vertex(tok[1])
            elif tok[0] == "edge" and len(tok) == 4:
                if tok[3] not in ("+", "-"):
                    raise FormatError(f"bad sign {tok[3]!r}", lineno)
                g = g.add_signed_edge(tok[1], tok[2], Sign.parse(tok[3]))
            else:
                raise FormatError(f"unrecognised line {line!r}", lineno)
        except GraphError as exc:
            raise FormatError(str(exc), lineno) from exc
    if g is None:
        raise FormatError("missing header 'sbg 1'")
    return g


def serialize_sbg(g: SignedBiGraph) -> str:
    lines = ["sbg 1"]
    lines += [f"vertex {v}" for v in g.vertices]
    lines += [f"edge {e.u} {e.v} {e.sign}" for e in g.edges()]
    return "\n".join(lines) + "\n"


def read_sbg(path) -> SignedBiGraph:
    return parse_sbg(Path(path).read_text(encoding="utf-8"))


def write_sbg(g: SignedBiGraph, path) -> None:
    Path(path).write_text(serialize_sbg(g), encoding="utf-8")
