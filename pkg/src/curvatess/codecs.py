"""Serialization of maps: planar_code, ASCII adjacency lists and DOT.

planar_code follows the plantri layout: the 15-byte header
``>>planar_code<<`` and then, per map, the vertex count followed by each
vertex's neighbours (1-based) in rotation order, every list closed by a
zero byte.  Neighbours are written in ``sigma`` order, i.e. the
counter-clockwise order of the ASCII lists.
"""

from __future__ import annotations

import string

from .maps import EmbeddedMap, MapError, build_map

__all__ = [
    "PLANAR_CODE_HEADER",
    "CodecError",
    "encode",
    "decode",
    "to_planar_code",
    "from_planar_code",
    "to_ascii",
    "from_ascii",
    "to_dot",
]

PLANAR_CODE_HEADER = b">>planar_code<<"
_NAMES = string.ascii_lowercase + string.ascii_uppercase


class CodecError(ValueError):
    pass


def vertex_name(i: int) -> str:
    if i >= len(_NAMES):
        raise CodecError(f"no single-letter name for vertex {i}")
    return _NAMES[i]


def _record(m: EmbeddedMap) -> bytes:
    n = m.num_vertices
    if n > 255:
        raise CodecError("planar_code supports at most 255 vertices")
    out = bytearray([n])
    for v in range(n):
        out.extend(w + 1 for w in m.neighbors(v))
        out.append(0)
    return bytes(out)


def to_planar_code(maps, header: bool = True) -> bytes:
    if isinstance(maps, EmbeddedMap):
        maps = [maps]
    body = b"".join(_record(m) for m in maps)
    return (PLANAR_CODE_HEADER if header else b"") + body


def from_planar_code(data: bytes) -> list[EmbeddedMap]:
    data = bytes(data)
    if data.startswith(b">>"):
        if not data.startswith(PLANAR_CODE_HEADER):
            raise CodecError("malformed planar_code header")
        data = data[len(PLANAR_CODE_HEADER):]
    out = []
    i = 0
    while i < len(data):
        n = data[i]
        i += 1
        rotations = []
        for _ in range(n):
            nbrs = []
            while True:
                if i >= len(data):
                    raise CodecError("truncated planar_code record")
                b = data[i]
                i += 1
                if b == 0:
                    break
                if b > n:
                    raise CodecError(f"vertex index {b} out of range (n={n})")
                nbrs.append(b - 1)
            rotations.append(nbrs)
        try:
            out.append(build_map(rotations, simple=False))
        except MapError as exc:
            raise CodecError(str(exc)) from None
    return out


def to_ascii(m: EmbeddedMap) -> str:
    """``a:bcde,b:caf,...`` with vertices named by index."""
    return ",".join(
        vertex_name(v) + ":" + "".join(vertex_name(w) for w in m.neighbors(v))
        for v in range(m.num_vertices)
    )


def from_ascii(text: str) -> EmbeddedMap:
    compact = "".join(text.split())
    rotations: dict[str, list[str]] = {}
    for entry in filter(None, compact.split(",")):
        name, sep, nbrs = entry.partition(":")
        if not sep or len(name) != 1:
            raise CodecError(f"malformed adjacency entry {entry!r}")
        if name in rotations:
            raise CodecError(f"vertex {name!r} listed twice")
        rotations[name] = list(nbrs)
    if not rotations:
        raise CodecError("empty adjacency list")
    try:
        return build_map(rotations)
    except MapError as exc:
        raise CodecError(str(exc)) from None


def to_dot(m: EmbeddedMap, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in range(m.num_vertices):
        lines.append(f'  {v} [label="{vertex_name(v) if v < len(_NAMES) else v}"];')
    for e in range(m.num_edges):
        u, w = m.edge_ends(e)
        lines.append(f"  {u} -- {w};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def encode(maps, format: str = "planar_code") -> bytes:
    if format == "planar_code":
        return to_planar_code(maps)
    if isinstance(maps, EmbeddedMap):
        maps = [maps]
    if format in ("ascii_adjacency", "adj"):
        return "".join(to_ascii(m) + "\n" for m in maps).encode()
    if format == "dot":
        return "".join(to_dot(m, f"G{i}") for i, m in enumerate(maps)).encode()
    raise CodecError(f"unknown format {format!r}")


def decode(data: bytes, format: str = "planar_code") -> list[EmbeddedMap]:
    if format == "planar_code":
        return from_planar_code(data)
    if format in ("ascii_adjacency", "adj"):
        text = data.decode() if isinstance(data, (bytes, bytearray)) else data
        return [from_ascii(line) for line in text.splitlines() if line.strip()]
    raise CodecError(f"cannot decode format {format!r}")
