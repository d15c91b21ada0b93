"""Small named maps built from consistently oriented face lists."""

from __future__ import annotations

from typing import Sequence

from .maps import EmbeddedMap, MapError, from_face_gluing

__all__ = [
    "from_faces",
    "tetrahedron",
    "cube",
    "octahedron",
    "icosahedron",
    "dodecahedron",
    "cuboctahedron",
    "pyramid",
    "prism",
    "bipyramid",
    "antiprism",
    "cycle",
    "star",
]


def from_faces(faces: Sequence[Sequence[int]]) -> EmbeddedMap:
    """Map whose faces are the given vertex cycles.

    Every directed edge ``(u, w)`` must occur in exactly one face walk and
    its reverse in exactly one other position, which fixes an orientation.
    """
    dart = {}
    walks = []
    for face in faces:
        k = len(face)
        walk = []
        for i in range(k):
            key = (face[i], face[(i + 1) % k])
            if key in dart:
                raise MapError(f"directed edge {key} occurs twice")
            dart[key] = len(dart)
            walk.append(dart[key])
        walks.append(walk)
    n = len(dart)
    phi = [0] * n
    for walk in walks:
        for i, d in enumerate(walk):
            phi[d] = walk[(i + 1) % len(walk)]
    alpha = [0] * n
    for (u, w), d in dart.items():
        if (w, u) not in dart:
            raise MapError(f"edge {(u, w)} has no reverse")
        alpha[d] = dart[(w, u)]
    return from_face_gluing(phi, alpha)


def pyramid(p: int) -> EmbeddedMap:
    """``p``-gon base (vertices ``0..p-1``) and apex ``p``."""
    faces = [tuple(range(p - 1, -1, -1))]
    faces += [(i, (i + 1) % p, p) for i in range(p)]
    return from_faces(faces)


def prism(p: int) -> EmbeddedMap:
    faces = [tuple(range(p - 1, -1, -1)), tuple(range(p, 2 * p))]
    faces += [(i, (i + 1) % p, p + (i + 1) % p, p + i) for i in range(p)]
    return from_faces(faces)


def bipyramid(p: int) -> EmbeddedMap:
    """Rim ``0..p-1``, apexes ``p`` and ``p+1``."""
    faces = [(i, (i + 1) % p, p) for i in range(p)]
    faces += [((i + 1) % p, i, p + 1) for i in range(p)]
    return from_faces(faces)


def _antiprism_faces(p: int) -> list[tuple]:
    faces = []
    for i in range(p):
        j = (i + 1) % p
        faces.append((i, j, p + i))
        faces.append((j, p + j, p + i))
    return faces


def antiprism(p: int) -> EmbeddedMap:
    faces = _antiprism_faces(p)
    faces += [tuple(range(p - 1, -1, -1)), tuple(range(p, 2 * p))]
    return from_faces(faces)


def tetrahedron() -> EmbeddedMap:
    return pyramid(3)


def cube() -> EmbeddedMap:
    return prism(4)


def octahedron() -> EmbeddedMap:
    return bipyramid(4)


def icosahedron() -> EmbeddedMap:
    """Pentagonal antiprism with a pyramid on each pentagon."""
    faces = _antiprism_faces(5)
    faces += [((i + 1) % 5, i, 10) for i in range(5)]
    faces += [(5 + i, 5 + (i + 1) % 5, 11) for i in range(5)]
    return from_faces(faces)


def dodecahedron() -> EmbeddedMap:
    from .transforms import dual

    return dual(icosahedron())


def cuboctahedron() -> EmbeddedMap:
    from .transforms import medial

    return medial(cube())


def cycle(n: int) -> EmbeddedMap:
    """``C_n`` on the sphere: two faces of degree ``n``."""
    return from_faces([tuple(range(n)), tuple(range(n - 1, -1, -1))])


def star(n: int) -> EmbeddedMap:
    """``K_{1,n}``: centre ``0`` and leaves ``1..n``, one face."""
    walk = []
    for i in range(1, n + 1):
        walk += [0, i]
    dart = {}
    for i in range(len(walk)):
        dart[(walk[i], walk[(i + 1) % len(walk)])] = i
    k = len(walk)
    phi = [(i + 1) % k for i in range(k)]
    alpha = [dart[(w, u)] for (u, w) in sorted(dart, key=dart.get)]
    return from_face_gluing(phi, alpha)
