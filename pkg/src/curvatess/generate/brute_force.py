"""Reference enumeration of small sphere quadrangulations.

This is the oracle the fast generator is checked against, so it shares no
search code with it.  Squares are glued edge to edge.  A vertex under
construction is the run of square corners already glued around it; the
search always works on the incomplete vertex holding the smallest corner and
closes it clockwise, pairing its open clockwise side either with a side of a
fresh square or with an open side on the same boundary circle (which keeps
the surface a sphere).  Vertex runs are recomputed by walking, never cached.

Only rootings whose root vertex has maximum degree and whose first neighbour
has maximum degree among the root's neighbours are completed.  Every map has
such a rooting, so after canonical deduplication the output is complete.
"""

from __future__ import annotations

from ..canonical import canonical_code
from ..maps import EmbeddedMap, connectivity, from_face_gluing

__all__ = ["brute_force_quadrangulations", "MAX_BRUTE_FORCE_FACES"]

MAX_BRUTE_FORCE_FACES = 12


def _nxt(d):
    return d - d % 4 + (d + 1) % 4


def _prv(d):
    return d - d % 4 + (d + 3) % 4


class _Squares:
    def __init__(self, max_faces: int):
        self.max_faces = max_faces
        self.alpha = [-1] * 4
        self.found: dict = {}

    # dart d runs along its square from corner d to corner nxt(d); the
    # vertex at corner d is its tail, and sigma(d) = nxt(alpha(d)).

    def run_of(self, c):
        """Corners around the vertex at ``c`` counter-clockwise, and closedness."""
        alpha = self.alpha
        x = c
        while True:
            a = alpha[(x & ~3) | ((x + 3) & 3)]
            if a < 0:
                break
            x = a
            if x == c:
                out = [c]
                a = alpha[c]
                y = (a & ~3) | ((a + 1) & 3)
                while y != c:
                    out.append(y)
                    a = alpha[y]
                    y = (a & ~3) | ((a + 1) & 3)
                return out, True
        out = [x]
        a = alpha[x]
        while a >= 0:
            x = (a & ~3) | ((a + 1) & 3)
            out.append(x)
            a = alpha[x]
        return out, False

    def boundary(self, s):
        """Open darts following ``s`` around its boundary circle."""
        alpha = self.alpha
        out = []
        x = s
        while True:
            y = _nxt(x)
            while alpha[y] >= 0:
                y = _nxt(alpha[y])
            if y == s:
                return out
            out.append(y)
            x = y

    def vertex_ok(self, c, limit) -> bool:
        """Degree bound, no loop and no repeated neighbour at the vertex of ``c``."""
        run, closed = self.run_of(c)
        if len(run) > limit or (closed and len(run) < 2):
            return False
        mine = set(run)
        seen = set()
        alpha = self.alpha
        for x in run:
            if alpha[x] < 0:
                continue
            key = min(self.run_of(_nxt(x))[0])
            if key in mine or key in seen:
                return False
            seen.add(key)
        return True

    def second_ok(self) -> bool:
        second, closed = self.run_of(1)
        if not closed:
            return True
        bound = len(second)
        return all(len(self.run_of(_nxt(x))[0]) <= bound for x in self.run_of(0)[0])

    def search(self, start, rootdeg):
        alpha = self.alpha
        n = len(alpha)
        c = start
        while c < n:
            run, closed = self.run_of(c)
            if not closed:
                break
            c += 1
        if c == n:
            self.emit()
            return
        if rootdeg is None and c > 0:
            rootdeg = len(self.run_of(0)[0])
        if c > 1 and not self.second_ok():
            return
        limit = rootdeg if rootdeg is not None else 4 * self.max_faces
        s = _prv(run[0])
        # a closed walk in a bipartite map is even, so circles must split evenly
        for t in self.boundary(s)[::2]:
            alpha[s] = t
            alpha[t] = s
            if self.vertex_ok(s, limit) and self.vertex_ok(t, limit):
                self.search(c, rootdeg)
            alpha[s] = -1
            alpha[t] = -1
        if n // 4 < self.max_faces:
            alpha.extend((-1, -1, -1, -1))
            alpha[s] = n
            alpha[n] = s
            if self.vertex_ok(s, limit) and self.vertex_ok(n, limit):
                self.search(c, rootdeg)
            alpha[s] = -1
            del alpha[n:]

    def emit(self):
        n = len(self.alpha)
        m = from_face_gluing([_nxt(d) for d in range(n)], self.alpha)
        if m.euler_characteristic() != 2 or not m.is_simple:
            return
        code = canonical_code(m)
        if code not in self.found and connectivity(m, cap=2) >= 2:
            self.found[code] = m


def brute_force_quadrangulations(max_faces: int) -> list[EmbeddedMap]:
    """All simple 2-connected sphere quadrangulations with at most ``max_faces`` faces.

    Sorted by canonical code.  Refuses bounds above 12.
    """
    if max_faces > MAX_BRUTE_FORCE_FACES:
        raise ValueError(f"brute force is limited to {MAX_BRUTE_FORCE_FACES} faces")
    if max_faces < 2:
        return []
    s = _Squares(max_faces)
    s.search(0, None)
    return [s.found[c] for c in sorted(s.found)]
