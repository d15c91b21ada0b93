"""Integer degree combinations for maps with positive corner curvature.

Vertices have degree 3, 4 or 5 and faces have size 3, 4 or 5.  A vertex of
degree 4 or 5 sees only triangles, so vertices are classified by the sorted
face sizes around the degree-3 ones: ``n333``, ``n334``, ..., ``n555``.
"""

from __future__ import annotations

from dataclasses import dataclass, fields

__all__ = ["PATTERNS", "DegreeCombination", "degree_combination_solutions", "filter_combinations"]

PATTERNS = ("333", "334", "335", "344", "345", "355", "444", "445", "455", "555")


@dataclass(frozen=True)
class DegreeCombination:
    v3: int
    v4: int
    v5: int
    f3: int
    f4: int
    f5: int
    v: int
    e: int
    f: int
    n333: int = 0
    n334: int = 0
    n335: int = 0
    n344: int = 0
    n345: int = 0
    n355: int = 0
    n444: int = 0
    n445: int = 0
    n455: int = 0
    n555: int = 0

    def n(self, pattern: str) -> int:
        return getattr(self, "n" + pattern)

    @property
    def vertex_counts(self) -> dict[int, int]:
        return {3: self.v3, 4: self.v4, 5: self.v5}

    @property
    def face_counts(self) -> dict[int, int]:
        return {3: self.f3, 4: self.f4, 5: self.f5}

    def sort_key(self):
        return (self.v, self.v3, self.v4, self.v5, self.f3, self.f4, self.f5,
                self.e, self.f) + tuple(self.n(p) for p in PATTERNS)

    def equations_hold(self) -> bool:
        n = {p: self.n(p) for p in PATTERNS}
        return (
            self.v == self.v3 + self.v4 + self.v5
            and self.f == self.f3 + self.f4 + self.f5
            and self.v - self.e + self.f == 2
            and 2 * self.e == 3 * self.v3 + 4 * self.v4 + 5 * self.v5
            and self.v <= self.f
            and self.v3 == sum(n.values())
            and 3 * self.f3 == sum(p.count("3") * k for p, k in n.items()) + 4 * self.v4 + 5 * self.v5
            and 4 * self.f4 == sum(p.count("4") * k for p, k in n.items())
            and 5 * self.f5 == sum(p.count("5") * k for p, k in n.items())
        )

    def as_line(self) -> str:
        return ",".join(f"{f.name}={getattr(self, f.name)}" for f in fields(self))

    def to_json(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}


def _pattern_counts(total, need4, need5):
    """Ways to give ``total`` degree-3 vertices patterns with the given 4- and 5-gon corner totals."""
    weights = [(p.count("4"), p.count("5")) for p in PATTERNS]
    out = []
    cur = [0] * len(PATTERNS)

    def rec(i, left, r4, r5):
        if r4 < 0 or r5 < 0 or r4 + r5 > 3 * left:
            return
        if i == 0:
            # pattern 333 absorbs what is left
            if r4 == 0 and r5 == 0:
                cur[0] = left
                out.append(tuple(cur))
                cur[0] = 0
            return
        w4, w5 = weights[i]
        k = 0
        while k <= left and k * w4 <= r4 and k * w5 <= r5:
            cur[i] = k
            rec(i - 1, left - k, r4 - k * w4, r5 - k * w5)
            k += 1
        cur[i] = 0

    rec(len(PATTERNS) - 1, total, need4, need5)
    return out


def degree_combination_solutions(v_min: int, v_max: int) -> list[DegreeCombination]:
    out = []
    for v in range(max(v_min, 0), v_max + 1):
        for v3 in range(v + 1):
            for v4 in range(v - v3 + 1):
                v5 = v - v3 - v4
                twice_e = 3 * v3 + 4 * v4 + 5 * v5
                if twice_e % 2:
                    continue
                e = twice_e // 2
                f = 2 - v + e
                if f < v:
                    continue
                # 3 f3 + 4 f4 + 5 f5 = 2e with f3 + f4 + f5 = f
                extra = 2 * e - 3 * f
                if extra < 0:
                    continue
                for f5 in range(extra // 2 + 1):
                    f4 = extra - 2 * f5
                    f3 = f - f4 - f5
                    if f3 < 0:
                        continue
                    for counts in _pattern_counts(v3, 4 * f4, 5 * f5):
                        c = DegreeCombination(v3, v4, v5, f3, f4, f5, v, e, f, *counts)
                        if c.equations_hold():
                            out.append(c)
    out.sort(key=DegreeCombination.sort_key)
    return out


def filter_combinations(combos) -> list[DegreeCombination]:
    """Drop combinations that no map with positive corner curvature can realise.

    * With a degree-5 vertex and a pentagon present, some degree-3 vertex
      must see two triangles and a pentagon.
    * A lone such vertex needs a neighbour seeing a square and a pentagon,
      or two pentagons.
    """
    keep = []
    for c in combos:
        if not (c.v5 == 0 or c.f5 == 0 or c.n335 > 0):
            continue
        if not (c.n335 != 1 or c.n345 > 0 or c.n355 > 0):
            continue
        keep.append(c)
    return keep
