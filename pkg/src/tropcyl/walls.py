"""Wall structures generated from the exceptional ray directions.

Two generation rules are supported:

* ``pair_sum`` (default): walls start as the ray directions with positive
  blowup multiplicity; each step adds the primitive directions of d1 + d2
  over unordered pairs of distinct walls with d1 != -d2.
* ``support``: every primitive direction parallel (up to sign) to a nonzero
  nonnegative integer combination of the supported ray generators; the step
  of a direction is the minimal total coefficient sum minus one.

Membership queries (``is_wall_direction``) always use the support
characterization, which is the authority for balancing checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .lattice import Vec, det, dot, norm, primitive_part, vadd
from .model import ToricModel

RULES = ("pair_sum", "support")


@dataclass(frozen=True)
class WallStructure:
    model: ToricModel
    steps: int
    norm_bound: int
    rule: str
    directions: tuple[tuple[Vec, int], ...]  # (direction, step), deterministic order

    @property
    def by_direction(self) -> dict[Vec, int]:
        return dict(self.directions)

    def step_set(self, n: int) -> frozenset[Vec]:
        """Directions first appearing at step n."""
        return frozenset(d for d, s in self.directions if s == n)

    def contains(self, d: Vec) -> bool:
        """Membership of the line spanned by d, up to sign."""
        p, _ = primitive_part(d)
        seen = self.by_direction
        return p in seen or (-p[0], -p[1]) in seen


def is_wall_direction(model: ToricModel, d: Vec) -> bool:
    """True when some nonzero Z>=0-combination of supported rays is parallel to d.

    Comparison is up to sign; d may be non-primitive but must be nonzero.
    """
    p, _ = primitive_part(d)
    gens = model.exceptional_directions
    for q in (p, (-p[0], -p[1])):
        for u in gens:
            if det(u, q) == 0 and dot(u, q) > 0:
                return True
        for u, v in combinations(gens, 2):
            dd = det(u, v)
            if dd == 0:
                continue
            a = det(q, v)
            b = det(u, q)
            # q = (a/dd) u + (b/dd) v; need both coefficients >= 0.
            if dd < 0:
                a, b, dd = -a, -b, -dd
            if a >= 0 and b >= 0:
                return True
    return False


def generate_walls(
    model: ToricModel, steps: int, norm_bound: int, rule: str = "pair_sum"
) -> WallStructure:
    """Generate the wall structure up to the given step, pruned by fan norm."""
    if rule not in RULES:
        raise ValueError(f"unknown wall rule {rule!r}")
    if steps < 0 or norm_bound < 1:
        raise ValueError("steps must be >= 0 and norm_bound >= 1")
    fan = model.fan
    if rule == "pair_sum":
        found: dict[Vec, int] = {}
        for u in model.exceptional_directions:
            if norm(fan, u) <= norm_bound:
                found[u] = 0
        for n in range(steps):
            current = [d for d, s in found.items() if s <= n]
            new: set[Vec] = set()
            for d1, d2 in combinations(current, 2):
                s = vadd(d1, d2)
                if s == (0, 0):
                    continue
                p, _ = primitive_part(s)
                if p not in found and norm(fan, p) <= norm_bound:
                    new.add(p)
            for p in sorted(new):
                found[p] = n + 1
    else:
        found = {}
        gens = model.exceptional_directions
        limit = max((abs(c) for u in fan.rays for c in u), default=1) * norm_bound
        for x in range(-limit, limit + 1):
            for y in range(-limit, limit + 1):
                d = (x, y)
                if d == (0, 0) or primitive_part(d)[0] != d:
                    continue
                if norm(fan, d) > norm_bound:
                    continue
                step = _support_step(gens, d, steps)
                if step is not None:
                    found[d] = step
    ordered = sorted(found.items(), key=lambda it: (it[1], it[0]))
    return WallStructure(model, steps, norm_bound, rule, tuple(ordered))


def _support_step(gens, d: Vec, max_step: int) -> int | None:
    """Minimal (sum of coefficients - 1) over positive representations of d, capped."""
    for total in range(1, max_step + 2):
        for combo in _compositions(total, len(gens)):
            s = (0, 0)
            for c, u in zip(combo, gens):
                s = (s[0] + c * u[0], s[1] + c * u[1])
            if s == (0, 0):
                continue
            if det(s, d) == 0 and dot(s, d) > 0:
                return total - 1
    return None


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest
