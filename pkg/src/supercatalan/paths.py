"""Lattice paths, their statistics, and exhaustive generators for path families.

A path is a word over ``{0, 1}``: ``0`` is an up step, ``1`` a down step.
Two indexings are used and never mixed up:

* steps are 1-indexed, ``pi_1 ... pi_l``; the descent set lives here.
  ``i`` is a descent when step ``i`` is down and step ``i + 1`` is up.
* lattice points are 0-indexed, ``0 .. l``; point ``j`` is where step ``j``
  ends, so step ``j + 1`` leaves point ``j``.  Landmarks such as the
  right-most maximum are point indices.

In the stored tuple ``steps[k]`` is step ``k + 1``: it enters point ``k + 1``
and leaves point ``k``.
"""

from __future__ import annotations

import re
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Iterator, Sequence

from .errors import DomainError, ParseError
from .qpoly import QPoly

UP, DOWN = 0, 1

__all__ = [
    "UP", "DOWN", "LatticePath", "PathStats", "FamilySpec",
    "parse_path", "parse_family", "stats", "reflect",
    "right_most_maximum", "left_most_maximum", "first_hit",
    "last_level_one_before_rmax", "is_descent_point",
    "enumerate_family", "count_family", "gen_fun", "STATISTICS",
]


@dataclass(frozen=True, order=True)
class LatticePath:
    steps: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.steps, tuple):
            object.__setattr__(self, "steps", tuple(self.steps))
        if any(s not in (UP, DOWN) for s in self.steps):
            raise ValueError(f"steps must be 0 (up) or 1 (down): {self.steps!r}")

    @classmethod
    def from_str(cls, text: str) -> LatticePath:
        return parse_path(text)

    def __len__(self) -> int:
        return len(self.steps)

    def __str__(self) -> str:
        return "".join("01"[s] for s in self.steps)

    def __repr__(self) -> str:
        return f"LatticePath({str(self)!r})"

    def ud(self) -> str:
        return "".join("UD"[s] for s in self.steps)

    def step(self, i: int) -> int:
        """Step ``i`` in the 1-indexed convention."""
        if not 1 <= i <= len(self.steps):
            raise IndexError(f"step index {i} outside 1..{len(self.steps)}")
        return self.steps[i - 1]

    @cached_property
    def levels(self) -> tuple[int, ...]:
        """Level of every lattice point, ``len(path) + 1`` entries."""
        return _levels(self.steps)

    @property
    def ups(self) -> int:
        return len(self.steps) - sum(self.steps)

    @property
    def downs(self) -> int:
        return sum(self.steps)

    @property
    def end_level(self) -> int:
        return self.levels[-1]

    @property
    def height(self) -> int:
        return max(self.levels)

    @property
    def min_level(self) -> int:
        return min(self.levels)

    @cached_property
    def descent_set(self) -> tuple[int, ...]:
        s = self.steps
        return tuple(i for i in range(1, len(s)) if s[i - 1] == DOWN and s[i] == UP)

    @property
    def maj(self) -> int:
        return sum(self.descent_set)

    @property
    def des(self) -> int:
        return len(self.descent_set)

    def is_catalan(self) -> bool:
        return self.end_level == 0 and self.min_level >= 0

    def with_step(self, i: int, value: int) -> LatticePath:
        """Copy with 1-indexed step ``i`` replaced."""
        s = list(self.steps)
        s[i - 1] = value
        return LatticePath(tuple(s))


def _levels(steps: Sequence[int]) -> tuple[int, ...]:
    out = [0]
    h = 0
    for s in steps:
        h += 1 if s == UP else -1
        out.append(h)
    return tuple(out)


@dataclass(frozen=True)
class PathStats:
    maj: int
    des: int
    height: int
    end_level: int
    min_level: int
    # only defined for Catalan paths of positive length
    h_minus: int | None = None
    h_plus: int | None = None

    def to_json(self) -> dict:
        return {
            "maj": self.maj, "des": self.des, "height": self.height,
            "end_level": self.end_level, "min_level": self.min_level,
            "h_minus": self.h_minus, "h_plus": self.h_plus,
        }


_UD_CHARS = {"u": UP, "d": DOWN}
_BIN_CHARS = {"0": UP, "1": DOWN}


def parse_path(text: str) -> LatticePath:
    """Parse ``"0011"`` or ``"uudd"`` (any case); mixing alphabets is an error."""
    steps = []
    alphabet = None
    for pos, ch in enumerate(text.strip()):
        key = ch.lower()
        if key in _BIN_CHARS:
            kind, val = "01", _BIN_CHARS[key]
        elif key in _UD_CHARS:
            kind, val = "ud", _UD_CHARS[key]
        else:
            raise ParseError(f"bad step character {ch!r} at position {pos}", pos, ch)
        if alphabet is None:
            alphabet = kind
        elif kind != alphabet:
            raise ParseError(
                f"character {ch!r} at position {pos} mixes the {kind} and {alphabet} alphabets",
                pos, ch,
            )
        steps.append(val)
    return LatticePath(tuple(steps))


def _as_path(p) -> LatticePath:
    if isinstance(p, LatticePath):
        return p
    if isinstance(p, str):
        return parse_path(p)
    return LatticePath(tuple(p))


def reflect(p: LatticePath) -> LatticePath:
    """Mirror across the x-axis: every up step becomes down and vice versa."""
    return LatticePath(tuple(1 - s for s in p.steps))


# -- landmarks (all are point indices 0..len) -------------------------------

def right_most_maximum(p: LatticePath) -> int:
    lv = p.levels
    top = max(lv)
    return max(j for j, h in enumerate(lv) if h == top)


def left_most_maximum(p: LatticePath) -> int:
    lv = p.levels
    return lv.index(max(lv))


def first_hit(p: LatticePath, level: int) -> int | None:
    try:
        return p.levels.index(level)
    except ValueError:
        return None


def last_level_one_before_rmax(p: LatticePath) -> int:
    """Point ``X``: the last level-1 point at or before the right-most maximum."""
    if len(p) == 0 or not p.is_catalan():
        raise DomainError(f"{p} is not a nonempty Catalan path")
    lv = p.levels
    rmax = right_most_maximum(p)
    return max(j for j in range(rmax + 1) if lv[j] == 1)


def is_descent_point(p: LatticePath, j: int) -> bool:
    """Point ``j`` is entered by a down step and left by an up step."""
    s = p.steps
    return 1 <= j < len(s) and s[j - 1] == DOWN and s[j] == UP


def stats(p: LatticePath) -> PathStats:
    lv = p.levels
    h_minus = h_plus = None
    if len(p) > 0 and p.is_catalan():
        x = last_level_one_before_rmax(p)
        h_minus = max(lv[: x + 1])
        h_plus = max(lv[x:])
    return PathStats(
        maj=p.maj, des=p.des, height=max(lv), end_level=lv[-1], min_level=min(lv),
        h_minus=h_minus, h_plus=h_plus,
    )


def _in_omega(p: LatticePath) -> bool:
    lv = p.levels
    x = last_level_one_before_rmax(p)
    return max(lv[x:]) <= max(lv[: x + 1]) + 2


def _in_ballot_star(p: LatticePath) -> bool:
    hit = first_hit(p, -1)
    return hit is None or hit > right_most_maximum(p)


# -- families ------------------------------------------------------------------

_FAMILY_ARITY = {
    "allpaths": 2, "nonneg": 2, "catalan": 1, "ballot": 2, "omega": 1,
    "ballotstar": 1, "ballotstarstar": 1, "heightabove": 2, "heightatmost": 2,
}

_FAMILY_ALIASES = {
    "all": "allpaths", "s": "allpaths", "nonnegpaths": "nonneg", "s+": "nonneg",
    "b": "ballot", "b*": "ballotstar", "b**": "ballotstarstar",
    "above": "heightabove", "atmost": "heightatmost", "c": "catalan",
}


@dataclass(frozen=True)
class FamilySpec:
    """A named path family with its integer parameters.

    ``allpaths(m, n)``       m up steps, n down steps
    ``nonneg(m, n)``         the same, never below level 0
    ``catalan(n)``           ``nonneg(n, n)``
    ``ballot(n, r)``         length 2n, first step up, ends at and never
                             goes below level ``2 - 2r``
    ``omega(n)``             Catalan paths with ``h_plus <= h_minus + 2``
    ``ballotstar(n)``        ``ballot(n, 2)`` not reaching level -1 before
                             its right-most maximum
    ``ballotstarstar(n)``    the rest of ``ballot(n, 2)``
    ``heightabove(n, r)``    ``allpaths(n+r-1, n-r)`` with height > 2r-1
    ``heightatmost(n, r)``   ``allpaths(n+r-1, n-r)`` with height <= 2r-1
    """

    kind: str
    params: tuple[int, ...] = field(default=())

    def __post_init__(self):
        kind = _FAMILY_ALIASES.get(self.kind.lower(), self.kind.lower())
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "params", tuple(int(x) for x in self.params))
        if kind not in _FAMILY_ARITY:
            raise DomainError(f"unknown path family {self.kind!r}")
        if len(self.params) != _FAMILY_ARITY[kind]:
            raise DomainError(f"{kind} takes {_FAMILY_ARITY[kind]} parameter(s), got {self.params}")
        p = self.params
        if kind in ("allpaths", "nonneg"):
            ok = p[0] >= 0 and p[1] >= 0
        elif kind == "catalan":
            ok = p[0] >= 0
        elif kind == "omega":
            ok = p[0] >= 1
        elif kind in ("ballotstar", "ballotstarstar"):
            ok = p[0] >= 2
        else:
            ok = 1 <= p[1] <= p[0]
        if not ok:
            raise DomainError(f"parameters {p} out of range for {kind}")

    @classmethod
    def all_paths(cls, m: int, n: int) -> FamilySpec:
        return cls("allpaths", (m, n))

    @classmethod
    def nonneg_paths(cls, m: int, n: int) -> FamilySpec:
        return cls("nonneg", (m, n))

    @classmethod
    def catalan(cls, n: int) -> FamilySpec:
        return cls("catalan", (n,))

    @classmethod
    def ballot(cls, n: int, r: int) -> FamilySpec:
        return cls("ballot", (n, r))

    @classmethod
    def omega(cls, n: int) -> FamilySpec:
        return cls("omega", (n,))

    @classmethod
    def ballot_star(cls, n: int) -> FamilySpec:
        return cls("ballotstar", (n,))

    @classmethod
    def ballot_star_star(cls, n: int) -> FamilySpec:
        return cls("ballotstarstar", (n,))

    @classmethod
    def height_above(cls, n: int, r: int) -> FamilySpec:
        return cls("heightabove", (n, r))

    @classmethod
    def height_at_most(cls, n: int, r: int) -> FamilySpec:
        return cls("heightatmost", (n, r))

    def __str__(self) -> str:
        return f"{self.kind}:{','.join(map(str, self.params))}"

    @property
    def length(self) -> int:
        """Common length of every path in the family."""
        if self.kind in ("allpaths", "nonneg"):
            return self.params[0] + self.params[1]
        if self.kind in ("heightabove", "heightatmost"):
            return 2 * self.params[0] - 1
        return 2 * self.params[0]

    def contains(self, p: LatticePath) -> bool:
        """Membership predicate, independent of the generator."""
        kind, par = self.kind, self.params
        lv = p.levels
        if kind == "allpaths":
            return p.ups == par[0] and p.downs == par[1]
        if kind == "nonneg":
            return p.ups == par[0] and p.downs == par[1] and min(lv) >= 0
        if kind == "catalan":
            return len(p) == 2 * par[0] and lv[-1] == 0 and min(lv) >= 0
        if kind == "ballot":
            n, r = par
            floor = 2 - 2 * r
            return (len(p) == 2 * n and len(p) > 0 and p.steps[0] == UP
                    and lv[-1] == floor and min(lv) >= floor)
        if kind == "omega":
            return FamilySpec.catalan(par[0]).contains(p) and _in_omega(p)
        if kind == "ballotstar":
            return FamilySpec.ballot(par[0], 2).contains(p) and _in_ballot_star(p)
        if kind == "ballotstarstar":
            return FamilySpec.ballot(par[0], 2).contains(p) and not _in_ballot_star(p)
        n, r = par
        if not (p.ups == n + r - 1 and p.downs == n - r):
            return False
        if kind == "heightabove":
            return max(lv) > 2 * r - 1
        return max(lv) <= 2 * r - 1


_FAMILY_RE = re.compile(r"^\s*([A-Za-z+*]+)\s*:\s*(-?\d+(?:\s*,\s*-?\d+)*)\s*$")


def parse_family(text: str) -> FamilySpec:
    """Parse ``"catalan:5"``, ``"ballot:6,2"``, ``"omega:7"`` and friends."""
    m = _FAMILY_RE.match(text)
    if not m:
        raise ParseError(f"cannot parse family spec {text!r}; expected e.g. 'ballot:6,2'")
    params = tuple(int(x) for x in m.group(2).split(","))
    return FamilySpec(m.group(1), params)


def _generate(ups: int, downs: int, lo: int | None, hi: int | None,
              prefix: tuple[int, ...] = ()) -> Iterator[tuple[int, ...]]:
    """All words with the given step counts whose levels stay in [lo, hi].

    Words come out in lexicographic order (up before down); ``prefix`` forces
    the first steps.
    """
    end = ups - downs
    if lo is not None and (end < lo or 0 < lo):
        return
    if hi is not None and (end > hi or 0 > hi):
        return
    length = ups + downs
    buf = [0] * length
    level = 0
    u, d = ups, downs
    for k, s in enumerate(prefix):
        if k >= length:
            return
        if s == UP:
            u -= 1
            level += 1
        else:
            d -= 1
            level -= 1
        if u < 0 or d < 0:
            return
        if (lo is not None and level < lo) or (hi is not None and level > hi):
            return
        buf[k] = s
    if len(prefix) > length:
        return

    def rec(k: int, u: int, d: int, level: int):
        if k == length:
            yield tuple(buf)
            return
        if u:
            nl = level + 1
            if hi is None or nl <= hi:
                buf[k] = UP
                yield from rec(k + 1, u - 1, d, nl)
        if d:
            nl = level - 1
            if lo is None or nl >= lo:
                buf[k] = DOWN
                yield from rec(k + 1, u, d - 1, nl)

    yield from rec(len(prefix), u, d, level)


def _raw_family(spec: FamilySpec, prefix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    kind, par = spec.kind, spec.params
    if kind == "allpaths":
        return _generate(par[0], par[1], None, None, prefix)
    if kind == "nonneg":
        return _generate(par[0], par[1], 0, None, prefix)
    if kind in ("catalan", "omega"):
        return _generate(par[0], par[0], 0, None, prefix)
    if kind in ("ballot", "ballotstar", "ballotstarstar"):
        n = par[0]
        r = 2 if kind != "ballot" else par[1]
        if prefix and prefix[0] != UP:
            return iter(())
        return _generate(n - r + 1, n + r - 1, 2 - 2 * r, None, prefix or (UP,))
    n, r = par
    if kind == "heightatmost":
        return _generate(n + r - 1, n - r, None, 2 * r - 1, prefix)
    return _generate(n + r - 1, n - r, None, None, prefix)


_NEEDS_FILTER = {"omega", "ballotstar", "ballotstarstar", "heightabove"}


def _shard_prefixes(shard: tuple[int, int] | None) -> list[tuple[int, ...]]:
    if shard is None:
        return [()]
    index, count = shard
    if count < 1 or not 0 <= index < count:
        raise DomainError(f"bad shard {shard}; need 0 <= index < count")
    width = max(0, (count - 1).bit_length())
    words = list(product((UP, DOWN), repeat=width))
    return [w for j, w in enumerate(words) if j % count == index]


def enumerate_family(spec: FamilySpec, shard: tuple[int, int] | None = None) -> Iterator[LatticePath]:
    """Yield every member of ``spec`` once, in lexicographic order.

    With ``shard=(i, k)`` only the members whose leading steps fall in the
    ``i``-th of ``k`` prefix classes are produced; the ``k`` shards partition
    the family.  A family whose paths are shorter than the prefix width lives
    entirely in shard 0.
    """
    prefixes = _shard_prefixes(shard)
    if prefixes and len(prefixes[0]) > spec.length:
        if shard[0] != 0:
            return
        prefixes = [()]
    filtered = spec.kind in _NEEDS_FILTER
    for prefix in prefixes:
        for word in _raw_family(spec, prefix):
            p = LatticePath(word)
            if filtered and not spec.contains(p):
                continue
            yield p


def count_family(spec: FamilySpec) -> int:
    return sum(1 for _ in enumerate_family(spec))


def _stat_maj(p: LatticePath) -> int:
    return p.maj


def _stat_maj_minus_des(p: LatticePath) -> int:
    return p.maj - p.des


STATISTICS = {
    "maj": _stat_maj,
    "maj_minus_des": _stat_maj_minus_des,
}
_STAT_ALIASES = {"maj-des": "maj_minus_des", "majdes": "maj_minus_des"}


def _resolve_stat(name: str) -> str:
    name = _STAT_ALIASES.get(name, name)
    if name not in STATISTICS:
        raise DomainError(f"unknown statistic {name!r}; choose from {sorted(STATISTICS)}")
    return name


def _gen_fun_counts(spec: FamilySpec, statistic: str, shard) -> Counter:
    fn = STATISTICS[statistic]
    return Counter(fn(p) for p in enumerate_family(spec, shard))


def gen_fun(spec: FamilySpec, statistic: str = "maj", shards: int = 1) -> QPoly:
    """Sum of ``q**statistic(p)`` over the family, by brute-force enumeration.

    ``shards > 1`` spreads the enumeration over worker processes.
    """
    statistic = _resolve_stat(statistic)
    if shards <= 1:
        counts = _gen_fun_counts(spec, statistic, None)
    else:
        counts = Counter()
        with ProcessPoolExecutor(max_workers=shards) as pool:
            jobs = [pool.submit(_gen_fun_counts, spec, statistic, (i, shards)) for i in range(shards)]
            for job in jobs:
                counts.update(job.result())
    return QPoly.from_terms(dict(counts))
