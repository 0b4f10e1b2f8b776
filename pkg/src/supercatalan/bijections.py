"""The four path bijections, their inverses, and execution traces.

``psi``  heightabove(n, r) -> allpaths(n+r, n-r-1); flips the down step after
         the right-most maximum, keeps the descent set.
``phi``  heightatmost(n, r) -> ballot(n, r); reflect, then prepend an up step.
``f``    ballotstar(n) -> Catalan paths of height >= 2; flips the down step
         after the right-most maximum.
``g``    ballotstarstar(n) -> catalan(n) minus omega(n); two cases depending
         on the step after the first visit ``N`` to level -1.

Landmarks are lattice-point indices (see :mod:`supercatalan.paths`).
``stat_delta`` is always ``(maj(input) - maj(output), des(input) - des(output))``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DomainError, InvariantViolation
from .paths import (
    DOWN, UP, FamilySpec, LatticePath, left_most_maximum, right_most_maximum,
    first_hit, is_descent_point, stats,
)

__all__ = [
    "BijectionTrace", "BIJECTIONS",
    "psi", "psi_inv", "phi", "phi_inv", "f", "f_inv", "g", "g_inv",
    "find_down_wedge", "trace", "domain_of", "codomain_of", "infer_params",
]


@dataclass(frozen=True)
class BijectionTrace:
    name: str
    input: LatticePath
    output: LatticePath
    landmarks: dict[str, int | tuple[int, int]] = field(default_factory=dict)
    case_taken: str | None = None
    stat_delta: tuple[int, int] = (0, 0)

    def split_landmarks(self) -> tuple[dict, dict]:
        """Landmarks located on the input path and on the output path."""
        on_out = _OUTPUT_LABELS.get(self.name, set())
        ins = {k: v for k, v in self.landmarks.items() if k not in on_out}
        outs = {k: v for k, v in self.landmarks.items() if k in on_out}
        return ins, outs

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "input": str(self.input),
            "output": str(self.output),
            "case": self.case_taken,
            "landmarks": {k: list(v) if isinstance(v, tuple) else v for k, v in self.landmarks.items()},
            "stat_delta": {"maj": self.stat_delta[0], "des": self.stat_delta[1]},
        }


# labels whose index refers to the output path (or the raised intermediate, which shares its points)
_OUTPUT_LABELS = {
    "psi": {"L"}, "psi_inv": {"R"}, "f": {"Q"}, "f_inv": {"R"},
    "g": {"X", "L", "Q", "sigma"}, "g_inv": {"M", "N", "sigma"},
}


def _delta(a: LatticePath, b: LatticePath) -> tuple[int, int]:
    return a.maj - b.maj, a.des - b.des


def _require(spec: FamilySpec, p: LatticePath, what: str) -> None:
    if not spec.contains(p):
        raise DomainError(f"{what}: {p} is not in {spec}")


def find_down_wedge(p: LatticePath, anchor: int, direction: str = "before") -> tuple[int, int]:
    """Longest down wedge sequence ending (``before``) or starting (``after``) at ``anchor``.

    A down wedge is ``D U D U ... D U``.  Returns the point range
    ``(start, end)``; an empty wedge is ``(anchor, anchor)``.
    """
    s = p.steps
    if not 0 <= anchor <= len(s):
        raise IndexError(f"point {anchor} outside 0..{len(s)}")
    if direction == "before":
        start = anchor
        while start >= 2 and s[start - 2] == DOWN and s[start - 1] == UP:
            start -= 2
        return start, anchor
    if direction == "after":
        end = anchor
        while end + 2 <= len(s) and s[end] == DOWN and s[end + 1] == UP:
            end += 2
        return anchor, end
    raise ValueError(f"direction must be 'before' or 'after', not {direction!r}")


# -- psi ---------------------------------------------------------------------------

def _psi(p: LatticePath, n: int, r: int) -> BijectionTrace:
    _require(FamilySpec.height_above(n, r), p, "psi")
    rmax = right_most_maximum(p)
    out = p.with_step(rmax + 1, UP)
    return BijectionTrace("psi", p, out, {"R": rmax, "L": rmax + 1}, None, _delta(p, out))


def _psi_inv(p: LatticePath, n: int, r: int) -> BijectionTrace:
    if not 1 <= r < n:
        raise DomainError(f"psi_inv: need 1 <= r < n, got n={n}, r={r}")
    _require(FamilySpec.all_paths(n + r, n - r - 1), p, "psi_inv")
    lmax = left_most_maximum(p)
    out = p.with_step(lmax, DOWN)
    return BijectionTrace("psi_inv", p, out, {"L": lmax, "R": lmax - 1}, None, _delta(p, out))


# -- phi ---------------------------------------------------------------------------

def _phi(p: LatticePath, n: int, r: int) -> BijectionTrace:
    _require(FamilySpec.height_at_most(n, r), p, "phi")
    out = LatticePath((UP,) + tuple(1 - s for s in p.steps))
    return BijectionTrace("phi", p, out, {}, None, _delta(p, out))


def _phi_inv(p: LatticePath, n: int, r: int) -> BijectionTrace:
    _require(FamilySpec.ballot(n, r), p, "phi_inv")
    out = LatticePath(tuple(1 - s for s in p.steps[1:]))
    return BijectionTrace("phi_inv", p, out, {}, None, _delta(p, out))


# -- f -----------------------------------------------------------------------------

def _catalan_n(p: LatticePath, what: str) -> int:
    if len(p) % 2 or not p.is_catalan():
        raise DomainError(f"{what}: {p} is not a Catalan path")
    return len(p) // 2


def _f(p: LatticePath) -> BijectionTrace:
    n = len(p) // 2
    if len(p) % 2 or n < 2:
        raise DomainError(f"f: {p} is not in ballotstar(n) for any n >= 2")
    _require(FamilySpec.ballot_star(n), p, "f")
    rmax = right_most_maximum(p)
    out = p.with_step(rmax + 1, UP)
    return BijectionTrace("f", p, out, {"R": rmax, "Q": rmax + 1}, None, _delta(p, out))


def _f_inv(p: LatticePath) -> BijectionTrace:
    _catalan_n(p, "f_inv")
    if p.height < 2:
        raise DomainError(f"f_inv: {p} has height {p.height}, need at least 2")
    lmax = left_most_maximum(p)
    out = p.with_step(lmax, DOWN)
    return BijectionTrace("f_inv", p, out, {"Q": lmax, "R": lmax - 1}, None, _delta(p, out))


# -- g -----------------------------------------------------------------------------

def _check_intermediate(b: LatticePath, x: int) -> None:
    """The raised ballot path must end at 2, stay >= 0, and have X as its last level-1 point."""
    lv = b.levels
    if lv[-1] != 2 or min(lv) < 0:
        raise InvariantViolation(f"intermediate {b} is not a ballot path ending at level 2")
    if lv[x] != 1 or any(h == 1 for h in lv[x + 1:]):
        raise InvariantViolation(f"point {x} is not the last level-1 point of {b}")
    if max(lv[x:]) < max(lv[: x + 1]) + 4:
        raise InvariantViolation(f"intermediate {b} violates the height gap at X={x}")


def _g(p: LatticePath) -> BijectionTrace:
    n = len(p) // 2
    if len(p) % 2 or n < 2:
        raise DomainError(f"g: {p} is not in ballotstarstar(n) for any n >= 2")
    _require(FamilySpec.ballot_star_star(n), p, "g")
    s = list(p.steps)
    rmax = right_most_maximum(p)
    nn = first_hit(p, -1)
    marks: dict[str, int | tuple[int, int]] = {"R": rmax, "N": nn}
    if s[nn] == DOWN:
        case = "Case1"
        # M -> N -> Y are two down steps; replace both by up steps
        marks.update(M=nn - 1, Y=nn + 1)
        s[nn - 1] = s[nn] = UP
        x = nn
        raised = LatticePath(tuple(s))
    else:
        case = "Case2"
        x = nn - 2
        y, _ = find_down_wedge(p, x, "before")
        sigma = s[y:x]
        # move sigma to just after N, then turn the two steps X -> N upward
        raised = LatticePath(tuple(s[:y] + [UP, UP] + sigma + s[nn:]))
        marks.update(Y=y, X_orig=x, sigma=(y + 2, y + 2 + len(sigma)))
        x = y
    marks["X"] = x
    _check_intermediate(raised, x)
    lmax = left_most_maximum(raised)
    out = raised.with_step(lmax, DOWN)
    marks.update(L=lmax, Q=lmax - 1)
    st = stats(out)
    if st.h_plus < st.h_minus + 3:
        raise InvariantViolation(f"g({p}) = {out} lands in omega({n})")
    return BijectionTrace("g", p, out, marks, case, _delta(p, out))


def _g_inv(p: LatticePath) -> BijectionTrace:
    n = _catalan_n(p, "g_inv")
    if n < 2 or FamilySpec.omega(n).contains(p):
        raise DomainError(f"g_inv: {p} is not in catalan({n}) minus omega({n})")
    qmax = right_most_maximum(p)
    raised = p.with_step(qmax + 1, UP)
    lv = raised.levels
    x = max(j for j, h in enumerate(lv) if h == 1)
    marks: dict[str, int | tuple[int, int]] = {
        "Q": qmax, "L": qmax + 1, "R": right_most_maximum(raised), "X": x,
    }
    _check_intermediate(raised, x)
    s = list(raised.steps)
    if is_descent_point(raised, x - 1):
        case = "Case1"
        # M -> X -> Y become two down steps
        s[x - 1] = s[x] = DOWN
        marks.update(M=x - 1, Y=x + 1)
        out = LatticePath(tuple(s))
    else:
        case = "Case2"
        y = x + 2
        if s[x] != UP or s[x + 1] != UP:
            raise InvariantViolation(f"{raised}: X={x} is not followed by two up steps")
        _, end = find_down_wedge(raised, y, "after")
        sigma = s[y:end]
        out = LatticePath(tuple(s[:x] + sigma + [DOWN, DOWN] + s[end:]))
        marks.update(Y=y, sigma=(x, x + len(sigma)), N=x + len(sigma) + 2)
    return BijectionTrace("g_inv", p, out, marks, case, _delta(p, out))


# -- public surface ----------------------------------------------------------------

_TRACERS = {
    "psi": _psi, "psi_inv": _psi_inv, "phi": _phi, "phi_inv": _phi_inv,
    "f": _f, "f_inv": _f_inv, "g": _g, "g_inv": _g_inv,
}
BIJECTIONS = tuple(_TRACERS)
_NEEDS_NR = {"psi", "psi_inv", "phi", "phi_inv"}


def trace(name: str, p: LatticePath, n: int | None = None, r: int | None = None) -> BijectionTrace:
    """Apply the named map to ``p`` and record landmarks, case and stat change."""
    if name not in _TRACERS:
        raise DomainError(f"unknown bijection {name!r}; choose from {', '.join(BIJECTIONS)}")
    if name in _NEEDS_NR:
        if n is None or r is None:
            raise DomainError(f"{name} needs the parameters n and r")
        return _TRACERS[name](p, n, r)
    return _TRACERS[name](p)


def psi(p: LatticePath, n: int, r: int) -> LatticePath:
    return _psi(p, n, r).output


def psi_inv(p: LatticePath, n: int, r: int) -> LatticePath:
    return _psi_inv(p, n, r).output


def phi(p: LatticePath, n: int, r: int) -> LatticePath:
    return _phi(p, n, r).output


def phi_inv(p: LatticePath, n: int, r: int) -> LatticePath:
    return _phi_inv(p, n, r).output


def f(p: LatticePath) -> LatticePath:
    return _f(p).output


def f_inv(p: LatticePath) -> LatticePath:
    return _f_inv(p).output


def g(p: LatticePath) -> LatticePath:
    return _g(p).output


def g_inv(p: LatticePath) -> LatticePath:
    return _g_inv(p).output


def domain_of(name: str, n: int, r: int | None = None):
    """Family (or predicate) the named map accepts, for exhaustive checks."""
    if name == "psi":
        return FamilySpec.height_above(n, r)
    if name == "psi_inv":
        return FamilySpec.all_paths(n + r, n - r - 1)
    if name == "phi":
        return FamilySpec.height_at_most(n, r)
    if name == "phi_inv":
        return FamilySpec.ballot(n, r)
    if name == "f":
        return FamilySpec.ballot_star(n)
    if name == "g":
        return FamilySpec.ballot_star_star(n)
    raise DomainError(f"no enumerable domain for {name!r}")


def codomain_of(name: str, n: int, r: int | None = None):
    if name == "psi":
        return FamilySpec.all_paths(n + r, n - r - 1)
    if name == "phi":
        return FamilySpec.ballot(n, r)
    raise DomainError(f"codomain of {name!r} is a filtered Catalan family")



def infer_params(name: str, p: LatticePath) -> tuple[int | None, int | None]:
    """Recover ``(n, r)`` for psi/phi and their inverses from the path's shape."""
    ups, downs = p.ups, p.downs
    if name in ("psi", "phi"):
        # p has n+r-1 up steps and n-r down steps
        two_n, two_r = ups + downs + 1, ups - downs + 1
    elif name == "psi_inv":
        # n+r up steps, n-r-1 down steps
        two_n, two_r = ups + downs + 1, ups - downs - 1
    elif name == "phi_inv":
        # length 2n ending at level 2-2r
        two_n, two_r = len(p), 2 - p.end_level
    else:
        return None, None
    if two_n % 2 or two_r % 2:
        raise DomainError(f"{name}: {p} has no valid (n, r) shape")
    return two_n // 2, two_r // 2
