"""Legendrian fronts as event lists, their classical invariants and rulings.

A front is swept from left to right.  The strands present at a given moment
form a stack numbered from the top, starting at 0.  Events act on it:

* ``L k`` inserts a left cusp, a new pair of strands at positions ``k, k+1``;
* ``R k`` joins strands ``k`` and ``k+1`` in a right cusp;
* ``X k`` crosses strands ``k`` and ``k+1``.

Every strand carries a horizontal direction, ``+1`` for rightward travel.
A left cusp records the direction of its upper branch; the lower branch runs
the other way.  At a crossing the strand of lower slope passes in front,
which is the one going from position ``k`` down to ``k+1``.  A crossing is
positive exactly when both strands run the same way, so
``tb = writhe - #right cusps``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterator, Sequence

from .diagram import DiagramError, OrientedDiagram, _UnionFind, build_diagram, from_oriented, PdCode

if TYPE_CHECKING:
    from .mondrian import MondrianDiagram


class FrontError(ValueError):
    """Raised for event lists that do not describe a closed front."""


@dataclass(frozen=True)
class Event:
    kind: str
    pos: int
    up: int = 0

    def __post_init__(self):
        if self.kind not in ("L", "R", "X"):
            raise FrontError(f"unknown event kind {self.kind!r}")
        if self.pos < 0:
            raise FrontError(f"negative position in {self}")
        if self.kind == "L" and self.up not in (1, -1):
            raise FrontError("a left cusp needs the direction of its upper branch")
        if self.kind != "L" and self.up:
            raise FrontError("only left cusps carry a direction")

    def __str__(self) -> str:
        if self.kind == "L":
            return f"L{self.pos}{'+' if self.up > 0 else '-'}"
        return f"{self.kind}{self.pos}"


def L(k: int, up: int = 1) -> Event:
    return Event("L", k, up)


def R(k: int) -> Event:
    return Event("R", k)


def X(k: int) -> Event:
    return Event("X", k)


def step(stack: list[int], ev: Event) -> None:
    """Apply one event to a stack of strand directions, in place."""
    k = ev.pos
    if ev.kind == "L":
        if k > len(stack):
            raise FrontError(f"{ev}: position beyond the {len(stack)} strands present")
        stack[k:k] = [ev.up, -ev.up]
        return
    if k + 1 >= len(stack):
        raise FrontError(f"{ev}: needs strands {k} and {k + 1}, only {len(stack)} present")
    if ev.kind == "R":
        if stack[k] == stack[k + 1]:
            raise FrontError(f"{ev}: joins two strands running the same way")
        del stack[k:k + 2]
    else:
        stack[k], stack[k + 1] = stack[k + 1], stack[k]


def replay(events: Sequence[Event], start: Sequence[int] = ()) -> list[int]:
    stack = list(start)
    for i, ev in enumerate(events):
        try:
            step(stack, ev)
        except FrontError as exc:
            raise FrontError(f"event {i}: {exc}") from None
    return stack


@dataclass(frozen=True)
class FrontDiagram:
    """A closed front given by its event list."""

    events: tuple[Event, ...]

    def __post_init__(self):
        object.__setattr__(self, "events", tuple(self.events))
        left = replay(self.events)
        if left:
            raise FrontError(f"{len(left)} strands left open at the end of the front")

    def slices(self) -> Iterator[tuple[int, tuple[int, ...]]]:
        """Yield ``(i, directions before event i)`` for every event."""
        stack: list[int] = []
        for i, ev in enumerate(self.events):
            yield i, tuple(stack)
            step(stack, ev)

    def crossing_signs(self) -> dict[int, int]:
        return {
            i: (1 if dirs[ev.pos] == dirs[ev.pos + 1] else -1)
            for (i, dirs), ev in zip(self.slices(), self.events)
            if ev.kind == "X"
        }

    @property
    def writhe(self) -> int:
        return sum(self.crossing_signs().values())

    def count(self, kind: str) -> int:
        return sum(1 for ev in self.events if ev.kind == kind)

    def cusp_directions(self) -> tuple[int, int]:
        """``(down, up)`` cusp counts along the orientation."""
        down = up = 0
        for (_, dirs), ev in zip(self.slices(), self.events):
            if ev.kind == "L":
                going_down = ev.up < 0
            elif ev.kind == "R":
                going_down = dirs[ev.pos] > 0
            else:
                continue
            if going_down:
                down += 1
            else:
                up += 1
        return down, up

    def __str__(self) -> str:
        return ", ".join(str(ev) for ev in self.events)

    def to_json(self) -> list[str]:
        return [str(ev) for ev in self.events]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> "FrontDiagram":
        return parse_front(", ".join(data))


_EV_RE = re.compile(r"([LRX])(\d+)([+-]?)")


def parse_front(text: str) -> FrontDiagram:
    """Parse ``L0, L2, X1, R2, R0``.

    Left cusps may carry ``+`` or ``-`` for the direction of the upper
    branch.  Missing directions are filled in so that each component is
    oriented with its first left cusp pointing right on top.
    """
    body = text.strip()
    if not body:
        return FrontDiagram(())
    raw = []
    for tok in body.split(","):
        m = _EV_RE.fullmatch(tok.strip())
        if not m:
            raise FrontError(f"bad front event {tok.strip()!r}")
        kind, pos, sgn = m.group(1), int(m.group(2)), m.group(3)
        if sgn and kind != "L":
            raise FrontError(f"only left cusps take a direction: {tok.strip()!r}")
        raw.append((kind, pos, {"+": 1, "-": -1, "": 0}[sgn]))
    return FrontDiagram(_orient_events(raw))


def _orient_events(raw: Sequence[tuple[str, int, int]]) -> list[Event]:
    """Choose left-cusp directions that every right cusp accepts.

    A strand starts at a left cusp as its upper or lower branch, so its
    direction is that cusp's direction times ``+1`` or ``-1``.  A right cusp
    forces its two strands to run opposite ways, which ties the directions
    of two cusps together.  Given directions are kept; each remaining
    component gets ``+`` on its first left cusp.
    """
    stack: list[tuple[int, int]] = []
    adj: dict[int, list[tuple[int, int]]] = {}
    for i, (kind, k, _) in enumerate(raw):
        if kind == "L":
            if k > len(stack):
                raise FrontError(f"event {i}: L{k} beyond the {len(stack)} strands present")
            stack[k:k] = [(i, 1), (i, -1)]
            adj.setdefault(i, [])
            continue
        if k + 1 >= len(stack):
            raise FrontError(f"event {i}: {kind}{k} needs strands {k} and {k + 1}")
        if kind == "R":
            (c1, s1), (c2, s2) = stack[k], stack[k + 1]
            adj[c1].append((c2, -s1 * s2))
            adj[c2].append((c1, -s1 * s2))
            del stack[k:k + 2]
        else:
            stack[k], stack[k + 1] = stack[k + 1], stack[k]
    if stack:
        raise FrontError(f"{len(stack)} strands left open at the end of the front")
    given = {i: up for i, (kind, _, up) in enumerate(raw) if kind == "L" and up}
    value: dict[int, int] = {}
    for i in sorted(adj):
        if i in value:
            continue
        comp, queue = {i}, [i]
        while queue:
            for b, _ in adj[queue.pop()]:
                if b not in comp:
                    comp.add(b)
                    queue.append(b)
        fixed = sorted(c for c in comp if c in given)
        root = fixed[0] if fixed else i
        value[root] = given.get(root, 1)
        queue = [root]
        while queue:
            a = queue.pop()
            for b, rel in adj[a]:
                want = value[a] * rel
                if given.get(b, want) != want or value.get(b, want) != want:
                    raise FrontError("left cusp directions contradict each other")
                if b not in value:
                    value[b] = want
                    queue.append(b)
    return [Event(kind, k, value[i] if kind == "L" else 0) for i, (kind, k, _) in enumerate(raw)]


# ---------------------------------------------------------------------------
# Classical invariants


def tb(f: FrontDiagram) -> int:
    """Thurston-Bennequin number: writhe minus the number of right cusps."""
    return f.writhe - f.count("R")


def rot(f: FrontDiagram) -> int:
    """Rotation number ``(#down cusps - #up cusps) / 2``."""
    down, up = f.cusp_directions()
    return (down - up) // 2


def _link_crossings(f: FrontDiagram) -> tuple[list[tuple], int]:
    """Internal crossings of the front read as a link diagram, and the
    number of components.

    Corners are listed clockwise in the ``(y, z)`` picture, which is the
    reading under which equal directions give a positive crossing.  Slot 0
    holds the under-strand's entry: the lower-left end when the
    under-strand runs right, the upper-right end otherwise.
    """
    uf = _UnionFind()
    labels: list[int] = []
    dirs: list[int] = []
    fresh = iter(range(10**9))
    raw = []
    for ev in f.events:
        k = ev.pos
        if ev.kind == "L":
            e = next(fresh)
            uf.find(e)
            labels[k:k] = [e, e]
            dirs[k:k] = [ev.up, -ev.up]
        elif ev.kind == "R":
            uf.union(labels[k], labels[k + 1])
            del labels[k:k + 2]
            del dirs[k:k + 2]
        else:
            lt, lb = labels[k], labels[k + 1]
            rt, rb = next(fresh), next(fresh)
            uf.find(rt)
            uf.find(rb)
            t = 0 if dirs[k + 1] > 0 else 2
            slots = [0] * 4
            slots[t], slots[(t + 1) % 4], slots[(t + 2) % 4], slots[(t + 3) % 4] = lb, lt, rt, rb
            sign = 1 if dirs[k] == dirs[k + 1] else -1
            raw.append(tuple(slots) + (sign,))
            labels[k], labels[k + 1] = rt, rb
            dirs[k], dirs[k + 1] = dirs[k + 1], dirs[k]
    xs = [tuple(uf.find(lab) for lab in x[:4]) + (x[4],) for x in raw]
    roots = {uf.find(lab) for lab in list(uf.parent)}
    # every crossing arc lies on some component; count components by arcs
    succ = {}
    for x in xs:
        over_in, over_out = (x[1], x[3]) if x[4] > 0 else (x[3], x[1])
        succ[x[0]] = x[2]
        succ[over_in] = over_out
    seen: set[int] = set()
    comps = 0
    for r in sorted(roots):
        if r in seen:
            continue
        comps += 1
        cur = r
        while cur not in seen:
            seen.add(cur)
            cur = succ.get(cur, cur)
    return xs, comps


def n_components(f: FrontDiagram) -> int:
    return _link_crossings(f)[1]


def front_to_diagram(f: FrontDiagram) -> OrientedDiagram:
    """The oriented link diagram drawn by the front."""
    xs, comps = _link_crossings(f)
    if not xs:
        if comps != 1:
            raise DiagramError(f"crossingless front with {comps} components is split")
        return build_diagram(PdCode((), 1))
    return from_oriented(xs)


def _require_knot(f: FrontDiagram) -> None:
    k = n_components(f)
    if k != 1:
        raise FrontError(f"front has {k} components; only knot fronts are supported")


def maslov_mod2(f: FrontDiagram) -> tuple[tuple[int, ...], ...]:
    """Maslov potential mod 2 of every strand, slice by slice.

    Entry ``j`` lists the potentials of the strands present after ``j``
    events.  On a knot the potential mod 2 can be read off the direction:
    it is 0 on right-going strands and 1 on left-going ones.  Crossings keep
    directions and cusps flip them, which is exactly the rule a potential
    must follow, and a knot has only the one potential up to a shift.
    """
    _require_knot(f)
    out = [()]
    stack: list[int] = []
    for ev in f.events:
        step(stack, ev)
        out.append(tuple((1 - d) // 2 for d in stack))
    return tuple(out)


# ---------------------------------------------------------------------------
# Normal rulings


@dataclass(frozen=True)
class Ruling:
    """A normal ruling: switched crossing events and the pairing after each
    event (``pairing[j][p]`` is the partner of strand ``p``)."""

    switches: frozenset[int]
    pairings: tuple[tuple[int, ...], ...]


def _normal_switch(pair: Sequence[int], k: int) -> bool:
    a, b = pair[k], pair[k + 1]
    return (a < k and b > k + 1) or (b < a < k) or (k + 1 < b < a)


def _apply_pairing(pair: list[int], ev: Event, switch: bool) -> bool:
    """Advance the pairing across one event; False if the ruling breaks."""
    k = ev.pos
    if ev.kind == "L":
        pair[:] = [p + 2 if p >= k else p for p in pair]
        pair[k:k] = [k + 1, k]
        return True
    if ev.kind == "R":
        if pair[k] != k + 1:
            return False
        del pair[k:k + 2]
        pair[:] = [p - 2 if p > k else p for p in pair]
        return True
    if pair[k] == k + 1:
        return False
    if switch:
        return _normal_switch(pair, k)
    a, b = pair[k], pair[k + 1]
    pair[a], pair[b] = k + 1, k
    pair[k], pair[k + 1] = b, a
    return True


def check_ruling(f: FrontDiagram, switches: Sequence[int], graded_mod2: bool = True) -> Ruling | None:
    """The ruling with the given switch set, or ``None`` if it is not one."""
    sw = frozenset(switches)
    signs = f.crossing_signs()
    if not sw <= set(signs):
        return None
    if graded_mod2 and any(signs[i] < 0 for i in sw):
        # equal Maslov parity means equal direction, i.e. a positive crossing
        return None
    pair: list[int] = []
    out = [()]
    for i, ev in enumerate(f.events):
        if not _apply_pairing(pair, ev, i in sw):
            return None
        out.append(tuple(pair))
    return Ruling(sw, tuple(out))


RULING_CROSSING_CAP = 24


def _check_cap(f: FrontDiagram, cap: int) -> None:
    n = f.count("X")
    if n > cap:
        raise FrontError(f"ruling search over {n} crossings exceeds the cap of {cap}")


def find_ruling(f: FrontDiagram, graded_mod2: bool = True, cap: int = RULING_CROSSING_CAP) -> Ruling | None:
    """Depth-first search for a normal ruling.

    Crossings are decided in event order, trying "no switch" first, so the
    result has the lexicographically least switch indicator vector.  Fronts
    with more than ``cap`` crossings are refused rather than searched.
    """
    _require_knot(f)
    _check_cap(f, cap)
    signs = f.crossing_signs()
    events = f.events
    n = len(events)

    def dfs(i: int, pair: list[int], chosen: list[int]) -> list[int] | None:
        while i < n and events[i].kind != "X":
            if not _apply_pairing(pair, events[i], False):
                return None
            i += 1
        if i == n:
            return chosen
        options = [False]
        if not (graded_mod2 and signs[i] < 0):
            options.append(True)
        for sw in options:
            p = list(pair)
            if _apply_pairing(p, events[i], sw):
                got = dfs(i + 1, p, chosen + [i] if sw else chosen)
                if got is not None:
                    return got
        return None

    found = dfs(0, [], [])
    return None if found is None else check_ruling(f, found, graded_mod2)


def count_rulings(f: FrontDiagram, graded_mod2: bool = True, cap: int = RULING_CROSSING_CAP) -> int:
    """Number of normal rulings, by exhaustive search."""
    _check_cap(f, cap)
    signs = f.crossing_signs()
    events = f.events

    def dfs(i: int, pair: list[int]) -> int:
        while i < len(events) and events[i].kind != "X":
            if not _apply_pairing(pair, events[i], False):
                return 0
            i += 1
        if i == len(events):
            return 1
        total = 0
        for sw in (False, True):
            if sw and graded_mod2 and signs[i] < 0:
                continue
            p = list(pair)
            if _apply_pairing(p, events[i], sw):
                total += dfs(i + 1, p)
        return total

    return dfs(0, [])


# ---------------------------------------------------------------------------
# Fronts from Mondrian diagrams


def front_from_mondrian(m: "MondrianDiagram") -> FrontDiagram:
    """Round each circle off into one left and one right cusp and turn rungs
    into crossings; see :meth:`lagfill.mondrian.MondrianDiagram.events`."""
    return FrontDiagram(m.events())


def eye() -> FrontDiagram:
    """The Legendrian unknot with ``tb = -1`` and ``rot = 0``."""
    return FrontDiagram((L(0), R(0)))


def dumps(f: FrontDiagram) -> str:
    return json.dumps({"events": f.to_json(), "tb": tb(f), "rot": rot(f)})
