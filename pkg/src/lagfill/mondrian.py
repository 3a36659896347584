"""Mondrian layouts: Seifert circles as boxes, crossings as horizontal rungs.

A layout is read along a sweep coordinate ``y``.  Every Seifert circle is a
box with one bottom and one top (its extent in ``y``) whose two vertical
sides sit at positions in a left-to-right order that changes only when a box
starts or ends.  Each crossing is a rung at its own integer level
``1..c`` joining two sides that are adjacent at that level.

Three modes exist.  In the positive mode every rung joins sides running the
same way.  In the P2 mode the single negative rung is the last one, and the
two circles it joins end right after it.  In the P1 mode the negative rung
joins two sides of the same box and hands the box over to the next circle,
so the two circles it joins sit one after the other and are not nested.

Layouts are found by a sweep search over the faces of the diagram and are
accepted only after the front they describe has been read back into a
diagram equal to the input up to relabelling.
"""

from __future__ import annotations

import enum
import json
from dataclasses import asdict, dataclass

from .diagram import (
    DiagramError,
    OrientedDiagram,
    Positivity,
    PositivityClass,
    classify,
    seifert_decompose,
)
from .homflypt import canonical_key
from .legendrian import Event, FrontDiagram, FrontError, L, R, X, front_to_diagram


class Mode(enum.Enum):
    POSITIVE = "PositiveMode"
    P1 = "P1mode"
    P2 = "P2mode"


class MondrianError(DiagramError):
    """No layout satisfying the mode's conditions was found."""


@dataclass(frozen=True)
class Circle:
    """A Seifert circle drawn as a box.

    ``lo``/``hi`` bound its extent: the box starts after ``lo`` rungs and
    ends after ``hi - 1`` rungs.  ``slot`` is its position in the side order
    when it starts, ``ascending`` the direction (``+1`` or ``-1``) of its
    first side.  ``opens``/``closes`` are False where a P1 negative rung
    takes the place of a cusp.
    """

    lo: int
    hi: int
    slot: int
    ascending: int
    parent: int | None = None
    opens: bool = True
    closes: bool = True


@dataclass(frozen=True)
class Rung:
    """A crossing at ``level`` joining sides ``pos`` and ``pos + 1``.

    ``orientation`` is ``"y"`` when both strands run along the sweep the
    same way, ``"z"`` for a P1 negative rung whose strands run across it,
    and ``"clasp"`` for the P2 negative rung.
    """

    level: int
    pos: int
    upper: int
    lower: int
    sign: int
    orientation: str = "y"


@dataclass(frozen=True)
class MondrianDiagram:
    circles: tuple[Circle, ...]
    rungs: tuple[Rung, ...]
    mode: Mode

    def events(self) -> list[Event]:
        """The front: cusps at the ends of each box, crossings at rungs."""
        return _events(self)

    def to_json(self) -> dict:
        return {
            "mode": self.mode.value,
            "circles": [asdict(c) for c in self.circles],
            "rungs": [asdict(r) for r in self.rungs],
        }

    @classmethod
    def from_json(cls, data: dict) -> "MondrianDiagram":
        return cls(
            tuple(Circle(**c) for c in data["circles"]),
            tuple(Rung(**r) for r in data["rungs"]),
            Mode(data["mode"]),
        )

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


# ---------------------------------------------------------------------------
# Mondrian -> front


def _clasp_events(stack: list[tuple[int, int]], a: int, b: int) -> tuple[int, list[Event]]:
    """Events replacing the P2 negative rung and the ends of its circles.

    The four sides of the two circles must be consecutive.  Side by side
    boxes ``[T T U U]`` give ``X k, R k+1, R k``; nested boxes ``[O I I O]``
    give ``X k+1, R k, R k``.
    """
    where = [i for i, (c, _) in enumerate(stack) if c in (a, b)]
    if len(where) != 4 or where[-1] - where[0] != 3:
        raise MondrianError("the sides of the negatively joined circles are not consecutive")
    k = where[0]
    ids = [stack[i][0] for i in where]
    if ids[0] == ids[1] and ids[2] == ids[3]:
        return k, [X(k), R(k + 1), R(k)]
    if ids[0] == ids[3] and ids[1] == ids[2]:
        return k, [X(k + 1), R(k), R(k)]
    raise MondrianError("the negatively joined circles interleave")


def _events(m: MondrianDiagram) -> list[Event]:
    stack: list[tuple[int, int]] = []  # (circle, side 0 first / 1 second)
    dirs: list[int] = []
    out: list[Event] = []
    rungs = {r.level: r for r in m.rungs}
    if len(rungs) != len(m.rungs):
        raise MondrianError("two rungs share a level")
    n = len(m.rungs)
    open_: set[int] = set()

    def close_due(level: int) -> None:
        while True:
            due = [
                c for c in sorted(open_)
                if m.circles[c].hi == level + 1 and m.circles[c].closes
            ]
            if not due:
                return
            for c in due:
                pos = [i for i, (cc, _) in enumerate(stack) if cc == c]
                if len(pos) == 2 and pos[1] == pos[0] + 1:
                    k = pos[0]
                    out.append(R(k))
                    del stack[k:k + 2]
                    del dirs[k:k + 2]
                    open_.discard(c)
                    break
            else:
                raise MondrianError(f"circle {due[0]} cannot end: its sides are not adjacent")

    for level in range(n + 1):
        if level:
            r = rungs.get(level)
            if r is None:
                raise MondrianError(f"no rung at level {level}")
            if r.orientation == "clasp":
                _, evs = _clasp_events(stack, r.upper, r.lower)
                for ev in evs:
                    _apply(stack, dirs, ev)
                    out.append(ev)
                open_ -= {r.upper, r.lower}
            else:
                k = r.pos
                want = (r.upper, r.upper) if r.orientation == "z" else (r.upper, r.lower)
                if k + 1 >= len(stack) or (stack[k][0], stack[k + 1][0]) != want:
                    raise MondrianError(f"rung at level {level} does not join adjacent sides of its circles")
                out.append(X(k))
                if r.orientation == "z":
                    dirs[k], dirs[k + 1] = dirs[k + 1], dirs[k]
                    stack[k] = (r.lower, 0)
                    stack[k + 1] = (r.lower, 1)
                    open_.discard(r.upper)
                    open_.add(r.lower)
        close_due(level)
        for c, circ in enumerate(m.circles):
            if circ.lo == level and circ.opens:
                if circ.slot > len(stack):
                    raise MondrianError(f"circle {c} starts beyond the sides present")
                stack[circ.slot:circ.slot] = [(c, 0), (c, 1)]
                dirs[circ.slot:circ.slot] = [circ.ascending, -circ.ascending]
                out.append(L(circ.slot, circ.ascending))
                open_.add(c)
        close_due(level)
    if stack:
        raise MondrianError("circles left open after the last rung")
    return out


def _apply(stack, dirs, ev: Event) -> None:
    k = ev.pos
    if ev.kind == "X":
        stack[k], stack[k + 1] = stack[k + 1], stack[k]
        dirs[k], dirs[k + 1] = dirs[k + 1], dirs[k]
    elif ev.kind == "R":
        del stack[k:k + 2]
        del dirs[k:k + 2]


# ---------------------------------------------------------------------------
# Validation


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    witness: str = ""


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple[Check, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failed(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]

    def __str__(self) -> str:
        return "\n".join(
            f"{'pass' if c.ok else 'FAIL'}  {c.name}" + (f"  ({c.witness})" if c.witness else "")
            for c in self.checks
        )


def validate_mondrian(m: MondrianDiagram, d: OrientedDiagram | None = None) -> ValidationReport:
    """Check the layout conditions one by one, with a witness on failure."""
    checks = []

    bad = [i for i, c in enumerate(m.circles) if not c.lo < c.hi]
    checks.append(Check("each circle has one bottom and one top", not bad,
                        f"circle {bad[0]}" if bad else ""))

    levels = sorted(r.level for r in m.rungs)
    ok = levels == list(range(1, len(m.rungs) + 1))
    checks.append(Check("rung levels are 1..c, one per level", ok, "" if ok else f"levels {levels}"))

    interior = [
        i for i, r in enumerate(m.rungs)
        if not all(0 <= c < len(m.circles) for c in (r.upper, r.lower))
        or not all(m.circles[c].lo < r.level < m.circles[c].hi for c in (r.upper, r.lower))
    ]
    checks.append(Check("rungs sit inside both extents", not interior,
                        f"rung {interior[0]}" if interior else ""))

    front_ok, witness, signs = True, "", {}
    if not bad and ok and not interior:
        try:
            f = FrontDiagram(m.events())
            signs = f.crossing_signs()
        except (MondrianError, FrontError) as exc:
            front_ok, witness = False, str(exc)
    else:
        front_ok, witness = False, "skipped after structural failure"
    checks.append(Check("rungs join adjacent sides; boxes nest", front_ok, witness))

    by_level = sorted(range(len(m.rungs)), key=lambda i: m.rungs[i].level)
    wrong = [i for i in by_level if m.rungs[i].orientation == "y" and m.rungs[i].sign < 0]
    if front_ok:
        xs = sorted(signs)
        # crossing events in sweep order, clasp rungs contribute their own
        j = 0
        for i in by_level:
            r = m.rungs[i]
            if r.orientation == "clasp":
                j += 1
                continue
            if signs[xs[j]] != r.sign or (r.orientation == "y") != (signs[xs[j]] > 0):
                wrong.append(i)
            j += 1
    wrong = sorted(set(wrong))
    checks.append(Check("(1) positive rungs run the same way along y", not wrong,
                        f"rung {wrong[0]}" if wrong else ""))

    negs = [i for i, r in enumerate(m.rungs) if r.sign < 0]
    if m.mode is Mode.POSITIVE:
        checks.append(Check("no negative rung", not negs, f"rung {negs[0]}" if negs else ""))
    else:
        checks.append(Check("exactly one negative rung", len(negs) == 1, f"{len(negs)} negative rungs"))
    if m.mode is Mode.P2 and len(negs) == 1:
        top = max(r.level for r in m.rungs)
        ok3 = m.rungs[negs[0]].level == top and m.rungs[negs[0]].orientation == "clasp"
        checks.append(Check("(3) the negative rung is the highest", ok3, "" if ok3 else f"rung {negs[0]}"))
    if m.mode is Mode.P1 and len(negs) == 1:
        r = m.rungs[negs[0]]
        nested = _nested(m, r.upper, r.lower)
        checks.append(Check("(4) its circles are not nested", not nested, f"rung {negs[0]}" if nested else ""))
        checks.append(Check("(5) the negative rung runs along z", r.orientation == "z",
                            "" if r.orientation == "z" else f"rung {negs[0]}"))
    if d is not None:
        same = sorted(r.sign for r in m.rungs) == sorted(d.signs)
        checks.append(Check("rung signs match the diagram", same))
        checks.append(Check("one circle per Seifert circle", len(m.circles) == seifert_decompose(d).s))
    return ValidationReport(tuple(checks))


def _nested(m: MondrianDiagram, a: int, b: int) -> bool:
    def ancestors(c):
        out = set()
        while m.circles[c].parent is not None:
            c = m.circles[c].parent
            out.add(c)
        return out

    return a in ancestors(b) or b in ancestors(a)


# ---------------------------------------------------------------------------
# Layout search


@dataclass
class _Net:
    """Combinatorial data of the diagram that the sweep needs."""

    xs: tuple
    face_at: dict
    head: dict
    tail: dict
    circle_of: dict
    circle_edges: tuple
    circle_crossings: tuple
    neg: int | None
    pair: tuple[int, int] | None

    @classmethod
    def of(cls, d: OrientedDiagram, cls_: PositivityClass) -> "_Net":
        xs = d.crossings
        face_at = {}
        for fi, face in enumerate(d.faces):
            for i, k in face:
                face_at[(i, k)] = fi
        head, tail = {}, {}
        for i, x in enumerate(xs):
            oi, oo = (1, 3) if x[4] > 0 else (3, 1)
            head[x[0]] = (i, 0)
            head[x[oi]] = (i, oi)
            tail[x[2]] = (i, 2)
            tail[x[oo]] = (i, oo)
        seif = seifert_decompose(d)
        cross = []
        for k, cyc in enumerate(seif.circles):
            cross.append(frozenset(head[lab][0] for lab in cyc))
        return cls(xs, face_at, head, tail, seif.circle_of, seif.circles, tuple(cross),
                   cls_.negative, cls_.circles)

    def above(self, lab: int, direction: int) -> int:
        """Face just above an arc drawn running ``direction`` along y."""
        i, p = self.tail[lab]
        return self.face_at[(i, (p - 1) % 4 if direction > 0 else p)]

    def ahead(self, lab: int, direction: int) -> int:
        """The crossing a strand meets next while the sweep moves on."""
        return (self.head if direction > 0 else self.tail)[lab][0]


def _search(d: OrientedDiagram, mode: Mode, cls_: PositivityClass, limit: int):
    net = _Net.of(d, cls_)
    xs = net.xs
    ncirc = len(net.circle_edges)
    target = canonical_key(list(xs))
    neg = net.neg
    A = B = None
    if mode is not Mode.POSITIVE:
        A, B = net.pair
    failed: set = set()
    budget = [limit]

    def moves(strands, gaps, used, opened, closed):
        h = len(strands)
        # right cusps
        for k in range(h - 1):
            (l1, d1, c1), (l2, d2, c2) = strands[k], strands[k + 1]
            if c1 != c2 or l1 != l2 or d1 == d2:
                continue
            if not net.circle_crossings[c1] <= used:
                continue
            if mode is Mode.P2 and c1 in (A, B):
                continue
            if mode is Mode.P1 and c1 in (A, B) and neg not in used:
                continue
            if gaps[k] != gaps[k + 2]:
                continue
            yield ("R", k, c1), strands[:k] + strands[k + 2:], gaps[:k + 1] + gaps[k + 3:], used, opened, closed | {c1}
        # crossings
        for k in range(h - 1):
            (l1, d1, c1), (l2, d2, c2) = strands[k], strands[k + 1]
            i = net.ahead(l1, d1)
            if i in used or i != net.ahead(l2, d2):
                continue
            if mode is Mode.P2 and i == neg:
                continue
            x = xs[i]
            t = 0 if d2 > 0 else 2
            if x[(t + 1) % 4] != l1 or x[t] != l2:
                continue
            sign = 1 if d1 == d2 else -1
            if sign != x[4]:
                continue
            fa = net.face_at
            if gaps[k] != fa[(i, (t + 1) % 4)] or gaps[k + 1] != fa[(i, t)] or gaps[k + 2] != fa[(i, (t + 3) % 4)]:
                continue
            n1, n2 = x[(t + 2) % 4], x[(t + 3) % 4]
            ns = list(strands)
            ns[k] = (n1, d2, net.circle_of[n1])
            ns[k + 1] = (n2, d1, net.circle_of[n2])
            ng = list(gaps)
            ng[k + 1] = fa[(i, (t + 2) % 4)]
            if sign < 0:
                new = net.circle_of[n1]
                yield ("X", k, i, new), tuple(ns), tuple(ng), used | {i}, opened | {new}, closed | {c1}
            else:
                yield ("X", k, i, None), tuple(ns), tuple(ng), used | {i}, opened, closed
        # P2 clasp
        if mode is Mode.P2 and len(used) == len(xs) - 1 and A in opened and B in opened and not {A, B} & closed:
            where = [p for p, s in enumerate(strands) if s[2] in (A, B)]
            if len(where) == 4 and where[3] - where[0] == 3:
                k = where[0]
                ids = [strands[p][2] for p in where]
                if (ids[0] == ids[1] and ids[2] == ids[3]) or (ids[0] == ids[3] and ids[1] == ids[2]):
                    yield (("clasp", k, neg), strands[:k] + strands[k + 4:], gaps[:k + 1] + gaps[k + 5:],
                           used | {neg}, opened, closed | {A, B})
        # left cusps
        for c in range(ncirc):
            if c in opened:
                continue
            if mode is Mode.P1 and c in (A, B) and {A, B} & opened:
                # the negative rung opens the second of the two circles
                continue
            for lab in net.circle_edges[c]:
                for dr in (1, -1):
                    f_out = net.above(lab, dr)
                    f_in = net.above(lab, -dr)
                    for j in range(h + 1):
                        if gaps[j] != f_out:
                            continue
                        ns = strands[:j] + ((lab, dr, c), (lab, -dr, c)) + strands[j:]
                        ng = gaps[:j + 1] + (f_in, f_out) + gaps[j + 1:]
                        yield ("L", j, c, dr), ns, ng, used, opened | {c}, closed

    def dfs(strands, gaps, used, opened, closed, path):
        if not strands and len(closed) == ncirc and len(used) == len(xs):
            yield path
            return
        if not strands and path:
            return
        key = (strands, gaps, used, opened, closed)
        if key in failed:
            return
        budget[0] -= 1
        if budget[0] < 0:
            raise MondrianError("layout search budget exhausted")
        for mv, ns, ng, nu, no, nc in list(moves(strands, gaps, used, opened, closed)):
            yield from dfs(ns, ng, nu, no, nc, path + (mv,))
        failed.add(key)

    for f0 in range(len(d.faces)):
        for path in dfs((), (f0,), frozenset(), frozenset(), frozenset(), ()):
            m = _to_mondrian(path, net, mode, ncirc)
            try:
                front = FrontDiagram(m.events())
                back = front_to_diagram(front)
            except (MondrianError, FrontError, DiagramError):
                continue
            if back.c == len(xs) and canonical_key(list(back.crossings)) == target:
                return m
    return None


def _to_mondrian(path, net: _Net, mode: Mode, ncirc: int) -> MondrianDiagram:
    """Turn a sweep path into circles and rungs."""
    level = 0
    lo = [None] * ncirc
    hi = [None] * ncirc
    asc = [1] * ncirc
    opens = [True] * ncirc
    closes = [True] * ncirc
    parent: list[int | None] = [None] * ncirc
    rungs = []
    order: list[int] = []
    ident: list[tuple[int, int]] = []  # (circle, side)
    above_of: dict[int, list] = {}
    for mv in path:
        kind = mv[0]
        if kind == "L":
            _, j, c, dr = mv
            lo[c], asc[c] = level, dr
            above_of[c] = list(reversed(ident[:j]))
            inside = [cc for cc, _ in ident[:j]]
            below = [cc for cc, _ in ident[j:]]
            enclosing = [cc for cc in inside if cc in below]
            parent[c] = enclosing[-1] if enclosing else None
            ident[j:j] = [(c, 0), (c, 1)]
            order.append(c)
        elif kind == "R":
            _, k, c = mv
            hi[c] = level + 1
            del ident[k:k + 2]
        elif kind == "X":
            _, k, i, new = mv
            level += 1
            up, lowc = ident[k][0], ident[k + 1][0]
            if new is None:
                rungs.append(Rung(level, k, up, lowc, 1, "y"))
            else:
                rungs.append(Rung(level, k, up, new, -1, "z"))
                hi[up] = level + 1
                closes[up] = False
                lo[new] = level - 1
                opens[new] = False
                parent[new] = parent[up]
                ident[k] = (new, 0)
                ident[k + 1] = (new, 1)
                order.append(new)
        else:
            _, k, i = mv
            level += 1
            a, b = ident[k][0], ident[k + 2][0] if ident[k + 1][0] == ident[k][0] else ident[k + 1][0]
            rungs.append(Rung(level, k, a, b, -1, "clasp"))
            hi[a] = hi[b] = level + 1
            del ident[k:k + 4]
    # renumber circles in birth order
    ren = {c: n for n, c in enumerate(order)}
    circles = []
    for c in order:
        circles.append(Circle(lo[c], hi[c], 0, asc[c],
                              None if parent[c] is None else ren[parent[c]], opens[c], closes[c]))
    rungs = [Rung(r.level, r.pos, ren[r.upper], ren[r.lower], r.sign, r.orientation) for r in rungs]
    m = MondrianDiagram(tuple(circles), tuple(rungs), mode)
    return _fix_slots(m, path, ren, above_of)


def _fix_slots(m: MondrianDiagram, path, ren, above_of) -> MondrianDiagram:
    """Recompute start positions for the canonical event order.

    The sweep may start a box before another box ends in the same gap
    between rungs; the front puts all ends first.  A box starts right below
    the nearest side above it that is still present.
    """
    circles = list(m.circles)
    stack: list[tuple[int, int]] = []
    rungs = {r.level: r for r in m.rungs}
    open_: set[int] = set()

    def close_due(level):
        changed = True
        while changed:
            changed = False
            for c in sorted(open_):
                if circles[c].hi == level + 1 and circles[c].closes:
                    pos = [i for i, (cc, _) in enumerate(stack) if cc == c]
                    if len(pos) == 2 and pos[1] == pos[0] + 1:
                        del stack[pos[0]:pos[0] + 2]
                        open_.discard(c)
                        changed = True

    inv = {v: k for k, v in ren.items()}
    for level in range(len(m.rungs) + 1):
        if level:
            r = rungs[level]
            if r.orientation == "clasp":
                stack = [s for s in stack if s[0] not in (r.upper, r.lower)]
                open_ -= {r.upper, r.lower}
            elif r.orientation == "z":
                stack = [(r.lower, s[1]) if s[0] == r.upper else s for s in stack]
                open_.discard(r.upper)
                open_.add(r.lower)
        close_due(level)
        for c, circ in enumerate(circles):
            if circ.lo == level and circ.opens:
                slot = 0
                for cc, side in above_of[inv[c]]:
                    key = (ren[cc], side)
                    if key in stack:
                        slot = stack.index(key) + 1
                        break
                circles[c] = Circle(circ.lo, circ.hi, slot, circ.ascending, circ.parent, circ.opens, circ.closes)
                stack[slot:slot] = [(c, 0), (c, 1)]
                open_.add(c)
        close_due(level)
    return MondrianDiagram(tuple(circles), m.rungs, m.mode)


_MODE_OF = {
    Positivity.POSITIVE: Mode.POSITIVE,
    Positivity.P1: Mode.P1,
    Positivity.P2: Mode.P2,
}


def to_mondrian(
    d: OrientedDiagram,
    cls: PositivityClass | None = None,
    mode: Mode | None = None,
    limit: int = 200_000,
) -> MondrianDiagram:
    """Lay the diagram out as a Mondrian diagram in the mode of its class.

    Raises :class:`MondrianError` when no layout is found; the search is
    exhaustive up to ``limit`` sweep states.
    """
    if d.n_components != 1:
        raise MondrianError("layouts are built for knot diagrams only")
    cls = cls or classify(d)
    if cls.kind is Positivity.OTHER:
        raise MondrianError("diagram is neither positive nor almost positive")
    mode = mode or _MODE_OF[cls.kind]
    if (mode is Mode.POSITIVE) != (cls.kind is Positivity.POSITIVE):
        raise MondrianError(f"mode {mode.value} does not fit a {cls.kind.value} diagram")
    if mode is Mode.P2 and cls.kind is not Positivity.P2:
        raise MondrianError("P2 mode needs a positive crossing between the negatively joined circles")
    if d.c == 0:
        return MondrianDiagram((Circle(0, 1, 0, 1),), (), Mode.POSITIVE)
    m = _search(d, mode, cls, limit)
    if m is None:
        raise MondrianError(f"no {mode.value} layout exists for this diagram")
    return m
